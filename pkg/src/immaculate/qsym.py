"""QSym in the monomial basis: fundamental expansions, the quasi-shuffle
product and the dual immaculate functions."""

from functools import lru_cache

from . import nsym
from .compositions import Composition, refinements
from .kernel import LinComb, apply_linear, lsum


def M(*parts):
    return LinComb.monomial(Composition(parts))


def F_to_M(alpha):
    return LinComb({beta: 1 for beta in refinements(alpha)})


def F(*parts):
    return F_to_M(Composition(parts))


def _m_to_f_single(alpha):
    # Moebius inversion of the refinement order
    return LinComb({beta: (-1) ** (len(beta) - len(alpha)) for beta in refinements(alpha)})


def M_to_F(x):
    return apply_linear(_m_to_f_single, x)


def F_combination_to_M(x):
    return apply_linear(F_to_M, x)


@lru_cache(maxsize=None)
def m_quasi_shuffle(alpha, beta):
    """M_alpha * M_beta as a linear combination of M's."""
    alpha, beta = Composition(alpha), Composition(beta)
    if not alpha:
        return LinComb.monomial(beta)
    if not beta:
        return LinComb.monomial(alpha)
    a, b = alpha[0], beta[0]
    out = {}
    for lead, rest in (
        ((a,), m_quasi_shuffle(alpha[1:], beta)),
        ((b,), m_quasi_shuffle(alpha, beta[1:])),
        ((a + b,), m_quasi_shuffle(alpha[1:], beta[1:])),
    ):
        for key, c in rest.items():
            k = Composition(lead + key)
            out[k] = out.get(k, 0) + c
    return LinComb(out)


def qsym_mult(x, y):
    out = {}
    for a, ca in x.items():
        for b, cb in y.items():
            for k, c in m_quasi_shuffle(a, b).items():
                out[k] = out.get(k, 0) + ca * cb * c
    return LinComb(out)


def dual_immaculate_to_M(alpha, cache=None):
    """M-expansion of the dual immaculate function indexed by ``alpha``.

    The coefficient of M_beta is the coefficient of Imm_alpha in H_beta.
    """
    alpha = Composition(alpha)
    cache = nsym.TRANSITIONS if cache is None else cache
    n = alpha.size
    h_to_imm = cache.h_to_imm(n)
    return LinComb({beta: row[alpha] for beta, row in h_to_imm.items() if row[alpha]})


def dual_immaculate_combination_to_M(x, cache=None):
    return lsum(c * dual_immaculate_to_M(a, cache) for a, c in x.items())


def M_to_dual_immaculate(x, cache=None):
    """Coordinates of ``x`` in the dual immaculate basis.

    M_beta = sum_alpha [H_beta in Imm_alpha] DImm_alpha, the transpose of the
    Imm -> H transition.
    """
    cache = nsym.TRANSITIONS if cache is None else cache
    out = {}
    for beta, c in x.items():
        for alpha, a in cache.imm_to_h_columns(beta.size)[beta].items():
            out[alpha] = out.get(alpha, 0) + c * a
    return LinComb(out)
