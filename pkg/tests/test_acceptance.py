"""Acceptance suite. Each criterion prints one PASS/FAIL line.

Run standalone with ``python3 -m tests.test_acceptance`` or through pytest.
All comparisons are exact (tolerance zero).
"""

import io
import time

import pytest

from immaculate import cli, nsym, pieri, qsym
from immaculate.compositions import (
    Composition,
    IntVector,
    compositions_of,
    partitions_of,
    sgn,
    tail,
)
from immaculate.expr import ParseError, parse
from immaculate.identities import IDENTITIES, parameter_grid
from immaculate.kernel import LinComb

from .test_cli import GOLDEN
from .test_expr import MALFORMED
from .test_pieri import EQ_DUAL, SKEW_GOLDEN

C, V = Composition, IntVector


def L(d):
    return LinComb({C(k): c for k, c in d.items()})


def _timed(checks):
    """Run named zero-argument checks; each must be true and take under a second."""
    failures = []
    for name, check in checks:
        t = time.perf_counter()
        ok = check()
        dt = time.perf_counter() - t
        if not ok or dt >= 1.0:
            failures.append(f"{name} ({'wrong' if not ok else f'{dt:.2f}s'})")
    return failures


def criterion_1():
    skew = {a: v for a, v in SKEW_GOLDEN.items() if sum(a) == 7}
    checks = [
        ("dual_pieri(2,[2,1,2])", lambda: pieri.dual_pieri(2, C([2, 1, 2])) == L(EQ_DUAL)),
        ("left_pieri(2,[1,4])", lambda: pieri.left_pieri(2, C([1, 4])) == L(
            {(2, 1, 4): 1, (3, 2, 2): -1, (3, 3, 1): -1, (4, 2, 1): -1, (4, 3): -1,
             (5, 2): -1})),
    ]
    for a, v in skew.items():
        checks.append((f"skew {list(a)}",
                       lambda a=a, v=v: pieri.skew_fundamental(2, C(a)).terms == L(v)))
    zeros = [(1, 2, 1), (2, 1, 1), (1, 3), (2, 2), (3, 1)]
    checks += [
        ("[3,1,2] expansion", lambda: pieri.skew_fundamental(2, C([3, 1, 2])).terms
         == L({(1, 1, 2): 1})),
        ("[3,1,2] zero coefficients",
         lambda: all(pieri.coeff(2, C([3, 1, 2]), C(g)) == 0 for g in zeros)),
        ("[2,1] raw", lambda: pieri.skew_pieri_raw(2, C([2, 1]))
         == LinComb({V((0, 1)): 1, V((1, 0)): 1})),
        ("[2,1] theorem", lambda: pieri.skew_fundamental(2, C([2, 1])).terms == L({(1,): 1})),
        ("Z chain", lambda: [sgn(b) for b in sorted(
            pieri.enumerate_Z_gamma(2, C([5, 1, 3, 7]), C([4, 3, 7])), reverse=True)]
         == [1, -1, 1]
         and sorted(pieri.enumerate_Z_gamma(2, C([5, 1, 3, 7]), C([4, 3, 7])))
         == sorted([V((1, 1, 0, 0)), V((1, -2, 3, 0)), V((1, -2, -4, 7))])
         and pieri.coeff(2, C([5, 1, 3, 7]), C([4, 3, 7])) == 1),
    ]
    failures = _timed(checks)
    return not failures, f"{len(checks)} golden identities" + (f"; failed {failures}" if failures else "")


def _sweep(max_n=7):
    pairs = mismatches = violations = 0
    for n in range(1, max_n + 1):
        for alpha in compositions_of(n):
            for s in range(1, n + 1):
                pairs += 1
                exps = [pieri.skew_fundamental(s, alpha, m) for m in pieri.METHODS]
                if not exps[0].terms == exps[1].terms == exps[2].terms:
                    mismatches += 1
                violations += sum(len(e.violations()) for e in exps)
    return pairs, mismatches, violations


_SWEEP = {}


def sweep():
    if not _SWEEP:
        t = time.perf_counter()
        _SWEEP["result"] = _sweep()
        _SWEEP["seconds"] = time.perf_counter() - t
    return _SWEEP["result"], _SWEEP["seconds"]


def criterion_2():
    (pairs, mismatches, _), dt = sweep()
    return mismatches == 0, f"{pairs} (alpha, s) pairs, {mismatches} mismatches, {dt:.1f}s"


def criterion_3():
    (pairs, _, violations), _ = sweep()
    return violations == 0, f"{violations} coefficient or length violations over {pairs} pairs"


def criterion_4():
    bad = []
    count = 0
    for n in range(1, 9):
        for lam in partitions_of(n):
            for s in range(1, 9):
                count += 1
                terms = pieri.skew_fundamental(s, lam).terms
                zs = pieri.enumerate_Z(s, lam)
                if any(c < 0 for c in terms.values()):
                    bad.append((lam, s, "negative"))
                if lam[0] < s and (terms or zs):
                    bad.append((lam, s, "case i"))
                if lam[0] == s and (terms != LinComb.monomial(tail(lam))
                                    or zs != [V((s,) + (0,) * (len(lam) - 1))]):
                    bad.append((lam, s, "case ii"))
                if lam[0] > s and any(sgn(b) != 1 for b in zs):
                    bad.append((lam, s, "case iii"))
                if pieri.partition_skew(s, lam).terms != terms:
                    bad.append((lam, s, "partition_skew"))
    return not bad, f"{count} (lambda, s) cases, {len(bad)} failures {bad[:3]}"


def criterion_5():
    checked = bad = 0
    for name, f in IDENTITIES.items():
        for params in parameter_grid(name, bound=4):
            for n in range(6):
                for alpha in compositions_of(n):
                    lhs, rhs = f(*params, LinComb.monomial(alpha))
                    checked += 1
                    bad += lhs != rhs
    return bad == 0, f"{len(IDENTITIES)} identities, {checked} instances, {bad} failures"


def criterion_6():
    bad = []
    for n in range(7):
        order = compositions_of(n)
        for a in order:
            imm = nsym.immaculate_to_H(a)
            for b in order:
                if nsym.pairing(imm, qsym.dual_immaculate_to_M(b)) != int(a == b):
                    bad.append(("pairing", a, b))
    for n in range(8):
        m = nsym.TRANSITIONS.matrix(n)
        if any(m[i][i] != 1 for i in range(len(m))):
            bad.append(("diagonal", n))
        if not all(isinstance(v, int) for row in m for v in row):
            bad.append(("integrality", n))
        for a in compositions_of(n):
            e = LinComb.monomial(a)
            if nsym.H_to_immaculate(nsym.immaculate_to_H(a)) != e:
                bad.append(("Imm->H->Imm", a))
            if nsym.imm_combination_to_H(nsym.H_to_immaculate(e)) != e:
                bad.append(("H->Imm->H", a))
            if qsym.M_to_F(qsym.F_to_M(a)) != e or qsym.F_combination_to_M(qsym.M_to_F(e)) != e:
                bad.append(("M<->F", a))
    return not bad, f"pairing through degree 6, round trips through degree 7, failures {bad[:3]}"


def criterion_7():
    checked = bad = 0
    for r in range(1, 4):
        for n in range(1, 6):
            for alpha in compositions_of(n):
                for s in range(n + 1):
                    for beta in compositions_of(n - s):
                        lhs, rhs = pieri.transfer_check(r, s, alpha, beta)
                        checked += 1
                        bad += lhs != rhs
    return bad == 0, f"{checked} transfer instances, {bad} failures"


def criterion_8():
    bad = []
    for argv, expected in GOLDEN:
        out, err = io.StringIO(), io.StringIO()
        code = cli.main(list(argv), out, err)
        if code != 0 or out.getvalue() != expected:
            bad.append(argv)
    for text, column in MALFORMED:
        try:
            parse(text)
            bad.append(text)
        except ParseError as e:
            if e.column != column:
                bad.append(text)
    return not bad, f"{len(GOLDEN)} goldens, {len(MALFORMED)} malformed inputs, failures {bad}"


CRITERIA = [
    (1, "golden identities", criterion_1),
    (2, "triple-oracle equivalence n <= 7", criterion_2),
    (3, "multiplicity-free, length window", criterion_3),
    (4, "partition positivity n, s <= 8", criterion_4),
    (5, "operator identities |alpha| <= 5", criterion_5),
    (6, "duality and transitions", criterion_6),
    (7, "transfer identity", criterion_7),
    (8, "CLI goldens and error columns", criterion_8),
]


def report(number, label, ok, detail):
    return f"criterion {number} [{'PASS' if ok else 'FAIL'}] {label}: {detail}"


@pytest.mark.parametrize("number,label,check", CRITERIA, ids=[f"c{n}" for n, _, _ in CRITERIA])
def test_criterion(number, label, check, capsys):
    ok, detail = check()
    with capsys.disabled():
        print("\n" + report(number, label, ok, detail))
    assert ok, detail


if __name__ == "__main__":
    results = [(n, label, *check()) for n, label, check in CRITERIA]
    for r in results:
        print(report(*r))
    raise SystemExit(0 if all(r[2] for r in results) else 1)
