"""Command-line calculator over NSym, QSym and their immaculate bases.

Subcommands::

    immaculate eval EXPR [--basis TAG] [--json] [--max-degree N] [--method M]
    immaculate pair NSYM_EXPR QSYM_EXPR
    immaculate zset S ALPHA [--gamma GAMMA]
    immaculate raw R ALPHA

Exit codes: 0 success, 1 parse error, 2 type/algebra error, 3 resource cap.
"""

import argparse
import json
import sys

from . import nsym, pieri, qsym
from .compositions import Composition, IntVector, comp, sgn
from .config import CompositionError, DegreeCapError
from .expr import Add, ApplyOp, BasisAtom, IntLiteral, Mul, Neg, ParseError, Sub, parse
from .kernel import ALGEBRA_OF_BASIS, BasisElement, LinComb, terms_to_list

CANONICAL_BASIS = {"NSym": "H", "QSym": "M", "Sym": "h"}
EXIT_PARSE, EXIT_TYPE, EXIT_CAP = 1, 2, 3


class AlgebraError(TypeError):
    pass


class Evaluator:
    """Evaluates parsed expressions to ints or canonical-basis BasisElements."""

    def __init__(self, method="theorem", cache=None):
        if method not in pieri.METHODS:
            raise ValueError(f"unknown method {method!r}")
        self.method = method
        self.cache = nsym.TRANSITIONS if cache is None else cache

    def __call__(self, node):
        return self.visit(node)

    def visit(self, node):
        if isinstance(node, IntLiteral):
            return node.value
        if isinstance(node, BasisAtom):
            return self.atom(node.tag, Composition(node.parts))
        if isinstance(node, Neg):
            return self.scale(-1, self.visit(node.operand))
        if isinstance(node, Add):
            return self.add(self.visit(node.left), self.visit(node.right))
        if isinstance(node, Sub):
            return self.add(self.visit(node.left), self.scale(-1, self.visit(node.right)))
        if isinstance(node, Mul):
            return self.mul(self.visit(node.left), self.visit(node.right))
        if isinstance(node, ApplyOp):
            return self.apply(node)
        raise TypeError(f"unknown node {node!r}")

    def atom(self, tag, alpha):
        if tag == "H":
            return BasisElement("H", LinComb.monomial(alpha))
        if tag == "Imm":
            return BasisElement("H", nsym.immaculate_to_H(alpha))
        if tag == "M":
            return BasisElement("M", LinComb.monomial(alpha))
        if tag == "F":
            return BasisElement("M", qsym.F_to_M(alpha))
        return BasisElement("M", qsym.dual_immaculate_to_M(alpha, self.cache))

    @staticmethod
    def scale(c, x):
        if isinstance(x, int):
            return c * x
        return BasisElement(x.basis, c * x.value)

    @staticmethod
    def unit(algebra, c):
        return BasisElement(CANONICAL_BASIS[algebra], LinComb({Composition(): c}))

    def add(self, x, y):
        if isinstance(x, int) and isinstance(y, int):
            return x + y
        if isinstance(x, int):
            x = self.unit(y.algebra, x)
        if isinstance(y, int):
            y = self.unit(x.algebra, y)
        if x.algebra != y.algebra:
            raise AlgebraError(f"cannot add {x.algebra} and {y.algebra} elements")
        return BasisElement(x.basis, x.value + y.value)

    def mul(self, x, y):
        if isinstance(x, int):
            return self.scale(x, y)
        if isinstance(y, int):
            return self.scale(y, x)
        if x.algebra != y.algebra:
            raise AlgebraError(f"cannot multiply {x.algebra} by {y.algebra}")
        if x.algebra == "NSym":
            return BasisElement("H", nsym.h_mult(x.value, y.value))
        if x.algebra == "QSym":
            return BasisElement("M", qsym.qsym_mult(x.value, y.value))
        # Sym in the h basis: commutative concatenation
        out = {}
        for a, ca in x.value.items():
            for b, cb in y.value.items():
                k = Composition(sorted(a + b, reverse=True))
                out[k] = out.get(k, 0) + ca * cb
        return BasisElement("h", LinComb(out))

    def expect(self, x, algebra, where):
        if isinstance(x, int):
            return self.unit(algebra, x)
        if x.algebra != algebra:
            raise AlgebraError(f"{where} expects an {algebra} element, got {x.algebra}")
        return x

    def apply(self, node):
        name, args = node.name, node.args
        if name == "Fperp":
            s = args[0].value
            x = self.expect(self.visit(args[1]), "NSym", "Fperp")
            if s == 0:
                return x
            coords = nsym.H_to_immaculate(x.value, self.cache)
            out = pieri.skew_fundamental_combination(s, coords, self.method)
            return BasisElement("H", nsym.imm_combination_to_H(out))
        if name == "B":
            x = self.expect(self.visit(args[1]), "NSym", "B")
            return BasisElement("H", nsym.bernstein_apply(args[0].value, x.value))
        if name == "chi":
            x = self.expect(self.visit(args[0]), "NSym", "chi")
            return BasisElement("h", nsym.chi(x.value))
        if name == "Mperp":
            g = self.expect(self.visit(args[0]), "QSym", "Mperp")
            x = self.expect(self.visit(args[1]), "NSym", "Mperp")
            return BasisElement("H", nsym.perp_generic(g.value, x.value))
        raise AlgebraError(f"unknown operator {name}")

    def to_basis(self, x, basis=None):
        if isinstance(x, int):
            return x
        if basis is None:
            return x
        if basis not in ALGEBRA_OF_BASIS or ALGEBRA_OF_BASIS[basis] != x.algebra:
            raise AlgebraError(f"basis {basis!r} does not belong to {x.algebra}")
        if basis == x.basis:
            return x
        if basis == "Imm":
            return BasisElement("Imm", nsym.H_to_immaculate(x.value, self.cache))
        if basis == "F":
            return BasisElement("F", qsym.M_to_F(x.value))
        if basis == "DImm":
            return BasisElement("DImm", qsym.M_to_dual_immaculate(x.value, self.cache))
        raise AlgebraError(f"cannot convert to basis {basis!r}")


def evaluate(text, basis=None, method="theorem", cache=None):
    ev = Evaluator(method, cache)
    return ev.to_basis(ev(parse(text)), basis)


def _term_text(tag, key, c):
    body = f"{tag}[{','.join(str(p) for p in key)}]"
    return body if c == 1 else f"{c}*{body}"


def format_terms(tag, value):
    if not value:
        return "0"
    pieces = []
    for key, c in value.items():
        if not pieces:
            pieces.append(_term_text(tag, key, 1) if c == 1 else
                          "-" + _term_text(tag, key, -c) if c < 0 else _term_text(tag, key, c))
        elif c < 0:
            pieces.append(" - " + _term_text(tag, key, -c))
        else:
            pieces.append(" + " + _term_text(tag, key, c))
    return "".join(pieces)


def format_element(x, mode="text"):
    if isinstance(x, int):
        return json.dumps({"scalar": str(x)}) if mode == "json" else str(x)
    if mode == "json":
        return x.to_json()
    return format_terms(x.basis, x.value)


def _composition_arg(text):
    try:
        data = json.loads(text)
        if not isinstance(data, list):
            raise ValueError
        return Composition(data)
    except (ValueError, CompositionError) as e:
        raise ParseError(f"expected a JSON array of positive integers: {e}", 1) from None


def cmd_eval(args, out):
    x = evaluate(args.expr, args.basis, args.method)
    print(format_element(x, "json" if args.json else "text"), file=out)


def cmd_pair(args, out):
    ev = Evaluator(args.method)
    x = ev.expect(ev(parse(args.nsym)), "NSym", "pair")
    y = ev.expect(ev(parse(args.qsym)), "QSym", "pair")
    value = nsym.pairing(x.value, y.value)
    print(json.dumps({"pairing": str(value)}) if args.json else value, file=out)


def cmd_zset(args, out):
    alpha = _composition_arg(args.alpha)
    if args.gamma is not None:
        gamma = _composition_arg(args.gamma)
        vectors = pieri.enumerate_Z_gamma(args.s, alpha, gamma)
    else:
        gamma = None
        vectors = pieri.enumerate_Z(args.s, alpha)
    rows = [(b, sgn(b), comp(a - x for a, x in zip(alpha, b))) for b in vectors]
    if args.json:
        doc = {
            "op": "enumerate_Z" if gamma is None else "enumerate_Z_gamma",
            "s": args.s,
            "alpha": list(alpha),
            "vectors": [{"beta": list(b), "sgn": e, "gamma": list(g)} for b, e, g in rows],
        }
        if gamma is not None:
            doc["gamma"] = list(gamma)
            doc["coeff"] = pieri.coeff(args.s, alpha, gamma)
        print(json.dumps(doc), file=out)
        return
    for b, e, g in rows:
        print(f"{'+' if e > 0 else '-'} ({','.join(map(str, b))}) -> [{','.join(map(str, g))}]",
              file=out)
    if gamma is not None:
        print(f"coefficient: {pieri.coeff(args.s, alpha, gamma)}", file=out)


def cmd_raw(args, out):
    alpha = _composition_arg(args.alpha)
    value = pieri.skew_pieri_raw(args.r, alpha)
    if args.json:
        doc = {"op": "skew_pieri_raw", "r": args.r, "alpha": list(alpha), "formal": True,
               "terms": terms_to_list(value, int)}
        print(json.dumps(doc), file=out)
    else:
        print(format_terms("Imm", value), file=out)


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON instead of text")
    common.add_argument("--max-degree", type=int, default=8,
                        help="largest degree for transition matrices (default 8)")
    common.add_argument("--method", choices=pieri.METHODS, default="theorem",
                        help="route used for F_s^perp on immaculate functions")
    p = argparse.ArgumentParser(prog="immaculate", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)
    e = sub.add_parser("eval", parents=[common], help="evaluate an expression")
    e.add_argument("expr")
    e.add_argument("--basis", choices=sorted(ALGEBRA_OF_BASIS), default=None)
    e.set_defaults(func=cmd_eval)
    pr = sub.add_parser("pair", parents=[common], help="pair an NSym and a QSym expression")
    pr.add_argument("nsym")
    pr.add_argument("qsym")
    pr.set_defaults(func=cmd_pair)
    z = sub.add_parser("zset", parents=[common], help="list the signed vectors Z(s, alpha)")
    z.add_argument("s", type=int)
    z.add_argument("alpha")
    z.add_argument("--gamma", default=None)
    z.set_defaults(func=cmd_zset)
    r = sub.add_parser("raw", parents=[common], help="formal skew expansion, unstraightened")
    r.add_argument("r", type=int)
    r.add_argument("alpha")
    r.set_defaults(func=cmd_raw)
    return p


def main(argv=None, out=None, err=None):
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    args = build_parser().parse_args(argv)
    previous = nsym.TRANSITIONS.max_degree
    nsym.TRANSITIONS.max_degree = args.max_degree
    try:
        args.func(args, out)
    except ParseError as e:
        print(f"parse error: {e}", file=err)
        return EXIT_PARSE
    except CompositionError as e:
        print(f"error: {e}", file=err)
        return EXIT_TYPE
    except AlgebraError as e:
        print(f"type error: {e}", file=err)
        return EXIT_TYPE
    except DegreeCapError as e:
        print(f"resource error: {e}", file=err)
        return EXIT_CAP
    finally:
        nsym.TRANSITIONS.max_degree = previous
    return 0


if __name__ == "__main__":
    sys.exit(main())
