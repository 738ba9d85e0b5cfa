"""Print the small worked expansions used as golden values in the tests."""

from immaculate import pieri
from immaculate.cli import format_terms
from immaculate.compositions import Composition as C


def show(label, value, tag="Imm"):
    print(f"{label:<28} {format_terms(tag, value)}")


def main():
    show("H_2 Imm[1,4]", pieri.left_pieri(2, C([1, 4])))
    show("F_2 DImm[2,1,2]", pieri.dual_pieri(2, C([2, 1, 2])), "DImm")
    for alpha in ([1, 3, 1, 2], [1, 4, 2], [2, 2, 1, 2], [3, 1, 1, 2], [3, 2, 2], [4, 1, 2],
                  [3, 1, 2], [2, 1]):
        show(f"F_2^perp Imm{alpha}", pieri.skew_fundamental(2, C(alpha)).terms)
    print(f"{'raw F_2^perp Imm[2,1]':<28} {dict(pieri.skew_pieri_raw(2, C([2, 1])))}")
    print("Z(2, [5,1,3,7]) restricted to [4,3,7]:")
    for beta in pieri.enumerate_Z_gamma(2, C([5, 1, 3, 7]), C([4, 3, 7])):
        print("   ", tuple(beta))
    print("coefficient:", pieri.coeff(2, C([5, 1, 3, 7]), C([4, 3, 7])))


if __name__ == "__main__":
    main()
