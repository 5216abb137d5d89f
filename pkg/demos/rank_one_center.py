"""The center of the coideal subalgebra for the split pair of type A1.

B is generated by B1 = y1 t1 + d x1 + s t1.  The script computes the
central elements d_0, d_w1, d_2w1, checks that each commutes with B1, and
then looks at how d_w1 * d_w1 sits over d_2w1 in the filtration.
"""

import sys

from qsp_center.coideal_center import (CoidealParams, build_B, central_basis,
                                       product_structure_check)
from qsp_center.lattice_core import Weight, lie_type
from qsp_center.qfield import parse_ratfunc
from qsp_center.symmetric_pairs import PairId, catalog

A1 = lie_type("A1")
AI1 = catalog(PairId("AI", 1))


def label(k):
    return {0: "d_0", 1: "d_w1"}.get(k, f"d_{k}w1")


def main(d_text="1", s_text="0"):
    params = CoidealParams(d={1: parse_ratfunc(d_text)}, s={1: parse_ratfunc(s_text)})
    b1 = build_B(AI1, params).B[1]
    print(f"B1 = {b1}\n")

    for c in central_basis(AI1, params, Weight(A1, (2,))):
        ok = c.element * b1 == b1 * c.element
        print(f"{label(c.nu.coords[0])}  (top weight {c.top_weight.coords[0]}w1, commutes: {ok})")
        print(f"    {c.element}")

    print()
    for eta in (1, 2):
        rep = product_structure_check(AI1, params, Weight(A1, (1,)), Weight(A1, (eta,)))
        print(f"d_w1 * {label(eta)} = {rep['a']} * {label(eta + 1)} + (filter degree "
              f"{rep['remainder_degree']} < {rep['degree']})")


if __name__ == "__main__":
    main(*sys.argv[1:3])
