"""Which simple modules carry a vector fixed by the coideal subalgebra?

For the split A1 pair the answer is V(k w1) with k even.  Try other
parameters with ``python demos/spherical_vectors.py q q^2`` (d, then s).
"""

import sys

from qsp_center.coideal_center import CoidealParams, module_realization, spherical_invariants
from qsp_center.lattice_core import Weight, lie_type
from qsp_center.qfield import parse_ratfunc
from qsp_center.symmetric_pairs import PairId, catalog, is_spherical_weight

A1 = lie_type("A1")
AI1 = catalog(PairId("AI", 1))


def main(d_text="1", s_text="0"):
    params = CoidealParams(d={1: parse_ratfunc(d_text)}, s={1: parse_ratfunc(s_text)})
    print(" k  dim V  invariants  spherical")
    for k in range(7):
        lam = Weight(A1, (k,))
        vecs = spherical_invariants(AI1, params, lam)
        dim = len(module_realization(lam).weights)
        print(f"{k:>2}  {dim:>5}  {len(vecs):>10}  {is_spherical_weight(AI1, lam)!s:>9}")
        for v in vecs:
            # coordinates are indexed by the weight basis of V(k w1), top weight first
            print("      " + ", ".join(f"v{i}: {c}" for i, c in sorted(v.items())))


if __name__ == "__main__":
    main(*sys.argv[1:3])
