"""Walk through a few Satake diagrams and print the generators of P_Theta.

P_Theta is the monoid of dominant weights indexing a basis of the center.
Its rank is compared with the rank of the fixed-point subalgebra g^theta.

    python demos/monoid_tour.py
"""

from qsp_center.center_monoid import monoid_generators, rank_g_theta
from qsp_center.symmetric_pairs import PairId, catalog, pi_star

PAIRS = [
    PairId("AI", 3),
    PairId("AII", 5),
    PairId("CI", 3),
    PairId("DI-2", 6, 5),
    PairId("EIV", 6),
    PairId("DIAGONAL", 2, None, "A"),
]


def fmt(coords):
    terms = [f"{c}w{i}" if c != 1 else f"w{i}" for i, c in enumerate(coords, 1) if c]
    return " + ".join(terms) or "0"


def main():
    for pair in PAIRS:
        sd = catalog(pair)
        gens = monoid_generators(sd).generators
        print(f"{sd.name}: black nodes {sorted(sd.black) or '-'}, restricted simple roots {pi_star(sd)}")
        for g in gens:
            print(f"    {fmt(g.coords)}")
        print(f"    rank {len(gens)}, rank of g^theta {rank_g_theta(pair)}")
        # the split types pick up every fundamental weight
        if len(gens) == sd.lie_type.rank:
            print("    (all fundamental weights)")


if __name__ == "__main__":
    main()
