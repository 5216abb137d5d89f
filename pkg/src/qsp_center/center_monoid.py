"""The weight monoid P_Theta indexing the center, and its free generators.

P_Theta is the set of dominant mu with L(mu) = 0 for the linear defect map
L(mu) = Theta(mu) - mu - w0(mu) + w0'(mu).  Generators are found by bounded
enumeration.  Coordinates that never appear in L split off as free factors,
which keeps the enumeration small even at rank 8.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .lattice_core import Weight, w0_action, w0_parabolic_action
from .symmetric_pairs import PairId, SatakeDiagram, admissible_pairs, catalog, theta_action

__all__ = ["DefectMap", "MonoidBasis", "CertificateError", "defect_map", "in_ptheta",
           "monoid_generators", "rank_ptheta", "rank_g_theta", "expected_generators",
           "verify_prop91", "verify_prop92"]


class CertificateError(RuntimeError):
    pass


@dataclass(frozen=True)
class DefectMap:
    matrix: tuple[tuple[int, ...], ...]  # rows indexed by output coordinate

    def apply(self, c) -> tuple[int, ...]:
        return tuple(sum(row[j] * c[j] for j in range(len(c))) for row in self.matrix)


@dataclass(frozen=True)
class MonoidBasis:
    generators: tuple[Weight, ...]
    bound: int
    checked: int  # elements of P_Theta verified to decompose uniquely


def defect_map(sd: SatakeDiagram) -> DefectMap:
    lt = sd.lie_type
    n = lt.rank
    cols = []
    for j in range(n):
        w = Weight(lt, tuple(int(k == j) for k in range(n)))
        v = theta_action(sd, w) - w - w0_action(w) + w0_parabolic_action(sd.black, w)
        cols.append(v.coords)
    return DefectMap(tuple(tuple(cols[j][i] for j in range(n)) for i in range(n)))


def in_ptheta(sd: SatakeDiagram, mu: Weight) -> bool:
    return mu.is_dominant() and not any(defect_map(sd).apply(mu.coords))


def _components(mat, n):
    """Group coordinates linked through a common nonzero row of L."""
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for row in mat:
        idx = [j for j in range(n) if row[j]]
        for j in idx[1:]:
            parent[find(j)] = find(idx[0])
    groups = {}
    for j in range(n):
        groups.setdefault(find(j), []).append(j)
    return sorted(groups.values())


def _kernel_points(mat, coords, bound):
    """Points of ker(L) restricted to ``coords``, entries in 0..bound."""
    rows = [[row[j] for j in coords] for row in mat if any(row[j] for j in coords)]
    k = len(coords)
    # rational RREF to parametrize by free variables
    red = [[Fraction(x) for x in r] for r in rows]
    pivots = []
    r = 0
    for c in range(k):
        pr = next((i for i in range(r, len(red)) if red[i][c]), None)
        if pr is None:
            continue
        red[r], red[pr] = red[pr], red[r]
        pv = red[r][c]
        red[r] = [x / pv for x in red[r]]
        for i in range(len(red)):
            if i != r and red[i][c]:
                f = red[i][c]
                red[i] = [x - f * y for x, y in zip(red[i], red[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(k) if c not in pivots]
    pts = []
    for vals in product(range(bound + 1), repeat=len(free)):
        v = [Fraction(0)] * k
        for c, x in zip(free, vals):
            v[c] = Fraction(x)
        ok = True
        for i, p in enumerate(pivots):
            x = -sum(red[i][c] * v[c] for c in free)
            if x.denominator != 1 or not 0 <= x <= bound:
                ok = False
                break
            v[p] = x
        if ok:
            pts.append(tuple(int(x) for x in v))
    return pts


def _minimal(points):
    nonzero = [p for p in points if any(p)]
    return sorted(p for p in nonzero
                  if not any(o != p and all(a <= b for a, b in zip(o, p)) for o in nonzero))


def _decompose(gens, pt):
    """Coefficients of pt over linearly independent gens, or None."""
    m, k = len(gens), len(pt)
    aug = [[Fraction(g[i]) for g in gens] + [Fraction(pt[i])] for i in range(k)]
    r = 0
    piv = []
    for c in range(m):
        pr = next((i for i in range(r, k) if aug[i][c]), None)
        if pr is None:
            raise CertificateError("generators are linearly dependent")
        aug[r], aug[pr] = aug[pr], aug[r]
        pv = aug[r][c]
        aug[r] = [x / pv for x in aug[r]]
        for i in range(k):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        piv.append(c)
        r += 1
    if any(aug[i][m] for i in range(r, k)):
        return None
    return [aug[i][m] for i in range(m)]


def monoid_generators(sd: SatakeDiagram, cmax: int = 3) -> MonoidBasis:
    lt = sd.lie_type
    n = lt.rank
    mat = defect_map(sd).matrix
    gens = []
    checked = 1
    for comp in _components(mat, n):
        small = _kernel_points(mat, comp, cmax)
        local = _minimal(small)
        if not local:
            continue
        big = _kernel_points(mat, comp, 2 * cmax)
        for pt in big:
            c = _decompose(local, pt)
            if c is None or any(x.denominator != 1 or x < 0 for x in c):
                raise CertificateError(f"{sd.name}: {pt} on coordinates {comp} "
                                       "is not an N-combination of the candidates")
        checked *= len(big)
        for g in local:
            full = [0] * n
            for j, x in zip(comp, g):
                full[j] = x
            gens.append(Weight(lt, tuple(full)))
    gens.sort(key=lambda w: w.coords)
    return MonoidBasis(tuple(gens), 2 * cmax, checked)


def rank_ptheta(sd: SatakeDiagram) -> int:
    return len(monoid_generators(sd).generators)


# -- closed-form answers, independent of the Satake catalog ------------------

_K2 = {"AI", "AII", "DII", "EI", "EIV"}


def _order_k(pair: PairId) -> int:
    if pair.label in _K2:
        return 2
    if pair.label == "DI-1":
        return 2 if pair.r % 2 else 1
    if pair.label == "DI-2":
        return 1 if pair.rank % 2 else 2
    if pair.label == "DI-3":
        return 2 if pair.rank % 2 else 1
    return 1


def _diagram_flip(family: str, n: int) -> dict[int, int]:
    """The nontrivial order-2 diagram automorphism (identity if there is none)."""
    if family == "A":
        return {i: n + 1 - i for i in range(1, n + 1)}
    if family == "D":
        return {**{i: i for i in range(1, n - 1)}, n - 1: n, n: n - 1}
    if family == "E" and n == 6:
        return {1: 6, 6: 1, 3: 5, 5: 3, 2: 2, 4: 4}
    return {i: i for i in range(1, n + 1)}


def _duality(family: str, n: int) -> dict[int, int]:
    """i -> j with -w0(omega_i) = omega_j, by type."""
    if family == "A" or (family == "D" and n % 2) or (family == "E" and n == 6):
        return _diagram_flip(family, n)
    return {i: i for i in range(1, n + 1)}


def rank_g_theta(pair: PairId) -> int:
    if pair.label == "DIAGONAL":
        return pair.rank
    fam = "E" if pair.label.startswith("E") else pair.label[0]
    n = pair.rank
    if _order_k(pair) == 1:
        return n
    nu = _diagram_flip(fam, n)
    return len({frozenset((i, nu[i])) for i in nu})


def expected_generators(pair: PairId) -> list[tuple[int, ...]]:
    """Generators of P_Theta read off the closed-form case list."""
    label, n = pair.label, pair.rank

    def unit(idx, size):
        return tuple(int(k in idx) for k in range(1, size + 1))

    def all_fundamental(size):
        return [unit({i}, size) for i in range(1, size + 1)]

    def selfdual(fam, size):
        dual = _duality(fam, size)
        return [unit({i, dual[i]}, size) for i in range(1, size + 1) if i <= dual[i]]

    def d_restricted(size):
        return [unit({i}, size) for i in range(1, size - 1)] + [unit({size - 1, size}, size)]

    if label == "DIAGONAL":
        dual = _duality(pair.inner, n)
        return sorted(unit({i, n + dual[i]}, 2 * n) for i in range(1, n + 1))
    fam = "E" if label.startswith("E") else label[0]
    if label in ("AI", "AII", "DI-3", "DIII-1", "EI", "EIV"):
        out = selfdual(fam, n)
    elif fam in "BC" or label in ("EV", "EVI", "EVII", "EVIII", "EIX", "FI", "FII", "G"):
        out = all_fundamental(n)
    elif label in ("AIII", "AIV", "EII", "EIII", "DIII-2"):
        out = all_fundamental(n)
    elif label in ("DI-1", "DII"):
        out = all_fundamental(n) if pair.r % 2 == 0 else d_restricted(n)
    elif label == "DI-2":
        out = all_fundamental(n) if n % 2 else d_restricted(n)
    else:
        raise ValueError(f"no closed form for {label}")
    return sorted(out)


def _report_entry(pair: PairId, which: str) -> dict:
    sd = catalog(pair)
    mb = monoid_generators(sd)
    gens = [list(g.coords) for g in mb.generators]
    label = f"DIAGONAL-{pair.inner}" if pair.label == "DIAGONAL" else pair.label
    entry = {"pair": label,
             "rank": pair.rank, "r": pair.r, "generators": gens,
             "rank_ptheta": len(gens), "rank_g_theta": rank_g_theta(pair)}
    if which == "prop91":
        entry["expected"] = [list(g) for g in expected_generators(pair)]
        entry["pass"] = gens == entry["expected"]
    else:
        entry["pass"] = entry["rank_ptheta"] == entry["rank_g_theta"]
    return entry


def _run(which: str, max_rank: int, jobs: int) -> list[dict]:
    if max_rank < 2:
        raise ValueError("max_rank must be at least 2")
    pairs = sorted(admissible_pairs(max_rank), key=_case_key)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            return list(ex.map(_report_entry, pairs, [which] * len(pairs), chunksize=8))
    return [_report_entry(p, which) for p in pairs]


def _case_key(p: PairId):
    return (p.label, p.inner or "", p.rank, p.r if p.r is not None else -1)


def verify_prop91(max_rank: int = 8, jobs: int = 1) -> list[dict]:
    """Compare computed generators with the closed-form case list."""
    return _run("prop91", max_rank, jobs)


def verify_prop92(max_rank: int = 8, jobs: int = 1) -> list[dict]:
    """Compare rank(P_Theta) with the rank of the fixed subalgebra."""
    return _run("prop92", max_rank, jobs)
