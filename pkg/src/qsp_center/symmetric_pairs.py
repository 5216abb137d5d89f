"""Satake diagrams of irreducible symmetric pairs and the involution Theta.

The catalog stores, per Araki label, the black nodes and the arrows between
white nodes.  The full diagram automorphism ``d`` is completed on the black
nodes by the opposition involution of the black subdiagram, and the lattice
involution is ``Theta = -w0' o d``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from itertools import combinations, product
from fractions import Fraction
from functools import lru_cache
from pathlib import Path

import sympy

from .lattice_core import (LieType, RootElt, Weight, cartan_data, inner_product,
                           simple_root, to_root, w0_parabolic_action)

__all__ = ["CatalogError", "PairId", "SatakeDiagram", "RestrictedWeight", "catalog",
           "admissible_pairs", "parse_pair", "theta_action", "theta_matrix", "p_map",
           "pi_star", "restricted_root", "restricted_height", "leq_r",
           "is_spherical_weight", "fixed_lattice", "load_satake", "make_satake"]


class CatalogError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class PairId:
    label: str
    rank: int
    r: int | None = None
    inner: str | None = None  # simple family for DIAGONAL, e.g. "A"

    def __str__(self):
        if self.label == "DIAGONAL":
            return f"DIAGONAL-{self.inner}{self.rank}"
        tail = f",r={self.r}" if self.r is not None else ""
        return f"{self.label}(n={self.rank}{tail})"


@dataclass(frozen=True)
class SatakeDiagram:
    lie_type: LieType
    black: frozenset[int]
    d_perm: tuple[int, ...]  # d_perm[i-1] = d(i), 1-based
    name: str = field(default="", compare=False)

    def __post_init__(self):
        n = self.lie_type.rank
        d = self.d_perm
        if sorted(d) != list(range(1, n + 1)):
            raise CatalogError("d is not a permutation of the nodes")
        if any(d[d[i] - 1] != i + 1 for i in range(n)):
            raise CatalogError("d is not an involution")
        a = cartan_data(self.lie_type).cartan_matrix
        if any(a[d[i] - 1][d[j] - 1] != a[i][j] for i in range(n) for j in range(n)):
            raise CatalogError("d does not preserve the Cartan matrix")
        if not self.black <= set(range(1, n + 1)):
            raise CatalogError("black nodes out of range")
        if {d[i - 1] for i in self.black} != set(self.black):
            raise CatalogError("d does not preserve the black nodes")

    @property
    def white(self) -> list[int]:
        return [i for i in range(1, self.lie_type.rank + 1) if i not in self.black]


@dataclass(frozen=True)
class RestrictedWeight:
    value: RootElt


# -- Satake data -----------------------------------------------------------

def _opposition(lt: LieType, nodes: frozenset[int]) -> dict[int, int]:
    """-w0' on the simple roots of the subdiagram ``nodes``."""
    out = {}
    for i in nodes:
        img = -w0_parabolic_action(nodes, simple_root(lt, i))
        j = next(k for k in nodes if simple_root(lt, k) == img)
        out[i] = j
    return out


def make_satake(lt: LieType, black, arrows=(), name: str = "") -> SatakeDiagram:
    """Build a diagram from black nodes and arrow pairs between white nodes."""
    black = frozenset(black)
    d = {i: i for i in range(1, lt.rank + 1)}
    for i, j in arrows:
        if i in black or j in black:
            raise CatalogError("arrows join white nodes only")
        d[i], d[j] = j, i
    d.update(_opposition(lt, black))
    return SatakeDiagram(lt, black, tuple(d[i] for i in range(1, lt.rank + 1)), name)


def _rng(a, b):
    return set(range(a, b + 1))


_E_DATA = {
    # label: (rank, black, arrows)
    "EI": (6, set(), []),
    "EII": (6, set(), [(1, 6), (3, 5)]),
    "EIII": (6, {3, 4, 5}, [(1, 6)]),
    "EIV": (6, {2, 3, 4, 5}, []),
    "EV": (7, set(), []),
    "EVI": (7, {2, 5, 7}, []),
    "EVII": (7, {2, 3, 4, 5}, []),
    "EVIII": (8, set(), []),
    "EIX": (8, {2, 3, 4, 5}, []),
    "FI": (4, set(), []),
    "FII": (4, {1, 2, 3}, []),
    "G": (2, set(), []),
}

# label -> (family, min rank, r range as function of n or None)
_CLASSICAL = {
    "AI": ("A", 1), "AII": ("A", 3), "AIII": ("A", 3), "AIV": ("A", 2),
    "BI": ("B", 2), "BII": ("B", 2), "CI": ("C", 2), "CII": ("C", 2),
    "DI-1": ("D", 4), "DI-2": ("D", 4), "DI-3": ("D", 4), "DII": ("D", 4),
    "DIII-1": ("D", 4), "DIII-2": ("D", 5),
}

# fixed r values for labels where r is determined by n
_FIXED_R = {"AIV": lambda n: 1, "BII": lambda n: 1, "DII": lambda n: 1,
            "DI-2": lambda n: n - 1, "DI-3": lambda n: n}

LABELS = list(_CLASSICAL) + list(_E_DATA) + ["DIAGONAL"]


def r_range(label: str, n: int) -> list[int] | None:
    """Admissible r values, or None when the label carries no parameter."""
    if label == "AIII":
        return list(range(2, (n + 1) // 2 + 1))
    if label == "BI":
        return list(range(2, n + 1))
    if label == "CII":
        return list(range(1, n // 2 + 1))
    if label == "DI-1":
        return list(range(1, n - 1))
    if label in _FIXED_R:
        return [_FIXED_R[label](n)]
    return None


def _validate(pair: PairId) -> PairId:
    label, n = pair.label, pair.rank
    if label == "DIAGONAL":
        if pair.inner is None:
            raise CatalogError("DIAGONAL needs an inner simple type")
        try:
            LieType(pair.inner, n)
        except ValueError as exc:
            raise CatalogError(f"DIAGONAL inner type: {exc}") from None
        return pair
    if label in _E_DATA:
        rk = _E_DATA[label][0]
        if n != rk:
            raise CatalogError(f"{label} has rank {rk}, got n={n}")
        if pair.r is not None:
            raise CatalogError(f"{label} takes no r parameter")
        return pair
    if label not in _CLASSICAL:
        raise CatalogError(f"unknown Araki label {label!r}")
    fam, nmin = _CLASSICAL[label]
    if n < nmin:
        raise CatalogError(f"{label} needs n >= {nmin}, got n={n}")
    if label == "AII" and n % 2 == 0:
        raise CatalogError("AII needs odd n")
    if label == "DIII-1" and n % 2:
        raise CatalogError("DIII-1 needs even n")
    if label == "DIII-2" and n % 2 == 0:
        raise CatalogError("DIII-2 needs odd n")
    rr = r_range(label, n)
    if rr is None:
        if pair.r is not None:
            raise CatalogError(f"{label} takes no r parameter")
        return pair
    if pair.r is None:
        if len(rr) == 1:
            return PairId(label, n, rr[0])
        raise CatalogError(f"{label} needs r in {rr[0]}..{rr[-1]}")
    if pair.r not in rr:
        if not rr:
            raise CatalogError(f"{label} admits no r for n={n}")
        raise CatalogError(f"{label} with n={n} needs r in {rr[0]}..{rr[-1]}, got r={pair.r}")
    return pair


@lru_cache(maxsize=None)
def catalog(pair: PairId) -> SatakeDiagram:
    pair = _validate(pair)
    label, n, r = pair.label, pair.rank, pair.r
    name = str(pair)
    if label == "DIAGONAL":
        inner = LieType(pair.inner, n)
        lt = LieType.diagonal(inner)
        return make_satake(lt, (), [(i, i + n) for i in range(1, n + 1)], name)
    if label in _E_DATA:
        rk, black, arrows = _E_DATA[label]
        fam = "E" if label.startswith("E") else label[0]
        return make_satake(LieType(fam, rk), black, arrows, name)
    fam = _CLASSICAL[label][0]
    lt = LieType(fam, n)
    black, arrows = set(), []
    if label == "AII":
        black = set(range(1, n + 1, 2))
    elif label == "AIII":
        black = _rng(r + 1, n - r)
        arrows = [(i, n + 1 - i) for i in range(1, r + 1) if i < n + 1 - i]
    elif label == "AIV":
        black = _rng(2, n - 1)
        arrows = [(1, n)]
    elif label in ("BI", "BII"):
        black = _rng(r + 1, n)
    elif label == "CII":
        black = set(range(1, 2 * r, 2)) | _rng(2 * r + 1, n)
    elif label in ("DI-1", "DII"):
        black = _rng(r + 1, n)
    elif label == "DI-2":
        arrows = [(n - 1, n)]
    elif label == "DIII-1":
        black = set(range(1, n, 2))
    elif label == "DIII-2":
        black = set(range(1, n - 1, 2))
        arrows = [(n - 1, n)]
    return make_satake(lt, black, arrows, name)


_INNER_FAMILIES = [("A", 1, None), ("B", 2, None), ("C", 2, None), ("D", 4, None),
                   ("E", 6, 8), ("F", 4, 4), ("G", 2, 2)]


def admissible_pairs(max_rank: int) -> list[PairId]:
    """Every admissible (label, n <= max_rank, r), in a fixed order."""
    out = []
    for label, (_, nmin) in _CLASSICAL.items():
        for n in range(nmin, max_rank + 1):
            rr = r_range(label, n)
            for r in rr if rr is not None else [None]:
                try:
                    out.append(_validate(PairId(label, n, r)))
                except CatalogError:
                    pass
    for label, (rk, _, _) in _E_DATA.items():
        if rk <= max_rank:
            out.append(PairId(label, rk))
    for fam, lo, hi in _INNER_FAMILIES:
        for n in range(lo, min(max_rank, hi or max_rank) + 1):
            out.append(PairId("DIAGONAL", n, None, fam))
    return out


def parse_pair(label: str, n: int | None = None, r: int | None = None) -> PairId:
    """Accept ``AI`` with -n, or compact forms such as ``AI2``, ``DIAGONAL-A1``."""
    s = label.strip().upper()
    m = re.fullmatch(r"DIAG(?:ONAL)?-?([A-G])(\d+)", s)
    if m:
        return PairId("DIAGONAL", int(m.group(2)), None, m.group(1))
    if s in _CLASSICAL or s in _E_DATA:
        if n is None:
            if s in _E_DATA:
                n = _E_DATA[s][0]
            else:
                raise CatalogError(f"{s} needs a rank")
        return PairId(s, n, r)
    m = re.fullmatch(r"([A-Z]+(?:-\d)?)(\d+)", s)
    if m and m.group(1) in _CLASSICAL:
        return PairId(m.group(1), int(m.group(2)), r)
    raise CatalogError(f"unknown pair {label!r}")


def make_from_record(rec: dict) -> SatakeDiagram:
    """Build and validate a diagram from {type, rank, black, d}."""
    try:
        t = str(rec["type"])
        n = int(rec["rank"])
        if t.upper().startswith("DIAGONAL"):
            inner = t.split("-", 1)[1] if "-" in t else rec["inner"]
            lt = LieType.diagonal(LieType(inner, n))
        else:
            lt = LieType(t, n)
        black = frozenset(int(i) for i in rec.get("black", []))
        d = tuple(int(i) for i in rec.get("d") or range(1, lt.rank + 1))
    except (KeyError, ValueError, TypeError, IndexError) as exc:
        raise CatalogError(f"bad Satake record: {exc}") from None
    if len(d) != lt.rank:
        raise CatalogError("d must list the image of every node")
    sd = SatakeDiagram(lt, black, d, rec.get("name", "user"))
    expected = make_satake(lt, black, [], "").d_perm
    for i in black:
        if d[i - 1] != expected[i - 1]:
            raise CatalogError("d must act on black nodes as the opposition involution")
    _check_theta(sd)
    return sd


def load_satake(path: str | Path) -> SatakeDiagram:
    return make_from_record(json.loads(Path(path).read_text()))


def _check_theta(sd: SatakeDiagram):
    lt = sd.lie_type
    for i in range(1, lt.rank + 1):
        a = simple_root(lt, i)
        if theta_action(sd, theta_action(sd, a)) != a:
            raise CatalogError("Theta is not an involution")
    p_map(sd)


# -- Theta and derived data --------------------------------------------------

def _apply_d(sd: SatakeDiagram, lam: Weight) -> Weight:
    c = [0] * len(lam.coords)
    for i, v in enumerate(lam.coords):
        c[sd.d_perm[i] - 1] = v
    return Weight(lam.lie, tuple(c))


def theta_action(sd: SatakeDiagram, lam: Weight) -> Weight:
    if lam.lie != sd.lie_type:
        raise TypeError("weight and diagram over different Lie types")
    return -w0_parabolic_action(sd.black, _apply_d(sd, lam))


def theta_matrix(sd: SatakeDiagram) -> list[list[int]]:
    """Matrix of Theta on fundamental coordinates (column j = Theta(omega_j))."""
    n = sd.lie_type.rank
    cols = []
    for j in range(n):
        e = Weight(sd.lie_type, tuple(int(k == j) for k in range(n)))
        cols.append(theta_action(sd, e).coords)
    return [[cols[j][i] for j in range(n)] for i in range(n)]


@lru_cache(maxsize=None)
def p_map(sd: SatakeDiagram) -> dict[int, int]:
    """The involution p on white nodes: Theta(alpha_i) in -alpha_p(i) + Z black."""
    lt = sd.lie_type
    out = {}
    for i in sd.white:
        r = to_root(theta_action(sd, simple_root(lt, i))).coords
        outside = [j + 1 for j, c in enumerate(r) if c != 0 and (j + 1) not in sd.black]
        if len(outside) != 1 or r[outside[0] - 1] != -1:
            raise CatalogError(f"Theta(alpha_{i}) has no form -alpha_p + black roots")
        if any(c.denominator != 1 for c in r):
            raise CatalogError("Theta does not preserve the root lattice")
        out[i] = outside[0]
    if any(out[out[i]] != i for i in out):
        raise CatalogError("p is not an involution")
    return out


def pi_star(sd: SatakeDiagram) -> list[int]:
    p = p_map(sd)
    return [i for i in sd.white if i <= p[i]]


def _tilde_coords(sd: SatakeDiagram, lam: Weight) -> tuple[Fraction, ...]:
    a = to_root(lam).coords
    b = to_root(theta_action(sd, lam)).coords
    return tuple((x - y) / 2 for x, y in zip(a, b))


def restricted_root(sd: SatakeDiagram, lam: Weight) -> RestrictedWeight:
    return RestrictedWeight(RootElt(sd.lie_type, _tilde_coords(sd, lam)))


@lru_cache(maxsize=None)
def _restricted_basis(sd: SatakeDiagram):
    """Rows alpha~_i (i in pi*) and a solver for coefficients."""
    lt = sd.lie_type
    rows = [_tilde_coords(sd, simple_root(lt, i)) for i in pi_star(sd)]
    return rows


def _solve_in_span(rows, target):
    """Coefficients c with sum c_k rows[k] = target, or None."""
    m, n = len(rows), len(target)
    # augmented system for the transposed matrix: n equations, m unknowns
    aug = [[rows[k][j] for k in range(m)] + [target[j]] for j in range(n)]
    piv_cols = []
    r = 0
    for c in range(m):
        pr = next((i for i in range(r, n) if aug[i][c] != 0), None)
        if pr is None:
            continue
        aug[r], aug[pr] = aug[pr], aug[r]
        pv = aug[r][c]
        aug[r] = [x / pv for x in aug[r]]
        for i in range(n):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        piv_cols.append(c)
        r += 1
    if any(aug[i][m] != 0 for i in range(r, n)):
        return None
    coeffs = [Fraction(0)] * m
    for i, c in enumerate(piv_cols):
        coeffs[c] = aug[i][m]
    return coeffs


def restricted_coords(sd: SatakeDiagram, lam: Weight) -> list[Fraction]:
    """Coordinates of lambda~ in the basis {alpha~_i : i in pi*}."""
    c = _solve_in_span(_restricted_basis(sd), _tilde_coords(sd, lam))
    assert c is not None, "restricted weight outside the span of restricted simple roots"
    return c


def restricted_height(sd: SatakeDiagram, lam: Weight) -> Fraction:
    return sum(restricted_coords(sd, lam), Fraction(0))


def leq_r(sd: SatakeDiagram, mu: Weight, gamma: Weight) -> bool:
    return all(c.denominator == 1 and c >= 0 for c in restricted_coords(sd, gamma - mu))


def is_spherical_weight(sd: SatakeDiagram, lam: Weight) -> bool:
    """lambda in 2P^+(Sigma), via coroot pairings with indivisible restricted roots."""
    if theta_action(sd, lam) != -lam:
        return False
    lt = sd.lie_type
    for i in pi_star(sd):
        a = restricted_root(sd, simple_root(lt, i)).value
        # alpha~_i is indivisible unless 2 alpha~_i is also restricted: any
        # gamma with gamma~ = 2 alpha~_i; we normalize by alpha~_i itself.
        ratio = 2 * inner_product(lam, a) / inner_product(a, a)
        if ratio.denominator != 1 or ratio < 0 or ratio % 2:
            return False
    return True


def fixed_lattice(sd: SatakeDiagram) -> list[Weight]:
    """Z-basis of {lambda in P : Theta(lambda) = lambda}."""
    n = sd.lie_type.rank
    th = sympy.Matrix(theta_matrix(sd)) - sympy.eye(n)
    cols = []
    for v in th.nullspace():
        v = v * sympy.ilcm(*[x.q for x in v])
        cols.append([int(x) for x in v / sympy.gcd(list(v))])
    return [Weight(sd.lie_type, tuple(c)) for c in _saturate(cols, n)]


def _index(cols, n):
    m = len(cols)
    mat = sympy.Matrix(cols).T
    return abs(sympy.gcd([mat.extract(list(rows), list(range(m))).det()
                          for rows in combinations(range(n), m)]))


def _saturate(cols, n):
    """Basis of (rational span of cols) intersected with Z^n."""
    if not cols:
        return []
    while (idx := _index(cols, n)) != 1:
        p = min(sympy.primefactors(idx))
        for c in product(range(p), repeat=len(cols)):
            if not any(c):
                continue
            v = [sum(cj * col[i] for cj, col in zip(c, cols)) for i in range(n)]
            if all(x % p == 0 for x in v):
                k = max(j for j, cj in enumerate(c) if cj)
                cols = cols[:k] + [[x // p for x in v]] + cols[k + 1:]
                break
    return cols
