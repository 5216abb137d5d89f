"""Root systems of finite type: Cartan data, weights, Weyl group actions.

Node labels follow Bourbaki and are 1-based in the public API.  Weights are
stored in the fundamental-weight basis, root-lattice elements in the
simple-root basis with exact rational coordinates.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

__all__ = [
    "LieType", "Weight", "RootElt", "CartanData", "lie_type", "cartan_data",
    "fundamental_weight", "simple_root", "zero_weight", "to_root", "to_weight",
    "inner_product", "simple_reflection", "w0_action", "w0_parabolic_action",
    "height", "leq", "positive_roots", "weyl_dim", "rho",
]

_RANK_LIMITS = {"A": (1, None), "B": (2, None), "C": (2, None), "D": (3, None),
                "E": (6, 8), "F": (4, 4), "G": (2, 2)}


@dataclass(frozen=True)
class LieType:
    family: str
    rank: int
    inner: LieType | None = None

    def __post_init__(self):
        if self.family == "Diagonal":
            if self.inner is None or self.inner.family == "Diagonal":
                raise ValueError("Diagonal type needs a simple inner type")
            if self.rank != 2 * self.inner.rank:
                raise ValueError("Diagonal rank must be twice the inner rank")
            return
        if self.family not in _RANK_LIMITS:
            raise ValueError(f"unknown Lie family {self.family!r}")
        lo, hi = _RANK_LIMITS[self.family]
        if self.rank < lo or (hi is not None and self.rank > hi):
            raise ValueError(f"rank {self.rank} not allowed for family {self.family}")

    @classmethod
    def diagonal(cls, inner: LieType) -> LieType:
        return cls("Diagonal", 2 * inner.rank, inner)

    def __str__(self):
        if self.family == "Diagonal":
            return f"{self.inner}x{self.inner}"
        return f"{self.family}{self.rank}"


def lie_type(spec: str | LieType) -> LieType:
    """Parse ``"A2"``, ``"E6"`` or ``"A1xA1"`` (diagonal) into a LieType."""
    if isinstance(spec, LieType):
        return spec
    m = re.fullmatch(r"\s*([A-G])(\d+)(?:x([A-G])(\d+))?\s*", spec)
    if not m:
        raise ValueError(f"cannot parse Lie type {spec!r}")
    base = LieType(m.group(1), int(m.group(2)))
    if m.group(3):
        if (m.group(3), m.group(4)) != (m.group(1), m.group(2)):
            raise ValueError("only the diagonal product X x X is supported")
        return LieType.diagonal(base)
    return base


@dataclass(frozen=True)
class CartanData:
    cartan_matrix: tuple[tuple[int, ...], ...]
    symmetrizers: tuple[int, ...]


def _gram(lt: LieType) -> list[list[int]]:
    """Symmetric matrix ((alpha_i, alpha_j)) with short roots of length 2."""
    n = lt.rank
    if lt.family == "Diagonal":
        g = _gram(lt.inner)
        m = lt.inner.rank
        out = [[0] * n for _ in range(n)]
        for i in range(m):
            for j in range(m):
                out[i][j] = out[i + m][j + m] = g[i][j]
        return out
    g = [[0] * n for _ in range(n)]
    fam = lt.family

    def link(i, j, v):
        g[i - 1][j - 1] = g[j - 1][i - 1] = v

    if fam in "ABCD" or fam == "E":
        for i in range(n):
            g[i][i] = 2
    if fam == "A":
        for i in range(1, n):
            link(i, i + 1, -1)
    elif fam == "B":
        for i in range(n - 1):
            g[i][i] = 4
        for i in range(1, n):
            link(i, i + 1, -2)
    elif fam == "C":
        g[n - 1][n - 1] = 4
        for i in range(1, n - 1):
            link(i, i + 1, -1)
        link(n - 1, n, -2)
    elif fam == "D":
        for i in range(1, n - 1):
            link(i, i + 1, -1)
        link(n - 2, n, -1)
    elif fam == "E":
        for i, j in [(1, 3), (3, 4), (4, 5), (2, 4)] + [(k, k + 1) for k in range(5, n)]:
            link(i, j, -1)
    elif fam == "F":
        for i, v in enumerate((4, 4, 2, 2)):
            g[i][i] = v
        link(1, 2, -2)
        link(2, 3, -2)
        link(3, 4, -1)
    elif fam == "G":
        g[0][0], g[1][1] = 2, 6
        link(1, 2, -3)
    return g


@lru_cache(maxsize=None)
def cartan_data(lt: LieType) -> CartanData:
    g = _gram(lt)
    n = lt.rank
    a = tuple(tuple(2 * g[i][j] // g[i][i] for j in range(n)) for i in range(n))
    return CartanData(a, tuple(g[i][i] // 2 for i in range(n)))


class _RootData:
    """Cached numerical data for a LieType (internal)."""

    def __init__(self, lt: LieType):
        self.lt = lt
        cd = cartan_data(lt)
        self.n = n = lt.rank
        self.a = cd.cartan_matrix
        self.d = cd.symmetrizers
        # alpha_j in fundamental coordinates is column j of the Cartan matrix
        self.alpha = tuple(tuple(self.a[i][j] for i in range(n)) for j in range(n))
        self.ainv = _rational_inverse([[Fraction(x) for x in row] for row in self.a])
        self._pos = None

    def root_coords(self, c: Sequence[int]) -> tuple[Fraction, ...]:
        return tuple(sum((self.ainv[i][k] * c[k] for k in range(self.n)), Fraction(0))
                     for i in range(self.n))

    def fund_coords(self, r: Sequence[Fraction]) -> tuple[Fraction, ...]:
        return tuple(sum((self.a[i][j] * r[j] for j in range(self.n)), Fraction(0))
                     for i in range(self.n))

    def reflect(self, i: int, c: tuple[int, ...]) -> tuple[int, ...]:
        ci = c[i]
        if ci == 0:
            return c
        return tuple(c[j] - ci * self.a[j][i] for j in range(self.n))

    def to_antidominant(self, c: tuple[int, ...], nodes: Iterable[int]) -> tuple[int, ...]:
        nodes = tuple(nodes)
        while True:
            for i in nodes:
                if c[i] > 0:
                    c = self.reflect(i, c)
                    break
            else:
                return c

    @property
    def positive_roots(self) -> list[tuple[int, ...]]:
        """Positive roots in simple-root coordinates."""
        if self._pos is None:
            n = self.n
            simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
            seen = set(simple)
            frontier = list(simple)
            while frontier:
                nxt = []
                for beta in frontier:
                    for i in range(n):
                        # <beta, alpha_i^vee> = sum_j beta_j a_ij
                        k = sum(beta[j] * self.a[i][j] for j in range(n))
                        if k == 0:
                            continue
                        img = tuple(beta[j] - (k if j == i else 0) for j in range(n))
                        if img not in seen:
                            seen.add(img)
                            nxt.append(img)
                frontier = nxt
            self._pos = sorted((b for b in seen if all(x >= 0 for x in b)),
                               key=lambda b: (sum(b), b))
        return self._pos


def _rational_inverse(m: list[list[Fraction]]) -> tuple[tuple[Fraction, ...], ...]:
    n = len(m)
    aug = [row[:] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


@lru_cache(maxsize=None)
def _data(lt: LieType) -> _RootData:
    return _RootData(lt)


@dataclass(frozen=True)
class Weight:
    """Integral weight in fundamental coordinates."""
    lie: LieType
    coords: tuple[int, ...]

    def __post_init__(self):
        if len(self.coords) != self.lie.rank:
            raise ValueError("coordinate count does not match rank")
        object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))

    def _check(self, other):
        if not isinstance(other, Weight):
            return NotImplemented
        if other.lie != self.lie:
            raise TypeError("weights over different Lie types")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return Weight(self.lie, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return Weight(self.lie, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return Weight(self.lie, tuple(-a for a in self.coords))

    def __mul__(self, k: int):
        return Weight(self.lie, tuple(k * a for a in self.coords))

    __rmul__ = __mul__

    def is_dominant(self) -> bool:
        return all(c >= 0 for c in self.coords)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __repr__(self):
        return f"Weight({self.lie}, {self.coords})"


@dataclass(frozen=True)
class RootElt:
    """Element of Q(pi) tensor Q, in simple-root coordinates."""
    lie: LieType
    coords: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.coords) != self.lie.rank:
            raise ValueError("coordinate count does not match rank")
        object.__setattr__(self, "coords", tuple(Fraction(c) for c in self.coords))

    def __add__(self, other):
        if not isinstance(other, RootElt):
            return NotImplemented
        if other.lie != self.lie:
            raise TypeError("root elements over different Lie types")
        return RootElt(self.lie, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return RootElt(self.lie, tuple(-a for a in self.coords))

    def __mul__(self, k):
        return RootElt(self.lie, tuple(k * a for a in self.coords))

    __rmul__ = __mul__

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coords)

    def __repr__(self):
        return f"RootElt({self.lie}, {tuple(str(c) for c in self.coords)})"


def zero_weight(lt: LieType) -> Weight:
    return Weight(lt, (0,) * lt.rank)


def fundamental_weight(lt: LieType, i: int) -> Weight:
    _check_node(lt, i)
    return Weight(lt, tuple(int(j == i - 1) for j in range(lt.rank)))


def simple_root(lt: LieType, i: int) -> Weight:
    _check_node(lt, i)
    return Weight(lt, _data(lt).alpha[i - 1])


def rho(lt: LieType) -> Weight:
    return Weight(lt, (1,) * lt.rank)


def to_root(x: Weight | RootElt) -> RootElt:
    if isinstance(x, RootElt):
        return x
    return RootElt(x.lie, _data(x.lie).root_coords(x.coords))


def to_weight(x: Weight | RootElt) -> Weight:
    """Convert to fundamental coordinates; fails if x is not integral there."""
    if isinstance(x, Weight):
        return x
    c = _data(x.lie).fund_coords(x.coords)
    if any(v.denominator != 1 for v in c):
        raise ValueError("element is not an integral weight")
    return Weight(x.lie, tuple(int(v) for v in c))


def _check_node(lt: LieType, i: int):
    if not 1 <= i <= lt.rank:
        raise IndexError(f"node {i} out of range 1..{lt.rank}")


def inner_product(x: Weight | RootElt, y: Weight | RootElt) -> Fraction:
    if x.lie != y.lie:
        raise TypeError("inner product of elements over different Lie types")
    rd = _data(x.lie)
    rx = to_root(x).coords
    # (alpha_j, y) = d_j * (fundamental coordinate j of y)
    cy = y.coords if isinstance(y, Weight) else rd.fund_coords(y.coords)
    return sum((rx[j] * rd.d[j] * cy[j] for j in range(rd.n)), Fraction(0))


def simple_reflection(i: int, lam: Weight) -> Weight:
    _check_node(lam.lie, i)
    return Weight(lam.lie, _data(lam.lie).reflect(i - 1, lam.coords))


@lru_cache(maxsize=None)
def _w0_matrix(lt: LieType, nodes: frozenset[int]) -> tuple[tuple[int, ...], ...]:
    """Columns are w(omega_j) for the longest element w of W(nodes)."""
    rd = _data(lt)
    idx = sorted(i - 1 for i in nodes)
    cols = []
    for j in range(lt.rank):
        e = tuple(int(k == j) for k in range(lt.rank))
        cols.append(rd.to_antidominant(e, idx))
    return tuple(cols)


def _apply_cols(cols, c):
    n = len(c)
    return tuple(sum(c[j] * cols[j][i] for j in range(n)) for i in range(n))


def w0_parabolic_action(nodes: Iterable[int], lam: Weight) -> Weight:
    """Action of the longest element of the parabolic subgroup W(nodes)."""
    nodes = frozenset(nodes)
    for i in nodes:
        _check_node(lam.lie, i)
    if not nodes:
        return lam
    return Weight(lam.lie, _apply_cols(_w0_matrix(lam.lie, nodes), lam.coords))


def w0_action(lam: Weight) -> Weight:
    return w0_parabolic_action(range(1, lam.lie.rank + 1), lam)


def height(beta: Weight | RootElt) -> Fraction:
    return sum(to_root(beta).coords, Fraction(0))


def leq(mu: Weight, gamma: Weight) -> bool:
    """mu <= gamma in the dominance order (gamma - mu in Q^+)."""
    r = to_root(gamma - mu)
    return all(c.denominator == 1 and c >= 0 for c in r.coords)


def positive_roots(lt: LieType) -> list[RootElt]:
    return [RootElt(lt, b) for b in _data(lt).positive_roots]


def weyl_dim(lam: Weight) -> int:
    if not lam.is_dominant():
        raise ValueError("weyl_dim needs a dominant weight")
    rd = _data(lam.lie)
    num = Fraction(1)
    for beta in rd.positive_roots:
        # (lam + rho, beta) / (rho, beta); both pair against d_j * coordinate
        top = sum(beta[j] * rd.d[j] * (lam.coords[j] + 1) for j in range(rd.n))
        bot = sum(beta[j] * rd.d[j] for j in range(rd.n))
        num *= Fraction(top, bot)
    assert num.denominator == 1
    return int(num)
