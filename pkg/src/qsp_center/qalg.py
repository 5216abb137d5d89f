"""Normal-form arithmetic in the simply connected quantized enveloping algebra.

Elements are finite sums of ordered monomials ``Y * tau(lam) * X`` where ``Y``
and ``X`` are PBW monomials in the negative and positive parts.  Supported
types are A1, A1xA1 and A2.

For A2 both halves use the root vector E12 = E1 E2 - q^-1 E2 E1 (with E = x or
E = y) in the order (1, 12, 2).  The three straightening rules

    E12 E1 = q^-1 E1 E12,   E2 E1 = q E1 E2 - q E12,   E2 E12 = q^-1 E12 E2

follow from the Serre relations; the test suite re-derives each from words.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from .lattice_core import LieType, RootElt, Weight, cartan_data, height, lie_type, to_weight
from .qfield import RatFunc, q_power

__all__ = ["QuantumAlgebra", "AlgebraElement", "PBWHalf", "algebra"]

ONE = RatFunc(1)


def _acc(target: dict, key, c: RatFunc):
    v = target.get(key)
    if v is None:
        target[key] = c
    else:
        v = v + c
        if v:
            target[key] = v
        else:
            del target[key]


class PBWHalf:
    """PBW basis of U^+ (equally U^-): letters, straightening, word expansions.

    Monomials are exponent tuples over the letters in convex order.
    Generator indices are 0-based node numbers.
    """

    def __init__(self, kind: str):
        self.kind = kind
        qi = q_power(-1)
        if kind == "A1":
            self.weights = [(1,)]
            self.names = ["1"]
            self.gen_letter = [0]
            self.rules = {}
            self.words = [{(0,): ONE}]
        elif kind == "A1xA1":
            self.weights = [(1, 0), (0, 1)]
            self.names = ["1", "2"]
            self.gen_letter = [0, 1]
            self.rules = {(1, 0): {(1, 1): ONE}}
            self.words = [{(0,): ONE}, {(1,): ONE}]
        elif kind == "A2":
            self.weights = [(1, 0), (1, 1), (0, 1)]
            self.names = ["1", "12", "2"]
            self.gen_letter = [0, 2]
            self.rules = {
                (1, 0): {(1, 1, 0): qi},
                (2, 0): {(1, 0, 1): q_power(1), (0, 1, 0): -q_power(1)},
                (2, 1): {(0, 1, 1): qi},
            }
            self.words = [{(0,): ONE}, {(0, 1): ONE, (1, 0): -qi}, {(1,): ONE}]
        else:
            raise ValueError(f"unsupported PBW type {kind}")
        self.size = len(self.weights)
        self.zero = (0,) * self.size
        self._ml: dict = {}
        self._mul: dict = {}
        self._expand: dict = {}
        self._split: dict = {}
        self._norm: dict = {}

    def letter(self, k: int) -> tuple[int, ...]:
        return tuple(int(j == k) for j in range(self.size))

    def weight(self, mono) -> tuple[int, ...]:
        w = [0] * len(self.weights[0])
        for k, e in enumerate(mono):
            if e:
                for j, x in enumerate(self.weights[k]):
                    w[j] += e * x
        return tuple(w)

    def mul_letter(self, mono, k) -> dict:
        key = (mono, k)
        res = self._ml.get(key)
        if res is not None:
            return res
        last = max((j for j, e in enumerate(mono) if e), default=-1)
        m = list(mono)
        if last <= k:
            m[k] += 1
            res = {tuple(m): ONE}
        else:
            m[last] -= 1
            prefix = tuple(m)
            res = {}
            for nm, c in self.rules[(last, k)].items():
                for mm, cc in self.mul(prefix, nm).items():
                    _acc(res, mm, c * cc)
        self._ml[key] = res
        return res

    def _mul_elem_letter(self, elem: dict, k: int) -> dict:
        out = {}
        for m, c in elem.items():
            for mm, cc in self.mul_letter(m, k).items():
                _acc(out, mm, c * cc)
        return out

    def mul(self, a, b) -> dict:
        if not any(b):
            return {a: ONE}
        if not any(a):
            return {b: ONE}
        key = (a, b)
        res = self._mul.get(key)
        if res is not None:
            return res
        cur = {a: ONE}
        for k, e in enumerate(b):
            for _ in range(e):
                cur = self._mul_elem_letter(cur, k)
        self._mul[key] = cur
        return cur

    def normalize_word(self, word: tuple[int, ...]) -> dict:
        res = self._norm.get(word)
        if res is None:
            res = {self.zero: ONE}
            for g in word:
                res = self._mul_elem_letter(res, self.gen_letter[g])
            self._norm[word] = res
        return res

    def expand(self, mono) -> dict:
        """The monomial as a combination of words in the generators."""
        res = self._expand.get(mono)
        if res is None:
            res = {(): ONE}
            for k, e in enumerate(mono):
                for _ in range(e):
                    nxt = {}
                    for w, c in res.items():
                        for w2, c2 in self.words[k].items():
                            _acc(nxt, w + w2, c * c2)
                    res = nxt
            self._expand[mono] = res
        return res

    def split_first(self, mono) -> dict:
        """{g: element R} with mono = sum_g E_g * R."""
        res = self._split.get(mono)
        if res is None:
            res = {}
            for w, c in self.expand(mono).items():
                part = res.setdefault(w[0], {})
                for m, cc in self.normalize_word(w[1:]).items():
                    _acc(part, m, c * cc)
            self._split[mono] = {g: p for g, p in res.items() if p}
            res = self._split[mono]
        return res


_SUPPORTED = {"A1": "A1", "A2": "A2", "A1xA1": "A1xA1"}


class QuantumAlgebra:
    """The algebra for one supported Lie type, with memoized straightening."""

    def __init__(self, lt: LieType | str):
        lt = lie_type(lt)
        kind = _SUPPORTED.get(str(lt))
        if kind is None:
            raise ValueError(f"unsupported type {lt}; use A1, A2 or A1xA1")
        self.lie = lt
        self.n = lt.rank
        cd = cartan_data(lt)
        self.d = cd.symmetrizers
        self.alpha = tuple(tuple(cd.cartan_matrix[i][j] for i in range(self.n))
                           for j in range(self.n))
        self.plus = PBWHalf(kind)
        self.minus = PBWHalf(kind)
        self.zlam = (0,) * self.n
        self._lx: dict = {}
        self._mm: dict = {}
        self._comm = [q_power(self.d[i]) - q_power(-self.d[i]) for i in range(self.n)]

    # pairing (lam, beta) for lam in fundamental and beta in root coordinates
    def pair(self, lam, beta) -> int:
        return sum(b * self.d[j] * lam[j] for j, b in enumerate(beta))

    # constructors ---------------------------------------------------------
    def element(self, terms: Mapping) -> AlgebraElement:
        return AlgebraElement(self, {m: c for m, c in terms.items() if c})

    def scalar(self, c) -> AlgebraElement:
        c = RatFunc._coerce(c)
        return self.element({(self.minus.zero, self.zlam, self.plus.zero): c})

    def one(self) -> AlgebraElement:
        return self.scalar(1)

    def zero(self) -> AlgebraElement:
        return AlgebraElement(self, {})

    def x(self, i: int) -> AlgebraElement:
        k = self.plus.gen_letter[i - 1]
        return self.element({(self.minus.zero, self.zlam, self.plus.letter(k)): ONE})

    def y(self, i: int) -> AlgebraElement:
        k = self.minus.gen_letter[i - 1]
        return self.element({(self.minus.letter(k), self.zlam, self.plus.zero): ONE})

    def tau(self, lam) -> AlgebraElement:
        c = tuple(lam.coords) if isinstance(lam, Weight) else tuple(lam)
        if len(c) != self.n:
            raise ValueError("weight has the wrong length")
        return self.element({(self.minus.zero, c, self.plus.zero): ONE})

    def t(self, i: int, power: int = 1) -> AlgebraElement:
        return self.tau(tuple(power * a for a in self.alpha[i - 1]))

    def generators(self) -> dict[str, AlgebraElement]:
        out = {}
        for i in range(1, self.n + 1):
            out[f"x{i}"] = self.x(i)
            out[f"y{i}"] = self.y(i)
            out[f"t{i}"] = self.t(i)
            out[f"t{i}^-1"] = self.t(i, -1)
        return out

    # left multiplication by generators on monomials ------------------------
    def _left_y(self, j: int, elem: dict) -> dict:
        out = {}
        k = self.minus.gen_letter[j]
        for (Y, lam, X), c in elem.items():
            for Y2, c2 in self.minus.mul(self.minus.letter(k), Y).items():
                _acc(out, (Y2, lam, X), c * c2)
        return out

    def _left_tau(self, mu, elem: dict) -> dict:
        out = {}
        for (Y, lam, X), c in elem.items():
            e = -self.pair(mu, self.minus.weight(Y))
            lam2 = tuple(a + b for a, b in zip(mu, lam))
            _acc(out, (Y, lam2, X), c * q_power(e) if e else c)
        return out

    def _left_x_mono(self, i: int, mono) -> dict:
        key = (i, mono)
        res = self._lx.get(key)
        if res is not None:
            return res
        Y, lam, X = mono
        res = {}
        if not any(Y):
            e = -self.pair(lam, self.alpha_root(i))
            k = self.plus.gen_letter[i]
            for X2, c in self.plus.mul(self.plus.letter(k), X).items():
                _acc(res, (Y, lam, X2), c * q_power(e))
        else:
            for j, rest in self.minus.split_first(Y).items():
                for Yr, c in rest.items():
                    inner = self._left_x_mono(i, (Yr, lam, X))
                    for m, cc in self._left_y(j, inner).items():
                        _acc(res, m, c * cc)
                    if i == j:
                        f = c / self._comm[i]
                        a = self.alpha[i]
                        base = {(Yr, lam, X): f}
                        for m, cc in self._left_tau(a, base).items():
                            _acc(res, m, cc)
                        for m, cc in self._left_tau(tuple(-v for v in a), base).items():
                            _acc(res, m, -cc)
        self._lx[key] = res
        return res

    def alpha_root(self, i: int) -> tuple[int, ...]:
        """alpha_{i+1} in simple-root coordinates (0-based i)."""
        return tuple(int(j == i) for j in range(self.n))

    def _left_x(self, i: int, elem: dict) -> dict:
        out = {}
        for m, c in elem.items():
            for mm, cc in self._left_x_mono(i, m).items():
                _acc(out, mm, c * cc)
        return out

    def mono_mul(self, m1, m2) -> dict:
        key = (m1, m2)
        res = self._mm.get(key)
        if res is not None:
            return res
        Y1, l1, X1 = m1
        Y2, l2, X2 = m2
        if not any(X1):
            cur = {m2: ONE}
        elif not any(Y2):
            e = -self.pair(l2, self.plus.weight(X1))
            cur = {(Y2, l2, X): c * q_power(e) for X, c in self.plus.mul(X1, X2).items()}
        else:
            cur = {}
            for w, c in self.plus.expand(X1).items():
                v = {m2: c}
                for g in reversed(w):
                    v = self._left_x(g, v)
                for m, cc in v.items():
                    _acc(cur, m, cc)
        if any(l1):
            cur = self._left_tau(l1, cur)
        if any(Y1):
            out = {}
            for (Y, lam, X), c in cur.items():
                for Yn, cc in self.minus.mul(Y1, Y).items():
                    _acc(out, (Yn, lam, X), c * cc)
            cur = out
        self._mm[key] = cur
        return cur

    def multiply(self, a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
        out = {}
        for m1, c1 in a.terms.items():
            for m2, c2 in b.terms.items():
                c = c1 * c2
                for m, cc in self.mono_mul(m1, m2).items():
                    _acc(out, m, c * cc)
        return AlgebraElement(self, out)

    # right adjoint action ---------------------------------------------------
    def ad(self, kind: str, i: int, b: AlgebraElement, power: int = 1) -> AlgebraElement:
        """ad_r of x_i, y_i, or t_i^power applied to b (1-based i)."""
        if kind == "x":
            ti = self.t(i, -1)
            return ti * b * self.x(i) - ti * self.x(i) * b
        if kind == "y":
            return b * self.y(i) - self.y(i) * self.t(i) * b * self.t(i, -1)
        if kind == "t":
            return self.t(i, -power) * b * self.t(i, power)
        raise ValueError(f"unknown generator kind {kind!r}")

    def ad_tau(self, lam, b: AlgebraElement) -> AlgebraElement:
        lam = tuple(lam.coords) if isinstance(lam, Weight) else tuple(lam)
        return self.tau(tuple(-v for v in lam)) * b * self.tau(lam)

    def ad_element(self, u: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
        """(ad_r u) b for arbitrary u; letters of u act from left to right."""
        out = self.zero()
        for (Y, lam, X), c in u.terms.items():
            for wy, cy in self.minus.expand(Y).items():
                for wx, cx in self.plus.expand(X).items():
                    v = b
                    for g in wy:
                        v = self.ad("y", g + 1, v)
                    if any(lam):
                        v = self.ad_tau(lam, v)
                    for g in wx:
                        v = self.ad("x", g + 1, v)
                    out = out + v * (c * cy * cx)
        return out

    # weights and degrees -------------------------------------------------------
    def mono_weight(self, mono) -> tuple[int, ...]:
        """Left-adjoint weight in root coordinates: wt(X) - wt(Y)."""
        Y, _, X = mono
        return tuple(a - b for a, b in zip(self.plus.weight(X), self.minus.weight(Y)))

    def mono_degree_weight(self, mono) -> Weight:
        """lam + wt(X) as a weight; the F-degree of the monomial is its height."""
        _, lam, X = mono
        wx = to_weight(RootElt(self.lie, self.plus.weight(X)))
        return Weight(self.lie, lam) + wx

    def mono_str(self, mono) -> str:
        Y, lam, X = mono
        parts = []
        for k, e in enumerate(Y):
            if e:
                parts.append(f"y{self.minus.names[k]}" + (f"^{e}" if e > 1 else ""))
        if any(lam):
            parts.append("tau(" + ",".join(str(v) for v in lam) + ")")
        for k, e in enumerate(X):
            if e:
                parts.append(f"x{self.plus.names[k]}" + (f"^{e}" if e > 1 else ""))
        return "*".join(parts) if parts else "1"


class AlgebraElement:
    """Immutable normal-form element; supports +, -, * and scalar factors."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg: QuantumAlgebra, terms: dict):
        self.alg = alg
        self.terms = terms

    def _lift(self, other):
        if isinstance(other, AlgebraElement):
            if other.alg is not self.alg:
                raise TypeError("elements of different algebras")
            return other
        if isinstance(other, (int, RatFunc)):
            return self.alg.scalar(other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for m, c in other.terms.items():
            _acc(out, m, c)
        return AlgebraElement(self.alg, out)

    __radd__ = __add__

    def __neg__(self):
        return AlgebraElement(self.alg, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, RatFunc)):
            c = RatFunc._coerce(other)
            if not c:
                return self.alg.zero()
            return AlgebraElement(self.alg, {m: v * c for m, v in self.terms.items()})
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self.alg.multiply(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, RatFunc)):
            return self * other
        return NotImplemented

    def __pow__(self, k: int):
        out = self.alg.one()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda mc: mc[0])

    def weight_split(self) -> dict[tuple[int, ...], AlgebraElement]:
        """Components by left-adjoint weight, keyed by root coordinates."""
        parts: dict = {}
        for m, c in self.terms.items():
            parts.setdefault(self.alg.mono_weight(m), {})[m] = c
        return {w: AlgebraElement(self.alg, t) for w, t in sorted(parts.items())}

    def filter_degree(self, which: str = "F", sd=None) -> Fraction:
        if not self.terms:
            raise ValueError("degree of the zero element")
        return max(self.mono_degrees(which, sd).values())

    def mono_degrees(self, which: str = "F", sd=None) -> dict:
        if which == "F":
            return {m: height(self.alg.mono_degree_weight(m)) for m in self.terms}
        if which in ("Ftheta", "Fθ"):
            from .symmetric_pairs import restricted_height
            if sd is None:
                raise ValueError("Ftheta degree needs a Satake diagram")
            return {m: restricted_height(sd, self.alg.mono_degree_weight(m)) for m in self.terms}
        raise ValueError(f"unknown filtration {which!r}")

    def top_component(self, which: str = "F", sd=None) -> AlgebraElement:
        degs = self.mono_degrees(which, sd)
        top = max(degs.values())
        return AlgebraElement(self.alg, {m: c for m, c in self.terms.items() if degs[m] == top})

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            ms = self.alg.mono_str(m)
            if c.is_one():
                parts.append(ms)
            elif ms == "1":
                parts.append(f"[{c}]")
            else:
                parts.append(f"[{c}]*{ms}")
        return " + ".join(parts)

    def __repr__(self):
        return f"AlgebraElement({self})"


_CACHE: dict = {}


def algebra(lt: LieType | str) -> QuantumAlgebra:
    """Shared algebra instance per type (its memo tables only grow)."""
    lt = lie_type(lt)
    alg = _CACHE.get(lt)
    if alg is None:
        alg = _CACHE[lt] = QuantumAlgebra(lt)
    return alg


def combine(vectors: Iterable[tuple[RatFunc, AlgebraElement]], alg: QuantumAlgebra) -> AlgebraElement:
    out: dict = {}
    for c, v in vectors:
        if c:
            for m, x in v.terms.items():
                _acc(out, m, c * x)
    return AlgebraElement(alg, out)
