"""The field Q(q) of rational functions with integer coefficients.

Values are immutable and kept in a canonical form, so equality is structural:

* the denominator is an ordinary polynomial with nonzero constant term and
  positive leading coefficient;
* any power of q lives in the (Laurent) numerator;
* numerator and denominator are coprime, integer contents included.

The gcd and cofactor computation is delegated to sympy's dense polynomial
routines over ZZ.  Linear algebra (nullspace, rank, incremental echelon
bases) is at the bottom of the module.
"""

from __future__ import annotations

import re
from functools import reduce
from math import gcd
from typing import Hashable, Iterable, Sequence

from sympy.polys.domains import ZZ
from sympy.polys.euclidtools import dup_inner_gcd, dup_lcm

__all__ = ["LaurentPoly", "RatFunc", "q", "q_power", "qint", "parse_ratfunc",
           "solve_nullspace", "rank", "EchelonBasis", "GRAMMAR"]

GRAMMAR = "poly ::= term (('+'|'-') term)*; term ::= int? ('q' ('^' int)?)?; ratfunc ::= poly ('/' poly)?"


def _trim(low: int, c: Sequence[int]) -> tuple[int, tuple[int, ...]]:
    i, j = 0, len(c)
    while i < j and c[i] == 0:
        i += 1
    while j > i and c[j - 1] == 0:
        j -= 1
    if i == j:
        return 0, ()
    return low + i, tuple(c[i:j])


def _add(la, a, lb, b):
    if not a:
        return lb, b
    if not b:
        return la, a
    low = min(la, lb)
    hi = max(la + len(a), lb + len(b))
    out = [0] * (hi - low)
    for k, v in enumerate(a):
        out[la - low + k] += v
    for k, v in enumerate(b):
        out[lb - low + k] += v
    return _trim(low, out)


def _mul(la, a, lb, b):
    if not a or not b:
        return 0, ()
    if len(a) == 1:
        v = a[0]
        return la + lb, tuple(v * x for x in b)
    if len(b) == 1:
        v = b[0]
        return la + lb, tuple(v * x for x in a)
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return la + lb, tuple(out)


def _content(c: Iterable[int]) -> int:
    return reduce(gcd, c, 0)


class LaurentPoly:
    """Integer Laurent polynomial sum_k c_k q^(low+k), trimmed."""

    __slots__ = ("low", "coeffs")

    def __init__(self, coeffs: Sequence[int] = (), low: int = 0):
        self.low, self.coeffs = _trim(low, [int(x) for x in coeffs])

    @classmethod
    def _raw(cls, low, coeffs):
        obj = object.__new__(cls)
        obj.low, obj.coeffs = low, coeffs
        return obj

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def high(self) -> int:
        return self.low + len(self.coeffs) - 1

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly((other,))
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.low == other.low and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.low, self.coeffs))

    def __add__(self, other):
        return LaurentPoly._raw(*_add(self.low, self.coeffs, other.low, other.coeffs))

    def __neg__(self):
        return LaurentPoly._raw(self.low, tuple(-x for x in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        return LaurentPoly._raw(*_mul(self.low, self.coeffs, other.low, other.coeffs))

    def terms(self) -> list[tuple[int, int]]:
        """(exponent, coefficient) pairs, highest exponent first."""
        return [(self.low + k, c) for k, c in reversed(list(enumerate(self.coeffs))) if c]

    def __str__(self):
        return _poly_str(self.terms())

    def __repr__(self):
        return f"LaurentPoly({self})"


def _poly_str(terms) -> str:
    if not terms:
        return "0"
    parts = []
    for e, c in terms:
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if e == 0:
            body = str(a)
        else:
            qs = "q" if e == 1 else f"q^{e}"
            body = qs if a == 1 else f"{a}{qs}"
        parts.append((sign, body))
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        out += sign + body
    return out


def _canonical(nl, nc, dl, dc):
    """Canonical (num_low, num, den) from a Laurent fraction."""
    if not dc:
        raise ZeroDivisionError("rational function with zero denominator")
    if not nc:
        return 0, (), (1,)
    nl -= dl
    if len(dc) == 1:
        g = gcd(_content(nc), dc[0])
        if dc[0] < 0:
            g = -g
        if g != 1:
            nc = tuple(x // g for x in nc)
        return nl, nc, (dc[0] // g,)
    # sympy's dense format lists the leading coefficient first
    h, cf, cg = dup_inner_gcd([ZZ(x) for x in reversed(nc)],
                              [ZZ(x) for x in reversed(dc)], ZZ)
    if cg[0] < 0:
        cf = [-x for x in cf]
        cg = [-x for x in cg]
    num = tuple(int(x) for x in reversed(cf))
    den = tuple(int(x) for x in reversed(cg))
    nl2, num = _trim(nl, num)
    # the denominator keeps a nonzero constant term since q never divides it
    return nl2, num, den


class RatFunc:
    """Element of Q(q) in canonical form; use ``q``, ``RatFunc(n)`` or parsing."""

    __slots__ = ("nlow", "num", "den", "_hash")

    def __init__(self, value: int | LaurentPoly | RatFunc = 0, den: LaurentPoly | None = None):
        if isinstance(value, RatFunc) and den is None:
            self.nlow, self.num, self.den = value.nlow, value.num, value.den
        else:
            if isinstance(value, int):
                value = LaurentPoly((value,))
            if den is None:
                self.nlow, self.num, self.den = value.low, value.coeffs, (1,)
                if self.num:
                    self.nlow, self.num, self.den = _canonical(self.nlow, self.num, 0, (1,))
            else:
                self.nlow, self.num, self.den = _canonical(value.low, value.coeffs,
                                                           den.low, den.coeffs)
        self._hash = None

    @classmethod
    def _raw(cls, nlow, num, den):
        obj = object.__new__(cls)
        obj.nlow, obj.num, obj.den, obj._hash = nlow, num, den, None
        return obj

    @classmethod
    def _make(cls, nl, nc, dl, dc):
        if len(dc) == 1 and dc[0] == 1:
            nl, nc = _trim(nl - dl, nc)
            return cls._raw(nl, nc, (1,))
        return cls._raw(*_canonical(nl, nc, dl, dc))

    # inspection -------------------------------------------------------
    @property
    def numerator(self) -> LaurentPoly:
        return LaurentPoly._raw(self.nlow, self.num)

    @property
    def denominator(self) -> LaurentPoly:
        return LaurentPoly._raw(0, self.den)

    def is_zero(self) -> bool:
        return not self.num

    def __bool__(self):
        return bool(self.num)

    def is_laurent(self) -> bool:
        return self.den == (1,)

    def is_one(self) -> bool:
        return self.den == (1,) and self.nlow == 0 and self.num == (1,)

    def is_monomial(self) -> bool:
        """True for c*q^k."""
        return self.den == (1,) and len(self.num) == 1

    # arithmetic -------------------------------------------------------
    @staticmethod
    def _coerce(x):
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, int):
            return RatFunc._raw(0, (x,) if x else (), (1,))
        if isinstance(x, LaurentPoly):
            return RatFunc._raw(x.low, x.coeffs, (1,))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other.num:
            return self
        if not self.num:
            return other
        if self.den == other.den:
            nl, nc = _add(self.nlow, self.num, other.nlow, other.num)
            if self.den == (1,):
                return RatFunc._raw(nl, nc, (1,))
            return RatFunc._make(nl, nc, 0, self.den)
        al, a = _mul(self.nlow, self.num, 0, other.den)
        bl, b = _mul(other.nlow, other.num, 0, self.den)
        nl, nc = _add(al, a, bl, b)
        _, dc = _mul(0, self.den, 0, other.den)
        return RatFunc._make(nl, nc, 0, dc)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc._raw(self.nlow, tuple(-x for x in self.num), self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.num or not other.num:
            return RatFunc._raw(0, (), (1,))
        if self.den == (1,) and other.den == (1,):
            nl, nc = _mul(self.nlow, self.num, other.nlow, other.num)
            return RatFunc._raw(nl, nc, (1,))
        nl, nc = _mul(self.nlow, self.num, other.nlow, other.num)
        _, dc = _mul(0, self.den, 0, other.den)
        return RatFunc._make(nl, nc, 0, dc)

    __rmul__ = __mul__

    def inverse(self) -> RatFunc:
        if not self.num:
            raise ZeroDivisionError("division by the zero rational function")
        return RatFunc._make(0, self.den, self.nlow, self.num)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other.num:
            raise ZeroDivisionError("division by the zero rational function")
        if len(other.num) == 1 and other.den == (1,) and other.num[0] in (1, -1):
            s = other.num[0]
            return RatFunc._raw(self.nlow - other.nlow,
                                self.num if s == 1 else tuple(-x for x in self.num), self.den)
        nl, nc = _mul(self.nlow, self.num, 0, other.den)
        _, dc = _mul(0, self.den, 0, other.num)
        return RatFunc._make(nl, nc, other.nlow, dc)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = RatFunc(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # comparison and display ------------------------------------------
    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.nlow == other.nlow and self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nlow, self.num, self.den))
        return self._hash

    def __str__(self):
        top = _poly_str(self.numerator.terms())
        if self.den == (1,):
            return top
        return f"{top}/{_poly_str(self.denominator.terms())}"

    def __repr__(self):
        return f"RatFunc({self})"

    def sort_key(self):
        return (self.nlow, self.num, self.den)


def q_power(k: int) -> RatFunc:
    return RatFunc._raw(k, (1,), (1,))


q = q_power(1)


def qint(n: int, d: int = 1) -> RatFunc:
    """Quantum integer [n]_{q^d} = (q^{dn} - q^{-dn})/(q^d - q^{-d})."""
    if n == 0:
        return RatFunc(0)
    sign = 1 if n > 0 else -1
    n = abs(n)
    # q^{-d(n-1)} + q^{-d(n-3)} + ... + q^{d(n-1)}
    c = [0] * (2 * d * (n - 1) + 1)
    for k in range(n):
        c[2 * d * k] = sign
    return RatFunc._raw(-d * (n - 1), tuple(c), (1,))


# parsing ---------------------------------------------------------------
_TERM = re.compile(r"\s*([+-]?)\s*(\d*)\s*(\*?\s*q\s*(?:\^\s*([+-]?\d+))?)?\s*")


def _parse_poly(text: str) -> LaurentPoly:
    s = text.strip()
    if s.startswith("(") and s.endswith(")"):
        s = s[1:-1]
    if not s:
        raise ValueError("empty polynomial")
    pos = 0
    acc = LaurentPoly()
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse {text!r}")
        sign, digits, qpart, exp = m.groups()
        if not first and not sign:
            raise ValueError(f"missing operator in {text!r}")
        if not digits and not qpart:
            raise ValueError(f"empty term in {text!r}")
        coeff = int(digits) if digits else 1
        if sign == "-":
            coeff = -coeff
        e = 0
        if qpart:
            e = int(exp) if exp is not None else 1
        acc = acc + LaurentPoly((coeff,), e)
        pos = m.end()
        first = False
    return acc


def parse_ratfunc(text: str) -> RatFunc:
    """Parse a literal of the form ``poly`` or ``poly/poly``.

    Grammar: poly ::= term (('+'|'-') term)*; term ::= int? ('q' ('^' int)?)?;
    ratfunc ::= poly ('/' poly)?.  Parentheses around a poly are tolerated.
    """
    try:
        parts = text.split("/")
        if len(parts) > 2:
            raise ValueError("more than one '/'")
        num = _parse_poly(parts[0])
        if len(parts) == 1:
            return RatFunc(num)
        den = _parse_poly(parts[1])
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        return RatFunc(num, den)
    except ValueError as exc:
        raise ValueError(f"{exc}; expected {GRAMMAR}") from None


# linear algebra ----------------------------------------------------------
def _lcm_den(values: Iterable[RatFunc]) -> LaurentPoly:
    dens = {v.den for v in values if v.num and v.den != (1,)}
    if not dens:
        return LaurentPoly((1,))
    acc = [ZZ(1)]
    for d in dens:
        acc = dup_lcm(acc, [ZZ(x) for x in reversed(d)], ZZ)
    return LaurentPoly([int(x) for x in reversed(acc)])


def _exquo(la, a, lb, b):
    """Exact quotient of Laurent polynomials (coefficient tuples, low first)."""
    if len(b) == 1:
        d = b[0]
        out = []
        for x in a:
            qt, rem = divmod(x, d)
            if rem:
                raise ArithmeticError("Bareiss division not exact")
            out.append(qt)
        return la - lb, tuple(out)
    # long division from the top coefficient down
    rem = list(a)
    n = len(b)
    quo = [0] * (len(a) - n + 1)
    if len(quo) <= 0:
        raise ArithmeticError("Bareiss division not exact")
    top = b[-1]
    for k in range(len(quo) - 1, -1, -1):
        c, r = divmod(rem[k + n - 1], top)
        if r:
            raise ArithmeticError("Bareiss division not exact")
        quo[k] = c
        if c:
            for j, y in enumerate(b):
                rem[k + j] -= c * y
    if any(rem):
        raise ArithmeticError("Bareiss division not exact")
    return _trim(la - lb, quo)


def _echelon_ff(matrix: Sequence[Sequence[RatFunc]]):
    """Fraction-free (Bareiss) row echelon form.

    Rows are first scaled to Laurent polynomials; that changes neither rank
    nor nullspace.  Elimination then runs on raw (low, coeffs) pairs with
    exact division.  Returns the echelon rows and pivot columns.
    """
    rows = []
    for row in matrix:
        row = [RatFunc._coerce(x) for x in row]
        if not any(row):
            continue
        m = RatFunc(_lcm_den(row))
        rows.append([((v := x * m).nlow, v.num) for x in row])
    if not rows:
        return [], []
    ncols = len(rows[0])
    prev = (0, (1,))
    pivots = []
    r = 0
    for c in range(ncols):
        if r == len(rows):
            break
        cand = [i for i in range(r, len(rows)) if rows[i][c][1]]
        if not cand:
            continue
        # smallest pivot keeps intermediate degrees down
        i = min(cand, key=lambda k: (len(rows[k][c][1]), rows[k][c][1], rows[k][c][0]))
        rows[r], rows[i] = rows[i], rows[r]
        pl, pc = rows[r][c]
        prow = rows[r]
        unit = prev == (0, (1,))
        for k in range(r + 1, len(rows)):
            rk = rows[k]
            fl, fc = rk[c]
            for j in range(c + 1, ncols):
                vl, vc = _mul(pl, pc, *rk[j])
                if fc and prow[j][1]:
                    ml, mc = _mul(fl, fc, *prow[j])
                    vl, vc = _add(vl, vc, ml, tuple(-x for x in mc))
                if vc and not unit:
                    vl, vc = _exquo(vl, vc, *prev)
                rk[j] = (vl, vc)
            rk[c] = (0, ())
        prev = (pl, pc)
        pivots.append(c)
        r += 1
    out = [[RatFunc._raw(*_trim(l, cs), (1,)) if cs else RatFunc(0) for l, cs in row]
           for row in rows[:r]]
    return out, pivots


def rank(matrix: Sequence[Sequence[RatFunc]]) -> int:
    return len(_echelon_ff(matrix)[1])


def solve_nullspace(matrix: Sequence[Sequence[RatFunc]], ncols: int | None = None) -> list[list[RatFunc]]:
    """Basis of {v : M v = 0}, one vector per free column (that entry is 1)."""
    if ncols is None:
        if not matrix:
            raise ValueError("ncols required for an empty matrix")
        ncols = len(matrix[0])
    rows, pivots = _echelon_ff(matrix)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [RatFunc(0)] * ncols
        v[f] = RatFunc(1)
        for r in range(len(pivots) - 1, -1, -1):
            p = pivots[r]
            row = rows[r]
            s = RatFunc(0)
            for j in range(p + 1, ncols):
                if row[j] and v[j]:
                    s = s + row[j] * v[j]
            if s:
                v[p] = -s / row[p]
        basis.append(v)
    return basis


class EchelonBasis:
    """Incrementally built basis of sparse vectors {key: RatFunc}.

    Every stored vector is monic at its pivot key and vanishes at the pivots
    of all vectors stored before it, so reduction in insertion order works.
    """

    def __init__(self, key_order=None):
        self.vectors: list[dict] = []
        self.pivots: list[Hashable] = []
        self._key = key_order

    def __len__(self):
        return len(self.vectors)

    def reduce(self, vec: dict, track: bool = False):
        v = {k: c for k, c in vec.items() if c}
        coeffs = []
        for p, b in zip(self.pivots, self.vectors):
            c = v.get(p)
            if c is None:
                coeffs.append(RatFunc(0))
                continue
            coeffs.append(c)
            for k, bc in b.items():
                nv = v.get(k, RatFunc(0)) - c * bc
                if nv:
                    v[k] = nv
                else:
                    v.pop(k, None)
        return (v, coeffs) if track else v

    def add(self, vec: dict) -> dict | None:
        """Insert vec if independent; return the stored (normalized) vector."""
        v = self.reduce(vec)
        if not v:
            return None
        p = max(v, key=self._key) if self._key else max(v)
        c = v[p]
        v = {k: x / c for k, x in v.items()}
        self.vectors.append(v)
        self.pivots.append(p)
        return v

    def contains(self, vec: dict) -> bool:
        return not self.reduce(vec)
