"""Coideal subalgebras, adjoint closures, invariants and central elements.

Everything here is exact linear algebra on top of :mod:`qsp_center.qalg`.
Supported pairs are AI in rank 1 and 2 and the diagonal pair over A1, all of
which have no black nodes, so the generators take the closed form

    B_i = y_i t_i + d_i x_p(i) t_p(i)^-1 t_i + s_i t_i.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .center_monoid import in_ptheta
from .lattice_core import (LieType, RootElt, Weight, cartan_data, height, inner_product, leq,
                           to_root, to_weight, w0_action, weyl_dim, zero_weight)
from .qalg import AlgebraElement, QuantumAlgebra, _acc, algebra
from .qfield import EchelonBasis, RatFunc, q_power, qint, solve_nullspace
from .symmetric_pairs import (PairId, SatakeDiagram, catalog, fixed_lattice, p_map,
                              restricted_height, theta_action)

__all__ = ["CoidealParams", "BPresentation", "ClosureSpace", "ModuleRealization",
           "CentralElement", "UnsupportedPair", "build_B", "adjoint_closure",
           "highest_weight_vectors", "in_gmt", "gmt_highest_weight_vectors",
           "in_coideal_span", "module_realization", "spherical_invariants", "central_basis",
           "product_structure_check", "search_weights", "supported_pairs"]

DEFAULT_CAP = 100


class UnsupportedPair(ValueError):
    pass


@dataclass(frozen=True)
class CoidealParams:
    d: dict = field(default_factory=dict)  # white node -> RatFunc, default 1
    s: dict = field(default_factory=dict)  # white node -> RatFunc, default 0

    def d_of(self, i: int) -> RatFunc:
        return RatFunc._coerce(self.d.get(i, 1))

    def s_of(self, i: int) -> RatFunc:
        return RatFunc._coerce(self.s.get(i, 0))


@dataclass
class BPresentation:
    alg: QuantumAlgebra
    sd: SatakeDiagram
    B: dict[int, AlgebraElement]
    torus: list[Weight]            # basis of the fixed lattice in P
    root_torus: list[Weight]       # basis of the fixed lattice in Q
    counit: dict[str, RatFunc]

    @property
    def generators(self) -> list[tuple[str, AlgebraElement]]:
        """Algebra generators of the extended coideal subalgebra."""
        out = [(f"B{i}", b) for i, b in sorted(self.B.items())]
        for k, lam in enumerate(self.torus):
            out.append((f"tau{k}", self.alg.tau(lam)))
            out.append((f"tau{k}^-1", self.alg.tau(-lam)))
        return out


def supported_pairs() -> list[PairId]:
    return [PairId("AI", 1), PairId("AI", 2), PairId("DIAGONAL", 1, None, "A")]


def _check_supported(sd: SatakeDiagram):
    for pid in supported_pairs():
        ref = catalog(pid)
        if (ref.lie_type, ref.black, ref.d_perm) == (sd.lie_type, sd.black, sd.d_perm):
            return
    raise UnsupportedPair(f"pair {sd.name or sd.lie_type} is not supported; "
                          "use AI with n <= 2 or DIAGONAL over A1")


def _root_fixed_lattice(sd: SatakeDiagram) -> list[Weight]:
    """Basis of {lambda in Q : Theta(lambda) = lambda}, as weights."""
    basis = fixed_lattice(sd)
    if not basis:
        return []
    # in rank one the Q-sublattice is the least multiple with integral root coordinates
    out = []
    for w in basis:
        k = 1
        while not to_root(k * w).is_integral():
            k += 1
        out.append(k * w)
    if len(out) > 1:
        raise NotImplementedError("root fixed lattice of rank > 1")
    return out


def build_B(sd: SatakeDiagram, params: CoidealParams | None = None) -> BPresentation:
    _check_supported(sd)
    params = params or CoidealParams()
    alg = algebra(sd.lie_type)
    p = p_map(sd)
    white = sd.white
    a = cartan_data(sd.lie_type).cartan_matrix
    out = {}
    for i in white:
        di, si = params.d_of(i), params.s_of(i)
        if not di:
            raise ValueError(f"d_{i} must be nonzero")
        if si and not (p[i] == i and all(a[i - 1][j - 1] == 0 for j in white if j != i)):
            raise ValueError(f"s_{i} must vanish for this pair")
        j = p[i]
        theta_part = alg.x(j) * alg.t(j, -1) * alg.t(i)
        out[i] = alg.y(i) * alg.t(i) + theta_part * di + alg.t(i) * si
    counit = {f"B{i}": params.s_of(i) for i in white}
    return BPresentation(alg, sd, out, fixed_lattice(sd), _root_fixed_lattice(sd), counit)


# -- adjoint closures ---------------------------------------------------------

@dataclass
class ClosureSpace:
    mu: Weight
    lam2mu: Weight
    basis: list[AlgebraElement]
    weights: list[tuple[int, ...]]   # left-adjoint weight of each basis vector

    @property
    def dim(self) -> int:
        return len(self.basis)


_CLOSURES: dict = {}


def adjoint_closure(mu: Weight, cap: int = DEFAULT_CAP) -> ClosureSpace:
    """Basis of (ad_r U) tau(2 mu), built from weight components."""
    key = (mu, cap)
    if key in _CLOSURES:
        return _CLOSURES[key]
    if not mu.is_dominant():
        raise ValueError("adjoint_closure needs a dominant weight")
    alg = algebra(mu.lie)
    expected = weyl_dim(mu) * weyl_dim(-w0_action(mu))
    if expected > cap:
        raise ValueError(f"closure of dimension {expected} exceeds the cap {cap}")
    start = alg.tau(2 * mu)
    eb = EchelonBasis()
    basis, weights = [], []
    queue = [start]
    while queue:
        v = queue.pop(0)
        for w, comp in v.weight_split().items():
            stored = eb.add(comp.terms)
            if stored is None:
                continue
            el = AlgebraElement(alg, stored)
            basis.append(el)
            weights.append(w)
            if len(basis) > expected:
                raise RuntimeError(f"closure of {mu} exceeds the predicted dimension {expected}")
            for i in range(1, alg.n + 1):
                queue.append(alg.ad("x", i, el))
                queue.append(alg.ad("y", i, el))
    if len(basis) != expected:
        raise RuntimeError(f"closure of {mu} has dimension {len(basis)}, expected {expected}")
    cs = ClosureSpace(mu, 2 * mu, basis, weights)
    _CLOSURES[key] = cs
    return cs


def _solve_combination(vectors: list[AlgebraElement], images: list[list[AlgebraElement]]):
    """Coefficient vectors c with sum_k c_k images[j][k] = 0 for every j."""
    rows: dict = {}
    for j, imgs in enumerate(images):
        for k, img in enumerate(imgs):
            for m, c in img.terms.items():
                rows.setdefault((j, m), {})[k] = c
    ncols = len(vectors)
    zero = RatFunc(0)
    mat = [[r.get(k, zero) for k in range(ncols)] for _, r in sorted(rows.items())]
    if not mat:
        return [[RatFunc(int(i == k)) for i in range(ncols)] for k in range(ncols)]
    return solve_nullspace(mat, ncols)


def _combine(alg, coeffs, vectors) -> AlgebraElement:
    out: dict = {}
    for c, v in zip(coeffs, vectors):
        if c:
            for m, x in v.terms.items():
                _acc(out, m, c * x)
    return AlgebraElement(alg, out)


def highest_weight_vectors(cs: ClosureSpace, lam: Weight) -> list[AlgebraElement]:
    """Vectors of right-adjoint weight lam (so in U_{-lam}) killed by every ad_r y_i."""
    alg = algebra(cs.mu.lie)
    r = to_root(lam)
    if not r.is_integral():
        return []
    target = tuple(-int(c) for c in r.coords)
    vecs = [b for b, w in zip(cs.basis, cs.weights) if w == target]
    if not vecs:
        return []
    images = [[alg.ad("y", i, v) for v in vecs] for i in range(1, alg.n + 1)]
    return [_combine(alg, c, vecs) for c in _solve_combination(vecs, images)]


def _gmt_monomial(sd: SatakeDiagram, alg: QuantumAlgebra, mono) -> bool:
    Y, lam, X = mono
    lt = alg.lie
    for k, e in enumerate(X):
        if e and any(v and (j + 1) not in sd.black for j, v in enumerate(alg.plus.weights[k])):
            return False
    rest = Weight(lt, lam) - to_weight(RootElt(lt, alg.minus.weight(Y)))
    return theta_action(sd, rest) == rest


def in_gmt(sd: SatakeDiagram, a: AlgebraElement) -> bool:
    """Membership in G^- M^+ T'_Theta, decided monomial by monomial.

    Y tau(lam) X qualifies when X only uses letters supported on black nodes
    and lam - wt(Y) is fixed by Theta.
    """
    return all(_gmt_monomial(sd, a.alg, m) for m in a.terms)


def gmt_highest_weight_vectors(sd: SatakeDiagram, cs: ClosureSpace,
                               lam: Weight) -> list[AlgebraElement]:
    """Highest weight vectors of weight lam that lie in G^- M^+ T'_Theta."""
    hw = highest_weight_vectors(cs, lam)
    if not hw:
        return []
    alg = hw[0].alg
    outside = [AlgebraElement(alg, {m: c for m, c in v.terms.items()
                                    if not _gmt_monomial(sd, alg, m)}) for v in hw]
    return [_combine(alg, c, hw) for c in _solve_combination(hw, [outside])]


# -- modules --------------------------------------------------------------------

@dataclass
class ModuleRealization:
    lie: LieType
    highest_weight: Weight
    weights: list[tuple[int, ...]]
    ops: dict[str, dict[int, dict[int, RatFunc]]]   # generator -> column -> {row: c}

    @property
    def dim(self) -> int:
        return len(self.weights)

    @property
    def matrices(self) -> dict[str, list[list[RatFunc]]]:
        """Dense matrices of every x_i, y_i, t_i on the weight basis."""
        alg = algebra(self.lie)
        return {name: self.matrix(g) for name, g in alg.generators().items()}

    def apply(self, name: str, vec: dict) -> dict:
        out: dict = {}
        op = self.ops[name]
        for j, c in vec.items():
            for i, m in op.get(j, {}).items():
                _acc(out, i, c * m)
        return out

    def apply_tau(self, lam, vec: dict) -> dict:
        out = {}
        lam = Weight(self.lie, tuple(lam))
        for j, c in vec.items():
            e = inner_product(lam, Weight(self.lie, self.weights[j]))
            if e.denominator != 1:
                raise ValueError("tau(lambda) needs fractional powers of q on this module")
            out[j] = c * q_power(int(e))
        return out

    def act(self, a: AlgebraElement, vec: dict) -> dict:
        alg = a.alg
        out: dict = {}
        for (Y, lam, X), c in a.terms.items():
            for wx, cx in alg.plus.expand(X).items():
                v = dict(vec)
                for g in reversed(wx):
                    v = self.apply(f"x{g + 1}", v)
                if not v:
                    continue
                v = self.apply_tau(lam, v)
                for wy, cy in alg.minus.expand(Y).items():
                    u = v
                    for g in reversed(wy):
                        u = self.apply(f"y{g + 1}", u)
                    for i, val in u.items():
                        _acc(out, i, c * cx * cy * val)
        return out

    def matrix(self, a: AlgebraElement) -> list[list[RatFunc]]:
        zero = RatFunc(0)
        cols = [self.act(a, {j: RatFunc(1)}) for j in range(self.dim)]
        return [[cols[j].get(i, zero) for j in range(self.dim)] for i in range(self.dim)]


def _a1_module(k: int) -> tuple[list, dict]:
    weights = [(k - 2 * j,) for j in range(k + 1)]
    x = {j: {j - 1: qint(k - j + 1)} for j in range(1, k + 1)}
    y = {j: {j + 1: qint(j + 1)} for j in range(k)}
    return weights, {"x1": x, "y1": y}


def _tensor(lt, m1, m2, alpha):
    """Tensor product of (weights, ops) via the coproduct."""
    w1, o1 = m1
    w2, o2 = m2
    n2 = len(w2)
    weights = [tuple(a + b for a, b in zip(u, v)) for u in w1 for v in w2]
    ops = {}
    for i in range(len(alpha)):
        xi, yi = f"x{i + 1}", f"y{i + 1}"

        def pair(wt, i=i):
            return int(inner_product(Weight(lt, alpha[i]), Weight(lt, wt)))

        x, y = {}, {}
        for a in range(len(w1)):
            for b in range(n2):
                col = a * n2 + b
                cx, cy = {}, {}
                # x (m (x) f) = x m (x) f + q^{(alpha_i, wt m)} m (x) x f
                for r, c in o1[xi].get(a, {}).items():
                    _acc(cx, r * n2 + b, c)
                for r, c in o2[xi].get(b, {}).items():
                    _acc(cx, a * n2 + r, c * q_power(pair(w1[a])))
                # y (m (x) f) = q^{-(alpha_i, wt f)} y m (x) f + m (x) y f
                for r, c in o1[yi].get(a, {}).items():
                    _acc(cy, r * n2 + b, c * q_power(-pair(w2[b])))
                for r, c in o2[yi].get(b, {}).items():
                    _acc(cy, a * n2 + r, c)
                if cx:
                    x[col] = cx
                if cy:
                    y[col] = cy
        ops[xi], ops[yi] = x, y
    return weights, ops


def _submodule(lt, ambient, hw_index, expected_dim):
    """Cyclic submodule generated by a highest weight vector, with its matrices."""
    weights, ops = ambient
    n = len(_alpha_list(lt))
    eb = EchelonBasis()
    basis = []
    queue = [{hw_index: RatFunc(1)}]
    wts = []
    while queue:
        v = queue.pop(0)
        stored = eb.add(v)
        if stored is None:
            continue
        basis.append(stored)
        wts.append(weights[next(iter(stored))])
        for i in range(n):
            img = _apply_ops(ops[f"y{i + 1}"], stored)
            if img:
                queue.append(img)
    if len(basis) != expected_dim:
        raise RuntimeError(f"submodule has dimension {len(basis)}, expected {expected_dim}")
    new_ops = {}
    for name, op in ops.items():
        cols = {}
        for k, b in enumerate(basis):
            img = _apply_ops(op, b)
            if not img:
                continue
            rest, coeffs = eb.reduce(img, track=True)
            assert not rest, "submodule not stable"
            col = {r: c for r, c in enumerate(coeffs) if c}
            if col:
                cols[k] = col
        new_ops[name] = cols
    return wts, new_ops


def _apply_ops(op, vec):
    out: dict = {}
    for j, c in vec.items():
        for i, m in op.get(j, {}).items():
            _acc(out, i, c * m)
    return out


def _alpha_list(lt: LieType):
    """Fundamental coordinates of each simple root."""
    a = cartan_data(lt).cartan_matrix
    return [tuple(a[i][j] for i in range(lt.rank)) for j in range(lt.rank)]


_A2_FUND = {
    # V(omega_1): v1 -> y1 -> v2 -> y2 -> v3;  V(omega_2): u1 -> y2 -> u2 -> y1 -> u3
    (1, 0): ([(1, 0), (-1, 1), (0, -1)],
             {"x1": {1: {0: RatFunc(1)}}, "x2": {2: {1: RatFunc(1)}},
              "y1": {0: {1: RatFunc(1)}}, "y2": {1: {2: RatFunc(1)}}}),
    (0, 1): ([(0, 1), (1, -1), (-1, 0)],
             {"x2": {1: {0: RatFunc(1)}}, "x1": {2: {1: RatFunc(1)}},
              "y2": {0: {1: RatFunc(1)}}, "y1": {1: {2: RatFunc(1)}}}),
}

_MODULES: dict = {}


def module_realization(lam: Weight, cap: int = DEFAULT_CAP) -> ModuleRealization:
    if not lam.is_dominant():
        raise ValueError("module_realization needs a dominant weight")
    key = (lam, cap)
    if key in _MODULES:
        return _MODULES[key]
    lt = lam.lie
    dim = weyl_dim(lam)
    if dim > cap:
        raise ValueError(f"module of dimension {dim} exceeds the cap {cap}")
    c = lam.coords
    if str(lt) == "A1":
        weights, ops = _a1_module(c[0])
    elif str(lt) == "A1xA1":
        w1, o1 = _a1_module(c[0])
        w2, o2 = _a1_module(c[1])
        n2 = len(w2)
        weights = [(u[0], v[0]) for u in w1 for v in w2]
        ops = {"x1": {}, "y1": {}, "x2": {}, "y2": {}}
        for a in range(len(w1)):
            for b in range(n2):
                col = a * n2 + b
                for name in ("x1", "y1"):
                    e = {r * n2 + b: v for r, v in o1[name].get(a, {}).items()}
                    if e:
                        ops[name][col] = e
                for name, src in (("x2", "x1"), ("y2", "y1")):
                    e = {a * n2 + r: v for r, v in o2[src].get(b, {}).items()}
                    if e:
                        ops[name][col] = e
    elif str(lt) == "A2":
        if not any(c):
            weights, ops = [(0, 0)], {g: {} for g in ("x1", "x2", "y1", "y2")}
        else:
            # peel one fundamental weight off and cut the tensor product down
            step = (1, 0) if c[0] else (0, 1)
            smaller = Weight(lt, (c[0] - step[0], c[1] - step[1]))
            fund = _A2_FUND[step]
            if not any(smaller.coords):
                weights, ops = fund
            else:
                base = module_realization(smaller, cap)
                amb = _tensor(lt, (base.weights, base.ops), fund, _alpha_list(lt))
                weights, ops = _submodule(lt, amb, 0, dim)
    else:
        raise UnsupportedPair(f"no module construction for type {lt}")
    mod = ModuleRealization(lt, lam, list(weights), ops)
    _MODULES[key] = mod
    return mod


def spherical_invariants(sd: SatakeDiagram, params: CoidealParams | None, lam: Weight,
                         cap: int = DEFAULT_CAP) -> list[dict]:
    """Basis of {v : b v = eps(b) v for the generators b of B}."""
    bp = build_B(sd, params)
    mod = module_realization(lam, cap)
    alg = bp.alg
    conds = []
    for i, b in sorted(bp.B.items()):
        conds.append(b - alg.scalar(bp.counit[f"B{i}"]))
    for lam_q in bp.root_torus:
        conds.append(alg.tau(lam_q) - alg.one())
    rows = []
    for cond in conds:
        rows.extend(mod.matrix(cond))
    if not rows:
        rows = [[RatFunc(0)] * mod.dim]
    sols = solve_nullspace(rows, mod.dim)
    return [{j: c for j, c in enumerate(v) if c} for v in sols]


# -- central elements -------------------------------------------------------------

@dataclass
class CentralElement:
    nu: Weight
    element: AlgebraElement
    top_weight: Weight   # gamma with the top restricted-height component in U_{-gamma}


def search_weights(mu: Weight) -> list[Weight]:
    """Dominant weights coordinate-wise below mu, together with those below in
    the dominance order, sorted by coordinates."""
    lt = mu.lie
    bound = 2 * sum(mu.coords) + 1
    out = set()
    for c in product(*(range(bound + 1) for _ in mu.coords)):
        w = Weight(lt, c)
        if all(a <= b for a, b in zip(c, mu.coords)) or leq(w, mu):
            out.add(w)
    return sorted(out, key=lambda w: w.coords)


def _span_words(bp: BPresentation, length: int) -> EchelonBasis:
    """Echelon basis of the span of words of length <= length in the generators."""
    alg = bp.alg
    gens = [g for _, g in bp.generators]
    eb = EchelonBasis()
    new = [eb.add(alg.one().terms)]
    for _ in range(length):
        nxt = []
        for v in new:
            ve = AlgebraElement(alg, v)
            for g in gens:
                stored = eb.add((g * ve).terms)
                if stored is not None:
                    nxt.append(stored)
        if not nxt:
            break
        new = nxt
    return eb


def in_coideal_span(bp: BPresentation, a: AlgebraElement, length: int) -> bool:
    """Whether a is a combination of words of length <= length in the generators."""
    return _span_words(bp, length).contains(a.terms)


def central_basis(sd: SatakeDiagram, params: CoidealParams | None, mu: Weight,
                  degree_bound: int | None = None, cap: int = DEFAULT_CAP) -> list[CentralElement]:
    """One central element per nu in P_Theta below mu, by exact elimination."""
    bp = build_B(sd, params)
    alg = bp.alg
    if not mu.is_dominant():
        raise ValueError("central_basis needs a dominant weight")
    if degree_bound is None:
        degree_bound = int(2 * height(2 * mu))
    weights = search_weights(mu)
    blocks = []
    for nu in weights:
        cs = adjoint_closure(nu, cap)
        blocks.append((nu, cs))
    # columns ordered by decreasing F-degree of the block, then by weight
    blocks.sort(key=lambda b: (-height(2 * b[0]), tuple(-c for c in b[0].coords)))
    basis, owner = [], []
    for nu, cs in blocks:
        basis.extend(cs.basis)
        owner.extend([nu] * cs.dim)

    # 1. centralizer of the generators inside W
    gens = [g for _, g in bp.generators]
    images = [[v * g - g * v for v in basis] for g in gens]
    cent = _solve_combination(basis, images)
    zs = [_combine(alg, c, basis) for c in cent]

    # 2. intersect with the span of words in the generators
    span = _span_words(bp, degree_bound)
    resid = [AlgebraElement(alg, span.reduce(z.terms)) for z in zs]
    inside = _solve_combination(zs, [resid])
    coords = []
    for c in inside:
        coords.append([sum((cj * cent[j][k] for j, cj in enumerate(c) if cj), RatFunc(0))
                       for k in range(len(basis))])

    # 3. reduced row echelon form in block order; pivots identify nu
    rows = _rref(coords)
    found = []
    for row in rows:
        piv = next(k for k, v in enumerate(row) if v)
        found.append((owner[piv], row))
    expected = [nu for nu in weights if in_ptheta(sd, nu)]
    got = sorted((nu for nu, _ in found), key=lambda w: w.coords)
    if got != expected:
        raise RuntimeError(f"central elements indexed by {[w.coords for w in got]}, "
                           f"expected {[w.coords for w in expected]}")
    out = []
    for nu, row in sorted(found, key=lambda f: f[0].coords):
        el = _combine(alg, row, basis)
        top = el.top_component("Ftheta", sd)
        el = el * top.terms[min(top.terms)].inverse()
        out.append(CentralElement(nu, el, _top_weight(sd, el)))
    return out


def _rref(rows: list[list[RatFunc]]) -> list[list[RatFunc]]:
    rows = [list(r) for r in rows if any(r)]
    if not rows:
        return []
    ncols = len(rows[0])
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        p = rows[r][c]
        rows[r] = [v / p for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        r += 1
        if r == len(rows):
            break
    return rows[:r]


def _top_weight(sd: SatakeDiagram, el: AlgebraElement) -> Weight:
    """gamma maximizing the restricted height over components in U_{-gamma};
    raises if the maximum is not attained by a single component."""
    lt = sd.lie_type
    best, arg, ties = None, None, 0
    for w in el.weight_split():
        gamma = to_weight(RootElt(lt, tuple(-c for c in w)))
        h = restricted_height(sd, gamma)
        if best is None or h > best:
            best, arg, ties = h, w, 1
        elif h == best:
            ties += 1
    if ties != 1:
        raise RuntimeError("top restricted-height component is not unique")
    return to_weight(RootElt(lt, tuple(-c for c in arg)))


def twice_tilde(sd: SatakeDiagram, mu: Weight) -> Weight:
    """2 mu~ = mu - Theta(mu)."""
    return mu - theta_action(sd, mu)


def product_structure_check(sd: SatakeDiagram, params: CoidealParams | None, mu: Weight,
                            eta: Weight, degree_bound: int | None = None) -> dict:
    if not (in_ptheta(sd, mu) and in_ptheta(sd, eta)):
        raise ValueError("both weights must lie in P_Theta")
    total = mu + eta
    elems = {c.nu: c.element for c in central_basis(sd, params, total, degree_bound)}
    zero = zero_weight(sd.lie_type)
    d_mu, d_eta, d_sum = elems[mu], elems[eta], elems[total]
    prod = d_mu * d_eta
    target = restricted_height(sd, 2 * total)
    top_p = prod.top_component("Ftheta", sd)
    top_s = d_sum.top_component("Ftheta", sd)
    m = min(top_s.terms)
    a = top_p.terms.get(m, RatFunc(0)) / top_s.terms[m]
    rest = prod - d_sum * a
    drop = rest.filter_degree("Ftheta", sd) if rest else None
    ok = bool(a) and (drop is None or drop < target) and prod.filter_degree("Ftheta", sd) == target
    return {"mu": list(mu.coords), "eta": list(eta.coords), "a": str(a),
            "degree": str(target), "remainder_degree": None if drop is None else str(drop),
            "pass": ok, "trivial": mu == zero or eta == zero}
