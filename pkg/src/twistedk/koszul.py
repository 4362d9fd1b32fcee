"""Nonequivariant Adams operations through Koszul resolutions.

The type-A Verlinde ideal is generated by a regular sequence y_1, ..., y_r, so
the Koszul complex on it resolves R_k(G) over R(G).  Tensoring with Z (taking
dimensions) gives the integer Koszul complex on (dim y_1, ..., dim y_r) whose
homology is an exterior algebra over Z_c on r - 1 generators eta_i, realized
as kernel vectors of the dimension row map.

psi^ell is carried to a chain map: in degree 0 by the monomial lift of the
equivariant operation, in degree 1 by solving sum_j m_ij y_j^(ell n) =
psi0(y_i^(n)) in R(G).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb, gcd
from typing import Dict, List, Optional, Sequence, Tuple

from . import intmat
from .adams import adams_lift
from .repring import RepRingElement, multiply, sum_elements, weyl_dimension
from .rootsys import RootSystem, Weight
from .verlinde import (
    TwistedContext,
    VerlindeError,
    ideal_generators,
    weight_level,
    weights_up_to_level,
)


class LiftError(RuntimeError):
    """The chain-map solver found no lift within the support bound."""


@dataclass(frozen=True)
class KoszulContext:
    ctx: TwistedContext
    generators: Tuple[RepRingElement, ...]
    dims: Tuple[int, ...]
    c: int

    @classmethod
    def of(cls, ctx: TwistedContext) -> "KoszulContext":
        gens = tuple(ideal_generators(ctx))
        dims = tuple(weyl_dimension(ctx.rs, y) for y in gens)
        c = 0
        for d in dims:
            c = gcd(c, d)
        return cls(ctx, gens, dims, c)

    @property
    def rs(self) -> RootSystem:
        return self.ctx.rs

    @property
    def rank(self) -> int:
        return len(self.generators)


@dataclass(frozen=True)
class EtaBasis:
    level: int
    dims: Tuple[int, ...]
    kernel_basis: Tuple[Tuple[int, ...], ...]

    def coordinates(self, v: Sequence[int]) -> List[int]:
        """Exact coordinates of a kernel vector in this basis."""
        sol = intmat.solve_integer(intmat.transpose(self.kernel_basis), list(v), len(self.kernel_basis))
        if sol is None:
            raise ValueError(f"{list(v)} is not in the kernel of {list(self.dims)}")
        return sol[0]


@dataclass(frozen=True)
class ChainMapLift:
    source: KoszulContext
    target: KoszulContext
    ell: int
    psi0_images: Tuple[RepRingElement, ...]
    psi1_matrix: Tuple[Tuple[RepRingElement, ...], ...]
    augmented: Tuple[Tuple[int, ...], ...]
    syzygies: Tuple[Tuple[Tuple[RepRingElement, ...], ...], ...] = field(default=(), compare=False)
    support_bounds: Tuple[int, ...] = field(default=(), compare=False)

    def verify(self) -> None:
        rs = self.source.rs
        for i, (row, img) in enumerate(zip(self.psi1_matrix, self.psi0_images)):
            got = sum_elements(multiply(rs, m, y) for m, y in zip(row, self.target.generators))
            if got != img:
                raise AssertionError(f"chain map row {i} reproduces {got}, expected {img}")
        # degree 0 after augmentation is multiplication by ell^{|R_+|}
        scale = self.ell ** rs.num_positive_roots
        for i, row in enumerate(self.augmented):
            lhs = sum(a * d for a, d in zip(row, self.target.dims))
            if lhs != scale * self.source.dims[i]:
                raise AssertionError(f"augmented row {i} does not commute with the dimension maps")


def _combine(coeffs: Sequence[int], cols: Sequence[Tuple[int, Weight]], r: int) -> Tuple[RepRingElement, ...]:
    parts: List[Dict[Weight, int]] = [dict() for _ in range(r)]
    for x, (j, mu) in zip(coeffs, cols):
        if x:
            parts[j][mu] = parts[j].get(mu, 0) + x
    return tuple(RepRingElement._from_clean(p) for p in parts)


def _solve(rs: RootSystem, target: RepRingElement, gens: Sequence[RepRingElement], support_bound: int,
           cache: Optional[dict] = None):
    if not gens:
        raise ValueError("express_in_ideal needs at least one generator")
    r = len(gens)
    cols = [(j, mu) for j in range(r) for mu in weights_up_to_level(rs, support_bound)]
    if cache is None:
        cache = {}
    products = []
    for j, mu in cols:
        if (j, mu) not in cache:
            cache[j, mu] = multiply(rs, RepRingElement.irreducible(mu), gens[j])
        products.append(cache[j, mu])
    rows = sorted(set(target.terms).union(*(p.terms for p in products)))
    index = {w: i for i, w in enumerate(rows)}
    a = [[0] * len(cols) for _ in rows]
    for k, p in enumerate(products):
        for w, c in p.terms.items():
            a[index[w]][k] = c
    b = [target.terms.get(w, 0) for w in rows]
    sol = intmat.solve_integer(a, b, len(cols))
    if sol is None:
        return None, []
    x, ker = sol
    m = _combine(x, cols, r)
    if sum_elements(multiply(rs, mj, y) for mj, y in zip(m, gens)) != target:
        raise AssertionError("ideal solver returned a non-solution")
    return m, [_combine(v, cols, r) for v in ker]


def express_in_ideal(rs: RootSystem, target: RepRingElement, gens: Sequence[RepRingElement],
                     support_bound: int) -> Optional[List[RepRingElement]]:
    """Coefficients m_j with sum_j m_j y_j = target, supported on weights of level <= bound.

    Among all solutions in the bound the one reduced modulo the HNF syzygy
    lattice is returned; ``None`` when there is none.
    """
    m, _ = _solve(rs, target, gens, support_bound)
    return None if m is None else list(m)


def ideal_syzygies(rs: RootSystem, gens: Sequence[RepRingElement], support_bound: int
                   ) -> List[Tuple[RepRingElement, ...]]:
    """Basis of the syzygies sum_j s_j y_j = 0 with support level <= bound."""
    return _solve(rs, RepRingElement(), gens, support_bound)[1]


def _least_bound(solve, lo: int, hi: int):
    """Smallest feasible bound in [lo, hi]; feasibility is monotone in the bound.

    Gallops upwards from ``lo`` and then bisects, so the result equals a linear
    scan at logarithmic cost.
    """
    bad, step, b = lo - 1, 1, lo
    while True:
        b = min(b, hi)
        m, ker = solve(b)
        if m is not None:
            break
        if b == hi:
            return hi, None, []
        bad, b, step = b, b + step, 2 * step
    good, best = b, (m, ker)
    while good - bad > 1:
        mid = (good + bad) // 2
        m, ker = solve(mid)
        if m is None:
            bad = mid
        else:
            good, best = mid, (m, ker)
    return good, best[0], best[1]


def lift_chain_map(source: KoszulContext, target: KoszulContext, ell: int,
                   support_bound: Optional[int] = None, max_bound: Optional[int] = None) -> ChainMapLift:
    """Lift psi^ell to degrees 0 and 1 of the Koszul resolutions.

    Without ``support_bound`` the bound is searched upwards from the smallest
    level that can possibly work, stopping at target level plus the largest
    generator level (or ``max_bound``).
    """
    rs = source.rs
    if target.rs is not rs:
        raise VerlindeError("Koszul contexts over different root systems")
    if ell == 0:
        raise VerlindeError("psi^0 = 0 needs no chain map")
    if abs(target.ctx.n) != abs(ell * source.ctx.n):
        raise VerlindeError(f"target twist {target.ctx.n} is not ell * n = {ell * source.ctx.n}")
    gen_level = max(r.max_level(rs) for r in target.generators)
    images, rows, syz, bounds = [], [], [], []
    cache: dict = {}
    for y in source.generators:
        img = adams_lift(rs, ell, y)
        tlev = max(weight_level(rs, mu) for mu in img.terms)
        if support_bound is not None:
            m, ker = _solve(rs, img, target.generators, support_bound, cache)
            bound = support_bound
        else:
            lo = max(0, tlev - int(gen_level))
            hi = max_bound if max_bound is not None else tlev + int(gen_level)
            bound, m, ker = _least_bound(lambda b: _solve(rs, img, target.generators, b, cache), lo, hi)
        if m is None:
            raise LiftError(f"no chain-map lift of psi^{ell}({y}) within support bound "
                            f"{bound}; increase support_bound")
        images.append(img)
        rows.append(m)
        syz.append(tuple(ker))
        bounds.append(bound)
    aug = tuple(tuple(weyl_dimension(rs, m) for m in row) for row in rows)
    lift = ChainMapLift(source, target, ell, tuple(images), tuple(rows), aug, tuple(syz), tuple(bounds))
    lift.verify()
    return lift


def koszul_boundary(dims: Sequence[int], d: int) -> List[List[int]]:
    """Boundary C_d -> C_{d-1} of the integer Koszul complex, C_d = wedge^d Z^r.

    Rows index d-subsets (lexicographic), so a chain v maps to v @ D.
    """
    r = len(dims)
    src = list(combinations(range(r), d))
    dst = {s: i for i, s in enumerate(combinations(range(r), d - 1))}
    out = [[0] * len(dst) for _ in src]
    for i, s in enumerate(src):
        for pos, j in enumerate(s):
            out[i][dst[s[:pos] + s[pos + 1:]]] += (-1) ** pos * dims[j]
    return out


@dataclass(frozen=True)
class KoszulHomology:
    dims: Tuple[int, ...]
    c: int
    generators: int
    torsion: Tuple[Tuple[int, ...], ...]   # nonunit invariant factors of H_d, d = 0..r
    free_ranks: Tuple[int, ...]

    @property
    def orders(self) -> Tuple[int, ...]:
        out = []
        for t, f in zip(self.torsion, self.free_ranks):
            if f:
                out.append(0)
                continue
            o = 1
            for e in t:
                o *= e
            out.append(o)
        return tuple(out)

    def predicted_orders(self) -> Tuple[int, ...]:
        return tuple(self.c ** comb(self.generators, d) for d in range(len(self.dims) + 1))

    def matches_exterior_algebra(self) -> bool:
        """H_d = (Z_c)^binom(r-1, d) as groups, for every d."""
        if any(self.free_ranks):
            return False
        for d, t in enumerate(self.torsion):
            want = () if self.c == 1 else (self.c,) * comb(self.generators, d)
            if t != want:
                return False
        return True


def koszul_homology(dims: Sequence[int]) -> KoszulHomology:
    """Homology of the integer Koszul complex on ``dims`` via Smith normal form."""
    dims = tuple(int(d) for d in dims)
    if not dims or any(d <= 0 for d in dims):
        raise ValueError(f"dims must be a nonempty list of positive integers, got {list(dims)}")
    r = len(dims)
    c = 0
    for d in dims:
        c = gcd(c, d)
    bds = {d: koszul_boundary(dims, d) for d in range(1, r + 1)}
    ranks = {d: intmat.rank(bds[d], comb(r, d - 1)) for d in bds}
    ranks[0] = ranks[r + 1] = 0
    torsion, free = [], []
    for d in range(r + 1):
        ker = comb(r, d) - ranks[d]
        free.append(ker - ranks[d + 1])
        inv = intmat.smith_invariants(bds[d + 1], comb(r, d)) if d < r else []
        torsion.append(tuple(e for e in inv if e != 1))
    return KoszulHomology(dims, c, r - 1, tuple(torsion), tuple(free))


def eta_basis(kctx) -> EtaBasis:
    """HNF basis of the kernel of (dim y_1, ..., dim y_r): Z^r -> Z."""
    if isinstance(kctx, KoszulContext):
        dims, level = kctx.dims, kctx.ctx.n
    else:
        dims, level = tuple(kctx), 0
    if len(dims) < 2:
        raise VerlindeError("rank 1: there are no exterior generators, only the coefficient group")
    ker = intmat.kernel_basis([list(dims)], len(dims))
    return EtaBasis(level, tuple(dims), tuple(tuple(v) for v in ker))


@dataclass(frozen=True)
class EtaAction:
    """psi^ell(eta_i^(n)) = sum_j matrix[i][j] eta_j^(ell n), entries mod ``modulus``."""

    ell: int
    source: EtaBasis
    target: EtaBasis
    matrix: Tuple[Tuple[int, ...], ...]
    modulus: int
    images: Tuple[Tuple[int, ...], ...]   # raw augmented images of the source basis vectors


def adams_on_generators(source: KoszulContext, target: KoszulContext, ell: int,
                        lift: Optional[ChainMapLift] = None, **lift_kw) -> EtaAction:
    """Action of psi^ell on the exterior generators, reduced mod c(G, ell n)."""
    if lift is None:
        lift = lift_chain_map(source, target, ell, **lift_kw)
    eb_src, eb_tgt = eta_basis(source), eta_basis(target)
    mat, images = [], []
    for v in eb_src.kernel_basis:
        w = intmat.matmul([list(v)], [list(r) for r in lift.augmented])[0]
        if sum(a * d for a, d in zip(w, target.dims)):
            raise AssertionError(f"image {w} of eta vector {list(v)} leaves the kernel of {list(target.dims)}")
        coords = eb_tgt.coordinates(w)
        images.append(tuple(w))
        mat.append(tuple(x % target.c for x in coords))
    return EtaAction(ell, eb_src, eb_tgt, tuple(mat), target.c, tuple(images))


def congruent_mod_boundaries(kctx: KoszulContext, v: Sequence[int], w: Sequence[int]) -> bool:
    """Whether two degree-1 cycles agree in H_1, i.e. differ by c * (kernel lattice)."""
    diff = [a - b for a, b in zip(v, w)]
    if sum(a * d for a, d in zip(diff, kctx.dims)):
        return False
    return all(x % kctx.c == 0 for x in eta_basis(kctx).coordinates(diff))
