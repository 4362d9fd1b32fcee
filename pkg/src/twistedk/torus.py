"""The torus quotient ring R(T)/(e^chi - 1 : chi in n * B-flat(coroot lattice)).

This is the target of the restriction map from the Verlinde algebra and
serves as an independent oracle: everything here works with explicit Weyl
orbits and lattice cosets, never with alcove reduction.
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Dict, Mapping, Optional, Sequence, Tuple

from . import intmat
from .repring import RepRingElement, character
from .rootsys import LieType, RootSystem, Weight, build_root_system, sign_longest_element, to_dominant, weyl_orbit_signed
from .verlinde import TwistedContext, VerlindeClass, VerlindeError


class TorusError(ValueError):
    pass


@lru_cache(maxsize=None)
def _lattice_hnf(t: LieType, m: int) -> Tuple[Tuple[int, ...], ...]:
    rs = build_root_system(t)
    rows = [[m * x for x in row] for row in rs.coroot_images]
    den = lcm(*(Fraction(x).denominator for row in rows for x in row))
    if den != 1:
        # the basic normalization makes the translation lattice integral for every
        # simple type; a non-integral lattice would need rational coset labels
        raise AssertionError(f"non-integral translation lattice for {t}")
    return tuple(tuple(r) for r in intmat.hnf([[int(x) for x in row] for row in rows]))


def translation_lattice(rs: RootSystem, twist: int) -> Tuple[Tuple[int, ...], ...]:
    """HNF basis (rows, Dynkin labels) of twist * span{2 alpha_i / B(alpha_i, alpha_i)}."""
    if twist == 0:
        return ()
    return _lattice_hnf(rs.lie_type, abs(twist))


def canonical_coset(rs: RootSystem, twist: int, chi: Sequence[int]) -> Weight:
    """Canonical representative of chi modulo the translation lattice.

    For ``twist == 0`` there is no quotient and chi is returned unchanged.
    """
    chi = rs.check(chi)
    if twist == 0:
        return chi
    return tuple(intmat.reduce_mod_lattice(chi, translation_lattice(rs, twist)))


class TorusClass:
    """Element of the torus quotient ring, stored on canonical coset labels."""

    __slots__ = ("rs", "twist", "terms")

    def __init__(self, rs: RootSystem, twist: int, terms: Optional[Mapping[Sequence[int], int]] = None):
        self.rs = rs
        self.twist = int(twist)
        out: Dict[Weight, int] = defaultdict(int)
        for chi, c in (terms or {}).items():
            out[canonical_coset(rs, self.twist, chi)] += int(c)
        self.terms = {k: v for k, v in out.items() if v}

    @classmethod
    def of(cls, ctx: TwistedContext, terms=None) -> "TorusClass":
        return cls(ctx.rs, 0 if ctx.zero_module else ctx.n, terms)

    def _same(self, other: "TorusClass"):
        if other.rs is not self.rs or abs(other.twist) != abs(self.twist):
            raise TorusError(f"torus context mismatch: {self.rs}@{self.twist} vs {other.rs}@{other.twist}")

    def __eq__(self, other) -> bool:
        if not isinstance(other, TorusClass):
            return NotImplemented
        return self.rs is other.rs and abs(self.twist) == abs(other.twist) and self.terms == other.terms

    def __hash__(self):
        return hash((id(self.rs), abs(self.twist), frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other: "TorusClass") -> "TorusClass":
        self._same(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return TorusClass(self.rs, self.twist, out)

    def __neg__(self) -> "TorusClass":
        return TorusClass(self.rs, self.twist, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other: "TorusClass") -> "TorusClass":
        return self + (-other)

    def __rmul__(self, c: int) -> "TorusClass":
        if not isinstance(c, int):
            return NotImplemented
        return TorusClass(self.rs, self.twist, {k: c * v for k, v in self.terms.items()})

    def __mul__(self, other: "TorusClass") -> "TorusClass":
        """Product in the quotient ring: e^a e^b = e^{a+b}."""
        if isinstance(other, int):
            return other * self
        self._same(other)
        out: Dict[Weight, int] = defaultdict(int)
        for a, c in self.terms.items():
            for b, d in other.terms.items():
                out[tuple(x + y for x, y in zip(a, b))] += c * d
        return TorusClass(self.rs, self.twist, out)

    def items(self):
        return iter(sorted(self.terms.items()))

    def __repr__(self) -> str:
        body = " + ".join(f"{c}*e^{chi}" for chi, c in self.items()) or "0"
        return f"{body} [{self.rs.lie_type}@{self.twist}]"

    def to_json(self) -> dict:
        return {
            "group": str(self.rs.lie_type),
            "twist": self.twist,
            "terms": [{"coset": list(chi), "coeff": c} for chi, c in self.items()],
        }

    @classmethod
    def from_json(cls, data: dict) -> "TorusClass":
        rs = build_root_system(data["group"])
        return cls(rs, int(data["twist"]), {tuple(t["coset"]): int(t["coeff"]) for t in data["terms"]})


def antisymmetrize(rs: RootSystem, twist: int, x: Sequence[int]) -> TorusClass:
    """J(e^x) = sum_w (-1)^w e^{w x}, collected in the quotient ring."""
    x = rs.check(x)
    dom, sign = to_dominant(rs, x)
    if any(c == 0 for c in dom):
        # a reflection fixes x, so the alternating sum cancels in R(T) already
        return TorusClass(rs, twist)
    return TorusClass(rs, twist, {y: sign * s for y, s in weyl_orbit_signed(rs, dom)})


def restrict(ctx: TwistedContext, a: VerlindeClass) -> TorusClass:
    """i*(W_mu) = (-1)^{|R_+|} J(e^{mu + rho}), extended linearly."""
    if a.ctx != ctx:
        raise VerlindeError(f"context mismatch: {ctx} vs {a.ctx}")
    rs = ctx.rs
    twist = 0 if ctx.zero_module else ctx.n
    eps = sign_longest_element(rs)
    out: Dict[Weight, int] = defaultdict(int)
    for mu, c in a.terms.items():
        for chi, s in antisymmetrize(rs, twist, [m + 1 for m in mu]).terms.items():
            out[chi] += eps * s * c
    return TorusClass(rs, twist, out)


def torus_adams(a: TorusClass, ell: int) -> TorusClass:
    """psi^ell: e^chi -> e^{ell chi}, landing in the quotient for twist ell * n.

    ``ell == 0`` lands in R(T) itself (no quotient): every exponential becomes e^0.
    """
    if a.twist == 0:
        raise TorusError("torus Adams operation needs a nonzero source twist")
    out: Dict[Weight, int] = defaultdict(int)
    for chi, c in a.terms.items():
        out[tuple(ell * x for x in chi)] += c
    return TorusClass(a.rs, ell * a.twist, out)


def torus_character(rs: RootSystem, twist: int, r: RepRingElement) -> TorusClass:
    """Image of r in R(T), then in the quotient ring."""
    return TorusClass(rs, twist, character(rs, r))


def invert_restrict(ctx: TwistedContext, t: TorusClass) -> VerlindeClass:
    """The unique Verlinde class restricting to ``t``.

    Raises :class:`TorusError` when ``t`` is not in the image of the restriction.
    """
    rs = ctx.rs
    twist = 0 if ctx.zero_module else ctx.n
    if t.rs is not rs or abs(t.twist) != abs(twist):
        raise TorusError(f"torus class lives over {t.rs}@{t.twist}, expected {ctx}")
    eps = sign_longest_element(rs)
    # distinct alcove weights have disjoint affine orbits, and lam + rho itself
    # appears in i*(W_lam) with coefficient (-1)^{|R_+|}
    terms = {}
    for lam in ctx.basis:
        c = t.terms.get(canonical_coset(rs, twist, [x + 1 for x in lam]), 0)
        if c:
            terms[lam] = eps * c
    guess = VerlindeClass(ctx, terms)
    if restrict(ctx, guess) != t:
        raise TorusError(f"{t} is not in the image of the restriction map for {ctx}")
    return guess


def torus_fusion(a: VerlindeClass, b: VerlindeClass) -> VerlindeClass:
    """Fusion product computed on the torus side: i*(a b) = [char(lift b)] * i*(a)."""
    if a.ctx != b.ctx:
        raise VerlindeError(f"context mismatch: {a.ctx} vs {b.ctx}")
    ctx = a.ctx
    twist = 0 if ctx.zero_module else ctx.n
    prod_t = restrict(ctx, a) * torus_character(ctx.rs, twist, b.lift())
    return invert_restrict(ctx, prod_t)


def is_wall(ctx: TwistedContext, mu: Sequence[int]) -> bool:
    """True iff the alternating sum J(e^{mu + rho}) cancels in the quotient."""
    twist = 0 if ctx.zero_module else ctx.n
    return not antisymmetrize(ctx.rs, twist, [m + 1 for m in ctx.rs.check(mu)])
