"""Level-k Verlinde algebras as quotients of R(G).

The twist level n fixes the Verlinde level k = |n| - h^v.  Basis classes W_mu
are indexed by the level-k weights; an arbitrary V_mu is pushed forward by
bringing mu + rho into the fundamental alcove of the level-|n| affine Weyl
group and recording the parity of the reflections used.
"""

from __future__ import annotations

import csv
import io
from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .repring import RepRingElement, multiply, tensor_decompose, weyl_dimension
from .rootsys import LieType, RootSystem, Weight, build_root_system, inner


class VerlindeError(ValueError):
    pass


class UnsupportedTypeError(VerlindeError):
    """Raised for computations the library only supports in type A."""


@dataclass(frozen=True)
class TwistedContext:
    """A root system together with a twist level ``n``.

    ``n == 0`` is only allowed with ``zero_module=True``; it stands for the
    codomain of psi^0, which is modelled as the zero module.
    """

    rs: RootSystem
    n: int
    zero_module: bool = False

    def __post_init__(self):
        if not isinstance(self.n, int) or isinstance(self.n, bool):
            raise VerlindeError(f"twist must be an integer, got {self.n!r}")
        if self.n == 0 and not self.zero_module:
            raise VerlindeError("twist n = 0 (untwisted K-theory) is not supported")

    @classmethod
    def of(cls, group, n: int) -> "TwistedContext":
        rs = group if isinstance(group, RootSystem) else build_root_system(group)
        return cls(rs, n)

    @property
    def k(self) -> int:
        return abs(self.n) - self.rs.dual_coxeter

    @property
    def is_zero(self) -> bool:
        """True when the algebra is zero (|n| < h^v, or the psi^0 codomain)."""
        return self.zero_module or self.k < 0

    def with_twist(self, m: int) -> "TwistedContext":
        if m == 0:
            return TwistedContext(self.rs, 0, zero_module=True)
        return TwistedContext(self.rs, m)

    @property
    def basis(self) -> Tuple[Weight, ...]:
        if self.zero_module:
            return ()
        return _level_weights(self.rs.lie_type, self.k)

    def __str__(self) -> str:
        return f"{self.rs.lie_type}@{self.n}"


@lru_cache(maxsize=None)
def _comarks(t: LieType) -> Tuple[int, ...]:
    rs = build_root_system(t)
    out = []
    for i in range(rs.rank):
        e = [0] * rs.rank
        e[i] = 1
        c = inner(rs, e, rs.highest_root)
        if c.denominator != 1:
            raise AssertionError(f"non-integral comark for {rs.lie_type}")
        out.append(int(c))
    return tuple(out)


def comarks(rs: RootSystem) -> Tuple[int, ...]:
    """B(omega_i, highest root) for each fundamental weight."""
    return _comarks(rs.lie_type)


@lru_cache(maxsize=None)
def _level_weights(t: LieType, k: int) -> Tuple[Weight, ...]:
    if k < 0:
        return ()
    marks = comarks(build_root_system(t))
    out: List[Weight] = []

    def rec(i, budget, prefix):
        if i == len(marks):
            out.append(tuple(prefix))
            return
        for c in range(budget // marks[i] + 1):
            rec(i + 1, budget - c * marks[i], prefix + [c])

    rec(0, k, [])
    return tuple(sorted(out, key=lambda mu: (sum(m * x for m, x in zip(marks, mu)), mu)))


def weight_level(rs: RootSystem, mu: Sequence[int]) -> int:
    """B(mu, highest root), an integer for every weight."""
    return sum(m * x for m, x in zip(comarks(rs), rs.check(mu)))


def weights_up_to_level(rs: RootSystem, k: int) -> Tuple[Weight, ...]:
    """Dominant weights of level at most k, sorted by level."""
    return _level_weights(rs.lie_type, k)


def level_weights(ctx: TwistedContext) -> List[Weight]:
    """Dominant weights mu with B(mu, highest root) <= k."""
    return list(ctx.basis)


class VerlindeClass:
    """Integer combination of the basis classes W_mu of a twisted context."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: TwistedContext, terms: Optional[Mapping[Sequence[int], int]] = None):
        self.ctx = ctx
        basis = set(ctx.basis)
        clean: Dict[Weight, int] = {}
        for mu, c in (terms or {}).items():
            mu = tuple(int(x) for x in mu)
            if mu not in basis:
                raise VerlindeError(f"{mu} is not a level-{ctx.k} weight of {ctx.rs.lie_type}")
            if c:
                clean[mu] = clean.get(mu, 0) + int(c)
        self.terms = {k: v for k, v in clean.items() if v}

    @classmethod
    def basis_class(cls, ctx: TwistedContext, mu: Sequence[int]) -> "VerlindeClass":
        return cls(ctx, {tuple(mu): 1})

    @classmethod
    def zero(cls, ctx: TwistedContext) -> "VerlindeClass":
        return cls(ctx)

    @classmethod
    def _raw(cls, ctx, terms):
        obj = cls.__new__(cls)
        obj.ctx = ctx
        obj.terms = {k: v for k, v in terms.items() if v}
        return obj

    def _same(self, other: "VerlindeClass"):
        if not isinstance(other, VerlindeClass):
            raise TypeError(f"expected VerlindeClass, got {type(other).__name__}")
        if other.ctx != self.ctx:
            raise VerlindeError(f"context mismatch: {self.ctx} vs {other.ctx}")

    def __eq__(self, other) -> bool:
        if not isinstance(other, VerlindeClass):
            return NotImplemented
        return self.ctx == other.ctx and self.terms == other.terms

    def __hash__(self):
        return hash((self.ctx, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other: "VerlindeClass") -> "VerlindeClass":
        self._same(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return VerlindeClass._raw(self.ctx, out)

    def __neg__(self) -> "VerlindeClass":
        return VerlindeClass._raw(self.ctx, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other: "VerlindeClass") -> "VerlindeClass":
        return self + (-other)

    def __rmul__(self, c: int) -> "VerlindeClass":
        if not isinstance(c, int):
            return NotImplemented
        return VerlindeClass._raw(self.ctx, {k: c * v for k, v in self.terms.items()})

    def items(self):
        return iter(sorted(self.terms.items()))

    def lift(self) -> RepRingElement:
        """The obvious preimage sum c_mu V_mu in R(G)."""
        return RepRingElement._from_clean(dict(self.terms))

    def __repr__(self) -> str:
        if not self.terms:
            return f"0 [{self.ctx}]"
        body = " + ".join(f"{c}*W{mu}" for mu, c in self.items())
        return f"{body} [{self.ctx}]"

    def to_json(self) -> dict:
        return {
            "group": str(self.ctx.rs.lie_type),
            "twist": self.ctx.n,
            "terms": [{"weight": list(mu), "coeff": c} for mu, c in self.items()],
        }

    @classmethod
    def from_json(cls, data: dict) -> "VerlindeClass":
        n = int(data["twist"])
        rs = build_root_system(data["group"])
        ctx = TwistedContext(rs, n, zero_module=(n == 0))
        terms: Dict[Weight, int] = {}
        for t in data["terms"]:
            mu = tuple(t["weight"])
            terms[mu] = terms.get(mu, 0) + int(t["coeff"])
        return cls(ctx, terms)


def alcove_reduce(ctx: TwistedContext, mu: Sequence[int]) -> Optional[Tuple[Weight, int]]:
    """Bring mu + rho into the fundamental level-|n| alcove.

    Returns ``(lam, sign)`` with lam a level-k weight, or ``None`` if mu + rho
    lies on an affine wall (the class of V_mu then vanishes).
    """
    if ctx.zero_module:
        return None
    rs = ctx.rs
    simple, theta, marks = rs.simple_roots, rs.highest_root, comarks(rs)
    m = abs(ctx.n)
    x = [a + 1 for a in rs.check(mu)]
    sign = 1
    while True:
        i = next((j for j, c in enumerate(x) if c < 0), None)
        if i is not None:
            c = x[i]
            x = [a - c * b for a, b in zip(x, simple[i])]
            sign = -sign
            continue
        lev = sum(a * b for a, b in zip(marks, x))
        if lev > m:
            # reflection in the hyperplane B(x, theta) = m (theta is long, so theta^v = theta)
            d = lev - m
            x = [a - d * b for a, b in zip(x, theta)]
            sign = -sign
            continue
        break
    if any(c == 0 for c in x) or sum(a * b for a, b in zip(marks, x)) == m:
        return None
    return tuple(a - 1 for a in x), sign


def pushforward(ctx: TwistedContext, a: RepRingElement) -> VerlindeClass:
    """Image of an element of R(G) in the twisted K-theory (Verlinde algebra)."""
    out: Dict[Weight, int] = defaultdict(int)
    for mu, c in a.terms.items():
        red = alcove_reduce(ctx, mu)
        if red is not None:
            out[red[0]] += red[1] * c
    return VerlindeClass._raw(ctx, dict(out))


def fusion_multiply(a: VerlindeClass, b: VerlindeClass) -> VerlindeClass:
    """Product in the Verlinde algebra: tensor the lifts, then project."""
    a._same(b)
    ctx = a.ctx
    out: Dict[Weight, int] = defaultdict(int)
    for lam, c in a.terms.items():
        for mu, d in b.terms.items():
            for nu, e in tensor_decompose(ctx.rs, lam, mu).terms.items():
                red = alcove_reduce(ctx, nu)
                if red is not None:
                    out[red[0]] += red[1] * c * d * e
    return VerlindeClass._raw(ctx, dict(out))


def fusion_table(ctx: TwistedContext) -> Dict[Tuple[Weight, Weight], VerlindeClass]:
    """All products W_lam * W_mu over the basis."""
    basis = ctx.basis
    table = {}
    for i, lam in enumerate(basis):
        for mu in basis[i:]:
            p = fusion_multiply(VerlindeClass.basis_class(ctx, lam), VerlindeClass.basis_class(ctx, mu))
            table[lam, mu] = p
            table[mu, lam] = p
    return table


def _fmt_weight(mu: Sequence[int]) -> str:
    return "(" + ",".join(str(x) for x in mu) + ")"


def format_class(a: VerlindeClass) -> str:
    if not a.terms:
        return "0"
    parts = []
    for mu, c in a.items():
        coeff = "" if c == 1 else ("-" if c == -1 else f"{c}")
        parts.append(f"{coeff}W{_fmt_weight(mu)}")
    return "+".join(parts).replace("+-", "-")


def fusion_table_csv(ctx: TwistedContext, table=None) -> str:
    """CSV with rows and columns indexed by the level-k weights."""
    if table is None:
        table = fusion_table(ctx)
    basis = ctx.basis
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow([""] + [_fmt_weight(mu) for mu in basis])
    for lam in basis:
        w.writerow([_fmt_weight(lam)] + [format_class(table[lam, mu]) for mu in basis])
    return buf.getvalue()


def _require_type_a(rs: RootSystem):
    if rs.lie_type.family != "A":
        raise UnsupportedTypeError(
            f"Verlinde ideal generators are only constructed for type A, not {rs.lie_type}")


def ideal_generators(ctx: TwistedContext) -> List[RepRingElement]:
    """Generators V_{(|n|-r)L_1}, ..., V_{(|n|-1)L_1} of the Verlinde ideal (type A_r)."""
    rs = ctx.rs
    _require_type_a(rs)
    if ctx.zero_module or abs(ctx.n) < rs.dual_coxeter:
        raise VerlindeError(f"ideal generators need |n| >= h^v = {rs.dual_coxeter}, got n = {ctx.n}")
    r = rs.rank
    m = abs(ctx.n)
    return [RepRingElement.irreducible((m - r + j,) + (0,) * (r - 1)) for j in range(r)]


def c_invariant(ctx: TwistedContext) -> int:
    """Order of the coefficient group of the nonequivariant twisted K-theory.

    For 0 < |n| < h^v the theory is zero and the coefficient group is trivial,
    so 1 is returned.
    """
    rs = ctx.rs
    if ctx.zero_module:
        raise VerlindeError("c(G, n) is undefined for n = 0")
    if abs(ctx.n) < rs.dual_coxeter:
        return 1
    g = 0
    for y in ideal_generators(ctx):
        g = gcd(g, weyl_dimension(rs, y))
    return g


def in_ideal(ctx: TwistedContext, a: RepRingElement) -> bool:
    """Membership in the Verlinde ideal, i.e. the kernel of the pushforward."""
    return not pushforward(ctx, a)


def lift_product(ctx: TwistedContext, a: RepRingElement, b: RepRingElement) -> VerlindeClass:
    return pushforward(ctx, multiply(ctx.rs, a, b))
