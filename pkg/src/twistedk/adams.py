"""Adams operations on twisted K-theory of G.

Equivariantly psi^ell sends the level |n| - h^v Verlinde algebra to the level
|ell n| - h^v one.  On a basis class

    psi^ell(W_mu) = W_{ell mu + (ell - 1) rho}                          (ell > 0)
    psi^ell(W_mu) = (-1)^{|R_+|} W_{|ell| mu* + (|ell| - 1) rho}         (ell < 0)
    psi^0 = 0

where the right-hand sides are pushed forward (alcove-reduced) at twist ell n.
Nonequivariantly only the coefficient group Z_{c(G, n)} is handled here; the
exterior generators are treated in :mod:`twistedk.koszul`.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .repring import RepRingElement, dual, weyl_dimension
from .rootsys import RootSystem, Weight, dual_weight, sign_longest_element
from .verlinde import (
    TwistedContext,
    VerlindeClass,
    VerlindeError,
    alcove_reduce,
    c_invariant,
    pushforward,
)


def target_context(ctx: TwistedContext, ell: int) -> TwistedContext:
    """Context of the codomain of psi^ell (the zero module when ell == 0)."""
    if ctx.zero_module:
        raise VerlindeError("psi^ell needs a nonzero source twist")
    return ctx.with_twist(ell * ctx.n)


def adams_weight(rs: RootSystem, ell: int, mu: Sequence[int]) -> Tuple[Weight, int]:
    """Highest weight and sign of the lift of psi^ell(V_mu), before projection."""
    if ell == 0:
        raise VerlindeError("psi^0 has no monomial lift")
    mu = rs.check(mu)
    if ell > 0:
        return tuple(ell * m + ell - 1 for m in mu), 1
    a = -ell
    return tuple(a * m + a - 1 for m in dual_weight(rs, mu)), sign_longest_element(rs)


def adams_lift(rs: RootSystem, ell: int, r: RepRingElement) -> RepRingElement:
    """The monomial lift of psi^ell to R(G), extended Z-linearly.

    This is the degree-zero component of the chain map between Koszul
    resolutions; it is not a ring map on R(G).
    """
    if ell == 0:
        return RepRingElement()
    out: Dict[Weight, int] = defaultdict(int)
    for mu, c in r.terms.items():
        lam, s = adams_weight(rs, ell, mu)
        out[lam] += s * c
    return RepRingElement._from_clean(dict(out))


def adams_equivariant(ctx: TwistedContext, ell: int, a: VerlindeClass) -> VerlindeClass:
    """psi^ell on the equivariant twisted K-theory, as a Verlinde-algebra map."""
    if a.ctx != ctx:
        raise VerlindeError(f"context mismatch: {ctx} vs {a.ctx}")
    tgt = target_context(ctx, ell)
    if ell == 0 or ctx.is_zero:
        return VerlindeClass.zero(tgt)
    rs = ctx.rs
    out: Dict[Weight, int] = defaultdict(int)
    for mu, c in a.terms.items():
        lam, s = adams_weight(rs, ell, mu)
        red = alcove_reduce(tgt, lam)
        if red is not None:
            out[red[0]] += s * red[1] * c
    return VerlindeClass._raw(tgt, dict(out))


def adams_on_basis(ctx: TwistedContext, ell: int) -> Dict[Weight, VerlindeClass]:
    return {mu: adams_equivariant(ctx, ell, VerlindeClass.basis_class(ctx, mu)) for mu in ctx.basis}


def adams_coefficient(rs: RootSystem, n: int, ell: int, kval: int) -> int:
    """psi^ell on the coefficient group: Z_{c(G, n)} -> Z_{c(G, ell n)}.

    The sign (-1)^{sgn(w_0) + |R_+|} for ell < 0 is +1 because sgn(w_0) is read
    as the length parity |R_+|.
    """
    if n == 0:
        raise VerlindeError("twist n = 0 is not supported")
    if ell == 0 or abs(n) < rs.dual_coxeter:
        # psi^0, or a source coefficient group that is already trivial
        return 0
    c_tgt = c_invariant(TwistedContext(rs, ell * n))
    return (ell ** rs.num_positive_roots * int(kval)) % c_tgt


def forgetful(ctx: TwistedContext, a: VerlindeClass) -> int:
    """Image in the coefficient group Z_{c(G, n)}: W_mu -> dim V_mu."""
    if a.ctx != ctx:
        raise VerlindeError(f"context mismatch: {ctx} vs {a.ctx}")
    c = c_invariant(ctx)
    return sum(coeff * weyl_dimension(ctx.rs, mu) for mu, coeff in a.terms.items()) % c


@dataclass(frozen=True)
class NegativeTwistIso:
    """psi^{-1} between twist n and twist -n, on bases.

    ``forward`` is psi^{-1} from twist n to twist -n: W_mu -> (-1)^{|R_+|} W_{mu*}.
    ``unsigned`` drops the sign; it is the unital ring isomorphism between the
    two Verlinde algebras.
    """

    pos: TwistedContext
    neg: TwistedContext
    sign: int
    pairs: Tuple[Tuple[Weight, Weight], ...]

    def forward(self, a: VerlindeClass) -> VerlindeClass:
        return self._map(a, self.pos, self.neg, self.sign)

    def backward(self, a: VerlindeClass) -> VerlindeClass:
        return self._map(a, self.neg, self.pos, self.sign)

    def unsigned(self, a: VerlindeClass) -> VerlindeClass:
        if a.ctx == self.pos:
            return self._map(a, self.pos, self.neg, 1)
        return self._map(a, self.neg, self.pos, 1)

    def _map(self, a, src, dst, s):
        if a.ctx != src:
            raise VerlindeError(f"context mismatch: {src} vs {a.ctx}")
        table = dict(self.pairs)
        return VerlindeClass._raw(dst, {table[mu]: s * c for mu, c in a.terms.items()})


def negative_twist_iso(ctx: TwistedContext, spanning: Optional[Iterable[Sequence[int]]] = None
                       ) -> NegativeTwistIso:
    """Build the twist n <-> -n correspondence and certify it.

    Checks psi^{-1} o f^-_* = (-1)^{|R_+|} f^+_* o psi^{-1} on ``spanning`` (by
    default the basis together with weights just outside the alcove, some of
    which reduce with a sign and some of which vanish), where f^{+-}_* are the
    pushforwards from R(G) and psi^{-1} on R(G) is conjugation.
    """
    rs, n = ctx.rs, ctx.n
    if ctx.zero_module or n < rs.dual_coxeter:
        raise VerlindeError(f"negative twist correspondence needs n >= h^v = {rs.dual_coxeter}, got {n}")
    neg = ctx.with_twist(-n)
    s = sign_longest_element(rs)
    pairs = tuple((mu, dual_weight(rs, mu)) for mu in ctx.basis)
    iso = NegativeTwistIso(ctx, neg, s, pairs)
    if spanning is None:
        spanning = list(ctx.basis)
        for mu in ctx.basis[:8]:
            for j in range(rs.rank):
                for step in (ctx.k + 1, ctx.k + 2):
                    spanning.append(tuple(x + step * (i == j) for i, x in enumerate(mu)))
    for mu in spanning:
        v = RepRingElement.irreducible(rs.check(mu))
        lhs = adams_equivariant(neg, -1, pushforward(neg, v))
        rhs = s * pushforward(ctx, dual(rs, v))
        if lhs != rhs:
            raise AssertionError(f"negative twist square fails at V{tuple(mu)}: {lhs} != {rhs}")
        fwd = iso.forward(pushforward(ctx, v))
        if fwd != adams_equivariant(ctx, -1, pushforward(ctx, v)):
            raise AssertionError(f"basis correspondence disagrees with psi^-1 at V{tuple(mu)}")
    return iso


def compose_check(ctx: TwistedContext, ell: int, m: int) -> List[Weight]:
    """Basis weights where psi^ell o psi^m != psi^{ell m}; empty means the law holds."""
    if m == 0:
        # psi^m already lands in the zero module
        return []
    mid = target_context(ctx, m)
    bad = []
    for mu in ctx.basis:
        w = VerlindeClass.basis_class(ctx, mu)
        lhs = adams_equivariant(mid, ell, adams_equivariant(ctx, m, w))
        if lhs != adams_equivariant(ctx, ell * m, w):
            bad.append(mu)
    return bad
