"""Invariant suite behind the ``verify`` command.

Each check returns a :class:`CheckResult`; a failing check carries a witness
(the first offending input) so the report can name it.  The fusion product is
injectable so a corrupted table can be used as a negative control.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Callable, List, Optional

from . import intmat
from .adams import adams_coefficient, adams_equivariant, compose_check, forgetful, target_context
from .koszul import KoszulContext, koszul_homology
from .torus import invert_restrict, restrict, torus_adams, torus_fusion
from .verlinde import TwistedContext, VerlindeClass, c_invariant, fusion_multiply

FusionFn = Callable[[VerlindeClass, VerlindeClass], VerlindeClass]


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    witness: str = ""

    def line(self) -> str:
        return f"{'PASS' if self.ok else 'FAIL'} {self.name}" + (f": {self.witness}" if self.witness else "")


def _first(name, it) -> CheckResult:
    for bad in it:
        return CheckResult(name, False, bad)
    return CheckResult(name, True)


def run_checks(ctx: TwistedContext, ell: int, fusion: Optional[FusionFn] = None,
               max_assoc: int = 10) -> List[CheckResult]:
    fuse = fusion or fusion_multiply
    rs = ctx.rs
    basis = ctx.basis
    W = lambda mu: VerlindeClass.basis_class(ctx, mu)
    out: List[CheckResult] = []

    if ctx.is_zero:
        out.append(CheckResult("zero theory: empty basis", not basis, "" if not basis else str(basis)))
        z = VerlindeClass.zero(ctx)
        img = adams_equivariant(ctx, ell, z)
        out.append(CheckResult("zero theory: psi^ell is zero", not img, "" if not img else repr(img)))
        return out

    zero = (0,) * rs.rank
    out.append(_first("fusion unit", (f"W0*W{mu} = {fuse(W(zero), W(mu))}"
                                       for mu in basis if fuse(W(zero), W(mu)) != W(mu))))
    table = {(a, b): fuse(W(a), W(b)) for a in basis for b in basis}
    out.append(_first("fusion nonnegative", (f"W{a}*W{b} = {p}" for (a, b), p in table.items()
                                             if any(c < 0 for c in p.terms.values()))))
    out.append(_first("fusion commutative", (f"W{a}*W{b} != W{b}*W{a}" for (a, b), p in table.items()
                                             if p != table[b, a])))
    small = basis[:max_assoc]

    def assoc():
        for a, b, c in product(small, repeat=3):
            lhs = fuse(table[a, b], W(c)) if table[a, b] else table[a, b]
            rhs = fuse(W(a), table[b, c]) if table[b, c] else table[b, c]
            if lhs != rhs:
                yield f"(W{a}*W{b})*W{c} = {lhs} but W{a}*(W{b}*W{c}) = {rhs}"
    out.append(_first("fusion associative", assoc()))
    out.append(_first("fusion matches torus oracle",
                      (f"W{a}*W{b} = {p}, torus gives {torus_fusion(W(a), W(b))}"
                       for (a, b), p in table.items() if p != torus_fusion(W(a), W(b)))))

    images = [restrict(ctx, W(mu)) for mu in basis]
    keys = sorted(set().union(*(t.terms for t in images)))
    mat = [[t.terms.get(k, 0) for k in keys] for t in images]
    rk = intmat.rank(mat, len(keys))
    out.append(CheckResult("restriction injective", rk == len(basis),
                           "" if rk == len(basis) else f"rank {rk} < {len(basis)}"))

    if ell == 0:
        img = [mu for mu in basis if adams_equivariant(ctx, 0, W(mu))]
        out.append(CheckResult("psi^0 is zero", not img, f"W{img[0]}" if img else ""))
    else:
        tgt = target_context(ctx, ell)

        def natural():
            for mu in basis:
                a = adams_equivariant(ctx, ell, W(mu))
                b = invert_restrict(tgt, torus_adams(restrict(ctx, W(mu)), ell))
                if a != b:
                    yield f"W{mu}: {a} vs torus {b}"
        out.append(_first("naturality with restriction", natural()))
        for m in sorted({-1, 1, ell}):
            bad = compose_check(ctx, ell, m)
            out.append(CheckResult(f"composition psi^{ell} o psi^{m} = psi^{ell * m}", not bad,
                                   f"W{bad[0]}" if bad else ""))

        unit_img = adams_equivariant(ctx, ell, W(zero))

        def twisted_ring():
            for a, b in product(small, repeat=2):
                lhs = fuse(adams_equivariant(ctx, ell, W(a)), adams_equivariant(ctx, ell, W(b)))
                rhs = fuse(adams_equivariant(ctx, ell, table[a, b]), unit_img)
                if lhs != rhs:
                    yield f"W{a}, W{b}: {lhs} vs {rhs}"
        out.append(_first("psi(a) psi(b) = psi(ab) psi(1)", twisted_ring()))

    if rs.lie_type.family == "A":
        c = c_invariant(ctx)
        if ell != 0:
            f = forgetful(target_context(ctx, ell), adams_equivariant(ctx, ell, W(zero)))
            want = adams_coefficient(rs, ctx.n, ell, 1)
            out.append(CheckResult("forgetful square (coefficient formula)", f == want,
                                   "" if f == want else f"{f} != {want}"))
        h = koszul_homology(KoszulContext.of(ctx).dims)
        ok = h.matches_exterior_algebra() and h.orders[0] == c
        out.append(CheckResult("Koszul homology orders", ok, "" if ok else f"{h.orders} vs {h.predicted_orders()}"))
    return out
