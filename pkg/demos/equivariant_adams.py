"""psi^ell on equivariant twisted K-theory, checked against the torus model."""

from twistedk.adams import adams_equivariant, compose_check, negative_twist_iso, target_context
from twistedk.torus import invert_restrict, restrict, torus_adams
from twistedk.verlinde import TwistedContext, VerlindeClass, format_class

ctx = TwistedContext.of("A2", 4)
W = lambda mu: VerlindeClass.basis_class(ctx, mu)
for ell in (2, -1, -2, 0):
    tgt = target_context(ctx, ell)
    print(f"psi^{ell}: twist {ctx.n} -> {tgt.n}")
    for mu in ctx.basis:
        print(f"  W{mu} -> {format_class(adams_equivariant(ctx, ell, W(mu)))}")

# the same images computed on the maximal torus
mu = (1, 0)
t = torus_adams(restrict(ctx, W(mu)), 3)
print("\ntorus image of psi^3 W(1,0):", t)
print("inverted:", format_class(invert_restrict(target_context(ctx, 3), t)))

print("\ncomposition psi^2 o psi^-3 = psi^-6 fails on:", compose_check(ctx, 2, -3) or "nothing")
iso = negative_twist_iso(TwistedContext.of("A2", 5))
print("twist 5 <-> twist -5 basis correspondence:", dict(iso.pairs))
