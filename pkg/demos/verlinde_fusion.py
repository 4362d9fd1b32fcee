"""Verlinde algebras as quotients of R(G): bases, fusion and the ideal."""

from twistedk.verlinde import (
    TwistedContext,
    VerlindeClass,
    alcove_reduce,
    c_invariant,
    format_class,
    fusion_table,
    ideal_generators,
)

for n in (2, 3, 4, 5):
    ctx = TwistedContext.of("A1", n)
    print(f"SU(2) at twist {n} (level {ctx.k}): basis {list(ctx.basis)}")

ctx = TwistedContext.of("A2", 5)
print(f"\nSU(3), twist 5, level {ctx.k}; {len(ctx.basis)} basis classes")
table = fusion_table(ctx)
W = lambda mu: VerlindeClass.basis_class(ctx, mu)
print("W(1,0) * W(1,1) =", format_class(table[(1, 0), (1, 1)]))
print("W(2,0) * W(2,0) =", format_class(table[(2, 0), (2, 0)]))

# weights outside the alcove reduce with a sign or vanish on a wall
for mu in ((3, 0), (4, 0), (2, 2), (5, 1)):
    print(f"pushforward V{mu} ->", alcove_reduce(ctx, mu))

print("\nideal generators:", ideal_generators(ctx), " c(SU(3), 5) =", c_invariant(ctx))
print("small twist: SU(3) at n = 2 has basis", list(TwistedContext.of("A2", 2).basis))
