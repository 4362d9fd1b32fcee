"""The nonequivariant action for SU(3): coefficient group and the eta generator."""

from twistedk.adams import adams_coefficient
from twistedk.koszul import KoszulContext, adams_on_generators, eta_basis, lift_chain_map
from twistedk.verlinde import TwistedContext

print(" n  ell  c(n) c(ell n)  1 ->  eta ->")
for n in (3, 4, 5, 6, 7):
    src = KoszulContext.of(TwistedContext.of("A2", n))
    for ell in (2, 3, -1, -2):
        tgt = KoszulContext.of(TwistedContext.of("A2", ell * n))
        act = adams_on_generators(src, tgt, ell)
        coeff = adams_coefficient(src.rs, n, ell, 1)
        print(f"{n:2d} {ell:4d} {src.c:5d} {tgt.c:7d} {coeff:5d} {act.matrix[0][0]:5d}")

# the pieces behind one entry
src = KoszulContext.of(TwistedContext.of("A2", 5))
tgt = KoszulContext.of(TwistedContext.of("A2", 10))
lift = lift_chain_map(src, tgt, 2)
print("\ngenerators at twist 5:", src.generators, "dims", src.dims)
print("eta at twist 5:", eta_basis(src).kernel_basis, " at twist 10:", eta_basis(tgt).kernel_basis)
print("degree-0 lift:", lift.psi0_images)
print("augmented degree-1 map:", lift.augmented)
