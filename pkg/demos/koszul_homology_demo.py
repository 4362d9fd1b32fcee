"""Homology of the integer Koszul complex on a list of augmented dimensions."""

from twistedk.koszul import KoszulContext, koszul_homology
from twistedk.verlinde import TwistedContext

for dims in ([7], [10, 15], [12, 18, 30, 42], [4, 6, 10]):
    h = koszul_homology(dims)
    print(f"{dims}: c = {h.c}, orders by degree {h.orders}, exterior algebra prediction {h.predicted_orders()}")

for r, n in ((2, 6), (3, 6), (3, 7), (4, 10)):
    k = KoszulContext.of(TwistedContext.of(f"A{r}", n))
    h = koszul_homology(k.dims)
    print(f"SU({r + 1}) twist {n}: dims {k.dims}, torsion orders {h.orders}")
