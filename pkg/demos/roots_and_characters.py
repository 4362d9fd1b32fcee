"""Root data and representation-ring arithmetic for a few small groups."""

from twistedk.repring import RepRingElement, classical_adams, multiply, weight_multiplicities, weyl_dimension
from twistedk.rootsys import build_root_system, longest_word, weyl_group_order

for name in ("A2", "B2", "G2", "E6"):
    rs = build_root_system(name)
    print(f"{name}: |W| = {weyl_group_order(rs)}, |R+| = {rs.num_positive_roots}, "
          f"h^v = {rs.dual_coxeter}, len(w0) = {len(longest_word(rs))}")

g2 = build_root_system("G2")
print("\nG2 fundamental representations:", [weyl_dimension(g2, mu) for mu in ((1, 0), (0, 1))])
print("weights of the 7-dim rep of G2 with multiplicities:")
for w, m in sorted(weight_multiplicities(g2, (1, 0)).items()):
    print(f"  {w}: {m}")

a2 = build_root_system("A2")
V = RepRingElement.irreducible
print("\nA2: V(1,0) x V(0,1) =", multiply(a2, V((1, 0)), V((0, 1))))
print("A2: V(1,1) x V(1,1) =", multiply(a2, V((1, 1)), V((1, 1))))
# classical Adams operation as a virtual representation
print("A2: psi^2 V(1,0) =", classical_adams(a2, 2, V((1, 0))))
