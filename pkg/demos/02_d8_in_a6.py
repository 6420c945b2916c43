"""The fusion system of A6 on a dihedral Sylow 2-subgroup, and its minimal characteristic biset."""

import warnings

from fusebiset import io
from fusebiset.bisets import biset_of_group, decompose_biset, lambda_f
from fusebiset.centric import centric_minimal, centric_subgroups, truncate_centric
from fusebiset.fusion import fusion_isomorphism, is_saturated
from fusebiset.stable import basis_element

warnings.simplefilter("ignore")

F = io.read_fusion("d8-a6")
print(F)
print("morphisms:", F.morphism_count(), "classes:", len(F.classes()), "saturated:", bool(is_saturated(F)))

# Subgroup classes, largest first, with their fully normalized representative.
for c in F.classes():
    print(f"  order {c.order}: {len(c.members)} members, rep {c.representative.labels()}")

# The minimal characteristic biset: five orbits and 104 elements.
L = lambda_f(F)
print("Lambda =", L)
print("size", L.size, "= 13 |S|; |Out_F(S)| =", F.out_order())

# A6 itself, viewed as an (S,S)-biset, is Lambda plus four free orbits.
G = biset_of_group(F)
print("A6 as a biset:", {tuple(P.labels()): c for P, c in decompose_biset(F, G).items()})

# The orbits whose source is centric form the centric minimal biset.
print("centric subgroups:", [P.order for P in centric_subgroups(F)])
print("truncation equals the centric minimal biset:", truncate_centric(F, L) == centric_minimal(F))

# One basis element of the stable S-sets: the centre Z is fused with noncentral involutions.
Z = F.C(F.S)
print("X_Z =", basis_element(F, Z))

# The same system generated on an abstract D8 by two automorphisms of order 3.
A = io.read_fusion("d8-a6-gen")
print("abstract version isomorphic:", fusion_isomorphism(A, F) is not None)
