"""Small groups as multiplication tables: subgroups, Sylow subgroups, automorphisms."""

from fusebiset import all_subgroups, dihedral, quaternion, symmetric, sylow_p
from fusebiset.groups import automorphisms, op_subgroup

# The dihedral group of order 8 has ten subgroups, the quaternion group six.
D = dihedral(8)
Q = quaternion(8)
for G in (D, Q):
    subs = all_subgroups(G.whole())
    print(G.label, "order", G.order, "subgroups", len(subs))
    print("  orders:", sorted(P.order for P in subs))
    print("  |Aut| =", len(automorphisms(G.whole())))

# A Sylow 2-subgroup of S4 is dihedral; the largest normal 2-subgroup is the Klein group.
S4 = symmetric(4)
S = sylow_p(S4, 2)
print("Sylow 2-subgroup of S4:", S.labels())
print("O_2(S4):", op_subgroup(S4, 2).labels())
