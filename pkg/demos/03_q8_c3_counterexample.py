"""Q8 with an order-3 automorphism: the K-normalizer biset has three identity orbits."""

import warnings

from fusebiset import io
from fusebiset.bisets import biset_of_group, lambda_f
from fusebiset.groups import close_maps
from fusebiset.knorm import AutSubgroup, k_relation, n_omega_k, n_s_k, verify_k_normalizer_theorems

warnings.simplefilter("ignore")

F = io.read_fusion("q8-c3")
S = F.S
L = lambda_f(F)
print("Lambda =", L, "size", L.size)
print("equals Q8:C3 as a biset:", biset_of_group(F) == L)

# kappa permutes i, j, k cyclically; K = <kappa> neither contains nor lies in Inn(Q8).
kappa = next(m for m in F.aut(S) if len(close_maps([m], S)) == 3)
K = AutSubgroup.generated(S, [kappa])
print("relation of K to Inn(Q8):", k_relation(S, K))
print("N_S^K(Q8) =", n_s_k(S, S, K).labels())

nk = n_omega_k(L, S, K)
print("N_Lambda^K(Q8) =", nk.biset)

r = verify_k_normalizer_theorems(F, S, K)
print("identity orbits:", r.id_orbits, "| Lambda of the subsystem:", r.lambda_n, "| equal:", r.equal)
for note in r.notes:
    print("  note:", note)
