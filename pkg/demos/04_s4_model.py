"""S4 is a model for its 2-fusion system, so S4 as a biset is the minimal characteristic biset."""

import warnings

from fusebiset import io
from fusebiset.models import is_constrained, is_model, op_fusion, verify_model_theorem

warnings.simplefilter("ignore")

F = io.read_fusion("d8-s4")
print("O_2(F) =", op_fusion(F).labels(), "constrained:", is_constrained(F))

S4 = io.read_group("g-s4")
v = is_model(S4, F)
print("S4 is a model:", bool(v))
t = verify_model_theorem(S4, F)
# Orbit types print their canonical representative: the order-3 twist on V4
# composed with conjugation by elements of S can show up as a map of order 2.
print("S4 as a biset:", t.group_biset)
print("Lambda       :", t.lambda_biset)
print("equal:", t.holds)

# A group with a normal subgroup of odd order is not a model.
bad = is_model(io.read_group("g-s4xc3"), F)
print("S4 x C3 is a model:", bool(bad), bad.notes)
