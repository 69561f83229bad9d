"""Transfers for quadruples and triples tied together by linear constraints.

The last part recomputes the fixed 4x4 reference quadruple, whose bdb and
bac differ, so only the two-sided variant applies to it.
"""
from jacobson_drazin import ConstraintViolated, one_sided_transfer, reference_example, triple_transfer, two_sided_transfer
from jacobson_drazin.extensions import REFERENCE_A, REFERENCE_B, REFERENCE_C, REFERENCE_D
from jacobson_drazin.instance_gen import GenConfig, gen_one_sided_quad, gen_triple, gen_two_sided_quad

cfg = GenConfig(seed=11, dim=3, n=2)

report = two_sided_transfer(*gen_two_sided_quad(cfg), cfg.n)
print("two-sided:", report.identities, "left =", report.left, "right =", report.right)

report = one_sided_transfer(*gen_one_sided_quad(cfg), cfg.n)
print("one-sided:", report.identities, "left =", report.left, "right =", report.right)
print("  converse held on this instance:", report.extra["converse_holds"])

report = triple_transfer(*gen_triple(cfg), cfg.n)
print("triple:", report.identities, "equivalent =", report.equivalent, "b == c:", report.extra["b_equals_c"])

# The reference quadruple.
example = reference_example()
for claim, holds in example["claims"].items():
    print(f"  {claim:34s} {holds}")

# It satisfies the two-sided constraints but not the one-sided ones.
print("two-sided ok:", two_sided_transfer(REFERENCE_A, REFERENCE_B, REFERENCE_C, REFERENCE_D, 1).ok)
try:
    one_sided_transfer(REFERENCE_A, REFERENCE_B, REFERENCE_C, REFERENCE_D, 1)
except ConstraintViolated as exc:
    print("one-sided rejected:", exc.name)
