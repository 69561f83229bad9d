"""Turning a witness for I - ab into one for I - ba.

The generator draws a pair (a, b) where I - ab is known to pass; the
certificate then exhibits the idempotent q and checks every identity used
along the way.
"""
import json

from jacobson_drazin import RatMatrix, is_nilpotent, transfer_witness
from jacobson_drazin.gnsd import is_gnsd
from jacobson_drazin.instance_gen import GenConfig, gen_transfer_pair

n = 2
a, b = gen_transfer_pair(GenConfig(seed=2024, dim=4, n=n))
I = RatMatrix.identity(4)
print("a =")
print(a.pretty())
print("b =")
print(b.pretty())
print("I - ab passes:", is_gnsd(I - a @ b, n))

cert = transfer_witness(a, b, n)
print("q =")
print(cert.q.pretty())
for name, holds in cert.verdicts.items():
    print(f"  {name:28s} {holds}")

# q is the complement of the idempotent for (I - ba)^n, so the defect
# (I - ba)^n - (I - q) must be nilpotent.
beta = I - b @ a
print("beta^n - (I - q) nilpotent:", is_nilpotent(beta ** n - (I - cert.q)))
print("I - ba passes:", is_gnsd(beta, n))

# Certificates serialize to JSON with exact rational strings.
print(json.dumps(cert.to_json_obj()["verdicts"], indent=2))
