"""Three independent ways to decide whether A^n - e is nilpotent.

The witness checker builds the Drazin inverse and the spectral idempotent,
the spectral checker works on the characteristic polynomial only, and the
polynomial checker tests nilpotency of A - A^(n+1).
"""
from jacobson_drazin import RatMatrix, NotGnsd, gnsd_check
from jacobson_drazin.exact_linalg import RatPoly, companion
from jacobson_drazin.gnsd import oracle_verdicts

cases = {
    "diag(1, -1)": RatMatrix.diag(1, -1),
    "cube-root companion": companion(RatPoly([1, 1, 1])),
    "diag(2)": RatMatrix.diag(2),
    "nilpotent J2": RatMatrix.from_rows([[0, 1], [0, 0]]),
}

for name, A in cases.items():
    for n in (1, 2, 3):
        verdicts = oracle_verdicts(A, n)
        print(f"{name:22s} n={n}  {verdicts}")

# A positive answer comes with a witness that can be rechecked from scratch.
witness = gnsd_check(companion(RatPoly([1, 1, 1])), 3)
print("witness x =")
print(witness.inverse_x.pretty())
print("recheck:", witness.check(companion(RatPoly([1, 1, 1]))))

# A negative answer carries the non-zero power that proves it.
try:
    gnsd_check(RatMatrix.diag(2), 1)
except NotGnsd as exc:
    print("not gnsD, evidence (A - e)^dim =")
    print(exc.evidence.pretty())
