"""A short tour of exact Drazin inverses.

Run with ``python3 demos/drazin_inverse_tour.py``.  Everything is computed
over the rationals, so every equality printed below is exact.
"""
from jacobson_drazin import RatMatrix, core_nilpotent, drazin_index, drazin_inverse, spectral_idempotent
from jacobson_drazin.drazin import drazin_axioms

# An invertible block next to a nilpotent Jordan block of size 2.
A = RatMatrix.from_rows([
    [2, 1, 0, 0],
    [1, 1, 0, 0],
    [0, 0, 0, 1],
    [0, 0, 0, 0],
])
print("A =")
print(A.pretty())

# The index is the first power at which the rank stops dropping.
print("index:", drazin_index(A))

# The core-nilpotent decomposition splits the space into col(A^k) and null(A^k).
dec = core_nilpotent(A)
print("core dimension:", dec.core_dim)
print("core block =")
print(dec.core.pretty())
assert dec.reconstruct() == A

AD = drazin_inverse(A)
print("Drazin inverse =")
print(AD.pretty())

# The three defining identities, plus nilpotency of A - A^2 A^D.
for name, holds in drazin_axioms(A, AD).items():
    print(f"  {name:20s} {holds}")

# e = A A^D projects onto the core part along the nilpotent part.
e = spectral_idempotent(A)
print("spectral idempotent =")
print(e.pretty())
print("idempotent:", e @ e == e)
