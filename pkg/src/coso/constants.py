"""Numerical tolerances, fixed in one place.

These are contract constants: interfaces promise factor orthonormality,
reconstruction quality and leakage ceilings in terms of these values, and
the test suite asserts against the same numbers.
"""

# Orthonormality of SVD / QR factor columns (relative to unit columns).
FACTOR_ORTHO_TOL = 1e-10

# Full-rank SVD reconstruction error, relative to the input norm.
RECONSTRUCTION_TOL = 1e-9

# Column below this relative residual in QR counts as dependent and is dropped.
QR_DROP_TOL = 1e-10

# Gram-matrix tolerance for the accumulated historical basis.
BASIS_ORTHO_TOL = 1e-8

# Ceiling on historical-subspace leakage of any applied weight delta,
# relative to the delta norm.
UPDATE_LEAK_TOL = 1e-6
