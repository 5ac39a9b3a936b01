"""Random vector norms of Hermitian and general square matrices."""
