"""Backend selection for the row-reduction kernels.

The compiled extension is preferred when importable; set ``NILLAB_PURE=1``
to force the pure-Python twin (useful for benchmarking and debugging).
Both backends are exact and produce bit-identical results.
"""

import os

if os.environ.get("NILLAB_PURE") == "1":
    from nillab import _core_py as _impl
else:
    try:
        from nillab import _core_cy as _impl  # type: ignore[attr-defined]
    except ImportError:
        from nillab import _core_py as _impl

BACKEND = _impl.BACKEND_KIND

Echelon = _impl.Echelon
back_eliminate = _impl.back_eliminate
rref_rows = _impl.rref_rows
residual_vec = _impl.residual_vec
is_in_span = _impl.is_in_span
vec_reduce_content = _impl.vec_reduce_content
vec_addmul = _impl.vec_addmul
dot_sparse = _impl.dot_sparse
matmul_flat = _impl.matmul_flat
commutator_flat = _impl.commutator_flat
