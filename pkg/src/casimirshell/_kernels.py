"""Hot-kernel backend selection.

Prefers the compiled Cython core; falls back to the numpy implementations
transparently when the extension was not built.  Set CASIMIR_PURE_PYTHON=1
to force the pure path (used by the benchmark and the twin tests).
"""

from __future__ import annotations

import os

from . import _kernels_py as pure

if os.environ.get("CASIMIR_PURE_PYTHON", "") not in ("", "0"):
    _impl = pure
    USING_COMPILED = False
else:
    try:
        from . import _kernels_cy as _impl  # type: ignore[attr-defined]

        USING_COMPILED = True
    except ImportError:
        _impl = pure
        USING_COMPILED = False

halfk_psum = _impl.halfk_psum
ksum_polylog = _impl.ksum_polylog
thermal_log_sum = _impl.thermal_log_sum
debye_remainder = _impl.debye_remainder
