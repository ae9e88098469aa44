"""Kernel selection: compiled extension if available, else pure Python.

Set LOCALCUT_PURE_PYTHON=1 to force the fallback.  Both kernels consume
randomness identically, so outcomes do not depend on the choice.
"""

import os

if os.environ.get("LOCALCUT_PURE_PYTHON"):
    from . import _kernel_py as _impl

    KERNEL_IMPL = "python"
else:
    try:
        from . import _speedups as _impl

        KERNEL_IMPL = "compiled"
    except ImportError:
        from . import _kernel_py as _impl

        KERNEL_IMPL = "python"

from ._kernel_py import (  # status codes are shared constants
    STATUS_CAP,
    STATUS_CUT,
    STATUS_EXHAUSTED,
    STATUS_FULL,
)

local_ec_run = _impl.local_ec_run
local_ec_alt_run = _impl.local_ec_alt_run
max_flow_capped = _impl.max_flow_capped
