"""Scanner kernel selection.

Prefers the compiled kernel when the extension module was built,
otherwise falls back to the pure-Python implementation.  Setting
ECSTMETRICS_PURE=1 in the environment forces the fallback, which is
mainly useful for benchmarking and debugging.
"""

import os

from ._kernel import COMMENT, NUMBER, STRING, SYMBOL, WORD

if os.environ.get("ECSTMETRICS_PURE"):
    from ._kernel import scan

    KERNEL = "python"
else:
    try:
        from ._kernel_c import scan

        KERNEL = "c"
    except ImportError:
        from ._kernel import scan

        KERNEL = "python"

__all__ = ["scan", "KERNEL", "WORD", "NUMBER", "STRING", "SYMBOL", "COMMENT"]
