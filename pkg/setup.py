"""Build hook that compiles the scanner kernel when Cython is available.

The package is pure Python; the compiled kernel is an optional speedup.
Set ECSTMETRICS_PURE_BUILD=1 to skip compilation entirely, in which case
the scanner falls back to the pure-Python kernel at import time.
"""

import os

from setuptools import setup

ext_modules = []
if not os.environ.get("ECSTMETRICS_PURE_BUILD"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/ecstmetrics/scan/_kernel_c.pyx"],
            language_level=3,
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)
