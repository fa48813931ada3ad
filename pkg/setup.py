"""Build script: compiles the optional Cython kernel extension.

The package works without the extension (a pure-Python fallback is selected
at import time), so any failure here is non-fatal: install with
QUBITFX_PURE_PYTHON=1 to skip the compile step entirely.
"""
import os

from setuptools import setup

PYX = "src/qubitfx/kernels/_ckernels.pyx"

ext_modules = []
if not os.environ.get("QUBITFX_PURE_PYTHON") and os.path.exists(PYX):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [PYX],
            compiler_directives={
                "language_level": 3,
                "boundscheck": False,
                "wraparound": False,
                "cdivision": True,
            },
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)
