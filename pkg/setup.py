"""Build script: compiles the optional C extension for the hot numeric kernels.

The package works without the extension (a pure-Python twin is selected at
import time), so the build is marked optional and install proceeds even if
no C compiler is available.
"""
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "sumdiff._kernel",
                ["src/sumdiff/_kernel.pyx"],
                # -ffp-contract=off keeps the compiled kernel bit-compatible
                # with the pure-Python twin (no FMA contraction).
                extra_compile_args=["-O3", "-ffp-contract=off"],
                optional=True,
            )
        ],
        language_level=3,
    )

setup(ext_modules=ext_modules)
