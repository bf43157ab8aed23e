"""Build script for the optional compiled correlation kernel.

The package works without the extension (a scipy-backed fallback is
selected at import time), so a failed extension build is tolerated by
installing with ZEROFILTER_SKIP_EXT=1.
"""
import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("ZEROFILTER_SKIP_EXT", "0") != "1":
    import numpy
    from Cython.Build import cythonize

    ext = Extension(
        "zerofilter._kernels._convolve",
        sources=["src/zerofilter/_kernels/_convolve.pyx"],
        include_dirs=[numpy.get_include()],
        extra_compile_args=["-O3"],
        define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
    )
    ext_modules = cythonize(
        [ext],
        compiler_directives={
            "language_level": 3,
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )

setup(ext_modules=ext_modules)
