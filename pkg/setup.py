"""Build script for the optional compiled kernel extension.

The package works without the extension (a NumPy fallback is selected at
import time); building it just makes the hot loops faster.
"""
import numpy as np
from setuptools import setup

try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [
            Extension(
                "tieredseg.kernels._ckern",
                sources=["src/tieredseg/kernels/_ckern.pyx"],
                include_dirs=[np.get_include()],
                extra_compile_args=["-O3"],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
            )
        ]
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
