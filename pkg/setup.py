"""Build script for the optional compiled elimination kernels.

The package works without the extension (a pure numpy fallback is selected
at import time), so the extension is marked optional: a missing compiler
degrades the install instead of failing it.

In-place build for development:  python setup.py build_ext --inplace
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

ext_modules = []
if cythonize is not None:
    ext_modules = cythonize(
        [
            Extension(
                "inclurank.linalg._kernels",
                ["src/inclurank/linalg/_kernels.pyx"],
                optional=True,
            )
        ],
        language_level="3",
    )

setup(ext_modules=ext_modules)
