"""Build script for the optional compiled kernel extension.

The package is fully functional without the extension (a numpy fallback is
selected at import time), so the extension is marked optional: a missing
compiler degrades the install instead of failing it.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

extensions = [
    Extension(
        "mvql._kernels",
        sources=["src/mvql/_kernels.pyx"],
        extra_compile_args=["-O3"],
        optional=True,
    )
]

setup(ext_modules=cythonize(extensions, language_level=3) if cythonize else [])
