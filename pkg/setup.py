"""Build script for the optional compiled trace-evaluation kernel.

The package works without the extension (a NumPy fallback is selected at
import time); building it makes exhaustive equivalence checks much faster.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "svakit.equiv._kernel",
                sources=["src/svakit/equiv/_kernel.pyx"],
            )
        ],
        language_level=3,
    )
except ImportError:
    # No Cython: install pure-Python only.
    ext_modules = []

setup(ext_modules=ext_modules)
