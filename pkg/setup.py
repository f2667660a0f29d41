"""Builds the optional compiled elimination kernel.

The package works without it (a numpy fallback is selected at import time),
so a failed extension build degrades to a warning instead of aborting.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    import numpy as np
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("syzlab._kernels", ["src/syzlab/_kernels.pyx"],
                   include_dirs=[np.get_include()])],
        language_level=3,
    )
except ImportError as exc:  # pragma: no cover
    import warnings

    warnings.warn(f"compiled kernels skipped ({exc}); "
                  "falling back to the numpy backend")

setup(ext_modules=ext_modules)
