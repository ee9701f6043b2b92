"""Build script: compiles the optional accelerator extension.

The package works without the extension (a pure-Python backend is selected
at import time); set MATCHPOWER_NO_EXT=1 to skip the build entirely.
"""

import os

from setuptools import setup

ext_modules = []
if not os.environ.get("MATCHPOWER_NO_EXT"):
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [Extension("matchpower._kernels._ckern",
                       ["src/matchpower/_kernels/_ckern.pyx"])],
            language_level=3,
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)
