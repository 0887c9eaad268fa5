"""Build script: compiles the optional term-arithmetic extension.

The package runs fine without the extension (a pure Python twin of the
kernel module is selected at import time); set NILHECKEB_SKIP_EXT=1 to
skip compilation entirely.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("NILHECKEB_SKIP_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("nilheckeb._termkernels", ["src/nilheckeb/_termkernels.pyx"])],
            language_level=3,
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
