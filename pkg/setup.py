import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("ORBITCERT_SKIP_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("orbitcert.kernels._core", ["src/orbitcert/kernels/_core.pyx"])],
            language_level="3",
        )
    except ImportError:
        # No Cython: the pure-Python kernels are used at runtime instead.
        ext_modules = []

setup(ext_modules=ext_modules)
