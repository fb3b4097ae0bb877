import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("GALSTRUVE_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("galstruve._ckernels", ["src/galstruve/_ckernels.pyx"])],
            compiler_directives={"language_level": 3, "embedsignature": True},
        )
    except ImportError:
        # No Cython: install runs with the pure-Python kernels only.
        ext_modules = []

setup(ext_modules=ext_modules)
