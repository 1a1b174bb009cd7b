import os

from setuptools import setup

ext_modules = []
if os.environ.get("OPAQ_SKIP_EXT") != "1":
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/opaq/_subsetc.pyx"],
        compiler_directives={"language_level": 3},
    )

setup(ext_modules=ext_modules)
