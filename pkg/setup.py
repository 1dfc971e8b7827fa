import os

from setuptools import setup

# The compiled kernel is an optional accelerator: if Cython or a C compiler
# is unavailable the package falls back to the pure-Python twin at import.
ext_modules = []
if os.environ.get("NILLAB_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize
        from setuptools.extension import Extension

        ext = Extension("nillab._core_cy", ["src/nillab/_core_cy.pyx"])
        ext.optional = True
        ext_modules = cythonize([ext], language_level="3")
    except ImportError:
        pass

setup(ext_modules=ext_modules)
