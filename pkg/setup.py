"""Build script: compiles the optional Cython kernel.

The package is fully functional without the extension (a pure-Python twin
is selected at import time), so a missing Cython toolchain only costs speed.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("sl2star._kernel_cy", ["src/sl2star/_kernel_cy.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
