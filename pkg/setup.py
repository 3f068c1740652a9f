"""Build script: compiles the optional int64 SNF kernel.

The package is fully functional without the extension; a failed build just
leaves the pure-Python backend in place.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("wes6._snf_cy", ["src/wes6/_snf_cy.pyx"])],
        language_level=3,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
