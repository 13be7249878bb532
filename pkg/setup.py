"""Optional compiled-kernel build.

The package is pure Python by default; when Cython and a C compiler are
available, this builds the folding kernel as an extension module.  The
extension is marked optional, so a failed build falls back to the pure
kernel without failing the install.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "stallings._kernel._fold_c",
                ["src/stallings/_kernel/_fold_c.pyx"],
                optional=True,
            )
        ],
        language_level=3,
        quiet=True,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
