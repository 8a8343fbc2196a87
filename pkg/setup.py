"""Build script for the optional compiled kernels.

The package is pure Python plus one Cython extension holding the hot
kernels (integer matrix algebra, fraction-free elimination, RK4 stepper).
If the extension cannot be built the install still succeeds and the
pure-Python fallback in symtrans._kernels.pure is used at import time.
"""

import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Build the extension if possible, otherwise warn and continue."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing, etc.
            print(f"warning: compiled kernels skipped ({exc}); "
                  "falling back to pure-Python kernels")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: building {ext.name} failed ({exc}); "
                  "falling back to pure-Python kernels")


extensions = []
if not os.environ.get("SYMTRANS_NO_EXT"):
    try:
        from Cython.Build import cythonize

        extensions = cythonize(
            [
                Extension(
                    "symtrans._kernels._fast",
                    ["src/symtrans/_kernels/_fast.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        print("warning: Cython not available; compiled kernels skipped")

setup(ext_modules=extensions, cmdclass={"build_ext": optional_build_ext})
