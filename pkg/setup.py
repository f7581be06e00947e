import os
import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Build the compiled kernel if possible; the pure-Python kernel is a
    complete fallback, so a failed extension build must not fail the install."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # missing compiler, broken toolchain, ...
            self._warn(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            self._warn(exc)

    @staticmethod
    def _warn(exc):
        print(
            f"WARNING: building vira._kernel_cy failed ({exc}); "
            "falling back to the pure-Python kernel",
            file=sys.stderr,
        )


ext_modules = []
if os.environ.get("VIRA_NO_EXTENSION", "0") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("vira._kernel_cy", ["src/vira/_kernel_cy.pyx"])],
            language_level="3",
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules, cmdclass={"build_ext": optional_build_ext})
