"""Build script: compiles the scanning kernel if a C toolchain is available.

The compiled extension is an accelerator only; the package falls back to
the pure-Python kernel module when the extension is absent, so a failed
compilation degrades the install instead of breaking it.
"""

import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # toolchain missing or broken
            self._skip(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            self._skip(exc)

    @staticmethod
    def _skip(exc):
        print(
            f"WARNING: building the compiled kernel failed ({exc}); "
            "toricsurf will use the pure-Python fallback.",
            file=sys.stderr,
        )


try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("toricsurf._kernels", ["src/toricsurf/_kernels.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    print(
        "WARNING: Cython not available; skipping the compiled kernel.",
        file=sys.stderr,
    )
    ext_modules = []

setup(ext_modules=ext_modules, cmdclass={"build_ext": OptionalBuildExt})
