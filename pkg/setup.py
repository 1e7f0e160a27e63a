"""Build script: compiles the max-min closure kernel when a C toolchain is available.

The package works without the extension (a pure-Python kernel is selected at
import time), so any failure to cythonize/compile is downgraded to a warning.
"""

import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """A build_ext that warns instead of failing when the compiler is missing."""

    def run(self):
        try:
            build_ext.run(self)
        except Exception as exc:  # CompileError, DistutilsPlatformError, ...
            self._warn(exc)

    def build_extension(self, ext):
        try:
            build_ext.build_extension(self, ext)
        except Exception as exc:
            self._warn(exc)

    @staticmethod
    def _warn(exc):
        print(
            "WARNING: building the compiled kernel failed (%s); "
            "falling back to the pure-Python implementation." % (exc,),
            file=sys.stderr,
        )


def extension_modules():
    try:
        from Cython.Build import cythonize
    except ImportError:
        print(
            "WARNING: Cython not available; the compiled kernel will not be built.",
            file=sys.stderr,
        )
        return []
    return cythonize(
        [
            Extension(
                "pathvote.pathscores._core",
                ["src/pathvote/pathscores/_core.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )


setup(
    ext_modules=extension_modules(),
    cmdclass={"build_ext": optional_build_ext},
)
