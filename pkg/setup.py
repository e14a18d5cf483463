"""Build script: compiles the optional enumeration kernel when Cython is available.

The package is fully functional without the extension; `suspforge.counting`
falls back to the pure-Python kernel at import time.
"""

import os
import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """Treat extension build failures as a soft warning, not a hard error."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # toolchain missing or broken
            self._warn(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            self._warn(exc)

    @staticmethod
    def _warn(exc):
        print(
            "warning: compiled kernel unavailable (%s); "
            "using the pure-Python fallback" % exc,
            file=sys.stderr,
        )


def extensions():
    if os.environ.get("SUSPFORGE_NO_EXT"):
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    return cythonize(
        [Extension("suspforge._speedups", ["src/suspforge/_speedups.pyx"])],
        language_level="3",
    )


setup(ext_modules=extensions(), cmdclass={"build_ext": OptionalBuildExt})
