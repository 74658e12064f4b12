"""Build script for the optional compiled alignment kernel.

The package is pure Python plus one Cython extension for the edit-distance
hot loop.  If Cython or a C compiler is unavailable the extension is skipped
and the package falls back to the pure-Python kernel at import time.
"""

import warnings

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


def _extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    return cythonize(
        [Extension("medasr.metrics._align_c", ["src/medasr/metrics/_align_c.pyx"])],
        language_level="3",
    )


class OptionalBuildExt(build_ext):
    """Treat extension build failures as a soft warning, not a hard error."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing, bad toolchain, ...
            warnings.warn(f"skipping compiled alignment kernel: {exc}")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            warnings.warn(f"skipping compiled alignment kernel: {exc}")


setup(ext_modules=_extensions(), cmdclass={"build_ext": OptionalBuildExt})
