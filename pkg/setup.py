"""Build script for the optional compiled Monte Carlo kernel.

The package is pure Python except for qpswitch.mc._mckernel, a Cython
translation of the per-shot loop. If Cython or a C compiler is missing the
build falls through and the numpy fallback kernel is used at import time.

-ffp-contract=off keeps the C arithmetic bit-identical to the numpy
fallback (no FMA contraction), so both backends produce identical counts.
"""

import warnings

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # missing compiler, etc.
            warnings.warn(f"compiled MC kernel not built ({exc}); "
                          "falling back to the pure-Python kernel")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            warnings.warn(f"compiled MC kernel not built ({exc}); "
                          "falling back to the pure-Python kernel")


def _extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        warnings.warn("Cython unavailable; building without the compiled MC kernel")
        return []
    ext = Extension(
        "qpswitch.mc._mckernel",
        ["src/qpswitch/mc/_mckernel.pyx"],
        extra_compile_args=["-O3", "-ffp-contract=off"],
    )
    return cythonize([ext], language_level=3)


setup(ext_modules=_extensions(), cmdclass={"build_ext": OptionalBuildExt})
