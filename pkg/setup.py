"""Build script for the optional compiled kernel extension.

The package is pure Python by default; if Cython and a C compiler are
available, the hot kernels in ``_kernels.pyx`` are compiled and picked
up automatically at import time.  Any build failure falls back to the
pure-Python kernels rather than failing the install.
"""

from setuptools import setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # pragma: no cover
            print(f"skipping compiled kernels ({exc}); using pure-Python fallback")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:  # pragma: no cover
            print(f"skipping {ext.name} ({exc}); using pure-Python fallback")


ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/formalquintic/_kernels.pyx"], language_level="3"
    )
except ImportError:  # pragma: no cover
    print("Cython not available; installing with pure-Python kernels")

setup(ext_modules=ext_modules, cmdclass={"build_ext": OptionalBuildExt})
