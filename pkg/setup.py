"""Build script: compiles the optional Cython kernel extension.

The extension is strictly optional. If Cython or a C compiler is
unavailable, the build proceeds without it and the package falls back
to the pure-Python kernels at import time. Set CYCLESPEC_NO_EXT=1 to
skip the extension deliberately.
"""

import os

from setuptools import setup
from setuptools.command.build_ext import build_ext
from setuptools.errors import CCompilerError, ExecError, PlatformError


class OptionalBuildExt(build_ext):
    """Tolerate compiler failures: the package works without the extension."""

    def run(self):
        try:
            super().run()
        except (CCompilerError, ExecError, PlatformError, FileNotFoundError) as exc:
            print(f"warning: skipping compiled kernels ({exc}); pure-Python fallback will be used")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except (CCompilerError, ExecError, PlatformError, FileNotFoundError) as exc:
            print(f"warning: failed to build {ext.name} ({exc}); pure-Python fallback will be used")


ext_modules = []
if not os.environ.get("CYCLESPEC_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/cyclespec/_kernels.pyx"],
            compiler_directives={
                "language_level": "3",
                "boundscheck": False,
                "wraparound": False,
                "cdivision": True,
            },
        )
    except ImportError:
        print("warning: Cython not available; pure-Python fallback will be used")

setup(ext_modules=ext_modules, cmdclass={"build_ext": OptionalBuildExt})
