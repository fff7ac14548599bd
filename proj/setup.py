"""Builds the C++ extension through CMake.

The CMake project is the single source of truth for compilation; this file
only points setuptools at it. Requires a C++20 compiler and CMake >= 3.20 on
PATH. With the build requirements preinstalled use:

    pip install . --no-build-isolation
"""

import subprocess
import sys
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name: str):
        super().__init__(name, sources=[])


class CMakeBuild(build_ext):
    def build_extension(self, ext: CMakeExtension) -> None:
        source_dir = Path(__file__).resolve().parent
        build_dir = Path(self.build_temp) / "cmake"
        build_dir.mkdir(parents=True, exist_ok=True)

        # get_ext_fullpath already ends in .../polartrack/_core.<abi>.so, so
        # its parent is the wheel's package directory.
        ext_dir = Path(self.get_ext_fullpath(ext.name)).resolve().parent

        configure = [
            "cmake",
            str(source_dir),
            f"-DCMAKE_LIBRARY_OUTPUT_DIRECTORY={ext_dir}",
            f"-DPython3_EXECUTABLE={sys.executable}",
            "-DCMAKE_BUILD_TYPE=Release",
            "-DPOLARTRACK_BUILD_PYTHON=ON",
            "-DPOLARTRACK_BUILD_TESTS=OFF",
            "-DPOLARTRACK_BUILD_CLI=OFF",
        ]
        try:
            import pybind11

            configure.append(f"-Dpybind11_DIR={pybind11.get_cmake_dir()}")
        except ImportError:
            pass

        subprocess.run(configure, cwd=build_dir, check=True)
        subprocess.run(
            ["cmake", "--build", ".", "--target", "polartrack_pymod", "-j"],
            cwd=build_dir,
            check=True,
        )


setup(
    packages=["polartrack"],
    package_dir={"": "python"},
    ext_modules=[CMakeExtension("polartrack._core")],
    cmdclass={"build_ext": CMakeBuild},
)
