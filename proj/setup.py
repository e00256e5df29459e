from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ext = Pybind11Extension(
    "mesc._core",
    sources=[
        "python/bindings.cpp",
        "src/core.cpp",
        "src/solvers.cpp",
        "src/coloring.cpp",
        "src/generators.cpp",
        "src/parallel.cpp",
    ],
    include_dirs=["include"],
    cxx_std=20,
)

setup(
    packages=["mesc"],
    package_dir={"": "python"},
    ext_modules=[ext],
    cmdclass={"build_ext": build_ext},
)
