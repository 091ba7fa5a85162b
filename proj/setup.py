from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ext = Pybind11Extension(
    "stallings._stallings",
    sources=[
        "src/words.cpp",
        "src/graph.cpp",
        "src/pullback.cpp",
        "src/positivize.cpp",
        "src/search.cpp",
        "src/json_io.cpp",
        "src/bindings.cpp",
    ],
    include_dirs=["include", "vendor"],
    cxx_std=20,
    extra_compile_args=["-pthread"],
    extra_link_args=["-pthread"],
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
