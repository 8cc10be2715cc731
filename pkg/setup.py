import os

from setuptools import Extension, setup


def extensions():
    """Compiled kernels are optional: the package falls back to numpy."""
    if os.environ.get("TVGSR_NO_EXT"):
        return []
    try:
        import numpy
        from Cython.Build import cythonize
    except ImportError:
        return []
    ext = Extension(
        "tvgsr._kernels._speedups",
        ["src/tvgsr/_kernels/_speedups.pyx"],
        include_dirs=[numpy.get_include()],
        language="c++",
        extra_compile_args=["-O3"],
        define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
    )
    return cythonize([ext], language_level="3")


setup(ext_modules=extensions())
