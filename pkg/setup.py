import sys

from setuptools import Extension, setup

ext_modules = []
try:
    import numpy
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "gring._speedups",
                ["src/gring/_speedups.pyx"],
                include_dirs=[numpy.get_include()],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
            )
        ],
        language_level=3,
    )
except Exception as exc:  # no Cython / no compiler: pure-Python fallback is used
    print(f"gring: building without compiled speedups ({exc})", file=sys.stderr)

setup(ext_modules=ext_modules)
