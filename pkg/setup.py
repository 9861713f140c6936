from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "tripart._reduce",
                ["src/tripart/_reduce.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )
except ImportError:
    # No Cython: install without the compiled kernel; the package falls
    # back to the pure-Python implementation at import time.
    ext_modules = []

setup(ext_modules=ext_modules)
