from setuptools import setup, Extension

# The compiled kernel is optional: if Cython is unavailable the package
# falls back to the pure-Python kernel at import time.
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("localcut._speedups", ["src/localcut/_speedups.pyx"])],
        language_level=3,
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
