"""Build script. Compiles the exact-predicate kernel extension when Cython is
available; the package falls back to the pure-Python kernels otherwise."""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/uniguard/_kernels/_fast.pyx"],
        language_level=3,
    )
except Exception as exc:  # pragma: no cover - build environment dependent
    print("kernel extension skipped: %s" % exc)

setup(ext_modules=ext_modules)
