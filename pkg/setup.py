from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                name="genmaw._fastdawg",
                sources=["src/genmaw/_fastdawg.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )
except ImportError:
    # Pure-Python fallback is selected at import time, so the package
    # still works without Cython.
    extensions = []

setup(ext_modules=extensions)
