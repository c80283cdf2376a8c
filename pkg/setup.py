from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "comkit._kernels._ckernels",
                ["src/comkit/_kernels/_ckernels.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )
except ImportError:
    # The package works without the compiled kernels; comkit._kernels falls
    # back to the pure-Python implementation at import time.
    extensions = []

setup(ext_modules=extensions)
