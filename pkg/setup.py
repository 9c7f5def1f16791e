import numpy as np
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "hardy_embed._core",
                ["src/hardy_embed/_core.pyx"],
                include_dirs=[np.get_include()],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    # Pure-Python fallback in hardy_embed._core_py is used when the
    # extension is unavailable; the package still installs and works.
    extensions = []

setup(ext_modules=extensions)
