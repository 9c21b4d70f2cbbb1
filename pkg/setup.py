"""Builds the optional compiled kernels.

The extension is marked optional: if Cython or a C compiler is missing the
package installs anyway and runs on the pure-Python kernels.
"""
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "tripartite_ppt._ckernels",
                ["src/tripartite_ppt/_ckernels.pyx"],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
