"""Build script for the optional compiled kernels.

The extension is optional: when Cython or a C compiler is missing the
package installs anyway and falls back to ``abpart._kernels_py``.
"""
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:  # pragma: no cover
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "abpart._kernels",
                ["src/abpart/_kernels.pyx"],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
