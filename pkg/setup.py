"""Build script for the optional compiled kernel extension.

The package works without the extension (a pure-Python backend is selected
at import time), so a failed compile degrades gracefully instead of
breaking the install.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [
            Extension(
                "triangle_words._kernels._fast",
                ["src/triangle_words/_kernels/_fast.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except Exception as exc:  # pragma: no cover
    print(f"warning: building without compiled kernels ({exc})")

setup(ext_modules=ext_modules)
