from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [Extension("circforge._ckernels", ["src/circforge/_ckernels.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    # Pure-Python fallback kernels are used when the extension is absent.
    extensions = []

setup(ext_modules=extensions)
