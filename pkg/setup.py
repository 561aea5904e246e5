from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

if cythonize is not None:
    ext = Extension(
        "pivotlab.kernels._ckernels",
        ["src/pivotlab/kernels/_ckernels.pyx"],
        extra_compile_args=["-O3"],
    )
    ext_modules = cythonize([ext], compiler_directives={"language_level": "3"})
else:
    # no Cython: install pure, the package falls back to the NumPy kernels
    ext_modules = []

setup(ext_modules=ext_modules)
