import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("RELSPIN_NO_EXT"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        pass
    else:
        ext_modules = cythonize(
            [Extension("relspin._jacobi_ext", ["src/relspin/_jacobi_ext.pyx"])],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules)
