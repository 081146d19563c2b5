import os

from setuptools import setup
from setuptools.extension import Extension

ext_modules = []
if os.environ.get("QUATRING_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize
    except ImportError:
        pass
    else:
        ext_modules = cythonize(
            [Extension("quatring._ckernels", ["src/quatring/_ckernels.pyx"],
                       extra_compile_args=["-O2"])],
            language_level="3",
        )

setup(ext_modules=ext_modules)
