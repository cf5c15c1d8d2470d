import os

from setuptools import Extension, setup

ext = []
if not os.environ.get("YANGIAN_AUDIT_PURE"):
    from Cython.Build import cythonize

    ext = cythonize([Extension("yangian_audit._ckernel", ["src/yangian_audit/_ckernel.pyx"])],
                    compiler_directives={"language_level": "3"})

setup(ext_modules=ext)
