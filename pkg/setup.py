from setuptools import Extension, setup

# The Cython kernel is optional: if it cannot be built the package falls
# back to the pure-Python twin in iyang._kernel._poly_py at import time.
ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("iyang._kernel._poly_cy", ["src/iyang/_kernel/_poly_cy.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except Exception as exc:  # pragma: no cover - build environment dependent
    import sys

    print(f"iyang: building without compiled kernel ({exc})", file=sys.stderr)

setup(ext_modules=ext_modules)
