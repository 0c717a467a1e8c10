from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:  # no Cython: package installs with the pure-Python backend only
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "degdiam._bfs_kernel",
                ["src/degdiam/_bfs_kernel.pyx"],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
