"""Build script: compiles the optional Cython kernel.

The compiled extension is a pure accelerator.  If Cython or a C compiler is
missing, the build falls through to the pure-Python kernel and the install
still succeeds.
"""

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """Skip the extension (with a notice) instead of failing the install."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing, etc.
            print(f"NOTE: skipping compiled kernel ({exc}); "
                  f"bassinv will use the pure-Python kernel")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"NOTE: could not compile {ext.name} ({exc}); "
                  f"bassinv will use the pure-Python kernel")


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        print("NOTE: Cython not available; building without the compiled kernel")
        return []
    return cythonize(
        [Extension("bassinv._core_cy", ["src/bassinv/_core_cy.pyx"])],
        compiler_directives={"language_level": "3"},
    )


setup(ext_modules=extensions(), cmdclass={"build_ext": OptionalBuildExt})
