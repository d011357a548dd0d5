"""Build script: compiles the fixed-step recurrence kernel as a C extension.

The package works without the extension (a pure-Python kernel is selected at
import time), so a failed compile only costs speed.  -ffp-contract=off keeps
the C arithmetic bit-identical to the Python fallback (no FMA contraction).
"""

import numpy as np
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "oscint._kernel",
                ["src/oscint/_kernel.pyx"],
                extra_compile_args=["-O2", "-ffp-contract=off"],
            )
        ],
        language_level=3,
    )
except ImportError:
    ext_modules = []

setup(
    ext_modules=ext_modules,
    include_dirs=[np.get_include()],
)
