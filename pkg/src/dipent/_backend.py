"""Kernel backend selection: compiled extension if built, numpy fallback otherwise."""

try:
    from . import _kernels as _impl

    HAVE_COMPILED = True
except ImportError:  # extension not built on this install
    from . import _kernels_py as _impl

    HAVE_COMPILED = False

erfcx_kernel = _impl.erfcx
erfcx_arr = _impl.erfcx_arr
hermite_functions = _impl.hermite_functions
laguerre_polys = _impl.laguerre_polys


def backend_name():
    return "compiled" if HAVE_COMPILED else "pure"
