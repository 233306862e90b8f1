from ._jit import backend

__version__ = "0.1.0"
