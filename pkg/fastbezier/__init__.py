try:
    from fastbezier._version import __version__
except ImportError:  # source tree without a build
    __version__ = "0.0.0"
