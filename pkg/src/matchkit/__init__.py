"""matchkit: matching theory on small graphs, with statement checkers."""

__version__ = "0.1.0"
TOOL_VERSION = f"matchkit {__version__}"
