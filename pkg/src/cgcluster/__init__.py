"""Exact construction and verification of the Cremmer-Gervais cluster structure on Mat_n / SL_n."""

__version__ = "0.1.0"
