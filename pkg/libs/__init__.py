"""
Forcing Lab - Shared Libraries Package
"""

__version__ = "0.1.0"
