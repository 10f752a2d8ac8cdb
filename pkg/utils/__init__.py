"""
Utility modules for fpring-lab.
"""

__version__ = "1.0.0"
