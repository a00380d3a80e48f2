"""
cubeplan: motion planning for reconfigurable systems through CAT(0) cube complexes
and posets with inconsistent pairs.
"""

__version__ = "0.1.0"
