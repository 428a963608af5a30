"""
swcalc - symbolic Seiberg-Witten calculus for smooth simply connected 4-manifolds
"""

__version__ = "0.1.0"
