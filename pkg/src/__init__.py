"""
Pacote src do rankmac: identidade de MacWilliams para a métrica do posto.
"""

__version__ = "0.1.0"
