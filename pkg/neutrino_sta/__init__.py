"""Spacetime-algebra numerics for magnetic-current fields and the neutrino mass spectrum"""

__version__ = "1.0.0"
__description__ = "Identity checks in Cl(1,3) and the quantized neutrino mass spectrum"
