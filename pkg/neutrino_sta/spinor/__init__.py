"""Dirac-Hestenes spinor fields"""
