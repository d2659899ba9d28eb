"""Electromagnetic field configurations: force-free, duality-rotated and Hertz-derived"""
