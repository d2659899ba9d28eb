"""Quantized neutrino mass spectrum"""
