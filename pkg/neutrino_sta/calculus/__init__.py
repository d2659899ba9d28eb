"""Differential operators on analytic fields and the residual harness"""
