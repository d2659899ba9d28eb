"""Utilities module"""