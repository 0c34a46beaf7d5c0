# -*- coding: utf-8 -*-

"""Top-level package for netmig."""

__author__ = """Jason Joyce"""
__email__ = 'fuzzball81@gmail.com'
__version__ = '0.1.0'
