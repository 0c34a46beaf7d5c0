#! /usr/bin/env python
"""Scenario files, bundled datasets and result serialization"""
