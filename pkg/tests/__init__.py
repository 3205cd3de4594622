"""
Test suite for indeco.
"""
