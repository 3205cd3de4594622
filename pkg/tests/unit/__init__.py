"""
Unit tests.
"""

