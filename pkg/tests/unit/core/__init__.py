"""
Core module unit tests.
"""

