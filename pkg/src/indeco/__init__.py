"""
indeco - upper covers of 2-chains and 2-antichains among the
indecomposable subsets of finite posets.

Constructs and recognizes the characterized families and checks the
characterizations exhaustively on all small posets.
"""

__version__ = "0.1.0"
