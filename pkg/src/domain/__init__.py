"""Domain Layer - value types, constants and errors.

Pure data with validation; the arithmetic lives in ``src.services``.
"""
