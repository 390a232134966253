"""Utility modules - structured logging."""
