# plugins/fields/__init__.py
"""Exact coefficient fields (rational numbers, prime fields)."""
