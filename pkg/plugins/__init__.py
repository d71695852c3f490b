# plugins/__init__.py
"""Admissible orders and coefficient fields, loaded through core.plugin_catalog."""
