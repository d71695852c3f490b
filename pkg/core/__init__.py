# core/__init__.py
"""
Core Package (Koszul Toolkit)

Application state, configuration, plugin management, input parsing and JSON
serialization.

Project: Koszul Toolkit
License: MIT
"""
