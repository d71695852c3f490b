# utils/__init__.py
"""
Utils Package (Koszul Toolkit)

Verdict constants and shared formatting helpers.

Project: Koszul Toolkit
License: MIT
"""
