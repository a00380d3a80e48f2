"""Logging, errors, naming and file handling shared across the package."""
