"""Geometry Module Tests."""
