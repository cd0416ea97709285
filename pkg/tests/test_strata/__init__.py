"""Stratification Module Tests."""
