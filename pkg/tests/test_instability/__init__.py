"""Instability Module Tests."""
