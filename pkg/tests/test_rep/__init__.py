"""Representation Module Tests."""
