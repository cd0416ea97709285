"""morse-strata core: exact geometry, representations, strata and point instability."""

__version__ = "0.1.0"
