"""morse-strata command-line interface."""
