"""morse-strata Test Suite."""
