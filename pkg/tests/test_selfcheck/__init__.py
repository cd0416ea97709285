"""Self-Check Suite Tests."""
