"""Command-Line Tests."""
