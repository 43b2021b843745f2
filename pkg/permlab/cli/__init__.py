"""Command line interface and configuration for permlab."""
