"""Command-line interface for prio-wfs."""
