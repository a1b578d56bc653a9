"""Packaged registry, table, and errata data files."""
