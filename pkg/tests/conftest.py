"""Keeps the tests directory importable for its helper modules."""
