"""Shared pytest configuration; also puts this directory on sys.path so
test modules can import the naive reference oracles."""
