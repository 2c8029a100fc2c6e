"""Tests package for InfoFlow."""
