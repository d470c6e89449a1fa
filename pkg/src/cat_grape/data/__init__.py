"""Packaged parameter files loaded through ``importlib_resources``."""
