"""Test package for the weierstrass library and CLI."""
