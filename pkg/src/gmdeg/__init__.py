"""Verification toolkit for the conic-bundle degeneration arguments on Gushel-Mukai fourfolds."""
__version__ = "0.1.0"
