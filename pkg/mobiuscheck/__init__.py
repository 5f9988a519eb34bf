"""Weak realizability of hieroglyphs (chord diagrams) on the Moebius band."""

__version__ = "0.3.0"
