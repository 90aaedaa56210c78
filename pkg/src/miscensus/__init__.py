"""Maximal independent sets, twin-free graphs and extremal censuses."""
