"""Genus-3 hyperelliptic Howe curves over finite fields."""
