"""Tests for Unitary Cayley."""
