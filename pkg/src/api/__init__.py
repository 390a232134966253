"""API Layer - read-only HTTP routes over the Unitary Cayley services."""
