"""
Shared constants for the Unitary Cayley domain.
"""

# Distance value for vertex pairs in different components
UNREACHABLE = -1

# Initial pair colours for 2-dimensional refinement
WL_DIAGONAL = 0
WL_EDGE = 1
WL_NON_EDGE = 2

# Printed spectrum-table row names
TABLE_ROW_PRIME = "prime"
TABLE_ROW_PRIME_POWER = "prime power"
TABLE_ROW_TWICE_PRIME = "2p"
TABLE_ROW_TWO_ODD_PRIMES = "pq"
TABLE_ROW_SQUARE_FREE_EVEN = "square free even"
TABLE_ROW_SQUARE_FREE_ODD = "square free odd"
TABLE_ROW_EVEN_NOT_SQUARE_FREE = "even but not square free"
TABLE_ROW_ODD_NOT_SQUARE_FREE = "odd but not square free"

# CLI exit codes
EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
