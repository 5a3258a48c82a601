"""Constants for the centra group library"""

from typing import Final

DOMAIN: Final = "centra.groups"

# Construction bounds
ELEMENT_CAP: Final = 20_000
COSET_CAP: Final = 10_000
ISOMORPHISM_ORDER_CAP: Final = 600

# Associativity is checked on every triple up to this order, above it
# only on a seeded random sample.
FULL_ASSOCIATIVITY_LIMIT: Final = 512
ASSOCIATIVITY_SAMPLES: Final = 10_000
ASSOCIATIVITY_SEED: Final = 20_240_601

IDENTITY: Final = 0

# PSL(2, q) fields supported by psl2()
PSL2_FIELDS: Final = (5, 7, 8)

# GF(8) = GF(2)[x] / (x^3 + x + 1), elements as 3-bit integers
GF8_MODULUS: Final = 0b1011
GF8_GENERATOR: Final = 0b010
