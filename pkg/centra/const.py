"""Constants for centra"""

from typing import Final

DOMAIN: Final = "centra"

ENV_ORDER_CAP: Final = "CENTRA_ORDER_CAP"
DEFAULT_ORDER_CAP: Final = 600
REPORT_VERSION: Final = "report_v1"

# clique searches (r) in the suite stay below this order
CLIQUE_ORDER_LIMIT: Final = 100

FAMILY_RANGE: Final = (2, 8)
U_M_RANGE: Final = (3, 8)

PRODUCT_SUBSET: Final = (
    "C(2)",
    "C(3)",
    "S(3)",
    "D(8)",
    "A(4)",
    "T(2)",
    "D(10)",
    "C(6)",
)

TRIPLE_PRODUCTS: Final = (
    ("S(3)", "C(2)", "C(2)"),
    ("C(2)", "C(2)", "C(2)"),
    ("S(3)", "S(3)", "C(3)"),
    ("D(8)", "S(3)", "C(3)"),
    ("D(10)", "S(3)", "C(2)"),
)

# (n, p, k): Z_n x| Z_p with p prime and x -> x^k non-trivial
SEMIDIRECT_TRIPLES: Final = (
    (3, 2, 2),
    (4, 2, 3),
    (5, 2, 4),
    (6, 2, 5),
    (7, 2, 6),
    (7, 3, 2),
    (8, 2, 3),
    (8, 2, 5),
    (8, 2, 7),
    (9, 2, 8),
    (9, 3, 4),
    (10, 2, 9),
    (12, 2, 5),
    (12, 2, 7),
    (12, 2, 11),
    (13, 3, 3),
    (21, 3, 4),
)

FORMAT_JSON: Final = "json"
FORMAT_TEXT: Final = "text"
FORMAT_CSV: Final = "csv"
FORMATS: Final = (FORMAT_JSON, FORMAT_TEXT, FORMAT_CSV)

EXIT_OK: Final = 0
EXIT_FAILURES: Final = 1
EXIT_USAGE: Final = 2
