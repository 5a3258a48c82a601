"""centra: centralizer and 2-centralizer counts of finite groups."""

__version__ = "0.1.0"
