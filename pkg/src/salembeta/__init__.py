"""Exact greedy beta expansions for degree-6 Salem numbers.

Subpackages cover integer/rational polynomial arithmetic, Salem
certification and enumeration, the expansion engine with periodicity
detection, co-factor enumeration and certification, the two infinite
families, and a command line front end.
"""

__version__ = "0.1.0"
