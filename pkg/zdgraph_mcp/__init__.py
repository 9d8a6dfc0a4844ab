"""Zero-divisor graph lab - decision procedures and brute-force oracles for C_P(X) graphs"""

__version__ = "0.3.0"
__author__ = "Simon Carr"
__email__ = "simon.carr@gmail.com"
