from green.polynomials import ascending_coeffs, green_polynomial, kostka_foulkes, kostka_number
from green.tableaux import Tableau, charge, ssyt_enumerate, word_charge

__all__ = [
    "Tableau", "charge", "ssyt_enumerate", "word_charge",
    "ascending_coeffs", "green_polynomial", "kostka_foulkes", "kostka_number",
]
