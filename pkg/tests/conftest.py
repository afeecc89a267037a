from fractions import Fraction

from hypothesis import strategies as st

from schurq.algebra import Polynomial


def polynomials(n: int, max_degree: int = 6, max_terms: int = 5):
    """Random sparse polynomials in n variables with small coefficients."""
    exponent = st.integers(min_value=0, max_value=max_degree)
    monomial = st.tuples(*[exponent] * n).filter(lambda e: sum(e) <= max_degree)
    coeff = st.fractions(
        min_value=Fraction(-9), max_value=Fraction(9), max_denominator=4
    )
    term_map = st.dictionaries(monomial, coeff, max_size=max_terms)
    return term_map.map(lambda terms: Polynomial(n, terms))
