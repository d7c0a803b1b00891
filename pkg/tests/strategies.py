from __future__ import annotations

from hypothesis import strategies as st

from gsp4hecke.algebra import LaurentPoly
from gsp4hecke.hecke import HeckeElement

small_exp = st.integers(-4, 4)
monomials = st.tuples(st.integers(-8, 8), small_exp, small_exp)
coeffs = st.integers(-50, 50).filter(bool)

laurent = st.dictionaries(monomials, coeffs, max_size=6).map(LaurentPoly)
laurent_whole_p = st.dictionaries(
    st.tuples(st.integers(-4, 4).map(lambda e: 2 * e), small_exp, small_exp), coeffs, max_size=6
).map(LaurentPoly)
p_polys = st.dictionaries(st.integers(0, 4).map(lambda e: (2 * e, 0, 0)), st.integers(-5, 5).filter(bool), max_size=3).map(
    LaurentPoly
)

indices = st.integers(0, 6).flatmap(lambda l: st.tuples(st.integers(0, l // 2), st.just(l)))
hecke_elements = st.dictionaries(indices, p_polys, max_size=4).map(HeckeElement)
