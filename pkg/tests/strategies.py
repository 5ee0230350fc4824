"""Hypothesis strategies for the element families."""

from fractions import Fraction

from hypothesis import strategies as st

from trefoil_skein.exactcoeff import LaurentT
from trefoil_skein.quantum_torus import QTorusPoly
from trefoil_skein.torus_skein import TorusSkein
from trefoil_skein.trefoil_module import ModuleElt

small_frac = st.builds(Fraction, st.integers(-5, 5), st.integers(1, 3))

laurent = st.dictionaries(st.integers(-6, 6), small_frac, max_size=4).map(LaurentT)
nonzero_laurent = laurent.filter(bool)
int_laurent = st.dictionaries(st.integers(-4, 4), st.integers(-3, 3), max_size=3).map(LaurentT)

labels = st.tuples(st.integers(-3, 3), st.integers(-4, 4))


@st.composite
def skeins(draw, max_terms=3):
    out = TorusSkein.scalar(draw(int_laurent))
    for _ in range(draw(st.integers(0, max_terms))):
        p, q = draw(labels)
        out = out + TorusSkein.curve(p, q, draw(int_laurent))
    return out


@st.composite
def qtorus(draw, max_terms=4, span=3):
    out = QTorusPoly()
    for _ in range(draw(st.integers(0, max_terms))):
        a, b = draw(st.integers(-span, span)), draw(st.integers(-span, span))
        out = out + QTorusPoly.mono(a, b, draw(int_laurent))
    return out


@st.composite
def module_elts(draw, max_terms=4):
    out = ModuleElt()
    for _ in range(draw(st.integers(0, max_terms))):
        out = out + ModuleElt.term(draw(st.integers(0, 8)), draw(int_laurent), draw(st.booleans()))
    return out
