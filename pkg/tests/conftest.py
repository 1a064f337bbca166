"""Shared strategies and an independent oracle.

The oracle is sympy's exact Quaternion, which shares no code with nccov.
"""
import itertools
from fractions import Fraction

import sympy
from hypothesis import strategies as st
from sympy.algebras.quaternion import Quaternion as SymQ

from nccov import NcMatrix, Quaternion, is_rc_nonsingular
from nccov.vspace import CoordRow


def to_sym(q: Quaternion) -> SymQ:
    return SymQ(*(sympy.Rational(c.numerator, c.denominator) for c in q.coefficients))


def from_sym(s: SymQ) -> Quaternion:
    return Quaternion(*(Fraction(int(c.p), int(c.q)) for c in (s.a, s.b, s.c, s.d)))


def oracle_mul(*qs: Quaternion) -> Quaternion:
    acc = SymQ(1, 0, 0, 0)
    for q in qs:
        acc = acc * to_sym(q)
    return from_sym(acc)


def oracle_matmul(a: NcMatrix, b: NcMatrix) -> NcMatrix:
    """Index-sum product with every scalar multiplication done by sympy."""
    rows = []
    for i in range(a.rows):
        row = []
        for j in range(b.cols):
            acc = SymQ(0, 0, 0, 0)
            for k in range(a.cols):
                acc = acc + to_sym(a[i, k]) * to_sym(b[k, j])
            row.append(from_sym(acc))
        rows.append(row)
    return NcMatrix.from_rows(rows)


def row(*xs) -> CoordRow:
    return CoordRow.of(*xs)


I, J, K = Quaternion(0, 1), Quaternion(0, 0, 1), Quaternion(0, 0, 0, 1)
ONE = Quaternion(1)

rationals = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 3))
quaternions = st.builds(Quaternion, rationals, rationals, rationals, rationals)
small_dims = st.integers(1, 3)


@st.composite
def matrices(draw, rows=None, cols=None):
    r = draw(small_dims) if rows is None else rows
    c = draw(small_dims) if cols is None else cols
    entries = draw(st.lists(quaternions, min_size=r * c, max_size=r * c))
    return NcMatrix(r, c, tuple(entries))


@st.composite
def coord_rows(draw, n):
    return CoordRow(draw(matrices(1, n)))


@st.composite
def nonsingular(draw, n):
    return draw(matrices(n, n).filter(is_rc_nonsingular))


@st.composite
def tensors(draw, arity, n, max_terms=2):
    from nccov.geometry import TensorPolyMap
    coords = {}
    for key in itertools.product(range(n), repeat=arity + 1):
        terms = draw(st.lists(st.tuples(*([quaternions] * (arity + 1))), max_size=max_terms))
        if terms:
            coords[key] = tuple(terms)
    return TensorPolyMap(arity, n, coords)


def oracle_apply(a, vs) -> CoordRow:
    """Evaluate a tensor-sum map straight from its definition with sympy scalars."""
    out = [SymQ(0, 0, 0, 0) for _ in range(a.dim)]
    for (i, *js), terms in a.coords.items():
        for t in terms:
            p = to_sym(t[0])
            for v, j, factor in zip(vs, js, t[1:]):
                p = p * to_sym(v[j]) * to_sym(factor)
            out[i] = out[i] + p
    return CoordRow.of(*(from_sym(x) for x in out))


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import LINES
    except ImportError:
        return
    if LINES:
        terminalreporter.section("acceptance criteria")
        for line in LINES:
            terminalreporter.write_line(line)
