"""Problem file format: parsing, serialization, round trips."""

import os

import pytest

from frobx.examples import nilcoxeter_extension
from frobx.extension import (DualGenerators, check_left_trace,
                             check_right_trace, find_dual_generators,
                             induced_trace, verify_dual_generators)
from frobx.fileformat import (FormatError, dumps_extension, load, loads,
                              parse_certificate)

DATA = os.path.join(os.path.dirname(__file__), "data")


def test_golden_certificate_loads_and_verifies():
    problem = load(os.path.join(DATA, "n2.alg"))
    assert set(problem.algebras) == {"N2", "N1"}
    tr = problem.traces["tr"]
    assert check_left_trace(tr)
    assert check_right_trace(tr)
    degree, pairs = parse_certificate(problem)
    assert degree == tr.degree
    assert verify_dual_generators(DualGenerators(tr, pairs))


def test_dump_load_roundtrip_idempotent():
    pair = nilcoxeter_extension(2, 3)
    tr = induced_trace(pair)
    dg = find_dual_generators(tr)
    text = dumps_extension(tr, dual_pairs=dg.pairs)
    problem = loads(text)
    tr2 = next(iter(problem.traces.values()))
    _, pairs = parse_certificate(problem)
    text2 = dumps_extension(tr2, dual_pairs=pairs)
    assert text == text2
    assert tr2.mapping.columns == tr.mapping.columns
    assert check_left_trace(tr2)


def test_loads_minimal_algebra():
    problem = loads("""
[field]
rational

[algebra T]
rank 1
basis 1 0 0
basis x 1 0
unit 1 1
mul 1 1 = 1 1
mul 1 x = 1 x
mul x 1 = 1 x
""")
    A = problem.algebras["T"]
    assert A.dim == 2
    assert A.multiply(A.basis_vector(1), A.basis_vector(1)) == A.zero()


def test_prime_field_header():
    problem = loads("""
[field]
prime 5

[algebra T]
rank 1
basis 1 0 0
unit 1 1
mul 1 1 = 3 1
""")
    A = problem.algebras["T"]
    prod = A.multiply(A.basis_vector(0), A.basis_vector(0))
    assert prod[0] == A.field.from_int(3)


@pytest.mark.parametrize("text,msg", [
    ("[algebra X]\nrank 1\n", "field"),
    ("[field]\nrational\n\n[algebra X]\nrank 1\nbasis 1 0\n", "degree"),
    ("[field]\nrational\n\n[bogus]\n", "block"),
])
def test_format_errors(text, msg):
    with pytest.raises(FormatError) as err:
        loads(text)
    assert msg in str(err.value).lower()
