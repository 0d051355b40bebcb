"""Builtin algebra families: structure constants and embeddings."""

from math import comb, factorial

import pytest

from frobx.examples import (compose, exterior_algebra, inversions,
                            longest_element, nilcoxeter, nilcoxeter_extension,
                            non_projective_pair, perm_label,
                            sorted_permutations, symmetric_group_algebra,
                            symmetric_group_extension, truncated_polynomial)
from frobx.fields import QQ
from frobx.gsalg import validate_algebra


def test_permutation_helpers():
    # permutations are 0-indexed tuples; labels are one-line notation
    assert longest_element(3) == (2, 1, 0)
    assert inversions(longest_element(4)) == comb(4, 2)
    assert perm_label((1, 0, 2)) == "213"
    w = (1, 2, 0)
    v = (2, 0, 1)
    assert compose(w, v) == tuple(w[v[i]] for i in range(3))


def test_nilcoxeter_dimensions_and_relations():
    for n in (2, 3, 4):
        A = nilcoxeter(n).algebra
        assert A.dim == factorial(n)
        assert validate_algebra(A)
        def transposition(i):
            w = list(range(n))
            w[i - 1], w[i] = w[i], w[i - 1]
            return tuple(w)

        gens = [A.labels.index(perm_label(transposition(i)))
                for i in range(1, n)]
        # u_i^2 = 0
        for g in gens:
            assert A.multiply(A.basis_vector(g), A.basis_vector(g)) == A.zero()
        # braid relation u_i u_{i+1} u_i = u_{i+1} u_i u_{i+1}
        for a, b in zip(gens, gens[1:]):
            ua, ub = A.basis_vector(a), A.basis_vector(b)
            assert A.multiply(A.multiply(ua, ub), ua) == \
                A.multiply(A.multiply(ub, ua), ub)


def test_nilcoxeter_grading():
    A = nilcoxeter(3).algebra
    for i, w in enumerate(sorted_permutations(3)):
        assert A.labels[i] == perm_label(w)
        assert A.degrees[i].lam == (inversions(w),)
        assert A.degrees[i].parity == inversions(w) % 2


def test_symmetric_group_multiplication_oracle():
    fa = symmetric_group_algebra(3)
    A = fa.algebra
    perms = sorted_permutations(3)
    for i, w in enumerate(perms):
        for j, v in enumerate(perms):
            prod = A.multiply(A.basis_vector(i), A.basis_vector(j))
            k = A.labels.index(perm_label(compose(w, v)))
            assert prod == A.basis_vector(k)


def test_symmetric_group_cap():
    with pytest.raises(AssertionError):
        symmetric_group_algebra(5)


def test_exterior_algebra_signs():
    fa = exterior_algebra(3)
    A = fa.algebra
    t = {lbl: A.basis_vector(i) for i, lbl in enumerate(A.labels)}
    t1, t2 = t["t1"], t["t2"]
    # anti-commutativity and squares
    assert A.multiply(t1, t2) == [-c for c in A.multiply(t2, t1)]
    assert A.multiply(t1, t1) == A.zero()


def test_exterior_dimension_cap():
    assert exterior_algebra(4).algebra.dim == 16
    with pytest.raises(AssertionError):
        exterior_algebra(5)


def test_truncated_polynomial():
    fa = truncated_polynomial(3)
    A = fa.algebra
    x = A.basis_vector(1)
    assert A.multiply(A.multiply(x, x), x) == A.zero()
    assert fa.trace_scalar(A.multiply(x, x)) == QQ.one()


@pytest.mark.parametrize("ctor,m,n", [
    (nilcoxeter_extension, 2, 3), (nilcoxeter_extension, 3, 4),
    (symmetric_group_extension, 2, 3),
])
def test_embeddings_validate(ctor, m, n):
    pair = ctor(m, n)
    assert pair.emb.validate()
    B, A = pair.emb.B, pair.emb.A
    # the inclusion is multiplicative on all B-basis pairs
    for i in range(B.dim):
        for j in range(B.dim):
            lhs = pair.emb.embed(B.multiply(B.basis_vector(i),
                                            B.basis_vector(j)))
        rhs = A.multiply(pair.emb.embed(B.basis_vector(i)),
                         pair.emb.embed(B.basis_vector(j)))
        assert lhs == rhs


def test_extension_degree():
    pair = nilcoxeter_extension(3, 4)
    assert pair.degree.lam == (comb(4, 2) - comb(3, 2),)
    assert pair.degree.parity == (comb(4, 2) + comb(3, 2)) % 2


def test_non_projective_pair_shape():
    emb = non_projective_pair()
    assert emb.B.dim == 2
    assert emb.A.dim == 3
    assert emb.validate()
    B = emb.B
    x2 = B.basis_vector(1)
    assert B.multiply(x2, x2) == B.zero()
