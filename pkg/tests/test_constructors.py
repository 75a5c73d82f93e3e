import itertools
from fractions import Fraction
from math import comb

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from hopfcat.catalog import abelian, aff2, catalog_lie, cyclic, heis3, sl2, symmetric3
from hopfcat.constructors import (
    FiniteGroup,
    HopfAction,
    LieAlgebra,
    enveloping,
    group_algebra,
    pbw_straighten,
    smash,
    trivial_group,
    validate_action,
)
from hopfcat.core import DegreeOverflow, ValidationError, check_hopf_axioms


# -- an independent oracle: T(L) truncated at degree n, modulo the ideal ---------

def tensor_words(dim, n):
    return [w for k in range(n + 1) for w in itertools.product(range(dim), repeat=k)]


def ideal_generators(L, n):
    """u (xy - yx - [x, y]) v for all words with |u| + |v| + 2 <= n."""
    out = []
    for i, j in itertools.combinations(range(L.dim), 2):
        rel = {(i, j): 1, (j, i): -1}
        for k, c in L.bracket_basis(i, j).items():
            rel[(k,)] = rel.get((k,), 0) - c
        for u in tensor_words(L.dim, n - 2):
            for v in tensor_words(L.dim, n - 2 - len(u)):
                out.append({u + w + v: c for w, c in rel.items()})
    return out


def quotient_dimension(L, n):
    words = tensor_words(L.dim, n)
    rows = [[g.get(w, 0) for w in words] for g in ideal_generators(L, n)]
    r = sympy.Matrix(rows).rank() if rows else 0
    return len(words) - r


def in_ideal(L, n, element):
    words = tensor_words(L.dim, n)
    gens = ideal_generators(L, n)
    A = sympy.Matrix([[g.get(w, 0) for w in words] for g in gens])
    b = sympy.Matrix([[element.get(w, 0) for w in words]])
    return A.rank() == A.col_join(b).rank()


def test_aff2_dimension_matches_tensor_quotient():
    U = enveloping(aff2(), 3)
    assert U.dimension == 10
    assert quotient_dimension(aff2(), 3) == 10


@pytest.mark.parametrize("L", [heis3(), sl2()], ids=["heis3", "sl2"])
def test_pbw_dimension_oracle(L):
    assert enveloping(L, 2).dimension == quotient_dimension(L, 2)


def test_straighten_examples():
    L = aff2()
    U = enveloping(L, 3)
    x, y = U.generator("x"), U.generator("y")
    assert pbw_straighten(L, ["x"], U) == x
    assert pbw_straighten(L, ["y", "x"], U) == x * y - y
    assert pbw_straighten(L, ["y", "y", "x"], U) == x * y * y - 2 * y * y
    # oracle: the word minus its normal form lies in the ideal of T(L)
    diff = {(1, 1, 0): 1, (0, 1, 1): -1, (1, 1): 2}
    assert in_ideal(L, 3, diff)
    assert not in_ideal(L, 3, {(1, 1, 0): 1, (0, 1, 1): -1})
    with pytest.raises(DegreeOverflow):
        pbw_straighten(L, ["y", "y", "x", "x"], U)


@settings(max_examples=25, deadline=None)
@given(st.lists(st.integers(0, 1), min_size=2, max_size=3))
def test_straighten_agrees_with_tensor_oracle(word):
    L = aff2()
    U = enveloping(L, 3)
    nf = pbw_straighten(L, word, U)
    element = {tuple(word): 1}
    for ((m, _), c) in nf.terms.items():
        w = (0,) * m[0] + (1,) * m[1]
        element[w] = element.get(w, 0) - c
    assert in_ideal(L, 3, element)


@pytest.mark.parametrize("L", catalog_lie(), ids=lambda L: L.name)
def test_pbw_binomial_counts(L):
    U = enveloping(L, 4)
    assert U.dims_by_degree() == [comb(L.dim + k, k) for k in range(5)]


def test_group_algebra_examples():
    K = group_algebra(trivial_group())
    assert K.dimension == 1
    C2 = group_algebra(cyclic(2))
    assert [C2.format_index(b) for b in C2.basis] == ["e", "g"]
    g = C2.generator("g")
    assert C2.antipode(g) == g
    S3 = group_algebra(symmetric3())
    assert S3.dimension == 6
    r, s = S3.generator("r"), S3.generator("s")
    assert r * s != s * r
    assert check_hopf_axioms(S3).passed


def test_enveloping_examples():
    assert enveloping(LieAlgebra((), (), "0")).dimension == 1
    U = enveloping(abelian(1), 4)
    assert [U.format_index(b) for b in U.basis] == ["1", "x", "x^2", "x^3", "x^4"]
    x = U.generator("x")
    assert x * x * x == U.power(x, 3)


def test_invalid_inputs():
    with pytest.raises(ValidationError):
        FiniteGroup(("e", "g"), ((0, 1), (0, 1)))
    with pytest.raises(ValidationError) as exc:
        # [x,y] = x, [y,z] = x, [z,x] = y fails Jacobi
        LieAlgebra(("x", "y", "z"), {(0, 1): {0: 1}, (1, 2): {0: 1}, (2, 0): {1: 1}})
    assert len(exc.value.witness) == 3
    with pytest.raises(ValueError):
        enveloping(aff2(), 1)


def test_validate_action_examples():
    C2, L = cyclic(2), abelian(1)
    sign = HopfAction.from_generators(C2, L, {"g": [{0: Fraction(-1)}]})
    assert validate_action(sign).passed
    assert validate_action(HopfAction.trivial(C2, aff2())).passed
    swap = HopfAction.from_generators(C2, aff2(), {"g": [{1: Fraction(1)}, {0: Fraction(1)}]})
    v = validate_action(swap)
    assert not v.passed
    assert v.check("bracket preserved").witness == "(g, x, y)"
    with pytest.raises(ValidationError):
        smash(swap)


def test_h2_shape_and_axioms(H2):
    assert H2.dimension == 10
    assert sorted(H2.format_index(b) for b in H2.basis) == sorted(
        ["1", "x", "x^2", "x^3", "x^4", "g", "x*g", "x^2*g", "x^3*g", "x^4*g"])
    assert check_hopf_axioms(H2).passed


def _same_tables(A, B, rename):
    for a, b in itertools.product(A.basis, repeat=2):
        if A.index_degree(a) + A.index_degree(b) > A.degree:
            continue
        pa = {rename(k): v for k, v in A._mul_basis_checked(a, b).items()}
        assert pa == B._mul_basis_checked(rename(a), rename(b))
    for a in A.basis:
        assert {(rename(x), rename(y)): v for (x, y), v in A._delta_cached(a).items()} == \
            B._delta_cached(rename(a))
        assert {rename(k): v for k, v in A._antipode_cached(a).items()} == B._antipode_cached(rename(a))


def test_degenerate_smash_products():
    L = aff2()
    S = smash(HopfAction.trivial(trivial_group(), L), 3)
    _same_tables(S, enveloping(L, 3), lambda b: b)
    G = symmetric3()
    S = smash(HopfAction.trivial(G, LieAlgebra((), (), "0")), 2)
    _same_tables(S, group_algebra(G, 2), lambda b: b)
