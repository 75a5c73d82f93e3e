import pytest

from hopfcat.catalog import abelian, aff2, cyclic, h2, heis3
from hopfcat.constructors import enveloping, group_algebra
from hopfcat.core import ValidationError
from hopfcat.functors import decompose
from hopfcat.morphisms import (
    HopfMorphism,
    compose,
    identity_morphism,
    make_morphism,
    morphism_failure,
    unchecked_morphism,
    zero_morphism,
)


@pytest.fixture
def aff_quotient():
    U, T = enveloping(aff2(), 3), enveloping(abelian(1), 3)
    return make_morphism(U, T, {"x": T.generator("x"), "y": T.zero()}, name="q")


def test_identity_on_h2(H2):
    f = make_morphism(H2, H2, {"x": H2.generator("x"), "g": H2.generator("g")})
    assert f.equals_on_basis(identity_morphism(H2)) is None
    a = f.analyze()
    assert a.injective and a.surjective


def test_aff2_quotient_valid_and_apply(aff_quotient):
    U = aff_quotient.source
    x, y = U.generator("x"), U.generator("y")
    assert aff_quotient.apply(x * y).is_zero()
    assert aff_quotient.apply(x * x) == aff_quotient.target.power(aff_quotient.target.generator("x"), 2)


def test_group_relation_rejected():
    K2, K3 = group_algebra(cyclic(2)), group_algebra(cyclic(3))
    with pytest.raises(ValidationError) as exc:
        make_morphism(K2, K3, {"g": K3.generator("g")})
    assert "g*g = e" in str(exc.value)


def test_non_primitive_and_non_grouplike_images(H2):
    U = enveloping(abelian(1))
    with pytest.raises(ValidationError, match="not primitive"):
        make_morphism(U, U, {"x": U.generator("x") * U.generator("x")})
    K2 = group_algebra(cyclic(2))
    with pytest.raises(ValidationError, match="not grouplike"):
        make_morphism(K2, H2, {"g": H2.generator("x") * H2.generator("g") + H2.generator("g")})


def test_bracket_relation_rejected():
    U, T = enveloping(heis3(), 2), enveloping(abelian(2), 2)
    # z is central in heis3 but [x, y] = z must map to [x, y] = 0
    with pytest.raises(ValidationError, match=r"\[x, y\]"):
        make_morphism(U, T, {"x": T.generator("x"), "y": T.generator("y"), "z": T.generator("x")})


def test_action_relation_rejected(H2):
    # H2 → U(⟨x⟩) forgetting g but keeping x violates g·x = -x
    U = enveloping(abelian(1))
    with pytest.raises(ValidationError, match="action relation"):
        make_morphism(H2, U, {"x": U.generator("x"), "g": U.one()})


def test_apply_projection(H2):
    D = decompose(H2)
    x, g = H2.generator("x"), H2.generator("g")
    assert D.ses.p.apply(x * x * g).is_zero()
    assert D.ses.p.apply(g) == D.ses.B.generator("g")


def test_analysis_of_decomposition_maps(H2):
    D = decompose(H2)
    s, p = D.ses.s.analyze(), D.ses.p.analyze()
    assert s.injective and not s.surjective
    assert s.image_dims[-1] == 2 and s.target_dims[-1] == 10
    assert p.surjective and not p.injective


def test_composition_matrices_multiply(H2, aff_quotient):
    D = decompose(H2)
    sp = compose(D.ses.s, D.ses.p)
    assert morphism_failure(sp) is None
    for k in range(H2.degree + 1):
        left = sp.matrix(k).to_dense()
        P, S = D.ses.p.matrix(k).to_dense(), D.ses.s.matrix(k).to_dense()
        prod = [[sum(S[i][t] * P[t][j] for t in range(len(P))) for j in range(len(P[0]))] for i in range(len(S))]
        assert left == prod


def test_structure_preserved_on_basis(aff_quotient):
    f = aff_quotient
    for b in f.source.basis:
        x = f.source.basis_element(b)
        assert f.target.comultiply(f.apply(x)) == f.apply_tensor(f.source.comultiply(x))
        assert f.target.antipode(f.apply(x)) == f.apply(f.source.antipode(x))
        assert f.target.counit(f.apply(x)) == f.source.counit(x)


def test_zero_morphism_and_unchecked():
    H = h2()
    K = group_algebra(cyclic(2))
    z = zero_morphism(H, K)
    assert morphism_failure(z) is None
    bad = unchecked_morphism(K, H, {"g": H.generator("x") * H.generator("g") + H.generator("g")})
    law, witness = morphism_failure(bad)
    assert witness == "g"
    with pytest.raises(ValidationError):
        HopfMorphism.from_basis_images(K, H, bad.images)
