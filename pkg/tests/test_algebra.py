import numpy as np
import pytest
from hypothesis import given, strategies as st

from currentrep import linalg
from currentrep.algebra import (AlgebraDescriptor, CurrentElement, bracket,
                                centralizer_basis, centralizer_dim,
                                classify_element, flatten_regular, get_context,
                                is_nilpotent, is_regular, jordan_decompose,
                                kappa_m, minimal_polynomial, p_map,
                                random_element)
from currentrep.errors import AlgebraMismatch, InvalidDescriptor

SL2 = AlgebraDescriptor("sl", 2, 3, 1)


def elem(mat, d=0, alg=SL2):
    return CurrentElement.from_matrix(alg, mat, d)


E = elem([[0, 1], [0, 0]])
F = elem([[0, 0], [1, 0]])
H = elem([[1, 0], [0, -1]])
Et = elem([[0, 1], [0, 0]], 1)
Ft = elem([[0, 0], [1, 0]], 1)
Ht = elem([[1, 0], [0, -1]], 1)


def test_descriptor_validation():
    with pytest.raises(InvalidDescriptor):
        AlgebraDescriptor("sl", 2, 4, 1)  # not prime
    with pytest.raises(InvalidDescriptor):
        AlgebraDescriptor("sl", 3, 3, 1)  # p | n
    alg = AlgebraDescriptor("gl", 3, 3, 1)
    assert alg.dim_g == 9 and alg.rank == 3 and alg.num_pos_roots == 3
    assert alg.dim_g == 2 * alg.num_pos_roots + alg.rank
    assert alg.dim_z == 1 and SL2.dim_z == 0


def test_bracket_examples():
    assert bracket(Et, F) == Ht
    assert bracket(Et, Ft).is_zero()
    assert bracket(H, Et) == Et.scale(2)


def test_bracket_mismatch():
    other = CurrentElement.zero(AlgebraDescriptor("sl", 2, 3, 2))
    with pytest.raises(AlgebraMismatch):
        bracket(E, other)


def test_pmap_examples():
    assert p_map(Et).is_zero()
    assert p_map(H) == H
    assert p_map(H + Et) == H + Et


def test_classify_examples():
    assert classify_element(E + Ht) == "nilpotent"
    assert classify_element(H + Et) == "semisimple"
    g3 = AlgebraDescriptor("gl", 3, 5, 0)
    mixed = CurrentElement.from_matrix(g3, [[1, 0, 0], [0, 0, 1], [0, 0, 0]])
    assert classify_element(mixed) == "mixed"


def test_jordan_examples():
    s, n = jordan_decompose(E)
    assert s.is_zero() and n == E
    s, n = jordan_decompose(H + Ht)
    assert s == H and n == Ht
    s, n = jordan_decompose(H + Et)
    assert n.is_zero() and s == H + Et


def test_kappa_examples():
    assert kappa_m(E, F) == 0
    assert kappa_m(E, Ft) == 1
    assert kappa_m(Et, F) == 1
    assert kappa_m(Et, Ft) == 0


def test_centralizer_examples():
    assert centralizer_dim(CurrentElement.zero(SL2)) == SL2.dim_gm
    assert centralizer_dim(E) == 2
    basis = centralizer_basis(Et)
    assert len(basis) == 4


def test_regular_examples():
    assert is_regular(H)
    assert is_regular(E)
    assert not is_regular(CurrentElement.zero(SL2))


def test_gram_full_rank():
    for alg in (SL2, AlgebraDescriptor("gl", 3, 3, 1), AlgebraDescriptor("sl", 3, 2, 1)):
        ctx = get_context(alg)
        assert linalg.rank(ctx.gram_matrix, alg.p) == ctx.dim


def test_coords_roundtrip():
    ctx = get_context(SL2)
    rng = np.random.default_rng(3)
    for _ in range(20):
        x = random_element(SL2, rng)
        assert ctx.from_coords(ctx.coords(x)) == x


def test_serialization_roundtrip():
    d = (E + Ht).to_json_dict()
    assert d["kind"] == "sl" and len(d["coeff_mats"]) == 2
    assert CurrentElement.from_json_dict(d) == E + Ht


@st.composite
def algebras(draw):
    kind = draw(st.sampled_from(["sl", "gl"]))
    if kind == "sl":
        n, p = draw(st.sampled_from([(2, 3), (2, 5), (3, 2)]))
    else:
        n, p = draw(st.sampled_from([(2, 2), (2, 3), (3, 3)]))
    m = draw(st.integers(0, 2))
    return AlgebraDescriptor(kind, n, p, m)


@given(algebras(), st.integers(0, 10 ** 6))
def test_jacobi_and_anticommutativity(alg, seed):
    rng = np.random.default_rng(seed)
    x, y, z = (random_element(alg, rng) for _ in range(3))
    assert (bracket(x, y) + bracket(y, x)).is_zero()
    jac = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y))
    assert jac.is_zero()


@given(algebras(), st.integers(0, 10 ** 6))
def test_nilpotency_matches_degree_zero_criterion(alg, seed):
    rng = np.random.default_rng(seed)
    x = random_element(alg, rng)
    x0 = CurrentElement.from_matrix(alg, x.coeffs[0], 0)
    assert (classify_element(x) == "nilpotent") == is_nilpotent(x0)


@given(algebras(), st.integers(0, 10 ** 6))
def test_jordan_properties(alg, seed):
    rng = np.random.default_rng(seed)
    x = random_element(alg, rng)
    s, n = jordan_decompose(x)
    assert s + n == x
    assert bracket(s, n).is_zero()
    assert is_nilpotent(n)
    if not s.is_zero():
        assert classify_element(s) == "semisimple"
    # agreement with the flattened matrix decomposition: the flattened parts
    # of s and n commute and are semisimple/nilpotent as F_p matrices
    S = flatten_regular(s)
    mp = minimal_polynomial(S, alg.p)
    from currentrep.algebra import poly_gcd, poly_deriv
    if len(mp) > 1 and not s.is_zero():
        assert len(poly_gcd(mp, poly_deriv(mp, alg.p), alg.p)) == 1


@given(algebras(), st.integers(0, 10 ** 6))
def test_kappa_symmetric_associative(alg, seed):
    rng = np.random.default_rng(seed)
    x, y, z = (random_element(alg, rng) for _ in range(3))
    assert kappa_m(x, y) == kappa_m(y, x)
    assert kappa_m(bracket(x, y), z) == kappa_m(x, bracket(y, z))


def test_jordan_across_shapes_seeded():
    # regression: intermediate Newton iterates may leave sl (nonzero trace);
    # the decomposition itself must always land back in the algebra
    shapes = [("sl", 2, 3), ("sl", 2, 5), ("sl", 3, 2), ("gl", 2, 2), ("gl", 3, 3)]
    rng = np.random.default_rng(987)
    for trial in range(200):
        kind, n, p = shapes[trial % len(shapes)]
        alg = AlgebraDescriptor(kind, n, p, trial % 3)
        x = random_element(alg, rng)
        s, nil = jordan_decompose(x)
        assert s + nil == x
        assert bracket(s, nil).is_zero()
        assert is_nilpotent(nil)
        if not s.is_zero():
            assert classify_element(s) == "semisimple"
