
import pytest
from hypothesis import given
from hypothesis import strategies as st

from krkit import cartan as C

# Table 1: theta_1 and theta_J in simple roots and fundamental weights
TABLE1 = {
    "E6a1": ({2: 1, 3: 1, 4: 1, 5: 1, 6: 1}, {1: -1, 5: 1, 6: 1},
             {2: 1, 3: 1, 4: 1}, {1: -1, 3: 1, 4: 1, 5: -1, 6: -1}),
    "E7a1": ({2: 1, 3: 2, 4: 1, 5: 2, 6: 2, 7: 1}, {1: -1, 6: 1},
             {2: 1, 3: 2, 4: 1, 5: 1}, {1: -1, 3: 1, 6: -1}),
    "E8a1": ({2: 1, 3: 2, 4: 3, 5: 4, 6: 2, 7: 3, 8: 2}, {1: -1, 8: 1},
             {2: 1, 3: 2, 4: 2, 5: 2, 6: 1, 7: 1}, {1: -1, 3: 1, 8: -1}),
    "F4a1": ({2: 1, 3: 2, 4: 2}, {1: -1, 4: 2}, {2: 1, 3: 2}, {1: -1, 3: 2, 4: -2}),
    "E6a2": ({2: 1, 3: 1, 4: 1}, {1: -1, 4: 1}, {2: 1, 3: 1}, {1: -1, 3: 1, 4: -1}),
}


def theta_table(tag):
    cd = C.build(tag)
    t1, tj = C.theta(cd, "I"), C.theta(cd, "J")
    return (t1.as_dict(), C.root_weight(cd, t1).varpi(),
            tj.as_dict(), C.root_weight(cd, tj).varpi())


@pytest.mark.parametrize("tag", C.TYPES)
def test_table1(tag):
    assert theta_table(tag) == TABLE1[tag]


@pytest.mark.parametrize("tag", C.TYPES + C.FIXTURES)
def test_symmetrizable(tag):
    cd = C.build(tag)
    for i in cd.nodes:
        assert cd.c(i, i) == 2
        for j in cd.nodes:
            assert cd.sym(i, j) == cd.sym(j, i)


@pytest.mark.parametrize("tag", C.TYPES + ("A1a1",))
def test_marks_are_null_vectors(tag):
    cd = C.build(tag)
    for i in cd.nodes:
        assert sum(a * cd.c(i, j) for j, a in zip(cd.nodes, cd.marks)) == 0
        assert sum(a * cd.c(j, i) for j, a in zip(cd.nodes, cd.coroot_marks)) == 0


@pytest.mark.parametrize("tag", C.TYPES)
def test_affine_node_is_long_normalized(tag):
    assert C.build(tag).sym(0, 0) == 2


def test_node_powers():
    assert C.build("F4a1").node_power == (2, 2, 2, 1, 1)
    assert C.build("E6a2").node_power == (1, 1, 1, 2, 2)
    assert C.build("F4a1").D == 2 and C.build("E6a2").D == 1


# finite parts: E6, E7, E8, F4, F4 (twisted); adjoint-type and standard dimensions
@pytest.mark.parametrize("tag,count,dims", [
    ("E6a1", 36, (78, 2925)), ("E7a1", 63, (133, 8645)), ("E8a1", 120, (248, 30380)),
    ("F4a1", 24, (52, 1274)), ("E6a2", 24, (26, 273)),
])
def test_roots_and_dimensions(tag, count, dims):
    cd = C.build(tag)
    assert len(C.positive_roots(cd)) == count
    assert C.weyl_dim(cd, C.fundamental(cd, 1)) == dims[0]
    assert C.weyl_dim(cd, C.fundamental(cd, 2)) == dims[1]


def test_gamma_weights():
    cd = C.build("E6a1")
    assert C.gamma(cd, 1).varpi() == {5: 1, 6: 1}
    assert C.gamma(cd, 2).varpi() == {3: 1, 4: 1}
    with pytest.raises(ValueError):
        C.gamma(cd, 3)


@given(st.sampled_from(C.TYPES), st.lists(st.integers(0, 2), min_size=8, max_size=8))
def test_weyl_dimension_two_routes(tag, coords):
    cd = C.build(tag)
    lam = C.weight_from_varpi(cd, dict(zip(cd.finite_nodes, coords)))
    assert C.weyl_dim(cd, lam) == C.weyl_dim_symmetric(cd, lam)


@given(st.sampled_from(C.TYPES), st.data())
def test_reflection_is_involution(tag, data):
    cd = C.build(tag)
    beta = data.draw(st.sampled_from(C.positive_roots(cd)))
    i = data.draw(st.sampled_from(cd.finite_nodes))
    assert C.reflect_root(cd, i, C.reflect_root(cd, i, beta)) == beta
    assert C.form(cd, C.reflect_root(cd, i, beta), C.reflect_root(cd, i, beta)) == C.form(cd, beta, beta)


def test_unknown_type():
    with pytest.raises(ValueError):
        C.build("G2a1")


def test_structure_constants():
    assert C.build("F4a1").c_g == 2
    e62 = C.build("E6a2")
    assert e62.npow(3) == e62.npow(4) == 2 * e62.npow(1)
    for tag in C.TYPES:
        cd = C.build(tag)
        t1 = C.theta(cd, "I")
        assert t1.coeff(2) == 1 and C.theta(cd, "J").coeff(2) == 1
        assert all(C.pairing(cd, i, t1) == 0 for i in cd.J)


def test_root_subsystem_count():
    cd = C.build("E6a1")
    # nodes 5-3-2-4-6 form a chain of type A5
    assert len(C.positive_roots(cd, cd.I01)) == 15
    assert C.positive_roots(cd, (2,)) == (C.simple_root(cd, 2),)


def test_gamma_examples():
    assert C.gamma(C.build("E7a1"), 1).varpi() == {6: 1}
    assert C.gamma(C.build("F4a1"), 1).varpi() == {4: 2}
    for tag in C.TYPES:
        cd = C.build(tag)
        assert C.is_dominant(cd, C.gamma(cd, 1)) and C.is_dominant(cd, C.gamma(cd, 2))


def test_E6_fundamental_dimensions():
    # node 1 neighbours the affine node, so varpi_1 is the adjoint module
    cd = C.build("E6a1")
    dims = {i: C.weyl_dim(cd, C.fundamental(cd, i)) for i in cd.finite_nodes}
    assert dims[1] == 78 and dims[5] == dims[6] == 27
    assert C.weyl_dim(cd, C.zero_weight(cd)) == 1
