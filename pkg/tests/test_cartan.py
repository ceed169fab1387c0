import pytest

from twistcenter.cartan import (
    DynkinDiagram,
    Edge,
    Family,
    build_type,
    cartan_matrix,
    corank,
    delta_marks,
    diagram_from_matrix,
    parse_type,
    symmetrizers,
)
from twistcenter.errors import DomainError, InvalidAffineMatrix, NotSymmetrizable


def test_build_a2():
    t = build_type(Family.A2n_2, 1)
    assert t.index_set == (0, 1)
    assert (t.ntilde, t.k) == (2, 2)


def test_build_d43():
    t = build_type("D4_3", 2)
    assert t.index_set == (0, 1, 2)
    assert (t.ntilde, t.k) == (4, 3)


@pytest.mark.parametrize(
    "family,n,minimum",
    [("A2nm1_2", 1, 3), ("A2nm1_2", 2, 3), ("A2n_2", 0, 1), ("Dnp1_2", 1, 2)],
)
def test_rank_out_of_range(family, n, minimum):
    with pytest.raises(DomainError, match=f"n >= {minimum}"):
        build_type(family, n)


@pytest.mark.parametrize("family,n", [("E6_2", 3), ("E6_2", 5), ("D4_3", 3)])
def test_fixed_rank(family, n):
    with pytest.raises(DomainError, match="rank-out-of-range"):
        build_type(family, n)


def test_k_and_ntilde(any_type):
    t = any_type
    assert t.k == (3 if t.family is Family.D4_3 else 2)
    expected = {
        Family.A2n_2: 2 * t.n,
        Family.A2nm1_2: 2 * t.n - 1,
        Family.Dnp1_2: t.n + 1,
        Family.E6_2: 6,
        Family.D4_3: 4,
    }[t.family]
    assert t.ntilde == expected


# matrices below come from reading rule b) off the printed diagrams by hand


def test_cartan_a2():
    assert build_type("A2n_2", 1).cartan == ((2, -1), (-4, 2))


def test_cartan_d43():
    assert build_type("D4_3", 2).cartan == ((2, -1, 0), (-1, 2, -3), (0, -1, 2))


def test_cartan_a4():
    assert build_type("A2n_2", 2).cartan == ((2, 0, -1), (0, 2, -2), (-2, -1, 2))


def test_cartan_d3():
    assert build_type("Dnp1_2", 2).cartan == ((2, 0, -2), (0, 2, -2), (-1, -1, 2))


def test_cartan_e6():
    a = build_type("E6_2", 4).cartan
    assert a[2][3] == -2 and a[3][2] == -1
    assert a[0][1] == a[1][0] == -1


def test_cartan_invariants(any_type):
    a = any_type.cartan
    size = len(a)
    assert all(a[i][i] == 2 for i in range(size))
    for i in range(size):
        for j in range(size):
            if i != j:
                assert a[i][j] <= 0
                assert (a[i][j] == 0) == (a[j][i] == 0)
    assert corank(a) == 1


@pytest.mark.parametrize(
    "spec,d",
    [("A2_2", (4, 1)), ("D4_3", (1, 1, 3)), ("A4_2", (4, 1, 2)), ("D3_2", (1, 1, 2)), ("E6_2", (1, 1, 1, 2, 2))],
)
def test_symmetrizers(spec, d):
    assert parse_type(spec).d == d


@pytest.mark.parametrize(
    "spec,r",
    [("A2_2", (1, 2)), ("D4_3", (1, 2, 1)), ("A4_2", (1, 2, 2)), ("A5_2", (1, 1, 2, 1)), ("E6_2", (1, 2, 3, 2, 1))],
)
def test_delta_marks(spec, r):
    assert parse_type(spec).marks == r


def test_symmetrizer_relation_exhaustive(any_type):
    a, d = any_type.cartan, any_type.d
    assert min(d) == 1
    for i in range(len(a)):
        for j in range(len(a)):
            assert d[i] * a[i][j] == d[j] * a[j][i]


def test_delta_kills_matrix(any_type):
    a, r = any_type.cartan, any_type.marks
    assert r[0] == 1
    assert all(sum(a[i][j] * r[j] for j in range(len(a))) == 0 for i in range(len(a)))


def test_symmetrized_form(any_type):
    b, r = any_type.symmetrized, any_type.marks
    size = len(b)
    assert all(b[i][j] == b[j][i] for i in range(size) for j in range(size))
    assert all(sum(b[i][j] * r[j] for j in range(size)) == 0 for i in range(size))


def test_simple_edge_equal_symmetrizers(any_type):
    a, d = any_type.cartan, any_type.d
    for i in range(len(a)):
        for j in range(len(a)):
            if a[i][j] == a[j][i] == -1:
                assert d[i] == d[j]


def test_diagram_roundtrip(any_type):
    rebuilt = diagram_from_matrix(any_type.cartan)
    original = {e.ends: (e.mult, e.arrow) for e in any_type.diagram.edges}
    assert {e.ends: (e.mult, e.arrow) for e in rebuilt.edges} == original
    assert cartan_matrix(rebuilt) == any_type.cartan


def test_not_symmetrizable():
    # a 3-cycle with inconsistent ratios
    a = ((2, -1, -1), (-2, 2, -1), (-1, -1, 2))
    with pytest.raises(NotSymmetrizable):
        symmetrizers(a)


def test_finite_type_is_not_affine():
    with pytest.raises(InvalidAffineMatrix):
        delta_marks(((2, -1), (-1, 2)))


def test_diagram_validation():
    with pytest.raises(ValueError, match="connected"):
        DynkinDiagram((0, 1, 2), (Edge(0, 1),))
    with pytest.raises(ValueError):
        Edge(0, 1, 2)


@pytest.mark.parametrize(
    "spec,family,n",
    [
        ("A2_2", Family.A2n_2, 1),
        ("A4_2", Family.A2n_2, 2),
        ("A5_2", Family.A2nm1_2, 3),
        ("D3_2", Family.Dnp1_2, 2),
        ("E6_2", Family.E6_2, 4),
        ("D4_3", Family.D4_3, 2),
    ],
)
def test_parse_type(spec, family, n):
    t = parse_type(spec)
    assert (t.family, t.n) == (family, n)
    assert t.name == spec


@pytest.mark.parametrize("spec", ["A3_2", "D2_2", "E7_2", "A4_3", "B3_2", "A4", "x"])
def test_parse_type_rejects(spec):
    with pytest.raises(DomainError):
        parse_type(spec)
