"""The model polytopes: vertices, cuts, facet systems, lattices."""

from fractions import Fraction

import pytest

from clawvol.clawpoly import (
    MINUS,
    PLUS,
    OddSubsetCut,
    ambient,
    ambient_dim,
    block_width,
    cut_halfspace,
    facet_cuts,
    facets,
    group_from_cli,
    lattice,
    model_lattice_index,
    s_coefficients,
    s_value,
    subset_cut,
    tuple_cut,
    vertex_generators,
    vertices,
)
from clawvol.geometry import (
    LatticeBasis,
    RankDeficientError,
    lattice_index,
    vertex_enumeration,
)
from clawvol.groups import GROUPS, Z2, Z2xZ2, Z3
from clawvol.volume import lattice_volume

ALL_GROUPS = list(GROUPS.values())


def test_dimensions():
    assert block_width(Z2) == 1 and block_width(Z3) == 2 and block_width(Z2xZ2) == 3
    assert ambient_dim(Z2, 4) == 4
    assert ambient_dim(Z3, 3) == 6
    assert ambient_dim(Z2xZ2, 3) == 9


@pytest.mark.parametrize("group", ALL_GROUPS, ids=lambda g: g.name)
def test_vertices_are_01_with_unit_block_sums(group):
    for n in (2, 3, 4):
        vp = vertices(group, n)
        assert len(vp.vertices) == group.order ** (n - 1)
        w = block_width(group)
        for v in vp.vertices:
            assert all(x in (0, 1) for x in v)
            for j in range(n):
                assert sum(v[j * w:(j + 1) * w]) in (0, 1)


def test_vertices_requires_n_at_least_2():
    with pytest.raises(ValueError):
        vertices(Z2, 1)


def test_subset_cut_validation():
    assert subset_cut(Z2, 3, (1,)).is_facet
    assert not subset_cut(Z2, 3, (1, 2)).is_facet
    assert subset_cut(Z2, 3, (1,)).rhs == 0
    assert subset_cut(Z2, 3, (1, 2, 3)).rhs == -2
    with pytest.raises(ValueError):
        OddSubsetCut(Z2, 3, (1, 1), 1)
    with pytest.raises(ValueError):
        subset_cut(Z2, 3, (4,))
    with pytest.raises(ValueError):
        subset_cut(Z2, 3, (1,), channel=2)  # z2 has a single channel
    with pytest.raises(ValueError):
        subset_cut(Z2xZ2, 3, (1,), channel=4)


def test_tuple_cut_validation():
    cut = tuple_cut(2, (2, 0), 1)
    assert cut.is_facet and cut.rhs == 0
    assert tuple_cut(2, (1, 1), 2).is_facet
    assert not tuple_cut(2, (1, 0), 1).is_facet
    assert tuple_cut(3, (1, 1, 1), 1).rhs == -1
    with pytest.raises(ValueError):
        tuple_cut(2, (3, 0), 1)
    with pytest.raises(ValueError):
        tuple_cut(2, (2, 0), 3)


def test_z3_cut_coefficients_frozen():
    # channel 1 uses u_0=(1,2), u_1=(1,-1), u_2=(-2,-1) per digit
    assert s_coefficients(tuple_cut(2, (0, 1), 1)) == (1, 2, 1, -1)
    # channel 2 uses w_0=(2,1), w_1=(-1,1), w_2=(-1,-2)
    assert s_coefficients(tuple_cut(2, (0, 1), 2)) == (2, 1, -1, 1)
    assert s_coefficients(tuple_cut(2, (2, 2), 1)) == (-2, -1, -2, -1)


def test_z2_and_z2xz2_cut_coefficients_frozen():
    assert s_coefficients(subset_cut(Z2, 3, (2,))) == (1, -1, 1)
    # channel b of a cut with A={1}: signs on the two non-channel
    # coordinates of each block, negated inside A
    assert s_coefficients(subset_cut(Z2xZ2, 2, (1,), channel=2)) == (
        -1, 0, -1, 1, 0, 1)


def test_s_value_and_halfspace_sides():
    cut = subset_cut(Z2, 2, (1,))
    p_in = (Fraction(1), Fraction(0))   # S = -1 <= rhs 0
    p_out = (Fraction(0), Fraction(1))  # S = 1 >= 0
    assert s_value(cut, p_in) == -1
    assert cut_halfspace(cut, MINUS).holds(p_in)
    assert not cut_halfspace(cut, MINUS).holds(p_out)
    assert cut_halfspace(cut, PLUS).holds(p_out)
    with pytest.raises(ValueError):
        cut_halfspace(cut, "sideways")


@pytest.mark.parametrize("group", ALL_GROUPS, ids=lambda g: g.name)
def test_facet_cut_counts(group):
    for n in (2, 3, 4):
        cuts = facet_cuts(group, n)
        if group is Z2:
            assert len(cuts) == 2 ** (n - 1)
        elif group is Z2xZ2:
            assert len(cuts) == 3 * 2 ** (n - 1)
        else:
            assert len(cuts) == 2 * 3 ** (n - 1)
        assert all(c.is_facet for c in cuts)
        assert len(set(cuts)) == len(cuts)


@pytest.mark.parametrize("group", ALL_GROUPS, ids=lambda g: g.name)
def test_facet_system_supports_vertices(group):
    """Vertices satisfy every inequality; each cut is tight somewhere."""
    n = 3
    vp = vertices(group, n)
    hp = facets(group, n)
    for v in vp.vertices:
        assert hp.contains(v)
    for cut in facet_cuts(group, n):
        values = [s_value(cut, v) for v in vp.vertices]
        assert min(values) == cut.rhs


@pytest.mark.parametrize(
    "group,n,volume",
    [(Z2, 2, 2), (Z2, 3, 6), (Z3, 2, 6), (Z2xZ2, 2, 20)],
    ids=("z2-2", "z2-3", "z3-2", "z2xz2-2"))
def test_ambient_volumes_frozen(group, n, volume):
    vp = vertex_enumeration(ambient(group, n))
    assert lattice_volume(vp) == volume


@pytest.mark.parametrize("group,index", [(Z2, 2), (Z2xZ2, 4), (Z3, 3)],
                         ids=("z2", "z2xz2", "z3"))
def test_model_lattice_index(group, index):
    assert model_lattice_index(group) == index
    for n in (2, 3, 4):
        assert lattice_index(lattice(group, n)) == index


@pytest.mark.parametrize("group", ALL_GROUPS, ids=lambda g: g.name)
def test_vertex_span_matches_explicit_lattice(group):
    for n in (3, 4):
        spanned = vertex_generators(group, n)
        explicit = lattice(group, n)
        combined = LatticeBasis(spanned.dim,
                                spanned.generators + explicit.generators)
        assert (lattice_index(spanned)
                == lattice_index(explicit)
                == lattice_index(combined))
    with pytest.raises(RankDeficientError):
        lattice_index(vertex_generators(group, 2))


def test_group_from_cli():
    assert group_from_cli("z2xz2") is Z2xZ2
    with pytest.raises(ValueError):
        group_from_cli("q8")
