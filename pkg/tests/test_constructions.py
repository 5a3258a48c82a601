"""Tests for the group families and coset enumeration."""

import pytest
from sympy.combinatorics import Permutation, PermutationGroup
from sympy.combinatorics.fp_groups import FpGroup
from sympy.combinatorics.free_groups import free_group

from centra.groups import (
    BadAction,
    BadParameter,
    CosetCapExceeded,
    OrderCapExceeded,
    OrderMismatch,
    Presentation,
    center,
    cyclic,
    dicyclic,
    dihedral,
    direct_product,
    elementary_abelian,
    heisenberg,
    holomorph_cyclic,
    is_abelian,
    is_isomorphic,
    modular_group,
    presented_group,
    psl2,
    sdp_cyclic,
    semidihedral,
    sl2,
    symmetric,
    u_group,
    v_group,
)
from centra.groups.constructions import (
    _psl2_generators,
    commutator_word,
    power,
)


def _sympy_order(presentation: Presentation) -> int:
    free, *gens = free_group(
        ", ".join(f"g{i}" for i in range(presentation.generator_count))
    )
    relators = []
    for word in presentation.relators:
        element = free.identity
        for letter in word:
            g = gens[abs(letter) - 1]
            element *= g if letter > 0 else g**-1
        relators.append(element)
    return FpGroup(free, relators).order()


PRESENTATIONS = [
    # SD_24
    Presentation(2, (power(1, 12), power(2, 2), (2, 1, 2) + power(1, -5))),
    # T_16
    Presentation(
        2, (power(1, 8), power(1, 4) + power(2, -2), (-2, 1, 2, 1))
    ),
    # V_24
    Presentation(
        2, (power(1, 6), power(2, 4), (1, 2, 1, 2), (1, -2, 1, -2))
    ),
    # U_2(3,4)
    Presentation(2, (power(1, 6), power(2, 4), (1, 2, -1, 2))),
    # Heisenberg mod 3
    Presentation(
        2,
        (
            power(1, 3),
            power(2, 3),
            commutator_word((1,), (2,)) * 3,
            commutator_word((1,), commutator_word((1,), (2,))),
            commutator_word((2,), commutator_word((1,), (2,))),
        ),
    ),
]


@pytest.mark.parametrize("presentation", PRESENTATIONS)
def test_coset_enumeration_matches_sympy(presentation):
    assert presented_group(presentation).order == _sympy_order(presentation)


def test_presentation_validation():
    with pytest.raises(BadParameter):
        Presentation(1, ())
    with pytest.raises(BadParameter):
        Presentation(1, ((2,),))
    with pytest.raises(BadParameter):
        Presentation(1, ((0,),))


def test_coset_cap():
    # Z x Z_2 is infinite
    infinite = Presentation(2, (power(2, 2), commutator_word((1,), (2,))))
    with pytest.raises(CosetCapExceeded):
        presented_group(infinite, max_cosets=200)


def test_expected_order_mismatch():
    with pytest.raises(OrderMismatch):
        presented_group(Presentation(1, (power(1, 6),), expected_order=5))


@pytest.mark.parametrize(
    ("builder", "args", "order"),
    [
        (cyclic, (7,), 7),
        (dihedral, (10,), 10),
        (semidihedral, (3,), 24),
        (dicyclic, (4,), 16),
        (v_group, (2,), 16),
        (u_group, (2, 4), 16),
        (u_group, (3, 1), 6),
        (heisenberg, (3,), 27),
        (modular_group, (4,), 16),
        (symmetric, (4,), 24),
        (holomorph_cyclic, (7,), 42),
        (elementary_abelian, (2, 3), 8),
        (psl2, (8,), 504),
        (sl2, (3,), 24),
    ],
)
def test_family_orders(builder, args, order):
    assert builder(*args).order == order


@pytest.mark.parametrize("n", range(2, 9))
def test_presented_family_orders(n):
    assert semidihedral(n).order == 8 * n
    assert dicyclic(n).order == 4 * n
    assert v_group(n).order == 8 * n


@pytest.mark.parametrize("q", [5, 7, 8])
def test_psl2_generators_match_sympy(q):
    gens = [Permutation(g) for g in _psl2_generators(q)]
    assert PermutationGroup(gens).order() == psl2(q).order


def test_bad_parameters():
    with pytest.raises(BadParameter):
        dihedral(5)
    with pytest.raises(BadParameter):
        psl2(9)
    with pytest.raises(BadParameter):
        heisenberg(4)
    with pytest.raises(BadParameter):
        sl2(4)
    with pytest.raises(BadAction):
        sdp_cyclic(9, 3, 2)


def test_construction_cross_checks(group):
    assert is_isomorphic(sdp_cyclic(5, 4, 2), group("R"))
    assert is_isomorphic(psl2(5), group("A(5)"))
    assert is_isomorphic(dihedral(6), symmetric(3))
    assert is_isomorphic(u_group(2, 3), dicyclic(3))
    assert is_isomorphic(dicyclic(2), group("T(2)"))
    assert not is_isomorphic(dicyclic(2), dihedral(8))


@pytest.mark.parametrize(
    ("builder", "args"),
    [
        (cyclic, (25_000,)),
        (sdp_cyclic, (12_500, 2, 1)),
        (dihedral, (40_002,)),
    ],
)
def test_table_builders_respect_element_cap(builder, args):
    with pytest.raises(OrderCapExceeded):
        builder(*args)


def test_twisted_products():
    assert is_abelian(sdp_cyclic(6, 2, 1))
    G = sdp_cyclic(7, 3, 2)
    assert len(center(G)) == 1
    assert G.order == 21


def test_sl2_has_central_involution():
    G = sl2(5)
    z = center(G)
    assert len(z) == 2
    assert G.element_orders[max(z)] == 2


def test_direct_product_orders(s3):
    G = direct_product(s3, cyclic(4))
    assert G.order == 24
    assert len(center(G)) == 4
