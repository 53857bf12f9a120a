import pytest
from hypothesis import given

from protoalg.errors import InvariantViolation, ModelError
from protoalg.groups import (
    CATALOG,
    GroupTable,
    cyclic,
    direct_product,
    find_isomorphism,
    identify_small_group,
    order_profile,
    trivial_group,
)
from strategies import labeled_groups


def test_catalog_entries_are_groups():
    for name, g in CATALOG.items():
        assert g.law_failure() is None, name


def test_catalog_orders():
    sizes = {name: g.size for name, g in CATALOG.items()}
    assert sizes == {
        "1": 1, "Z2": 2, "Z3": 3, "Z4": 4, "V4": 4, "Z5": 5, "Z6": 6, "S3": 6,
        "Z7": 7, "Z8": 8, "Z4xZ2": 8, "Z2^3": 8, "D4": 8, "Q8": 8,
    }


def test_catalog_is_pairwise_non_isomorphic():
    names = list(CATALOG)
    for i, a in enumerate(names):
        for b in names[i + 1:]:
            assert find_isomorphism(CATALOG[a], CATALOG[b]) is None


def test_order_profiles_of_order_eight():
    assert order_profile(CATALOG["Q8"]) == (1, 2, 4, 4, 4, 4, 4, 4)
    assert order_profile(CATALOG["D4"]) == (1, 2, 2, 2, 2, 2, 4, 4)


def test_identify_examples():
    assert identify_small_group(trivial_group()) == "1"
    assert identify_small_group(direct_product(cyclic(2), cyclic(3))) == "Z6"
    assert identify_small_group(direct_product(cyclic(2), cyclic(2))) == "V4"


def test_identify_rejects_large():
    with pytest.raises(ModelError):
        identify_small_group(cyclic(9))


def test_from_op_rejects_non_groups():
    with pytest.raises(InvariantViolation):
        GroupTable.from_op(2, [0, 0, 0, 0])
    with pytest.raises(InvariantViolation):
        GroupTable.from_op(3, [0, 1, 2, 1, 0, 2, 2, 2, 0])


@given(labeled_groups(max_size=6))
def test_identification_is_invariant_under_relabeling(g):
    name = identify_small_group(g)
    phi = find_isomorphism(g, CATALOG[name])
    assert phi is not None
    for a in range(g.size):
        for b in range(g.size):
            assert phi[g.mul(a, b)] == CATALOG[name].mul(phi[a], phi[b])
