import itertools

import pytest

from asmverma.errors import InputError, ResourceLimitError
from asmverma.poset import (
    FinitePoset,
    antichain,
    birkhoff,
    boolean_lattice,
    chain,
    diamond_m3,
    distributivity_witness,
    is_distributive,
    is_distributive_bruteforce,
    iter_order_ideals,
    join_irreducibles,
    macneille_completion,
    order_ideals,
    pentagon_n5,
    poset_isomorphic,
)
from asmverma.verify import natural_posets


def test_rejects_cycles_and_duplicates():
    with pytest.raises(InputError):
        FinitePoset.from_relations("ab", [("a", "b"), ("b", "a")])
    with pytest.raises(InputError):
        FinitePoset(["a", "a"], [1, 2])


def test_catalog_shapes():
    assert len(chain(4).cover_pairs()) == 3
    assert len(boolean_lattice(3)) == 8
    assert is_distributive(boolean_lattice(3))
    assert not is_distributive(diamond_m3())
    assert not is_distributive(pentagon_n5())


def test_witnesses():
    kind, (bot, *_, top) = distributivity_witness(diamond_m3())
    assert kind == "M3"
    kind, _ = distributivity_witness(pentagon_n5())
    assert kind == "N5"
    assert distributivity_witness(boolean_lattice(3)) is None


def test_non_lattice_rejected():
    with pytest.raises(InputError):
        is_distributive(antichain(2))


@pytest.mark.parametrize("size", [1, 2, 3, 4, 5])
def test_distributivity_agrees_with_triples(size):
    for p in natural_posets(size):
        lat = order_ideals(p).poset()
        assert is_distributive(lat) and is_distributive_bruteforce(lat)
        comp, _ = macneille_completion(p)
        assert is_distributive(comp) == is_distributive_bruteforce(comp)
        assert (distributivity_witness(comp) is None) == is_distributive(comp)


def _ideal_count_bruteforce(p):
    n = len(p)
    count = 0
    for mask in range(1 << n):
        if all((p.down[i] & ~mask) == 0 for i in range(n) if (mask >> i) & 1):
            count += 1
    return count


@pytest.mark.parametrize("size", [1, 2, 3, 4, 5])
def test_ideal_enumeration_bruteforce(size):
    for p in natural_posets(size):
        masks = list(iter_order_ideals(p))
        assert len(masks) == len(set(masks)) == _ideal_count_bruteforce(p)


def test_ideal_counts_known():
    assert len(order_ideals(antichain(5))) == 32
    assert len(order_ideals(chain(5))) == 6


def test_ideal_bound():
    with pytest.raises(ResourceLimitError):
        order_ideals(antichain(12), max_ideals=1000)


@pytest.mark.parametrize("size", range(1, 7))
def test_birkhoff_roundtrip(size):
    for p in natural_posets(size):
        assert poset_isomorphic(birkhoff(order_ideals(p).poset()), p) is not None


def test_macneille_of_lattice_is_itself():
    for lat in (boolean_lattice(3), diamond_m3(), pentagon_n5(), chain(4)):
        comp, emb = macneille_completion(lat)
        assert len(comp) == len(lat)
        assert poset_isomorphic(comp, lat) is not None


def test_macneille_of_antichain_adds_bounds():
    comp, emb = macneille_completion(antichain(3))
    assert len(comp) == 5
    assert comp.is_lattice()
    assert poset_isomorphic(comp, diamond_m3()) is not None


def test_macneille_embedding_preserves_order():
    for p in natural_posets(4):
        comp, emb = macneille_completion(p)
        for a, b in itertools.product(p.labels, repeat=2):
            assert p.leq(a, b) == comp.leq(emb[a], emb[b])


def test_isomorphism_negative():
    assert poset_isomorphic(diamond_m3(), pentagon_n5()) is None
    assert poset_isomorphic(chain(3), antichain(3)) is None


def test_join_irreducibles_boolean():
    assert len(join_irreducibles(boolean_lattice(4))) == 4


def test_json_and_dot():
    p = chain(3)
    data = p.to_json()
    assert len(data["elements"]) == 3 and len(data["covers"]) == 2
    assert p.to_dot().count("->") == 2
