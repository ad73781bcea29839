import pytest

from hurwitzkit import (CapExceeded, CosetAction, Mover, apply_word, aut_canonical,
                        coset_action, enumerate_orbit, inn_canonical, intersect_actions,
                        named_group, parse_entries, pure_movers,
                        schreier_generators, sigma_movers, validate)
from hurwitzkit.classify import enumerate_data
from hurwitzkit.orbits import invert_letters

from conftest import random_data

# BFS regression values for the (12),(23),(23),(12) datum under A12, A13, A23;
# cross-checked against the naive closure oracle in test_acceptance
REF_PURE_SIZES = {"exact": 8, "inn": 4, "aut": 4}


def canon(d, tag):
    return {"exact": lambda x: x, "inn": inn_canonical, "aut": aut_canonical}[tag](d)


def test_abelian_pure_orbit_is_singleton():
    for name in ("Z2", "Z3", "V4", "Z6"):
        G = named_group(name)
        for d in enumerate_data(G, 4):
            assert enumerate_orbit(d, pure_movers(4), "exact").size == 1


def test_full_orbit_of_unique_z2_datum():
    Z2 = named_group("Z2")
    d = validate(parse_entries("1,1,1,1", Z2), Z2)
    assert enumerate_orbit(d, sigma_movers(4), "exact").size == 1


@pytest.mark.parametrize("tag", ["exact", "inn", "aut"])
def test_reference_pure_orbit_sizes(ref_datum, tag):
    orbit = enumerate_orbit(ref_datum, pure_movers(4), tag)
    assert orbit.size == REF_PURE_SIZES[tag]
    assert orbit.size >= 2


@pytest.mark.parametrize("tag", ["exact", "inn", "aut"])
@pytest.mark.parametrize("kind", ["pure", "full"])
def test_orbit_structure(ref_datum, tag, kind):
    movers = pure_movers(4) if kind == "pure" else sigma_movers(4)
    orbit = enumerate_orbit(ref_datum, movers, tag)
    keys = orbit.key_set()
    assert len(keys) == orbit.size
    assert orbit.keys[0] == canon(ref_datum, tag).ids
    words = {m.name: m.word for m in movers}
    for p, key in enumerate(orbit.keys):
        member = orbit.member(p)
        for m in movers:
            assert canon(apply_word(member, m.word), tag).ids in keys
            assert canon(apply_word(member, m.word.inverse()), tag).ids in keys
        # the transversal word reaches the point
        w = orbit.word_to(p)
        from hurwitzkit.orbits import expand
        moved = apply_word(ref_datum, expand(w, words, 4))
        assert canon(moved, tag).ids == key


def test_orbit_independent_of_start_and_mover_order():
    S4 = named_group("S4")
    for d in random_data(S4, 4, 5, seed=3):
        ref = enumerate_orbit(d, pure_movers(4), "inn")
        rev = enumerate_orbit(d, list(reversed(pure_movers(4))), "inn")
        assert ref.key_set() == rev.key_set()
        renamed = [Mover(f"x{k}", m.word) for k, m in enumerate(pure_movers(4))]
        assert enumerate_orbit(d, renamed, "inn").key_set() == ref.key_set()
        other = ref.member(ref.size - 1)
        again = enumerate_orbit(other, pure_movers(4), "inn")
        assert again.key_set() == ref.key_set()
        assert again.representative == ref.representative


def test_orbit_is_deterministic(ref_datum):
    a = enumerate_orbit(ref_datum, sigma_movers(4), "exact")
    b = enumerate_orbit(ref_datum, sigma_movers(4), "exact")
    assert a.keys == b.keys and a.targets == b.targets and a.transversal() == b.transversal()


def test_orbit_cap(ref_datum):
    with pytest.raises(CapExceeded) as exc:
        enumerate_orbit(ref_datum, sigma_movers(4), "exact", cap=5)
    assert exc.value.reached == 6  # keys found when the BFS stopped


def test_invalid_movers(ref_datum):
    with pytest.raises(ValueError):
        enumerate_orbit(ref_datum, pure_movers(5), "exact")
    with pytest.raises(ValueError):
        enumerate_orbit(ref_datum, pure_movers(4), "bogus")


@pytest.mark.parametrize("name", ["S3", "D4", "Q8", "A4"])
def test_inn_size_divides_exact_times_order(name):
    G = named_group(name)
    data = enumerate_data(G, 4)[:60]
    for d in data:
        exact = enumerate_orbit(d, pure_movers(4), "exact").size
        inn = enumerate_orbit(d, pure_movers(4), "inn").size
        aut = enumerate_orbit(d, pure_movers(4), "aut").size
        assert (exact * G.order()) % inn == 0
        assert exact >= inn >= aut


def test_orbit_report_json(ref_datum):
    doc = enumerate_orbit(ref_datum, pure_movers(4), "aut").to_json()
    assert list(doc) == ["size", "representative", "canonicalizer", "movers"]
    assert doc["size"] == 4 and doc["movers"] == ["A12", "A13", "A23"]


# -- coset actions -----------------------------------------------------------


def test_singleton_coset_action():
    Z2 = named_group("Z2")
    d = validate(parse_entries("1,1,1,1", Z2), Z2)
    ca = coset_action(enumerate_orbit(d, pure_movers(4), "exact"))
    assert ca.index == 1
    assert all(ca.perms[name] == (0,) for name in ca.names)
    gens = schreier_generators(ca)
    assert {str(g) for g in gens} == {"A12", "A13", "A23"}


def test_reference_aut_action_moves_basepoint(ref_datum):
    ca = coset_action(enumerate_orbit(ref_datum, pure_movers(4), "aut"))
    assert ca.act(0, "A12") != 0
    assert ca.is_transitive()


def test_two_point_schreier():
    ca = CosetAction(("a",), {"a": (1, 0)})
    gens = schreier_generators(ca)
    assert (("a", 1), ("a", 1)) in [g.letters for g in gens]
    for g in gens:
        assert ca.stabilizes(g.letters)


@pytest.mark.parametrize("tag", ["exact", "inn", "aut"])
def test_schreier_generators_replay(ref_datum, tag):
    ca = coset_action(enumerate_orbit(ref_datum, pure_movers(4), tag))
    gens = schreier_generators(ca)
    assert gens
    for g in gens:
        assert ca.stabilizes(g.letters)
        assert canon(apply_word(ref_datum, g.word), tag) == canon(ref_datum, tag)


def test_schreier_rejects_bad_transversal():
    ca = CosetAction(("a",), {"a": (1, 0)})
    with pytest.raises(ValueError):
        schreier_generators(ca, [()])
    with pytest.raises(ValueError):
        schreier_generators(ca, [(), ()])


def test_coset_action_validation():
    with pytest.raises(ValueError):
        CosetAction(("a",), {"a": (0, 0)})


def test_intersections(ref_datum):
    ex = coset_action(enumerate_orbit(ref_datum, pure_movers(4), "exact"))
    inn = coset_action(enumerate_orbit(ref_datum, pure_movers(4), "inn"))
    aut = coset_action(enumerate_orbit(ref_datum, pure_movers(4), "aut"))
    assert intersect_actions(ex, ex).index == ex.index
    assert intersect_actions(ex, inn).index == ex.index
    assert intersect_actions(inn, aut).index == inn.index
    trivial = CosetAction(ex.names, {name: (0,) for name in ex.names})
    assert intersect_actions(trivial, inn).index == inn.index
    with pytest.raises(ValueError):
        intersect_actions(ex, CosetAction(("zz",), {"zz": (0,)}))


def test_intersection_bounds_and_stabilizers():
    S4 = named_group("S4")
    for d, e in zip(random_data(S4, 4, 6, seed=5), random_data(S4, 4, 6, seed=6)):
        a = coset_action(enumerate_orbit(d, pure_movers(4), "inn"))
        b = coset_action(enumerate_orbit(e, pure_movers(4), "exact"))
        c = intersect_actions(a, b)
        assert max(a.index, b.index) <= c.index <= a.index * b.index
        for g in schreier_generators(c):
            assert a.stabilizes(g.letters) and b.stabilizes(g.letters)
            assert c.stabilizes(invert_letters(g.letters))
