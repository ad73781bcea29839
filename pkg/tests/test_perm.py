import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hurwitzkit import (CapExceeded, ParseError, Perm, PermGroup, automorphism_group, center,
                        compose, inner_automorphism, named_group)
from hurwitzkit.errors import HypothesisViolation
from hurwitzkit.perm import group_from_json, load_group

import oracles


def P(text, d=3):
    return Perm.parse(text, d)


def test_compose_right_to_left():
    assert compose(P("(1 2)"), P("(2 3)")) == P("(1 2 3)")
    assert P("(2 3)") * P("(1 3)") == P("(1 2 3)")


def test_compose_inverse_and_degree_mismatch():
    p = P("(1 2 3)")
    assert (p * p.inverse()).is_identity()
    with pytest.raises(ValueError):
        compose(P("(1 2)", 2), P("(1 2)", 3))


@pytest.mark.parametrize("text, degree, images", [
    ("()", 3, (0, 1, 2)),
    ("(1 2)(3 4)", 4, (1, 0, 3, 2)),
    ("(1,3,2)", 3, (2, 0, 1)),
    ("(1 2)", None, (1, 0)),
])
def test_parse(text, degree, images):
    assert Perm.parse(text, degree).images == images


@pytest.mark.parametrize("bad", ["", "(1 2", "1 2", "(1 x)", "(0 1)", "(1 2)(2 3)", "(1 5)"])
def test_parse_rejects(bad):
    with pytest.raises(ParseError):
        Perm.parse(bad, 4)


@given(st.permutations(list(range(6))))
def test_cycle_string_round_trip(images):
    p = Perm(images)
    assert Perm.parse(p.cycle_string(), 6) == p


perm6 = st.permutations(list(range(5))).map(Perm)


@given(perm6, perm6, perm6)
def test_compose_associative(p, q, r):
    assert (p * q) * r == p * (q * r)
    e = Perm.identity(5)
    assert e * p == p == p * e


def test_elements_sorted_with_identity_first(s3):
    els = s3.elements
    assert els[0].is_identity()
    assert list(els) == sorted(els)
    assert len(els) == 6


@pytest.mark.parametrize("name", ["Z2", "Z3", "Z4", "Z6", "V4", "S3", "D4", "Q8", "A4", "S4"])
def test_tables_match_composition(name):
    G = named_group(name)
    els = G.elements
    for a, b in itertools.product(range(G.order()), repeat=2):
        assert els[G.mul(a, b)] == els[a] * els[b]
    for a in range(G.order()):
        assert (els[G.inv(a)] * els[a]).is_identity()


def test_order_cap():
    G = named_group("S4")
    G.order_cap = 10
    with pytest.raises(CapExceeded):
        G.order()


@pytest.mark.parametrize("name, expected", [("S3", 1), ("Z4", 4), ("Q8", 2), ("D4", 2), ("A4", 1)])
def test_center_orders(name, expected):
    G = named_group(name)
    z = center(G)
    assert len(z) == expected
    ref = oracles.brute_center({p.images for p in G.elements})
    assert {p.images for p in z} == ref


@pytest.mark.parametrize("name, n_aut, n_inn", [
    ("S3", 6, 6), ("V4", 6, 1), ("Z2", 1, 1), ("Z6", 2, 1), ("D4", 8, 4), ("Q8", 24, 4),
    ("A4", 24, 12), ("S4", 24, 24),
])
def test_automorphism_group_sizes(name, n_aut, n_inn):
    A = automorphism_group(named_group(name))
    assert (len(A), len(A.inner), A.out_order) == (n_aut, n_inn, n_aut // n_inn)


@pytest.mark.parametrize("name", ["S3", "V4", "Z4", "D4", "Z6"])
def test_automorphism_group_matches_bruteforce(name):
    G = named_group(name)
    ref = oracles.brute_automorphisms({p.images for p in G.elements})
    got = {tuple(a(p).images for p in G.elements) for a in automorphism_group(G)}
    want = {tuple(f[p.images] for p in G.elements) for f in ref}
    assert got == want


def test_trivial_group_automorphisms():
    G = PermGroup([], degree=3)
    A = automorphism_group(G)
    assert len(A) == 1 and A.elements[0].is_identity()


@pytest.mark.parametrize("name", ["S3", "V4", "D4", "Q8", "A4"])
def test_aut_invariants(name):
    G = named_group(name)
    A = automorphism_group(G)
    assert len(A.inner) * len(center(G)) == G.order()
    auts = set(A.elements)
    assert len(auts) == len(A.elements)
    for a in A.elements:
        assert a.inverse() in auts
        for b in A.elements[:6]:
            assert a.compose(b) in auts
    inner = set(A.inner)
    for a in A.elements:
        for i in A.inner:
            assert a.compose(i).compose(a.inverse()) in inner


def test_inner_automorphism(s3):
    assert inner_automorphism(s3, P("()")).is_identity()
    assert inner_automorphism(s3, P("(1 3)"))(P("(2 3)")) == P("(1 2)")
    with pytest.raises(HypothesisViolation):
        inner_automorphism(s3, Perm.parse("(1 2)", 4))


@given(st.integers(0, 23), st.integers(0, 23))
@settings(max_examples=50)
def test_inner_is_functorial(i, j):
    G = named_group("S4")
    a, b = G.element(i), G.element(j)
    assert inner_automorphism(G, a).compose(inner_automorphism(G, b)) == inner_automorphism(G, a * b)


def test_group_json_and_loading(tmp_path):
    G = group_from_json({"degree": 3, "generators": ["(1 2)", "(1 2 3)"]})
    assert G == named_group("S3")
    path = tmp_path / "g.json"
    path.write_text('{"degree": 4, "generators": ["(1 2)(3 4)", "(1 3)(2 4)"]}')
    assert load_group(str(path)).order() == 4
    assert load_group("s3").order() == 6
    with pytest.raises(ParseError):
        load_group("nonexistent-group")


def test_class_labels(s3):
    labels = s3.class_labels()
    assert sorted(set(labels)) == ["1a", "2a", "3a"]
    A4 = named_group("A4")
    assert sorted(set(A4.class_labels())) == ["1a", "2a", "3a", "3b"]
