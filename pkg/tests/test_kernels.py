import os
import random
import subprocess
import sys

import pytest

from hurwitzkit import kernels, named_group, pure_movers, sigma_movers
from hurwitzkit.perm import automorphism_group

from conftest import random_data

needs_cython = pytest.mark.skipif("cython" not in kernels.available_backends(),
                                  reason="compiled kernels not built")


def both(G, maps=None):
    py, cy = kernels.get_backend("python"), kernels.get_backend("cython")
    return (py, kernels.tables_for(G, "python"), py.prepare_maps(maps)), \
           (cy, kernels.tables_for(G, "cython"), cy.prepare_maps(maps))


@needs_cython
@pytest.mark.parametrize("name", ["S3", "A4", "Q8", "S4"])
def test_apply_and_canonical_agree(name):
    G = named_group(name)
    rng = random.Random(0)
    for maps in (None, G.conj_table, automorphism_group(G).tables()):
        (py, tp, mp), (cy, tc, mc) = both(G, maps)
        for _ in range(200):
            tup = tuple(rng.randrange(G.order()) for _ in range(5))
            letters = [rng.choice([1, 2, 3, 4, -1, -2, -3, -4]) for _ in range(rng.randrange(8))]
            assert py.apply_letters(tp, tup, letters) == cy.apply_letters(tc, tup, letters)
            assert py.canonical(tup, mp) == cy.canonical(tup, mc)
            assert py.generates(tp, tup) == cy.generates(tc, tup)


@needs_cython
@pytest.mark.parametrize("name, n", [("S3", 4), ("A4", 4), ("D4", 5)])
def test_enumeration_agrees(name, n):
    G = named_group(name)
    (py, tp, _), (cy, tc, _) = both(G)
    assert py.enumerate_data(tp, n) == cy.enumerate_data(tc, n)


@needs_cython
@pytest.mark.parametrize("tag", ["exact", "inn", "aut"])
def test_orbit_bfs_agrees(tag):
    G = named_group("S4")
    maps = {"exact": None, "inn": G.conj_table, "aut": automorphism_group(G).tables()}[tag]
    (py, tp, mp), (cy, tc, mc) = both(G, maps)
    for movers in (pure_movers(5), sigma_movers(5)):
        letters = [m.word.letters for m in movers] + [m.word.inverse().letters for m in movers]
        for d in random_data(G, 5, 3, seed=9):
            assert py.orbit_bfs(tp, d.ids, letters, mp, 10**6) == cy.orbit_bfs(tc, d.ids, letters, mc, 10**6)
            assert py.orbit_bfs(tp, d.ids, letters, mp, 3) is None
            assert cy.orbit_bfs(tc, d.ids, letters, mc, 3) is None


def test_pure_python_selected_by_env():
    env = dict(os.environ, HURWITZKIT_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", "import hurwitzkit; print(hurwitzkit.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"


def test_unknown_backend():
    with pytest.raises(ValueError):
        kernels.get_backend("fortran")
