"""Extension data of a Nielsen tuple under the pure braid action.

The pure generators ``A_ij`` act on a datum ``t``.  Three stabilizers of ``t``
are nested:

* ``H'``: words fixing ``t`` exactly,
* ``H'''``: words sending ``t`` to a simultaneous conjugate,
* ``H''``: words sending ``t`` to an ``Aut G``-image.

Their indices are the sizes of the pure orbits of ``t`` under the exact, inn
and aut canonicalizers.  On ``H''`` each word ``w`` determines a unique
automorphism ``eps(w)`` with ``eps(w)(t_i) = (w.t)_i`` because the entries
generate ``G``; words compose as ``eps(w1 w2) = eps(w1) ∘ eps(w2)``.

An *extension handle* is a coset action together with a G-valued cocycle on
its edges; the value of a basepoint loop ``h`` is the element ``f(h)`` with
``h.t = f(h) t f(h)^-1``.  Handles are ordered by ``a >= b`` iff the
stabilizer of ``a`` lies in that of ``b`` and the values agree there, and any
two handles over the same datum have a join.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from . import kernels
from .datum import Datum, conjugate
from .errors import CapExceeded, HurwitzError, HypothesisViolation
from .hurwitz import apply_word
from .orbits import (DEFAULT_ORBIT_CAP, CosetAction, MoverLetters, SchreierGenerator,
                     coset_action, enumerate_orbit, pure_movers, schreier_generators)
from .perm import GroupAutomorphism, automorphism_group, center


def conjugators(t: Datum, target: Datum) -> list[int]:
    """All ``g`` (as ids) with ``g t_i g^-1 = target_i`` for every ``i``."""
    conj = t.group.conj_table
    return [g for g in range(t.group.order())
            if all(conj[g, x] == y for x, y in zip(t.ids, target.ids))]


def solve_automorphism(t: Datum, target: Datum) -> GroupAutomorphism | None:
    """The automorphism mapping ``t`` to ``target`` coordinatewise, if any."""
    for eta in automorphism_group(t.group):
        if all(eta.table[x] == y for x, y in zip(t.ids, target.ids)):
            return eta
    return None


def _closure(elements, compose, identity):
    out = {identity}
    queue = deque([identity])
    while queue:
        x = queue.popleft()
        for g in elements:
            y = compose(x, g)
            if y not in out:
                out.add(y)
                queue.append(y)
    return out


def _out_class(eta: GroupAutomorphism, inner) -> tuple:
    return min(tuple(eta.table[y] for y in i.table) for i in inner)


@dataclass(frozen=True)
class ExtensionReport:
    datum: Datum
    exact_orbit_index: int
    exact_index_ambiguous: bool
    inn_orbit_index: int
    aut_orbit_index: int
    eps_image: tuple[GroupAutomorphism, ...]
    eps_image_in_out: int
    center_trivial: bool
    abelian: bool
    eps_generators: tuple[tuple[SchreierGenerator, GroupAutomorphism], ...] = field(repr=False, default=())

    def to_json(self) -> dict:
        G = self.datum.group
        return {
            "datum": self.datum.to_json(),
            "exact_orbit_index": self.exact_orbit_index,
            "exact_index_ambiguous": self.exact_index_ambiguous,
            "inn_orbit_index": self.inn_orbit_index,
            "aut_orbit_index": self.aut_orbit_index,
            "eps_image_order": len(self.eps_image),
            "eps_image_in_out": self.eps_image_in_out,
            "eps_image_generators": [
                {"word": str(w), "images": [p.cycle_string() for p in eta.gen_images]}
                for w, eta in self.eps_generators
            ],
            "center_trivial": self.center_trivial,
            "abelian": self.abelian,
            "group_order": G.order(),
        }


def extension_report(d: Datum, cap: int = DEFAULT_ORBIT_CAP) -> ExtensionReport:
    G = d.group
    movers = pure_movers(d.n)
    exact = enumerate_orbit(d, movers, "exact", cap)
    inn = enumerate_orbit(d, movers, "inn", cap)
    aut = enumerate_orbit(d, movers, "aut", cap)

    auts = automorphism_group(G)
    ident = GroupAutomorphism(G, tuple(range(G.order())))
    gens = []
    for w in schreier_generators(coset_action(aut)):
        eta = solve_automorphism(d, apply_word(d, w.word))
        if eta is None:
            raise HurwitzError(f"no automorphism realizes stabilizer word {w}")
        gens.append((w, eta))
    image = _closure({eta for _, eta in gens}, GroupAutomorphism.compose, ident)
    out_classes = {_out_class(eta, auts.inner) for eta in image}

    z = center(G)
    last = G.element(d.ids[-1])
    return ExtensionReport(
        datum=d,
        exact_orbit_index=exact.size,
        exact_index_ambiguous=last not in z,
        inn_orbit_index=inn.size,
        aut_orbit_index=aut.size,
        eps_image=tuple(sorted(image, key=lambda a: a.table)),
        eps_image_in_out=len(out_classes),
        center_trivial=len(z) == 1,
        abelian=G.is_abelian(),
        eps_generators=tuple(gens),
    )


# -- centerless minimum ------------------------------------------------------


@dataclass(frozen=True)
class PhiCheck:
    generator: SchreierGenerator
    phi: int  # element id
    verified: bool


@dataclass(frozen=True)
class MinimalExtension:
    datum: Datum
    base: CosetAction
    checks: tuple[PhiCheck, ...]

    @property
    def degree(self) -> int:
        return self.base.index

    @property
    def certified(self) -> bool:
        return all(c.verified for c in self.checks)

    def phi(self, letters: MoverLetters) -> int:
        """``phi`` of a basepoint-stabilizing mover word, by replay."""
        if not self.base.stabilizes(letters):
            raise ValueError("word does not stabilize the basepoint")
        moved = apply_word(self.datum, self.base.braid_word(letters))
        (g,) = conjugators(self.datum, moved)
        return g

    def to_json(self) -> dict:
        G = self.datum.group
        return {
            "degree": self.degree,
            "certified": self.certified,
            "phi": [{"word": str(c.generator), "phi": G.element(c.phi).cycle_string(),
                     "verified": c.verified} for c in self.checks],
        }


def centerless_minimum(d: Datum, cap: int = DEFAULT_ORBIT_CAP) -> MinimalExtension:
    """The minimal extension for a group with trivial center.

    The base is the pure action on the inn-orbit of ``d``.  For each Schreier
    generator ``w`` of its basepoint stabilizer, ``phi(w)`` is the unique
    ``g`` with ``w.d = g d g^-1``; the check records that this identity holds.
    """
    G = d.group
    if len(center(G)) != 1:
        raise HypothesisViolation(f"{G} has nontrivial center; the minimum requires Z(G) = 1")
    orbit = enumerate_orbit(d, pure_movers(d.n), "inn", cap)
    base = coset_action(orbit)
    checks = []
    for w in schreier_generators(base):
        moved = apply_word(d, w.word)
        gs = conjugators(d, moved)
        if len(gs) != 1:
            raise HurwitzError(f"stabilizer word {w} has {len(gs)} conjugators, expected 1")
        g = gs[0]
        checks.append(PhiCheck(w, g, conjugate(d, g) == moved))
    return MinimalExtension(d, base, tuple(checks))


# -- abelian certificate -----------------------------------------------------


@dataclass(frozen=True)
class AbelianCertificate:
    datum: Datum
    checked: tuple[str, ...]
    orbit_size: int

    @property
    def passed(self) -> bool:
        return self.orbit_size == 1

    def to_json(self) -> dict:
        return {"passed": self.passed, "orbit_size": self.orbit_size, "checked": list(self.checked)}


def abelian_certificate(d: Datum, cap: int = DEFAULT_ORBIT_CAP) -> AbelianCertificate:
    """Certify that every ``A_ij`` fixes ``d`` when ``G`` is abelian."""
    if not d.group.is_abelian():
        raise HypothesisViolation(f"{d.group} is not abelian")
    movers = pure_movers(d.n)
    for mv in movers:
        if apply_word(d, mv.word) != d:
            raise HurwitzError(f"{mv.name} moves an abelian datum; implementation error")
    orbit = enumerate_orbit(d, movers, "exact", cap)
    return AbelianCertificate(d, tuple(m.name for m in movers), orbit.size)


# -- extension handles and joins --------------------------------------------


@dataclass(frozen=True, eq=False)
class ExtensionHandle:
    """A coset action of the pure movers with a G-valued edge cocycle.

    ``cocycle[name][p]`` is the group element (id) attached to the edge from
    ``p`` along mover ``name``.  The value on a word is the left-to-right
    product of the edge values along its path.
    """

    datum: Datum
    action: CosetAction
    cocycle: dict[str, tuple[int, ...]]
    level: str

    @property
    def index(self) -> int:
        return self.action.index

    def edge(self, p: int, name: str, sign: int) -> int:
        G = self.datum.group
        if sign > 0:
            return self.cocycle[name][p]
        q = self.action.act(p, name, -1)
        return G.inv(self.cocycle[name][q])

    def evaluate(self, letters: MoverLetters) -> tuple[int, int]:
        """``(endpoint, value)`` of a mover word started at the basepoint."""
        G = self.datum.group
        p, val = 0, 0
        for name, sign in letters:
            val = G.mul(val, self.edge(p, name, sign))
            p = self.action.act(p, name, sign)
        return p, val

    def value(self, letters: MoverLetters) -> int:
        p, val = self.evaluate(letters)
        if p != 0:
            raise ValueError("word is not a basepoint loop")
        return val


def handle(d: Datum, level: str, cap: int = DEFAULT_ORBIT_CAP) -> ExtensionHandle:
    """The canonical handle at ``level`` in ``exact``, ``inn``, ``aut``.

    ``exact`` carries the trivial cocycle and always exists.  ``inn`` needs
    ``Z(G) = 1`` so conjugators are unique; ``aut`` additionally needs every
    automorphism to be inner.
    """
    G = d.group
    if level != "exact":
        if len(center(G)) != 1:
            raise HypothesisViolation(f"{level} handle needs Z(G) = 1")
        if level == "aut" and automorphism_group(G).out_order != 1:
            raise HypothesisViolation("aut handle needs Aut G = Inn G")
    movers = pure_movers(d.n)
    orbit = enumerate_orbit(d, movers, level, cap)
    action = coset_action(orbit)
    if level == "exact":
        zeros = tuple([0] * orbit.size)
        return ExtensionHandle(d, action, {m.name: zeros for m in movers}, level)
    tab = kernels.tables_for(G)
    reps = [d.ids] + list(orbit.keys[1:])
    cocycle = {}
    for m in movers:
        row = []
        for p, rep in enumerate(reps):
            moved = d.with_ids(kernels.impl.apply_letters(tab, rep, m.word.letters))
            q = action.act(p, m.name)
            if level == "inn":
                gs = conjugators(d.with_ids(reps[q]), moved)
            else:
                eta = solve_automorphism(d.with_ids(reps[q]), moved)
                gs = [] if eta is None else [
                    g for g in range(G.order())
                    if all(int(G.conj_table[g, x]) == eta.table[x] for x in G.generator_ids())]
            if len(gs) != 1:
                raise HurwitzError(f"edge {p} --{m.name}--> {q}: {len(gs)} conjugators")
            row.append(gs[0])
        cocycle[m.name] = tuple(row)
    return ExtensionHandle(d, action, cocycle, level)


def join(a: ExtensionHandle, b: ExtensionHandle, cap: int = DEFAULT_ORBIT_CAP) -> ExtensionHandle:
    """Least common refinement: loops lying in both stabilizers on which the
    two cocycles agree.

    Points are triples ``(x, y, g)`` with ``g = f_a(path)^-1 f_b(path)``.
    """
    if a.datum.group is not b.datum.group or a.datum.ids != b.datum.ids:
        raise ValueError("handles belong to different data")
    if a.action.names != b.action.names:
        raise ValueError(f"mover mismatch: {a.action.names} vs {b.action.names}")
    G = a.datum.group
    names = a.action.names
    index = {(0, 0, 0): 0}
    pts = [(0, 0, 0)]
    rows = {name: [] for name in names}
    coc = {name: [] for name in names}
    p = 0
    while p < len(pts):
        x, y, g = pts[p]
        for sign in (1, -1):
            for name in names:
                ca, cb = a.edge(x, name, sign), b.edge(y, name, sign)
                nxt = (a.action.act(x, name, sign), b.action.act(y, name, sign),
                       G.mul(G.mul(G.inv(ca), g), cb))
                if nxt not in index:
                    if len(pts) >= cap:
                        raise CapExceeded("join size", cap, len(pts))
                    index[nxt] = len(pts)
                    pts.append(nxt)
                if sign > 0:
                    rows[name].append(index[nxt])
                    coc[name].append(ca)
        p += 1
    action = CosetAction(names, {k: tuple(v) for k, v in rows.items()}, labels=tuple(pts),
                         words=a.action.words, strands=a.action.strands)
    return ExtensionHandle(a.datum, action, {k: tuple(v) for k, v in coc.items()},
                           f"join({a.level},{b.level})")


def dominates(a: ExtensionHandle, b: ExtensionHandle) -> bool:
    """``a >= b``: the stabilizer of ``a`` lies in that of ``b`` and the values agree."""
    return join(a, b).index == a.index
