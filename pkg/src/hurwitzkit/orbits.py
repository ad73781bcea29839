"""Orbits of Nielsen tuples under braid moves, and the coset actions they carry.

An orbit is computed on *keys*: canonical forms of tuples under one of three
canonicalizers.

``exact``
    the tuple itself;
``inn``
    least simultaneous conjugate;
``aut``
    least image under ``Aut G``.

Moves commute with conjugation and with automorphisms, so moving a key and
re-canonicalizing is well defined.  The resulting transitive permutation action
of the movers on keys is a :class:`CosetAction`: the stabilizer of its
basepoint is a finite-index subgroup of the group generated by the movers.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from . import kernels
from .datum import Datum, aut_maps, inn_maps
from .errors import CapExceeded, HurwitzError
from .hurwitz import BraidWord, pure_generators
from .perm import automorphism_group

DEFAULT_ORBIT_CAP = 10**6
CANONICALIZERS = ("exact", "inn", "aut")

#: a word in named movers: ((name, +1 | -1), ...), applied left to right
MoverLetters = tuple[tuple[str, int], ...]


@dataclass(frozen=True)
class Mover:
    name: str
    word: BraidWord


@lru_cache(maxsize=64)
def sigma_movers(n: int) -> tuple[Mover, ...]:
    return tuple(Mover(f"s{i}", BraidWord.sigma(i, n)) for i in range(1, n))


@lru_cache(maxsize=64)
def pure_movers(n: int) -> tuple[Mover, ...]:
    return tuple(Mover(a.name, a.word) for a in pure_generators(n))


def movers_by_kind(kind: str, n: int) -> tuple[Mover, ...]:
    """``"pure"`` (all ``A_ij``) or ``"full"`` (all ``s_i``)."""
    if kind == "pure":
        return pure_movers(n)
    if kind == "full":
        return sigma_movers(n)
    raise ValueError(f"unknown mover set {kind!r}; expected 'pure' or 'full'")


def canonicalizer_maps(G, tag: str):
    if tag == "exact":
        return None
    if tag == "inn":
        return inn_maps(G)
    if tag == "aut":
        return aut_maps(G)
    raise ValueError(f"unknown canonicalizer {tag!r}; expected one of {CANONICALIZERS}")


def expand(letters: MoverLetters, words: dict[str, BraidWord], strands: int) -> BraidWord:
    out: list[int] = []
    for name, sign in letters:
        w = words[name] if sign > 0 else words[name].inverse()
        out.extend(w.letters)
    return BraidWord(tuple(out), strands)


def reduce_letters(letters: MoverLetters) -> MoverLetters:
    out: list[tuple[str, int]] = []
    for name, sign in letters:
        if out and out[-1] == (name, -sign):
            out.pop()
        else:
            out.append((name, sign))
    return tuple(out)


def invert_letters(letters: MoverLetters) -> MoverLetters:
    return tuple((name, -sign) for name, sign in reversed(letters))


@dataclass(frozen=True, eq=False)
class Orbit:
    canonicalizer: str
    start: Datum
    movers: tuple[Mover, ...]
    keys: tuple[tuple[int, ...], ...]
    targets: tuple[tuple[int, ...], ...]
    parent: tuple[int, ...]
    via: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.keys)

    def __len__(self):
        return len(self.keys)

    @property
    def representative(self) -> Datum:
        """Least key of the orbit; independent of the starting member."""
        return self.start.with_ids(min(self.keys))

    def key_set(self) -> frozenset:
        return frozenset(self.keys)

    def member(self, p: int) -> Datum:
        return self.start.with_ids(self.keys[p])

    def word_to(self, p: int) -> MoverLetters:
        """Mover word taking the start's key to key ``p`` (BFS tree path)."""
        m = len(self.movers)
        out = []
        while self.parent[p] >= 0:
            v = self.via[p]
            out.append((self.movers[v % m].name, 1 if v < m else -1))
            p = self.parent[p]
        return tuple(reversed(out))

    def transversal(self) -> dict[tuple[int, ...], MoverLetters]:
        return {k: self.word_to(p) for p, k in enumerate(self.keys)}

    def to_json(self) -> dict:
        return {
            "size": self.size,
            "representative": self.representative.cycle_strings(),
            "canonicalizer": self.canonicalizer,
            "movers": [m.name for m in self.movers],
        }


def _check_compatible(start: Datum, movers: Sequence[Mover], tag: str):
    """Movers must commute with the canonicalizer; verified on ``start``."""
    if tag == "exact":
        return
    G = start.group
    cache = G.__dict__.setdefault("_compat_rows", {})
    if tag not in cache:
        maps = G.conj_table if tag == "inn" else automorphism_group(G).tables()
        cache[tag] = maps.tolist()
    impl = kernels.impl
    tab = kernels.tables_for(G)
    for mv in movers:
        moved = impl.apply_letters(tab, start.ids, mv.word.letters)
        for row in cache[tag]:
            lhs = impl.apply_letters(tab, tuple([row[x] for x in start.ids]), mv.word.letters)
            if lhs != tuple([row[x] for x in moved]):
                raise HurwitzError(f"mover {mv.name} does not commute with the {tag} canonicalizer")


def enumerate_orbit(start: Datum, movers: Sequence[Mover], canonicalize: str = "exact",
                    cap: int = DEFAULT_ORBIT_CAP) -> Orbit:
    """BFS closure of ``start`` under ``movers`` and their inverses.

    Points are canonical keys.  The exploration is a FIFO over movers in the
    given order followed by their inverses, so keys, targets and transversal
    words are deterministic.
    """
    movers = tuple(movers)
    names = [m.name for m in movers]
    if len(set(names)) != len(names):
        raise ValueError(f"duplicate mover names: {names}")
    for mv in movers:
        if mv.word.strands != start.n:
            raise ValueError(f"mover {mv.name} acts on {mv.word.strands} strands, datum has {start.n}")
    maps = canonicalizer_maps(start.group, canonicalize)
    _check_compatible(start, movers, canonicalize)
    letter_lists = [m.word.letters for m in movers] + [m.word.inverse().letters for m in movers]
    res = kernels.impl.orbit_bfs(kernels.tables_for(start.group), start.ids, letter_lists, maps, cap)
    if res is None:
        raise CapExceeded("orbit size", cap, cap + 1)
    keys, targets, parent, via = res
    return Orbit(canonicalize, start, movers, tuple(keys), tuple(map(tuple, targets)),
                 tuple(parent), tuple(via))


# -- coset actions -----------------------------------------------------------


@dataclass(frozen=True, eq=False)
class CosetAction:
    """A transitive action of named generators on points ``0..k-1``.

    ``perms[name][p]`` is the image of point ``p``; point 0 is the basepoint.
    ``labels`` describe the points (orbit keys, pairs, ...).  ``words`` maps
    generator names to braid words when the action comes from braid movers.
    """

    names: tuple[str, ...]
    perms: dict[str, tuple[int, ...]]
    labels: tuple = ()
    words: dict[str, BraidWord] | None = None
    strands: int | None = None
    _inverse: dict[str, tuple[int, ...]] = field(default_factory=dict, repr=False)
    _transversal: list = field(default_factory=list, repr=False)

    def __post_init__(self):
        size = None
        for name in self.names:
            perm = self.perms[name]
            if size is None:
                size = len(perm)
            if len(perm) != size or sorted(perm) != list(range(size)):
                raise ValueError(f"generator {name} is not a permutation of the points")
            inv = [0] * size
            for p, q in enumerate(perm):
                inv[q] = p
            self._inverse[name] = tuple(inv)
        self._transversal.extend(self._bfs_words())

    @property
    def index(self) -> int:
        """Number of points, i.e. the index of the basepoint stabilizer."""
        if self.names:
            return len(self.perms[self.names[0]])
        return len(self.labels) or 1

    def __len__(self):
        return self.index

    def act(self, p: int, name: str, sign: int = 1) -> int:
        return self.perms[name][p] if sign > 0 else self._inverse[name][p]

    def trace(self, letters: MoverLetters, p: int = 0) -> int:
        for name, sign in letters:
            p = self.act(p, name, sign)
        return p

    def stabilizes(self, letters: MoverLetters) -> bool:
        return self.trace(letters) == 0

    def _bfs_words(self):
        words: list = [None] * self.index
        words[0] = ()
        queue = deque([0])
        while queue:
            p = queue.popleft()
            for sign in (1, -1):
                for name in self.names:
                    q = self.act(p, name, sign)
                    if words[q] is None:
                        words[q] = words[p] + ((name, sign),)
                        queue.append(q)
        return words

    @property
    def transversal(self) -> list:
        """``transversal[p]`` is a mover word taking the basepoint to ``p``;
        ``None`` where ``p`` is unreachable."""
        return list(self._transversal)

    def is_transitive(self) -> bool:
        return all(w is not None for w in self._transversal)

    def braid_word(self, letters: MoverLetters) -> BraidWord:
        if self.words is None:
            raise ValueError("this action carries no braid words")
        return expand(letters, self.words, self.strands)


def coset_action(orbit: Orbit, movers: Sequence[Mover] | None = None) -> CosetAction:
    """The permutation action of ``orbit.movers`` on the orbit's keys."""
    if movers is not None and [m.name for m in movers] != [m.name for m in orbit.movers]:
        raise ValueError("movers differ from those the orbit was enumerated with")
    names = tuple(m.name for m in orbit.movers)
    perms = {m.name: tuple(row[k] for row in orbit.targets) for k, m in enumerate(orbit.movers)}
    return CosetAction(names, perms, labels=orbit.keys,
                       words={m.name: m.word for m in orbit.movers}, strands=orbit.start.n)


@dataclass(frozen=True)
class SchreierGenerator:
    """A basepoint-stabilizing word ``u_p . g . u_{p.g}^-1``."""

    letters: MoverLetters
    word: BraidWord | None = None

    def __str__(self):
        return " ".join(n if s > 0 else f"{n}^-1" for n, s in self.letters) or "1"


def schreier_generators(ca: CosetAction, transversal: Sequence | None = None) -> list[SchreierGenerator]:
    """Schreier generators of the basepoint stabilizer of ``ca``.

    ``transversal[p]`` must be a mover word taking the basepoint to ``p``;
    by default the action's BFS transversal is used.  Words that freely reduce
    to the empty word are dropped, and duplicates are removed.
    """
    tv = list(transversal) if transversal is not None else ca.transversal
    if len(tv) != ca.index or any(w is None for w in tv):
        raise ValueError("transversal is missing entries")
    for p, w in enumerate(tv):
        if ca.trace(tuple(w)) != p:
            raise ValueError(f"transversal word for point {p} does not reach it")
    seen = set()
    out = []
    for p in range(ca.index):
        for name in ca.names:
            q = ca.act(p, name)
            letters = reduce_letters(tuple(tv[p]) + ((name, 1),) + invert_letters(tuple(tv[q])))
            if not letters or letters in seen:
                continue
            seen.add(letters)
            word = ca.braid_word(letters) if ca.words is not None else None
            out.append(SchreierGenerator(letters, word))
    return out


def intersect_actions(a: CosetAction, b: CosetAction) -> CosetAction:
    """Action on the orbit of the basepoint pair in ``a x b``.

    Its basepoint stabilizer is the intersection of the two stabilizers.
    """
    if set(a.names) != set(b.names):
        raise ValueError(f"mover mismatch: {a.names} vs {b.names}")
    index = {(0, 0): 0}
    pts = [(0, 0)]
    rows: dict[str, list[int]] = {name: [] for name in a.names}
    p = 0
    # close under forward and inverse moves so the result is a group orbit
    while p < len(pts):
        x, y = pts[p]
        for sign in (1, -1):
            for name in a.names:
                nxt = (a.act(x, name, sign), b.act(y, name, sign))
                if nxt not in index:
                    index[nxt] = len(pts)
                    pts.append(nxt)
                if sign > 0:
                    rows[name].append(index[nxt])
        p += 1
    perms = {name: tuple(rows[name]) for name in a.names}
    return CosetAction(a.names, perms, labels=tuple(pts), words=a.words, strands=a.strands)
