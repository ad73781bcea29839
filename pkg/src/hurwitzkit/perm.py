"""Permutations, finite permutation groups and their automorphisms.

Points are 0-based internally and 1-based in cycle notation.  Composition is
right-to-left: ``p * q`` (or ``compose(p, q)``) applies ``q`` first, then ``p``.

Group elements are enumerated once, sorted lexicographically by their image
arrays, and from then on referred to by small integer ids.  The identity is
always id 0.  Because ids follow the lexicographic order of permutations,
comparing tuples of ids compares the underlying tuples of permutations.
"""

from __future__ import annotations

import json
import re
import threading
from collections import deque
from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence

import numpy as np

from .errors import CapExceeded, HypothesisViolation, ParseError

DEFAULT_ORDER_CAP = 2000

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


class Perm:
    """An immutable permutation of ``{0, ..., d-1}``."""

    __slots__ = ("images", "_hash")

    def __init__(self, images: Iterable[int]):
        images = tuple(int(i) for i in images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation: {images}")
        if not images:
            raise ValueError("degree must be positive")
        self.images = images
        self._hash = hash(images)

    @classmethod
    def identity(cls, degree: int) -> "Perm":
        return cls(range(degree))

    @classmethod
    def from_cycles(cls, cycles: Sequence[Sequence[int]], degree: int) -> "Perm":
        """Build from 0-based cycles."""
        images = list(range(degree))
        seen = set()
        for cyc in cycles:
            for k, a in enumerate(cyc):
                if not 0 <= a < degree:
                    raise ValueError(f"point {a + 1} out of range 1..{degree}")
                if a in seen:
                    raise ValueError(f"point {a + 1} repeated")
                seen.add(a)
                images[a] = cyc[(k + 1) % len(cyc)]
        return cls(images)

    @classmethod
    def parse(cls, text: str, degree: int | None = None) -> "Perm":
        """Parse 1-based cycle notation such as ``"(1 2)(3 4)"`` or ``"()"``.

        Points may be separated by spaces or commas.  If ``degree`` is omitted
        the largest point mentioned is used (at least 1).
        """
        s = text.strip()
        if not s:
            raise ParseError("empty permutation string")
        if _CYCLE_RE.sub("", s).strip():
            raise ParseError(f"malformed cycle notation: {text!r}")
        cycles = []
        for body in _CYCLE_RE.findall(s):
            toks = [t for t in re.split(r"[\s,]+", body.strip()) if t]
            try:
                pts = [int(t) - 1 for t in toks]
            except ValueError:
                raise ParseError(f"non-integer point in {text!r}") from None
            if any(p < 0 for p in pts):
                raise ParseError(f"points are 1-based: {text!r}")
            if len(pts) > 1:
                cycles.append(pts)
        top = max((p + 1 for c in cycles for p in c), default=1)
        if degree is None:
            degree = top
        elif top > degree:
            raise ParseError(f"point {top} out of range for degree {degree}")
        try:
            return cls.from_cycles(cycles, degree)
        except ValueError as exc:
            raise ParseError(f"{exc} in {text!r}") from None

    @property
    def degree(self) -> int:
        return len(self.images)

    def cycles(self) -> list[tuple[int, ...]]:
        """Non-trivial cycles, 0-based, each starting at its least point."""
        seen = set()
        out = []
        for start in range(self.degree):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            k = self.images[start]
            while k != start:
                cyc.append(k)
                seen.add(k)
                k = self.images[k]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def cycle_string(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(str(a + 1) for a in c) + ")" for c in cyc)

    def is_identity(self) -> bool:
        return all(i == k for k, i in enumerate(self.images))

    def inverse(self) -> "Perm":
        inv = [0] * self.degree
        for k, i in enumerate(self.images):
            inv[i] = k
        return Perm(inv)

    def order(self) -> int:
        o = 1
        for c in self.cycles():
            o = o * len(c) // gcd(o, len(c))
        return o

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: "Perm") -> "Perm":
        return compose(self, other)

    def __pow__(self, k: int) -> "Perm":
        base = self if k >= 0 else self.inverse()
        out = Perm.identity(self.degree)
        for _ in range(abs(k)):
            out = compose(base, out)
        return out

    def __eq__(self, other):
        if not isinstance(other, Perm):
            return NotImplemented
        return self.images == other.images

    def __lt__(self, other: "Perm") -> bool:
        return self.images < other.images

    def __le__(self, other: "Perm") -> bool:
        return self.images <= other.images

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Perm({self.cycle_string()!r}, degree={self.degree})"

    def __str__(self):
        return self.cycle_string()


def compose(p: Perm, q: Perm) -> Perm:
    """Return ``p ∘ q``: apply ``q`` first, then ``p``."""
    if p.degree != q.degree:
        raise ValueError(f"degree mismatch: {p.degree} != {q.degree}")
    pi = p.images
    return Perm(pi[j] for j in q.images)


class PermGroup:
    """A finite group given by permutation generators.

    Element enumeration and the multiplication table are computed on first use
    under a lock, then only read.
    """

    def __init__(self, generators: Sequence[Perm], degree: int | None = None,
                 name: str | None = None, order_cap: int = DEFAULT_ORDER_CAP):
        gens = list(generators)
        if degree is None:
            if not gens:
                raise ValueError("degree required for a group with no generators")
            degree = gens[0].degree
        for g in gens:
            if g.degree != degree:
                raise ValueError(f"generator {g} has degree {g.degree}, expected {degree}")
        self.degree = degree
        self.generators = tuple(gens)
        self.name = name
        self.order_cap = order_cap
        self._lock = threading.Lock()
        self._elements = None

    # -- enumeration -------------------------------------------------------

    def _ensure(self):
        if self._elements is not None:
            return
        with self._lock:
            if self._elements is not None:
                return
            self._build()

    def _build(self):
        ident = tuple(range(self.degree))
        gens = [g.images for g in self.generators]
        seen = {ident}
        queue = deque([ident])
        while queue:
            x = queue.popleft()
            for g in gens:
                y = tuple(g[j] for j in x)
                if y not in seen:
                    seen.add(y)
                    if len(seen) > self.order_cap:
                        raise CapExceeded("group order", self.order_cap, len(seen))
                    queue.append(y)
        elems = sorted(seen)
        dtype = np.uint8 if self.degree <= 256 else np.dtype(">u2")
        arr = np.array(elems, dtype=dtype).reshape(len(elems), self.degree)
        void = np.dtype((np.void, arr.dtype.itemsize * self.degree))
        keys = np.ascontiguousarray(arr).view(void).ravel()
        n = len(elems)
        mul = np.empty((n, n), dtype=np.int32)
        idx = arr.astype(np.intp)
        chunk = max(1, 2_000_000 // max(1, n * self.degree))
        for a0 in range(0, n, chunk):
            a1 = min(n, a0 + chunk)
            # comp[a, b, x] = elems[a][elems[b][x]]
            comp = arr[np.arange(a0, a1)[:, None, None], idx[None, :, :]]
            comp = np.ascontiguousarray(comp.astype(arr.dtype)).view(void)
            mul[a0:a1] = np.searchsorted(keys, comp.reshape(a1 - a0, n))
        inv = np.empty(n, dtype=np.int32)
        rows, cols = np.nonzero(mul == 0)
        inv[rows] = cols
        self._perms = tuple(Perm(e) for e in elems)
        self._index = {p.images: k for k, p in enumerate(self._perms)}
        self._mul = mul
        self._inv = inv
        self._elements = self._perms

    @property
    def elements(self) -> tuple[Perm, ...]:
        """All elements, sorted lexicographically; the identity comes first."""
        self._ensure()
        return self._elements

    def order(self) -> int:
        return len(self.elements)

    def __len__(self):
        return self.order()

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, p: Perm) -> bool:
        self._ensure()
        return isinstance(p, Perm) and p.images in self._index

    def index(self, p: Perm) -> int:
        """Integer id of ``p``; raises ``ValueError`` if ``p`` is not in the group."""
        self._ensure()
        try:
            return self._index[p.images]
        except KeyError:
            raise ValueError(f"{p} is not an element of {self}") from None

    def element(self, k: int) -> Perm:
        return self.elements[k]

    @property
    def mul_table(self) -> np.ndarray:
        """``mul_table[a, b]`` is the id of ``element(a) * element(b)``."""
        self._ensure()
        return self._mul

    @property
    def inv_table(self) -> np.ndarray:
        self._ensure()
        return self._inv

    def mul(self, a: int, b: int) -> int:
        return int(self.mul_table[a, b])

    def inv(self, a: int) -> int:
        return int(self.inv_table[a])

    # -- structure ---------------------------------------------------------

    @property
    def conj_table(self) -> np.ndarray:
        """``conj_table[g, x]`` is the id of ``g x g^-1``."""
        tab = getattr(self, "_conj", None)
        if tab is None:
            mul, inv = self.mul_table, self.inv_table
            tab = self._conj = np.ascontiguousarray(mul[mul, inv[:, None]])
        return tab

    @property
    def element_orders(self) -> tuple[int, ...]:
        orders = getattr(self, "_orders", None)
        if orders is None:
            orders = self._orders = tuple(p.order() for p in self.elements)
        return orders

    def is_abelian(self) -> bool:
        return all(g * h == h * g for g in self.generators for h in self.generators)

    def conjugacy_classes(self) -> list[tuple[int, ...]]:
        """Classes as sorted tuples of ids, ordered by (element order, least id)."""
        classes = getattr(self, "_classes", None)
        if classes is None:
            conj = self.conj_table
            seen = np.zeros(self.order(), dtype=bool)
            classes = []
            for x in range(self.order()):
                if not seen[x]:
                    cls = np.unique(conj[:, x])
                    seen[cls] = True
                    classes.append(tuple(int(c) for c in cls))
            classes.sort(key=lambda c: (self.element_orders[c[0]], c[0]))
            self._classes = classes
        return classes

    def class_labels(self) -> tuple[str, ...]:
        """GAP-style label per element id, e.g. ``"1a"``, ``"2a"``, ``"3b"``."""
        labels = getattr(self, "_labels", None)
        if labels is None:
            out = [""] * self.order()
            counter: dict[int, int] = {}
            for cls in self.conjugacy_classes():
                o = self.element_orders[cls[0]]
                k = counter.get(o, 0)
                counter[o] = k + 1
                lab = f"{o}{_letters(k)}"
                for x in cls:
                    out[x] = lab
            labels = self._labels = tuple(out)
        return labels

    def subgroup_generated(self, ids: Iterable[int]) -> frozenset[int]:
        mul = self.mul_table
        gens = sorted(set(int(i) for i in ids))
        seen = {0}
        queue = deque([0])
        while queue:
            x = queue.popleft()
            for g in gens:
                y = int(mul[x, g])
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return frozenset(seen)

    def generator_ids(self) -> tuple[int, ...]:
        return tuple(self.index(g) for g in self.generators)

    def to_json(self) -> dict:
        doc = {"degree": self.degree,
               "generators": [g.cycle_string() for g in self.generators]}
        if self.name:
            doc["name"] = self.name
        return doc

    def __eq__(self, other):
        if not isinstance(other, PermGroup):
            return NotImplemented
        return self.degree == other.degree and set(self.elements) == set(other.elements)

    def __hash__(self):
        return hash((self.degree, self.generators))

    def __repr__(self):
        label = self.name or ", ".join(str(g) for g in self.generators)
        return f"PermGroup({label})"


def _letters(k: int) -> str:
    s = ""
    k += 1
    while k:
        k, r = divmod(k - 1, 26)
        s = chr(ord("a") + r) + s
    return s


def center(G: PermGroup) -> list[Perm]:
    """Elements commuting with every generator of ``G``."""
    mul = G.mul_table
    gens = G.generator_ids()
    return [G.element(x) for x in range(G.order())
            if all(mul[x, g] == mul[g, x] for g in gens)]


# -- automorphisms -----------------------------------------------------------


@dataclass(frozen=True, eq=False)
class GroupAutomorphism:
    """An automorphism of ``group`` stored as a map on element ids.

    ``table[x]`` is the id of the image of element ``x``; ``gen_images`` lists
    the images of ``group.generators`` in order.
    """

    group: PermGroup
    table: tuple[int, ...]

    @property
    def gen_images(self) -> tuple[Perm, ...]:
        return tuple(self.group.element(self.table[g]) for g in self.group.generator_ids())

    def __call__(self, x):
        if isinstance(x, Perm):
            return self.group.element(self.table[self.group.index(x)])
        return self.table[x]

    def compose(self, other: "GroupAutomorphism") -> "GroupAutomorphism":
        """``self ∘ other`` (apply ``other`` first)."""
        t = self.table
        return GroupAutomorphism(self.group, tuple(t[y] for y in other.table))

    def inverse(self) -> "GroupAutomorphism":
        inv = [0] * len(self.table)
        for x, y in enumerate(self.table):
            inv[y] = x
        return GroupAutomorphism(self.group, tuple(inv))

    def is_identity(self) -> bool:
        return all(x == y for x, y in enumerate(self.table))

    def __eq__(self, other):
        if not isinstance(other, GroupAutomorphism):
            return NotImplemented
        return self.table == other.table

    def __hash__(self):
        return hash(self.table)

    def __repr__(self):
        imgs = ", ".join(str(p) for p in self.gen_images)
        return f"GroupAutomorphism([{imgs}])"


def inner_automorphism(G: PermGroup, a: Perm) -> GroupAutomorphism:
    """Conjugation ``x -> a x a^-1``."""
    try:
        k = G.index(a)
    except ValueError:
        raise HypothesisViolation(f"{a} is not an element of {G}") from None
    return GroupAutomorphism(G, tuple(int(y) for y in G.conj_table[k]))


@dataclass(frozen=True)
class AutomorphismGroup:
    """All automorphisms of a group, with the inner ones singled out."""

    group: PermGroup
    elements: tuple[GroupAutomorphism, ...]
    inner: tuple[GroupAutomorphism, ...]

    @property
    def out_order(self) -> int:
        return len(self.elements) // len(self.inner)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def tables(self) -> np.ndarray:
        """Automorphisms as rows of an ``(|Aut|, |G|)`` int32 array."""
        return np.array([a.table for a in self.elements], dtype=np.int32)


def _small_generating_set(G: PermGroup) -> list[int]:
    gens: list[int] = []
    span = frozenset([0])
    for g in G.generator_ids():
        if g not in span:
            gens.append(g)
            span = G.subgroup_generated(gens)
    return gens


def automorphism_group(G: PermGroup, check_all_pairs: bool | None = None) -> AutomorphismGroup:
    """Enumerate ``Aut G`` by brute force over generator images.

    Candidate images of each generator range over elements of the same order.
    A candidate is extended along a BFS spanning tree of the Cayley graph,
    then accepted if ``f(x g) = f(x) f(g)`` for every element ``x`` and
    generator ``g`` and the map is bijective.  For groups of order at most
    256 the homomorphism property is additionally checked on all pairs
    (override with ``check_all_pairs``).
    """
    n = G.order()
    cached = getattr(G, "_aut", None)
    if cached is not None:
        return cached
    mul = G.mul_table
    orders = G.element_orders
    gens = _small_generating_set(G)
    if check_all_pairs is None:
        check_all_pairs = n <= 256

    # spanning tree: parent[x] * gens[via[x]] = x
    parent = [-1] * n
    via = [-1] * n
    order_bfs = [0]
    seen = [False] * n
    seen[0] = True
    for x in order_bfs:
        for k, g in enumerate(gens):
            y = int(mul[x, g])
            if not seen[y]:
                seen[y] = True
                parent[y], via[y] = x, k
                order_bfs.append(y)

    by_order: dict[int, list[int]] = {}
    for x in range(n):
        by_order.setdefault(orders[x], []).append(x)
    choices = [by_order[orders[g]] for g in gens]

    mul_l = mul.tolist()
    found = []
    for imgs in _product(choices):
        f = [0] * n
        for x in order_bfs[1:]:
            f[x] = mul_l[f[parent[x]]][imgs[via[x]]]
        if len(set(f)) != n:
            continue
        if not all(f[mul_l[x][g]] == mul_l[f[x]][imgs[k]]
                   for k, g in enumerate(gens) for x in range(n)):
            continue
        if check_all_pairs and not all(f[mul_l[x][y]] == mul_l[f[x]][f[y]]
                                       for x in range(n) for y in range(n)):
            continue
        found.append(GroupAutomorphism(G, tuple(f)))
    found.sort(key=lambda a: a.table)
    conj = G.conj_table
    inner = sorted({tuple(int(v) for v in conj[g]) for g in range(n)})
    result = AutomorphismGroup(G, tuple(found),
                               tuple(GroupAutomorphism(G, t) for t in inner))
    G._aut = result
    return result


def _product(choices):
    if not choices:
        yield ()
        return
    idx = [0] * len(choices)
    while True:
        yield tuple(c[i] for c, i in zip(choices, idx))
        k = len(choices) - 1
        while k >= 0:
            idx[k] += 1
            if idx[k] < len(choices[k]):
                break
            idx[k] = 0
            k -= 1
        if k < 0:
            return


# -- builtin groups and JSON -------------------------------------------------


def cyclic_group(m: int) -> PermGroup:
    if m == 1:
        return PermGroup([], degree=1, name="Z1")
    return PermGroup([Perm(list(range(1, m)) + [0])], name=f"Z{m}")


def symmetric_group(k: int) -> PermGroup:
    if k == 1:
        return PermGroup([], degree=1, name="S1")
    gens = [Perm.parse("(1 2)", k)]
    if k > 2:
        gens.append(Perm.parse("(" + " ".join(map(str, range(1, k + 1))) + ")", k))
    return PermGroup(gens, name=f"S{k}")


def _cycles(*texts, degree):
    return [Perm.parse(t, degree) for t in texts]


def _builtins():
    return {
        "Z2": lambda: cyclic_group(2),
        "Z3": lambda: cyclic_group(3),
        "Z4": lambda: cyclic_group(4),
        "Z5": lambda: cyclic_group(5),
        "Z6": lambda: cyclic_group(6),
        "V4": lambda: PermGroup(_cycles("(1 2)(3 4)", "(1 3)(2 4)", degree=4), name="V4"),
        "S3": lambda: symmetric_group(3),
        "S4": lambda: symmetric_group(4),
        "A4": lambda: PermGroup(_cycles("(1 2 3)", "(2 3 4)", degree=4), name="A4"),
        "D4": lambda: PermGroup(_cycles("(1 2 3 4)", "(1 3)", degree=4), name="D4"),
        # regular representation of the quaternion group on 8 points
        "Q8": lambda: PermGroup(_cycles("(1 2 3 4)(5 6 7 8)", "(1 5 3 7)(2 8 4 6)", degree=8),
                                name="Q8"),
    }


BUILTIN_GROUPS = tuple(_builtins())


def named_group(name: str) -> PermGroup:
    """One of the builtin groups: S3, S4, A4, Z2, Z3, Z4, Z5, Z6, V4, D4, Q8."""
    table = _builtins()
    key = name.strip().upper().replace("/", "").replace("Z2XZ2", "V4")
    if key not in table:
        raise ParseError(f"unknown group {name!r}; builtins are {', '.join(table)}")
    return table[key]()


def group_from_json(doc) -> PermGroup:
    """Accept a builtin name or ``{"degree": d, "generators": [...]}``."""
    if isinstance(doc, str):
        return named_group(doc)
    if not isinstance(doc, dict) or "generators" not in doc:
        raise ParseError("group JSON must be a name or an object with 'generators'")
    degree = doc.get("degree")
    gens = [Perm.parse(t, degree) for t in doc["generators"]]
    if degree is None:
        degree = max((g.degree for g in gens), default=1)
        gens = [Perm.parse(t, degree) for t in doc["generators"]]
    return PermGroup(gens, degree=degree, name=doc.get("name"))


def load_group(source: str) -> PermGroup:
    """A builtin name, a path to a JSON file, or an inline JSON object."""
    src = source.strip()
    if src.startswith("{"):
        try:
            return group_from_json(json.loads(src))
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad group JSON: {exc}") from None
    try:
        return named_group(src)
    except ParseError:
        pass
    try:
        with open(src, encoding="utf-8") as fh:
            doc = json.load(fh)
    except FileNotFoundError:
        raise ParseError(f"{source!r} is neither a builtin group nor a file") from None
    except json.JSONDecodeError as exc:
        raise ParseError(f"bad group JSON in {source}: {exc}") from None
    return group_from_json(doc)
