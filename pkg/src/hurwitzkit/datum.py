"""Nielsen tuples (n-data) for a finite permutation group.

A datum over ``G`` is a tuple ``(t_1, ..., t_n)``, ``n >= 3``, of non-identity
elements with ``t_1 t_2 ... t_n = 1`` that together generate ``G``.  Entries
are stored as element ids of ``G`` so tuples hash and compare cheaply, and the
id order coincides with the lexicographic order of permutations.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import kernels
from .errors import InvalidDatum, ParseError
from .perm import AutomorphismGroup, GroupAutomorphism, Perm, PermGroup, automorphism_group

MIN_BRANCH_POINTS = 3


@dataclass(frozen=True, eq=False)
class Datum:
    group: PermGroup
    ids: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.ids)

    @property
    def entries(self) -> tuple[Perm, ...]:
        return tuple(self.group.element(k) for k in self.ids)

    def with_ids(self, ids: Sequence[int]) -> "Datum":
        return Datum(self.group, tuple(ids))

    def cycle_strings(self) -> list[str]:
        return [p.cycle_string() for p in self.entries]

    def to_json(self) -> dict:
        grp = self.group.name if self.group.name else self.group.to_json()
        return {"group": grp, "entries": self.cycle_strings()}

    def __eq__(self, other):
        if not isinstance(other, Datum):
            return NotImplemented
        return self.ids == other.ids and (self.group is other.group or self.group == other.group)

    def __lt__(self, other: "Datum") -> bool:
        return self.ids < other.ids

    def __hash__(self):
        return hash(self.ids)

    def __repr__(self):
        return f"Datum({', '.join(self.cycle_strings())})"


def validate(entries: Iterable, G: PermGroup) -> Datum:
    """Check the n-datum conditions and return a :class:`Datum`.

    ``entries`` may be :class:`Perm` objects, cycle strings or element ids.
    Raises :class:`InvalidDatum` naming the first violated condition.
    """
    entries = list(entries)
    if len(entries) < MIN_BRANCH_POINTS:
        raise InvalidDatum("length", f"need at least {MIN_BRANCH_POINTS} entries, got {len(entries)}")
    ids = []
    for e in entries:
        if isinstance(e, str):
            e = Perm.parse(e, G.degree)
        if isinstance(e, Perm):
            if e.degree != G.degree or e not in G:
                raise InvalidDatum("membership", f"{e} is not an element of {G}")
            ids.append(G.index(e))
        else:
            k = int(e)
            if not 0 <= k < G.order():
                raise InvalidDatum("membership", f"element id {k} out of range")
            ids.append(k)
    mul = G.mul_table
    prod = 0
    for k in ids:
        prod = int(mul[prod, k])
    if prod != 0:
        raise InvalidDatum("product", f"product of entries is {G.element(prod)}, not the identity")
    for pos, k in enumerate(ids, 1):
        if k == 0:
            raise InvalidDatum("nontrivial", f"entry {pos} is the identity")
    if not kernels.impl.generates(kernels.tables_for(G), ids):
        sub = G.subgroup_generated(ids)
        raise InvalidDatum("generation",
                           f"entries generate a proper subgroup of order {len(sub)} < {G.order()}")
    return Datum(G, tuple(ids))


def is_valid(entries, G: PermGroup) -> bool:
    try:
        validate(entries, G)
    except InvalidDatum:
        return False
    return True


_ADDITIVE_RE = re.compile(r"^\s*(-?\d+)\s*(?:mod\s*(\d+))?\s*$", re.IGNORECASE)


def parse_entries(text: str, G: PermGroup) -> list[Perm]:
    """Parse a comma-separated list of cycle-notation entries.

    For cyclic groups with a single generator, entries may also be written
    additively as ``k`` or ``k mod m``, meaning the ``k``-th power of the
    generator.
    """
    out = []
    for tok in _split_entries(text):
        m = _ADDITIVE_RE.match(tok)
        if m and "(" not in tok:
            if len(G.generators) != 1:
                raise ParseError(f"additive entry {tok!r} needs a cyclic group with one generator")
            k = int(m.group(1))
            gen = G.generators[0]
            if m.group(2) is not None and int(m.group(2)) != gen.order():
                raise ParseError(f"{tok!r}: group has order {gen.order()}")
            out.append(gen ** (k % gen.order()))
        else:
            out.append(Perm.parse(tok, G.degree))
    return out


def _split_entries(text: str) -> list[str]:
    # commas inside parentheses separate points, not entries
    toks, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            toks.append("".join(cur).strip())
            cur = []
        else:
            cur.append(ch)
    toks.append("".join(cur).strip())
    if any(not t for t in toks):
        raise ParseError(f"empty entry in {text!r}")
    return toks


def datum_from_json(doc, group: PermGroup | None = None) -> Datum:
    from .perm import group_from_json

    if not isinstance(doc, dict) or "entries" not in doc:
        raise ParseError("datum JSON must be an object with 'entries'")
    G = group if group is not None else group_from_json(doc.get("group"))
    entries = doc["entries"]
    if isinstance(entries, str):
        entries = parse_entries(entries, G)
    else:
        entries = parse_entries(",".join(str(e) for e in entries), G)
    return validate(entries, G)


# -- invariants --------------------------------------------------------------


def genus(d: Datum) -> int:
    """Genus of the G-cover of the sphere branched with monodromy ``d``.

    Riemann-Hurwitz: ``2g - 2 = -2|G| + sum_i (|G|/o_i)(o_i - 1)`` with
    ``o_i`` the order of the i-th entry.
    """
    order = d.group.order()
    orders = d.group.element_orders
    twice = -2 * order + sum(order // orders[k] * (orders[k] - 1) for k in d.ids)
    return (twice + 2) // 2


@dataclass(frozen=True, order=True)
class BranchSignature:
    """Multisets of conjugacy-class labels and element orders of the entries."""

    classes: tuple[tuple[str, int], ...]
    orders: tuple[int, ...]

    def __str__(self):
        return " ".join(f"{lab}^{c}" if c > 1 else lab for lab, c in self.classes)


def branch_signature(d: Datum) -> BranchSignature:
    labels = d.group.class_labels()
    orders = d.group.element_orders
    cls = Counter(labels[k] for k in d.ids)
    return BranchSignature(
        classes=tuple(sorted(cls.items(), key=lambda kv: (int(re.match(r"\d+", kv[0]).group()), kv[0]))),
        orders=tuple(sorted(orders[k] for k in d.ids)),
    )


# -- canonical forms ---------------------------------------------------------


def inn_maps(G: PermGroup):
    """Conjugation maps of ``G`` in the selected kernel's layout."""
    cache = G.__dict__.setdefault("_kernel_maps", {})
    key = ("inn", kernels.BACKEND)
    if key not in cache:
        cache[key] = kernels.impl.prepare_maps(G.conj_table)
    return cache[key]


def aut_maps(G: PermGroup, auts: AutomorphismGroup | Sequence[GroupAutomorphism] | None = None):
    cache = G.__dict__.setdefault("_kernel_maps", {})
    if auts is None:
        key = ("aut", kernels.BACKEND)
        if key not in cache:
            cache[key] = kernels.impl.prepare_maps(automorphism_group(G).tables())
        return cache[key]
    return kernels.impl.prepare_maps([a.table for a in auts])


def inn_canonical(d: Datum) -> Datum:
    """Least tuple among all simultaneous conjugates of ``d``."""
    return d.with_ids(kernels.impl.canonical(d.ids, inn_maps(d.group)))


def aut_canonical(d: Datum, auts=None) -> Datum:
    """Least tuple among the images of ``d`` under ``auts`` (default: all of Aut G)."""
    return d.with_ids(kernels.impl.canonical(d.ids, aut_maps(d.group, auts)))


def conjugate(d: Datum, g: Perm | int) -> Datum:
    """Simultaneous conjugate ``(g t_1 g^-1, ..., g t_n g^-1)``."""
    G = d.group
    k = g if isinstance(g, int) else G.index(g)
    row = G.conj_table[k]
    return d.with_ids(int(row[x]) for x in d.ids)


def apply_automorphism(d: Datum, eta: GroupAutomorphism) -> Datum:
    return d.with_ids(eta.table[x] for x in d.ids)


def product(d: Datum) -> Perm:
    mul = d.group.mul_table
    prod = 0
    for k in d.ids:
        prod = int(mul[prod, k])
    return d.group.element(prod)
