"""Enumerate all n-data of a group and sort them into topological types.

Two data have the same topological type when they are related by Hurwitz
moves ``s_i^{±1}`` and an automorphism of ``G``.  Inner automorphisms of the
free group on the branch loops add nothing: they act on data by simultaneous
conjugation, which ``Aut G`` already contains.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import kernels
from .datum import (BranchSignature, Datum, aut_maps, branch_signature, genus,
                    inn_maps)
from .errors import CapExceeded
from .orbits import DEFAULT_ORBIT_CAP, enumerate_orbit, pure_movers, sigma_movers
from .perm import PermGroup, automorphism_group

DEFAULT_ENUM_CAP = 5_000_000


def enumerate_data(G: PermGroup, n: int, cap: int = DEFAULT_ENUM_CAP) -> list[Datum]:
    """All valid n-data of ``G``, in lexicographic order.

    Candidates ``(t_1, ..., t_{n-1})`` run over ``G^{n-1}`` with
    ``t_n = (t_1 ... t_{n-1})^-1``; ``cap`` bounds ``|G|^{n-1}``.
    """
    if n < 3:
        raise ValueError("n-data need n >= 3")
    work = G.order() ** (n - 1)
    if work > cap:
        raise CapExceeded("enumeration size |G|^(n-1)", cap, work)
    tuples = kernels.impl.enumerate_data(kernels.tables_for(G), n)
    return [Datum(G, t) for t in tuples]


def type_signature(d: Datum) -> BranchSignature:
    """Least branch signature over the ``Aut G``-images of ``d``.

    Outer automorphisms may permute conjugacy classes (e.g. the two classes of
    3-cycles in A4), so the plain signature is not constant on a type.
    """
    best = None
    for eta in automorphism_group(d.group):
        sig = branch_signature(d.with_ids(eta.table[x] for x in d.ids))
        if best is None or sig < best:
            best = sig
    return best


@dataclass(frozen=True)
class TypeReport:
    representative: Datum
    size: int  # number of data of this type
    aut_classes: int  # number of Aut G-classes of data in the type
    genus: int
    signature: BranchSignature
    pure_suborbits: dict = field(default_factory=dict, compare=False)

    def sort_key(self):
        return (self.genus, self.signature, self.representative.ids)

    def to_json(self) -> dict:
        doc = {
            "representative": self.representative.cycle_strings(),
            "size": self.size,
            "aut_classes": self.aut_classes,
            "genus": self.genus,
            "signature": {"classes": [[lab, c] for lab, c in self.signature.classes],
                          "orders": list(self.signature.orders)},
        }
        if self.pure_suborbits:
            doc["pure_suborbits"] = {k: self.pure_suborbits[k] for k in ("exact", "inn", "aut")}
        return doc


def _count_pure_orbits(points: set, G: PermGroup, n: int, tag: str, cap: int) -> int:
    movers = pure_movers(n)
    left = set(points)
    count = 0
    while left:
        k = min(left)
        orb = enumerate_orbit(Datum(G, k), movers, tag, cap)
        left.difference_update(orb.keys)
        count += 1
    return count


def _report(orbit, suborbits: bool, cap: int) -> TypeReport:
    G = orbit.start.group
    n = orbit.start.n
    amaps = aut_maps(G)
    tables = automorphism_group(G).tables()
    data = set()
    for key in orbit.keys:
        data.update(tuple(int(row[x]) for x in key) for row in tables)
    rep = orbit.representative
    sub = {}
    if suborbits:
        impl = kernels.impl
        imaps = inn_maps(G)
        sub["exact"] = _count_pure_orbits(data, G, n, "exact", cap)
        sub["inn"] = _count_pure_orbits({impl.canonical(t, imaps) for t in data}, G, n, "inn", cap)
        sub["aut"] = _count_pure_orbits({impl.canonical(t, amaps) for t in data}, G, n, "aut", cap)
    return TypeReport(rep, len(data), orbit.size, genus(rep), type_signature(rep), sub)


def type_of(d: Datum, suborbits: bool = True, cap: int = DEFAULT_ORBIT_CAP) -> TypeReport:
    """Report for the topological type of ``d``."""
    orbit = enumerate_orbit(d, sigma_movers(d.n), "aut", cap)
    return _report(orbit, suborbits, cap)


def classify_types(G: PermGroup, n: int, suborbits: bool = True,
                   enum_cap: int = DEFAULT_ENUM_CAP,
                   orbit_cap: int = DEFAULT_ORBIT_CAP) -> list[TypeReport]:
    """One report per topological type of n-data of ``G``, sorted by
    ``(genus, signature, representative)``."""
    data = enumerate_data(G, n, enum_cap)
    impl = kernels.impl
    amaps = aut_maps(G)
    orders = G.element_orders
    keys = {impl.canonical(d.ids, amaps) for d in data}
    # bucket by the multiset of entry orders, which every move and automorphism preserves
    buckets: dict[tuple, set] = {}
    for k in keys:
        buckets.setdefault(tuple(sorted(orders[x] for x in k)), set()).add(k)
    movers = sigma_movers(n)
    reports = []
    for sig in sorted(buckets):
        left = buckets[sig]
        while left:
            k = min(left)
            orbit = enumerate_orbit(Datum(G, k), movers, "aut", orbit_cap)
            left.difference_update(orbit.keys)
            reports.append(_report(orbit, suborbits, orbit_cap))
    reports.sort(key=TypeReport.sort_key)
    return reports
