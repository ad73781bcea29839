"""Time the compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat 3] [--json]

Each workload runs on both backends with identical inputs; the results are
compared for equality before any timing is reported.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from hurwitzkit import named_group, parse_entries, validate
from hurwitzkit.kernels import available_backends, get_backend, tables_for
from hurwitzkit.orbits import pure_movers, sigma_movers


def _maps(impl, G, tag):
    if tag == "exact":
        return None
    return impl.prepare_maps(G.conj_table)


def workloads():
    S4 = named_group("S4")
    S3 = named_group("S3")
    d5 = validate(parse_entries("(3 4),(3 4),(1 2),(1 2 3 4),(2 4 3)", S4), S4)
    d6 = validate(parse_entries("(1 2),(2 3),(2 3),(1 2),(1 3),(1 3)", S3), S3)

    def orbit(d, movers, tag):
        letters = [m.word.letters for m in movers] + [m.word.inverse().letters for m in movers]

        def run(impl):
            res = impl.orbit_bfs(tables_for(d.group, impl.NAME), d.ids, letters,
                                 _maps(impl, d.group, tag), 10**7)
            return len(res[0])
        return run

    def enum(G, n):
        def run(impl):
            return len(impl.enumerate_data(tables_for(G, impl.NAME), n))
        return run

    def canon(G, reps):
        tups = [tuple((k * 7 + j) % G.order() for j in range(6)) for k in range(reps)]

        def run(impl):
            maps = _maps(impl, G, "inn")
            return sum(sum(impl.canonical(t, maps)) for t in tups)
        return run

    def apply(d, reps):
        word = tuple(range(1, d.n)) * 4

        def run(impl):
            tab = tables_for(d.group, impl.NAME)
            t = d.ids
            for _ in range(reps):
                t = impl.apply_letters(tab, t, word)
            return t
        return run

    return [
        ("orbit S4 n=5 full exact", orbit(d5, sigma_movers(5), "exact")),
        ("orbit S4 n=5 pure inn", orbit(d5, pure_movers(5), "inn")),
        ("orbit S3 n=6 full exact", orbit(d6, sigma_movers(6), "exact")),
        ("enumerate S4 n=4", enum(S4, 4)),
        ("enumerate S3 n=6", enum(S3, 6)),
        ("canonical S4 x2000", canon(S4, 2000)),
        ("apply_letters S4 x20000", apply(d5, 20000)),
    ]


def best_of(fn, impl, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(impl)
        times.append(time.perf_counter() - t0)
    return min(times), out


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args(argv)

    backends = available_backends()
    if "cython" not in backends:
        print("compiled kernels not built; run `python3 setup.py build_ext --inplace`", file=sys.stderr)
    impls = {name: get_backend(name) for name in backends}

    rows = []
    for label, fn in workloads():
        row = {"workload": label}
        results = {}
        for name, impl in impls.items():
            row[name], results[name] = best_of(fn, impl, args.repeat)
        if len({repr(r) for r in results.values()}) != 1:
            print(f"backends disagree on {label}: {results}", file=sys.stderr)
            return 1
        if "python" in row and "cython" in row:
            row["speedup"] = row["python"] / row["cython"]
        rows.append(row)

    if args.json:
        print(json.dumps(rows, indent=2))
        return 0
    print(f"{'workload':<28} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for r in rows:
        py = f"{r['python']:.4f}" if "python" in r else "-"
        cy = f"{r['cython']:.4f}" if "cython" in r else "-"
        sp = f"{r['speedup']:.1f}x" if "speedup" in r else "-"
        print(f"{r['workload']:<28} {py:>10} {cy:>10} {sp:>8}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
