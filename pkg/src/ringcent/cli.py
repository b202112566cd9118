"""Command-line front end.

Verbs: inspect, gallery, enumerate, search, verify, product.  Exit code is 0
exactly when no violations or errors occurred.  RINGCENT_TIME_BUDGET_SECS
bounds enumeration; RINGCENT_BACKEND picks the numba or numpy kernels.
"""

import argparse
import json
import sys
from pathlib import Path

from . import gallery
from .centralizers import analyze
from .enumeration import enumerate_rings, search_n_centralizer
from .errors import RingError
from .rings import FiniteRing, load_ring
from .suites import SUITES, load_universe, run_suite


def _resolve_ring(token: str, param=None) -> FiniteRing:
    """A ring from "gallery:NAME", "gallery:NAME:P", or a spec file path."""
    if token.startswith("gallery:"):
        parts = token.split(":")
        name = parts[1]
        p = int(parts[2]) if len(parts) > 2 else param
        return gallery.by_name(name, p)
    return load_ring(token)


def _render_report(report) -> str:
    lines = [
        f"ring: {report.ring_label}",
        f"order: {report.order}",
        f"commutative: {'yes' if report.is_commutative else 'no'}",
        f"additive group: {report.additive_type.render()}",
        f"|Z(R)|: {len(report.center)}   Z(R) = {list(report.center.members)}",
        f"|Cent(R)|: {report.cent_count}",
        f"centralizer sizes: {[len(c) for c in report.centralizers]}",
        f"d(R): {report.degree}",
        f"R/Z(R): {report.quotient_type.render()}",
    ]
    return "\n".join(lines)


def _cmd_inspect(args) -> int:
    ring = _resolve_ring(args.ring, args.p)
    report = analyze(ring)
    if args.json:
        print(json.dumps(report.to_json(), indent=2, sort_keys=True))
    else:
        print(_render_report(report))
    return 0


def _cmd_gallery(args) -> int:
    ring = gallery.by_name(args.name, args.p)
    if args.emit:
        ring.spec().save(args.emit)
        print(f"wrote {args.emit}")
    else:
        print(_render_report(analyze(ring)))
    return 0


def _cmd_enumerate(args) -> int:
    catalog = enumerate_rings(
        args.order, up_to_iso=args.up_to_iso, out_dir=args.out,
        resume=args.resume,
    )
    kind = "isomorphism classes" if catalog.deduped else "raw structures"
    count = catalog.class_count if catalog.deduped else catalog.raw_count
    print(f"order {catalog.order}: {count} {kind} "
          f"({catalog.raw_count} raw structures)")
    for factors, raw in sorted(catalog.per_type_raw.items()):
        name = " x ".join(f"Z_{d}" for d in factors) or "trivial"
        print(f"  additive {name}: {raw} raw")
    if args.out:
        print(f"catalog written to {args.out}")
    return 0


def _cmd_search(args) -> int:
    hits = search_n_centralizer(args.cent, args.max_order)
    if not hits:
        print(f"no ring of order <= {args.max_order} has exactly "
              f"{args.cent} centralizers")
        return 0
    print(f"{len(hits)} ring(s) with |Cent(R)| = {args.cent}, "
          f"order <= {args.max_order}:")
    for ring in hits:
        print(f"  {ring.label} (order {ring.order})")
    return 0


def _cmd_verify(args) -> int:
    rings, name = load_universe(args.universe, max_order=args.max_order)
    suite_ids = sorted(SUITES) if args.suite == "all" else [args.suite]
    results = [run_suite(sid, rings, name) for sid in suite_ids]
    bad = 0
    docs = []
    for res in results:
        status = "ok" if res.passed else f"{len(res.violations)} VIOLATIONS"
        if not args.json:
            elapsed = "" if args.no_timing else f"  [{res.elapsed_secs:.2f}s]"
            print(f"{res.suite_id:16s} checked {res.checked:5d}  {status}{elapsed}")
        docs.append(res.to_json(with_timing=not args.no_timing))
        if not res.passed:
            bad += 1
            dump_dir = Path(args.dump_dir)
            dump_dir.mkdir(parents=True, exist_ok=True)
            for viol in res.violations:
                path = dump_dir / f"{res.suite_id}_{viol.ring_label}.json"
                with open(path, "w") as fh:
                    json.dump(viol.spec, fh, indent=1, sort_keys=True)
    if args.json:
        print(json.dumps(docs, indent=2, sort_keys=True))
    elif bad:
        print(f"{bad} suite(s) reported violations; specs dumped to "
              f"{args.dump_dir}/")
    return 1 if bad else 0


def _cmd_product(args) -> int:
    a = _resolve_ring(args.spec1)
    b = _resolve_ring(args.spec2)
    prod = gallery.direct_product(a, b)
    if args.emit:
        prod.spec().save(args.emit)
        print(f"wrote {args.emit}")
    else:
        print(_render_report(analyze(prod)))
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="ringcent",
        description="Centralizer structure and enumeration of small finite rings.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("inspect", help="full centralizer report for one ring")
    p.add_argument("ring", help="spec file or gallery:NAME[:P]")
    p.add_argument("--p", type=int, default=None, help="gallery parameter")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_inspect)

    p = sub.add_parser("gallery", help="build a named construction")
    p.add_argument("name", choices=sorted(gallery.CONSTRUCTORS))
    p.add_argument("--p", type=int, default=None, help="constructor parameter")
    p.add_argument("--emit", metavar="FILE", help="write the RingSpec here")
    p.set_defaults(func=_cmd_gallery)

    p = sub.add_parser("enumerate", help="generate all rings of one order")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--up-to-iso", action="store_true", default=False)
    p.add_argument("--out", metavar="DIR", help="catalog output directory")
    p.add_argument("--resume", action="store_true",
                   help="skip partitions already recorded in the manifest")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("search", help="find n-centralizer rings")
    p.add_argument("--cent", type=int, required=True)
    p.add_argument("--max-order", type=int, default=13)
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("verify", help="run theorem suites over a universe")
    p.add_argument("--suite", default="all",
                   help="suite id or 'all' (%s)" % ", ".join(sorted(SUITES)))
    p.add_argument("--universe", default="gallery",
                   help="gallery | catalog[:N] | catalog dir | ring file")
    p.add_argument("--max-order", type=int, default=13,
                   help="catalog upper order for --universe catalog")
    p.add_argument("--json", action="store_true")
    p.add_argument("--no-timing", action="store_true",
                   help="zero elapsed fields (byte-stable output)")
    p.add_argument("--dump-dir", default="violations",
                   help="where offending RingSpecs are dumped")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("product", help="direct product of two rings")
    p.add_argument("spec1", help="spec file or gallery:NAME[:P]")
    p.add_argument("spec2", help="spec file or gallery:NAME[:P]")
    p.add_argument("--emit", metavar="FILE")
    p.set_defaults(func=_cmd_product)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except RingError as exc:
        print(f"error: {exc.__class__.__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
