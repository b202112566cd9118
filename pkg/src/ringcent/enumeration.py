"""Exhaustive generation of small rings up to isomorphism.

The search space for order n is, per abelian group of that order, every
assignment of generator products compatible with the generator orders;
associativity is enforced on generators (bilinearity gives the rest, and
distributivity is automatic).  The space is partitioned by the value of
g1*g1 and partitions are merged in a fixed order, so results are
deterministic however the work is scheduled.
"""

import json
import math
import time
from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd
from pathlib import Path
from typing import Optional

import numpy as np

from . import backend, groups, kernels
from .abelian import classify_additive
from .centralizers import cent_set, commutativity_degree
from .errors import PartialUniverse, TooLarge
from .rings import FiniteRing, RingSpec, validate

MAX_ENUM_ORDER = 16
MAX_CANON_ORDER = 16


# ---------------------------------------------------------------------------
# element fingerprints and additive bases


def _ring_cache(R: FiniteRing) -> dict:
    cache = getattr(R, "_cache", None)
    if cache is None:
        cache = {}
        R._cache = cache
    return cache


def element_fingerprints(R: FiniteRing) -> list[tuple[int, int, int]]:
    """Per-element isomorphism invariant: additive order, centralizer size,
    additive order of the square."""
    cache = _ring_cache(R)
    if "fp" not in cache:
        orders = R.additive_orders()
        csize = (R.mul == R.mul.T).sum(axis=1)
        squares = R.mul[np.arange(R.order), np.arange(R.order)]
        cache["fp"] = [
            (int(orders[x]), int(csize[x]), int(orders[squares[x]]))
            for x in range(R.order)
        ]
    return cache["fp"]


def ring_fingerprint(R: FiniteRing) -> tuple:
    """Cheap ring-level isomorphism invariant used to bucket candidates."""
    cache = _ring_cache(R)
    if "ring_fp" not in cache:
        cs = cent_set(R)
        cache["ring_fp"] = (
            R.order,
            classify_additive(R).invariant_factors,
            bool(R.is_commutative),
            len(cs),
            tuple(sorted(len(c) for c in cs)),
            commutativity_degree(R),
            tuple(sorted(element_fingerprints(R))),
        )
    return cache["ring_fp"]


def _cyclic_steps(R: FiniteRing, b: int) -> list[int]:
    """[0, b, 2b, ...] until the cycle closes."""
    out = [0]
    x = b
    while x != 0:
        out.append(x)
        x = int(R.add[x, b])
    return out


def additive_basis(R: FiniteRing) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Elements (b1..bk) with ord(bi) = di (the ascending invariant factors)
    whose cyclic subgroups sum directly to all of (R, +).

    Found largest-order-first with backtracking; the returned tuple is
    reversed into ascending order to match the invariant factors.
    """
    factors = classify_additive(R).invariant_factors
    if not factors:
        return (), ()
    desc = tuple(reversed(factors))
    orders = R.additive_orders()
    basis: list[int] = []
    spans: list[set[int]] = [{0}]

    def extend(span: set[int], b: int) -> set[int]:
        out = set(span)
        for m in _cyclic_steps(R, b)[1:]:
            out.update(int(R.add[s, m]) for s in span)
        return out

    def rec(i: int) -> bool:
        if i == len(desc):
            return True
        target = math.prod(desc[: i + 1])
        for b in range(1, R.order):
            if orders[b] != desc[i] or b in spans[-1]:
                continue
            bigger = extend(spans[-1], b)
            if len(bigger) == target:
                basis.append(b)
                spans.append(bigger)
                if rec(i + 1):
                    return True
                basis.pop()
                spans.pop()
        return False

    if not rec(0):
        raise AssertionError(f"no additive basis found for {R.label}")
    return tuple(reversed(basis)), factors


def _coords_map(R: FiniteRing, basis: tuple[int, ...],
                factors: tuple[int, ...]) -> np.ndarray:
    """from_coords[std_index] = ring element, under the mixed-radix encoding."""
    n = R.order
    out = np.zeros(n, dtype=np.int64)
    cv = groups.coeff_vectors(factors)
    cyc = [_cyclic_steps(R, b) for b in basis]
    for idx in range(n):
        x = 0
        for i in range(len(basis)):
            x = int(R.add[x, cyc[i][cv[idx, i]]])
        out[idx] = x
    assert len(set(out.tolist())) == n, "basis span is not direct"
    return out


def basis_iso_to_std(R: FiniteRing) -> tuple[np.ndarray, tuple[int, ...]]:
    """One additive isomorphism R -> standard group, as the array
    psi[ring element] = standard index."""
    basis, factors = additive_basis(R)
    n = R.order
    psi = np.zeros(n, dtype=np.int64)
    if factors:
        from_coords = _coords_map(R, basis, factors)
        psi[from_coords] = np.arange(n)
    return psi, factors


# ---------------------------------------------------------------------------
# ring isomorphism


def isomorphic(R1: FiniteRing, R2: FiniteRing, witness: bool = False):
    """Ring isomorphism test: additive isomorphism preserving multiplication.

    Backtracks over images of an additive basis of R1, pruned by element
    fingerprints, by direct-sum feasibility of the image span, and by partial
    multiplicative consistency.  With witness=True returns the mapping array
    (or None) instead of a bool.
    """
    def result(phi):
        return phi if witness else phi is not None

    if R1.order != R2.order:
        return result(None)
    if ring_fingerprint(R1) != ring_fingerprint(R2):
        return result(None)
    n = R1.order
    if n == 1:
        return result(np.zeros(1, dtype=np.int64))
    basis, factors = additive_basis(R1)
    fp1 = element_fingerprints(R1)
    fp2 = element_fingerprints(R2)
    orders2 = R2.additive_orders()
    k = len(basis)
    cands = [
        [y for y in range(1, n)
         if orders2[y] == factors[i] and fp2[y] == fp1[basis[i]]]
        for i in range(k)
    ]
    cyc1 = [_cyclic_steps(R1, b) for b in basis]

    images: list[int] = []
    phi_partial: dict[int, int] = {0: 0}
    image_set: set[int] = {0}

    def place(i: int, f: int) -> Optional[dict]:
        steps2 = _cyclic_steps(R2, f)
        if len(steps2) != factors[i]:
            return None
        added: dict[int, int] = {}
        for m in range(1, factors[i]):
            b_m, f_m = cyc1[i][m], steps2[m]
            for s, im in phi_partial.items():
                dst = int(R2.add[im, f_m])
                if dst in image_set or dst in added.values():
                    return None  # image span is not a direct extension
                added[int(R1.add[s, b_m])] = dst
        return added

    def consistent(i: int) -> bool:
        for a in range(i + 1):
            for b in range(i + 1):
                p1 = int(R1.mul[basis[a], basis[b]])
                if p1 in phi_partial:
                    if phi_partial[p1] != int(R2.mul[images[a], images[b]]):
                        return False
        return True

    def rec(i: int):
        if i == k:
            phi = np.zeros(n, dtype=np.int64)
            for s, im in phi_partial.items():
                phi[s] = im
            ok = np.array_equal(phi[R1.add], R2.add[phi[:, None], phi[None, :]]) \
                and np.array_equal(phi[R1.mul], R2.mul[phi[:, None], phi[None, :]])
            return phi if ok else None
        for f in cands[i]:
            if f in image_set:
                continue
            added = place(i, f)
            if added is None:
                continue
            images.append(f)
            phi_partial.update(added)
            image_set.update(added.values())
            if consistent(i):
                found = rec(i + 1)
                if found is not None:
                    return found
            images.pop()
            for src, dst in added.items():
                del phi_partial[src]
                image_set.discard(dst)
        return None

    return result(rec(0))


# ---------------------------------------------------------------------------
# canonical form: lexicographically minimal (add, mul) over relabelings
#
# Lex order puts the whole addition table before the multiplication table, so
# the minimum is found in two stages: the lex-min Cayley table of the
# additive group (a per-type constant), then the minimal transported
# multiplication over the additive isomorphisms onto that table.


@lru_cache(maxsize=None)
def _min_group_table(factors: tuple[int, ...]) -> tuple[np.ndarray, np.ndarray]:
    """Lex-min Cayley table of the group over relabelings fixing 0, plus one
    relabeling sigma: standard index -> minimal-table label achieving it.

    Labels are assigned in order of first appearance while scanning the new
    table row-major.  At each position the entry is either forced (the
    operand sum is already labeled) or is the smallest free label: any larger
    label would lose at that very position.  Genuine branching happens only
    when a row-1 column operand is still unassigned; branches are explored in
    ascending entry order under branch-and-bound against the incumbent.
    """
    Tm = groups.group_add_table(factors)
    n = Tm.shape[0]
    if n == 1:
        return Tm.copy(), np.zeros(1, dtype=np.int64)
    T = Tm.tolist()
    positions = [(i, j) for i in range(1, n) for j in range(1, n)]
    last = len(positions)
    pi = [-1] * n   # label -> old element
    rho = [-1] * n  # old element -> label
    pi[0] = rho[0] = 0
    seq = [0] * last
    state: dict = {"best": None, "best_rho": None}

    def least_free(skip: int = -1) -> int:
        for v in range(1, n):
            if pi[v] < 0 and v != skip:
                return v
        return -1

    def run(p, tied):
        best = state["best"]
        undo = []
        # fast-forward through positions whose operands are assigned
        while p < last:
            i, j = positions[p]
            if pi[j] < 0:
                break
            s = T[pi[i]][pi[j]]
            lab = rho[s]
            if lab < 0:
                lab = least_free()
                pi[lab], rho[s] = s, lab
                undo.append((lab, s))
            if tied and best is not None:
                w = best[p]
                if lab > w:
                    for v, t in reversed(undo):
                        pi[v], rho[t] = -1, -1
                    return
                if lab < w:
                    tied = False
            seq[p] = lab
            p += 1
        if p == last:
            if best is None or seq < best:
                state["best"] = list(seq)
                state["best_rho"] = list(rho)
        else:
            i, j = positions[p]
            fresh = least_free(skip=j)
            scored = []
            for x in range(1, n):
                if rho[x] >= 0:
                    continue
                pi[j], rho[x] = x, j
                lab = rho[T[pi[i]][x]]
                pi[j], rho[x] = -1, -1
                scored.append((lab if lab >= 0 else fresh, x))
            scored.sort()
            for entry, x in scored:
                if tied and state["best"] is not None and entry > state["best"][p]:
                    break  # scored is ascending: the rest only get worse
                pi[j], rho[x] = x, j
                run(p, tied)
                pi[j], rho[x] = -1, -1
        for v, t in reversed(undo):
            pi[v], rho[t] = -1, -1

    run(0, True)
    sigma = np.array(state["best_rho"], dtype=np.int64)
    inv = np.empty(n, dtype=np.int64)
    inv[sigma] = np.arange(n)
    table = sigma[Tm[np.ix_(inv, inv)]]
    return table, sigma


@lru_cache(maxsize=None)
def _min_group_automorphisms(factors: tuple[int, ...]) -> np.ndarray:
    """(count, n) array of every automorphism of the minimal-table group."""
    table, _ = _min_group_table(factors)
    n = table.shape[0]
    if not factors:
        return np.zeros((1, 1), dtype=np.int64)
    G = FiniteRing(table, np.zeros_like(table), "G_min")
    orders = G.additive_orders()
    cv = groups.coeff_vectors(factors)
    k = len(factors)
    rows: list[np.ndarray] = []
    basis: list[int] = []
    spans: list[set[int]] = [{0}]

    def rec(i: int):
        if i == k:
            cyc = [_cyclic_steps(G, b) for b in basis]
            from_coords = np.zeros(n, dtype=np.int64)
            for idx in range(n):
                x = 0
                for t in range(k):
                    x = int(G.add[x, cyc[t][cv[idx, t]]])
                from_coords[idx] = x
            rows.append(from_coords)
            return
        for b in range(1, n):
            if orders[b] != factors[i] or b in spans[-1]:
                continue
            bigger = set(spans[-1])
            for m in _cyclic_steps(G, b)[1:]:
                bigger.update(int(G.add[s, m]) for s in spans[-1])
            if len(bigger) != len(spans[-1]) * factors[i]:
                continue
            basis.append(b)
            spans.append(bigger)
            rec(i + 1)
            basis.pop()
            spans.pop()

    rec(0)
    # rows[r] is an iso std -> G_min; automorphisms are rows[r] o rows[0]^-1
    base = rows[0]
    inv0 = np.empty(n, dtype=np.int64)
    inv0[base] = np.arange(n)
    return np.stack([r[inv0] for r in rows])


def canonical_form(R: FiniteRing) -> FiniteRing:
    """Lexicographically minimal (add table, mul table) over all relabelings
    fixing index 0.  Isomorphic rings map to identical canonical forms."""
    if R.order > MAX_CANON_ORDER:
        raise TooLarge(f"canonical_form supports order <= {MAX_CANON_ORDER}")
    n = R.order
    psi, factors = basis_iso_to_std(R)
    min_add, sigma = _min_group_table(factors)
    map0 = sigma[psi]  # one additive iso R -> minimal-table group
    inv0 = np.empty(n, dtype=np.int64)
    inv0[map0] = np.arange(n)
    M0 = map0[R.mul[np.ix_(inv0, inv0)]]
    auts = _min_group_automorphisms(factors)
    a = auts.shape[0]
    inv = np.empty_like(auts)
    rows = np.arange(a)[:, None]
    inv[rows, auts] = np.arange(n)[None, :]
    gather = M0[inv[:, :, None], inv[:, None, :]]
    transported = auts[rows[:, None], gather]
    flat = transported.reshape(a, n * n)
    order = np.lexsort(flat.T[::-1])
    return FiniteRing(min_add, transported[order[0]], R.label)


# ---------------------------------------------------------------------------
# structure-constant enumeration


def _search_inputs(factors: tuple[int, ...]) -> tuple[np.ndarray, np.ndarray]:
    cv = groups.coeff_vectors(factors)
    k = len(factors)
    n = cv.shape[0]
    allowed = np.zeros((k * k, n), dtype=np.uint8)
    for i in range(k):
        for j in range(k):
            allowed[i * k + j] = groups.torsion_mask(
                factors, gcd(factors[i], factors[j])
            )
    return cv, allowed


def raw_structures(factors: tuple[int, ...], g11: Optional[int] = None,
                   node_cap: int = 1 << 62) -> np.ndarray:
    """All associative generator-product assignments on the given group, in
    lexicographic order; optionally restricted to one g1*g1 partition."""
    factors = tuple(int(d) for d in factors)
    cv, allowed = _search_inputs(factors)
    if g11 is not None:
        mask = np.zeros_like(allowed[0])
        mask[g11] = allowed[0, g11]
        allowed = allowed.copy()
        allowed[0] = mask
    assignments, status, _ = kernels.structure_search(factors, cv, allowed, node_cap)
    if status != 0:
        raise PartialUniverse(
            f"node budget exhausted on group {list(factors)}"
            + (f", partition g1*g1={g11}" if g11 is not None else "")
        )
    return assignments


def structure_to_ring(factors: tuple[int, ...], assignment: np.ndarray,
                      label: Optional[str] = None) -> FiniteRing:
    """Expand one generator-product assignment via the validating loader."""
    k = len(factors)
    cv = groups.coeff_vectors(factors)
    constants = cv[np.asarray(assignment, dtype=np.int64)].reshape(k, k, k)
    spec = RingSpec.structure(list(factors), constants.tolist(), label)
    return validate(spec)


def _expand_fast(factors: tuple[int, ...], assignment: np.ndarray,
                 label: str) -> FiniteRing:
    """Table expansion without the O(n^3) law check: the search already
    guarantees associativity, and bilinearity guarantees distributivity."""
    if not factors:
        z = np.zeros((1, 1), dtype=np.int64)
        return FiniteRing(z, z, label)
    cv = groups.coeff_vectors(factors)
    k = len(factors)
    d = np.array(factors, dtype=np.int64)
    w = np.array(groups.radix_weights(factors), dtype=np.int64)
    C = cv[np.asarray(assignment, dtype=np.int64)].reshape(k, k, k)
    add = groups.group_add_table(factors)
    prod_vec = np.einsum("xi,yj,ijm->xym", cv, cv, C) % d
    mul = (prod_vec * w).sum(axis=2)
    return FiniteRing(add, mul, label)


@dataclass
class IsoClassCatalog:
    """Every ring of one order: raw counts plus class representatives."""

    order: int
    representatives: list[FiniteRing]
    raw_count: int
    class_count: Optional[int]
    per_type_raw: dict[tuple[int, ...], int] = field(default_factory=dict)
    deduped: bool = True

    def __iter__(self):
        return iter(self.representatives)


def _partition_values(factors: tuple[int, ...]) -> list[int]:
    if not factors:
        return []
    _, allowed = _search_inputs(factors)
    return [int(v) for v in np.flatnonzero(allowed[0])]


def enumerate_rings(n: int, up_to_iso: bool = True,
                    out_dir: Optional[str] = None, resume: bool = False,
                    budget_secs: Optional[float] = None) -> IsoClassCatalog:
    """Catalog of all rings of order n, optionally deduped by isomorphism.

    The run is bounded by budget_secs (default RINGCENT_TIME_BUDGET_SECS);
    overrunning raises PartialUniverse instead of returning a silently
    truncated catalog.  With out_dir set, per-partition results and a
    manifest are written as the run goes; resume=True skips partitions the
    manifest already records as done.
    """
    if n > MAX_ENUM_ORDER:
        raise TooLarge(f"exhaustive enumeration is capped at order {MAX_ENUM_ORDER}")
    if n < 1:
        raise TooLarge("order must be >= 1")
    budget = budget_secs if budget_secs is not None else backend.time_budget_secs()
    deadline = time.monotonic() + budget
    out_path = Path(out_dir) if out_dir else None
    manifest = _read_manifest(out_path, n) if (out_path and resume) else None
    if out_path:
        (out_path / "parts").mkdir(parents=True, exist_ok=True)
        (out_path / "rings").mkdir(parents=True, exist_ok=True)

    per_type_raw: dict[tuple[int, ...], int] = {}
    partition_log: list[dict] = []
    raw_rings: list[tuple[tuple[int, ...], np.ndarray]] = []

    for factors in groups.abelian_group_types(n):
        if not factors:  # order 1: just the zero ring
            per_type_raw[factors] = 1
            raw_rings.append((factors, np.zeros(0, dtype=np.int64)))
            partition_log.append(
                {"factors": [], "g11": None, "raw_count": 1, "status": "done"}
            )
            continue
        total = 0
        for v in _partition_values(factors):
            part_name = f"t{'x'.join(map(str, factors))}_g{v:02d}.json"
            if _manifest_has(manifest, factors, v):
                assignments = _load_part(out_path, part_name)
            else:
                remaining = deadline - time.monotonic()
                if remaining <= 0:
                    _flush_manifest(out_path, n, partition_log, complete=False)
                    raise PartialUniverse(
                        f"time budget exhausted before group {list(factors)}, "
                        f"partition g1*g1={v}"
                    )
                try:
                    assignments = raw_structures(
                        factors, g11=v, node_cap=backend.node_cap(remaining)
                    )
                except PartialUniverse:
                    _flush_manifest(out_path, n, partition_log, complete=False)
                    raise
                if out_path:
                    _save_part(out_path, part_name, factors, v, assignments)
            total += assignments.shape[0]
            partition_log.append(
                {"factors": list(factors), "g11": v,
                 "raw_count": int(assignments.shape[0]), "status": "done",
                 "file": f"parts/{part_name}"}
            )
            for row in assignments:
                raw_rings.append((factors, row))
        per_type_raw[factors] = total

    raw_count = len(raw_rings)
    if not up_to_iso:
        reps = [
            _expand_fast(factors, row, f"o{n}_r{i:04d}")
            for i, (factors, row) in enumerate(raw_rings)
        ]
        catalog = IsoClassCatalog(n, reps, raw_count, None, per_type_raw, False)
        _flush_manifest(out_path, n, partition_log, complete=True, catalog=catalog)
        return catalog

    reps: list[FiniteRing] = []
    buckets: dict[tuple, list[int]] = {}
    for factors, row in raw_rings:
        ring = _expand_fast(factors, row, f"o{n}_candidate")
        fp = ring_fingerprint(ring)
        if not any(isomorphic(reps[idx], ring) for idx in buckets.get(fp, ())):
            ring.label = f"o{n}_c{len(reps):03d}"
            buckets.setdefault(fp, []).append(len(reps))
            reps.append(ring)
    canon = []
    for r in reps:
        c = canonical_form(r)
        canon.append(FiniteRing(c.add, c.mul, r.label))
    reps = canon
    for r in reps:
        validate(r)
    catalog = IsoClassCatalog(n, reps, raw_count, len(reps), per_type_raw, True)
    _flush_manifest(out_path, n, partition_log, complete=True, catalog=catalog)
    return catalog


# ---------------------------------------------------------------------------
# catalog persistence


def _read_manifest(out_path: Optional[Path], n: int) -> Optional[dict]:
    if out_path is None:
        return None
    path = out_path / "manifest.json"
    if not path.exists():
        return None
    with open(path) as fh:
        doc = json.load(fh)
    return doc if doc.get("order") == n else None


def _manifest_has(manifest, factors, v) -> bool:
    if not manifest:
        return False
    for entry in manifest.get("partitions", []):
        if (tuple(entry.get("factors", ())) == factors
                and entry.get("g11") == v
                and entry.get("status") == "done"
                and entry.get("file")):
            return True
    return False


def _save_part(out_path, name, factors, v, assignments) -> None:
    doc = {
        "factors": list(factors),
        "g11": v,
        "assignments": assignments.tolist(),
    }
    with open(out_path / "parts" / name, "w") as fh:
        json.dump(doc, fh)


def _load_part(out_path, name) -> np.ndarray:
    with open(out_path / "parts" / name) as fh:
        doc = json.load(fh)
    k2 = len(doc["factors"]) ** 2
    arr = np.asarray(doc["assignments"], dtype=np.int64)
    return arr.reshape(-1, k2)


def _flush_manifest(out_path, n, partition_log, complete, catalog=None) -> None:
    if out_path is None:
        return
    doc = {
        "schema": 1,
        "order": n,
        "complete": complete,
        "partitions": partition_log,
    }
    if catalog is not None:
        doc["raw_total"] = catalog.raw_count
        doc["classes"] = catalog.class_count
        doc["per_type_raw"] = {
            "x".join(map(str, t)) or "1": c for t, c in catalog.per_type_raw.items()
        }
        files = []
        for ring in catalog.representatives:
            rel = f"rings/{ring.label}.json"
            ring.spec().save(out_path / rel)
            files.append(rel)
        doc["rings"] = files
    with open(out_path / "manifest.json", "w") as fh:
        json.dump(doc, fh, indent=1, sort_keys=True)
        fh.write("\n")


def read_catalog(path) -> IsoClassCatalog:
    """Load a catalog directory written by enumerate_rings(out_dir=...)."""
    path = Path(path)
    with open(path / "manifest.json") as fh:
        doc = json.load(fh)
    if not doc.get("complete"):
        raise PartialUniverse(f"catalog at {path} is incomplete")
    reps = [validate(RingSpec.load(path / rel)) for rel in doc.get("rings", [])]
    per_type = {}
    for key, count in doc.get("per_type_raw", {}).items():
        factors = () if key == "1" else tuple(int(x) for x in key.split("x"))
        per_type[factors] = count
    return IsoClassCatalog(
        doc["order"], reps, doc.get("raw_total", 0), doc.get("classes"),
        per_type, True,
    )


# ---------------------------------------------------------------------------
# searches over the catalog universe


_catalog_cache: dict[int, IsoClassCatalog] = {}


def cached_catalog(n: int, budget_secs: Optional[float] = None) -> IsoClassCatalog:
    if n not in _catalog_cache:
        _catalog_cache[n] = enumerate_rings(n, True, budget_secs=budget_secs)
    return _catalog_cache[n]


def search_n_centralizer(target: int, max_order: int,
                         budget_secs: Optional[float] = None) -> list[FiniteRing]:
    """All catalog representatives with exactly target distinct centralizers
    and order <= max_order.  An empty answer is meaningful."""
    if max_order > MAX_ENUM_ORDER:
        raise TooLarge(f"search is capped at order {MAX_ENUM_ORDER}")
    hits = []
    for n in range(1, max_order + 1):
        for ring in cached_catalog(n, budget_secs):
            if len(cent_set(ring)) == target:
                hits.append(ring)
    return hits


# ---------------------------------------------------------------------------
# independent slow path: full multiplication-table enumeration


def enumerate_mul_tables(add: np.ndarray) -> list[np.ndarray]:
    """Every multiplication table that makes (add, mul) a ring.

    Deliberately plain backtracking over all n*n cells with partial law
    checks; serves as the independent cross-check of the structure-constant
    route for tiny orders.
    """
    add = np.asarray(add, dtype=np.int64)
    n = add.shape[0]
    if n > 8:
        raise TooLarge("full-table enumeration is a cross-check for n <= 8")
    A = add.tolist()
    nn = n * n

    dist_at: list[list[tuple]] = [[] for _ in range(nn)]
    for x in range(n):
        for y in range(n):
            for z in range(n):
                r = max(x * n + A[y][z], x * n + y, x * n + z)
                dist_at[r].append((0, x, y, z))
                r = max(A[x][y] * n + z, x * n + z, y * n + z)
                dist_at[r].append((1, x, y, z))
    assoc_at: list[list[tuple]] = [[] for _ in range(nn)]
    for x in range(n):
        for y in range(n):
            for z in range(n):
                touched = {x * n + y, y * n + z}
                touched.update(x * n + j for j in range(n))
                touched.update(i * n + z for i in range(n))
                for t in touched:
                    assoc_at[t].append((x, y, z))

    mul = [0] * nn
    out: list[np.ndarray] = []

    def laws_ok(t: int) -> bool:
        for side, x, y, z in dist_at[t]:
            if side == 0:
                if mul[x * n + A[y][z]] != A[mul[x * n + y]][mul[x * n + z]]:
                    return False
            else:
                if mul[A[x][y] * n + z] != A[mul[x * n + z]][mul[y * n + z]]:
                    return False
        for x, y, z in assoc_at[t]:
            xy = x * n + y
            yz = y * n + z
            if xy > t or yz > t:
                continue
            left = mul[xy] * n + z
            right = x * n + mul[yz]
            if left > t or right > t:
                continue
            if mul[left] != mul[right]:
                return False
        return True

    def rec(t: int):
        if t == nn:
            out.append(np.array(mul, dtype=np.int64).reshape(n, n))
            return
        for v in range(n):
            mul[t] = v
            if laws_ok(t):
                rec(t + 1)
        mul[t] = 0

    rec(0)
    return out
