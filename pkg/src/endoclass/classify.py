"""Exhaustive classification of type-II1 endo-commutative straight algebras.

The pipeline over a finite field K:

  1. scan all S(0, q, a, b, c, d) with a, c != 0 through the closed-form
     endo-commutativity system (q^5 tuples, integer-coded),
  2. partition the survivors into isomorphism classes by exhaustive GL2
     orbit scans seeded at the enumeration-least unassigned member,
  3. build the predicted family catalog (two shapes for characteristic
     != 2, two for characteristic 2, each parametrized by complete
     representative systems of the relations in `equiv`),
  4. verify that catalog and partition match member for member.

The subclass inventory cross-validates the closed-form parametrizations
of the four (b, q, d)-strata against the direct scan.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field as dc_field

from .algebra import SParams, _ec_straight_codes, is_endo_commutative_straight, type_of, AlgebraType
from .equiv import RelationId, rep_system
from .fields import Field, FieldElement, FieldTables, InfiniteFieldError
from .iso import Transform, apply_transform_codes, gl2_lifted, gl2_order

MAX_ENUM_ORDER = 256
MAX_VERIFY_ORDER = 49
ENV_MAX_Q = "ENDOCLASS_MAX_Q"


class OversizedFieldError(ValueError):
    """The field is larger than the configured guard for this operation."""


def _max_q(default: int) -> int:
    value = os.environ.get(ENV_MAX_Q)
    if value:
        try:
            return int(value)
        except ValueError:
            raise OversizedFieldError(f"{ENV_MAX_Q} must be an integer, got {value!r}") from None
    return default


def _require_finite(field: Field, guard: int, what: str) -> int:
    if not field.is_finite:
        raise InfiniteFieldError(f"{what} needs a finite field")
    q = field.order()
    limit = _max_q(guard)
    if q > limit:
        raise OversizedFieldError(
            f"{what} is guarded to q <= {limit} (got q = {q}); "
            f"set {ENV_MAX_Q} to override")
    return q


class UnionFind:
    """Array-based union-find with path compression."""

    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, i: int) -> int:
        root = i
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[i] != root:
            self.parent[i], i = root, self.parent[i]
        return root

    def union(self, i: int, j: int) -> None:
        ri, rj = self.find(i), self.find(j)
        if ri != rj:
            # keep the smaller index as root so representatives are
            # enumeration-least
            if ri > rj:
                ri, rj = rj, ri
            self.parent[rj] = ri


# ---------------------------------------------------------------------------
# type-II1 enumeration and subclass inventory
# ---------------------------------------------------------------------------

def _sparams_codes_to_matrix_codes(codes6):
    p, q, a, b, c, d = codes6
    return (0, 1, p, q, a, b, c, d)


def enumerate_type_ii1(field: Field) -> list[SParams]:
    """All endo-commutative S(0, q, a, b, c, d) with a, c != 0, in
    lexicographic (q, a, b, c, d) code order."""
    qsize = _require_finite(field, MAX_ENUM_ORDER, "the type-II1 scan")
    t = field.tables()
    out = []
    rng = range(qsize)
    nz = range(1, qsize)
    for qc in rng:
        for ac in nz:
            for bc in rng:
                for cc in nz:
                    for dc in rng:
                        if _ec_straight_codes(t, 0, qc, ac, bc, cc, dc):
                            out.append(SParams.from_codes(field, (0, qc, ac, bc, cc, dc)))
    return out


def _subclass_index(sp: SParams) -> int:
    if not sp.b:
        return 1
    if not sp.q:
        return 2
    if not sp.d:
        return 3
    return 4


@dataclass
class SubclassInventory:
    """The four (b, q, d)-strata of the type-II1 family, produced twice:
    from the closed-form parametrizations and from the direct scan."""

    field: Field
    closed_form: dict[int, list[SParams]]
    direct_scan: dict[int, list[SParams]]
    scan_all: list[SParams]


def _closed_form_subclasses(field: Field) -> dict[int, list[SParams]]:
    zero = field.zero()
    one = field.one()
    units = [el for el in field.elements() if el]
    char2 = field.characteristic() == 2

    def dedup(items):
        seen = {}
        for sp in items:
            seen.setdefault(sp.codes(), sp)
        return [sp for _, sp in sorted(seen.items())]

    sub1 = [SParams(zero, a, a, zero, -a, d) for a in units for d in units]
    signs = (one,) if char2 else (one, -one)
    sub1 += [SParams(zero, eps * a, a, zero, delta * a, zero)
             for a in units for eps in signs for delta in signs]

    sub3 = [SParams(zero, -a, a, b, -a, zero) for a in units for b in units]

    if char2:
        sub4 = [SParams(zero, q, a, b, a, b)
                for q in units for a in units for b in units
                if q * q + a * a + q * b * b == zero]
    else:
        quarter = field.from_int(4).inverse()
        sub4 = []
        for b in units:
            for d in units:
                if d == b or d == -b:
                    continue
                a = (d * d - b * b) * quarter
                sub4.append(SParams(zero, (b + d) * (b + d) * quarter, a, b, -a, d))

    return {1: dedup(sub1), 2: [], 3: dedup(sub3), 4: dedup(sub4)}


def enumerate_subclasses(field: Field) -> SubclassInventory:
    """Both productions of the four subclasses (closed form and scan)."""
    scan = enumerate_type_ii1(field)
    direct: dict[int, list[SParams]] = {1: [], 2: [], 3: [], 4: []}
    for sp in scan:
        direct[_subclass_index(sp)].append(sp)
    return SubclassInventory(field, _closed_form_subclasses(field), direct, scan)


# ---------------------------------------------------------------------------
# isomorphism classes
# ---------------------------------------------------------------------------

@dataclass
class IsoClass:
    """One isomorphism class: representative is the enumeration-least
    member; witnesses[i] carries the representative onto members[i]."""

    representative: SParams
    members: list[SParams]
    member_indices: list[int]
    witnesses: list[Transform]


def _orbit_first_hits(t: FieldTables, gl2_iterable, src, key_to_index):
    hits: dict[int, tuple[int, int, int, int]] = {}
    get = key_to_index.get
    for x, y, z, w, L in gl2_iterable:
        j = get(apply_transform_codes(t, L, src, x, y, z, w))
        if j is not None and j not in hits:
            hits[j] = (x, y, z, w)
    return hits


# worker-side state for --jobs parallelism (fork start method)
_POOL_STATE: dict = {}


def _pool_init(spec: str):
    from .fields import field_from_spec
    f = field_from_spec(spec)
    _POOL_STATE["tables"] = f.tables()
    _POOL_STATE["gl2"] = list(gl2_lifted(f))


def _pool_scan(args):
    src, keymap, chunk_index, chunk_count = args
    t = _POOL_STATE["tables"]
    gl2 = _POOL_STATE["gl2"]
    n = len(gl2)
    lo = chunk_index * n // chunk_count
    hi = (chunk_index + 1) * n // chunk_count
    return _orbit_first_hits(t, gl2[lo:hi], src, keymap)


class _ParallelScanner:
    """Splits one orbit scan across a fork pool, merging earliest-first."""

    def __init__(self, field: Field, jobs: int):
        import multiprocessing as mp
        ctx = mp.get_context("fork")
        self.jobs = jobs
        self.pool = ctx.Pool(jobs, initializer=_pool_init,
                             initargs=(field.spec_string(),))

    def scan(self, t, src, keymap):
        results = self.pool.map(
            _pool_scan,
            [(src, keymap, i, self.jobs) for i in range(self.jobs)])
        merged: dict[int, tuple[int, int, int, int]] = {}
        for part in results:  # chunks are in ascending GL2 order
            for j, xc in part.items():
                if j not in merged:
                    merged[j] = xc
        return merged

    def close(self):
        self.pool.close()
        self.pool.join()


def _supports_fork() -> bool:
    import multiprocessing as mp
    return "fork" in mp.get_all_start_methods()


def iso_classes(algebras, jobs: int = 1) -> list[IsoClass]:
    """Partition S-form algebras into isomorphism classes.

    Exhaustive GL2 orbit scans from each enumeration-least unassigned
    member feed a union-find; each recorded witness is the first X in
    (x, y, z, w) enumeration order with transform(seed, X) = member,
    exactly what a pairwise are_isomorphic call would return.
    """
    algebras = list(algebras)
    if not algebras:
        return []
    field = algebras[0].field
    for sp in algebras:
        if sp.field != field:
            raise ValueError("all algebras must live over one field")
    _require_finite(field, MAX_ENUM_ORDER, "isomorphism classification")
    t = field.tables()
    n = len(algebras)
    codes = [_sparams_codes_to_matrix_codes(sp.codes()) for sp in algebras]
    key_to_index: dict[tuple, int] = {}
    uf = UnionFind(n)
    witness_codes: dict[int, tuple[int, int, int, int]] = {}
    duplicates = []
    for i, key in enumerate(codes):
        if key in key_to_index:
            uf.union(key_to_index[key], i)
            duplicates.append(i)
        else:
            key_to_index[key] = i

    scanner = None
    if jobs > 1 and _supports_fork() and gl2_order(t.q) <= 700_000:
        scanner = _ParallelScanner(field, jobs)
    assigned = [False] * n
    duplicates = set(duplicates)
    try:
        for i in range(n):
            if assigned[i] or i in duplicates:
                continue
            assigned[i] = True
            if scanner:
                hits = scanner.scan(t, codes[i], key_to_index)
            else:
                # gl2_lifted is re-requested per seed: cached fields hand
                # back one shared list, larger fields a fresh generator
                hits = _orbit_first_hits(t, gl2_lifted(field), codes[i], key_to_index)
            for j, xc in hits.items():
                if j == i:
                    witness_codes[i] = xc
                else:
                    uf.union(i, j)
                    assigned[j] = True
                    witness_codes[j] = xc
    finally:
        if scanner:
            scanner.close()
    for i in duplicates:
        assigned[i] = True
        witness_codes[i] = witness_codes[key_to_index[codes[i]]]

    dec = field.element_of_code
    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(uf.find(i), []).append(i)
    out = []
    for root in sorted(groups):
        members = sorted(groups[root])
        wits = [Transform(*(dec(c) for c in witness_codes[i])) for i in members]
        out.append(IsoClass(representative=algebras[root],
                            members=[algebras[i] for i in members],
                            member_indices=members,
                            witnesses=wits))
    return out


# ---------------------------------------------------------------------------
# predicted families
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FamilyLabel:
    """Which family a predicted class representative comes from."""

    tag: str  # S1..S4 for characteristic != 2, S1'..S4' for characteristic 2
    t: FieldElement | None = None
    eps: int | None = None
    delta: int | None = None

    def __str__(self):
        parts = []
        if self.t is not None:
            parts.append(f"t={self.t}")
        if self.eps is not None:
            parts.append(f"eps={self.eps:+d}")
        if self.delta is not None:
            parts.append(f"delta={self.delta:+d}")
        return self.tag + (f"({', '.join(parts)})" if parts else "")

    def to_json(self) -> dict:
        obj: dict = {"tag": self.tag}
        if self.t is not None:
            obj["t"] = str(self.t)
        if self.eps is not None:
            obj["eps"] = self.eps
        if self.delta is not None:
            obj["delta"] = self.delta
        return obj


def theorem_families(field: Field) -> list[tuple[FamilyLabel, SParams]]:
    """The predicted isomorphism-class representatives over a finite field.

    Characteristic != 2: S(0,1,1,0,-1,2); S(0,4,-4,-4,4,0);
    S(0, eps*t, t, 0, delta*t, 0) for t in a complete representative
    system of sim1 and eps, delta = +-1; and
    S(0, (1+t)^2/4, (t^2-1)/4, 1, (1-t^2)/4, t) for t in K* minus {1,-1}.

    Characteristic 2: S(0,t,t,0,t,1) for t over sim2 representatives;
    S(0,t,t,0,t,0) over sim3; S(0,t,t,t,t,0) over sim4; and
    S(0, t^2/(1+t^2), t/(1+t^2), 1, t/(1+t^2), 1) for t in K* minus {1}.
    """
    _require_finite(field, MAX_ENUM_ORDER, "the predicted family catalog")
    zero, one = field.zero(), field.one()
    out: list[tuple[FamilyLabel, SParams]] = []
    if field.characteristic() != 2:
        out.append((FamilyLabel("S1"), SParams.from_ints(field, 0, 1, 1, 0, -1, 2)))
        out.append((FamilyLabel("S2"), SParams.from_ints(field, 0, 4, -4, -4, 4, 0)))
        for t in rep_system(RelationId.SIM1, field).representatives:
            for eps in (1, -1):
                for delta in (1, -1):
                    e, dl = field.from_int(eps), field.from_int(delta)
                    out.append((FamilyLabel("S3", t=t, eps=eps, delta=delta),
                                SParams(zero, e * t, t, zero, dl * t, zero)))
        quarter = field.from_int(4).inverse()
        minus_one = -one
        for t in field.elements():
            if not t or t == one or t == minus_one:
                continue
            tt = t * t
            out.append((FamilyLabel("S4", t=t),
                        SParams(zero, (one + t) * (one + t) * quarter,
                                (tt - one) * quarter, one,
                                (one - tt) * quarter, t)))
    else:
        for t in rep_system(RelationId.SIM2, field).representatives:
            out.append((FamilyLabel("S1'", t=t), SParams(zero, t, t, zero, t, one)))
        for t in rep_system(RelationId.SIM3, field).representatives:
            out.append((FamilyLabel("S2'", t=t), SParams(zero, t, t, zero, t, zero)))
        for t in rep_system(RelationId.SIM4, field).representatives:
            out.append((FamilyLabel("S3'", t=t), SParams(zero, t, t, t, t, zero)))
        for t in field.elements():
            if not t or t == one:
                continue
            den_inv = (one + t * t).inverse()  # 1+t^2 = (1+t)^2 != 0 since t != 1
            out.append((FamilyLabel("S4'", t=t),
                        SParams(zero, t * t * den_inv, t * den_inv, one,
                                t * den_inv, one)))
    return out


# ---------------------------------------------------------------------------
# verification
# ---------------------------------------------------------------------------

@dataclass
class MatchEntry:
    label: FamilyLabel
    params: SParams
    class_index: int | None
    witness: Transform | None  # carries the class representative onto params


@dataclass
class ClassificationReport:
    """Outcome of matching the predicted families against the exhaustive
    isomorphism partition of the type-II1 scan."""

    field: Field
    predicted: list[tuple[FamilyLabel, SParams]]
    classes: list[IsoClass]
    matching: list[MatchEntry]
    verdict: bool
    failures: list[str] = dc_field(default_factory=list)

    @property
    def counts(self) -> dict:
        return {"algebras": sum(len(c.members) for c in self.classes),
                "classes": len(self.classes),
                "predicted": len(self.predicted)}

    def to_json_dict(self) -> dict:
        return {
            "field": self.field.spec_string(),
            "verdict": "pass" if self.verdict else "fail",
            "counts": self.counts,
            "predicted": [{"label": label.to_json(), "params": sp.to_json()}
                          for label, sp in self.predicted],
            "classes": [{"index": i,
                         "representative": c.representative.to_json(),
                         "size": len(c.members),
                         "members": [m.to_json() for m in c.members]}
                        for i, c in enumerate(self.classes)],
            "matching": [{"label": m.label.to_json(),
                          "params": m.params.to_json(),
                          "class": m.class_index,
                          "witness": m.witness.to_json() if m.witness else None}
                         for m in self.matching],
            "failures": list(self.failures),
        }

    def summary_text(self) -> str:
        lines = [f"field {self.field.spec_string()}: "
                 f"{self.counts['algebras']} type-II1 algebras, "
                 f"{self.counts['classes']} isomorphism classes, "
                 f"{self.counts['predicted']} predicted families",
                 f"verdict: {'pass' if self.verdict else 'fail'}",
                 "",
                 f"{'family':<28} {'representative':<28} {'size':>4}  witness"]
        by_class = {m.class_index: m for m in self.matching if m.class_index is not None}
        for i, cls in enumerate(self.classes):
            m = by_class.get(i)
            label = str(m.label) if m else "(unmatched)"
            wit = str(m.witness) if m and m.witness else "-"
            lines.append(f"{label:<28} {str(cls.representative):<28} "
                         f"{len(cls.members):>4}  {wit}")
        for f in self.failures:
            lines.append(f"FAIL: {f}")
        return "\n".join(lines)


def verify_classification(field: Field, jobs: int = 1) -> ClassificationReport:
    """Check the predicted families against the brute-force partition.

    Passes iff (a) every predicted member is an endo-commutative
    type-II1 straight algebra, (b) predicted members are pairwise
    non-isomorphic, (c) the exhaustive partition has exactly as many
    classes as predicted members, and (d) every class contains exactly
    one predicted member.  (b) is witnessed by the exhausted orbit
    scans underlying (d).
    """
    _require_finite(field, MAX_VERIFY_ORDER, "classification verification")
    failures: list[str] = []
    predicted = theorem_families(field)

    for label, sp in predicted:
        if not is_endo_commutative_straight(sp):
            failures.append(f"predicted {label} = {sp} is not endo-commutative")
        elif type_of(sp) is not AlgebraType.II_1:
            failures.append(f"predicted {label} = {sp} is not of type II1")

    scan = enumerate_type_ii1(field)
    classes = iso_classes(scan, jobs=jobs)

    member_to_class: dict[tuple, tuple[int, int]] = {}
    for ci, cls in enumerate(classes):
        for pos, sp in enumerate(cls.members):
            member_to_class[sp.codes()] = (ci, pos)

    matching: list[MatchEntry] = []
    seen_class: dict[int, FamilyLabel] = {}
    for label, sp in predicted:
        loc = member_to_class.get(sp.codes())
        if loc is None:
            failures.append(f"predicted {label} = {sp} is absent from the type-II1 scan")
            matching.append(MatchEntry(label, sp, None, None))
            continue
        ci, pos = loc
        if ci in seen_class:
            failures.append(
                f"predicted {label} and {seen_class[ci]} fall in the same class {ci}")
        seen_class[ci] = label
        matching.append(MatchEntry(label, sp, ci, classes[ci].witnesses[pos]))

    if len(classes) != len(predicted):
        failures.append(
            f"{len(classes)} computed classes vs {len(predicted)} predicted families")
    for ci in range(len(classes)):
        if ci not in seen_class:
            failures.append(
                f"class {ci} (representative {classes[ci].representative}) "
                f"matches no predicted family")

    return ClassificationReport(field, predicted, classes, matching,
                                verdict=not failures, failures=failures)


# ---------------------------------------------------------------------------
# general type enumeration (CLI support)
# ---------------------------------------------------------------------------

_TYPE_ALIASES = {
    "I": (AlgebraType.I_001, AlgebraType.I_010, AlgebraType.I_100),
    "I.001": (AlgebraType.I_001,),
    "I.010": (AlgebraType.I_010,),
    "I.100": (AlgebraType.I_100,),
    "II1": (AlgebraType.II_1,),
    "II2": (AlgebraType.II_2,),
    "II3": (AlgebraType.II_3,),
    "III": (AlgebraType.III,),
}


def enumerate_type(field: Field, type_name: str, subclass: int | None = None) -> list[SParams]:
    """Endo-commutative S-forms of one type bucket, in scan order.

    The II1 path scans q^5 tuples (p = 0); any other bucket needs the
    full q^6 scan and is guarded to q <= 9.  `subclass` filters II1 by
    its (b, q, d) stratum.
    """
    if type_name not in _TYPE_ALIASES:
        raise ValueError(f"unknown type {type_name!r}; expected one of {sorted(_TYPE_ALIASES)}")
    if subclass is not None and type_name != "II1":
        raise ValueError("--subclass only applies to type II1")
    if type_name == "II1":
        scan = enumerate_type_ii1(field)
        if subclass is None:
            return scan
        if subclass not in (1, 2, 3, 4):
            raise ValueError("subclass must be 1..4")
        return [sp for sp in scan if _subclass_index(sp) == subclass]

    qsize = _require_finite(field, 9, f"the full type-{type_name} scan")
    wanted = _TYPE_ALIASES[type_name]
    t = field.tables()
    out = []
    rng = range(qsize)
    for pc in rng:
        for qc in rng:
            for ac in rng:
                for bc in rng:
                    for cc in rng:
                        for dc in rng:
                            if not _ec_straight_codes(t, pc, qc, ac, bc, cc, dc):
                                continue
                            pattern = (pc != 0, ac != 0, cc != 0)
                            sp = SParams.from_codes(field, (pc, qc, ac, bc, cc, dc))
                            if _PATTERN_TYPE[pattern] in wanted:
                                out.append(sp)
    return out


_PATTERN_TYPE = {
    (False, False, False): AlgebraType.NOT_RANK_2,
    (False, False, True): AlgebraType.I_001,
    (False, True, False): AlgebraType.I_010,
    (True, False, False): AlgebraType.I_100,
    (False, True, True): AlgebraType.II_1,
    (True, False, True): AlgebraType.II_2,
    (True, True, False): AlgebraType.II_3,
    (True, True, True): AlgebraType.III,
}
