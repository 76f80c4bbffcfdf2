"""Structure matrices of 2-dimensional algebras and their basic theory.

A 2-dimensional algebra on a basis {e, f} is determined by the 4x2
structure matrix whose rows give the coordinates of e*e, f*f, e*f and
f*e (in that order).  The straight normal form S(p,q,a,b,c,d) is the
presentation

    e*e = f,  f*f = p e + q f,  e*f = a e + b f,  f*e = c e + d f.

An algebra is endo-commutative when squaring preserves products,
x^2 y^2 = (x y)^2 for all x and y; it is curled when x^2 is always a
scalar multiple of x, and straight otherwise.  The exhaustive checks
below run on integer element codes through the field's lookup tables,
so full scans over q^4 element pairs stay cheap.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .fields import Field, FieldElement, FieldMismatchError, FieldTables, InfiniteFieldError

ROW_LABELS = ("e*e", "f*f", "e*f", "f*e")


class NotEndoCommutative(ValueError):
    """Raised when an operation defined only on endo-commutative algebras
    receives one that fails the defining identity."""


@dataclass(frozen=True)
class AlgebraElement:
    """u*e + v*f."""

    u: FieldElement
    v: FieldElement

    def __iter__(self):
        return iter((self.u, self.v))


def element(field: Field, u, v) -> AlgebraElement:
    u = u if isinstance(u, FieldElement) else field.from_int(u)
    v = v if isinstance(v, FieldElement) else field.from_int(v)
    return AlgebraElement(u, v)


def basis(field: Field) -> tuple[AlgebraElement, AlgebraElement]:
    """The distinguished basis (e, f)."""
    zero, one = field.zero(), field.one()
    return AlgebraElement(one, zero), AlgebraElement(zero, one)


class StructureMatrix:
    """4x2 matrix of structure constants, rows (e*e, f*f, e*f, f*e)."""

    __slots__ = ("field", "rows")

    def __init__(self, field: Field, rows):
        rows = tuple(tuple(entry for entry in row) for row in rows)
        if len(rows) != 4 or any(len(r) != 2 for r in rows):
            raise ValueError("a structure matrix needs 4 rows of 2 entries")
        for row in rows:
            for entry in row:
                if not isinstance(entry, FieldElement) or entry.field != field:
                    raise FieldMismatchError("structure matrix entries must lie in the owner field")
        self.field = field
        self.rows = rows

    @classmethod
    def zero(cls, field: Field) -> "StructureMatrix":
        z = field.zero()
        return cls(field, ((z, z),) * 4)

    @classmethod
    def from_ints(cls, field: Field, rows) -> "StructureMatrix":
        return cls(field, tuple(tuple(field.from_int(v) for v in row) for row in rows))

    def __eq__(self, other):
        return (isinstance(other, StructureMatrix)
                and self.field == other.field and self.rows == other.rows)

    def __hash__(self):
        return hash((self.field, self.rows))

    def __repr__(self):
        rows = ", ".join(f"{lbl}=({r[0]},{r[1]})" for lbl, r in zip(ROW_LABELS, self.rows))
        return f"StructureMatrix[{self.field.spec_string()}: {rows}]"

    def codes(self) -> tuple[int, ...]:
        """Flat 8-tuple of element codes (finite fields only)."""
        enc = self.field.code_of
        return tuple(enc(entry) for row in self.rows for entry in row)

    @classmethod
    def from_codes(cls, field: Field, codes) -> "StructureMatrix":
        dec = field.element_of_code
        it = [dec(c) for c in codes]
        return cls(field, ((it[0], it[1]), (it[2], it[3]), (it[4], it[5]), (it[6], it[7])))

    def to_json(self) -> dict:
        fmt = self.field.format
        return {"field": self.field.spec_string(),
                "rows": [[fmt(entry) for entry in row] for row in self.rows]}

    @classmethod
    def from_json(cls, obj: dict, field: Field | None = None) -> "StructureMatrix":
        from .fields import field_from_spec
        if field is None:
            field = field_from_spec(obj["field"])
        return cls(field, tuple(tuple(field.parse(s) for s in row) for row in obj["rows"]))


@dataclass(frozen=True)
class SParams:
    """The 6-tuple (p, q, a, b, c, d) of a straight-form algebra."""

    p: FieldElement
    q: FieldElement
    a: FieldElement
    b: FieldElement
    c: FieldElement
    d: FieldElement

    @property
    def field(self) -> Field:
        return self.p.field

    @classmethod
    def from_ints(cls, field: Field, p, q, a, b, c, d) -> "SParams":
        conv = lambda v: v if isinstance(v, FieldElement) else field.from_int(v)
        return cls(conv(p), conv(q), conv(a), conv(b), conv(c), conv(d))

    def astuple(self):
        return (self.p, self.q, self.a, self.b, self.c, self.d)

    def codes(self) -> tuple[int, ...]:
        enc = self.field.code_of
        return tuple(enc(v) for v in self.astuple())

    @classmethod
    def from_codes(cls, field: Field, codes) -> "SParams":
        dec = field.element_of_code
        return cls(*(dec(c) for c in codes))

    def to_structure_matrix(self) -> StructureMatrix:
        zero, one = self.field.zero(), self.field.one()
        return StructureMatrix(self.field, ((zero, one), (self.p, self.q),
                                            (self.a, self.b), (self.c, self.d)))

    def to_json(self) -> dict:
        fmt = self.field.format
        return {k: fmt(v) for k, v in zip("pqabcd", self.astuple())}

    @classmethod
    def from_json(cls, field: Field, obj: dict) -> "SParams":
        return cls(*(field.parse(str(obj[k])) for k in "pqabcd"))

    def __str__(self):
        return "S(" + ", ".join(str(v) for v in self.astuple()) + ")"


# ---------------------------------------------------------------------------
# multiplication
# ---------------------------------------------------------------------------

def multiply(A: StructureMatrix, x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    """Bilinear product of x and y in the algebra defined by A."""
    for el in (x.u, x.v, y.u, y.v):
        if el.field != A.field:
            raise FieldMismatchError("algebra elements must lie in the matrix's field")
    (r1e, r1f), (r2e, r2f), (r3e, r3f), (r4e, r4f) = A.rows
    uu, vv, uv, vu = x.u * y.u, x.v * y.v, x.u * y.v, x.v * y.u
    return AlgebraElement(uu * r1e + vv * r2e + uv * r3e + vu * r4e,
                          uu * r1f + vv * r2f + uv * r3f + vu * r4f)


def square(A: StructureMatrix, x: AlgebraElement) -> AlgebraElement:
    return multiply(A, x, x)


# ---------------------------------------------------------------------------
# endo-commutativity
# ---------------------------------------------------------------------------

def _require_finite(A: StructureMatrix, what: str) -> FieldTables:
    if not A.field.is_finite:
        raise InfiniteFieldError(f"{what} requires a finite field")
    return A.field.tables()


def _square_tables(t: FieldTables, m: tuple[int, ...]):
    """Coordinates of (u e + v f)^2 for every element code pair, flat u*q+v."""
    q, add, mul = t.q, t.add, t.mul
    r1e, r1f, r2e, r2f, r3e, r3f, r4e, r4f = m
    sqe = [0] * (q * q)
    sqf = [0] * (q * q)
    for u in range(q):
        mu = mul[u]
        uu = mu[u]
        e1, f1 = mul[uu][r1e], mul[uu][r1f]
        base = u * q
        for v in range(q):
            uv = mu[v]
            vv = mul[v][v]
            sqe[base + v] = add[add[e1][mul[vv][r2e]]][add[mul[uv][r3e]][mul[uv][r4e]]]
            sqf[base + v] = add[add[f1][mul[vv][r2f]]][add[mul[uv][r3f]][mul[uv][r4f]]]
    return sqe, sqf


def _ec_definitional_codes(t: FieldTables, m: tuple[int, ...]) -> bool:
    q, add, mul = t.q, t.add, t.mul
    r1e, r1f, r2e, r2f, r3e, r3f, r4e, r4f = m
    sqe, sqf = _square_tables(t, m)
    for u1 in range(q):
        mu1 = mul[u1]
        for v1 in range(q):
            mv1 = mul[v1]
            i = u1 * q + v1
            mxe, mxf = mul[sqe[i]], mul[sqf[i]]
            for u2 in range(q):
                a, d = mu1[u2], mv1[u2]
                for v2 in range(q):
                    b, c = mv1[v2], mu1[v2]
                    xye = add[add[mul[a][r1e]][mul[b][r2e]]][add[mul[c][r3e]][mul[d][r4e]]]
                    xyf = add[add[mul[a][r1f]][mul[b][r2f]]][add[mul[c][r3f]][mul[d][r4f]]]
                    k = xye * q + xyf
                    j = u2 * q + v2
                    a2, b2, c2, d2 = mxe[sqe[j]], mxf[sqf[j]], mxe[sqf[j]], mxf[sqe[j]]
                    if sqe[k] != add[add[mul[a2][r1e]][mul[b2][r2e]]][add[mul[c2][r3e]][mul[d2][r4e]]]:
                        return False
                    if sqf[k] != add[add[mul[a2][r1f]][mul[b2][r2f]]][add[mul[c2][r3f]][mul[d2][r4f]]]:
                        return False
    return True


def is_endo_commutative_definitional(A: StructureMatrix) -> bool:
    """Exhaustive check of x^2 y^2 = (x y)^2 over all q^4 element pairs."""
    t = _require_finite(A, "the definitional endo-commutativity check")
    return _ec_definitional_codes(t, A.codes())


def is_endo_commutative_straight(S: SParams) -> bool:
    """Closed-form endo-commutativity condition on (p,q,a,b,c,d).

    Works over any supported field; this is the polynomial system
    equivalent to the defining identity for straight-form algebras.
    """
    p, q, a, b, c, d = S.astuple()
    if p * q + p * c != p * b * b + a * a * b + a * b * c:
        return False
    if p * (c - a) != (b - d) * (p * (b + d) - q * (a + c)):
        return False
    if p * (d - b) != a * a - c * c:
        return False
    if q * q + p * d != a * a + q * b * b + a * b * b + a * b * d:
        return False
    if q * (d - b) != a * b - c * d:
        return False
    return True


def _ec_straight_codes(t: FieldTables, pc, qc, ac, bc, cc, dc) -> bool:
    """Table-driven version of the closed-form condition, for scans."""
    add, sub, mul = t.add, t.sub, t.mul
    aa = mul[ac][ac]
    ab = mul[ac][bc]
    if sub[add[mul[pc][qc]][mul[pc][cc]]][add[mul[pc][mul[bc][bc]]][add[mul[aa][bc]][mul[ab][cc]]]]:
        return False
    if sub[mul[pc][sub[cc][ac]]][mul[sub[bc][dc]][sub[mul[pc][add[bc][dc]]][mul[qc][add[ac][cc]]]]]:
        return False
    if sub[mul[pc][sub[dc][bc]]][sub[aa][mul[cc][cc]]]:
        return False
    bb = mul[bc][bc]
    if sub[add[mul[qc][qc]][mul[pc][dc]]][add[add[aa][mul[qc][bb]]][add[mul[ac][bb]][mul[ab][dc]]]]:
        return False
    if sub[mul[qc][sub[dc][bc]]][sub[ab][mul[cc][dc]]]:
        return False
    return True


# ---------------------------------------------------------------------------
# curled / straight
# ---------------------------------------------------------------------------

def is_curled(A: StructureMatrix) -> bool:
    """True iff x^2 lies in the span of x for every element x."""
    t = _require_finite(A, "the curledness check")
    q, sub, mul = t.q, t.sub, t.mul
    sqe, sqf = _square_tables(t, A.codes())
    for u in range(q):
        for v in range(q):
            i = u * q + v
            if sub[mul[u][sqf[i]]][mul[v][sqe[i]]]:
                return False
    return True


def to_straight_form(A: StructureMatrix):
    """Straight normal form of A: (SParams, basis-change Transform), or
    None when A is curled.

    Picks the first element x (e-coefficient cycling fastest) whose pair
    {x, x^2} is independent and rewrites A on the basis {x, x^2}.  The
    returned transform X satisfies transform(A, X) == params.to_structure_matrix().
    """
    from .iso import Transform, transform

    t = _require_finite(A, "straight-form reduction")
    q, sub, mul = t.q, t.sub, t.mul
    sqe, sqf = _square_tables(t, A.codes())
    field = A.field
    for v in range(q):
        for u in range(q):
            if u == 0 and v == 0:
                continue
            i = u * q + v
            s, s2 = sqe[i], sqf[i]
            if sub[mul[u][s2]][mul[v][s]]:
                # M's columns are the new basis vectors x, x^2 in old
                # coordinates; the change-of-basis transform has the old
                # basis in new coordinates as its rows, i.e. X = (M^-1)^T
                dec = field.element_of_code
                Mi = Transform(dec(u), dec(s), dec(v), dec(s2)).inverse()
                X = Transform(Mi.x, Mi.z, Mi.y, Mi.w)
                B = transform(A, X)
                params = SParams(B.rows[1][0], B.rows[1][1], B.rows[2][0],
                                 B.rows[2][1], B.rows[3][0], B.rows[3][1])
                return params, X
    return None


# ---------------------------------------------------------------------------
# rank and type taxonomy
# ---------------------------------------------------------------------------

def rank(A: StructureMatrix) -> int:
    """Gaussian-elimination rank of the 4x2 matrix, in {0, 1, 2}."""
    rows = [list(r) for r in A.rows]
    rk = 0
    for col in range(2):
        pivot = next((r for r in range(rk, 4) if rows[r][col]), None)
        if pivot is None:
            continue
        rows[rk], rows[pivot] = rows[pivot], rows[rk]
        inv = rows[rk][col].inverse()
        for r in range(rk + 1, 4):
            factor = rows[r][col] * inv
            rows[r] = [rows[r][j] - factor * rows[rk][j] for j in range(2)]
        rk += 1
    return rk


class AlgebraType(Enum):
    """Rank-2 taxonomy by the vanishing pattern of (p, a, c)."""

    I_001 = "I.001"
    I_010 = "I.010"
    I_100 = "I.100"
    II_1 = "II1"
    II_2 = "II2"
    II_3 = "II3"
    III = "III"
    NOT_RANK_2 = "not-rank-2"


_TYPE_BY_PATTERN = {
    (False, False, False): AlgebraType.NOT_RANK_2,
    (False, False, True): AlgebraType.I_001,
    (False, True, False): AlgebraType.I_010,
    (True, False, False): AlgebraType.I_100,
    (False, True, True): AlgebraType.II_1,
    (True, False, True): AlgebraType.II_2,
    (True, True, False): AlgebraType.II_3,
    (True, True, True): AlgebraType.III,
}


def type_of(S: SParams) -> AlgebraType:
    """Type bucket of an endo-commutative straight-form algebra.

    Raises NotEndoCommutative on non-EC input: the taxonomy is only
    defined inside the endo-commutative family.
    """
    if not is_endo_commutative_straight(S):
        raise NotEndoCommutative(f"{S} is not endo-commutative")
    return _TYPE_BY_PATTERN[(bool(S.p), bool(S.a), bool(S.c))]


def ii1_subclass(S: SParams) -> int:
    """Four-way split of type II1 on (b, q, d): 1 if b=0; 2 if b!=0, q=0;
    3 if b,q!=0, d=0; 4 otherwise."""
    if type_of(S) is not AlgebraType.II_1:
        raise ValueError(f"{S} is not of type II1")
    if not S.b:
        return 1
    if not S.q:
        return 2
    if not S.d:
        return 3
    return 4


# ---------------------------------------------------------------------------
# pretty printing
# ---------------------------------------------------------------------------

def _combo_str(ce: FieldElement, cf: FieldElement) -> str:
    terms = []
    for coef, sym in ((ce, "e"), (cf, "f")):
        if not coef:
            continue
        cs = str(coef)
        if cs == "1":
            terms.append(sym)
        elif cs == "-1":
            terms.append("-" + sym)
        elif any(ch in cs[1:] for ch in "+-") or "/" in cs:
            terms.append(f"({cs}){sym}")
        else:
            terms.append(f"{cs}{sym}")
    if not terms:
        return "0"
    out = terms[0]
    for term in terms[1:]:
        out += term if term.startswith("-") else "+" + term
    return out


def multiplication_table_text(A: StructureMatrix) -> str:
    """Render the 2x2 multiplication table ((e*e, e*f), (f*e, f*f))."""
    (r1, r2, r3, r4) = A.rows
    tl, tr = _combo_str(*r1), _combo_str(*r3)
    bl, br = _combo_str(*r4), _combo_str(*r2)
    w1, w2 = max(len(tl), len(bl)), max(len(tr), len(br))
    return (f"( {tl.ljust(w1)}  {tr.ljust(w2)} )\n"
            f"( {bl.ljust(w1)}  {br.ljust(w2)} )")
