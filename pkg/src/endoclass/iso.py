"""Change of basis for 2-dimensional algebras and isomorphism search.

An invertible 2x2 matrix X = ((x, y), (z, w)) lifts to the 4x4 matrix
of pairwise entry products

    lift(X) = ( x^2  y^2  xy  xy )
              ( z^2  w^2  zw  zw )
              ( xz   yw   xw  yz )
              ( xz   yw   yz  xw )

and X -> lift(X) is a group homomorphism GL2 -> GL4.  A change of
basis acts on structure matrices by A -> lift(X)^(-1) * A * X; two
structure matrices present isomorphic algebras exactly when some
X in GL2 carries one to the other, and such an X is called a
transformation matrix for the isomorphism.

Brute-force search enumerates all (q^2-1)(q^2-q) invertible matrices
in lexicographic (x, y, z, w) element-code order and returns the first
witness, so results are reproducible.  The search runs on integer
codes; lifted inverses are precomputed per field when the group is
small enough to cache.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import SParams, StructureMatrix
from .fields import Field, FieldElement, FieldMismatchError, FieldTables, InfiniteFieldError


class SingularTransformError(ValueError):
    """The 2x2 matrix is not invertible."""


@dataclass(frozen=True)
class Transform:
    """An element ((x, y), (z, w)) of GL2 over some field."""

    x: FieldElement
    y: FieldElement
    z: FieldElement
    w: FieldElement

    def __post_init__(self):
        f = self.x.field
        for el in (self.y, self.z, self.w):
            if el.field != f:
                raise FieldMismatchError("transform entries must lie in one field")
        if not self.det():
            raise SingularTransformError(f"{self} is singular")

    @property
    def field(self) -> Field:
        return self.x.field

    def det(self) -> FieldElement:
        return self.x * self.w - self.y * self.z

    def entries(self):
        return (self.x, self.y, self.z, self.w)

    @classmethod
    def identity(cls, field: Field) -> "Transform":
        one, zero = field.one(), field.zero()
        return cls(one, zero, zero, one)

    @classmethod
    def from_ints(cls, field: Field, x, y, z, w) -> "Transform":
        conv = lambda v: v if isinstance(v, FieldElement) else field.from_int(v)
        return cls(conv(x), conv(y), conv(z), conv(w))

    def inverse(self) -> "Transform":
        di = self.det().inverse()
        return Transform(self.w * di, -self.y * di, -self.z * di, self.x * di)

    def __matmul__(self, other: "Transform") -> "Transform":
        if other.field != self.field:
            raise FieldMismatchError("cannot compose transforms over different fields")
        return Transform(self.x * other.x + self.y * other.z,
                         self.x * other.y + self.y * other.w,
                         self.z * other.x + self.w * other.z,
                         self.z * other.y + self.w * other.w)

    def codes(self) -> tuple[int, int, int, int]:
        enc = self.field.code_of
        return (enc(self.x), enc(self.y), enc(self.z), enc(self.w))

    def to_json(self) -> dict:
        fmt = self.field.format
        return {"x": fmt(self.x), "y": fmt(self.y), "z": fmt(self.z), "w": fmt(self.w)}

    @classmethod
    def from_json(cls, field: Field, obj: dict) -> "Transform":
        return cls(*(field.parse(str(obj[k])) for k in "xyzw"))

    def __str__(self):
        return f"(({self.x}, {self.y}), ({self.z}, {self.w}))"


class LiftedTransform:
    """4x4 lift of a Transform; invertible by construction."""

    __slots__ = ("field", "entries")

    def __init__(self, field: Field, entries):
        self.field = field
        self.entries = tuple(tuple(row) for row in entries)

    def __eq__(self, other):
        return (isinstance(other, LiftedTransform)
                and self.field == other.field and self.entries == other.entries)

    def __hash__(self):
        return hash((self.field, self.entries))

    def __repr__(self):
        return f"LiftedTransform({self.entries})"

    @classmethod
    def identity(cls, field: Field) -> "LiftedTransform":
        one, zero = field.one(), field.zero()
        return cls(field, tuple(tuple(one if i == j else zero for j in range(4))
                                for i in range(4)))

    def __matmul__(self, other: "LiftedTransform") -> "LiftedTransform":
        if other.field != self.field:
            raise FieldMismatchError("cannot compose lifts over different fields")
        a, b = self.entries, other.entries
        return LiftedTransform(self.field, tuple(
            tuple(sum((a[i][k] * b[k][j] for k in range(1, 4)), a[i][0] * b[0][j])
                  for j in range(4))
            for i in range(4)))

    def inverse(self) -> "LiftedTransform":
        """Inverse by Gaussian elimination over the field."""
        n = 4
        field = self.field
        aug = [list(self.entries[i]) + [field.one() if j == i else field.zero()
                                        for j in range(n)] for i in range(n)]
        for col in range(n):
            pivot = next((r for r in range(col, n) if aug[r][col]), None)
            if pivot is None:
                raise SingularTransformError("lifted matrix is singular")
            aug[col], aug[pivot] = aug[pivot], aug[col]
            inv = aug[col][col].inverse()
            aug[col] = [v * inv for v in aug[col]]
            for r in range(n):
                if r != col and aug[r][col]:
                    factor = aug[r][col]
                    aug[r] = [aug[r][j] - factor * aug[col][j] for j in range(2 * n)]
        return LiftedTransform(field, tuple(tuple(row[n:]) for row in aug))


def lift(X: Transform) -> LiftedTransform:
    """The 4x4 matrix of pairwise entry products of X."""
    a, b, c, d = X.entries()
    return LiftedTransform(X.field, (
        (a * a, b * b, a * b, a * b),
        (c * c, d * d, c * d, c * d),
        (a * c, b * d, a * d, b * c),
        (a * c, b * d, b * c, a * d),
    ))


def transform(A: StructureMatrix, X: Transform) -> StructureMatrix:
    """Structure matrix of the same algebra after the change of basis X:
    lift(X)^(-1) * A * X."""
    if X.field != A.field:
        raise FieldMismatchError("transform and matrix must share a field")
    Linv = lift(X).inverse().entries
    rows = A.rows
    out = []
    for i in range(4):
        me = sum((Linv[i][j] * rows[j][0] for j in range(1, 4)), Linv[i][0] * rows[0][0])
        mf = sum((Linv[i][j] * rows[j][1] for j in range(1, 4)), Linv[i][0] * rows[0][1])
        out.append((me * X.x + mf * X.z, me * X.y + mf * X.w))
    return StructureMatrix(A.field, out)


def check_iso_system(S: SParams, S2: SParams, X: Transform) -> bool:
    """Does X witness an isomorphism carrying S onto S2?

    Evaluates the eight polynomial equations equivalent to
    transform(S.matrix, X) == S2.matrix for straight-form algebras.
    """
    if S.field != S2.field or X.field != S.field:
        raise FieldMismatchError("check_iso_system needs one common field")
    p, q, a, b, c, d = S.astuple()
    p2, q2, a2, b2, c2, d2 = S2.astuple()
    x, y, z, w = X.entries()
    if p2 * y * y + (a2 + c2) * x * y != z:
        return False
    if x * x + q2 * y * y + (b2 + d2) * x * y != w:
        return False
    if p2 * w * w + (a2 + c2) * z * w != p * x + q * z:
        return False
    if z * z + q2 * w * w + (b2 + d2) * z * w != p * y + q * w:
        return False
    if p2 * y * w + a2 * x * w + c2 * y * z != a * x + b * z:
        return False
    if x * z + q2 * y * w + b2 * x * w + d2 * y * z != a * y + b * w:
        return False
    if p2 * y * w + a2 * y * z + c2 * x * w != c * x + d * z:
        return False
    if x * z + q2 * y * w + b2 * y * z + d2 * x * w != c * y + d * w:
        return False
    return True


# ---------------------------------------------------------------------------
# coded search kernel
# ---------------------------------------------------------------------------

def gl2_order(q: int) -> int:
    return (q * q - 1) * (q * q - q)


_GL2_CACHE: dict = {}
_GL2_CACHE_LIMIT = 700_000


def _lifted_inverse_codes(t: FieldTables, x: int, y: int, z: int, w: int):
    """Lift of X^(-1) as a flat 16-tuple of codes (det must be nonzero)."""
    mul, sub, neg, inv = t.mul, t.sub, t.neg, t.inv
    di = inv[sub[mul[x][w]][mul[y][z]]]
    a = mul[w][di]
    b = mul[neg[y]][di]
    c = mul[neg[z]][di]
    d = mul[x][di]
    ab, cd, ac, bd, ad, bc = mul[a][b], mul[c][d], mul[a][c], mul[b][d], mul[a][d], mul[b][c]
    return (mul[a][a], mul[b][b], ab, ab,
            mul[c][c], mul[d][d], cd, cd,
            ac, bd, ad, bc,
            ac, bd, bc, ad)


def _iter_gl2(t: FieldTables):
    """(x, y, z, w, lifted inverse) in lexicographic code order."""
    q, mul, sub = t.q, t.mul, t.sub
    rng = range(q)
    for x in rng:
        mx = mul[x]
        for y in rng:
            my = mul[y]
            for z in rng:
                yz = my[z]
                for w in rng:
                    if sub[mx[w]][yz]:
                        yield x, y, z, w, _lifted_inverse_codes(t, x, y, z, w)


def gl2_lifted(field: Field):
    """All of GL2 with precomputed lifted inverses; cached when small."""
    t = field.tables()
    if gl2_order(t.q) > _GL2_CACHE_LIMIT:
        return _iter_gl2(t)
    key = field.descriptor
    cached = _GL2_CACHE.get(key)
    if cached is None:
        cached = list(_iter_gl2(t))
        _GL2_CACHE[key] = cached
    return cached


def apply_transform_codes(t: FieldTables, L, A, x: int, y: int, z: int, w: int):
    """lift-inverse L (flat 16 codes) times structure codes A times X."""
    add, mul = t.add, t.mul
    a1e, a1f, a2e, a2f, a3e, a3f, a4e, a4f = A
    out = []
    for i in (0, 4, 8, 12):
        l0, l1, l2, l3 = L[i], L[i + 1], L[i + 2], L[i + 3]
        me = add[add[mul[l0][a1e]][mul[l1][a2e]]][add[mul[l2][a3e]][mul[l3][a4e]]]
        mf = add[add[mul[l0][a1f]][mul[l1][a2f]]][add[mul[l2][a3f]][mul[l3][a4f]]]
        out.append(add[mul[me][x]][mul[mf][z]])
        out.append(add[mul[me][y]][mul[mf][w]])
    return tuple(out)


def are_isomorphic(A: StructureMatrix, A2: StructureMatrix):
    """First GL2 witness carrying A onto A2, or None after exhausting GL2."""
    if A.field != A2.field:
        raise FieldMismatchError("can only compare algebras over one field")
    if not A.field.is_finite:
        raise InfiniteFieldError("brute-force isomorphism search needs a finite field")
    t = A.field.tables()
    src = A.codes()
    target = A2.codes()
    dec = A.field.element_of_code
    for x, y, z, w, L in gl2_lifted(A.field):
        if apply_transform_codes(t, L, src, x, y, z, w) == target:
            return Transform(dec(x), dec(y), dec(z), dec(w))
    return None
