"""Exact arithmetic for the supported coefficient fields.

Four kinds of field are supported:

  * prime fields F_p for primes p <= 97,
  * extension fields F_{p^k} with p^k <= 256, given by an irreducible
    degree-k modulus over F_p (elements are coefficient tuples
    (c0, ..., c_{k-1}), little-endian, printed as polynomials in w),
  * the rationals Q (elements are reduced `fractions.Fraction`s),
  * the rational function field F2(X) (elements are coprime pairs of
    GF(2)[X] polynomials packed into ints, see `gf2x`).

Finite-field elements are enumerable in a fixed order: code n in
[0, q) maps to the element whose payload digits are the base-p digits
of n, so code 0 is zero, code 1 is one, and the rest follow in
lexicographic payload order.  Hot loops (exhaustive scans, orbit
searches) run on these integer codes through precomputed lookup
tables; the `FieldElement` layer wraps the same payloads for the
public API.

Field spec strings: "F5", "F2^2/x^2+x+1", "Q", "F2(X)".  Prime-power
shorthands like "F4", "F8", "F9" pick the first irreducible modulus in
payload code order.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from . import gf2x

MAX_PRIME = 97
MAX_ORDER = 256
DEFAULT_FACTOR_BOUND = 2**63

KIND_PRIME = "prime"
KIND_EXTENSION = "extension"
KIND_RATIONALS = "rationals"
KIND_RATFUNC_F2 = "rational-functions-over-F2"


class FieldError(ValueError):
    """Invalid field construction, parse failure, or misuse of a field."""


class InfiniteFieldError(FieldError):
    """A finite-field-only operation was called on an infinite field."""


class FieldMismatchError(FieldError):
    """Operands belong to different fields."""


class UndecidedByConfiguration(FieldError):
    """The answer exists but lies beyond a configured computation bound."""


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


# ---------------------------------------------------------------------------
# polynomials over F_p as little-endian coefficient tuples
# ---------------------------------------------------------------------------

def _poly_trim(c: list[int]) -> tuple[int, ...]:
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _poly_mul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_trim(out)


def _poly_divmod(a, b, p):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    q = [0] * max(len(a) - len(b) + 1, 0)
    inv_lead = pow(b[-1], p - 2, p)
    while len(a) >= len(b) and any(a):
        if a[-1] == 0:
            a.pop()
            continue
        shift = len(a) - len(b)
        coef = a[-1] * inv_lead % p
        q[shift] = coef
        for i, bi in enumerate(b):
            a[shift + i] = (a[shift + i] - coef * bi) % p
        a.pop()
    return _poly_trim(q), _poly_trim(a)


def _poly_mod(a, b, p):
    return _poly_divmod(a, b, p)[1]


def _poly_is_irreducible(m, p):
    """Exhaustive factor search: no monic divisor of degree 1..deg/2."""
    k = len(m) - 1
    for d in range(1, k // 2 + 1):
        for code in range(p**d):
            cand = _poly_from_code(code, p, d) + (1,)
            if not _poly_mod(m, cand, p):
                return False
    return True


def _poly_from_code(code: int, p: int, length: int) -> tuple[int, ...]:
    digits = []
    for _ in range(length):
        code, r = divmod(code, p)
        digits.append(r)
    return tuple(digits)


_TERM_RE = re.compile(r"^(\d+)?\s*(?:([a-zA-Z])\s*(?:\^\s*(\d+))?)?$")


def _parse_poly(s: str, p: int) -> tuple[int, ...]:
    """Parse "x^2+x+1" / "2w^3-w+4" style polynomial strings mod p."""
    s = s.replace("ω", "w").strip()
    if not s:
        raise FieldError("empty polynomial string")
    # split into signed terms
    terms = []
    sign, buf = 1, ""
    for ch in s:
        if ch in "+-":
            if buf.strip():
                terms.append((sign, buf))
            elif terms or buf.strip():
                raise FieldError(f"malformed polynomial: {s!r}")
            sign = 1 if ch == "+" else -1
            buf = ""
        else:
            buf += ch
    if not buf.strip():
        raise FieldError(f"malformed polynomial: {s!r}")
    terms.append((sign, buf))

    coeffs: list[int] = []
    varname = None
    for sign, term in terms:
        m = _TERM_RE.match(term.strip())
        if not m or (m.group(1) is None and m.group(2) is None):
            raise FieldError(f"malformed polynomial term: {term!r}")
        coef = int(m.group(1)) if m.group(1) is not None else 1
        if m.group(2) is not None:
            if varname is None:
                varname = m.group(2)
            elif varname != m.group(2):
                raise FieldError(f"mixed variables in polynomial: {s!r}")
            exp = int(m.group(3)) if m.group(3) is not None else 1
        else:
            exp = 0
        if exp >= len(coeffs):
            coeffs.extend([0] * (exp + 1 - len(coeffs)))
        coeffs[exp] = (coeffs[exp] + sign * coef) % p
    return _poly_trim(coeffs)


def _format_poly(coeffs, var: str) -> str:
    if not any(coeffs):
        return "0"
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if not c:
            continue
        if i == 0:
            terms.append(str(c))
        else:
            head = "" if c == 1 else str(c)
            terms.append(f"{head}{var}" if i == 1 else f"{head}{var}^{i}")
    return "+".join(terms)


# ---------------------------------------------------------------------------
# descriptors and elements
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FieldDescriptor:
    """Which field: kind plus (p, k, modulus) where applicable.

    The modulus is a monic degree-k coefficient tuple over F_p,
    little-endian, irreducible (checked at construction time).
    """

    kind: str
    p: int | None = None
    k: int | None = None
    modulus: tuple[int, ...] | None = None

    @staticmethod
    def prime(p: int) -> "FieldDescriptor":
        return FieldDescriptor(KIND_PRIME, p=p)

    @staticmethod
    def extension(p: int, k: int, modulus) -> "FieldDescriptor":
        return FieldDescriptor(KIND_EXTENSION, p=p, k=k, modulus=tuple(modulus))

    @staticmethod
    def rationals() -> "FieldDescriptor":
        return FieldDescriptor(KIND_RATIONALS)

    @staticmethod
    def rational_functions_f2() -> "FieldDescriptor":
        return FieldDescriptor(KIND_RATFUNC_F2)


class FieldElement:
    """A scalar tied to its owning field, in canonical reduced form."""

    __slots__ = ("field", "payload")

    def __init__(self, field: "Field", payload):
        self.field = field
        self.payload = payload

    def _rhs(self, other):
        if isinstance(other, FieldElement):
            if other.field.descriptor != self.field.descriptor:
                raise FieldMismatchError(
                    f"elements of {self.field.spec_string()} and "
                    f"{other.field.spec_string()} cannot be combined")
            return other.payload
        if isinstance(other, int):
            return self.field._from_int_payload(other)
        return None

    def __add__(self, other):
        rhs = self._rhs(other)
        if rhs is None:
            return NotImplemented
        return FieldElement(self.field, self.field._add(self.payload, rhs))

    __radd__ = __add__

    def __sub__(self, other):
        rhs = self._rhs(other)
        if rhs is None:
            return NotImplemented
        return FieldElement(self.field, self.field._sub(self.payload, rhs))

    def __rsub__(self, other):
        rhs = self._rhs(other)
        if rhs is None:
            return NotImplemented
        return FieldElement(self.field, self.field._sub(rhs, self.payload))

    def __mul__(self, other):
        rhs = self._rhs(other)
        if rhs is None:
            return NotImplemented
        return FieldElement(self.field, self.field._mul(self.payload, rhs))

    __rmul__ = __mul__

    def __truediv__(self, other):
        rhs = self._rhs(other)
        if rhs is None:
            return NotImplemented
        return FieldElement(self.field, self.field._mul(self.payload, self.field._inv(rhs)))

    def __rtruediv__(self, other):
        rhs = self._rhs(other)
        if rhs is None:
            return NotImplemented
        return FieldElement(self.field, self.field._mul(rhs, self.field._inv(self.payload)))

    def __neg__(self):
        return FieldElement(self.field, self.field._neg(self.payload))

    def __pow__(self, n: int):
        if n < 0:
            base = self.field._inv(self.payload)
            n = -n
        else:
            base = self.payload
        acc = self.field._from_int_payload(1)
        while n:
            if n & 1:
                acc = self.field._mul(acc, base)
            base = self.field._mul(base, base)
            n >>= 1
        return FieldElement(self.field, acc)

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field._inv(self.payload))

    def is_zero(self) -> bool:
        return self.payload == self.field._from_int_payload(0)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return (self.field.descriptor == other.field.descriptor
                    and self.payload == other.payload)
        if isinstance(other, int):
            return self.payload == self.field._from_int_payload(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field.descriptor, self.payload))

    def __str__(self):
        return self.field.format(self)

    def __repr__(self):
        return f"{self.field.format(self)} @ {self.field.spec_string()}"


class Field:
    """Handle exposing exact arithmetic over one fixed field."""

    descriptor: FieldDescriptor

    # payload-level ops supplied by subclasses:
    #   _add, _sub, _mul, _neg, _inv, _from_int_payload

    def __eq__(self, other):
        return isinstance(other, Field) and self.descriptor == other.descriptor

    def __hash__(self):
        return hash(self.descriptor)

    def __repr__(self):
        return f"Field({self.spec_string()})"

    # -- construction helpers -----------------------------------------------

    def element(self, payload) -> FieldElement:
        return FieldElement(self, payload)

    def zero(self) -> FieldElement:
        return FieldElement(self, self._from_int_payload(0))

    def one(self) -> FieldElement:
        return FieldElement(self, self._from_int_payload(1))

    def from_int(self, n: int) -> FieldElement:
        return FieldElement(self, self._from_int_payload(n))

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        return a.inverse()

    def div(self, a, b):
        return a / b

    # -- structure ----------------------------------------------------------

    @property
    def is_finite(self) -> bool:
        return self.order() is not None

    def order(self) -> int | None:
        raise NotImplementedError

    def characteristic(self) -> int:
        raise NotImplementedError

    def spec_string(self) -> str:
        raise NotImplementedError

    def parse(self, s: str) -> FieldElement:
        raise NotImplementedError

    def format(self, el: FieldElement) -> str:
        raise NotImplementedError

    # -- finite-field coding (overridden by finite kinds) --------------------

    def code_of(self, el: FieldElement) -> int:
        raise InfiniteFieldError(f"{self.spec_string()} is not enumerable")

    def element_of_code(self, code: int) -> FieldElement:
        raise InfiniteFieldError(f"{self.spec_string()} is not enumerable")

    def elements(self) -> list[FieldElement]:
        raise InfiniteFieldError(f"{self.spec_string()} is not enumerable")

    def tables(self) -> "FieldTables":
        raise InfiniteFieldError(f"{self.spec_string()} has no lookup tables")


class FieldTables:
    """Dense lookup tables for one finite field, indexed by element code."""

    __slots__ = ("q", "p", "add", "sub", "mul", "neg", "inv")

    def __init__(self, field: "FiniteFieldBase"):
        q = field.order()
        payloads = [field._payload_of_code(c) for c in range(q)]
        enc = field._code_of_payload
        self.q = q
        self.p = field.characteristic()
        self.add = [[enc(field._add(a, b)) for b in payloads] for a in payloads]
        self.sub = [[enc(field._sub(a, b)) for b in payloads] for a in payloads]
        self.mul = [[enc(field._mul(a, b)) for b in payloads] for a in payloads]
        self.neg = [enc(field._neg(a)) for a in payloads]
        self.inv = [None] + [enc(field._inv(a)) for a in payloads[1:]]


class FiniteFieldBase(Field):
    """Shared coding/enumeration machinery for F_p and F_{p^k}."""

    _tables: FieldTables | None = None

    def order(self) -> int:
        raise NotImplementedError

    def code_of(self, el: FieldElement) -> int:
        return self._code_of_payload(el.payload)

    def element_of_code(self, code: int) -> FieldElement:
        if not 0 <= code < self.order():
            raise FieldError(f"element code {code} out of range for {self.spec_string()}")
        return FieldElement(self, self._payload_of_code(code))

    def elements(self) -> list[FieldElement]:
        return [self.element_of_code(c) for c in range(self.order())]

    def tables(self) -> FieldTables:
        if self._tables is None:
            self._tables = FieldTables(self)
        return self._tables


class PrimeField(FiniteFieldBase):
    """F_p with residue payloads in [0, p)."""

    def __init__(self, p: int):
        self.p = p
        self.descriptor = FieldDescriptor.prime(p)
        self._tables = None

    def order(self):
        return self.p

    def characteristic(self):
        return self.p

    def spec_string(self):
        return f"F{self.p}"

    def _from_int_payload(self, n):
        return n % self.p

    def _add(self, a, b):
        return (a + b) % self.p

    def _sub(self, a, b):
        return (a - b) % self.p

    def _mul(self, a, b):
        return (a * b) % self.p

    def _neg(self, a):
        return -a % self.p

    def _inv(self, a):
        if a == 0:
            raise ZeroDivisionError(f"0 has no inverse in {self.spec_string()}")
        return pow(a, self.p - 2, self.p)

    def _code_of_payload(self, a):
        return a

    def _payload_of_code(self, c):
        return c

    def parse(self, s):
        try:
            return self.from_int(int(s.strip()))
        except ValueError:
            raise FieldError(f"cannot parse {s!r} as an element of {self.spec_string()}") from None

    def format(self, el):
        return str(el.payload)


class ExtensionField(FiniteFieldBase):
    """F_{p^k} as F_p[w]/(modulus); payloads are length-k coefficient tuples."""

    def __init__(self, p: int, k: int, modulus: tuple[int, ...]):
        self.p = p
        self.k = k
        self.modulus = modulus
        self.descriptor = FieldDescriptor.extension(p, k, modulus)
        self._tables = None

    def order(self):
        return self.p**self.k

    def characteristic(self):
        return self.p

    def spec_string(self):
        return f"F{self.p}^{self.k}/{_format_poly(self.modulus, 'x')}"

    def generator(self) -> FieldElement:
        """The class of w, i.e. the adjoined root of the modulus."""
        return self.element(self._pad((0, 1)))

    def _pad(self, coeffs) -> tuple[int, ...]:
        return tuple(coeffs) + (0,) * (self.k - len(coeffs))

    def _from_int_payload(self, n):
        return self._pad((n % self.p,) if n % self.p else ())

    def _add(self, a, b):
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def _sub(self, a, b):
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def _neg(self, a):
        p = self.p
        return tuple(-x % p for x in a)

    def _mul(self, a, b):
        prod = _poly_mul(_poly_trim(list(a)), _poly_trim(list(b)), self.p)
        return self._pad(_poly_mod(prod, self.modulus, self.p))

    def _inv(self, a):
        at = _poly_trim(list(a))
        if not at:
            raise ZeroDivisionError(f"0 has no inverse in {self.spec_string()}")
        # extended Euclid in F_p[x] against the modulus
        p = self.p
        r0, r1 = self.modulus, at
        s0, s1 = (), (1,)
        while r1:
            q, r = _poly_divmod(r0, r1, p)
            qs1 = _poly_mul(q, s1, p)
            width = max(len(s0), len(qs1))
            s_next = _poly_trim([
                ((s0[i] if i < len(s0) else 0) - (qs1[i] if i < len(qs1) else 0)) % p
                for i in range(width)])
            r0, r1, s0, s1 = r1, r, s1, s_next
        # r0 is the gcd, a nonzero constant since the modulus is irreducible
        c_inv = pow(r0[0], p - 2, p)
        return self._pad(tuple(x * c_inv % p for x in s0))

    def _code_of_payload(self, a):
        code = 0
        for c in reversed(a):
            code = code * self.p + c
        return code

    def _payload_of_code(self, code):
        return _poly_from_code(code, self.p, self.k)

    def parse(self, s):
        coeffs = _parse_poly(s, self.p)
        if len(coeffs) > self.k:
            coeffs = _poly_mod(coeffs, self.modulus, self.p)
        return self.element(self._pad(coeffs))

    def format(self, el):
        return _format_poly(el.payload, "w")


class RationalField(Field):
    """Q with reduced Fraction payloads."""

    def __init__(self):
        self.descriptor = FieldDescriptor.rationals()

    def order(self):
        return None

    def characteristic(self):
        return 0

    def spec_string(self):
        return "Q"

    def _from_int_payload(self, n):
        return Fraction(n)

    def _add(self, a, b):
        return a + b

    def _sub(self, a, b):
        return a - b

    def _mul(self, a, b):
        return a * b

    def _neg(self, a):
        return -a

    def _inv(self, a):
        if a == 0:
            raise ZeroDivisionError("0 has no inverse in Q")
        return 1 / a

    def parse(self, s):
        try:
            return self.element(Fraction(s.strip()))
        except (ValueError, ZeroDivisionError):
            raise FieldError(f"cannot parse {s!r} as a rational") from None

    def format(self, el):
        return str(el.payload)


class RationalFunctionField2(Field):
    """F2(X): coprime pairs (numerator, denominator) of packed GF(2)[X] polys."""

    def __init__(self):
        self.descriptor = FieldDescriptor.rational_functions_f2()

    def order(self):
        return None

    def characteristic(self):
        return 2

    def spec_string(self):
        return "F2(X)"

    @staticmethod
    def _reduce(num: int, den: int) -> tuple[int, int]:
        if den == 0:
            raise ZeroDivisionError("zero denominator in F2(X)")
        if num == 0:
            return (0, 1)
        g = gf2x.gcd(num, den)
        if g != 1:
            num = gf2x.divmod_(num, g)[0]
            den = gf2x.divmod_(den, g)[0]
        return (num, den)

    def from_polys(self, num: int, den: int = 1) -> FieldElement:
        return self.element(self._reduce(num, den))

    def _from_int_payload(self, n):
        return (n % 2, 1)

    def _add(self, a, b):
        return self._reduce(gf2x.mul(a[0], b[1]) ^ gf2x.mul(b[0], a[1]),
                            gf2x.mul(a[1], b[1]))

    _sub = _add  # characteristic 2

    def _mul(self, a, b):
        return self._reduce(gf2x.mul(a[0], b[0]), gf2x.mul(a[1], b[1]))

    def _neg(self, a):
        return a

    def _inv(self, a):
        if a[0] == 0:
            raise ZeroDivisionError("0 has no inverse in F2(X)")
        return (a[1], a[0])

    def parse(self, s):
        s = s.strip()
        if "/" in s:
            top, _, bot = s.partition("/")
            num = self._parse_poly_part(top)
            den = self._parse_poly_part(bot)
            if den == 0:
                raise FieldError("zero denominator in F2(X) element")
            return self.element(self._reduce(num, den))
        return self.element(self._reduce(self._parse_poly_part(s), 1))

    @staticmethod
    def _parse_poly_part(s: str) -> int:
        s = s.strip()
        if s.startswith("(") and s.endswith(")"):
            s = s[1:-1].strip()
        coeffs = _parse_poly(s, 2)
        packed = 0
        for i, c in enumerate(coeffs):
            packed |= c << i
        return packed

    def format(self, el):
        num, den = el.payload
        if den == 1:
            return gf2x.to_string(num)
        return f"({gf2x.to_string(num)})/({gf2x.to_string(den)})"


# ---------------------------------------------------------------------------
# construction and module-level operations
# ---------------------------------------------------------------------------

def default_modulus(p: int, k: int) -> tuple[int, ...]:
    """First monic irreducible degree-k modulus in payload code order."""
    for code in range(p**k):
        cand = _poly_from_code(code, p, k) + (1,)
        if _poly_is_irreducible(cand, p):
            return cand
    raise FieldError(f"no irreducible modulus of degree {k} over F{p}")  # pragma: no cover


def field_make(spec: FieldDescriptor) -> Field:
    """Build a field handle, validating every descriptor invariant."""
    if spec.kind == KIND_PRIME:
        p = spec.p
        if not isinstance(p, int) or not _is_prime(p):
            raise FieldError(f"{p} is not prime")
        if p > MAX_PRIME:
            raise FieldError(f"prime fields are supported up to p = {MAX_PRIME}, got {p}")
        return PrimeField(p)
    if spec.kind == KIND_EXTENSION:
        p, k, modulus = spec.p, spec.k, spec.modulus
        if not isinstance(p, int) or not _is_prime(p):
            raise FieldError(f"{p} is not prime")
        if not isinstance(k, int) or k < 1:
            raise FieldError(f"extension degree must be >= 1, got {k}")
        if k > 8:
            raise FieldError(f"extension degrees are supported up to 8, got {k}")
        if p**k > MAX_ORDER:
            raise FieldError(f"extension fields are supported up to order {MAX_ORDER}, got {p**k}")
        modulus = _poly_trim(list(modulus))
        if len(modulus) != k + 1:
            raise FieldError(f"modulus must have degree {k}")
        if modulus[-1] != 1:
            lead_inv = pow(modulus[-1], p - 2, p)
            modulus = tuple(c * lead_inv % p for c in modulus)
        if not all(0 <= c < p for c in modulus):
            modulus = tuple(c % p for c in modulus)
        if not _poly_is_irreducible(modulus, p):
            raise FieldError(f"modulus {_format_poly(modulus, 'x')} is reducible over F{p}")
        return ExtensionField(p, k, modulus)
    if spec.kind == KIND_RATIONALS:
        return RationalField()
    if spec.kind == KIND_RATFUNC_F2:
        return RationalFunctionField2()
    raise FieldError(f"unknown field kind {spec.kind!r}")


_SPEC_RE = re.compile(r"^F(\d+)(?:\^(\d+))?(?:/(.+))?$")


def field_from_spec(s: str) -> Field:
    """Parse "F5", "F2^2/x^2+x+1", "F9", "Q" or "F2(X)" into a field."""
    s = s.strip()
    if s == "Q":
        return field_make(FieldDescriptor.rationals())
    if s == "F2(X)":
        return field_make(FieldDescriptor.rational_functions_f2())
    m = _SPEC_RE.match(s)
    if not m:
        raise FieldError(f"unrecognized field spec {s!r}")
    n = int(m.group(1))
    if m.group(2) is not None:
        p, k = n, int(m.group(2))
        if not _is_prime(p):
            raise FieldError(f"{p} is not prime")
        if k == 1 and m.group(3) is None:
            return field_make(FieldDescriptor.prime(p))
        if k < 1 or p**k > MAX_ORDER:
            raise FieldError(f"unsupported extension field order {p}^{k}")
        if m.group(3) is not None:
            modulus = _parse_poly(m.group(3), p)
        else:
            modulus = default_modulus(p, k)
        return field_make(FieldDescriptor.extension(p, k, modulus))
    if m.group(3) is not None:
        raise FieldError(f"modulus given without an extension degree in {s!r}")
    if _is_prime(n):
        return field_make(FieldDescriptor.prime(n))
    # prime-power shorthand: F4, F8, F9, ...
    for p in range(2, isqrt(n) + 1):
        if _is_prime(p):
            k, m_ = 0, n
            while m_ % p == 0:
                m_ //= p
                k += 1
            if m_ == 1 and k >= 2:
                return field_make(FieldDescriptor.extension(p, k, default_modulus(p, k)))
    raise FieldError(f"{n} is neither prime nor a prime power")


def enumerate_elements(field: Field) -> list[FieldElement]:
    """All q elements in code order: 0, 1, then lexicographic payloads."""
    if not field.is_finite:
        raise InfiniteFieldError(f"cannot enumerate {field.spec_string()}")
    return field.elements()


def _squarefree_part(n: int) -> int:
    part = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            if e & 1:
                part *= d
        d += 1 if d == 2 else 2
    return part * n


def is_square(field: Field, t: FieldElement,
              factor_bound: int = DEFAULT_FACTOR_BOUND) -> tuple[bool, FieldElement | None]:
    """Decide t in (K)^2, with a witness s (s*s = t) whenever decidable.

    Finite fields of odd characteristic use the (q-1)/2 power test and
    return the enumeration-first root; characteristic 2 is always a yes
    (squaring is bijective) with the root obtained by repeated squaring.
    Over Q the decision reduces to squarefree parts of the numerator and
    denominator (trial division); inputs whose reduced numerator or
    denominator exceeds `factor_bound` raise UndecidedByConfiguration
    instead of guessing.  Over F2(X) both parts must be squares.
    """
    if t.field != field:
        raise FieldMismatchError("element does not belong to the given field")
    if field.is_finite:
        q = field.order()
        if t.is_zero():
            return True, field.zero()
        if field.characteristic() == 2:
            s = t
            k = q.bit_length() - 1  # q = 2^k
            for _ in range(k - 1):
                s = s * s
            return True, s
        if t ** ((q - 1) // 2) != field.one():
            return False, None
        for code in range(q):
            s = field.element_of_code(code)
            if s * s == t:
                return True, s
        raise AssertionError("power test promised a root")  # pragma: no cover
    if isinstance(field, RationalField):
        fr: Fraction = t.payload
        if fr == 0:
            return True, field.zero()
        if fr < 0:
            return False, None
        if fr.numerator > factor_bound or fr.denominator > factor_bound:
            raise UndecidedByConfiguration(
                f"undecided-by-configuration: |{fr}| exceeds the factorization bound {factor_bound}")
        if _squarefree_part(fr.numerator) == 1 and _squarefree_part(fr.denominator) == 1:
            return True, field.element(Fraction(isqrt(fr.numerator), isqrt(fr.denominator)))
        return False, None
    if isinstance(field, RationalFunctionField2):
        num, den = t.payload
        if num == 0:
            return True, field.zero()
        if gf2x.is_square(num) and gf2x.is_square(den):
            return True, field.element((gf2x.sqrt(num), gf2x.sqrt(den)))
        return False, None
    raise FieldError(f"is_square is not implemented for {field.spec_string()}")  # pragma: no cover
