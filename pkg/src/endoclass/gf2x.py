"""Polynomials over GF(2) packed into Python ints.

The polynomial c0 + c1*X + ... + cn*X^n is stored as the integer
c0 + c1*2 + ... + cn*2^n, so bit i carries the coefficient of X^i.
Addition is XOR, 0 is the zero polynomial and 1 the constant one.
Every nonzero polynomial is monic, which keeps gcd results canonical.
"""

from __future__ import annotations


def deg(a: int) -> int:
    """Degree of the polynomial, -1 for the zero polynomial."""
    return a.bit_length() - 1


def mul(a: int, b: int) -> int:
    """Carry-less product of two packed polynomials."""
    if a == 0 or b == 0:
        return 0
    acc = 0
    while b:
        if b & 1:
            acc ^= a
        a <<= 1
        b >>= 1
    return acc


def divmod_(a: int, b: int) -> tuple[int, int]:
    """Quotient and remainder of a by b (b nonzero)."""
    if b == 0:
        raise ZeroDivisionError("polynomial division by zero")
    db = deg(b)
    q = 0
    while True:
        da = deg(a)
        if da < db:
            return q, a
        shift = da - db
        q ^= 1 << shift
        a ^= b << shift


def mod(a: int, b: int) -> int:
    return divmod_(a, b)[1]


def gcd(a: int, b: int) -> int:
    while b:
        a, b = b, mod(a, b)
    return a


def is_square(a: int) -> bool:
    """True iff every exponent with a nonzero coefficient is even."""
    return a & _ODD_MASK(a) == 0


def _ODD_MASK(a: int) -> int:
    # 0b1010...10 wide enough to cover a
    mask = 0
    bit = 2
    while bit <= a:
        mask |= bit
        bit <<= 2
    return mask


def has_odd_term(a: int) -> bool:
    """True iff some X^(2i+1) appears with coefficient 1."""
    return not is_square(a)


def sqrt(a: int) -> int:
    """Square root of a square polynomial (halve every exponent)."""
    r = 0
    i = 0
    while a:
        if a & 1:
            r |= 1 << i
        a >>= 2
        i += 1
    return r


def odd_even_split(a: int) -> tuple[int, int]:
    """Split into (odd part, even part) with odd part = X * s(X)^2."""
    odd = 0
    even = 0
    i = 0
    while a:
        if a & 1:
            if i & 1:
                odd |= 1 << i
            else:
                even |= 1 << i
        a >>= 1
        i += 1
    return odd, even


def to_string(a: int, var: str = "X") -> str:
    """Render as a sum of monomials, highest degree first ("X^3+X+1")."""
    if a == 0:
        return "0"
    terms = []
    for i in range(deg(a), -1, -1):
        if (a >> i) & 1:
            if i == 0:
                terms.append("1")
            elif i == 1:
                terms.append(var)
            else:
                terms.append(f"{var}^{i}")
    return "+".join(terms)
