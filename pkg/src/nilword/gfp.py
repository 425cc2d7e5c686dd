"""Arithmetic in the prime field F_p for an odd prime p.

Field elements are canonical Python ints in [0, p); a PrimeField instance is
just the modulus plus a method namespace. Everything here is exact.
"""

from __future__ import annotations

# deterministic Miller-Rabin witnesses for n < 3.3 * 10^24
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

MAX_MODULUS = 2**31


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class PrimeField:
    """F_p for an odd prime p with 3 <= p <= 2^31."""

    __slots__ = ("p",)

    def __init__(self, p: int):
        if not isinstance(p, int) or isinstance(p, bool):
            raise TypeError(f"modulus must be an int, got {type(p).__name__}")
        if p < 3 or p > MAX_MODULUS or p % 2 == 0 or not is_prime(p):
            raise ValueError(f"modulus must be an odd prime in [3, 2^31], got {p}")
        self.p = p

    def __repr__(self) -> str:
        return f"PrimeField({self.p})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("PrimeField", self.p))

    def element(self, a: int) -> int:
        """Canonical representative of a in [0, p)."""
        return a % self.p

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.p

    def neg(self, a: int) -> int:
        return -a % self.p

    def inv(self, a: int) -> int:
        """Multiplicative inverse; extended-Euclid based via pow(a, -1, p)."""
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("0 has no inverse in F_p")
        return pow(a, -1, self.p)

    def div(self, a: int, b: int) -> int:
        return a * self.inv(b) % self.p

    def elements(self) -> range:
        return range(self.p)

    def units(self) -> range:
        return range(1, self.p)

    def is_square(self, a: int) -> bool:
        """Euler criterion; 0 counts as a square."""
        a %= self.p
        return a == 0 or pow(a, (self.p - 1) // 2, self.p) == 1

    def find_nonsquare(self) -> int:
        """Smallest positive quadratic non-residue. Deterministic in p."""
        for a in range(2, self.p):
            if not self.is_square(a):
                return a
        raise AssertionError("no non-residue found; modulus is not an odd prime")

    def sqrt(self, a: int) -> int | None:
        """A square root of a, or None when a is a non-residue.

        Returns the Tonelli-Shanks root; the other root is its negative.
        """
        p = self.p
        a %= p
        if a == 0:
            return 0
        if not self.is_square(a):
            return None
        if p % 4 == 3:
            return pow(a, (p + 1) // 4, p)
        q, s = p - 1, 0
        while q % 2 == 0:
            q //= 2
            s += 1
        z = self.find_nonsquare()
        m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
        while t != 1:
            i, t2 = 0, t
            while t2 != 1:
                t2 = t2 * t2 % p
                i += 1
            b = pow(c, 1 << (m - i - 1), p)
            m, c = i, b * b % p
            t, r = t * c % p, r * b % p
        return r

    def solve_quadratic(self, a: int, b: int, c: int) -> set[int]:
        """Exact root set of a*t^2 + b*t + c over F_p.

        Degrades to the linear equation when a = 0; the identically zero
        equation is rejected rather than reported as "all of F_p".
        """
        p = self.p
        a, b, c = a % p, b % p, c % p
        if a == 0 and b == 0 and c == 0:
            raise ValueError("identically zero equation has every element as a root")
        if a == 0:
            if b == 0:
                return set()
            return {-c * self.inv(b) % p}
        disc = (b * b - 4 * a * c) % p
        s = self.sqrt(disc)
        if s is None:
            return set()
        half = self.inv(2 * a)
        return {(-b + s) * half % p, (-b - s) * half % p}
