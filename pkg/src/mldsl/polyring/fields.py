"""Exact coefficient fields: the rationals and large prime fields."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

DEFAULT_PRIME = 2147483647  # 2^31 - 1

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for n < 3.3e24."""
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


class FieldError(ValueError):
    pass


class RationalField:
    """The field of rational numbers, backed by :class:`fractions.Fraction`."""

    modulus = 0
    spec = "q"

    def __call__(self, x) -> Fraction:
        if isinstance(x, Fraction):
            return x
        if isinstance(x, (int, Rational)):
            return Fraction(x)
        if isinstance(x, str):
            return Fraction(x)
        raise FieldError(f"cannot convert {x!r} to a rational")

    zero = Fraction(0)
    one = Fraction(1)

    def inv(self, x: Fraction) -> Fraction:
        if not x:
            raise ZeroDivisionError("inverse of zero")
        return 1 / x

    def reduce(self, x: Fraction) -> Fraction:
        return x

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


class PrimeField:
    """Integers modulo a large prime, elements stored as ints in ``[0, p)``."""

    def __init__(self, modulus: int = DEFAULT_PRIME):
        modulus = int(modulus)
        if modulus <= 2**20 or not is_prime(modulus):
            raise FieldError(f"modulus must be a prime > 2^20, got {modulus}")
        self.modulus = modulus
        self.zero = 0
        self.one = 1

    @property
    def spec(self) -> str:
        return f"fp:{self.modulus}"

    def __call__(self, x) -> int:
        p = self.modulus
        if isinstance(x, int):
            return x % p
        if isinstance(x, str):
            x = Fraction(x)
        if isinstance(x, Rational):
            num, den = x.numerator, x.denominator
            if den % p == 0:
                raise ZeroDivisionError(f"denominator {den} vanishes mod {p}")
            return num * pow(den, -1, p) % p
        raise FieldError(f"cannot convert {x!r} to GF({p})")

    def inv(self, x: int) -> int:
        if not x % self.modulus:
            raise ZeroDivisionError("inverse of zero")
        return pow(x, -1, self.modulus)

    def reduce(self, x: int) -> int:
        return x % self.modulus

    def signed(self, x: int) -> int:
        """Representative of ``x`` in the symmetric range around zero."""
        return x - self.modulus if x > self.modulus // 2 else x

    def reconstruct(self, x: int) -> Fraction | None:
        """Rational reconstruction of ``x`` with numerator and denominator
        bounded by ``sqrt(p/2)``; ``None`` when no such fraction exists."""
        p = self.modulus
        bound = int((p // 2) ** 0.5)
        r0, r1 = p, x % p
        s0, s1 = 0, 1
        while r1 > bound:
            q = r0 // r1
            r0, r1 = r1, r0 - q * r1
            s0, s1 = s1, s0 - q * s1
        if s1 == 0 or abs(s1) > bound:
            return None
        return Fraction(r1, s1)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.modulus == self.modulus

    def __hash__(self):
        return hash(("GF", self.modulus))

    def __repr__(self):
        return f"GF({self.modulus})"


QQ = RationalField()


def GF(p: int = DEFAULT_PRIME) -> PrimeField:
    return PrimeField(p)


def field_from_spec(spec: str) -> RationalField | PrimeField:
    """Parse ``q`` / ``qq`` / ``fp`` / ``fp:<prime>``."""
    s = spec.strip().lower()
    if s in ("q", "qq", "rational"):
        return QQ
    if s == "fp":
        return PrimeField(DEFAULT_PRIME)
    if s.startswith("fp:"):
        try:
            p = int(s[3:])
        except ValueError:
            raise FieldError(f"bad prime in field spec {spec!r}") from None
        return PrimeField(p)
    raise FieldError(f"unknown field {spec!r}; expected q or fp:<prime>")
