"""Monomial orders.

Each order exposes a tuple ``key`` (larger key = larger monomial) used by the
public polynomial layer, and a :class:`PackedLayout` used by the Groebner
engine, where a monomial becomes a single int supporting multiplication by
addition, divisibility by a borrow test, and comparison by an additive key.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Tuple

Monomial = Tuple[int, ...]

FIELD_BITS = 12
MAX_EXPONENT = (1 << (FIELD_BITS - 1)) - 1


class ExponentOverflow(ArithmeticError):
    pass


def _grevlex_key(e: Sequence[int]):
    return (sum(e), tuple(-x for x in reversed(e)))


class MonomialOrder:
    name = "order"

    def key(self, e: Monomial):
        raise NotImplementedError

    def fields(self, n: int) -> list[tuple[str, tuple[int, ...], int]]:
        """Packed fields, most significant first: (kind, var indices, sign)."""
        raise NotImplementedError

    def layout(self, n: int) -> "PackedLayout":
        return PackedLayout(self.fields(n))


@dataclass(frozen=True)
class Lex(MonomialOrder):
    name = "lex"

    def key(self, e):
        return tuple(e)

    def fields(self, n):
        return [("var", (i,), 1) for i in range(n)]

    def __repr__(self):
        return "lex"


@dataclass(frozen=True)
class GrevLex(MonomialOrder):
    name = "grevlex"

    def key(self, e):
        return _grevlex_key(e)

    def fields(self, n):
        return [("deg", tuple(range(n)), 1)] + [("var", (i,), -1) for i in reversed(range(n))]

    def __repr__(self):
        return "grevlex"


@dataclass(frozen=True)
class BlockElim(MonomialOrder):
    """Elimination order for the first ``k`` variables.

    Compares the degree in the first ``k`` variables, then ``inner`` on the
    first ``k``, then ``inner`` on the rest.
    """

    k: int
    inner: MonomialOrder = GrevLex()

    name = "block"

    def key(self, e):
        head, tail = e[: self.k], e[self.k :]
        return (sum(head), self.inner.key(head), self.inner.key(tail))

    def fields(self, n):
        k = self.k
        if not 0 <= k <= n:
            raise ValueError(f"block size {k} outside 0..{n}")
        head = [("deg", tuple(range(k)), 1)]
        for kind, idx, sign in self.inner.fields(k):
            head.append((kind, idx, sign))
        tail = [(kind, tuple(i + k for i in idx), sign) for kind, idx, sign in self.inner.fields(n - k)]
        return head + tail

    def __repr__(self):
        return f"block({self.k},{self.inner!r})"


def monomial_cmp(a: Monomial, b: Monomial, order: MonomialOrder) -> int:
    """Return -1, 0 or 1 as ``a`` is less than, equal to, or greater than ``b``."""
    if len(a) != len(b):
        raise ValueError("monomials from different rings")
    ka, kb = order.key(a), order.key(b)
    return (ka > kb) - (ka < kb)


class PackedLayout:
    """Pack exponent vectors into ints for a fixed order and variable count.

    Every field is ``FIELD_BITS`` wide with its top bit reserved as a guard,
    so ``a | b`` iff ``(b - a) & guard == 0``.  The comparison key is
    ``E - 2 * (E & negmask)``, which is additive in ``E``.
    """

    def __init__(self, fields):
        self.fields = fields
        nf = len(fields)
        self.shifts = [FIELD_BITS * (nf - 1 - i) for i in range(nf)]
        self.guard = 0
        self.negmask = 0
        full = (1 << FIELD_BITS) - 1
        for (kind, idx, sign), sh in zip(fields, self.shifts):
            self.guard |= 1 << (sh + FIELD_BITS - 1)
            if sign < 0:
                self.negmask |= full << sh
        # one var field per variable, used for unpacking
        self._var_shift = {}
        for (kind, idx, sign), sh in zip(fields, self.shifts):
            if kind == "var":
                self._var_shift[idx[0]] = sh
        self.nvars = len(self._var_shift)
        self._unit = {}
        for v in range(self.nvars):
            self._unit[v] = self.pack(tuple(1 if i == v else 0 for i in range(self.nvars)))

    def pack(self, e: Sequence[int]) -> int:
        out = 0
        for (kind, idx, _sign), sh in zip(self.fields, self.shifts):
            val = e[idx[0]] if kind == "var" else sum(e[i] for i in idx)
            if val > MAX_EXPONENT:
                raise ExponentOverflow(f"exponent {val} exceeds {MAX_EXPONENT}")
            out |= val << sh
        return out

    def unpack(self, E: int) -> Monomial:
        mask = (1 << FIELD_BITS) - 1
        return tuple((E >> self._var_shift[i]) & mask for i in range(self.nvars))

    def key(self, E: int) -> int:
        return E - 2 * (E & self.negmask)

    def exponent(self, E: int, v: int) -> int:
        return (E >> self._var_shift[v]) & ((1 << FIELD_BITS) - 1)

    def unit(self, v: int) -> int:
        return self._unit[v]

    def lcm(self, a: int, b: int) -> int:
        ea, eb = self.unpack(a), self.unpack(b)
        return self.pack(tuple(max(x, y) for x, y in zip(ea, eb)))

    def divides(self, a: int, b: int) -> bool:
        return not (b - a) & self.guard

    def coprime(self, a: int, b: int) -> bool:
        ea, eb = self.unpack(a), self.unpack(b)
        return not any(x and y for x, y in zip(ea, eb))

    def overflowed(self, E: int) -> bool:
        return bool(E & self.guard)
