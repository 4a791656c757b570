"""Polynomial rings with labelled variable blocks."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .fields import QQ, PrimeField, RationalField
from .orders import GrevLex, MonomialOrder

ROLES = ("auxiliary", "primal-p", "dual-b", "data-u", "generic")


@dataclass(frozen=True)
class Block:
    role: str
    variables: tuple[str, ...]


class RingError(ValueError):
    pass


class PolyRing:
    """An ordered set of variable names, partitioned into blocks, over a field."""

    def __init__(
        self,
        variables: Sequence[str],
        field: RationalField | PrimeField = QQ,
        blocks: Sequence[Block] | None = None,
        order: MonomialOrder = GrevLex(),
    ):
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise RingError(f"duplicate variable names in {variables}")
        if blocks is None:
            blocks = (Block("generic", variables),) if variables else ()
        blocks = tuple(blocks)
        flat = tuple(v for b in blocks for v in b.variables)
        if flat != variables:
            raise RingError("blocks must be consecutive and cover all variables")
        for i, b in enumerate(blocks):
            if b.role not in ROLES:
                raise RingError(f"unknown block role {b.role!r}")
            if b.role == "auxiliary" and i != 0:
                raise RingError("the auxiliary block must come first")
        self.variables = variables
        self.field = field
        self.blocks = blocks
        self.order = order
        self.nvars = len(variables)
        self._index = {v: i for i, v in enumerate(variables)}

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise RingError(f"unknown variable {name!r}") from None

    def __contains__(self, name) -> bool:
        return name in self._index

    def block(self, role: str) -> tuple[str, ...]:
        for b in self.blocks:
            if b.role == role:
                return b.variables
        raise RingError(f"ring has no {role!r} block")

    def _key(self):
        return (self.variables, self.blocks, self.field)

    def __eq__(self, other):
        return isinstance(other, PolyRing) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"PolyRing({', '.join(self.variables)}; {self.field!r})"

    # constructors -------------------------------------------------------

    def zero(self):
        from .poly import Polynomial

        return Polynomial(self, {})

    def one(self):
        return self.constant(1)

    def constant(self, c):
        from .poly import Polynomial

        return Polynomial(self, {(0,) * self.nvars: c})

    def var(self, name: str):
        from .poly import Polynomial

        i = self.index(name)
        e = tuple(1 if j == i else 0 for j in range(self.nvars))
        return Polynomial(self, {e: 1})

    def gens(self):
        return tuple(self.var(v) for v in self.variables)

    def __call__(self, src):
        """Coerce a constant, a polynomial of a compatible ring, or parse a string."""
        from .poly import Polynomial

        if isinstance(src, Polynomial):
            return src.rebase(self)
        if isinstance(src, str):
            from ..textio import parse_polynomial

            return parse_polynomial(src, self)
        return self.constant(src)

    # derived rings ------------------------------------------------------

    def with_field(self, field) -> "PolyRing":
        return PolyRing(self.variables, field, self.blocks, self.order)

    def subring(self, names: Iterable[str]) -> "PolyRing":
        """The ring on ``names`` (kept in this ring's variable order)."""
        keep = set(names)
        for n in keep:
            self.index(n)
        blocks = []
        for b in self.blocks:
            vs = tuple(v for v in b.variables if v in keep)
            if vs:
                blocks.append(Block(b.role, vs))
        return PolyRing(tuple(v for v in self.variables if v in keep), self.field, blocks, self.order)

    def without(self, names: Iterable[str]) -> "PolyRing":
        drop = set(names)
        return self.subring(v for v in self.variables if v not in drop)

    def fresh_name(self, stem: str = "t") -> str:
        name, k = stem, 0
        while name in self._index:
            k += 1
            name = f"{stem}{k}"
        return name

    def with_auxiliary(self, names: Sequence[str]) -> "PolyRing":
        """Prepend ``names`` as the auxiliary block."""
        if self.blocks and self.blocks[0].role == "auxiliary":
            raise RingError("ring already has an auxiliary block")
        return PolyRing(tuple(names) + self.variables, self.field,
                        (Block("auxiliary", tuple(names)),) + self.blocks, self.order)

    def reordered(self, names: Sequence[str]) -> "PolyRing":
        """Same variables in a new order, as a single generic block."""
        names = tuple(names)
        if sorted(names) != sorted(self.variables):
            raise RingError("reordering must be a permutation of the variables")
        return PolyRing(names, self.field, None, self.order)
