"""Two exactly-represented Boolean algebras.

* The finite atomic algebra with ``k`` atoms.  Elements are joins of atoms
  and are stored as ``k``-bit masks, so every lattice operation is a single
  integer operation.  Atom ``i`` corresponds to bit ``i`` and to position
  ``i`` (counted from the left) in the text literal, e.g. ``"101"``.

* The algebra of finite and cofinite subsets of the naturals.  Elements are
  stored as a finite support set plus a tag saying whether the element is
  that finite set or its complement.  This algebra is not complete: an
  infinite, co-infinite set of naturals is neither finite nor cofinite, so
  some bounded families have no least upper bound inside the algebra.

All operations are exact; there is no floating point anywhere.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import StructureError, UnsupportedOperationError

FINITE_ATOMIC = "finite-atomic"
FINITE_COFINITE = "finite-cofinite"

_FINCOF_LITERAL = re.compile(r"^(fin|cof)\{(\d+(?:,\d+)*)?\}$")


@dataclass(frozen=True)
class Algebra:
    """A handle identifying one of the two supported algebras.

    Two handles with the same kind (and atom count) are interchangeable;
    elements built from either compare equal.
    """

    kind: str
    atom_count: int | None = None

    def __post_init__(self):
        if self.kind == FINITE_ATOMIC:
            if not isinstance(self.atom_count, int) or self.atom_count < 1:
                raise StructureError("a finite atomic algebra needs a positive atom count")
        elif self.kind == FINITE_COFINITE:
            if self.atom_count is not None:
                raise StructureError("the finite-cofinite algebra has no atom count")
        else:
            raise StructureError(f"unknown algebra kind: {self.kind!r}")

    # -- element constructors -------------------------------------------

    @property
    def zero(self) -> "Element":
        if self.kind == FINITE_ATOMIC:
            return BitsElement(self, 0)
        return SetElement(self, False, frozenset())

    @property
    def one(self) -> "Element":
        if self.kind == FINITE_ATOMIC:
            return BitsElement(self, (1 << self.atom_count) - 1)
        return SetElement(self, True, frozenset())

    def element(self, bits: int) -> "Element":
        """Finite atomic element from a bit mask (bit i = atom i)."""
        if self.kind != FINITE_ATOMIC:
            raise UnsupportedOperationError("bit masks only describe finite atomic elements")
        if not 0 <= bits < (1 << self.atom_count):
            raise StructureError(f"bit mask {bits} out of range for {self.atom_count} atoms")
        return BitsElement(self, bits)

    def _make(self, bits: int) -> "BitsElement":
        # Internal fast path; callers guarantee the range.
        return BitsElement(self, bits)

    def atom(self, index: int) -> "Element":
        if self.kind != FINITE_ATOMIC:
            raise UnsupportedOperationError("the finite-cofinite algebra is atomless at the top: "
                                            "use fin({n}) for singletons")
        if not 0 <= index < self.atom_count:
            raise StructureError(f"atom index {index} out of range")
        return BitsElement(self, 1 << index)

    def fin(self, support: Iterable[int]) -> "Element":
        """The finite set with the given support."""
        if self.kind != FINITE_COFINITE:
            raise UnsupportedOperationError("fin/cof elements live in the finite-cofinite algebra")
        return SetElement(self, False, _check_support(support))

    def cof(self, support: Iterable[int]) -> "Element":
        """The complement of the finite set with the given support."""
        if self.kind != FINITE_COFINITE:
            raise UnsupportedOperationError("fin/cof elements live in the finite-cofinite algebra")
        return SetElement(self, True, _check_support(support))

    # -- literals ---------------------------------------------------------

    def parse(self, literal: str) -> "Element":
        """Parse an element literal.

        Finite atomic: a string of 0/1 characters, one per atom, leftmost
        character is atom 0, e.g. ``"101"``.  Finite-cofinite: ``fin{...}``
        or ``cof{...}`` with ascending comma-separated naturals and no
        spaces, e.g. ``fin{1,3}`` or ``cof{}``.
        """
        if self.kind == FINITE_ATOMIC:
            if len(literal) != self.atom_count or any(c not in "01" for c in literal):
                raise StructureError(f"bad element literal {literal!r} "
                                     f"for {self.atom_count} atoms")
            bits = 0
            for i, c in enumerate(literal):
                if c == "1":
                    bits |= 1 << i
            return BitsElement(self, bits)
        m = _FINCOF_LITERAL.match(literal)
        if m is None:
            raise StructureError(f"bad element literal {literal!r} for the finite-cofinite algebra")
        body = m.group(2)
        values = [int(v) for v in body.split(",")] if body else []
        if any(b >= a for a, b in zip(values[1:], values)):
            raise StructureError(f"literal support must be strictly ascending: {literal!r}")
        return SetElement(self, m.group(1) == "cof", frozenset(values))

    def elements(self) -> Iterator["Element"]:
        """All elements, in bit-mask order (finite atomic only)."""
        if self.kind != FINITE_ATOMIC:
            raise UnsupportedOperationError("cannot enumerate the finite-cofinite algebra")
        for bits in range(1 << self.atom_count):
            yield BitsElement(self, bits)


def atomic_algebra(atom_count: int) -> Algebra:
    return Algebra(FINITE_ATOMIC, atom_count)


def fincof_algebra() -> Algebra:
    return Algebra(FINITE_COFINITE)


def _check_support(values: Iterable[int]) -> frozenset[int]:
    support = frozenset(values)
    for v in support:
        if not isinstance(v, int) or v < 0:
            raise StructureError(f"supports contain naturals only, got {v!r}")
    return support


class Element:
    """Common interface of elements of either algebra."""

    __slots__ = ()

    algebra: Algebra

    @property
    def is_zero(self) -> bool:
        return self == self.algebra.zero

    @property
    def literal(self) -> str:
        raise NotImplementedError

    def sort_key(self):
        raise NotImplementedError

    def __repr__(self):
        return f"<{self.literal}>"


def _same(a: Element, b: Element):
    if a.algebra is not b.algebra and a.algebra != b.algebra:
        raise StructureError("operands belong to different algebras")


class BitsElement(Element):
    """Element of a finite atomic algebra, stored as a bit mask."""

    __slots__ = ("algebra", "bits")

    def __init__(self, algebra: Algebra, bits: int):
        self.algebra = algebra
        self.bits = bits

    def __eq__(self, other):
        return (isinstance(other, BitsElement)
                and other.bits == self.bits and other.algebra == self.algebra)

    def __hash__(self):
        return hash((self.algebra.atom_count, self.bits))

    def __and__(self, other):
        _same(self, other)
        return BitsElement(self.algebra, self.bits & other.bits)

    def __or__(self, other):
        _same(self, other)
        return BitsElement(self.algebra, self.bits | other.bits)

    def __xor__(self, other):
        _same(self, other)
        return BitsElement(self.algebra, self.bits ^ other.bits)

    def __sub__(self, other):
        _same(self, other)
        return BitsElement(self.algebra, self.bits & ~other.bits)

    def __invert__(self):
        return BitsElement(self.algebra, self.bits ^ ((1 << self.algebra.atom_count) - 1))

    def __le__(self, other):
        _same(self, other)
        return self.bits & ~other.bits == 0

    @property
    def literal(self) -> str:
        return "".join("1" if self.bits >> i & 1 else "0"
                       for i in range(self.algebra.atom_count))

    def sort_key(self):
        return self.literal


class SetElement(Element):
    """Finite or cofinite set of naturals, stored by its finite support."""

    __slots__ = ("algebra", "cofinite", "support")

    def __init__(self, algebra: Algebra, cofinite: bool, support: frozenset[int]):
        self.algebra = algebra
        self.cofinite = cofinite
        self.support = support

    def __eq__(self, other):
        return (isinstance(other, SetElement)
                and other.cofinite == self.cofinite and other.support == self.support)

    def __hash__(self):
        return hash((self.cofinite, self.support))

    def __and__(self, other):
        _same(self, other)
        a, b = self, other
        if not a.cofinite and not b.cofinite:
            return SetElement(a.algebra, False, a.support & b.support)
        if not a.cofinite:
            return SetElement(a.algebra, False, a.support - b.support)
        if not b.cofinite:
            return SetElement(a.algebra, False, b.support - a.support)
        return SetElement(a.algebra, True, a.support | b.support)

    def __or__(self, other):
        _same(self, other)
        a, b = self, other
        if not a.cofinite and not b.cofinite:
            return SetElement(a.algebra, False, a.support | b.support)
        if not a.cofinite:
            return SetElement(a.algebra, True, b.support - a.support)
        if not b.cofinite:
            return SetElement(a.algebra, True, a.support - b.support)
        return SetElement(a.algebra, True, a.support & b.support)

    def __xor__(self, other):
        _same(self, other)
        a, b = self, other
        return SetElement(a.algebra, a.cofinite != b.cofinite, a.support ^ b.support)

    def __sub__(self, other):
        return self & ~other

    def __invert__(self):
        return SetElement(self.algebra, not self.cofinite, self.support)

    def __le__(self, other):
        _same(self, other)
        return (self & other) == self

    @property
    def literal(self) -> str:
        tag = "cof" if self.cofinite else "fin"
        return tag + "{" + ",".join(str(v) for v in sorted(self.support)) + "}"

    def sort_key(self):
        return (1 if self.cofinite else 0, tuple(sorted(self.support)))

    def contains(self, n: int) -> bool:
        """Set membership of the natural ``n``."""
        return (n in self.support) != self.cofinite


# -- functional spellings of the lattice operations -----------------------

def meet(a: Element, b: Element) -> Element:
    return a & b


def join(a: Element, b: Element) -> Element:
    return a | b


def difference(a: Element, b: Element) -> Element:
    return a - b


def symdiff(a: Element, b: Element) -> Element:
    return a ^ b


def complement(a: Element) -> Element:
    return ~a


def leq(a: Element, b: Element) -> bool:
    return a <= b


def sup_family(elements: Iterable[Element], algebra: Algebra | None = None) -> Element:
    """Least upper bound of a finite family.

    The empty family yields 0 by convention, in which case the algebra
    must be passed explicitly.
    """
    out: Element | None = None
    for e in elements:
        out = e if out is None else out | e
    if out is None:
        if algebra is None:
            raise StructureError("sup of an empty family needs an explicit algebra")
        return algebra.zero
    return out


def inf_family(elements: Iterable[Element], algebra: Algebra | None = None) -> Element:
    """Greatest lower bound of a finite family; empty family yields 1."""
    out: Element | None = None
    for e in elements:
        out = e if out is None else out & e
    if out is None:
        if algebra is None:
            raise StructureError("inf of an empty family needs an explicit algebra")
        return algebra.one
    return out


def atoms(algebra: Algebra) -> list[Element]:
    """The atoms of a finite atomic algebra, in index order."""
    if algebra.kind != FINITE_ATOMIC:
        raise UnsupportedOperationError("atom enumeration needs the finite atomic algebra")
    return [algebra.atom(i) for i in range(algebra.atom_count)]
