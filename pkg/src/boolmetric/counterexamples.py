"""Obstructions to extension over the finite-cofinite algebra.

Fix an infinite, co-infinite decidable set M of naturals (described by a
residue predicate).  Inside the algebra B of finite and cofinite sets, the
ideal I of finite subsets of M has no supremum: every upper bound must be a
cofinite set containing M, and removing one more point of the complement
gives a smaller upper bound.  This incompleteness breaks the extension
theorems that hold over complete algebras, and this module makes the
failure finitely checkable:

* In the plane over B, restricted to pairs with disjoint coordinates, the
  map that merges a pair to its symmetric difference on the first axis is
  an isometry between two natural subsets, yet no contractive map of the
  plane extends its inverse.  Any candidate image (a, b) for the point
  (1, 0) violates a concrete contraction inequality, and
  :func:`isometry_obstruction_witness` produces one.

* On the line over B, the contraction x -> M & x on finite sets admits no
  contractive extension F to all of B: the value F(1) would have to agree
  with M everywhere, and M is not in B.
  :func:`contraction_obstruction_witness` exhibits a finite set refuting
  any candidate value.

* By contrast, a distance-preserving map between subsets of the line
  itself always extends: its offsets x ^ f(x) are constant, and
  translation by that constant is a global isometry even though the
  algebra is incomplete.  :func:`line_extension` recovers it.

Every witness is a finite object whose violated inequality can be, and is,
re-checked by plain lattice operations.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .algebra import (FINITE_ATOMIC, Algebra, Element, SetElement,
                      fincof_algebra)
from .errors import (InfeasibleError, StructureError,
                     UnsupportedOperationError, VerificationError)
from .spaces import PartialMap, Point

MAX_MODULUS = 8


@dataclass(frozen=True)
class IdealDescriptor:
    """A decidable infinite, co-infinite set M of naturals: the residue
    class ``residue`` modulo ``modulus`` (modulus between 2 and 8)."""

    residue: int
    modulus: int

    def __post_init__(self):
        if not 2 <= self.modulus <= MAX_MODULUS:
            raise StructureError(f"the modulus must lie between 2 and {MAX_MODULUS} "
                                 "so that the set is infinite and co-infinite")
        if not 0 <= self.residue < self.modulus:
            raise StructureError("the residue must lie below the modulus")

    @classmethod
    def evens(cls) -> "IdealDescriptor":
        return cls(0, 2)

    @classmethod
    def odds(cls) -> "IdealDescriptor":
        return cls(1, 2)

    @classmethod
    def parse(cls, label: str) -> "IdealDescriptor":
        if label == "evens":
            return cls.evens()
        if label == "odds":
            return cls.odds()
        if label.startswith("mod:"):
            try:
                r, m = (int(v) for v in label[4:].split(","))
            except ValueError:
                raise StructureError(f"bad predicate {label!r}; expected mod:r,m") from None
            return cls(r, m)
        raise StructureError(f"unknown predicate {label!r}")

    @property
    def label(self) -> str:
        if (self.residue, self.modulus) == (0, 2):
            return "evens"
        if (self.residue, self.modulus) == (1, 2):
            return "odds"
        return f"mod:{self.residue},{self.modulus}"

    def member(self, n: int) -> bool:
        return n % self.modulus == self.residue

    def members(self) -> Iterator[int]:
        n = self.residue
        while True:
            yield n
            n += self.modulus

    def meet_with(self, x: Element) -> Element:
        """M & x for a finite element x."""
        x = _as_fincof(x)
        if x.cofinite:
            raise UnsupportedOperationError("M & x is computed for finite x only; "
                                            "for cofinite x it would leave the algebra")
        return x.algebra.fin({n for n in x.support if self.member(n)})

    def least_member_outside(self, exclude: frozenset[int]) -> int:
        """Least element of M avoiding a finite set (always exists)."""
        for n in self.members():
            if n not in exclude:
                return n
        raise AssertionError("unreachable: M is infinite")

    def least_nonmember_outside(self, exclude: frozenset[int]) -> int:
        """Least element of the complement of M avoiding a finite set."""
        n = 0
        while True:
            if not self.member(n) and n not in exclude:
                return n
            n += 1


def _as_fincof(x: Element) -> SetElement:
    if not isinstance(x, SetElement):
        raise StructureError("this construction lives in the finite-cofinite algebra")
    return x


# ---------------------------------------------------------------------------
# The ideals and the plane construction.
# ---------------------------------------------------------------------------


def in_ideal(desc: IdealDescriptor, x: Element) -> bool:
    """Membership in I: finite subsets of M."""
    x = _as_fincof(x)
    return not x.cofinite and all(desc.member(n) for n in x.support)


def in_orthogonal_ideal(desc: IdealDescriptor, y: Element) -> bool:
    """Membership in J, the annihilator of I: elements disjoint from M.

    A finite set qualifies when its support avoids M.  A cofinite set
    would need to contain no member of M at all, i.e. its finite support
    would have to contain the infinite set M, so the constructive test
    (find one member of M outside the support) always rejects it.
    """
    y = _as_fincof(y)
    if not y.cofinite:
        return not any(desc.member(n) for n in y.support)
    return desc.least_member_outside(y.support) is None  # never true


def in_sum_ideal(desc: IdealDescriptor, z: Element) -> bool:
    """Membership in I + J (elementwise symmetric differences).

    Every finite set z splits as (z & M) ^ (z - M), with the two parts in
    I and J.  No cofinite z belongs: a split would need z ^ x in J for
    some finite x, but z ^ x is then still cofinite and J contains no
    cofinite elements.
    """
    z = _as_fincof(z)
    if not z.cofinite:
        return True
    return False


def split_line_point(desc: IdealDescriptor, z: Element) -> tuple[Element, Element]:
    """The unique split z = x ^ y with x in I and y in J (finite z)."""
    z = _as_fincof(z)
    if not in_sum_ideal(desc, z):
        raise StructureError(f"{z.literal} is not a sum of an I and a J element")
    alg = z.algebra
    x = alg.fin({n for n in z.support if desc.member(n)})
    y = alg.fin({n for n in z.support if not desc.member(n)})
    return x, y


def is_disjoint_pair(p: Point) -> bool:
    """Membership in the plane restricted to disjoint coordinate pairs."""
    if p.dim != 2:
        raise StructureError("the plane construction uses two coordinates")
    return (p.coords[0] & p.coords[1]).is_zero


def is_split_pair(desc: IdealDescriptor, p: Point) -> bool:
    """Membership in V: pairs (x, y) with x in I and y in J."""
    return (is_disjoint_pair(p) and in_ideal(desc, p.coords[0])
            and in_orthogonal_ideal(desc, p.coords[1]))


def is_line_point(desc: IdealDescriptor, p: Point) -> bool:
    """Membership in U: pairs (z, 0) with z in I + J."""
    if p.dim != 2:
        raise StructureError("the plane construction uses two coordinates")
    return p.coords[1].is_zero and in_sum_ideal(desc, p.coords[0])


def flatten_pair(p: Point) -> Point:
    """The isometry V -> U: (x, y) goes to (x ^ y, 0)."""
    if p.dim != 2:
        raise StructureError("the plane construction uses two coordinates")
    zero = p.algebra.zero
    return Point((p.coords[0] ^ p.coords[1], zero))


def unflatten_line_point(desc: IdealDescriptor, p: Point) -> Point:
    """The inverse isometry U -> V via the unique I + J split."""
    if not is_line_point(desc, p):
        raise StructureError("the point is not on the embedded line")
    x, y = split_line_point(desc, p.coords[0])
    return Point((x, y))


# ---------------------------------------------------------------------------
# Witnesses.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Witness:
    """A finite refutation of one candidate.

    ``kind`` says which constraint broke: "ideal" (an element of I escapes
    the first coordinate), "orthogonal" (an element of J escapes the second
    coordinate), "overlap" (the candidate coordinates are not disjoint), or
    "contraction" (a finite set refuting a candidate line value).  The
    violated inequality is stored as ``lhs`` and ``rhs`` (``rhs`` is None
    for "overlap", where the failure is ``lhs != 0``).
    """

    kind: str
    element: Element
    lhs: Element
    rhs: Element | None

    @property
    def verified(self) -> bool:
        if self.rhs is None:
            return not self.lhs.is_zero
        return not self.lhs <= self.rhs

    def describe(self) -> str:
        if self.rhs is None:
            return (f"kind={self.kind} witness={self.element.literal} "
                    f"violates {self.lhs.literal} = 0")
        return (f"kind={self.kind} witness={self.element.literal} "
                f"violates {self.lhs.literal} <= {self.rhs.literal}")


def isometry_obstruction_witness(candidate: tuple[Element, Element],
                                 desc: IdealDescriptor) -> Witness:
    """Refute a candidate image (a, b) of the point (1, 0) under any
    contractive extension of the merge isometry's inverse.

    Contractivity against the fixed points (x, 0), x in I, forces every
    x <= a; against the points (0, y), y in J, it forces every y <= b.  An
    a above all of I must contain M and a b above all of J must contain
    the complement of M, so a & b cannot vanish, contradicting
    disjointness.  One of the three failures always materializes and is
    returned with its violated inequality.
    """
    a, b = (_as_fincof(candidate[0]), _as_fincof(candidate[1]))
    alg = a.algebra
    # An element of I not below a.
    if not a.cofinite:
        m: int | None = desc.least_member_outside(a.support)
    else:
        m = next((n for n in sorted(a.support) if desc.member(n)), None)
    if m is not None:
        x = alg.fin({m})
        return Witness("ideal", x, (x ^ a) | b, ~x)
    # An element of J not below b.
    if not b.cofinite:
        m = desc.least_nonmember_outside(b.support)
    else:
        m = next((n for n in sorted(b.support) if not desc.member(n)), None)
    if m is not None:
        y = alg.fin({m})
        return Witness("orthogonal", y, (y ^ b) | a, ~y)
    # Now a contains M and b contains its complement: both are cofinite,
    # so their meet is cofinite, in particular nonzero.
    overlap = a & b
    if overlap.is_zero:
        raise VerificationError("overlap witness failed; this cannot happen")
    return Witness("overlap", overlap, overlap, None)


def contraction_obstruction_witness(candidate: Element,
                                    desc: IdealDescriptor) -> Witness:
    """Refute a candidate value v = F(1) for a contractive extension of
    x -> M & x from finite sets to the whole line.

    Contractivity against a finite x forces v ^ (M & x) <= complement(x),
    i.e. v must agree with M inside x.  The least natural where the
    candidate and M disagree yields a singleton refutation; it exists
    because v is finite or cofinite while M is neither.
    """
    v = _as_fincof(candidate)
    n = 0
    while True:
        if v.contains(n) != desc.member(n):
            break
        n += 1
    x = v.algebra.fin({n})
    return Witness("contraction", x, v ^ desc.meet_with(x), ~x)


def bounded_candidates(max_support: int = 16,
                       algebra: Algebra | None = None) -> Iterator[Element]:
    """All fin S and cof S with S inside {0..max_support}, in a fixed
    order: supports by binary counting, fin before cof."""
    alg = algebra if algebra is not None else fincof_algebra()
    universe = list(range(max_support + 1))
    for mask in range(1 << (max_support + 1)):
        support = frozenset(n for n in universe if mask >> n & 1)
        yield SetElement(alg, False, support)
        yield SetElement(alg, True, support)


# ---------------------------------------------------------------------------
# The positive one-dimensional case.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LineExtension:
    """A global isometry of the one-dimensional space: translation by a
    fixed element, x -> offset ^ x.  Works over either algebra, including
    the incomplete one, because no suprema are needed."""

    offset: Element

    def __call__(self, p: Point) -> Point:
        if p.dim != 1:
            raise StructureError("line translations act on one-coordinate points")
        return Point((self.offset ^ p.coords[0],))

    def as_pairs(self, points) -> PartialMap:
        return PartialMap(tuple((p, self(p)) for p in points), flag="isometric")

    def full_map(self) -> PartialMap:
        """The translation on the whole (finite atomic) line."""
        alg = self.offset.algebra
        if alg.kind != FINITE_ATOMIC:
            raise UnsupportedOperationError(
                "the finite-cofinite line is infinite; apply the translation pointwise")
        pairs = tuple((Point((e,)), Point((e ^ self.offset,))) for e in alg.elements())
        return PartialMap(pairs, flag="isometric")


def line_extension(pm: PartialMap) -> LineExtension:
    """Extend a distance-preserving map between subsets of the line to a
    translation of the whole line.

    For one-coordinate points, preserving distances is the same as having
    a constant offset x ^ f(x); the translation by that offset is then an
    isometry of all of B extending the input.  A non-constant offset is
    reported as infeasible with the two clashing pairs.
    """
    if not pm.pairs:
        raise StructureError("an empty map does not determine a translation")
    if pm.pairs[0][0].dim != 1 or pm.pairs[0][1].dim != 1:
        raise StructureError("line extension applies to one-coordinate points")
    first_pair = pm.pairs[0]
    offset = first_pair[0].coords[0] ^ first_pair[1].coords[0]
    for s, t in pm.pairs[1:]:
        other = s.coords[0] ^ t.coords[0]
        if other != offset:
            raise InfeasibleError(
                "the map does not preserve distances: offsets "
                f"{offset.literal} and {other.literal} differ",
                witness=(first_pair, (s, t)))
    return LineExtension(offset)
