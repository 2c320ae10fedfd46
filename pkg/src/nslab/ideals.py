"""Fractional monomial ideal calculus over a numerical semigroup.

A relative ideal of a semigroup S is a set E of integers, bounded below,
with E + S contained in E.  These are the rank-one maximal Cohen-Macaulay
modules of the monomial curve ring in combinatorial form.  Every such set
is determined by its least element together with the membership pattern on
the window [min, min + frobenius(S)]: since min + S lies inside E, every
integer from min + frobenius + 1 on is automatically a member.  That forced
tail is what makes all the operations below exact with no truncation
heuristics.

Conventions:
  * sums are sumsets (module products of monomial ideals),
  * ``difference(E, F)`` is the colon {z : z + F subset E},
  * isomorphism of monomial ideals is translation, so classes are stored
    normalized with least element 0.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .semigroups import NumericalSemigroup, EmptyGenerators, _ones, _bit_indices


class ParentMismatch(ValueError):
    """Two ideals over different semigroups were combined."""


class NotTwoGenerated(ValueError):
    """The rank-one syzygy formula needs a 2-generated ideal."""


@dataclass(frozen=True)
class RelativeIdeal:
    """A fractional monomial ideal E with E + S inside E.

    ``_mask`` stores membership of min + k for k in [0, width) where
    width = frobenius(parent) + 1; every integer >= min + width is a
    member.  Bit 0 is always set (the minimum is attained).
    """

    parent: NumericalSemigroup
    min: int
    _mask: int = field(repr=False)

    def __post_init__(self) -> None:
        width = self.width
        if width == 0:
            if self._mask:
                raise ValueError("empty window must have empty mask")
            return
        if not self._mask & 1:
            raise ValueError("least element must be a member")
        if self._mask >> width:
            raise ValueError("mask has bits outside the window")

    def validate(self) -> "RelativeIdeal":
        """Full closure check E + S inside E on the window; the arithmetic
        operations are correct by construction, so this only runs on
        untrusted input and in tests."""
        width = self.width
        mask = self._mask
        gens = self.parent.minimal_generators
        for k in _bit_indices(mask):
            for a in gens:
                j = k + a
                if j < width and not mask >> j & 1:
                    raise ValueError(
                        f"not an ideal: {self.min + k} + {a} missing"
                    )
        return self

    def __eq__(self, other) -> bool:
        if not isinstance(other, RelativeIdeal):
            return NotImplemented
        return (
            self._mask == other._mask
            and self.min == other.min
            and (self.parent is other.parent or self.parent == other.parent)
        )

    def __hash__(self) -> int:
        try:
            return self._hashcache
        except AttributeError:
            h = hash((hash(self.parent), self.min, self._mask))
            object.__setattr__(self, "_hashcache", h)
            return h

    # -- geometry ----------------------------------------------------------

    @property
    def width(self) -> int:
        return self.parent.frobenius + 1

    @property
    def tail_start(self) -> int:
        """Every integer >= tail_start is a member (forced by min + S)."""
        return self.min + self.width

    def contains(self, z: int) -> bool:
        k = z - self.min
        if k < 0:
            return False
        if k >= self.width:
            return True
        return bool(self._mask >> k & 1)

    __contains__ = contains

    def members_below(self, stop: int) -> list[int]:
        out = []
        for k in range(min(stop - self.min, self.width)):
            if self._mask >> k & 1:
                out.append(self.min + k)
        out.extend(range(max(self.min, self.tail_start), stop))
        return out

    def extended_mask(self, nbits: int) -> int:
        """Membership of min + k for k in [0, nbits), tail bits included."""
        if nbits <= self.width:
            return self._mask & _ones(nbits)
        return self._mask | (_ones(nbits) ^ _ones(self.width))

    def abs_mask(self, base: int, nbits: int) -> int:
        """Membership of base + k for k in [0, nbits), for fixed-window code.

        Requires base <= min so no member is lost on the left.
        """
        shift = self.min - base
        if shift < 0:
            raise ValueError("base must not exceed the least element")
        return self.extended_mask(nbits - shift) << shift

    # -- rendering ---------------------------------------------------------

    def __str__(self) -> str:
        return format_ideal(self)

    def __repr__(self) -> str:
        return f"RelativeIdeal(<{self.parent}>, {format_ideal(self)})"

    # -- operator sugar ------------------------------------------------------

    def __add__(self, other: "RelativeIdeal") -> "RelativeIdeal":
        return sum(self, other)

    def __sub__(self, other: "RelativeIdeal") -> "RelativeIdeal":
        return difference(self, other)


def _check_parents(e: RelativeIdeal, f: RelativeIdeal) -> None:
    if e.parent != f.parent:
        raise ParentMismatch(
            f"ideals over <{e.parent}> and <{f.parent}> cannot be combined"
        )


def _from_window(parent: NumericalSemigroup, lo: int, wmask: int) -> RelativeIdeal:
    """Build an ideal from a membership window [lo, lo + width) plus the
    implied all-members tail from lo + width on; relocates to the attained
    minimum."""
    width = parent.frobenius + 1
    if width == 0:
        return RelativeIdeal(parent, lo, 0)
    full = _ones(width)
    wmask &= full
    if wmask == 0:
        return RelativeIdeal(parent, lo + width, full)
    b0 = (wmask & -wmask).bit_length() - 1
    if b0 == 0:
        return RelativeIdeal(parent, lo, wmask)
    mask = (wmask >> b0) | (full & ~_ones(width - b0))
    return RelativeIdeal(parent, lo + b0, mask & full)


# -- constructors ----------------------------------------------------------

def ideal_from_generators(s: NumericalSemigroup, gens) -> RelativeIdeal:
    """The ideal generated by ``gens``: the union of the translates g + S."""
    gens = sorted(set(int(g) for g in gens))
    if not gens:
        raise EmptyGenerators("an ideal needs at least one generator")
    lo = gens[0]
    width = s.frobenius + 1
    if width == 0:
        return RelativeIdeal(s, lo, 0)
    full = _ones(width)
    wmask = 0
    for g in gens:
        shift = g - lo
        if shift < width:
            wmask |= (s._mask << shift) & full
    return RelativeIdeal(s, lo, wmask)


def unit_ideal(s: NumericalSemigroup) -> RelativeIdeal:
    """S as an ideal over itself (the free module of rank one)."""
    return RelativeIdeal(s, 0, s._mask)


def normalization_ideal(s: NumericalSemigroup) -> RelativeIdeal:
    """All nonnegative integers as an ideal over S (the normalization)."""
    return RelativeIdeal(s, 0, _ones(s.frobenius + 1))


def maximal_ideal(s: NumericalSemigroup) -> RelativeIdeal:
    """The set of nonzero members of S."""
    if s.is_naturals:
        return RelativeIdeal(s, 1, 0)
    e = s.multiplicity
    width = s.frobenius + 1
    wmask = 0
    for k in range(width):
        z = e + k
        if z > s.frobenius or s._mask >> z & 1:
            wmask |= 1 << k
    return RelativeIdeal(s, e, wmask)


# -- elementary operations ---------------------------------------------------

def normalize(e: RelativeIdeal) -> tuple[RelativeIdeal, int]:
    """Shift the least element to 0; returns (normalized ideal, offset)."""
    return RelativeIdeal(e.parent, 0, e._mask), e.min


def translate(e: RelativeIdeal, x: int) -> RelativeIdeal:
    return RelativeIdeal(e.parent, e.min + x, e._mask)


def is_translate(e: RelativeIdeal, f: RelativeIdeal) -> int | None:
    """The x with f = x + e if it exists, else None.  The only candidate is
    the difference of the least elements."""
    _check_parents(e, f)
    if e._mask == f._mask:
        return f.min - e.min
    return None


def is_subset(e: RelativeIdeal, f: RelativeIdeal) -> bool:
    _check_parents(e, f)
    shift = e.min - f.min
    if shift < 0:
        return False  # min(e) is attained and below f entirely
    width = e.width
    if width == 0:
        return True
    ext = f.extended_mask(shift + width)
    return (e._mask << shift) & ~ext == 0


def sum(e: RelativeIdeal, f: RelativeIdeal) -> RelativeIdeal:
    """The sumset e + f (product of the monomial modules)."""
    _check_parents(e, f)
    width = e.width
    if width == 0:
        return RelativeIdeal(e.parent, e.min + f.min, 0)
    full = _ones(width)
    amask, bmask = e._mask, f._mask
    if amask.bit_count() > bmask.bit_count():
        amask, bmask = bmask, amask
    wmask = 0
    for a in _bit_indices(amask):
        wmask |= (bmask << a) & full
    return RelativeIdeal(e.parent, e.min + f.min, wmask)


def n_fold_sum(e: RelativeIdeal, n: int) -> RelativeIdeal:
    """The n-fold sumset; n = 0 gives S (empty product convention)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    acc = unit_ideal(e.parent)
    for _ in range(n):
        acc = sum(acc, e)
    return acc


def difference(e: RelativeIdeal, f: RelativeIdeal) -> RelativeIdeal:
    """The colon {z : z + f subset e}, again a relative ideal.

    Members lie in [min(e) - min(f), min(e) - min(f) + width) plus the
    forced tail: once z + min(f) reaches the tail of e, every constraint
    is satisfied automatically.
    """
    _check_parents(e, f)
    lo = e.min - f.min
    width = e.width
    if width == 0:
        return RelativeIdeal(e.parent, lo, 0)
    # z = lo + j needs bit (j + b) of e's extended window for every member
    # offset b of f; f's tail imposes nothing because z + f.min + width
    # lands in e's tail already.
    not_e = ~e.extended_mask(2 * width)
    fmask = f._mask
    wmask = 0
    for j in range(width):
        if (fmask << j) & not_e == 0:
            wmask |= 1 << j
    return _from_window(e.parent, lo, wmask)


def intersect(e: RelativeIdeal, f: RelativeIdeal) -> RelativeIdeal:
    """Set intersection, which is again a relative ideal."""
    _check_parents(e, f)
    lo = max(e.min, f.min)
    width = e.width
    if width == 0:
        return RelativeIdeal(e.parent, lo, 0)
    emask = e.extended_mask(lo - e.min + width) >> (lo - e.min)
    fmask = f.extended_mask(lo - f.min + width) >> (lo - f.min)
    return _from_window(e.parent, lo, emask & fmask)


# -- canonical machinery -----------------------------------------------------

def canonical_ideal(s: NumericalSemigroup) -> RelativeIdeal:
    """The canonical ideal {x : frobenius - x not in S}, normalized.

    Its window pattern is the reflected complement of the semigroup's; it
    equals S exactly when S is symmetric.
    """
    width = s.frobenius + 1
    if width == 0:
        return unit_ideal(s)
    wmask = 0
    for x in range(width):
        if not s._mask >> (s.frobenius - x) & 1:
            wmask |= 1 << x
    return RelativeIdeal(s, 0, wmask)


def canonical_dual(e: RelativeIdeal) -> RelativeIdeal:
    """Dual against the canonical ideal: K - E."""
    return difference(canonical_ideal(e.parent), e)


def ring_dual(e: RelativeIdeal) -> RelativeIdeal:
    """Dual against the ring: S - E."""
    return difference(unit_ideal(e.parent), e)


def trace_ideal(e: RelativeIdeal) -> RelativeIdeal:
    """The trace E + (S - E): the ideal of S generated by images of maps
    from E to S.  Always a subset of S; equals S exactly for principal E."""
    return sum(e, ring_dual(e))


def is_reflexive(e: RelativeIdeal) -> bool:
    """Whether S - (S - E) is a translate of E (it always contains E)."""
    bidual = ring_dual(ring_dual(e))
    return is_translate(e, bidual) is not None


def minimal_generators(e: RelativeIdeal) -> tuple[int, ...]:
    """E minus (E + M) where M is the maximal ideal set: a minimal
    generating set for E as a module."""
    em = sum(e, maximal_ideal(e.parent))
    out = []
    for z in range(e.min, em.tail_start):
        if e.contains(z) and not em.contains(z):
            out.append(z)
    return tuple(out)


def syzygy_two_generated(e: RelativeIdeal) -> RelativeIdeal:
    """First syzygy of a 2-generated ideal, normalized.

    With generators a < b the kernel of S(-a) + S(-b) -> E is the rank-one
    set {z in S : z + (b - a) in S}, shifted; only the difference b - a
    matters up to translation.
    """
    return normalize(_syzygy_raw(e))[0]


def _syzygy_raw(e: RelativeIdeal) -> RelativeIdeal:
    gens = minimal_generators(e)
    if len(gens) != 2:
        raise NotTwoGenerated(
            f"ideal has {len(gens)} minimal generators, need exactly 2"
        )
    a, b = gens
    shifted = RelativeIdeal(e.parent, -(b - a), e.parent._mask)
    return intersect(unit_ideal(e.parent), shifted)


# -- isomorphism classes -------------------------------------------------------

@dataclass(frozen=True)
class IdealClassList:
    """All normalized ideal classes of a semigroup, deduplicated up to
    translation; always includes S itself and the normalization."""

    parent: NumericalSemigroup
    classes: tuple[RelativeIdeal, ...]

    def __iter__(self):
        return iter(self.classes)

    def __len__(self) -> int:
        return len(self.classes)


def enumerate_ideal_classes(s: NumericalSemigroup) -> IdealClassList:
    """Every normalized relative ideal: the sets S with some gaps adjoined,
    filtered by closure under the generators.  Deterministic order: by
    number of adjoined gaps, then lexicographically."""
    gaps = sorted(s.gap_set)
    gens = s.minimal_generators
    out = []
    for size in range(len(gaps) + 1):
        for combo in combinations(gaps, size):
            chosen = set(combo)
            if all(
                (g + a) in chosen or s.contains(g + a)
                for g in combo
                for a in gens
            ):
                wmask = s._mask
                for g in combo:
                    wmask |= 1 << g
                out.append(RelativeIdeal(s, 0, wmask))
    return IdealClassList(parent=s, classes=tuple(out))


# -- textual form ---------------------------------------------------------------

def format_ideal(e: RelativeIdeal) -> str:
    """Canonical textual form: "{a,b,c}∪[t,∞)" listing every member below
    the least valid tail threshold t, or "[t,∞)" for a plain ray."""
    width = e.width
    mask = e._mask
    missing = _ones(width) & ~mask
    if missing == 0:
        return f"[{e.min},∞)"
    top_gap = missing.bit_length() - 1
    t = e.min + top_gap + 1
    head = ",".join(str(e.min + k) for k in _bit_indices(mask) if k <= top_gap)
    return f"{{{head}}}∪[{t},∞)"


def parse_ideal(s: NumericalSemigroup, text: str) -> RelativeIdeal:
    """Parse the textual ideal form; accepts any valid tail threshold,
    e.g. both "[5,∞)" and "{5,6,7}∪[8,∞)" for the same ray."""
    raw = text.strip().replace(" ", "")
    head: list[int] = []
    body = raw
    if raw.startswith("{"):
        close = raw.find("}")
        if close < 0:
            raise ValueError(f"unterminated member list in {text!r}")
        inner = raw[1:close]
        if inner:
            head = [int(p) for p in inner.split(",")]
        body = raw[close + 1 :]
        if body.startswith("∪"):
            body = body[1:]
    if not (body.startswith("[") and (body.endswith(",∞)") or body.endswith(",inf)"))):
        raise ValueError(f"expected a tail of the form [t,∞) in {text!r}")
    t = int(body[1 : body.index(",")])
    lo = min(head) if head else t
    lo = min(lo, t)
    width = s.frobenius + 1
    if width == 0:
        if any(z < lo for z in head):
            raise ValueError("members below the least element")
        return RelativeIdeal(s, lo, 0)
    wmask = 0
    for z in head:
        k = z - lo
        if k < width:
            wmask |= 1 << k
    for k in range(max(0, t - lo), width):
        wmask |= 1 << k
    return _from_window(s, lo, wmask).validate()
