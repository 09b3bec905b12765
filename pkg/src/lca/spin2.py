"""Sign-vector calculus for diagonalizable 2-subgroups of SO_n and their spin lifts.

A sign vector is a diagonal involution of SO_n with an even number of -1
entries.  Its spin lift squares to the centre unless the -1-eigenspace
dimension is divisible by 4, and two lifts commute exactly when their
supports meet evenly.  Groups generated by lifts are built explicitly in
the Clifford algebra (elements are (support mask, sign) pairs) and matched
against a catalogue of the named 2-group types.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .rootsys import SemisimpleTypeLabel, SimpleType

_RUN = re.compile(r"(-?1)(?:\^(\d+))?$")


@dataclass(frozen=True)
class SignVector:
    n: int
    signs: tuple

    def __post_init__(self):
        if len(self.signs) != self.n or any(s not in (1, -1) for s in self.signs):
            raise ValueError("signs must be a +/-1 sequence of length n")
        if self.weight % 2:
            raise ValueError("sign vectors must have an even number of -1 entries")

    @staticmethod
    def parse(text: str, n: int | None = None) -> "SignVector":
        """Parse run-length notation like "(-1^6,1^10)"."""
        body = text.strip().strip("()")
        signs: list = []
        for token in body.split(","):
            token = token.strip()
            m = _RUN.match(token)
            if not m:
                raise ValueError(f"bad sign-vector token {token!r}")
            value = int(m.group(1))
            count = int(m.group(2) or 1)
            signs.extend([value] * count)
        if n is not None and len(signs) != n:
            raise ValueError(f"expected length {n}, got {len(signs)}")
        return SignVector(len(signs), tuple(signs))

    def __str__(self) -> str:
        runs = []
        for s in self.signs:
            if runs and runs[-1][0] == s:
                runs[-1][1] += 1
            else:
                runs.append([s, 1])
        body = ",".join(f"{s}^{c}" if c > 1 else str(s) for s, c in runs)
        return f"({body})"

    @property
    def support(self) -> frozenset:
        return frozenset(i for i, s in enumerate(self.signs) if s == -1)

    @property
    def weight(self) -> int:
        return sum(1 for s in self.signs if s == -1)

    @property
    def is_identity(self) -> bool:
        return self.weight == 0


@dataclass(frozen=True)
class EigenPartition:
    """Joint eigenspace blocks of a set of sign vectors, in coordinate order."""

    n: int
    blocks: tuple

    @property
    def sizes(self) -> tuple:
        return tuple(len(b) for b in self.blocks)


def eigen_partition(vectors, n: int | None = None) -> EigenPartition:
    """Coordinates grouped by joint sign pattern; no vectors means one block."""
    if not vectors:
        if n is None:
            raise ValueError("ambient dimension required when no vectors are given")
        return trivial_partition(n)
    n = vectors[0].n
    if any(v.n != n for v in vectors):
        raise ValueError("mixed sign-vector lengths")
    patterns: dict = {}
    for i in range(n):
        key = tuple(v.signs[i] for v in vectors)
        patterns.setdefault(key, []).append(i)
    blocks = sorted(patterns.values(), key=lambda b: b[0])
    return EigenPartition(n, tuple(tuple(b) for b in blocks))


def trivial_partition(n: int) -> EigenPartition:
    return EigenPartition(n, (tuple(range(n)),))


@dataclass(frozen=True)
class SOCentralizer:
    label: SemisimpleTypeLabel
    torus_blocks: int
    dropped: int

    @property
    def has_torus_block(self) -> bool:
        return self.torus_blocks > 0


_SO_FACTORS = {
    3: ("B1",),
    4: ("A1", "A1"),
    5: ("B2",),
    6: ("A3",),
    7: ("B3",),
    8: ("D4",),
    9: ("B4",),
}


def _so_label(dim: int):
    if dim in _SO_FACTORS:
        return _SO_FACTORS[dim]
    if dim % 2 == 0:
        return (f"D{dim // 2}",)
    return (f"B{(dim - 1) // 2}",)


def so_centralizer_type(vectors, n: int | None = None) -> SOCentralizer:
    """Connected centralizer of sign vectors in SO_n, as a type label.

    Blocks of size 1 are discarded; blocks of size 2 are normal tori and are
    counted in ``torus_blocks`` (reducibility evidence, no type factor).
    """
    part = eigen_partition(vectors, n)
    factors: list = []
    torus = 0
    dropped = 0
    for size in part.sizes:
        if size == 1:
            dropped += 1
        elif size == 2:
            torus += 1
        else:
            factors.extend(_so_label(size))
    return SOCentralizer(SemisimpleTypeLabel.of(*factors), torus, dropped)


def spin_lift_order(v: SignVector) -> int:
    """2 iff the -1-eigenspace dimension is divisible by 4, else 4."""
    return 2 if v.weight % 4 == 0 else 4


def lift_commute(u: SignVector, v: SignVector) -> bool:
    """Spin lifts commute iff the -1 supports meet in an even number of places."""
    if u.n != v.n:
        raise ValueError("mixed sign-vector lengths")
    return len(u.support & v.support) % 2 == 0


# -- explicit Clifford-group construction -------------------------------------


def _lift(v: SignVector):
    mask = 0
    for i in v.support:
        mask |= 1 << i
    return (mask, 1)


def _clifford_mul(a, b):
    mask, sign = a
    bmask, bsign = b
    sign *= bsign
    t = 0
    rest = bmask
    while rest:
        low = rest & -rest
        t = low.bit_length() - 1
        rest ^= low
        higher = mask >> (t + 1)
        if higher.bit_count() % 2:
            sign = -sign
        mask ^= low
    return (mask, sign)


def _close_group(generators, limit: int = 4096):
    elements = {(0, 1)}
    frontier = [(0, 1)]
    while frontier:
        nxt = []
        for x in frontier:
            for g in generators:
                y = _clifford_mul(x, g)
                if y not in elements:
                    elements.add(y)
                    nxt.append(y)
                    if len(elements) > limit:
                        raise ValueError("generated group is unexpectedly large")
        frontier = nxt
    return elements


def _element_order(x):
    order = 1
    y = x
    while y != (0, 1):
        y = _clifford_mul(y, x)
        order += 1
    return order


@dataclass(frozen=True)
class TwoGroupType:
    name: str
    order: int
    exponent: int
    recognized: bool

    def __str__(self):
        return self.name


# (order, abelian, order histogram, centre size) -> name
_CATALOGUE = {
    (4, True, ((2, 1), (4, 2)), 4): "4",
    (8, True, ((2, 3), (4, 4)), 8): "4x2",
    (8, False, ((2, 5), (4, 2)), 2): "Dih8",
    (8, False, ((2, 1), (4, 6)), 2): "Q8",
    (16, False, ((2, 11), (4, 4)), 4): "Dih8x2",
    (16, False, ((2, 3), (4, 12)), 4): "Q8x2",
    (16, False, ((2, 7), (4, 8)), 4): "4oDih8",
    (32, False, ((2, 11), (4, 20)), 2): "2^{1+4}-",
}


def identify_2group(vectors) -> TwoGroupType:
    """Abstract type of the group generated by the spin lifts of the vectors.

    The group is built explicitly on its (mask, sign) elements; the named
    types are recognized by order data and centre size, anything else comes
    back with ``recognized=False``.
    """
    if vectors and any(v.n != vectors[0].n for v in vectors):
        raise ValueError("mixed sign-vector lengths")
    gens = [_lift(v) for v in vectors]
    elements = _close_group(gens)
    order = len(elements)
    orders = sorted(_element_order(x) for x in elements)
    exponent = orders[-1]
    hist = tuple(
        (k, sum(1 for o in orders if o == k)) for k in sorted(set(orders)) if k > 1
    )
    abelian = all(
        _clifford_mul(x, y) == _clifford_mul(y, x) for x in elements for y in elements
    )
    if abelian and exponent <= 2:
        k = order.bit_length() - 1
        name = "1" if order == 1 else ("2" if k == 1 else f"2^{k}")
        return TwoGroupType(name, order, exponent, True)
    centre = sum(
        1
        for x in elements
        if all(_clifford_mul(x, y) == _clifford_mul(y, x) for y in elements)
    )
    name = _CATALOGUE.get((order, abelian, hist, centre))
    if name is None:
        return TwoGroupType(f"unrecognized[{order},exp{exponent}]", order, exponent, False)
    return TwoGroupType(name, order, exponent, True)


# -- classical centralizers and the irreducibility predicate ------------------


def classical_centralizer(block_dims, ambient: str) -> SemisimpleTypeLabel:
    """Centralizer type of a diagonalizable 2-group on weight-space blocks.

    ``ambient`` is "Sp<2n>" or "SO<n>".  Symplectic blocks must be even and
    fill the space; orthogonal blocks must be at least 3 and may leave one
    dimension over.
    """
    kind = ambient[:2].upper()
    dim = int(ambient[2:])
    if kind == "SP":
        if dim % 2 or sum(block_dims) != dim:
            raise ValueError(f"Sp blocks {block_dims} must fill dimension {dim}")
        factors = []
        for b in block_dims:
            if b % 2:
                raise ValueError(f"odd symplectic block of size {b}")
            factors.append(SimpleType("C", b // 2))
        return SemisimpleTypeLabel.of(*factors)
    if kind == "SO":
        if sum(block_dims) not in (dim, dim - 1):
            raise ValueError(f"SO blocks {block_dims} must fill {dim} or {dim}-1")
        if any(b < 3 for b in block_dims):
            raise ValueError("SO blocks of size < 3 are tori or trivial")
        factors = []
        for b in block_dims:
            factors.extend(_so_label(b))
        return SemisimpleTypeLabel.of(*factors)
    raise ValueError(f"ambient must be Sp2n or SOn, got {ambient!r}")


def classically_irreducible(summands) -> bool:
    """True iff all summands are nondegenerate with pairwise distinct keys."""
    keys = []
    for _dim, nondegenerate, key in summands:
        if not nondegenerate:
            return False
        keys.append(key)
    return len(keys) == len(set(keys))
