"""Exact characteristic-zero representation arithmetic.

The currency throughout is the Character: a finite multiset of weights in
fundamental coordinates with positive integer multiplicities, stable under
the Weyl group of its ambient (a simple root system or a product).  All
arithmetic is exact; dimensions are plain integers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .linalg import int_matrix, mat, matmul

_char_cache: dict = {}


@dataclass(frozen=True)
class Character:
    """Weight multiset of a representation, keyed by fundamental coordinates."""

    ambient: object
    entries: tuple = field(default_factory=tuple)

    @staticmethod
    def from_dict(ambient, weights: dict) -> "Character":
        items = tuple(sorted((tuple(w), int(m)) for w, m in weights.items() if m))
        if any(m < 0 for _, m in items):
            raise ValueError("negative multiplicity")
        return Character(ambient, items)

    def as_dict(self) -> dict:
        return dict(self.entries)

    @property
    def dimension(self) -> int:
        return sum(m for _, m in self.entries)

    def is_weyl_stable(self) -> bool:
        table = self.as_dict()
        for w, m in self.entries:
            for v in self.ambient.weyl_orbit(w):
                if table.get(v, 0) != m:
                    return False
        return True

    def to_json(self) -> dict:
        return {
            "ambient": self.ambient.label(),
            "entries": [[list(w), m] for w, m in self.entries],
            "dimension": self.dimension,
        }


def _rho(ambient):
    return (1,) * ambient.rank


def weyl_dimension(ambient, lam) -> int:
    """Dimension of the irreducible of highest weight lam (Weyl's formula)."""
    lam = tuple(lam)
    if not ambient.is_dominant(lam):
        raise ValueError(f"weight {lam} is not dominant")
    rho = _rho(ambient)
    lam_rho = tuple(a + b for a, b in zip(lam, rho))
    result = Fraction(1)
    for alpha in ambient.positive_roots_fund:
        result *= Fraction(ambient.inner(lam_rho, alpha), ambient.inner(rho, alpha))
    if result.denominator != 1:
        raise AssertionError("Weyl dimension did not come out integral")
    return int(result)


def dominant_weights(ambient, lam) -> list:
    """All dominant weights of the irreducible with highest weight lam.

    Walks downward from lam by positive-root steps through dominant weights;
    every dominant weight below lam in the root-lattice order is reached this
    way (the covers of the dominance order are positive roots).
    """
    lam = tuple(lam)
    seen = {lam}
    frontier = [lam]
    while frontier:
        nxt = []
        for mu in frontier:
            for alpha in ambient.positive_roots_fund:
                nu = tuple(a - b for a, b in zip(mu, alpha))
                if nu not in seen and ambient.is_dominant(nu):
                    seen.add(nu)
                    nxt.append(nu)
        frontier = nxt
    return sorted(seen, key=lambda w: (-ambient.height(w), w))


def _freudenthal_multiplicities(ambient, lam) -> dict:
    """Multiplicities on the dominant weights of V(lam), by Freudenthal's recursion."""
    rho = _rho(ambient)
    lam_rho = tuple(a + b for a, b in zip(lam, rho))
    norm_top = ambient.inner(lam_rho, lam_rho)
    mults: dict = {}
    for mu in dominant_weights(ambient, lam):
        if mu == lam:
            mults[mu] = 1
            continue
        mu_rho = tuple(a + b for a, b in zip(mu, rho))
        denominator = norm_top - ambient.inner(mu_rho, mu_rho)
        total = Fraction(0)
        for alpha in ambient.positive_roots_fund:
            k = 1
            while True:
                nu = tuple(a + k * b for a, b in zip(mu, alpha))
                m = mults.get(ambient.dominantize(nu))
                if m is None:
                    break
                total += m * ambient.inner(nu, alpha)
                k += 1
        value = 2 * total / denominator
        if value.denominator != 1 or value <= 0:
            raise AssertionError("Freudenthal recursion produced a bad multiplicity")
        mults[mu] = int(value)
    return mults


def dominant_character(ambient, lam) -> Character:
    """Full weight multiset of the irreducible with highest weight lam."""
    lam = tuple(lam)
    if not ambient.is_dominant(lam):
        raise ValueError(f"weight {lam} is not dominant")
    key = (ambient.label(), lam)
    cached = _char_cache.get(key)
    if cached is not None:
        return Character(ambient, cached)
    weights: dict = {}
    for mu, m in _freudenthal_multiplicities(ambient, lam).items():
        for w in ambient.weyl_orbit(mu):
            weights[w] = m
    char = Character.from_dict(ambient, weights)
    _char_cache[key] = char.entries
    return char


def adjoint_character(rs) -> Character:
    """Character of the adjoint module: all roots plus rank zero weights."""
    weights = {(0,) * rs.rank: rs.rank}
    for alpha in rs.positive_roots_fund:
        weights[alpha] = 1
        weights[tuple(-x for x in alpha)] = 1
    return Character.from_dict(rs, weights)


def semisimplify(char: Character) -> tuple:
    """Composition factors of a character, greedily extracted.

    Repeatedly removes the full irreducible character of the remaining
    maximal-by-height dominant weight.  A negative multiplicity along the way
    means the input was not a genuine character and raises ValueError.
    """
    ambient = char.ambient
    remaining = dict(char.entries)
    factors = []
    while remaining:
        mu = max(remaining, key=lambda w: (ambient.height(w), w))
        if not ambient.is_dominant(mu):
            raise ValueError(f"maximal weight {mu} is not dominant; not a character")
        mult = remaining[mu]
        for w, m in dominant_character(ambient, mu).entries:
            left = remaining.get(w, 0) - mult * m
            if left < 0:
                raise ValueError(f"multiplicity of {w} driven negative; not a character")
            if left == 0:
                remaining.pop(w, None)
            else:
                remaining[w] = left
        factors.append((mu, mult))
    return tuple(factors)


def has_trivial_factor(char: Character) -> bool:
    """Whether the zero weight occurs among the composition factors."""
    zero = (0,) * char.ambient.rank
    return any(mu == zero for mu, _ in semisimplify(char))


def factor_dimensions(ambient, factors) -> list:
    return [(mu, mult, weyl_dimension(ambient, mu)) for mu, mult in factors]


@dataclass(frozen=True)
class Embedding:
    """A subgroup inclusion, recorded as a map on weight lattices.

    ``matrix`` sends target (overgroup) fundamental coordinates to source
    (subgroup) fundamental coordinates; restriction of characters is the
    pushforward of the weight multiset along it.
    """

    source: object
    target: object
    matrix: tuple
    name: str = ""

    def map_weight(self, w) -> tuple:
        return tuple(
            sum(row[j] * w[j] for j in range(len(w))) for row in self.matrix
        )

    def then(self, inner: "Embedding") -> "Embedding":
        """Compose with a further embedding into this one's source."""
        m = int_matrix(matmul(mat(inner.matrix), mat(self.matrix)))
        name = f"{self.name}>{inner.name}" if self.name and inner.name else ""
        return Embedding(inner.source, self.target, m, name)


def restrict(char: Character, emb: Embedding) -> Character:
    """Restriction of a character along an embedding; dimension is preserved."""
    if char.ambient.label() != emb.target.label():
        raise ValueError(
            f"character lives on {char.ambient.label()}, embedding expects {emb.target.label()}"
        )
    out: dict = {}
    for w, m in char.entries:
        v = emb.map_weight(w)
        out[v] = out.get(v, 0) + m
    result = Character.from_dict(emb.source, out)
    if result.dimension != char.dimension:
        raise AssertionError("restriction changed the total dimension")
    return result
