"""Root systems of the simple types, their lattices and diagram combinatorics.

Roots are stored as integer coordinate vectors in the simple-root basis;
weights as integer vectors in the fundamental-weight basis.  All conversions
run through the Cartan matrix over exact rationals.  Node numbering follows
the standard Bourbaki labelling throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .linalg import Matrix, dot, invert, mat, matvec, transpose

FAMILIES = "ABCDEFG"

_ADJOINT_DIM = {
    "A": lambda n: n * (n + 2),
    "B": lambda n: n * (2 * n + 1),
    "C": lambda n: n * (2 * n + 1),
    "D": lambda n: n * (2 * n - 1),
    "E": lambda n: {6: 78, 7: 133, 8: 248}[n],
    "F": lambda n: 52,
    "G": lambda n: 14,
}

_NUM_ROOTS = {
    "A": lambda n: n * (n + 1),
    "B": lambda n: 2 * n * n,
    "C": lambda n: 2 * n * n,
    "D": lambda n: 2 * n * (n - 1),
    "E": lambda n: {6: 72, 7: 126, 8: 240}[n],
    "F": lambda n: 48,
    "G": lambda n: 12,
}


def is_admissible(family: str, rank: int) -> bool:
    if family in ("A", "B", "C"):
        return rank >= 1
    if family == "D":
        return rank >= 3
    if family == "E":
        return rank in (6, 7, 8)
    if family == "F":
        return rank == 4
    if family == "G":
        return rank == 2
    return False


@dataclass(frozen=True, order=True)
class SimpleType:
    """One simple type, e.g. E8 or B4."""

    family: str
    rank: int

    def __post_init__(self):
        if not is_admissible(self.family, self.rank):
            raise ValueError(f"inadmissible simple type {self.family}{self.rank}")

    @staticmethod
    def parse(text: str) -> "SimpleType":
        text = text.strip()
        if not text or text[0].upper() not in FAMILIES or not text[1:].isdigit():
            raise ValueError(f"cannot parse simple type {text!r}")
        return SimpleType(text[0].upper(), int(text[1:]))

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"

    @property
    def adjoint_dimension(self) -> int:
        return _ADJOINT_DIM[self.family](self.rank)

    @property
    def num_roots(self) -> int:
        return _NUM_ROOTS[self.family](self.rank)


def cartan_matrix(st: SimpleType) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix A with A[i][j] = <alpha_i, alpha_j-coroot>."""
    n = st.rank
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def bond(i, j, aij=-1, aji=-1):
        a[i][j] = aij
        a[j][i] = aji

    fam = st.family
    if fam in ("A", "B", "C"):
        for i in range(n - 1):
            bond(i, i + 1)
        if fam == "B" and n >= 2:
            bond(n - 2, n - 1, -2, -1)
        if fam == "C" and n >= 2:
            bond(n - 2, n - 1, -1, -2)
    elif fam == "D":
        for i in range(n - 2):
            bond(i, i + 1)
        bond(n - 3, n - 1)
    elif fam == "E":
        chain = [0, 2, 3, 4, 5, 6, 7][: n - 1]
        for x, y in zip(chain, chain[1:]):
            bond(x, y)
        bond(1, 3)
    elif fam == "F":
        bond(0, 1)
        bond(1, 2, -2, -1)
        bond(2, 3)
    elif fam == "G":
        bond(0, 1, -1, -3)
    return tuple(tuple(row) for row in a)


def symmetrizer(cartan) -> tuple[int, ...]:
    """Integers d with A[i][j]*d[j] = A[j][i]*d[i]; d[i] is half the root norm."""
    n = len(cartan)
    d = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        queue = [start]
        while queue:
            i = queue.pop()
            for j in range(n):
                if i != j and cartan[i][j] != 0 and d[j] is None:
                    d[j] = d[i] * cartan[j][i] / cartan[i][j]
                    queue.append(j)
    denom = 1
    for x in d:
        denom = denom * x.denominator // _gcd(denom, x.denominator)
    out = [x * denom for x in d]
    g = 0
    for x in out:
        g = _gcd(g, x.numerator)
    return tuple(int(x / g) for x in out)


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return abs(a)


class RootSystem:
    """Immutable root-system data for one simple type.

    Construction generates all roots by reflection closure from the simple
    roots.  Instances are cached per type and safely shareable.
    """

    def __init__(self, st: SimpleType):
        self.type = st
        self.rank = st.rank
        self.cartan = cartan_matrix(st)
        self.d = symmetrizer(self.cartan)
        # gram[i][j] = (alpha_i, alpha_j), up to one global scale per system
        self.gram = tuple(
            tuple(self.cartan[i][j] * self.d[j] for j in range(self.rank))
            for i in range(self.rank)
        )
        self._close_roots()
        at_inv = invert(transpose(mat(self.cartan)))
        self._cartan_t_inv = at_inv
        # (mu, nu) on fundamental coordinates, scaled by a global integer so
        # that entries are integral; all uses are ratios of inner products
        fund = [
            [self.d[i] * at_inv[i][j] for j in range(self.rank)] for i in range(self.rank)
        ]
        scale = 1
        for row in fund:
            for x in row:
                scale = scale * x.denominator // _gcd(scale, x.denominator)
        self.gram_scale = scale
        self.gram_fund: Matrix = tuple(
            tuple(int(x * scale) for x in row) for row in fund
        )
        self._height_vec = tuple(sum(col) for col in zip(*at_inv))
        self.positive_roots_fund = tuple(self.root_to_weight(c) for c in self.positive_roots)

    def _close_roots(self):
        simple = [tuple(1 if j == i else 0 for j in range(self.rank)) for i in range(self.rank)]
        roots = set(simple)
        frontier = list(simple)
        while frontier:
            nxt = []
            for c in frontier:
                for i in range(self.rank):
                    pairing = sum(c[j] * self.cartan[j][i] for j in range(self.rank))
                    r = list(c)
                    r[i] -= pairing
                    r = tuple(r)
                    if r not in roots:
                        roots.add(r)
                        nxt.append(r)
            frontier = nxt
        self.all_roots = frozenset(roots) | frozenset(tuple(-x for x in c) for c in roots)
        self.positive_roots = tuple(
            sorted(c for c in self.all_roots if all(x >= 0 for x in c))
        )
        self.highest_root = max(self.positive_roots, key=sum)
        self.marks = self.highest_root
        fund = self.root_to_weight(self.highest_root)
        if any(m < 0 for m in fund):
            raise AssertionError("highest root is not dominant")

    # -- coordinate conversions ------------------------------------------

    def root_to_weight(self, coords) -> tuple[int, ...]:
        """Fundamental coordinates of an element of the root lattice."""
        return tuple(
            sum(coords[i] * self.cartan[i][j] for i in range(self.rank))
            for j in range(self.rank)
        )

    def weight_to_root_coords(self, weight) -> tuple[Fraction, ...]:
        return matvec(self._cartan_t_inv, weight)

    def height(self, weight) -> Fraction:
        return dot(self._height_vec, weight)

    def inner(self, mu, nu) -> Fraction:
        return dot(mu, matvec(self.gram_fund, nu))

    def root_norm(self, coords) -> Fraction:
        return dot(coords, matvec(mat(self.gram), coords))

    def pairing_with_coroot(self, weight, root_coords) -> Fraction:
        """<weight, root-coroot> = 2 (weight, root) / (root, root)."""
        num = 2 * sum(weight[j] * self.d[j] * root_coords[j] for j in range(self.rank))
        return Fraction(num, self.root_norm(root_coords))

    # -- Weyl group action ------------------------------------------------

    def reflect(self, weight, i: int) -> tuple[int, ...]:
        m = weight[i]
        if m == 0:
            return tuple(weight)
        return tuple(weight[j] - m * self.cartan[i][j] for j in range(self.rank))

    def dominantize(self, weight) -> tuple[int, ...]:
        w = tuple(weight)
        while True:
            i = next((k for k in range(self.rank) if w[k] < 0), None)
            if i is None:
                return w
            w = self.reflect(w, i)

    def is_dominant(self, weight) -> bool:
        return all(x >= 0 for x in weight)

    def weyl_orbit(self, weight) -> frozenset:
        """Full Weyl orbit of a weight, generated by simple-reflection closure."""
        start = self.dominantize(weight)
        seen = {start}
        frontier = [start]
        while frontier:
            nxt = []
            for w in frontier:
                for i in range(self.rank):
                    if w[i] > 0:
                        r = self.reflect(w, i)
                        if r not in seen:
                            seen.add(r)
                            nxt.append(r)
            frontier = nxt
        return frozenset(seen)

    # -- extended diagram --------------------------------------------------

    @property
    def affine_root(self) -> tuple[int, ...]:
        return tuple(-m for m in self.marks)

    def extended_nodes(self) -> list[tuple[int, tuple[int, ...]]]:
        """(key, root) pairs for the extended diagram; key 0 is the affine node."""
        nodes = [(0, self.affine_root)]
        for i in range(self.rank):
            nodes.append((i + 1, tuple(1 if j == i else 0 for j in range(self.rank))))
        return nodes

    def label(self) -> str:
        return str(self.type)

    @property
    def factors(self):
        return (self,)

    def __repr__(self):
        return f"RootSystem({self.type})"


@lru_cache(maxsize=None)
def build_root_system(st: SimpleType) -> RootSystem:
    """Construct (once) the root system of a simple type."""
    return RootSystem(st)


def root_system(text: str) -> RootSystem:
    return build_root_system(SimpleType.parse(text))


def highest_root_marks(rs: RootSystem) -> tuple[int, ...]:
    """Coefficients of the highest root over the simple roots."""
    return rs.marks


def weyl_orbit(rs: RootSystem, weight) -> frozenset:
    return rs.weyl_orbit(weight)


class ProductRootSystem:
    """Product of simple root systems with concatenated coordinate blocks."""

    def __init__(self, factors):
        flat = []
        for f in factors:
            flat.extend(f.factors)
        self.factors = tuple(flat)
        self.rank = sum(f.rank for f in self.factors)
        self._offsets = []
        off = 0
        for f in self.factors:
            self._offsets.append(off)
            off += f.rank
        self.positive_roots_fund = tuple(
            self._pad(i, w) for i, f in enumerate(self.factors) for w in f.positive_roots_fund
        )
        # bring every factor's scaled Gram matrix to one common scale
        common = 1
        for f in self.factors:
            common = common * f.gram_scale // _gcd_int(common, f.gram_scale)
        self.gram_scale = common
        self.gram_fund = _block_diagonal(
            [
                tuple(
                    tuple(x * (common // f.gram_scale) for x in row) for row in f.gram_fund
                )
                for f in self.factors
            ]
        )
        self._height_vec = tuple(x for f in self.factors for x in f._height_vec)

    def _pad(self, idx: int, weight) -> tuple[int, ...]:
        off = self._offsets[idx]
        out = [0] * self.rank
        out[off : off + len(weight)] = weight
        return tuple(out)

    def split(self, weight):
        return tuple(
            tuple(weight[o : o + f.rank]) for o, f in zip(self._offsets, self.factors)
        )

    def height(self, weight) -> Fraction:
        return dot(self._height_vec, weight)

    def inner(self, mu, nu) -> Fraction:
        return dot(mu, matvec(self.gram_fund, nu))

    def is_dominant(self, weight) -> bool:
        return all(x >= 0 for x in weight)

    def dominantize(self, weight):
        parts = [f.dominantize(w) for f, w in zip(self.factors, self.split(weight))]
        return tuple(x for p in parts for x in p)

    def weyl_orbit(self, weight) -> frozenset:
        orbits = [f.weyl_orbit(w) for f, w in zip(self.factors, self.split(weight))]
        out = {()}
        for orb in orbits:
            out = {w + o for w in out for o in orb}
        return frozenset(out)

    def label(self) -> str:
        return "*".join(f.label() for f in self.factors)

    def __repr__(self):
        return f"ProductRootSystem({self.label()})"


def _gcd_int(a, b):
    while b:
        a, b = b, a % b
    return abs(a) or 1


def _block_diagonal(blocks) -> Matrix:
    n = sum(len(b) for b in blocks)
    out = [[0] * n for _ in range(n)]
    off = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, x in enumerate(row):
                out[off + i][off + j] = x
        off += len(b)
    return tuple(tuple(row) for row in out)


def ambient_for(types) -> "RootSystem | ProductRootSystem":
    systems = [build_root_system(t) for t in types]
    if len(systems) == 1:
        return systems[0]
    return ProductRootSystem(systems)


# -- semisimple type labels -------------------------------------------------


@dataclass(frozen=True)
class SemisimpleTypeLabel:
    """Multiset of simple types with display-only annotations.

    A bar annotation marks factors generated by long root subgroups; it never
    enters dimension or rank arithmetic.
    """

    factors: tuple[tuple[SimpleType, bool], ...]

    @staticmethod
    def of(*types, bars=None) -> "SemisimpleTypeLabel":
        parsed = [t if isinstance(t, SimpleType) else SimpleType.parse(t) for t in types]
        flags = bars or [False] * len(parsed)
        return SemisimpleTypeLabel(_canonical(zip(parsed, flags)))

    @staticmethod
    def parse(text: str) -> "SemisimpleTypeLabel":
        factors = []
        for token in text.replace(" ", "").split("*"):
            if not token:
                raise ValueError(f"empty factor in label {text!r}")
            bar = token.startswith("~")
            if bar:
                token = token[1:]
            power = 1
            if "^" in token:
                token, exp = token.split("^", 1)
                power = int(exp)
            st = SimpleType.parse(token)
            factors.extend([(st, bar)] * power)
        return SemisimpleTypeLabel(_canonical(factors))

    def __str__(self) -> str:
        out = []
        run = None
        count = 0
        for fac in self.factors + ((None, None),):
            if fac == run:
                count += 1
                continue
            if run is not None and run[0] is not None:
                st, bar = run
                body = ("~" if bar else "") + str(st)
                out.append(body if count == 1 else f"{body}^{count}")
            run, count = fac, 1
        return "*".join(out)

    @property
    def dimension(self) -> int:
        return sum(st.adjoint_dimension for st, _ in self.factors)

    @property
    def rank(self) -> int:
        return sum(st.rank for st, _ in self.factors)

    def plain(self) -> "SemisimpleTypeLabel":
        """The same label with annotations stripped."""
        return SemisimpleTypeLabel(_canonical((st, False) for st, _ in self.factors))

    def same_type(self, other: "SemisimpleTypeLabel") -> bool:
        return self.plain() == other.plain()


def _canonical(factors) -> tuple:
    return tuple(sorted(factors, key=lambda f: (f[0].family, f[0].rank, not f[1])))


EMPTY_LABEL = SemisimpleTypeLabel(())


# -- subsystem diagram classification ---------------------------------------


def classify_subdiagram(rs: RootSystem, nodes):
    """Split a set of mutually non-adjacent-to-nothing roots into simple components.

    ``nodes`` is a list of (key, coords) pairs of roots of ``rs`` forming a
    base of a subsystem.  Returns a list of (SimpleType, ordered keys) with a
    deterministic Bourbaki-compatible ordering per component, sorted by
    (family, rank, keys).
    """
    keys = [k for k, _ in nodes]
    coords = {k: c for k, c in nodes}
    pair = {
        (a, b): rs.pairing_with_coroot(rs.root_to_weight(coords[a]), coords[b])
        for a in keys
        for b in keys
    }
    norm = {k: rs.root_norm(coords[k]) for k in keys}
    adj = {k: sorted(j for j in keys if j != k and pair[(k, j)] != 0) for k in keys}

    components = []
    seen = set()
    for k in sorted(keys):
        if k in seen:
            continue
        comp = []
        stack = [k]
        seen.add(k)
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        components.append(sorted(comp))

    out = [_classify_component(rs, comp, pair, norm, adj) for comp in components]
    return sorted(out, key=lambda t: (t[0].family, t[0].rank, t[1]))


def _classify_component(rs, comp, pair, norm, adj):
    n = len(comp)
    if n == 1:
        k = comp[0]
        short = norm[k] < max(norm[j] for j in norm)
        fam = "B" if (short and rs.type.family == "B") else "A"
        return SimpleType(fam, 1), (k,)

    deg = {k: len([j for j in adj[k] if j in comp]) for k in comp}
    edge_mark = {}
    for a in comp:
        for b in comp:
            if a < b and pair[(a, b)] != 0:
                edge_mark[(a, b)] = int(pair[(a, b)] * pair[(b, a)])
    max_mark = max(edge_mark.values())

    if max_mark == 3:
        a, b = comp
        short, long_ = (a, b) if norm[a] < norm[b] else (b, a)
        return SimpleType("G", 2), (short, long_)

    if max_mark == 2:
        return _classify_double(comp, norm, adj, deg)

    ends = sorted(k for k in comp if deg[k] == 1)
    branch = [k for k in comp if deg[k] == 3]
    if not branch:
        path = _walk_path(ends[0], adj, comp)
        return SimpleType("A", n), tuple(path)
    return _classify_forked(comp, adj, deg, branch[0], n)


def _classify_double(comp, norm, adj, deg):
    n = len(comp)
    ends = sorted(k for k in comp if deg[k] == 1)
    if any(deg[k] > 2 for k in comp):
        raise ValueError("unrecognized diagram: branch with a double bond")
    if n == 2:
        a, b = comp
        long_, short = (a, b) if norm[a] > norm[b] else (b, a)
        return SimpleType("B", 2), (long_, short)
    path = _walk_path(ends[0], adj, comp)
    longs = [k for k in comp if norm[k] == max(norm[j] for j in comp)]
    shorts = [k for k in comp if k not in longs]
    if len(shorts) == 2 and len(longs) == 2 and n == 4:
        if norm[path[0]] < norm[path[-1]]:
            path.reverse()
        return SimpleType("F", 4), tuple(path)
    if len(shorts) == 1:
        if path[0] == shorts[0]:
            path.reverse()
        return SimpleType("B", n), tuple(path)
    if len(longs) == 1:
        if path[0] == longs[0]:
            path.reverse()
        return SimpleType("C", n), tuple(path)
    raise ValueError("unrecognized diagram with a double bond")


def _classify_forked(comp, adj, deg, center, n):
    legs = []
    for first in sorted(j for j in adj[center] if j in comp):
        leg = [first]
        prev = center
        while True:
            nxt = [j for j in adj[leg[-1]] if j in comp and j != prev]
            if not nxt:
                break
            prev = leg[-1]
            leg.append(nxt[0])
        legs.append(leg)
    legs.sort(key=lambda leg: (len(leg), leg))
    sizes = tuple(len(leg) for leg in legs)

    if sizes == (1, 1, 1):
        a, b, c = (leg[0] for leg in legs)
        return SimpleType("D", 4), (a, center, b, c)
    if sizes[:2] == (1, 1):
        # fork nodes in descending key order; fixes the half-spin labelling
        tail = list(reversed(legs[2])) + [center]
        return SimpleType("D", n), tuple(tail + [legs[1][0], legs[0][0]])
    if sizes == (1, 2, 2):
        l1, l2 = legs[1], legs[2]
        return SimpleType("E", 6), (l1[1], legs[0][0], l1[0], center, l2[0], l2[1])
    if sizes == (1, 2, 3):
        l2, l3 = legs[1], legs[2]
        return SimpleType("E", 7), (l2[1], legs[0][0], l2[0], center, l3[0], l3[1], l3[2])
    if sizes == (1, 2, 4):
        l2, l4 = legs[1], legs[2]
        return (
            SimpleType("E", 8),
            (l2[1], legs[0][0], l2[0], center, l4[0], l4[1], l4[2], l4[3]),
        )
    raise ValueError(f"unrecognized forked diagram with legs {sizes}")


def _walk_path(start, adj, comp):
    path = [start]
    prev = None
    while True:
        nxt = [j for j in adj[path[-1]] if j in comp and j != prev]
        if not nxt:
            return path
        prev = path[-1]
        path.append(nxt[0])


# -- diagram folding --------------------------------------------------------

_FOLD_RULES = {
    ("A", 2): lambda n: SimpleType("C", (n + 1) // 2) if n % 2 else SimpleType("B", n // 2),
    ("D", 2): lambda n: SimpleType("B", n - 1),
    ("D", 3): lambda n: SimpleType("G", 2),
    ("E", 2): lambda n: SimpleType("F", 4),
}


def fold(rs: RootSystem, automorphism_order: int) -> SemisimpleTypeLabel:
    """Type of the fixed subgroup of the standard diagram automorphism.

    Only the generic-characteristic row of the folding table is produced:
    A(2n-1) -> Cn, A(2n) -> Bn, Dn -> B(n-1), D4 with order 3 -> G2,
    E6 -> F4.
    """
    st = rs.type
    perm = _diagram_automorphism(st, automorphism_order)
    if perm is None:
        raise ValueError(f"{st} has no diagram automorphism of order {automorphism_order}")
    rule = _FOLD_RULES.get((st.family, automorphism_order))
    result = rule(st.rank)
    orbits = _orbit_count(perm)
    if orbits != result.rank:
        raise AssertionError("folded rank does not match automorphism orbits")
    return SemisimpleTypeLabel.of(result)


def _diagram_automorphism(st: SimpleType, order: int):
    n = st.rank
    if st.family == "A" and order == 2 and n >= 2:
        return tuple(n - 1 - i for i in range(n))
    if st.family == "D" and order == 2 and n >= 3:
        perm = list(range(n))
        perm[n - 2], perm[n - 1] = perm[n - 1], perm[n - 2]
        return tuple(perm)
    if st == SimpleType("D", 4) and order == 3:
        return (2, 1, 3, 0)
    if st == SimpleType("E", 6) and order == 2:
        return (5, 1, 4, 3, 2, 0)
    return None


def _orbit_count(perm) -> int:
    seen = set()
    count = 0
    for i in range(len(perm)):
        if i in seen:
            continue
        count += 1
        j = i
        while j not in seen:
            seen.add(j)
            j = perm[j]
    return count
