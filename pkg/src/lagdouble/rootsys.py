"""Root systems, Weyl groups, parabolic subsets, and root-system isometries.

Roots are stored as integer coefficient vectors over the simple roots of
the (product) Cartan type.  The inner product on h* is normalized so that
long roots have squared length 2 in every simple factor, which keeps all
root data rational.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

Root = tuple[int, ...]


class RankCapError(ValueError):
    """Raised when an enumeration is requested above its desk-scale cap."""


class UnknownTypeError(ValueError):
    """Raised for Cartan type strings this library does not know."""


PARABOLIC_RANK_CAP = 4
SIMPLE_SYSTEM_CAP = 4


def _simple_type_data(letter: str, n: int) -> tuple[list[list[int]], list[Fraction]]:
    """Cartan matrix A[i][j] = <alpha_i, alpha_j^vee> and half-norms d_i."""
    one = Fraction(1)
    half = Fraction(1, 2)
    if letter == "A" and n >= 1:
        A = _chain(n)
        return A, [one] * n
    if letter == "B" and n >= 2:
        A = _chain(n)
        A[n - 2][n - 1] = -2
        return A, [one] * (n - 1) + [half]
    if letter == "C" and n >= 2:
        A = _chain(n)
        A[n - 1][n - 2] = -2
        return A, [half] * (n - 1) + [one]
    if letter == "D" and n >= 2:
        A = _chain(n - 1) if n > 1 else []
        for row in A:
            row.append(0)
        A.append([0] * n)
        A[n - 1][n - 1] = 2
        if n >= 3:
            A[n - 3][n - 1] = A[n - 1][n - 3] = -1
        return A, [one] * n
    if letter == "E" and n in (6, 7, 8):
        # Bourbaki numbering: node 2 hangs off node 4 of the chain 1-3-4-5-...
        A = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
        chain = [1, 3, 4, 5, 6, 7, 8][: n - 1]
        for a, b in zip(chain, chain[1:]):
            A[a - 1][b - 1] = A[b - 1][a - 1] = -1
        A[2 - 1][4 - 1] = A[4 - 1][2 - 1] = -1
        return A, [one] * n
    if letter == "F" and n == 4:
        A = [
            [2, -1, 0, 0],
            [-1, 2, -2, 0],
            [0, -1, 2, -1],
            [0, 0, -1, 2],
        ]
        return A, [one, one, half, half]
    if letter == "G" and n == 2:
        A = [[2, -1], [-3, 2]]
        return A, [Fraction(1, 3), one]
    raise UnknownTypeError(f"unknown simple type {letter}{n}")


def _chain(n: int) -> list[list[int]]:
    A = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i in range(n - 1):
        A[i][i + 1] = A[i + 1][i] = -1
    return A


class RootSystem:
    """Finite crystallographic root system of a product Cartan type."""

    def __init__(self, type_string: str):
        self.type_string = type_string.strip()
        factors = []
        offset = 0
        for part in self.type_string.split("x"):
            part = part.strip()
            if len(part) < 2 or not part[0].isalpha():
                raise UnknownTypeError(f"bad Cartan type {part!r}")
            letter, rank = part[0].upper(), part[1:]
            if not rank.isdigit():
                raise UnknownTypeError(f"bad Cartan type {part!r}")
            factors.append((letter, int(rank), offset))
            offset += int(rank)
        self.factors = tuple(factors)
        self.rank = offset

        self.cartan = [[0] * self.rank for _ in range(self.rank)]
        self.d: list[Fraction] = [Fraction(0)] * self.rank
        for letter, n, off in self.factors:
            A, d = _simple_type_data(letter, n)
            for i in range(n):
                self.d[off + i] = d[i]
                for j in range(n):
                    self.cartan[off + i][off + j] = A[i][j]

        # Gram matrix on h*: B[i][j] = <alpha_i, alpha_j> = A[i][j] * d_j
        self.gram = [
            [Fraction(self.cartan[i][j]) * self.d[j] for j in range(self.rank)]
            for i in range(self.rank)
        ]
        for i in range(self.rank):
            for j in range(self.rank):
                assert self.gram[i][j] == self.gram[j][i], "Gram symmetry violated"

        self._generate_roots()
        self._weyl: list[WeylElement] | None = None

    # -- construction ---------------------------------------------------------

    def _generate_roots(self):
        simples = [tuple(1 if j == i else 0 for j in range(self.rank)) for i in range(self.rank)]
        seen = set(simples)
        frontier = list(simples)
        while frontier:
            nxt = []
            for r in frontier:
                for i in range(self.rank):
                    s = self._reflect_simple(r, i)
                    if s not in seen:
                        seen.add(s)
                        nxt.append(s)
            frontier = nxt
        positives = sorted(
            (r for r in seen if all(c >= 0 for c in r)),
            key=lambda r: (sum(r), r),
        )
        for r in seen:
            if not (all(c >= 0 for c in r) or all(c <= 0 for c in r)):
                raise AssertionError(f"indefinite root sign: {r}")
        self.positive_roots: tuple[Root, ...] = tuple(positives)
        self.n_pos = len(positives)
        self.roots: tuple[Root, ...] = tuple(positives) + tuple(
            tuple(-c for c in r) for r in positives
        )
        self._index = {r: k for k, r in enumerate(self.roots)}
        self.simple_indices = tuple(
            self._index[tuple(1 if j == i else 0 for j in range(self.rank))]
            for i in range(self.rank)
        )

    def _reflect_simple(self, r: Root, i: int) -> Root:
        n = sum(r[j] * self.cartan[j][i] for j in range(self.rank))
        out = list(r)
        out[i] -= n
        return tuple(out)

    # -- basic queries ----------------------------------------------------------

    @property
    def n_roots(self) -> int:
        return len(self.roots)

    def root(self, idx: int) -> Root:
        return self.roots[idx]

    def index_of(self, r: Root) -> int | None:
        return self._index.get(tuple(r))

    def neg_index(self, idx: int) -> int:
        return idx + self.n_pos if idx < self.n_pos else idx - self.n_pos

    def is_positive(self, idx: int) -> bool:
        return idx < self.n_pos

    def inner(self, r: Sequence, s: Sequence) -> Fraction:
        tot = Fraction(0)
        for i, a in enumerate(r):
            if not a:
                continue
            for j, b in enumerate(s):
                if b:
                    tot += Fraction(a) * Fraction(b) * self.gram[i][j]
        return tot

    def norm(self, r: Sequence) -> Fraction:
        return self.inner(r, r)

    def cartan_pairing(self, r: Sequence, s: Sequence) -> Fraction:
        """2<r, s>/<s, s>, an integer for roots r, s."""
        return 2 * self.inner(r, s) / self.norm(s)

    def coroot(self, r: Root) -> tuple[Fraction, ...]:
        """Coordinates of r^vee over the simple coroot basis."""
        d_r = self.norm(r) / 2
        return tuple(Fraction(r[i]) * self.d[i] / d_r for i in range(self.rank))

    def root_value_on_coroot_vector(self, r: Sequence, h: Sequence[Fraction]) -> Fraction:
        """r(h) for h given in simple-coroot coordinates (first `rank` entries)."""
        tot = Fraction(0)
        for i in range(self.rank):
            if h[i]:
                pairing = sum(Fraction(r[j]) * self.cartan[j][i] for j in range(self.rank))
                tot += Fraction(h[i]) * pairing
        return tot

    def sum_index(self, i: int, j: int) -> int | None:
        """Index of roots[i] + roots[j] if that sum is a root."""
        s = tuple(a + b for a, b in zip(self.roots[i], self.roots[j]))
        return self._index.get(s)

    def p_value(self, i: int, j: int) -> int:
        """Largest p with roots[j] - p*roots[i] a root (the string length down)."""
        p = 0
        cur = self.roots[j]
        while True:
            cur = tuple(a - b for a, b in zip(cur, self.roots[i]))
            if cur in self._index:
                p += 1
            else:
                return p

    # -- Weyl group ---------------------------------------------------------------

    def simple_reflection_perm(self, i: int) -> tuple[int, ...]:
        return tuple(
            self._index[self._reflect_simple(r, i)] for r in self.roots
        )

    def weyl_group(self) -> list[WeylElement]:
        """All Weyl elements, BFS order (shortest lex-minimal words first)."""
        if self._weyl is not None:
            return self._weyl
        gens = [self.simple_reflection_perm(i) for i in range(self.rank)]
        identity = tuple(range(self.n_roots))
        seen = {identity: ()}
        order = [identity]
        frontier = [identity]
        while frontier:
            nxt = []
            for perm in frontier:
                base = seen[perm]
                for gi, g in enumerate(gens):
                    new = tuple(g[perm[k]] for k in range(self.n_roots))
                    if new not in seen:
                        seen[new] = base + (gi,)
                        order.append(new)
                        nxt.append(new)
            frontier = nxt
        self._weyl = [WeylElement(self, perm, seen[perm]) for perm in order]
        return self._weyl


@dataclass(frozen=True)
class WeylElement:
    """Element of the Weyl group as a permutation of the roots."""

    parent: RootSystem
    perm: tuple[int, ...]
    word: tuple[int, ...]

    def __mul__(self, other: WeylElement) -> WeylElement:
        # left action: (self * other)(r) = self(other(r))
        perm = tuple(self.perm[other.perm[k]] for k in range(len(self.perm)))
        return WeylElement(self.parent, perm, self.word + other.word)

    def inverse(self) -> WeylElement:
        inv = [0] * len(self.perm)
        for k, v in enumerate(self.perm):
            inv[v] = k
        return WeylElement(self.parent, tuple(inv), tuple(reversed(self.word)))

    def matrix_on_weights(self) -> list[list[Fraction]]:
        """Matrix on h* in simple-root coordinates (columns = images of simples)."""
        R = self.parent
        cols = [R.root(self.perm[R.simple_indices[i]]) for i in range(R.rank)]
        return [
            [Fraction(cols[j][i]) for j in range(R.rank)] for i in range(R.rank)
        ]

    def apply_to_coroot_vector(self, h: Sequence[Fraction]) -> tuple[Fraction, ...]:
        """Action on h in simple-coroot coordinates; trailing (central) entries fixed."""
        R = self.parent
        out = [Fraction(0)] * R.rank
        for i in range(R.rank):
            if not h[i]:
                continue
            img = R.coroot(R.root(self.perm[R.simple_indices[i]]))
            for j in range(R.rank):
                out[j] += Fraction(h[i]) * img[j]
        return tuple(out) + tuple(Fraction(x) for x in h[R.rank:])

    def length(self) -> int:
        return len(self.word)


# -- parabolic subsets -----------------------------------------------------------


@dataclass(frozen=True)
class ParabolicSubset:
    """Closed subset P of R with P u (-P) = R; A = P n (-P) is its Levi part."""

    parent: RootSystem
    members: frozenset[int]

    def __post_init__(self):
        R = self.parent
        for i in self.members:
            if not (0 <= i < R.n_roots):
                raise ValueError("root index out of range")
        for i in range(R.n_pos):
            if i not in self.members and R.neg_index(i) not in self.members:
                raise ValueError("P u (-P) != R")
        for i in self.members:
            for j in self.members:
                k = R.sum_index(i, j)
                if k is not None and k not in self.members:
                    raise ValueError("subset is not closed under root addition")

    @property
    def levi_part(self) -> frozenset[int]:
        R = self.parent
        return frozenset(i for i in self.members if R.neg_index(i) in self.members)

    def nilradical_part(self) -> frozenset[int]:
        return self.members - self.levi_part

    def sorted_members(self) -> tuple[int, ...]:
        return tuple(sorted(self.members))

    def translate(self, w: WeylElement) -> ParabolicSubset:
        return ParabolicSubset(self.parent, frozenset(w.perm[i] for i in self.members))


def standard_parabolic(R: RootSystem, simple_subset: Iterable[int]) -> ParabolicSubset:
    """P = R+ union (-R+ restricted to the span of the chosen simple roots)."""
    s = set(simple_subset)
    members = set(range(R.n_pos))
    for i in range(R.n_pos):
        r = R.root(i)
        if all(c == 0 for k, c in enumerate(r) if k not in s):
            members.add(R.neg_index(i))
    return ParabolicSubset(R, frozenset(members))


def enumerate_parabolic_subsets(R: RootSystem) -> list[ParabolicSubset]:
    """All parabolic subsets: standard ones closed under the Weyl action."""
    if R.rank > PARABOLIC_RANK_CAP:
        raise RankCapError(f"parabolic enumeration capped at rank {PARABOLIC_RANK_CAP}")
    seen: set[frozenset[int]] = set()
    for size in range(R.rank + 1):
        for subset in combinations(range(R.rank), size):
            base = standard_parabolic(R, subset)
            for w in R.weyl_group():
                seen.add(frozenset(w.perm[i] for i in base.members))
    ordered = sorted(seen, key=lambda m: tuple(sorted(m)))
    return [ParabolicSubset(R, m) for m in ordered]


def simple_system_of(R: RootSystem, subset: Iterable[int]) -> tuple[int, ...]:
    """Simple roots of a closed symmetric subset: indecomposable positives."""
    sub = set(subset)
    pos = sorted(i for i in sub if R.is_positive(i))
    pos_set = set(pos)
    simples = []
    for i in pos:
        decomposable = False
        for j in pos:
            k = R.index_of(tuple(a - b for a, b in zip(R.root(i), R.root(j))))
            if j != i and k in pos_set:
                decomposable = True
                break
        if not decomposable:
            simples.append(i)
    return tuple(simples)


# -- isometries between root subsystems -------------------------------------------


@dataclass
class RootIsometry:
    """Scalar-product-preserving bijection of root subsystems A -> A'."""

    parent: RootSystem
    source: tuple[int, ...]
    target: tuple[int, ...]
    mapping: dict[int, int]
    _levi: tuple[int, ...] | None = dc_field(default=None, repr=False)
    _preserves: bool | None = dc_field(default=None, repr=False)

    def apply(self, idx: int) -> int:
        return self.mapping[idx]

    def inverse_apply(self, idx: int) -> int:
        for k, v in self.mapping.items():
            if v == idx:
                return k
        raise KeyError(idx)

    def is_isometric(self) -> bool:
        R = self.parent
        items = sorted(self.mapping.items())
        for (i, si), (j, sj) in combinations(items, 2):
            if R.inner(R.root(i), R.root(j)) != R.inner(R.root(si), R.root(sj)):
                return False
        return all(
            R.norm(R.root(i)) == R.norm(R.root(si)) for i, si in items
        )

    @property
    def levi_subset(self) -> tuple[int, ...]:
        """U = {a in A n A' : sigma^l(a) in A n A' for all integers l}."""
        if self._levi is not None:
            return self._levi
        both = set(self.source) & set(self.target)
        inv = {v: k for k, v in self.mapping.items()}
        out = []
        for a in sorted(both):
            ok = True
            cur, visited = a, set()
            while True:
                if cur not in self.mapping or self.mapping[cur] not in both:
                    ok = False
                    break
                cur = self.mapping[cur]
                if cur in visited:
                    break
                visited.add(cur)
            cur, visited = a, set()
            while ok:
                if cur not in inv or inv[cur] not in both:
                    ok = False
                    break
                cur = inv[cur]
                if cur in visited:
                    break
                visited.add(cur)
            if ok:
                out.append(a)
        self._levi = tuple(out)
        return self._levi

    def preserves_simple_system(self) -> bool:
        """True iff some simple system of U is mapped to itself by sigma."""
        if self._preserves is not None:
            return self._preserves
        R = self.parent
        U = self.levi_subset
        if not U:
            self._preserves = True
            return True
        delta = simple_system_of(R, U)
        if len(delta) > SIMPLE_SYSTEM_CAP:
            raise RankCapError(f"simple-system search capped at rank {SIMPLE_SYSTEM_CAP}")
        bases = _all_simple_systems(R, U, delta)
        sig = self.mapping
        self._preserves = any(
            frozenset(sig[b] for b in base) == base for base in bases
        )
        return self._preserves


def _reflection_perm_on_subset(R: RootSystem, U: tuple[int, ...], beta: int) -> dict[int, int]:
    out = {}
    b = R.root(beta)
    for u in U:
        r = R.root(u)
        n = R.cartan_pairing(r, b)
        img = tuple(a - int(n) * c for a, c in zip(r, b))
        out[u] = R.index_of(img)
    return out


def _all_simple_systems(R: RootSystem, U: tuple[int, ...], delta: tuple[int, ...]) -> set[frozenset[int]]:
    """The W(U)-orbit of one simple system (= all simple systems of U)."""
    gens = [_reflection_perm_on_subset(R, U, b) for b in delta]
    start = frozenset(delta)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for base in frontier:
            for g in gens:
                img = frozenset(g[x] for x in base)
                if img not in seen:
                    seen.add(img)
                    nxt.append(img)
        frontier = nxt
    return seen


def enumerate_isometries(
    R: RootSystem, source: Iterable[int], target: Iterable[int]
) -> list[RootIsometry]:
    """All scalar-product-preserving bijections source -> target.

    Brute force with Gram pruning over images of a simple system of the
    source, then linear extension checked against the target root set.
    """
    A = tuple(sorted(source))
    Ap = tuple(sorted(target))
    if len(A) != len(Ap):
        return []
    if not A:
        return [RootIsometry(R, A, Ap, {})]
    delta = simple_system_of(R, A)
    delta_roots = [R.root(i) for i in delta]
    gram = [[R.inner(a, b) for b in delta_roots] for a in delta_roots]
    # coordinates of every source root over the simple system of A
    coords = _coords_over(R, A, delta)
    target_set = set(Ap)
    results = []

    def extend(k: int, chosen: list[int]):
        if k == len(delta):
            mapping = {}
            ok = True
            for a in A:
                img_vec = [0] * R.rank
                for c, t in zip(coords[a], chosen):
                    rt = R.root(t)
                    for q in range(R.rank):
                        img_vec[q] += c * rt[q]
                idx = R.index_of(tuple(int(x) for x in img_vec))
                if idx is None or idx not in target_set:
                    ok = False
                    break
                mapping[a] = idx
            if ok and len(set(mapping.values())) == len(Ap):
                results.append(RootIsometry(R, A, Ap, mapping))
            return
        for t in Ap:
            rt = R.root(t)
            if R.norm(rt) != R.norm(delta_roots[k]):
                continue
            if any(
                R.inner(R.root(chosen[j]), rt) != gram[j][k] for j in range(k)
            ):
                continue
            chosen.append(t)
            extend(k + 1, chosen)
            chosen.pop()

    extend(0, [])
    results.sort(key=lambda s: tuple(sorted(s.mapping.items())))
    return results


def _coords_over(R: RootSystem, A: tuple[int, ...], delta: tuple[int, ...]) -> dict[int, tuple[Fraction, ...]]:
    """Coordinates of each root of A over the simple system delta (exact)."""
    from .exactlin import Matrix, QQ

    cols = [R.root(i) for i in delta]
    M = Matrix(QQ, [[Fraction(cols[j][i]) for j in range(len(delta))] for i in range(R.rank)])
    out = {}
    for a in A:
        sol = M.solve_right([Fraction(x) for x in R.root(a)])
        assert sol is not None, "simple system does not span its subsystem"
        coeffs = tuple(x.rational_value() for x in sol)
        assert all(c.denominator == 1 for c in coeffs)
        out[a] = tuple(int(c) for c in coeffs)
    return out


# -- canonical labels --------------------------------------------------------------


def weyl_canonical_label(
    R: RootSystem,
    P: Iterable[int],
    Pprime: Iterable[int],
    sigma: dict[int, int],
    h: Sequence[Fraction],
) -> tuple:
    """Lexicographically minimal representative of the diagonal W-orbit.

    The tuple (P, P', sigma, h) is translated by every Weyl element; h may
    carry extra central coordinates after the first `rank` entries, which
    the action fixes.  Equal keys <=> W-conjugate tuples.
    """
    P = tuple(sorted(P))
    Pp = tuple(sorted(Pprime))
    h = tuple(Fraction(x) for x in h)
    best = None
    for w in R.weyl_group():
        tP = tuple(sorted(w.perm[i] for i in P))
        tPp = tuple(sorted(w.perm[i] for i in Pp))
        tsig = tuple(sorted((w.perm[a], w.perm[b]) for a, b in sigma.items()))
        th = w.apply_to_coroot_vector(h)
        key = (tP, tPp, tsig, th)
        if best is None or key < best:
            best = key
    return best


def label_key_string(key: tuple) -> str:
    """Stable string form of a canonical label key."""
    tP, tPp, tsig, th = key
    sig = ",".join(f"{a}>{b}" for a, b in tsig)
    hs = ",".join(str(x) for x in th)
    return f"P[{','.join(map(str, tP))}]|P'[{','.join(map(str, tPp))}]|s[{sig}]|h[{hs}]"
