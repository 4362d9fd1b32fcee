"""Simple root systems in Dynkin-label coordinates.

Every weight is a tuple of integers, its coordinates in the basis of
fundamental weights.  Simple roots are the rows of the Cartan matrix and the
basic inner product is carried as an exact rational Gram matrix normalized so
that long roots have squared length 2.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Optional, Sequence, Tuple

Weight = Tuple[int, ...]


class RootSystemError(ValueError):
    """Invalid Lie type or incompatible weight data."""


_RANK_RULES = {
    "A": (lambda r: r >= 1, "A_r needs r >= 1"),
    "B": (lambda r: r >= 2, "B_r needs r >= 2"),
    "C": (lambda r: r >= 3, "C_r needs r >= 3"),
    "D": (lambda r: r >= 4, "D_r needs r >= 4"),
    "E": (lambda r: r in (6, 7, 8), "E_r needs r in {6, 7, 8}"),
    "F": (lambda r: r == 4, "F_r needs r == 4"),
    "G": (lambda r: r == 2, "G_r needs r == 2"),
}


@dataclass(frozen=True, order=True)
class LieType:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in _RANK_RULES:
            raise RootSystemError(f"unknown family {self.family!r}; expected one of ABCDEFG")
        if not isinstance(self.rank, int) or isinstance(self.rank, bool):
            raise RootSystemError(f"rank must be an integer, got {self.rank!r}")
        ok, msg = _RANK_RULES[self.family]
        if not ok(self.rank):
            raise RootSystemError(f"invalid type {self.family}{self.rank}: {msg}")

    @classmethod
    def parse(cls, text: str) -> "LieType":
        """Parse strings such as ``"A2"`` or ``"E7"``."""
        m = re.fullmatch(r"\s*([A-Ga-g])(\d+)\s*", text)
        if not m:
            raise RootSystemError(f"cannot parse Lie type {text!r}; use e.g. 'A2', 'D4'")
        return cls(m.group(1).upper(), int(m.group(2)))

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


def _dynkin_data(t: LieType):
    """Edges of the Dynkin diagram and squared root lengths (long roots = 2).

    Bourbaki numbering, 0-based.
    """
    r = t.rank
    path = [(i, i + 1) for i in range(r - 1)]
    two, one, third = Fraction(2), Fraction(1), Fraction(2, 3)
    if t.family == "A":
        return path, [two] * r
    if t.family == "B":
        return path, [two] * (r - 1) + [one]
    if t.family == "C":
        return path, [one] * (r - 1) + [two]
    if t.family == "D":
        return [(i, i + 1) for i in range(r - 2)] + [(r - 3, r - 1)], [two] * r
    if t.family == "E":
        edges = [(0, 2), (2, 3), (3, 4), (1, 3)] + [(i, i + 1) for i in range(4, r - 1)]
        return edges, [two] * r
    if t.family == "F":
        return path, [two, two, one, one]
    if t.family == "G":
        return path, [third, two]
    raise AssertionError(t)


def _inverse(m):
    """Exact inverse of a square rational matrix (Gauss-Jordan)."""
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(m)]
    for col in range(n):
        piv = next(i for i in range(col, n) if a[i][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for i in range(n):
            if i != col and a[i][col] != 0:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[col])]
    return [row[n:] for row in a]


@dataclass(frozen=True, eq=False)
class RootSystem:
    lie_type: LieType
    cartan_matrix: Tuple[Tuple[int, ...], ...]
    simple_roots: Tuple[Weight, ...]
    positive_roots: Tuple[Weight, ...]
    rho: Weight
    highest_root: Weight
    dual_coxeter: int
    gram: Tuple[Tuple[Fraction, ...], ...]
    coroot_images: Tuple[Tuple[Fraction, ...], ...]
    root_lengths: Tuple[Fraction, ...]
    # memo tables for representation-ring computations; keyed by weight
    _memo: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def rank(self) -> int:
        return self.lie_type.rank

    @property
    def num_positive_roots(self) -> int:
        return len(self.positive_roots)

    def check(self, mu: Sequence[int]) -> Weight:
        mu = tuple(int(x) for x in mu)
        if len(mu) != self.rank:
            raise RootSystemError(
                f"weight {mu} has length {len(mu)}, expected rank {self.rank} for {self.lie_type}")
        return mu

    def __repr__(self) -> str:
        return f"RootSystem({self.lie_type})"


@lru_cache(maxsize=None)
def _build(t: LieType) -> RootSystem:
    r = t.rank
    edges, lengths = _dynkin_data(t)
    s = [[Fraction(0)] * r for _ in range(r)]
    for i in range(r):
        s[i][i] = lengths[i]
    for i, j in edges:
        # adjacent simple roots: (a_i, a_j) = -max(|a_i|^2, |a_j|^2) / 2
        s[i][j] = s[j][i] = -max(lengths[i], lengths[j]) / 2
    cartan = tuple(tuple(int(2 * s[i][j] / s[j][j]) for j in range(r)) for i in range(r))
    simple = cartan

    # B on Dynkin labels: G = D S^{-1} D with D = diag(|alpha_i|^2 / 2)
    d = [x / 2 for x in lengths]
    s_inv = _inverse(s)
    gram = [[d[i] * s_inv[i][j] * d[j] for j in range(r)] for i in range(r)]

    positive = _positive_roots(simple)
    height = _root_heights(cartan, positive)
    highest = max(positive, key=lambda a: (height[a], a))

    def b(x, y):
        return sum(gram[i][j] * x[i] * y[j] for i in range(r) for j in range(r))

    theta_sq = b(highest, highest)
    scale = Fraction(2) / theta_sq
    if scale != 1:
        gram = [[scale * x for x in row] for row in gram]
        lengths = [scale * x for x in lengths]
    rho = (1,) * r
    hv = 1 + sum(gram[i][j] * rho[i] * highest[j] for i in range(r) for j in range(r))
    if hv.denominator != 1:
        raise AssertionError(f"non-integral dual Coxeter number for {t}")
    coroots = tuple(tuple(Fraction(2, 1) / lengths[i] * simple[i][j] for j in range(r))
                    for i in range(r))
    return RootSystem(
        lie_type=t,
        cartan_matrix=cartan,
        simple_roots=simple,
        positive_roots=tuple(sorted(positive, key=lambda a: (height[a], a))),
        rho=rho,
        highest_root=highest,
        dual_coxeter=int(hv),
        gram=tuple(tuple(row) for row in gram),
        coroot_images=coroots,
        root_lengths=tuple(lengths),
    )


def build_root_system(t) -> RootSystem:
    """Return the (cached, immutable) root system of a simple type.

    ``t`` may be a :class:`LieType` or a string such as ``"G2"``.
    """
    if isinstance(t, str):
        t = LieType.parse(t)
    if not isinstance(t, LieType):
        raise RootSystemError(f"expected LieType or type string, got {t!r}")
    return _build(t)


def reflect(simple: Sequence[Weight], i: int, x: Sequence[int]) -> Weight:
    """Simple reflection s_i on Dynkin labels: x - x_i alpha_i."""
    c = x[i]
    if c == 0:
        return tuple(x)
    return tuple(a - c * b for a, b in zip(x, simple[i]))


def _positive_roots(simple) -> list:
    found = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for beta in frontier:
            for i in range(len(simple)):
                if beta == simple[i]:
                    continue
                gamma = reflect(simple, i, beta)
                if gamma not in found:
                    found.add(gamma)
                    nxt.append(gamma)
        frontier = nxt
    return list(found)


def _root_heights(cartan, roots) -> dict:
    # coefficients in the simple-root basis: x = c * Cartan  =>  c = x * Cartan^{-1}
    inv = _inverse(cartan)
    r = len(cartan)
    out = {}
    for a in roots:
        coeffs = [sum(a[i] * inv[i][j] for i in range(r)) for j in range(r)]
        if any(c.denominator != 1 or c < 0 for c in coeffs):
            raise AssertionError(f"{a} is not a positive root")
        out[a] = int(sum(coeffs))
    return out


def inner(rs: RootSystem, a: Sequence[int], b: Sequence[int]) -> Fraction:
    """Basic inner product B(a, b)."""
    a, b = rs.check(a), rs.check(b)
    g = rs.gram
    return sum((g[i][j] * a[i] * b[j] for i in range(rs.rank) for j in range(rs.rank)
                if a[i] and b[j]), Fraction(0))


def level(rs: RootSystem, mu: Sequence[int]) -> Fraction:
    """B(mu, highest root); the level of a dominant weight."""
    return inner(rs, mu, rs.highest_root)


def is_dominant(mu: Sequence[int]) -> bool:
    return all(x >= 0 for x in mu)


def add(a: Sequence[int], b: Sequence[int]) -> Weight:
    return tuple(x + y for x, y in zip(a, b))


def sub(a: Sequence[int], b: Sequence[int]) -> Weight:
    return tuple(x - y for x, y in zip(a, b))


def scale(c: int, a: Sequence[int]) -> Weight:
    return tuple(c * x for x in a)


def dominant_reduce_shifted(rs: RootSystem, mu: Sequence[int]) -> Optional[Tuple[Weight, int]]:
    """Dot-action reduction: find w with w(mu+rho) strictly dominant.

    Returns ``(w(mu+rho) - rho, (-1)**len(w))`` or ``None`` when mu+rho lies
    on a reflection wall.
    """
    x = list(add(rs.check(mu), rs.rho))
    sign = 1
    simple = rs.simple_roots
    while True:
        i = next((j for j, c in enumerate(x) if c < 0), None)
        if i is None:
            break
        c = x[i]
        x = [a - c * b for a, b in zip(x, simple[i])]
        sign = -sign
    if any(c == 0 for c in x):
        return None
    return sub(x, rs.rho), sign


def to_dominant(rs: RootSystem, mu: Sequence[int]) -> Tuple[Weight, int]:
    """Dominant representative of the W-orbit of mu and the parity of a word reaching it."""
    x = list(rs.check(mu))
    sign = 1
    simple = rs.simple_roots
    while True:
        i = next((j for j, c in enumerate(x) if c < 0), None)
        if i is None:
            return tuple(x), sign
        c = x[i]
        x = [a - c * b for a, b in zip(x, simple[i])]
        sign = -sign


def longest_word(rs: RootSystem) -> Tuple[int, ...]:
    """A reduced word for w_0, as the reflections taking -rho to rho (applied left to right)."""
    key = ("w0",)
    if key not in rs._memo:
        x = [-1] * rs.rank
        word = []
        while True:
            i = next((j for j, c in enumerate(x) if c < 0), None)
            if i is None:
                break
            c = x[i]
            x = [a - c * b for a, b in zip(x, rs.simple_roots[i])]
            word.append(i)
        rs._memo[key] = tuple(word)
    return rs._memo[key]


def apply_word(rs: RootSystem, word: Sequence[int], mu: Sequence[int]) -> Weight:
    x = rs.check(mu)
    for i in word:
        x = reflect(rs.simple_roots, i, x)
    return x


def dual_weight(rs: RootSystem, mu: Sequence[int]) -> Weight:
    """mu* = -w_0 mu."""
    return scale(-1, apply_word(rs, longest_word(rs), mu))


def sign_longest_element(rs: RootSystem) -> int:
    """(-1)^{length(w_0)} = (-1)^{|R_+|}."""
    return -1 if rs.num_positive_roots % 2 else 1


def weyl_orbit_signed(rs: RootSystem, x: Sequence[int]) -> Iterator[Tuple[Weight, int]]:
    """Yield (w x, (-1)^w) over all w in W, for x strictly dominant (regular).

    Regularity makes the orbit map W -> W x a bijection, so the orbit is
    walked breadth-first and each point is reached with its length parity.
    """
    x = rs.check(x)
    if not all(c > 0 for c in x):
        raise RootSystemError(f"weyl_orbit_signed needs a strictly dominant weight, got {x}")
    seen = {x: 1}
    frontier = [x]
    simple = rs.simple_roots
    while frontier:
        nxt = []
        for y in frontier:
            s = seen[y]
            for i in range(rs.rank):
                z = reflect(simple, i, y)
                if z not in seen:
                    seen[z] = -s
                    nxt.append(z)
        frontier = nxt
    return iter(seen.items())


def weyl_group_order(rs: RootSystem) -> int:
    return sum(1 for _ in weyl_orbit_signed(rs, rs.rho))
