"""Exact arithmetic in the representation ring R(G).

Elements are finite integer combinations of irreducibles V_mu indexed by
dominant weights.  Products go through Brauer-Klimyk: the weights of one
factor are added to the highest weight of the other and straightened with
the dot action of the Weyl group.
"""

from __future__ import annotations

import json
from collections import defaultdict
from fractions import Fraction
from math import prod
from typing import Dict, Iterable, Iterator, Mapping, Optional, Sequence, Tuple

from .rootsys import (
    RootSystem,
    Weight,
    add,
    dominant_reduce_shifted,
    dual_weight,
    inner,
    is_dominant,
    to_dominant,
)


class RepRingError(ValueError):
    pass


class RepRingElement:
    """Integer combination of irreducible representations.

    Keys are dominant weights (tuples of Dynkin labels); zero coefficients
    are never stored, so two elements are equal iff their ``terms`` are.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Mapping[Sequence[int], int]] = None):
        clean: Dict[Weight, int] = {}
        for mu, c in (terms or {}).items():
            mu = tuple(int(x) for x in mu)
            if not is_dominant(mu):
                raise RepRingError(f"non-dominant weight {mu} in representation ring element")
            c = int(c)
            if c:
                clean[mu] = clean.get(mu, 0) + c
                if not clean[mu]:
                    del clean[mu]
        self.terms = clean

    @classmethod
    def irreducible(cls, mu: Sequence[int], coeff: int = 1) -> "RepRingElement":
        return cls({tuple(mu): coeff})

    @classmethod
    def _from_clean(cls, terms: Dict[Weight, int]) -> "RepRingElement":
        obj = cls.__new__(cls)
        obj.terms = {k: v for k, v in terms.items() if v}
        return obj

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, RepRingElement):
            return self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "RepRingElement") -> "RepRingElement":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return RepRingElement._from_clean(out)

    def __neg__(self) -> "RepRingElement":
        return RepRingElement._from_clean({k: -v for k, v in self.terms.items()})

    def __sub__(self, other: "RepRingElement") -> "RepRingElement":
        return self + (-other)

    def __rmul__(self, c: int) -> "RepRingElement":
        if not isinstance(c, int):
            return NotImplemented
        return RepRingElement._from_clean({k: c * v for k, v in self.terms.items()})

    def items(self) -> Iterator[Tuple[Weight, int]]:
        return iter(sorted(self.terms.items()))

    def max_level(self, rs: RootSystem) -> Fraction:
        return max((inner(rs, mu, rs.highest_root) for mu in self.terms), default=Fraction(0))

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*V{mu}" for mu, c in self.items())

    def to_json(self) -> list:
        return [{"weight": list(mu), "coeff": c} for mu, c in self.items()]

    @classmethod
    def from_json(cls, data) -> "RepRingElement":
        if isinstance(data, str):
            data = json.loads(data)
        out: Dict[Weight, int] = {}
        for term in data:
            mu = tuple(term["weight"])
            out[mu] = out.get(mu, 0) + int(term["coeff"])
        return cls(out)


def zero() -> RepRingElement:
    return RepRingElement()


def one(rs: RootSystem) -> RepRingElement:
    return RepRingElement.irreducible((0,) * rs.rank)


def _require_dominant(rs: RootSystem, mu) -> Weight:
    mu = rs.check(mu)
    if not is_dominant(mu):
        raise RepRingError(f"weight {mu} is not dominant")
    return mu


def weyl_dimension(rs: RootSystem, mu) -> int:
    """dim V_mu by the Weyl dimension formula; linear on RepRingElement."""
    if isinstance(mu, RepRingElement):
        return sum(c * weyl_dimension(rs, lam) for lam, c in mu.terms.items())
    mu = _require_dominant(rs, mu)
    key = ("dim", mu)
    memo = rs._memo
    if key not in memo:
        shifted = add(mu, rs.rho)
        num = prod(inner(rs, shifted, a) for a in rs.positive_roots)
        den = prod(inner(rs, rs.rho, a) for a in rs.positive_roots)
        d = num / den
        if d.denominator != 1:
            raise AssertionError(f"non-integral Weyl dimension for {mu}")
        memo[key] = int(d)
    return memo[key]


def dominant_weights(rs: RootSystem, lam) -> list:
    """Dominant weights of V_lam, generated by subtracting positive roots."""
    lam = _require_dominant(rs, lam)
    seen = {lam}
    frontier = [lam]
    while frontier:
        nxt = []
        for nu in frontier:
            for a in rs.positive_roots:
                mu = tuple(x - y for x, y in zip(nu, a))
                if is_dominant(mu) and mu not in seen:
                    seen.add(mu)
                    nxt.append(mu)
        frontier = nxt
    return list(seen)


def dominant_multiplicities(rs: RootSystem, lam) -> Dict[Weight, int]:
    """Freudenthal multiplicities of the dominant weights of V_lam."""
    lam = _require_dominant(rs, lam)
    key = ("dommult", lam)
    memo = rs._memo
    if key in memo:
        return memo[key]
    lr = add(lam, rs.rho)
    norm_lr = inner(rs, lr, lr)
    dom = dominant_weights(rs, lam)
    # B(., rho) strictly increases up the dominance order, so higher weights come first
    dom.sort(key=lambda nu: -inner(rs, nu, rs.rho))
    mult: Dict[Weight, int] = {}
    for nu in dom:
        if nu == lam:
            mult[nu] = 1
            continue
        total = Fraction(0)
        for a in rs.positive_roots:
            j = 1
            while True:
                w = tuple(x + j * y for x, y in zip(nu, a))
                m = mult.get(to_dominant(rs, w)[0], 0)
                if not m:
                    break
                total += m * inner(rs, w, a)
                j += 1
        nr = add(nu, rs.rho)
        gap = norm_lr - inner(rs, nr, nr)
        val = 2 * total / gap
        if val.denominator != 1:
            raise AssertionError(f"non-integral Freudenthal multiplicity at {nu} in V{lam}")
        if val:
            mult[nu] = int(val)
    memo[key] = mult
    return mult


def weight_orbit(rs: RootSystem, nu: Weight) -> set:
    """Full W-orbit of a dominant weight."""
    seen = {nu}
    frontier = [nu]
    while frontier:
        nxt = []
        for x in frontier:
            for i, c in enumerate(x):
                if c > 0:
                    y = tuple(a - c * b for a, b in zip(x, rs.simple_roots[i]))
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
        frontier = nxt
    return seen


def weight_multiplicities(rs: RootSystem, lam) -> Dict[Weight, int]:
    """Full weight diagram of V_lam."""
    lam = _require_dominant(rs, lam)
    key = ("mult", lam)
    memo = rs._memo
    if key not in memo:
        out: Dict[Weight, int] = {}
        for nu, m in dominant_multiplicities(rs, lam).items():
            for w in weight_orbit(rs, nu):
                out[w] = m
        memo[key] = out
    return memo[key]


def character(rs: RootSystem, a: RepRingElement) -> Dict[Weight, int]:
    """Formal character as a map weight -> multiplicity (a Laurent polynomial on T)."""
    out: Dict[Weight, int] = defaultdict(int)
    for lam, c in a.terms.items():
        for w, m in weight_multiplicities(rs, lam).items():
            out[w] += c * m
    return {w: m for w, m in out.items() if m}


def from_character(rs: RootSystem, chi: Mapping[Weight, int]) -> RepRingElement:
    """Decompose a W-invariant character into irreducibles.

    Uses chi * J(e^rho) = sum_w c_w J(e^{w + rho}) and straightens each term.
    """
    out: Dict[Weight, int] = defaultdict(int)
    for w, c in chi.items():
        red = dominant_reduce_shifted(rs, w)
        if red is not None:
            out[red[0]] += red[1] * c
    return RepRingElement._from_clean(dict(out))


def tensor_decompose(rs: RootSystem, lam, mu) -> RepRingElement:
    """V_lam (x) V_mu by Brauer-Klimyk."""
    lam = _require_dominant(rs, lam)
    mu = _require_dominant(rs, mu)
    if weyl_dimension(rs, mu) > weyl_dimension(rs, lam):
        lam, mu = mu, lam
    key = ("tensor", lam, mu)
    memo = rs._memo
    if key in memo:
        return memo[key]
    out: Dict[Weight, int] = defaultdict(int)
    for nu, m in weight_multiplicities(rs, mu).items():
        red = dominant_reduce_shifted(rs, add(lam, nu))
        if red is not None:
            out[red[0]] += red[1] * m
    res = RepRingElement._from_clean(dict(out))
    memo[key] = res
    return res


def multiply(rs: RootSystem, a: RepRingElement, b: RepRingElement) -> RepRingElement:
    out: Dict[Weight, int] = defaultdict(int)
    for lam, c in a.terms.items():
        for mu, d in b.terms.items():
            for nu, e in tensor_decompose(rs, lam, mu).terms.items():
                out[nu] += c * d * e
    return RepRingElement._from_clean(dict(out))


def classical_adams(rs: RootSystem, ell: int, a: RepRingElement) -> RepRingElement:
    """Classical Adams operation on R(G): the character chi(t) becomes chi(t^ell)."""
    chi = character(rs, a)
    scaled: Dict[Weight, int] = defaultdict(int)
    for w, m in chi.items():
        scaled[tuple(ell * x for x in w)] += m
    return from_character(rs, scaled)


def dual(rs: RootSystem, a: RepRingElement) -> RepRingElement:
    """Complex conjugation V_mu -> V_{mu*}."""
    return RepRingElement._from_clean({dual_weight(rs, mu): c for mu, c in a.terms.items()})


def sum_elements(elems: Iterable[RepRingElement]) -> RepRingElement:
    out: Dict[Weight, int] = defaultdict(int)
    for e in elems:
        for k, v in e.terms.items():
            out[k] += v
    return RepRingElement._from_clean(dict(out))
