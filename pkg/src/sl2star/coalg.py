"""Coproduct, counit, and the bialgebra verifications.

The coproduct is fixed on generators (x1 primitive, the exponential letters
group-like, x2/x3 twisted-primitive with exponential legs) and extended to
words multiplicatively with respect to the star product.  Everything here
computes in the quotient: tensor legs are kept normal-formed, so an element
of the ideal tensor-plus-tensor-ideal subspace is recognized by literal
vanishing.  That turns the coideal condition, coassociativity, and the
counit axioms into exact zero tests on finitely many terms.
"""

from __future__ import annotations

from typing import Mapping

from .ncalg import NCElement, PbwMonomial, RewriteSystem, UNIT


class TensorElement:
    """Sum of elementary tensors of basis monomials with series coefficients.

    ``legs`` is 2 for coproduct values and 3 for the coassociativity defect.
    All legs are stored in PBW normal form.
    """

    __slots__ = ("system", "legs", "terms")

    def __init__(self, system: RewriteSystem, terms: Mapping, legs: int = 2):
        self.system = system
        self.legs = legs
        self.terms = dict(terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, TensorElement):
            return (self.system is other.system and self.legs == other.legs
                    and self.terms == other.terms)
        if other == 0:
            return not self.terms
        return NotImplemented

    __hash__ = None  # type: ignore[assignment]

    def coefficient(self, key):
        key = tuple(k if isinstance(k, PbwMonomial) else PbwMonomial(*k)
                    for k in key)
        return self.terms.get(key, self.system.ring.zero)

    def __add__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        if self.system is not other.system or self.legs != other.legs:
            raise ValueError("tensor elements are not compatible")
        out = dict(self.terms)
        for key, c in other.terms.items():
            cur = out.get(key)
            s = c if cur is None else cur + c
            if s.is_zero():
                out.pop(key, None)
            else:
                out[key] = s
        return TensorElement(self.system, out, self.legs)

    def __neg__(self):
        return TensorElement(self.system,
                             {k: -c for k, c in self.terms.items()}, self.legs)

    def __sub__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self + (-other)

    def scale(self, scalar) -> "TensorElement":
        out = {}
        for key, c in self.terms.items():
            s = c * scalar
            if not s.is_zero():
                out[key] = s
        return TensorElement(self.system, out, self.legs)

    def __mul__(self, other):
        if isinstance(other, TensorElement):
            return star_tensor(self, other)
        return self.scale(other)

    def __str__(self) -> str:
        from .ncalg import monomial_str

        if not self.terms:
            return "0"
        parts = []
        for key in sorted(self.terms):
            c = self.terms[key]
            tensor = " (x) ".join(monomial_str(self.system, m) for m in key)
            parts.append(f"({c}) * [{tensor}]")
        return "  +  ".join(parts)

    def __repr__(self) -> str:
        return f"<TensorElement legs={self.legs} {self}>"

    def to_json(self) -> dict:
        names = {2: ("left", "right"), 3: ("left", "middle", "right")}[self.legs]
        out = []
        for key in sorted(self.terms):
            entry = {}
            for name, mono in zip(names, key):
                entry[name] = {"n1": mono.n1, "n2": mono.n2,
                               "n3": mono.n3, "m": mono.m}
            entry["coeff"] = self.terms[key].to_json()
            out.append(entry)
        return {"terms": out}


def tensor_unit(system: RewriteSystem, legs: int = 2) -> TensorElement:
    return TensorElement(system, {(UNIT,) * legs: system.ring.one}, legs)


def tensor_zero(system: RewriteSystem, legs: int = 2) -> TensorElement:
    return TensorElement(system, {}, legs)


def star_tensor(s: TensorElement, t: TensorElement) -> TensorElement:
    """Componentwise star product of tensors (no braiding)."""
    if s.system is not t.system or s.legs != t.legs:
        raise ValueError("tensor elements are not compatible")
    system = s.system
    one = system.ring.one
    out = {}
    for ka, ca in s.terms.items():
        for kb, cb in t.terms.items():
            cab = ca * cb
            if cab.is_zero():
                continue
            # per-leg basis products, then the cartesian product of terms
            leg_terms = [system._basis_star(ma, mb) for ma, mb in zip(ka, kb)]
            keys = [((), cab)]
            for leg in leg_terms:
                keys = [(key + (m,), (c if cc is one else c * cc))
                        for key, c in keys for m, cc in leg.items()]
            for key, c in keys:
                if c.is_zero():
                    continue
                cur = out.get(key)
                acc = c if cur is None else cur + c
                if acc.is_zero():
                    out.pop(key, None)
                else:
                    out[key] = acc
    return TensorElement(system, out, s.legs)


def _monomial_coproduct(system: RewriteSystem, mono: PbwMonomial) -> dict:
    """Coproduct of a basis monomial as a terms dict; cached on the system."""
    cached = system._coproduct_cache.get(mono)
    if cached is not None:
        return cached
    t = tensor_unit(system)
    for letter in mono.word():
        letter_cop = TensorElement(system, dict(system.coproduct_table[letter]))
        t = star_tensor(t, letter_cop)
    system._coproduct_cache[mono] = t.terms
    return t.terms


def coproduct(f: NCElement) -> TensorElement:
    """The deformed coproduct, extended star-multiplicatively to all of F."""
    system = f.system
    out = tensor_zero(system)
    for mono, c in f.terms.items():
        out = out + TensorElement(system, _monomial_coproduct(system, mono)).scale(c)
    return out


def coproduct_of_words(system: RewriteSystem, words: Mapping) -> TensorElement:
    """Coproduct of a word-level combination (used on ideal generators).

    Both legs are reduced in the quotient as the product is built up, so the
    result is the image in (F/I) (x) (F/I).
    """
    out = tensor_zero(system)
    for word, c in words.items():
        t = tensor_unit(system)
        for letter in word:
            letter_cop = TensorElement(system, dict(system.coproduct_table[letter]))
            t = star_tensor(t, letter_cop)
        out = out + t.scale(c)
    return out


def coideal_check(system: RewriteSystem, relation: Mapping) -> TensorElement:
    """Image of an ideal generator under the coproduct, reduced in the quotient.

    The two-sided ideal is a coideal exactly when this vanishes for every
    generator; a nonzero result flags an inconsistent relation set.
    """
    return coproduct_of_words(system, relation)


def _expand_leg(t: TensorElement, leg: int) -> TensorElement:
    """Apply the coproduct to one leg of a tensor, splicing in the new pair."""
    system = t.system
    out = {}
    for key, c in t.terms.items():
        for pair, cc in _monomial_coproduct(system, key[leg]).items():
            new_key = key[:leg] + pair + key[leg + 1:]
            s = c * cc
            if s.is_zero():
                continue
            cur = out.get(new_key)
            acc = s if cur is None else cur + s
            if acc.is_zero():
                out.pop(new_key, None)
            else:
                out[new_key] = acc
    return TensorElement(system, out, t.legs + 1)


def coassoc_defect(f: NCElement) -> TensorElement:
    """(Delta (x) id) Delta f - (id (x) Delta) Delta f; zero iff coassociative."""
    d = coproduct(f)
    return _expand_leg(d, 0) - _expand_leg(d, 1)


def counit(f: NCElement):
    """Counit: kills x1, x2, x3, sends all exponential letters to 1.

    Extended star-multiplicatively; on basis monomials it keeps exactly the
    pure-exponential ones.  The bialgebra axioms for this choice are
    established by the test suite, not assumed.
    """
    acc = f.system.ring.zero
    for mono, c in f.terms.items():
        if mono.n1 == 0 and mono.n2 == 0 and mono.n3 == 0:
            acc = acc + c
    return acc


def counit_contract(t: TensorElement, side: str) -> NCElement:
    """(ct (x) id) or (id (x) ct) applied to a 2-leg tensor."""
    system = t.system
    out = system.zero
    for (left, right), c in t.terms.items():
        if side == "left":
            keep, kill = right, left
        else:
            keep, kill = left, right
        if kill.n1 == 0 and kill.n2 == 0 and kill.n3 == 0:
            out = out + system.monomial_element(keep, c)
    return out


def classical_coproduct(f: NCElement) -> TensorElement:
    """The undeformed coproduct: generator table extended with the
    commutative product on both legs."""
    system = f.system
    out = tensor_zero(system)
    for mono, c in f.terms.items():
        t = tensor_unit(system)
        for letter in mono.word():
            letter_cop = system.coproduct_table[letter]
            acc = {}
            for key, cc in t.terms.items():
                for pair, c2 in letter_cop:
                    new_key = tuple(a.classical_mul(b) for a, b in zip(key, pair))
                    s = cc * c2
                    cur = acc.get(new_key)
                    tot = s if cur is None else cur + s
                    if tot.is_zero():
                        acc.pop(new_key, None)
                    else:
                        acc[new_key] = tot
            t = TensorElement(system, acc)
        out = out + t.scale(c)
    return out


def deformation_order(f: NCElement):
    """Lowest eps degree at which the coproduct of f deviates from the
    classical one; None when they agree up to truncation."""
    diff = coproduct(f) - classical_coproduct(f)
    if diff.is_zero():
        return None
    degree = None
    for c in diff.terms.values():
        if f.system.ring.kind == "eps":
            low = min(c.terms)
        else:
            low = min(i for (i, _) in c.terms)
        degree = low if degree is None else min(degree, low)
    return degree
