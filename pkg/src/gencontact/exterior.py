"""Graded exterior algebra over a based vector space.

Forms live over the dual side, multivectors over the primal side; both are
stored as maps from strictly increasing index tuples to Gaussian-rational
coefficients, so equality is literal term-map equality.  Mixed degrees are
allowed, with projections.

Contraction of a form by a decomposable multivector is fixed as
iota_{x1^...^xk} = iota_{x1} o ... o iota_{xk} (the last factor is applied
first); evaluation alpha(v1,...,vk) feeds v1 first, which makes
(e^1^e^2)(e_1,e_2) = 1.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .scalars import GaussRational

UNIT_LABEL = "unit"
UNIT_DUAL_LABEL = "unit*"


class SpaceMismatch(ValueError):
    pass


class BasedSpace:
    """Ordered basis labels; an optional reserved "unit" label sits last."""

    __slots__ = ("labels", "unit_index")

    def __init__(self, labels: Sequence[str]):
        labels = tuple(labels)
        if len(set(labels)) != len(labels):
            raise ValueError("basis labels must be distinct")
        if UNIT_DUAL_LABEL in labels:
            raise ValueError(f"label {UNIT_DUAL_LABEL!r} is reserved for the dual side")
        if UNIT_LABEL in labels:
            if labels[-1] != UNIT_LABEL:
                raise ValueError(f"{UNIT_LABEL!r} must be the last label")
            self.unit_index = len(labels) - 1
        else:
            self.unit_index = None
        self.labels = labels

    @property
    def dim(self) -> int:
        return len(self.labels)

    def dual_label(self, i: int) -> str:
        if i == self.unit_index:
            return UNIT_DUAL_LABEL
        return self.labels[i]

    def index_of(self, label: str, side: str) -> int:
        if side == "form" and label == UNIT_DUAL_LABEL:
            if self.unit_index is None:
                raise KeyError(label)
            return self.unit_index
        if side == "vector" and label == UNIT_DUAL_LABEL:
            raise KeyError(label)
        return self.labels.index(label)

    def __eq__(self, other):
        return isinstance(other, BasedSpace) and self.labels == other.labels

    def __hash__(self):
        return hash(self.labels)

    def __repr__(self):
        return f"BasedSpace{self.labels}"


def sort_mono(indices: Sequence[int]) -> tuple[tuple[int, ...], int]:
    """Sort a monomial, returning the increasing tuple and the permutation sign.

    Repeated indices give sign 0.
    """
    idx = list(indices)
    if len(set(idx)) != len(idx):
        return (), 0
    sign = 1
    for i in range(len(idx)):
        for j in range(len(idx) - 1 - i):
            if idx[j] > idx[j + 1]:
                idx[j], idx[j + 1] = idx[j + 1], idx[j]
                sign = -sign
    return tuple(idx), sign


def monomials(dim: int, degree: int):
    return combinations(range(dim), degree)


class _Element:
    """Shared implementation of forms and multivectors."""

    __slots__ = ("space", "terms")
    side = ""

    def __init__(self, space: BasedSpace, terms: Mapping[Sequence[int], object] = ()):
        normalized: dict[tuple[int, ...], GaussRational] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for mono, coeff in items:
            c = GaussRational.of(coeff)
            if not c:
                continue
            key, sign = sort_mono(tuple(mono))
            if sign == 0:
                continue
            if any(i < 0 or i >= space.dim for i in key):
                raise ValueError(f"monomial index out of range: {mono}")
            c = c if sign == 1 else -c
            acc = normalized.get(key)
            c = c + acc if acc is not None else c
            if c:
                normalized[key] = c
            elif key in normalized:
                del normalized[key]
        self.space = space
        self.terms = normalized

    # -- structure ---------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_real(self) -> bool:
        return all(c.is_real for c in self.terms.values())

    def degrees(self) -> list[int]:
        return sorted({len(m) for m in self.terms})

    @property
    def degree(self) -> int:
        """Degree of a homogeneous element (0 for the zero element)."""
        degs = self.degrees()
        if not degs:
            return 0
        if len(degs) > 1:
            raise ValueError(f"element of mixed degrees {degs}")
        return degs[0]

    def homogeneous_part(self, k: int):
        return type(self)(self.space,
                          {m: c for m, c in self.terms.items() if len(m) == k})

    def coefficient(self, mono: Sequence[int]) -> GaussRational:
        key, sign = sort_mono(tuple(mono))
        c = self.terms.get(key, GaussRational(0))
        return c if sign >= 0 else -c

    def scalar_part(self) -> GaussRational:
        return self.terms.get((), GaussRational(0))

    def conjugate(self):
        return type(self)(self.space,
                          {m: c.conjugate() for m, c in self.terms.items()})

    def coords(self, degree: int) -> list[GaussRational]:
        """Coefficient vector over the increasing monomial basis of one degree."""
        return [self.terms.get(m, GaussRational(0))
                for m in monomials(self.space.dim, degree)]

    @classmethod
    def from_coords(cls, space: BasedSpace, degree: int, row: Sequence):
        return cls(space, dict(zip(monomials(space.dim, degree), row)))

    # -- arithmetic --------------------------------------------------------

    def _check(self, other):
        if type(other) is not type(self) or other.space != self.space:
            raise SpaceMismatch(
                f"cannot combine {type(self).__name__} over {self.space} "
                f"with {type(other).__name__}")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m)
            s = c if s is None else s + c
            if s:
                out[m] = s
            elif m in out:
                del out[m]
        res = type(self).__new__(type(self))
        res.space, res.terms = self.space, out
        return res

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        res = type(self).__new__(type(self))
        res.space = self.space
        res.terms = {m: -c for m, c in self.terms.items()}
        return res

    def __mul__(self, scalar):
        c = GaussRational.of(scalar)
        res = type(self).__new__(type(self))
        res.space = self.space
        res.terms = {} if not c else {m: v * c for m, v in self.terms.items()}
        return res

    __rmul__ = __mul__

    def __eq__(self, other):
        return (type(other) is type(self) and self.space == other.space
                and self.terms == other.terms)

    def __hash__(self):
        return hash((type(self).__name__, self.space,
                     tuple(sorted(self.terms.items()))))

    def __repr__(self):
        if not self.terms:
            return "0"
        label = (self.space.dual_label if self.side == "form"
                 else lambda i: self.space.labels[i])
        parts = []
        for m in sorted(self.terms, key=lambda t: (len(t), t)):
            mono = "^".join(label(i) for i in m) or "1"
            parts.append(f"({self.terms[m]})*{mono}")
        return " + ".join(parts)


class Form(_Element):
    side = "form"


class Multivector(_Element):
    side = "vector"


def wedge(a: _Element, b: _Element) -> _Element:
    """Exterior product of two elements on the same side."""
    if type(a) is not type(b) or a.space != b.space:
        raise SpaceMismatch("wedge requires two elements of one algebra side")
    out: dict[tuple[int, ...], GaussRational] = {}
    for m1, c1 in a.terms.items():
        for m2, c2 in b.terms.items():
            if set(m1) & set(m2):
                continue
            key, sign = sort_mono(m1 + m2)
            c = c1 * c2
            c = c if sign == 1 else -c
            acc = out.get(key)
            c = c + acc if acc is not None else c
            if c:
                out[key] = c
            elif key in out:
                del out[key]
    res = type(a).__new__(type(a))
    res.space, res.terms = a.space, out
    return res


def _insert_index(i: int, terms: dict) -> dict:
    """Interior product by the i-th basis element of the opposite side."""
    out: dict[tuple[int, ...], GaussRational] = {}
    for m, c in terms.items():
        try:
            pos = m.index(i)
        except ValueError:
            continue
        key = m[:pos] + m[pos + 1:]
        v = c if pos % 2 == 0 else -c
        acc = out.get(key)
        v = v + acc if acc is not None else v
        if v:
            out[key] = v
        elif key in out:
            del out[key]
    return out


def _insert_vector(coeffs: Mapping[int, GaussRational], terms: dict) -> dict:
    out: dict[tuple[int, ...], GaussRational] = {}
    for i, ci in coeffs.items():
        if not ci:
            continue
        for m, c in _insert_index(i, terms).items():
            v = ci * c
            acc = out.get(m)
            v = v + acc if acc is not None else v
            if v:
                out[m] = v
            elif m in out:
                del out[m]
    return out


def _degree_one_coeffs(x: _Element) -> dict[int, GaussRational]:
    coeffs = {}
    for m, c in x.terms.items():
        if len(m) != 1:
            raise ValueError("expected a degree-1 element")
        coeffs[m[0]] = c
    return coeffs


def contract(x: Multivector, a: Form) -> Form:
    """Contraction iota_x(a) of a form by a multivector.

    Degree-1 multivectors act as antiderivations of degree -1; a
    decomposable x1^...^xk acts as iota_{x1} o ... o iota_{xk}.
    """
    if not isinstance(x, Multivector) or not isinstance(a, Form):
        raise SpaceMismatch("contract expects (Multivector, Form)")
    if x.space != a.space:
        raise SpaceMismatch("contract across different algebras")
    out: dict[tuple[int, ...], GaussRational] = {}
    for mono, cx in x.terms.items():
        terms = a.terms
        for i in reversed(mono):
            terms = _insert_index(i, terms)
            if not terms:
                break
        for m, c in terms.items():
            v = cx * c
            acc = out.get(m)
            v = v + acc if acc is not None else v
            if v:
                out[m] = v
            elif m in out:
                del out[m]
    res = Form.__new__(Form)
    res.space, res.terms = a.space, out
    return res


def contract_covector(psi: Form, x: Multivector) -> Multivector:
    """Interior product of a multivector by a 1-form (same antiderivation law)."""
    if psi.space != x.space:
        raise SpaceMismatch("contract across different algebras")
    coeffs = _degree_one_coeffs(psi)
    res = Multivector.__new__(Multivector)
    res.space, res.terms = x.space, _insert_vector(coeffs, x.terms)
    return res


def conjugate(a: _Element) -> _Element:
    return a.conjugate()


def evaluate(a: Form, vectors: Sequence[Multivector]) -> GaussRational:
    """alpha(v1, ..., vk): full evaluation on degree-1 multivectors."""
    terms = a.homogeneous_part(len(vectors)).terms
    for v in vectors:
        if not terms:
            break
        terms = _insert_vector(_degree_one_coeffs(v), terms)
    return terms.get((), GaussRational(0))


def pair(a: Form, x: Multivector) -> GaussRational:
    """Scalar part of contract(x, a); a perfect pairing on matched degrees."""
    return contract(x, a).scalar_part()


def basis_vector(space: BasedSpace, i: int) -> Multivector:
    return Multivector(space, {(i,): 1})


def basis_form(space: BasedSpace, *indices: int) -> Form:
    return Form(space, {tuple(indices): 1})
