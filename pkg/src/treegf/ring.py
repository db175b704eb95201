"""Exact coefficient rings used for subtree weights.

Two instantiations ship: plain Python ``int`` (arbitrary precision) and
:class:`Poly2`, a sparse polynomial in ``x`` (edge variable) and ``y``
(vertex variable) with integer coefficients.  Both support ``+``, ``-``,
``*`` and mix with ``int`` on either side, so algorithm code never needs to
know which ring it is running in.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Union

Term = tuple[int, int]


class Poly2:
    """Sparse bivariate polynomial ``sum c[i, j] * x**i * y**j``.

    Immutable; zero coefficients are never stored.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Term, int] | Iterable[tuple[Term, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Term, int] = {}
        for (i, j), c in items:
            if i < 0 or j < 0:
                raise ValueError(f"negative exponent in term x^{i} y^{j}")
            c = clean.get((i, j), 0) + int(c)
            if c:
                clean[(i, j)] = c
            else:
                clean.pop((i, j), None)
        self._terms = clean
        self._hash = None

    @classmethod
    def const(cls, c: int) -> "Poly2":
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, i: int, j: int, c: int = 1) -> "Poly2":
        return cls({(i, j): c})

    @classmethod
    def _raw(cls, terms: dict[Term, int]) -> "Poly2":
        # terms must already be free of zeros
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> dict[Term, int]:
        return dict(self._terms)

    def items(self) -> list[tuple[Term, int]]:
        """Terms sorted by ``(x_degree, y_degree)`` ascending."""
        return sorted(self._terms.items())

    def coefficient(self, i: int, j: int = 0) -> int:
        return self._terms.get((i, j), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> Term:
        """Largest x-degree and largest y-degree appearing (``(-1, -1)`` for zero)."""
        if not self._terms:
            return (-1, -1)
        return (max(i for i, _ in self._terms), max(j for _, j in self._terms))

    def coefficient_sum(self) -> int:
        return sum(self._terms.values())

    def subs(self, x: int | None = None, y: int | None = None) -> "Poly2":
        """Substitute integers for ``x`` and/or ``y``; the result stays a Poly2."""
        out: dict[Term, int] = {}
        for (i, j), c in self._terms.items():
            if x is not None:
                c *= x**i
                i = 0
            if y is not None:
                c *= y**j
                j = 0
            out[(i, j)] = out.get((i, j), 0) + c
        return Poly2(out)

    def evaluate(self, x: int, y: int) -> int:
        return sum(c * x**i * y**j for (i, j), c in self._terms.items())

    # -- arithmetic -------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "Poly2 | None":
        if isinstance(other, Poly2):
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return Poly2.const(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self._terms)
        for k, c in o._terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                del out[k]
        return Poly2._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly2._raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out: dict[Term, int] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in o._terms.items():
                k = (i1 + i2, j1 + j2)
                out[k] = out.get(k, 0) + c1 * c2
        return Poly2._raw({k: c for k, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            return NotImplemented
        result, base = Poly2.const(1), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- comparison and display ------------------------------------------

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._terms == o._terms

    def __hash__(self):
        if self._hash is None:
            if set(self._terms) <= {(0, 0)}:
                self._hash = hash(self._terms.get((0, 0), 0))
            else:
                self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self):
        return f"Poly2({dict(self.items())!r})"

    def __str__(self):
        if not self._terms:
            return "0"
        # descending x-degree, then descending y-degree, as printed in the literature
        parts = []
        for (i, j), c in sorted(self._terms.items(), reverse=True):
            mono = ""
            if i:
                mono += "x" if i == 1 else f"x^{i}"
            if j:
                mono += "y" if j == 1 else f"y^{j}"
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


RingElem = Union[int, Poly2]

X = Poly2.monomial(1, 0)
Y = Poly2.monomial(0, 1)


def ring_of(value) -> type:
    """Return the ring (``int`` or ``Poly2``) a weight belongs to."""
    if isinstance(value, Poly2):
        return Poly2
    if isinstance(value, int) and not isinstance(value, bool):
        return int
    raise TypeError(f"unsupported ring element {value!r} of type {type(value).__name__}")


def one(ring: type) -> RingElem:
    return Poly2.const(1) if ring is Poly2 else 1


def zero(ring: type) -> RingElem:
    return Poly2() if ring is Poly2 else 0


def coerce(value, ring: type) -> RingElem:
    """Lift an ``int`` into ``ring``; Poly2 values pass through unchanged."""
    if ring is Poly2 and not isinstance(value, Poly2):
        return Poly2.const(value)
    return value


def as_poly(value: RingElem) -> Poly2:
    return value if isinstance(value, Poly2) else Poly2.const(value)
