"""Exact scalar fields: Q, Q(i), and Q(sqrt(d))(i) for square-free d > 0.

Every scalar is a rational combination over the basis {1, i, w, w*i} with
w = sqrt(d).  Arithmetic is exact (big-integer rationals), equality is
decidable, and the field is fixed per session: mixing scalars from
different fields raises FieldMismatchError.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

RationalLike = Union[int, Fraction]


class FieldMismatchError(TypeError):
    """Raised when scalars from different field towers are combined."""


class Field:
    """One of the towers Q, Q(i), Q(sqrt(d))(i), fixed for a whole session.

    ``d`` is required (positive, square-free) exactly when ``has_sqrt`` is
    set.  Two Field objects are equal iff they describe the same tower.
    """

    __slots__ = ("has_i", "has_sqrt", "d")

    def __init__(self, has_i: bool = True, d: int | None = None):
        self.has_i = has_i
        self.has_sqrt = d is not None
        if d is not None:
            if d <= 1 or not _square_free(d):
                raise ValueError(f"d must be a square-free integer > 1, got {d}")
            if not has_i:
                raise ValueError("real quadratic extension is only supported on top of Q(i)")
        self.d = d

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Field)
            and self.has_i == other.has_i
            and self.d == other.d
        )

    def __hash__(self) -> int:
        return hash((self.has_i, self.d))

    def __repr__(self) -> str:
        if self.d is not None:
            return f"Field(Q(sqrt({self.d}))(i))"
        return "Field(Q(i))" if self.has_i else "Field(Q)"

    # -- element constructors -------------------------------------------------

    def scalar(self, a: RationalLike, b: RationalLike = 0, c: RationalLike = 0, e: RationalLike = 0) -> FieldElement:
        """Build a + b*i + c*w + e*w*i, rejecting parts the tower lacks."""
        a, b, c, e = Fraction(a), Fraction(b), Fraction(c), Fraction(e)
        if not self.has_i and (b or e):
            raise ValueError("field Q has no imaginary part")
        if not self.has_sqrt and (c or e):
            raise ValueError(f"field {self!r} has no sqrt generator")
        return FieldElement(self, a, b, c, e)

    def zero(self) -> FieldElement:
        return self.scalar(0)

    def one(self) -> FieldElement:
        return self.scalar(1)

    def i(self) -> FieldElement:
        return self.scalar(0, 1)

    def w(self) -> FieldElement:
        return self.scalar(0, 0, 1)

    def coerce(self, x: RationalLike | FieldElement) -> FieldElement:
        if isinstance(x, FieldElement):
            if x.field != self:
                raise FieldMismatchError(f"cannot coerce element of {x.field!r} into {self!r}")
            return x
        return self.scalar(x)

    @property
    def degree(self) -> int:
        """Degree over Q (1, 2 or 4)."""
        if self.has_sqrt:
            return 4
        return 2 if self.has_i else 1

    def basis_parts(self, x: FieldElement) -> tuple[Fraction, ...]:
        """Coordinates of x over the Q-basis of the tower (length = degree)."""
        if x.field != self:
            raise FieldMismatchError("element does not belong to this field")
        if self.has_sqrt:
            return (x.a, x.b, x.c, x.e)
        if self.has_i:
            return (x.a, x.b)
        return (x.a,)

    def from_basis_parts(self, parts: tuple[Fraction, ...]) -> FieldElement:
        padded = list(parts) + [Fraction(0)] * (4 - len(parts))
        return self.scalar(*padded)


def _square_free(n: int) -> bool:
    k = 2
    while k * k <= n:
        if n % (k * k) == 0:
            return False
        k += 1
    return True


QQ = Field(has_i=False)
QQ_I = Field(has_i=True)


def QQ_SQRT_I(d: int) -> Field:
    """The tower Q(sqrt(d))(i)."""
    return Field(has_i=True, d=d)


class FieldElement:
    """Immutable element a + b*i + c*w + e*w*i of a fixed Field."""

    __slots__ = ("field", "a", "b", "c", "e", "_hash")

    def __init__(self, field: Field, a: Fraction, b: Fraction, c: Fraction, e: Fraction):
        self.field = field
        self.a = a
        self.b = b
        self.c = c
        self.e = e
        self._hash = None

    # -- ring structure -------------------------------------------------------

    def _check(self, other: FieldElement | RationalLike) -> FieldElement:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatchError(
                    f"mixed-field operation: {self.field!r} vs {other.field!r}"
                )
            return other
        return self.field.scalar(other)

    def __add__(self, other):
        o = self._check(other)
        return FieldElement(self.field, self.a + o.a, self.b + o.b, self.c + o.c, self.e + o.e)

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, -self.a, -self.b, -self.c, -self.e)

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return (-self) + self._check(other)

    def __mul__(self, other):
        o = self._check(other)
        d = Fraction(self.field.d) if self.field.has_sqrt else Fraction(0)
        a1, b1, c1, e1 = self.a, self.b, self.c, self.e
        a2, b2, c2, e2 = o.a, o.b, o.c, o.e
        # basis products: i*i = -1, w*w = d, (w*i)*(w*i) = -d, i*w = w*i
        a = a1 * a2 - b1 * b2 + d * (c1 * c2 - e1 * e2)
        b = a1 * b2 + b1 * a2 + d * (c1 * e2 + e1 * c2)
        c = a1 * c2 + c1 * a2 - (b1 * e2 + e1 * b2)
        e = a1 * e2 + e1 * a2 + b1 * c2 + c1 * b2
        return FieldElement(self.field, a, b, c, e)

    __rmul__ = __mul__

    def conj_i(self) -> FieldElement:
        """Complex conjugation i -> -i."""
        return FieldElement(self.field, self.a, -self.b, self.c, -self.e)

    def conj_w(self) -> FieldElement:
        """Galois conjugation w -> -w."""
        return FieldElement(self.field, self.a, self.b, -self.c, -self.e)

    def inverse(self) -> FieldElement:
        if not self:
            raise ZeroDivisionError("inverse of zero field element")
        # z * conj_i(z) lies in Q(w); multiplying by its w-conjugate lands in Q.
        zi = self * self.conj_i()
        norm = zi * zi.conj_w()
        assert norm.b == 0 and norm.c == 0 and norm.e == 0
        return self.conj_i() * zi.conj_w() * FieldElement(
            self.field, Fraction(1) / norm.a, Fraction(0), Fraction(0), Fraction(0)
        )

    def __truediv__(self, other):
        o = self._check(other)
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self._check(other) * self.inverse()

    # -- structure queries ----------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.a or self.b or self.c or self.e)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = self.field.scalar(other)
        if not isinstance(other, FieldElement):
            return NotImplemented
        return (
            self.field == other.field
            and self.a == other.a
            and self.b == other.b
            and self.c == other.c
            and self.e == other.e
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field, self.a, self.b, self.c, self.e))
        return self._hash

    @property
    def is_rational(self) -> bool:
        return not (self.b or self.c or self.e)

    @property
    def is_real(self) -> bool:
        """True iff the element lies in the real subfield Q(w)."""
        return not (self.b or self.e)

    def rational_value(self) -> Fraction:
        if not self.is_rational:
            raise ValueError(f"{self} is not rational")
        return self.a

    def real_part(self) -> FieldElement:
        return FieldElement(self.field, self.a, Fraction(0), self.c, Fraction(0))

    def imag_part(self) -> FieldElement:
        """Coefficient of i, as an element of the real subfield."""
        return FieldElement(self.field, self.b, Fraction(0), self.e, Fraction(0))

    def to_complex(self) -> complex:
        import math

        w = math.sqrt(self.field.d) if self.field.has_sqrt else 0.0
        return complex(self.a + self.c * w, self.b + self.e * w)

    # -- serialization (spec format: "1/2+3/4*w*i") ---------------------------

    def __str__(self) -> str:
        terms = []
        for coeff, tag in ((self.a, ""), (self.b, "i"), (self.c, "w"), (self.e, "w*i")):
            if coeff == 0:
                continue
            body = str(coeff) if not tag else f"{coeff}*{tag}"
            terms.append(body if not terms or body.startswith("-") else "+" + body)
        return "".join(terms) if terms else "0"

    def __repr__(self) -> str:
        return f"<{self}>"


def parse_scalar(field: Field, text: str) -> FieldElement:
    """Parse the string form produced by str(): sums of p/q[*w][*i] terms."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty scalar string")
    parts = (Fraction(0), Fraction(0), Fraction(0), Fraction(0))
    a, b, c, e = parts
    # split on top-level +/-, keeping signs
    terms: list[str] = []
    cur = ""
    for k, ch in enumerate(s):
        if ch in "+-" and k > 0 and s[k - 1] not in "+-/*":
            terms.append(cur)
            cur = ch
        else:
            cur += ch
    terms.append(cur)
    for term in terms:
        if not term or term in "+-":
            raise ValueError(f"malformed scalar term in {text!r}")
        factors = term.lstrip("+-").split("*")
        sign = -1 if term.startswith("-") else 1
        coeff = Fraction(1)
        has_i = has_w = False
        for f in factors:
            if f == "i":
                has_i = True
            elif f == "w":
                has_w = True
            elif f:
                coeff *= Fraction(f)
            else:
                raise ValueError(f"malformed scalar term in {text!r}")
        coeff *= sign
        if has_w and has_i:
            e += coeff
        elif has_w:
            c += coeff
        elif has_i:
            b += coeff
        else:
            a += coeff
    return field.scalar(a, b, c, e)
