"""Exact arithmetic in Q and in the field Q(q) of rational functions.

Rational scalars are ``fractions.Fraction`` (already canonical: reduced,
positive denominator).  On top of that this module provides dense
polynomials in the indeterminate q with Fraction coefficients (`QPoly`)
and their quotient field (`RationalFunction`), plus the order of the
general linear group |GL(n,q)| as a polynomial in q.

Everything here is immutable and exact; there is no floating point.
Rational functions are kept in a canonical form (numerator and
denominator coprime, denominator monic) so that equality is plain
representation equality.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Union

Scalar = Union[int, Fraction]


class QPoly:
    """Dense univariate polynomial in q over the rationals.

    Coefficients are stored lowest degree first; trailing zeros are
    trimmed so the leading coefficient of a nonzero polynomial is
    nonzero.  The zero polynomial has an empty coefficient tuple and
    degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):  # pragma: no cover - immutability guard
        raise AttributeError("QPoly is immutable")

    # -- constructors -------------------------------------------------

    @staticmethod
    def constant(c: Scalar) -> "QPoly":
        return QPoly([c])

    @staticmethod
    def q_power(k: int, c: Scalar = 1) -> "QPoly":
        """c * q^k."""
        if k < 0:
            raise ValueError("exponent must be non-negative")
        return QPoly([0] * k + [c])

    # -- basic queries -------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> Fraction:
        if self.is_zero():
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def valuation(self) -> int:
        """Index of the lowest nonzero coefficient (0 for the zero polynomial)."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return 0

    def is_monomial(self) -> bool:
        """True for c*q^k with a single nonzero term (constants included)."""
        return bool(self.coeffs) and all(c == 0 for c in self.coeffs[:-1])

    def shift_down(self, k: int) -> "QPoly":
        """Divide by q^k; only valid when the valuation is at least k."""
        if k == 0:
            return self
        if any(c for c in self.coeffs[:k]):
            raise ValueError(f"polynomial is not divisible by q^{k}")
        return QPoly(self.coeffs[k:])

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other: "QPoly") -> "QPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return QPoly(out)

    def __neg__(self) -> "QPoly":
        return QPoly([-c for c in self.coeffs])

    def __sub__(self, other: "QPoly") -> "QPoly":
        return self + (-other)

    def __mul__(self, other: "QPoly") -> "QPoly":
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return QPoly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    if cb:
                        out[i + j] += ca * cb
        return QPoly(out)

    def scale(self, c: Scalar) -> "QPoly":
        c = Fraction(c)
        if c == 0:
            return QPoly()
        return QPoly([x * c for x in self.coeffs])

    def __pow__(self, k: int) -> "QPoly":
        if k < 0:
            raise ValueError("negative power of a polynomial")
        out = QPoly([1])
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def divmod(self, other: "QPoly") -> tuple["QPoly", "QPoly"]:
        """Exact polynomial division with remainder over Q."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db, lb = other.degree, other.leading()
        quot = [Fraction(0)] * max(len(rem) - db, 0)
        for k in range(len(rem) - 1, db - 1, -1):
            c = rem[k]
            if c == 0:
                continue
            c /= lb
            quot[k - db] = c
            for j, cb in enumerate(other.coeffs):
                rem[k - db + j] -= c * cb
        return QPoly(quot), QPoly(rem)

    def __floordiv__(self, other: "QPoly") -> "QPoly":
        return self.divmod(other)[0]

    def __mod__(self, other: "QPoly") -> "QPoly":
        return self.divmod(other)[1]

    def monic(self) -> "QPoly":
        if self.is_zero():
            return self
        return self.scale(1 / self.leading())

    def eval(self, x: Scalar) -> Fraction:
        x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    # -- comparisons / hashing -----------------------------------------

    def __eq__(self, other: object) -> bool:
        return isinstance(other, QPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"QPoly({list(self.coeffs)!r})"

    def __str__(self) -> str:
        return render_poly(self)


def poly_gcd(a: QPoly, b: QPoly) -> QPoly:
    """Monic gcd over Q by the Euclidean algorithm.

    Remainders are rescaled to monic at every step, which keeps the
    Fraction coefficients reduced instead of letting them blow up.
    """
    while not b.is_zero():
        a, b = b, (a % b).monic()
    if a.is_zero():
        return a
    return a.monic()


_ONE = QPoly([1])


class RationalFunction:
    """An element of Q(q) in canonical form.

    Invariants: the denominator is nonzero and monic, and numerator and
    denominator are coprime.  Equal values therefore have identical
    representations, so ``==`` is a plain tuple comparison.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=_ONE):
        num = _as_poly(num)
        den = _as_poly(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator in Q(q)")
        if num.is_zero():
            num, den = QPoly(), _ONE
        else:
            # common powers of q come off cheaply and cover the frequent
            # monomial denominators without a full Euclidean gcd
            v = min(num.valuation(), den.valuation())
            if v:
                num = num.shift_down(v)
                den = den.shift_down(v)
            if (
                den.degree > 0
                and num.degree > 0
                # a monomial shares no factor beyond the stripped q-power
                and not num.is_monomial()
                and not den.is_monomial()
            ):
                g = poly_gcd(num, den)
                if g.degree > 0:
                    num = num // g
                    den = den // g
            lc = den.leading()
            if lc != 1:
                den = den.scale(1 / lc)
                num = num.scale(1 / lc)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):  # pragma: no cover - immutability guard
        raise AttributeError("RationalFunction is immutable")

    # -- constructors -------------------------------------------------

    @staticmethod
    def from_fraction(c: Scalar) -> "RationalFunction":
        return RationalFunction(QPoly.constant(c))

    @staticmethod
    def q_power(k: int) -> "RationalFunction":
        """q^k for any integer k (negative k gives 1/q^|k|)."""
        if k >= 0:
            return RationalFunction(QPoly.q_power(k))
        return RationalFunction(_ONE, QPoly.q_power(-k))

    # -- queries -------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den == _ONE

    def as_polynomial(self) -> QPoly:
        if not self.is_polynomial():
            raise ValueError(f"not a polynomial: {self}")
        return self.num

    # -- field arithmetic ----------------------------------------------

    def __add__(self, other) -> "RationalFunction":
        other = _as_rf(other)
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        return RationalFunction(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    def __radd__(self, other) -> "RationalFunction":
        return self.__add__(other)

    def __neg__(self) -> "RationalFunction":
        out = RationalFunction.__new__(RationalFunction)
        object.__setattr__(out, "num", -self.num)
        object.__setattr__(out, "den", self.den)
        return out

    def __sub__(self, other) -> "RationalFunction":
        return self + (-_as_rf(other))

    def __rsub__(self, other) -> "RationalFunction":
        return _as_rf(other) + (-self)

    def __mul__(self, other) -> "RationalFunction":
        other = _as_rf(other)
        # cross-cancel first so gcd work happens on small operands
        n1, d2 = _cancel(self.num, other.den)
        n2, d1 = _cancel(other.num, self.den)
        return RationalFunction(n1 * n2, d1 * d2)

    def __rmul__(self, other) -> "RationalFunction":
        return self.__mul__(other)

    def __truediv__(self, other) -> "RationalFunction":
        other = _as_rf(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero in Q(q)")
        n1, n2 = _cancel(self.num, other.num)
        d1, d2 = _cancel(other.den, self.den)
        return RationalFunction(n1 * d1, d2 * n2)

    def __rtruediv__(self, other) -> "RationalFunction":
        return _as_rf(other) / self

    def __pow__(self, k: int) -> "RationalFunction":
        if k < 0:
            return RationalFunction(self.den, self.num) ** (-k)
        out = RationalFunction.__new__(RationalFunction)
        object.__setattr__(out, "num", self.num ** k)
        object.__setattr__(out, "den", self.den ** k)
        return out

    def eval(self, q0: Scalar) -> Fraction:
        """Exact value at q = q0; raises ZeroDivisionError at a pole."""
        d = self.den.eval(q0)
        if d == 0:
            raise ZeroDivisionError(f"pole at q = {q0}")
        return self.num.eval(q0) / d

    # -- comparisons / hashing -----------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = RationalFunction.from_fraction(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        return f"RationalFunction({self.num!r}, {self.den!r})"

    def __str__(self) -> str:
        return render_rational_function(self)

    # -- expansions ----------------------------------------------------

    def inverse_q_expansion(self, order: int) -> list[Fraction]:
        """Coefficients of the expansion in powers of 1/q.

        Returns ``[c_0, c_1, ..., c_order]`` with
        f = c_0 + c_1/q + c_2/q^2 + ...; requires deg num <= deg den
        (otherwise f blows up as q -> infinity).
        """
        if self.is_zero():
            return [Fraction(0)] * (order + 1)
        shift = self.den.degree - self.num.degree
        if shift < 0:
            raise ValueError("no expansion at q = infinity: numerator degree too large")
        # substitute q = 1/t and read off the Taylor series in t
        rnum = list(reversed(self.num.coeffs))
        rden = list(reversed(self.den.coeffs))
        out: list[Fraction] = []
        state = [Fraction(0)] * shift + rnum + [Fraction(0)] * (order + 1)
        lead = rden[0]
        for k in range(order + 1):
            c = state[k] / lead
            out.append(c)
            if c:
                for j, d in enumerate(rden):
                    state[k + j] -= c * d
        return out


def _as_poly(x) -> QPoly:
    if isinstance(x, QPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return QPoly.constant(x)
    raise TypeError(f"cannot interpret {x!r} as a polynomial in q")


def _as_rf(x) -> RationalFunction:
    if isinstance(x, RationalFunction):
        return x
    if isinstance(x, (int, Fraction, QPoly)):
        return RationalFunction(x)
    raise TypeError(f"cannot interpret {x!r} as an element of Q(q)")


def _cancel(a: QPoly, b: QPoly) -> tuple[QPoly, QPoly]:
    """Divide out gcd(a, b) from both; used to keep products small."""
    if a.degree < 1 or b.degree < 1 or a.is_zero() or b.is_zero():
        return a, b
    v = min(a.valuation(), b.valuation())
    if v:
        a = a.shift_down(v)
        b = b.shift_down(v)
        if a.degree < 1 or b.degree < 1:
            return a, b
    if a.is_monomial() or b.is_monomial():
        return a, b
    g = poly_gcd(a, b)
    if g.degree > 0:
        return a // g, b // g
    return a, b


ZERO = RationalFunction(QPoly())
ONE = RationalFunction(_ONE)
Q = RationalFunction(QPoly.q_power(1))


@lru_cache(maxsize=None)
def gl_order(n: int) -> QPoly:
    """|GL(n,q)| as a polynomial in q: q^C(n,2) * prod_{i=1}^{n} (q^i - 1).

    n = 0 gives the empty product 1.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    out = QPoly.q_power(n * (n - 1) // 2)
    for i in range(1, n + 1):
        out = out * (QPoly.q_power(i) - _ONE)
    return out


# ---------------------------------------------------------------------------
# canonical text rendering and parsing
# ---------------------------------------------------------------------------


def _render_coeff(c: Fraction) -> str:
    return str(c)


def render_poly(p: QPoly) -> str:
    """q-descending text form, e.g. ``q^2 - q`` or ``1/2*q^2 + 3``."""
    if p.is_zero():
        return "0"
    parts: list[str] = []
    for k in range(p.degree, -1, -1):
        c = p[k]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if k == 0:
            body = _render_coeff(mag)
        else:
            var = "q" if k == 1 else f"q^{k}"
            body = var if mag == 1 else f"{_render_coeff(mag)}*{var}"
        if not parts:
            parts.append(body if sign == "+" else f"-{body}")
        else:
            parts.append(f" {sign} {body}")
    return "".join(parts)


def render_rational_function(f: RationalFunction) -> str:
    """Canonical ``num / den`` form; plain polynomial when den = 1."""
    if f.is_polynomial():
        return render_poly(f.num)
    return f"({render_poly(f.num)})/({render_poly(f.den)})"


_TERM_RE = re.compile(
    r"^(?:(?P<coef>\d+(?:/\d+)?)\s*\*?\s*)?(?:q(?:\^(?P<exp>\d+))?)?$"
)


def _parse_poly(text: str) -> QPoly:
    text = text.strip()
    if not text:
        raise ValueError("empty polynomial text")
    # split into signed terms at top level (no parentheses inside a poly)
    chunks = re.split(r"(?=[+-])", text.replace(" ", ""))
    acc = QPoly()
    for chunk in chunks:
        if not chunk:
            continue
        sign = 1
        if chunk[0] == "+":
            chunk = chunk[1:]
        elif chunk[0] == "-":
            sign = -1
            chunk = chunk[1:]
        m = _TERM_RE.match(chunk)
        if not m or (m.group("coef") is None and "q" not in chunk):
            raise ValueError(f"cannot parse term {chunk!r}")
        coef = Fraction(m.group("coef")) if m.group("coef") else Fraction(1)
        if "q" in chunk:
            exp = int(m.group("exp")) if m.group("exp") else 1
        else:
            exp = 0
        acc = acc + QPoly.q_power(exp, sign * coef)
    return acc


def parse_rational_function(text: str) -> RationalFunction:
    """Parse the canonical text form produced by rendering.

    Accepts either a bare polynomial (``q^2 - q``) or the quotient form
    ``(num)/(den)``.
    """
    text = text.strip()
    if text.startswith("("):
        m = re.fullmatch(r"\((?P<num>[^()]*)\)\s*/\s*\((?P<den>[^()]*)\)", text)
        if not m:
            raise ValueError(f"cannot parse rational function {text!r}")
        return RationalFunction(_parse_poly(m.group("num")), _parse_poly(m.group("den")))
    return RationalFunction(_parse_poly(text))
