"""Brute-force ground truth over prime fields F_p.

Enumerates all p^n monic degree-n polynomials and accumulates exact
factor statistics: square-free count, number of roots, number of
irreducible quadratic factors, the sign (-1)^(number of factors), and
discriminant residue classes.  Everything is integer arithmetic, so the
results are exact and byte-reproducible.

Two enumeration methods produce identical stats:

``direct``
    One polynomial at a time with the definitional scalar operations
    (derivative gcd for square-freeness, root counting, trial division).
    Simple, slow, used for cross-checks at small sizes.

``sieve``
    The default.  Irreducible polynomials of each degree are generated
    by a sieve (a monic polynomial is composite exactly when it is a
    product g*h with g irreducible of at most half its degree); the
    per-polynomial factor counts are then accumulated by marking every
    product (irreducible g) * (monic h), vectorized with numpy.  A
    square-free polynomial is hit exactly once per irreducible factor,
    and is recognized by its marked factor degrees summing to n.

A polynomial is encoded as the base-p integer of its non-leading
coefficients with the constant term fastest, which fixes the
enumeration order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Literal

import numpy as np

#: hard cap on polynomial visits per enumeration call
DEFAULT_BUDGET = 10_000_000

_CHUNK = 1 << 16


class EnumerationBudgetError(ValueError):
    """Raised when an enumeration would exceed the configured budget."""


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class PrimeField:
    """F_p for a prime p, checked by trial division at construction."""

    __slots__ = ("p",)

    def __init__(self, p: int):
        if not 2 <= p < 2**31:
            raise ValueError(f"field size {p} out of range")
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        object.__setattr__(self, "p", p)

    def __setattr__(self, name, value):  # pragma: no cover - immutability guard
        raise AttributeError("PrimeField is immutable")

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise ZeroDivisionError(f"0 has no inverse in F_{self.p}")
        return pow(a, self.p - 2, self.p)

    def __eq__(self, other) -> bool:
        return isinstance(other, PrimeField) and self.p == other.p

    def __hash__(self) -> int:
        return hash(("PrimeField", self.p))

    def __repr__(self) -> str:
        return f"PrimeField({self.p})"


class FieldPoly:
    """Dense polynomial over F_p, coefficients lowest degree first."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: PrimeField, coeffs):
        cs = [c % field.p for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):  # pragma: no cover - immutability guard
        raise AttributeError("FieldPoly is immutable")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def leading(self) -> int:
        if self.is_zero():
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def _check_same_field(self, other: "FieldPoly"):
        if self.field.p != other.field.p:
            raise ValueError(
                f"field mismatch: F_{self.field.p} vs F_{other.field.p}"
            )

    def __add__(self, other: "FieldPoly") -> "FieldPoly":
        self._check_same_field(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return FieldPoly(self.field, out)

    def __neg__(self) -> "FieldPoly":
        return FieldPoly(self.field, [-c for c in self.coeffs])

    def __sub__(self, other: "FieldPoly") -> "FieldPoly":
        return self + (-other)

    def __mul__(self, other: "FieldPoly") -> "FieldPoly":
        self._check_same_field(other)
        if self.is_zero() or other.is_zero():
            return FieldPoly(self.field, [])
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, ca in enumerate(self.coeffs):
            if ca:
                for j, cb in enumerate(other.coeffs):
                    out[i + j] += ca * cb
        return FieldPoly(self.field, out)

    def divmod(self, other: "FieldPoly") -> tuple["FieldPoly", "FieldPoly"]:
        self._check_same_field(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        p = self.field.p
        rem = list(self.coeffs)
        db = other.degree
        inv_lead = self.field.inv(other.leading())
        quot = [0] * max(len(rem) - db, 0)
        for k in range(len(rem) - 1, db - 1, -1):
            c = rem[k] % p
            if c == 0:
                continue
            c = c * inv_lead % p
            quot[k - db] = c
            for j, cb in enumerate(other.coeffs):
                rem[k - db + j] -= c * cb
        return FieldPoly(self.field, quot), FieldPoly(self.field, rem)

    def __mod__(self, other: "FieldPoly") -> "FieldPoly":
        return self.divmod(other)[1]

    def __floordiv__(self, other: "FieldPoly") -> "FieldPoly":
        return self.divmod(other)[0]

    def monic(self) -> "FieldPoly":
        if self.is_zero() or self.coeffs[-1] == 1:
            return self
        inv = self.field.inv(self.coeffs[-1])
        return FieldPoly(self.field, [c * inv for c in self.coeffs])

    def derivative(self) -> "FieldPoly":
        return FieldPoly(
            self.field, [k * c for k, c in enumerate(self.coeffs)][1:]
        )

    def eval(self, x: int) -> int:
        p = self.field.p
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % p
        return acc

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FieldPoly)
            and self.field.p == other.field.p
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.field.p, self.coeffs))

    def __repr__(self) -> str:
        return f"FieldPoly(F_{self.field.p}, {list(self.coeffs)})"

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            if k == 0:
                parts.append(str(c))
            else:
                x = "x" if k == 1 else f"x^{k}"
                parts.append(x if c == 1 else f"{c}*{x}")
        return " + ".join(parts)


def poly_gcd(a: FieldPoly, b: FieldPoly) -> FieldPoly:
    """Monic gcd by the Euclidean algorithm; gcd(f, 0) = monic f."""
    a._check_same_field(b)
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def is_squarefree(f: FieldPoly) -> bool:
    """True when gcd(f, f') is constant, for monic f of degree >= 1."""
    if not f.is_monic() or f.degree < 1:
        raise ValueError("square-freeness is defined for monic polynomials of degree >= 1")
    return poly_gcd(f, f.derivative()).degree == 0


def _require_squarefree(f: FieldPoly, what: str):
    if not is_squarefree(f):
        raise ValueError(f"{what} is only defined for square-free polynomials")


def count_linear_factors(f: FieldPoly) -> int:
    """Number of roots of a monic square-free f in F_p."""
    _require_squarefree(f, "the linear-factor count")
    return sum(1 for x in range(f.field.p) if f.eval(x) == 0)


def _monic_polys(field: PrimeField, degree: int) -> Iterator[FieldPoly]:
    """All monic polynomials of the given degree, constant term fastest.

    The order matches the base-p index encoding used by the sieve."""
    for high in itertools.product(range(field.p), repeat=degree):
        yield FieldPoly(field, list(high[::-1]) + [1])


def count_irreducible_quadratic_factors(f: FieldPoly) -> int:
    """Number of monic irreducible quadratics dividing a square-free f.

    Trial division over all p^2 monic quadratics, with irreducibility
    decided by absence of roots.
    """
    _require_squarefree(f, "the quadratic-factor count")
    field = f.field
    count = 0
    for g in _monic_polys(field, 2):
        if any(g.eval(x) == 0 for x in range(field.p)):
            continue
        if (f % g).is_zero():
            count += 1
    return count


def is_irreducible(f: FieldPoly) -> bool:
    """Trial division by every monic polynomial of at most half the degree."""
    if f.degree < 1:
        raise ValueError("irreducibility is defined for degree >= 1")
    for d in range(1, f.degree // 2 + 1):
        for g in _monic_polys(f.field, d):
            if (f % g).is_zero():
                return False
    return True


def count_irreducible_factors(f: FieldPoly) -> int:
    """Number of (distinct) irreducible factors of a monic square-free f.

    Divides out factors in order of increasing degree; a divisor found at
    the lowest remaining degree is automatically irreducible.  Intended
    for small fields; cost grows like p^(n/2).
    """
    _require_squarefree(f, "the factor count")
    rem = f
    count = 0
    d = 1
    while rem.degree > 0:
        if 2 * d > rem.degree:
            count += 1
            break
        for g in _monic_polys(rem.field, d):
            if rem.degree >= d and (rem % g).is_zero():
                rem = rem // g
                count += 1
        d += 1
    return count


# ---------------------------------------------------------------------------
# resultants and discriminants
# ---------------------------------------------------------------------------


def _poly_mod_ints(a: list[int], b: list[int], p: int) -> list[int]:
    """Remainder of a by b over F_p on plain coefficient lists."""
    rem = list(a)
    db = len(b) - 1
    inv_lead = pow(b[-1], p - 2, p)
    for k in range(len(rem) - 1, db - 1, -1):
        c = rem[k] % p
        if c == 0:
            continue
        c = c * inv_lead % p
        for j in range(db + 1):
            rem[k - db + j] = (rem[k - db + j] - c * b[j]) % p
    while rem and rem[-1] % p == 0:
        rem.pop()
    return [c % p for c in rem]


def _resultant_ints(a: list[int], b: list[int], p: int) -> int:
    """Res(a, b) over F_p with the convention

        Res(a, b) = lc(a)^deg(b) * prod over roots alpha of a of b(alpha),

    computed by the Euclidean remainder recurrence."""
    res = 1
    while True:
        da, db = len(a) - 1, len(b) - 1
        if da == 0:
            return res * pow(a[0], db, p) % p
        if db == 0:
            return res * pow(b[0], da, p) % p
        if da < db:
            if (da * db) % 2:
                res = -res % p
            a, b = b, a
            continue
        r = _poly_mod_ints(a, b, p)
        if not r:
            return 0
        if (da * db) % 2:
            res = -res % p
        res = res * pow(b[-1], da - len(r) + 1, p) % p
        a, b = b, r


def resultant(a: FieldPoly, b: FieldPoly) -> int:
    """Res(a, b) as an element of F_p; zero exactly when gcd(a, b) is nonconstant."""
    a._check_same_field(b)
    if a.is_zero() or b.is_zero():
        raise ValueError("the resultant of the zero polynomial is not defined")
    return _resultant_ints(list(a.coeffs), list(b.coeffs), a.field.p)


def _disc_class_ints(coeffs: list[int], n: int, p: int) -> bool:
    """True when disc(f) is a nonzero square in F_p (f monic square-free)."""
    deriv = [k * c % p for k, c in enumerate(coeffs)][1:]
    while deriv and deriv[-1] == 0:
        deriv.pop()
    r = _resultant_ints(coeffs, deriv, p)
    if n * (n - 1) // 2 % 2:
        r = -r % p
    return pow(r, (p - 1) // 2, p) == 1


def discriminant_class(f: FieldPoly) -> Literal["residue", "nonresidue"]:
    """Residue class of disc(f) = (-1)^(n(n-1)/2) Res(f, f') in F_p^*.

    Decided by Euler's criterion; only defined for odd p and monic
    square-free f (the discriminant is then nonzero).
    """
    if f.field.p == 2:
        raise ValueError("discriminant classes need an odd field size")
    _require_squarefree(f, "the discriminant class")
    return (
        "residue"
        if _disc_class_ints(list(f.coeffs), f.degree, f.field.p)
        else "nonresidue"
    )


# ---------------------------------------------------------------------------
# irreducible polynomials by sieve
# ---------------------------------------------------------------------------

_IRR_CACHE: dict[int, list[np.ndarray]] = {}


def _digit_rows(start: int, stop: int, p: int, width: int) -> np.ndarray:
    """Base-p digit rows for indices start..stop-1 (constant term first)."""
    idx = np.arange(start, stop, dtype=np.int64)
    out = np.empty((stop - start, width), dtype=np.int64)
    for i in range(width):
        out[:, i] = idx % p
        idx //= p
    return out


def _monic_rows(start: int, stop: int, p: int, degree: int) -> np.ndarray:
    """Coefficient rows (with leading 1) of monic polynomials by index."""
    rows = np.empty((stop - start, degree + 1), dtype=np.int64)
    rows[:, :degree] = _digit_rows(start, stop, p, degree)
    rows[:, degree] = 1
    return rows


def _product_indices(G: np.ndarray, p: int, m: int) -> Iterator[np.ndarray]:
    """Indices of g*h over all rows g of G and all monic h of degree m.

    G holds coefficient rows (leading 1 included) of fixed degree e; the
    products are monic of degree e+m and are encoded by their n=e+m
    non-leading coefficients.  Yields flat index arrays in batches,
    vectorizing over whichever side of the product is larger.
    """
    e = G.shape[1] - 1
    n = e + m
    n_h = p**m
    pows = p ** np.arange(n, dtype=np.int64)

    def encode(C: np.ndarray) -> np.ndarray:
        C %= p
        idx = np.zeros(C.shape[0], dtype=np.int64)
        for i in range(n):
            idx += C[:, i] * pows[i]
        return idx

    if len(G) <= n_h:
        # vectorize over h, loop over the irreducibles g
        for g in G:
            for start in range(0, n_h, _CHUNK):
                H = _monic_rows(start, min(start + _CHUNK, n_h), p, m)
                C = np.zeros((H.shape[0], n + 1), dtype=np.int64)
                for i in range(e + 1):
                    if g[i]:
                        C[:, i : i + m + 1] += g[i] * H
                yield encode(C)
    else:
        # vectorize over g, loop over the (few) h
        for start_g in range(0, len(G), _CHUNK):
            Gc = G[start_g : start_g + _CHUNK]
            for h_idx in range(n_h):
                h = [(h_idx // p**i) % p for i in range(m)] + [1]
                C = np.zeros((Gc.shape[0], n + 1), dtype=np.int64)
                for j in range(m + 1):
                    if h[j]:
                        C[:, j : j + e + 1] += h[j] * Gc
                yield encode(C)


def _irreducible_arrays(p: int, max_degree: int) -> list[np.ndarray]:
    """Coefficient arrays of monic irreducibles up to max_degree, cached per p.

    Degree d >= 2 is sieved: mark every product of an irreducible of
    degree <= d/2 with a monic cofactor; the unmarked polynomials are
    irreducible.
    """
    irr = _IRR_CACHE.setdefault(p, [np.empty((0, 1), dtype=np.int64)])
    if len(irr) == 1:
        linear = np.empty((p, 2), dtype=np.int64)
        linear[:, 0] = np.arange(p)
        linear[:, 1] = 1
        irr.append(linear)
    for d in range(len(irr), max_degree + 1):
        composite = np.zeros(p**d, dtype=bool)
        for e in range(1, d // 2 + 1):
            for idx in _product_indices(irr[e], p, d - e):
                composite[idx] = True
        keep = np.flatnonzero(~composite)
        rows = np.empty((len(keep), d + 1), dtype=np.int64)
        for i in range(d):
            rows[:, i] = keep % p
            keep //= p
        rows[:, d] = 1
        irr.append(rows)
    return irr


def irreducible_polynomials(p: int, degree: int) -> list[FieldPoly]:
    """The sieve's monic irreducibles of the given degree, in index order."""
    field = PrimeField(p)
    rows = _irreducible_arrays(p, degree)[degree]
    return [FieldPoly(field, row.tolist()) for row in rows]


# ---------------------------------------------------------------------------
# exhaustive statistics
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SquareFreeStats:
    """Exact totals over all monic degree-n polynomials over F_p.

    ``disc_residue``/``disc_nonresidue`` are populated only when
    discriminants were requested and p is odd; otherwise None.
    """

    n: int
    p: int
    total_monic: int
    squarefree_count: int
    sum_n1: int
    sum_n1_pairs: int
    sum_n2: int
    mu_sum: int
    disc_residue: int | None = None
    disc_nonresidue: int | None = None


def _check_budget(n: int, p: int, budget: int) -> int:
    total = p**n
    if total > budget:
        raise EnumerationBudgetError(
            f"enumerating degree {n} over F_{p} visits {total} polynomials; "
            f"requires a budget of at least {total} (configured: {budget})"
        )
    return total


# packed per-polynomial counters, 5 bits each (counts are <= n <= 23)
_FAC_SHIFT, _DEG_SHIFT, _LIN_SHIFT, _QUAD_SHIFT = 0, 5, 10, 15
_MASK = 31


def _stats_sieve(n: int, p: int, discriminants: bool) -> SquareFreeStats:
    if n > 31:
        raise ValueError("the sieve packs counters in 5 bits; degree must be <= 31")
    total = p**n
    irr = _irreducible_arrays(p, n)
    packed = np.zeros(total, dtype=np.uint32)
    for d in range(1, n + 1):
        code = np.uint32(
            (1 << _FAC_SHIFT)
            | (d << _DEG_SHIFT)
            | ((d == 1) << _LIN_SHIFT)
            | ((d == 2) << _QUAD_SHIFT)
        )
        for idx in _product_indices(irr[d], p, n - d):
            np.add.at(packed, idx, code)

    degsum = (packed >> _DEG_SHIFT) & _MASK
    sf = degsum == n
    nfac = packed[sf] & _MASK
    n1 = ((packed[sf] >> _LIN_SHIFT) & _MASK).astype(np.int64)
    n2 = ((packed[sf] >> _QUAD_SHIFT) & _MASK).astype(np.int64)

    sf_count = int(sf.sum())
    odd = int((nfac & 1).sum())
    stats = {
        "squarefree_count": sf_count,
        "sum_n1": int(n1.sum()),
        "sum_n1_pairs": int((n1 * (n1 - 1) // 2).sum()),
        "sum_n2": int(n2.sum()),
        "mu_sum": sf_count - 2 * odd,
    }

    disc_residue = disc_nonresidue = None
    if discriminants and p % 2 == 1:
        disc_residue = 0
        sf_indices = np.flatnonzero(sf)
        for start in range(0, len(sf_indices), _CHUNK):
            block = sf_indices[start : start + _CHUNK]
            rows = np.empty((len(block), n + 1), dtype=np.int64)
            work = block.copy()
            for i in range(n):
                rows[:, i] = work % p
                work //= p
            rows[:, n] = 1
            for row in rows.tolist():
                if _disc_class_ints(row, n, p):
                    disc_residue += 1
        disc_nonresidue = sf_count - disc_residue

    return SquareFreeStats(
        n=n,
        p=p,
        total_monic=total,
        disc_residue=disc_residue,
        disc_nonresidue=disc_nonresidue,
        **stats,
    )


def _stats_direct(n: int, p: int, discriminants: bool) -> SquareFreeStats:
    field = PrimeField(p)
    total = p**n
    sf_count = sum_n1 = sum_pairs = sum_n2 = mu_sum = 0
    disc_residue = disc_nonresidue = None
    want_disc = discriminants and p % 2 == 1
    if want_disc:
        disc_residue = disc_nonresidue = 0
    for f in _monic_polys(field, n):
        if not is_squarefree(f):
            continue
        sf_count += 1
        n1 = count_linear_factors(f)
        sum_n1 += n1
        sum_pairs += n1 * (n1 - 1) // 2
        sum_n2 += count_irreducible_quadratic_factors(f)
        mu_sum += -1 if count_irreducible_factors(f) % 2 else 1
        if want_disc:
            if discriminant_class(f) == "residue":
                disc_residue += 1
            else:
                disc_nonresidue += 1
    return SquareFreeStats(
        n=n,
        p=p,
        total_monic=total,
        squarefree_count=sf_count,
        sum_n1=sum_n1,
        sum_n1_pairs=sum_pairs,
        sum_n2=sum_n2,
        mu_sum=mu_sum,
        disc_residue=disc_residue,
        disc_nonresidue=disc_nonresidue,
    )


def enumerate_stats(
    n: int,
    p: int,
    *,
    budget: int = DEFAULT_BUDGET,
    method: Literal["sieve", "direct"] = "sieve",
    discriminants: bool = True,
) -> SquareFreeStats:
    """Exact statistics over all p^n monic degree-n polynomials over F_p.

    Both methods visit every polynomial and must return identical stats;
    ``direct`` exists as the slow definitional cross-check of the
    vectorized ``sieve``.  Discriminant classes (odd p only) are the
    expensive part and can be switched off.
    """
    if n < 1:
        raise ValueError("degree must be at least 1")
    PrimeField(p)
    _check_budget(n, p, budget)
    if method == "sieve":
        return _stats_sieve(n, p, discriminants)
    if method == "direct":
        return _stats_direct(n, p, discriminants)
    raise ValueError(f"unknown enumeration method {method!r}")
