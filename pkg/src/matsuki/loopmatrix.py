"""Exact type-A matrix model for loop-group elements and their coset invariants.

Loops are square matrices of Laurent polynomials with Gaussian-rational
coefficients.  Four discrete invariants are computed here:

- ``stratum_invariant``: the dominant coweight of the power-series double
  coset, read off from elementary divisors at t = 0;
- ``splitting_type``: the dominant coweight of the two-sided polynomial
  double coset, i.e. the splitting type of the glued bundle on the projective
  line, recovered from a section-count jump pattern;
- ``k_orbit_invariant`` and ``r_orbit_invariant``: the stratum and splitting
  invariants of the symmetrized loops attached to a form.

All arithmetic is exact; ranks are taken over the rationals through a
fraction-free integer echelon, never floating point.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce
from math import gcd

from .errors import TheoremViolationError, ValidationError
from .rootdata import Coweight, IntMatrix

# ---------------------------------------------------------------------------
# Gaussian rationals


class Gaussian:
    """An element of Q(i), stored as an exact (re, im) pair of Fractions."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, *_):
        raise AttributeError("Gaussian values are immutable")

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if not isinstance(other, Gaussian):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __add__(self, other):
        return _gauss(self.re + other.re, self.im + other.im)

    def __sub__(self, other):
        return _gauss(self.re - other.re, self.im - other.im)

    def __neg__(self):
        return _gauss(-self.re, -self.im)

    def __mul__(self, other):
        return _gauss(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def __truediv__(self, other):
        norm = other.re * other.re + other.im * other.im
        if norm == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return _gauss(
            (self.re * other.re + self.im * other.im) / norm,
            (self.im * other.re - self.re * other.im) / norm,
        )

    def conjugate(self) -> "Gaussian":
        return _gauss(self.re, -self.im)

    def __repr__(self):
        return f"Gaussian({self.re}, {self.im})"


def _gauss(re: Fraction, im: Fraction) -> Gaussian:
    # internal constructor for operands that are already Fractions
    g = object.__new__(Gaussian)
    object.__setattr__(g, "re", re)
    object.__setattr__(g, "im", im)
    return g


G_ZERO = Gaussian(0)
G_ONE = Gaussian(1)
G_I = Gaussian(0, 1)
HALF = Gaussian(Fraction(1, 2))
HALF_OVER_I = Gaussian(0, Fraction(-1, 2))  # 1/(2i)


# ---------------------------------------------------------------------------
# Laurent polynomials


class LaurentPoly:
    """A Laurent polynomial over Q(i): a finite exponent -> coefficient map
    with no stored zeros."""

    __slots__ = ("_c",)

    def __init__(self, coeffs=None):
        clean = {}
        if coeffs:
            for e, c in coeffs.items():
                if c:
                    clean[int(e)] = c
        object.__setattr__(self, "_c", clean)

    def __setattr__(self, *_):
        raise AttributeError("LaurentPoly values are immutable")

    @staticmethod
    def _raw(clean: dict) -> "LaurentPoly":
        # internal constructor for maps already free of zero coefficients
        p = object.__new__(LaurentPoly)
        object.__setattr__(p, "_c", clean)
        return p

    # constructors
    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({0: G_ONE})

    @classmethod
    def t_power(cls, e: int, coeff: Gaussian = G_ONE):
        return cls({e: coeff})

    @classmethod
    def constant(cls, value) -> "LaurentPoly":
        return cls({0: value if isinstance(value, Gaussian) else Gaussian(value)})

    # queries
    def items(self):
        return self._c.items()

    def coeff(self, e: int) -> Gaussian:
        return self._c.get(e, G_ZERO)

    def is_zero(self) -> bool:
        return not self._c

    def valuation(self) -> int:
        if not self._c:
            raise ValidationError("valuation of the zero polynomial")
        return min(self._c)

    def degree(self) -> int:
        if not self._c:
            raise ValidationError("degree of the zero polynomial")
        return max(self._c)

    def monomial(self) -> tuple[int, Gaussian] | None:
        """(exponent, coefficient) when the polynomial has a single term."""
        if len(self._c) != 1:
            return None
        (e, c), = self._c.items()
        return e, c

    # arithmetic
    def __add__(self, other):
        out = dict(self._c)
        for e, c in other._c.items():
            s = out.get(e, G_ZERO) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LaurentPoly._raw(out)

    def __neg__(self):
        return LaurentPoly._raw({e: -c for e, c in self._c.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        out: dict[int, Gaussian] = {}
        for e1, c1 in self._c.items():
            for e2, c2 in other._c.items():
                e = e1 + e2
                s = out.get(e, G_ZERO) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return LaurentPoly._raw(out)

    def scale(self, factor: Gaussian) -> "LaurentPoly":
        if not factor:
            return LP_ZERO
        return LaurentPoly._raw({e: c * factor for e, c in self._c.items()})

    def shift(self, k: int) -> "LaurentPoly":
        return LaurentPoly._raw({e + k: c for e, c in self._c.items()})

    def tau(self) -> "LaurentPoly":
        """Substitute t -> 1/t."""
        return LaurentPoly._raw({-e: c for e, c in self._c.items()})

    def conjugate(self) -> "LaurentPoly":
        """Conjugate the coefficients; t stays t."""
        return LaurentPoly._raw({e: c.conjugate() for e, c in self._c.items()})

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __repr__(self):
        if not self._c:
            return "0"

        def term(e, c):
            coeff = f"({c.re}{'+' if c.im >= 0 else '-'}{abs(c.im)}i)"
            if e == 0:
                return coeff
            power = "t" if e == 1 else f"t^{e}"
            return f"{coeff}*{power}"

        return " + ".join(term(e, c) for e, c in sorted(self._c.items()))


LP_ZERO = LaurentPoly.zero()
LP_ONE = LaurentPoly.one()


def poly_divmod(a: LaurentPoly, b: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    """Long division in Q(i)[t]; both arguments must have valuation >= 0."""
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    q: dict[int, Gaussian] = {}
    r = a
    db, lb = b.degree(), b.coeff(b.degree())
    while not r.is_zero() and r.degree() >= db:
        e = r.degree() - db
        c = r.coeff(r.degree()) / lb
        q[e] = q.get(e, G_ZERO) + c
        r = r - b.shift(e).scale(c)
    return LaurentPoly(q), r


# ---------------------------------------------------------------------------
# Laurent matrices


@dataclass(frozen=True)
class LaurentMatrix:
    """A square matrix of Laurent polynomials tagged with its ambient form."""

    n: int
    entries: tuple[tuple[LaurentPoly, ...], ...]
    form: str

    def entry(self, i: int, j: int) -> LaurentPoly:
        return self.entries[i][j]


def lm_from_rows(form: str, rows) -> LaurentMatrix:
    rows = tuple(tuple(r) for r in rows)
    n = len(rows)
    if n == 0 or any(len(r) != n for r in rows):
        raise ValidationError("loop matrix must be square and non-empty")
    return LaurentMatrix(n=n, entries=rows, form=form)


def identity_loop(form: str, n: int) -> LaurentMatrix:
    return lm_from_rows(
        form, [[LP_ONE if i == j else LP_ZERO for j in range(n)] for i in range(n)]
    )


def diagonal_loop(form: str, exponents) -> LaurentMatrix:
    n = len(exponents)
    return lm_from_rows(
        form,
        [
            [LaurentPoly.t_power(exponents[i]) if i == j else LP_ZERO for j in range(n)]
            for i in range(n)
        ],
    )


def mat_mul(a: LaurentMatrix, b: LaurentMatrix) -> LaurentMatrix:
    if a.n != b.n:
        raise ValidationError("size mismatch in matrix product")
    n = a.n
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = LP_ZERO
            for k in range(n):
                if not a.entries[i][k].is_zero() and not b.entries[k][j].is_zero():
                    acc = acc + a.entries[i][k] * b.entries[k][j]
            row.append(acc)
        rows.append(row)
    return lm_from_rows(a.form, rows)


def transpose(g: LaurentMatrix) -> LaurentMatrix:
    return lm_from_rows(g.form, tuple(zip(*g.entries)))


def apply_tau(g: LaurentMatrix) -> LaurentMatrix:
    """Entrywise substitution t -> 1/t."""
    return lm_from_rows(g.form, [[p.tau() for p in row] for row in g.entries])


def apply_conjugation(g: LaurentMatrix) -> LaurentMatrix:
    """Entrywise coefficient conjugation."""
    return lm_from_rows(g.form, [[p.conjugate() for p in row] for row in g.entries])


def determinant(g: LaurentMatrix) -> LaurentPoly:
    """Cofactor expansion; fine at desk scale."""

    def det(rows):
        m = len(rows)
        if m == 1:
            return rows[0][0]
        acc = LP_ZERO
        for j in range(m):
            if rows[0][j].is_zero():
                continue
            minor = [[row[k] for k in range(m) if k != j] for row in rows[1:]]
            term = rows[0][j] * det(minor)
            acc = acc + term if j % 2 == 0 else acc - term
        return acc

    return det([list(r) for r in g.entries])


def _unit_monomial(g: LaurentMatrix) -> tuple[int, Gaussian]:
    """Exponent and coefficient of the determinant, which must be a monomial."""
    mono = determinant(g).monomial()
    if mono is None:
        raise ValidationError("loop is not invertible: determinant is not a unit monomial")
    return mono


def mat_inverse(g: LaurentMatrix) -> LaurentMatrix:
    """Adjugate over the unit determinant; errors on non-unit determinants."""
    e, c = _unit_monomial(g)
    inv_det = LaurentPoly.t_power(-e, G_ONE / c)
    n = g.n
    if n == 1:
        return lm_from_rows(g.form, [[inv_det]])
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            minor = [
                [g.entries[r][k] for k in range(n) if k != i]
                for r in range(n)
                if r != j
            ]
            d = determinant(lm_from_rows(g.form, minor)) if n > 1 else LP_ONE
            sign = 1 if (i + j) % 2 == 0 else -1
            row.append(d.scale(G_ONE if sign == 1 else -G_ONE) * inv_det)
        rows.append(row)
    return lm_from_rows(g.form, rows)


def min_valuation(g: LaurentMatrix) -> int:
    vals = [p.valuation() for row in g.entries for p in row if not p.is_zero()]
    if not vals:
        raise ValidationError("zero matrix has no valuation")
    return min(vals)


def max_degree(g: LaurentMatrix) -> int:
    degs = [p.degree() for row in g.entries for p in row if not p.is_zero()]
    if not degs:
        raise ValidationError("zero matrix has no degree")
    return max(degs)


def loops_equal(a: LaurentMatrix, b: LaurentMatrix) -> bool:
    return a.n == b.n and a.entries == b.entries


# ---------------------------------------------------------------------------
# forms and their involutions


def _reversal(n: int) -> IntMatrix:
    return tuple(tuple(1 if i + j == n - 1 else 0 for j in range(n)) for i in range(n))


@dataclass(frozen=True)
class FormAction:
    """The involution package of one supported matrix form.

    Split forms: the real conjugation is coefficient conjugation, the
    symmetric involution is transpose-inverse (symmetric subgroup is the
    orthogonal group).  Unitary forms u(p,q): the real conjugation is the
    J-twisted conjugate-transpose-inverse for the anti-diagonal form matrix J,
    whose diagonal torus is a stable maximally split one.
    """

    name: str
    n: int
    family: str  # "split" or "unitary"
    special: bool  # determinant pinned to 1
    signature: tuple[int, int] | None = None

    def _j(self) -> LaurentMatrix:
        rows = [
            [LP_ONE if i + j == self.n - 1 else LP_ZERO for j in range(self.n)]
            for i in range(self.n)
        ]
        return lm_from_rows(self.name, rows)

    # involutions of the loop group
    def conjugation(self, g: LaurentMatrix) -> LaurentMatrix:
        if self.family == "split":
            return apply_conjugation(g)
        j = self._j()
        return mat_mul(mat_mul(j, mat_inverse(transpose(apply_conjugation(g)))), j)

    def time_reversal(self, g: LaurentMatrix) -> LaurentMatrix:
        return apply_tau(g)

    def symmetric_involution(self, g: LaurentMatrix) -> LaurentMatrix:
        if self.family == "split":
            return mat_inverse(transpose(g))
        j = self._j()
        return mat_mul(mat_mul(j, g), j)

    # anti-involutions
    def real_antiinvolution(self, g: LaurentMatrix) -> LaurentMatrix:
        """Invert, reverse time, apply the real conjugation."""
        if self.family == "split":
            return apply_conjugation(apply_tau(mat_inverse(g)))
        j = self._j()
        return mat_mul(mat_mul(j, transpose(apply_conjugation(apply_tau(g)))), j)

    def symmetric_antiinvolution(self, g: LaurentMatrix) -> LaurentMatrix:
        if self.family == "split":
            return transpose(g)
        j = self._j()
        return mat_mul(mat_mul(j, mat_inverse(g)), j)

    def symmetrize(self, g: LaurentMatrix) -> LaurentMatrix:
        """The loop-to-symmetric-space projection applied to g."""
        return mat_mul(self.symmetric_antiinvolution(g), g)

    # lattice shadow
    def lattice_involution(self) -> IntMatrix:
        if self.family == "split":
            return tuple(tuple(1 if i == j else 0 for j in range(self.n)) for i in range(self.n))
        return tuple(tuple(-x for x in row) for row in _reversal(self.n))

    def lattice_fixed(self, lam: Coweight) -> bool:
        theta = self.lattice_involution()
        return tuple(sum(r * x for r, x in zip(row, lam)) for row in theta) == tuple(lam)

    # membership checks for the subgroup generators
    def is_real_loop(self, g: LaurentMatrix) -> bool:
        return loops_equal(mat_mul(self.real_antiinvolution(g), g), identity_loop(self.name, self.n))

    def is_symmetric_subgroup_loop(self, g: LaurentMatrix) -> bool:
        return loops_equal(self.symmetric_involution(g), g)

    def validate(self, g: LaurentMatrix) -> None:
        if g.n != self.n:
            raise ValidationError(f"form {self.name} expects size {self.n}, got {g.n}")
        e, c = _unit_monomial(g)
        if self.special and (e != 0 or c != G_ONE):
            raise ValidationError(f"form {self.name} requires determinant 1")


@lru_cache(maxsize=None)
def _form_table() -> dict[str, FormAction]:
    forms = [
        FormAction(name="gl1_split", n=1, family="split", special=False),
        FormAction(name="gl2_split", n=2, family="split", special=False),
        FormAction(name="gl3_split", n=3, family="split", special=False),
        FormAction(name="sl2_split", n=2, family="split", special=True),
        FormAction(name="sl3_split", n=3, family="split", special=True),
        FormAction(name="u11", n=2, family="unitary", special=False, signature=(1, 1)),
        FormAction(name="u21", n=3, family="unitary", special=False, signature=(2, 1)),
    ]
    return {f.name: f for f in forms}


def form_names() -> tuple[str, ...]:
    return tuple(_form_table())


def form_action(name: str) -> FormAction:
    table = _form_table()
    if name not in table:
        raise ValidationError(f"unsupported form {name!r}; available: {', '.join(table)}")
    return table[name]


# ---------------------------------------------------------------------------
# stratum invariant: elementary divisors at t = 0


def _poly_entries_nonneg(g: LaurentMatrix) -> tuple[list[list[LaurentPoly]], int]:
    """Clear denominators in t: return t^N * g as a polynomial matrix and N."""
    shift = max(0, -min_valuation(g))
    rows = [[p.shift(shift) for p in row] for row in g.entries]
    return rows, shift


def _min_degree_pivot(rows, start):
    best = None
    where = None
    m = len(rows)
    for i in range(start, m):
        for j in range(start, m):
            p = rows[i][j]
            if p.is_zero():
                continue
            d = p.degree()
            if best is None or d < best:
                best, where = d, (i, j)
    return where


def _poly_diagonalize(rows) -> list[LaurentPoly]:
    """Diagonalize a square polynomial matrix by unimodular row/column
    operations over Q(i)[t]; returns the diagonal (no divisibility chain, the
    valuations carry all the information used downstream)."""
    m = len(rows)
    for t in range(m):
        while True:
            where = _min_degree_pivot(rows, t)
            if where is None:
                break
            i, j = where
            rows[t], rows[i] = rows[i], rows[t]
            for row in rows:
                row[t], row[j] = row[j], row[t]
            pivot = rows[t][t]
            dirty = False
            for r in range(t + 1, m):
                if rows[r][t].is_zero():
                    continue
                q, _ = poly_divmod(rows[r][t], pivot)
                rows[r] = [a - q * b for a, b in zip(rows[r], rows[t])]
                if not rows[r][t].is_zero():
                    dirty = True
            for c in range(t + 1, m):
                if rows[t][c].is_zero():
                    continue
                q, _ = poly_divmod(rows[t][c], pivot)
                for row in rows:
                    row[c] = row[c] - q * row[t]
                if not rows[t][c].is_zero():
                    dirty = True
            if not dirty:
                break
    return [rows[i][i] for i in range(m)]


def stratum_invariant(g: LaurentMatrix) -> Coweight:
    """Dominant coweight of the power-series double coset: orders of vanishing
    at t = 0 of the elementary divisors, shifted back and sorted decreasingly."""
    _unit_monomial(g)
    rows, shift = _poly_entries_nonneg(g)
    diag = _poly_diagonalize(rows)
    vals = sorted(p.valuation() for p in diag)
    return tuple(v - shift for v in reversed(vals))


# ---------------------------------------------------------------------------
# splitting type: section-count jump pattern


def _gcd_all(xs) -> int:
    return reduce(gcd, xs, 0)


class _IntegerEchelon:
    """Incremental fraction-free row echelon over the integers: exact rank."""

    def __init__(self, width: int):
        self.width = width
        self.pivots: dict[int, list[int]] = {}
        self.rank = 0

    def add_row(self, row: list[int]) -> None:
        while True:
            lead = next((i for i, x in enumerate(row) if x), None)
            if lead is None:
                return
            piv = self.pivots.get(lead)
            if piv is None:
                g = _gcd_all(row)
                if g > 1:
                    row = [x // g for x in row]
                if row[lead] < 0:
                    row = [-x for x in row]
                self.pivots[lead] = row
                self.rank += 1
                return
            a, b = piv[lead], row[lead]
            row = [a * x - b * y for x, y in zip(row, piv)]
            g = _gcd_all(row)
            if g > 1:
                row = [x // g for x in row]


def splitting_type(g: LaurentMatrix) -> Coweight:
    """Dominant coweight of the two-sided polynomial double coset.

    For each twist k the space of polynomial vectors v with all powers of g*v
    bounded by k is finite-dimensional, of dimension sum_i max(0, k - a_i + 1)
    where (a_i) is the splitting multiset; the multiset is recovered from the
    jumps of that dimension over a provably sufficient window.  Ranks are
    exact: complex systems are realified and reduced by integer echelon.
    """
    det_exp, _ = _unit_monomial(g)
    n = g.n
    ginv = mat_inverse(g)
    k_lo = min_valuation(g)  # no section below the minimal valuation
    k_hi = -min_valuation(ginv)  # dual bound through the inverse
    if k_hi < k_lo:
        raise RuntimeError("internal error: splitting window is empty")
    cap = max(0, k_hi + max_degree(ginv))  # deg v <= k + deg(g^-1) <= cap
    unknowns = n * (cap + 1)
    top = max_degree(g) + cap

    echelon = _IntegerEchelon(2 * unknowns)
    exponent = top
    dims: dict[int, int] = {}

    def add_constraints_at(e: int) -> None:
        # coefficient of t^e in (g @ v), one complex row per output coordinate
        for i in range(n):
            complex_row = []
            for j in range(n):
                poly = g.entries[i][j]
                for d in range(cap + 1):
                    complex_row.append(poly.coeff(e - d))
            denom = 1
            for c in complex_row:
                denom = denom * c.re.denominator // gcd(denom, c.re.denominator)
                denom = denom * c.im.denominator // gcd(denom, c.im.denominator)
            re_row = []
            im_row = []
            for c in complex_row:
                x = int(c.re * denom)
                y = int(c.im * denom)
                re_row.extend((x, -y))
                im_row.extend((y, x))
            if any(re_row):
                echelon.add_row(re_row)
            if any(im_row):
                echelon.add_row(im_row)

    for k in range(k_hi, k_lo - 2, -1):
        while exponent > k:
            add_constraints_at(exponent)
            exponent -= 1
        assert echelon.rank % 2 == 0
        dims[k] = unknowns - echelon.rank // 2

    if dims[k_lo - 1] != 0:
        raise RuntimeError("internal error: splitting window exhausted below the lower bound")
    exponents: list[int] = []
    prev_count = 0
    for k in range(k_lo, k_hi + 1):
        count = dims[k] - dims[k - 1]
        exponents.extend([k] * (count - prev_count))
        prev_count = count
    if prev_count != n or sum(exponents) != det_exp:
        raise RuntimeError("internal error: splitting window exhausted before recovery")
    return tuple(sorted(exponents, reverse=True))


# ---------------------------------------------------------------------------
# orbit invariants


def k_orbit_invariant(g: LaurentMatrix) -> Coweight:
    """Stratum invariant of the symmetrized loop; guaranteed to be fixed by the
    form's lattice involution, and checked."""
    form = form_action(g.form)
    form.validate(g)
    lam = stratum_invariant(form.symmetrize(g))
    if not form.lattice_fixed(lam):
        raise TheoremViolationError(
            f"k-orbit invariant {lam} is not fixed by the lattice involution of {form.name}; "
            "the unique-real-representative law fails, so the form/matrix pair is inconsistent"
        )
    return lam


def r_orbit_invariant(g: LaurentMatrix) -> Coweight:
    """Splitting type of the real-symmetrized loop; guaranteed to be a dominant
    real coweight, and checked."""
    form = form_action(g.form)
    form.validate(g)
    lam = splitting_type(mat_mul(form.real_antiinvolution(g), g))
    if not form.lattice_fixed(lam):
        raise TheoremViolationError(
            f"r-orbit invariant {lam} is not fixed by the lattice involution of {form.name}; "
            "the real double-coset law fails, so the form/matrix pair is inconsistent"
        )
    return lam


# ---------------------------------------------------------------------------
# geodesic representatives


def _split_membership_error(form: FormAction, lam) -> str | None:
    if len(lam) != form.n:
        return f"coweight must have length {form.n}"
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        return "coweight must be dominant (non-increasing entries)"
    if form.special and sum(lam) != 0:
        return "special form requires coordinate sum zero"
    if sum(1 for a in lam if a % 2) % 2:
        return "parity obstruction: an odd number of odd entries has no based loop"
    return None


def geodesic_representative(form: FormAction | str, lam: Coweight) -> LaurentMatrix:
    """An exactly-verified based loop whose real symmetrization is t^lam.

    Even entries contribute half-power diagonal monomials; odd entries are
    paired and each pair contributes a half-angle rotation times a half-power
    torus block, all with integer exponents.  The defining identity is checked
    by exact multiplication before returning.
    """
    if isinstance(form, str):
        form = form_action(form)
    if form.family != "split":
        raise ValidationError(
            f"geodesic construction is only provided for the split forms, not {form.name}"
        )
    reason = _split_membership_error(form, lam)
    if reason is not None:
        raise ValidationError(f"{tuple(lam)} is not an orbit index for {form.name}: {reason}")

    n = form.n
    rows = [[LP_ZERO for _ in range(n)] for _ in range(n)]
    odd_positions = [i for i, a in enumerate(lam) if a % 2]
    for i, a in enumerate(lam):
        if a % 2 == 0:
            rows[i][i] = LaurentPoly.t_power(a // 2)
    for i, j in zip(odd_positions[::2], odd_positions[1::2]):
        a, b = lam[i], lam[j]
        cos_a = LaurentPoly({(a + 1) // 2: HALF, (a - 1) // 2: HALF})
        sin_b = LaurentPoly({(b + 1) // 2: HALF_OVER_I, (b - 1) // 2: -HALF_OVER_I})
        msin_a = LaurentPoly({(a + 1) // 2: -HALF_OVER_I, (a - 1) // 2: HALF_OVER_I})
        cos_b = LaurentPoly({(b + 1) // 2: HALF, (b - 1) // 2: HALF})
        rows[i][i] = cos_a
        rows[i][j] = sin_b
        rows[j][i] = msin_a
        rows[j][j] = cos_b
    loop = lm_from_rows(form.name, rows)
    target = diagonal_loop(form.name, lam)
    if not loops_equal(mat_mul(form.real_antiinvolution(loop), loop), target):
        raise TheoremViolationError(
            f"geodesic construction for {tuple(lam)} failed its exact multiplication check"
        )
    return loop


# ---------------------------------------------------------------------------
# seeded random loops


def _exp_nilpotent(form_name: str, n: int, entries) -> LaurentMatrix:
    """exp of a strictly triangular Laurent matrix, exact since X^n = 0."""
    x = lm_from_rows(form_name, entries)
    total = identity_loop(form_name, n)
    power = identity_loop(form_name, n)
    fact = 1
    for k in range(1, n):
        power = mat_mul(power, x)
        fact *= k
        scaled = lm_from_rows(
            form_name,
            [[p.scale(Gaussian(Fraction(1, fact))) for p in row] for row in power.entries],
        )
        total = lm_from_rows(
            form_name,
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(total.entries, scaled.entries)],
        )
    return total


def _zero_rows(n):
    return [[LP_ZERO for _ in range(n)] for _ in range(n)]


def _strict_positions(n, rng, upper=True):
    pairs = [(i, j) for i in range(n) for j in range(n) if (j > i if upper else j < i)]
    return rng.choice(pairs)


def random_real_loop(form: FormAction | str, seed: int) -> LaurentMatrix:
    """Deterministic product of generators of the real polynomial loop group."""
    if isinstance(form, str):
        form = form_action(form)
    rng = random.Random(f"{form.name}:real:{seed}")
    n = form.n
    g = identity_loop(form.name, n)
    for _ in range(rng.randint(0, 3 if n == 2 else 2)):
        kind = rng.random()
        if form.family == "split":
            if kind < 0.4 and n > 1:
                # exp(N * (t^k + t^-k)) with N strictly triangular real
                i, j = _strict_positions(n, rng, upper=rng.random() < 0.5)
                c = Gaussian(rng.choice([-1, 1, 2]))
                k = rng.choice([0, 1])
                rows = _zero_rows(n)
                rows[i][j] = LaurentPoly({k: c, -k: c} if k else {0: c})
                g = mat_mul(g, _exp_nilpotent(form.name, n, rows))
            elif kind < 0.8 and n > 1 and not form.special:
                # constant real elementary matrix
                i, j = _strict_positions(n, rng, upper=rng.random() < 0.5)
                rows = [[LP_ONE if a == b else LP_ZERO for b in range(n)] for a in range(n)]
                rows[i][j] = LaurentPoly.constant(rng.choice([-2, -1, 1, 2]))
                g = mat_mul(g, lm_from_rows(form.name, rows))
            else:
                signs = [rng.choice([1, -1]) for _ in range(n)]
                if form.special and len([s for s in signs if s < 0]) % 2:
                    signs[0] = -signs[0]
                rows = _zero_rows(n)
                for i, s in enumerate(signs):
                    rows[i][i] = LaurentPoly.constant(s)
                g = mat_mul(g, lm_from_rows(form.name, rows))
        else:
            if kind < 0.6 and n > 1:
                # exp(N t^k - J conj(N)^T J t^-k), strictly upper hence nilpotent
                i, j = _strict_positions(n, rng, upper=True)
                c = Gaussian(rng.choice([-1, 0, 1]), rng.choice([-1, 0, 1]))
                if not c:
                    c = G_ONE
                k = rng.choice([0, 1])
                rows = _zero_rows(n)
                rows[i][j] = LaurentPoly.t_power(k, c)
                ri, rj = n - 1 - j, n - 1 - i  # J-twisted transpose stays strictly upper
                mirrored = LaurentPoly.t_power(-k, -c.conjugate())
                rows[ri][rj] = rows[ri][rj] + mirrored
                g = mat_mul(g, _exp_nilpotent(form.name, n, rows))
            elif kind < 0.8:
                g = mat_mul(g, form._j())
            else:
                units = [G_I, -G_I, G_ONE, -G_ONE]
                d = [rng.choice(units) for _ in range(n)]
                for i in range(n):  # anti-diagonal pairing: conj(d_i) d_{n-1-i} = 1
                    d[n - 1 - i] = G_ONE / d[i].conjugate()
                rows = _zero_rows(n)
                for i in range(n):
                    rows[i][i] = LaurentPoly.constant(d[i])
                g = mat_mul(g, lm_from_rows(form.name, rows))
    if not form.is_real_loop(g):
        raise TheoremViolationError("generated loop failed its real symmetry postcondition")
    return g


def _rotation_block_entries(k: int) -> tuple[LaurentPoly, LaurentPoly]:
    """cos/sin pair (t^k + t^-k)/2 and (t^k - t^-k)/(2i); orthogonal and based."""
    if k == 0:
        return LP_ONE, LP_ZERO
    c = LaurentPoly({k: HALF, -k: HALF})
    s = LaurentPoly({k: HALF_OVER_I, -k: -HALF_OVER_I})
    return c, s


def random_k_loop(form: FormAction | str, seed: int) -> LaurentMatrix:
    """Deterministic product of generators of the symmetric-subgroup loop group."""
    if isinstance(form, str):
        form = form_action(form)
    rng = random.Random(f"{form.name}:k:{seed}")
    n = form.n
    g = identity_loop(form.name, n)
    for _ in range(rng.randint(0, 3 if n == 2 else 2)):
        kind = rng.random()
        if form.family == "split":
            if n == 1:
                rows = [[LaurentPoly.constant(rng.choice([1, -1]))]]
                g = mat_mul(g, lm_from_rows(form.name, rows))
                continue
            i, j = _strict_positions(n, rng, upper=True)
            if kind < 0.5:
                c, s = _rotation_block_entries(1)
            else:
                c = LaurentPoly.constant(Fraction(3, 5))
                s = LaurentPoly.constant(Fraction(4, 5))
            rows = [[LP_ONE if a == b else LP_ZERO for b in range(n)] for a in range(n)]
            rows[i][i], rows[i][j] = c, s
            rows[j][i], rows[j][j] = -s, c
            g = mat_mul(g, lm_from_rows(form.name, rows))
            if kind > 0.85 and not form.special:
                refl = _zero_rows(n)
                for a in range(n):
                    refl[a][a] = LaurentPoly.constant(-1 if a == i else 1)
                g = mat_mul(g, lm_from_rows(form.name, refl))
        else:
            # loops commuting with the anti-diagonal J: a*I + b*J patterns
            e1, e2 = rng.choice([0, 1]), rng.choice([0, -1, 1])
            u = LaurentPoly.t_power(e1, rng.choice([G_ONE, -G_ONE]))
            v = LaurentPoly.t_power(e2, rng.choice([G_ONE, G_I]))
            a = (u + v).scale(HALF)
            b = (v - u).scale(HALF)
            rows = _zero_rows(n)
            for i in range(n):
                rows[i][i] = a
                rows[i][n - 1 - i] = rows[i][n - 1 - i] + b
            g = mat_mul(g, lm_from_rows(form.name, rows))
    if not form.is_symmetric_subgroup_loop(g):
        raise TheoremViolationError("generated loop failed its symmetric-subgroup postcondition")
    return g


def random_polynomial_loop(form: FormAction | str, seed: int, negative: bool = False) -> LaurentMatrix:
    """Deterministic polynomial loop: unipotents with polynomial entries times
    constant invertibles; with ``negative`` the loop lives in t^-1 instead."""
    if isinstance(form, str):
        form = form_action(form)
    rng = random.Random(f"{form.name}:poly:{seed}")
    n = form.n
    g = identity_loop(form.name, n)
    for _ in range(rng.randint(0, 3 if n == 2 else 2)):
        kind = rng.random()
        if kind < 0.7 and n > 1:
            i, j = _strict_positions(n, rng, upper=rng.random() < 0.5)
            rows = [[LP_ONE if a == b else LP_ZERO for b in range(n)] for a in range(n)]
            coeff = Gaussian(rng.choice([-1, 1]), rng.choice([-1, 0, 1]))
            rows[i][j] = LaurentPoly.t_power(rng.choice([0, 1]), coeff)
            g = mat_mul(g, lm_from_rows(form.name, rows))
        else:
            units = [G_ONE, -G_ONE, G_I] if not form.special else [G_ONE]
            rows = _zero_rows(n)
            for i in range(n):
                rows[i][i] = LaurentPoly.constant(rng.choice(units))
            g = mat_mul(g, lm_from_rows(form.name, rows))
    if negative:
        g = apply_tau(g)
        if max_degree(g) > 0:
            raise TheoremViolationError("negative polynomial loop has positive powers")
    elif min_valuation(g) < 0:
        raise TheoremViolationError("polynomial loop has negative powers")
    return g
