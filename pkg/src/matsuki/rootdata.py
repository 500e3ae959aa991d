"""Exact root-datum arithmetic on a fixed integer lattice.

Coweights are integer vectors in Z^rank (the cocharacter lattice); roots live
in the dual copy and pair with coweights by the plain dot product.  All
computations are integer or Fraction exact; nothing here ever touches floats.

Weyl group elements are handled as integer matrices acting on the cocharacter
lattice, except where an explicit reflection word is part of a result.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import ValidationError

Coweight = tuple[int, ...]
IntMatrix = tuple[tuple[int, ...], ...]


# ---------------------------------------------------------------------------
# small exact vector/matrix helpers


def vec_add(u: Coweight, v: Coweight) -> Coweight:
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u: Coweight, v: Coweight) -> Coweight:
    return tuple(a - b for a, b in zip(u, v))


def vec_neg(u: Coweight) -> Coweight:
    return tuple(-a for a in u)


def vec_scale(c: int, u: Coweight) -> Coweight:
    return tuple(c * a for a in u)


def dot(u, v) -> int:
    return sum(a * b for a, b in zip(u, v))


def identity_matrix(n: int) -> IntMatrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def mat_vec(m: IntMatrix, v) -> Coweight:
    return tuple(dot(row, v) for row in m)


def mat_mul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    bt = tuple(zip(*b))
    return tuple(tuple(dot(row, col) for col in bt) for row in a)


def mat_transpose(m: IntMatrix) -> IntMatrix:
    return tuple(zip(*m)) if m else ()


def solve_rational(columns: tuple[Coweight, ...], target) -> tuple[Fraction, ...] | None:
    """Solve sum_j c_j * columns[j] = target over the rationals.

    Returns the coefficient tuple, or None when target is outside the span.
    Columns must be linearly independent; dependent input raises, since every
    caller in this package feeds a basis.
    """
    if not columns:
        return () if all(x == 0 for x in target) else None
    m = len(columns[0])
    k = len(columns)
    aug = [[Fraction(columns[j][i]) for j in range(k)] + [Fraction(target[i])] for i in range(m)]
    pivots: list[int] = []
    row = 0
    for col in range(k):
        sel = next((r for r in range(row, m) if aug[r][col] != 0), None)
        if sel is None:
            raise ValidationError("dependent columns passed to solve_rational")
        aug[row], aug[sel] = aug[sel], aug[row]
        piv = aug[row][col]
        aug[row] = [x / piv for x in aug[row]]
        for r in range(m):
            if r != row and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[row])]
        pivots.append(row)
        row += 1
    # consistency: rows below the pivot block must have zero rhs
    for r in range(row, m):
        if aug[r][k] != 0:
            return None
    return tuple(aug[pivots[j]][k] for j in range(k))


# ---------------------------------------------------------------------------
# root data


@dataclass(frozen=True)
class RootDatum:
    """A reductive root datum with cocharacter lattice Z^rank.

    roots[i] pairs with coroots[i]; simple_indices select the simple system.
    The full root set (positives and negatives) must be listed so reflection
    closure is checkable.
    """

    rank: int
    roots: tuple[Coweight, ...]
    coroots: tuple[Coweight, ...]
    simple_indices: tuple[int, ...]
    name: str = ""

    def pairing(self, root: Coweight, coweight: Coweight) -> int:
        return dot(root, coweight)

    def reflect(self, simple_index: int, coweight: Coweight) -> Coweight:
        """Simple reflection on cocharacters: x -> x - <alpha, x> alpha_vee."""
        alpha = self.roots[simple_index]
        avee = self.coroots[simple_index]
        return vec_sub(coweight, vec_scale(dot(alpha, coweight), avee))

    def reflection_matrix(self, simple_index: int) -> IntMatrix:
        alpha = self.roots[simple_index]
        avee = self.coroots[simple_index]
        return tuple(
            tuple((1 if i == j else 0) - avee[i] * alpha[j] for j in range(self.rank))
            for i in range(self.rank)
        )


@lru_cache(maxsize=None)
def simple_roots(datum: RootDatum) -> tuple[Coweight, ...]:
    return tuple(datum.roots[i] for i in datum.simple_indices)


@lru_cache(maxsize=None)
def simple_coroots(datum: RootDatum) -> tuple[Coweight, ...]:
    return tuple(datum.coroots[i] for i in datum.simple_indices)


@lru_cache(maxsize=None)
def positive_root_indices(datum: RootDatum) -> tuple[int, ...]:
    """Indices of roots expressible as non-negative integer combinations of simples."""
    out = []
    for idx, root in enumerate(datum.roots):
        coeffs = solve_rational(simple_roots(datum), root)
        if coeffs is not None and all(c.denominator == 1 and c >= 0 for c in coeffs):
            out.append(idx)
    return tuple(out)


@lru_cache(maxsize=None)
def positive_coroots(datum: RootDatum) -> tuple[Coweight, ...]:
    return tuple(datum.coroots[i] for i in positive_root_indices(datum))


@lru_cache(maxsize=None)
def two_rho(datum: RootDatum) -> Coweight:
    """Sum of the positive roots; the height functional on coweights."""
    total = (0,) * datum.rank
    for i in positive_root_indices(datum):
        total = vec_add(total, datum.roots[i])
    return total


def height(datum: RootDatum, coweight: Coweight) -> int:
    return dot(two_rho(datum), coweight)


def is_dominant(datum: RootDatum, coweight: Coweight) -> bool:
    return all(dot(datum.roots[i], coweight) >= 0 for i in datum.simple_indices)


def validate_root_datum(datum: RootDatum) -> list[str]:
    """Return the list of violated invariants; empty means valid."""
    problems: list[str] = []
    if datum.rank < 1:
        return ["rank must be a positive integer"]
    if len(datum.roots) != len(datum.coroots):
        return ["roots and coroots must be index-paired lists of equal length"]
    for vec in (*datum.roots, *datum.coroots):
        if len(vec) != datum.rank:
            return [f"vector {vec} does not have length rank={datum.rank}"]
    if len(set(datum.simple_indices)) != len(datum.simple_indices):
        problems.append("simple_indices contains duplicates")
    if any(i < 0 or i >= len(datum.roots) for i in datum.simple_indices):
        return ["simple_indices out of range"]
    if len(set(datum.coroots)) != len(datum.coroots):
        problems.append("coroot list contains duplicates")

    for i in datum.simple_indices:
        p = dot(datum.roots[i], datum.coroots[i])
        if p != 2:
            problems.append(f"pairing <alpha_{i}, alpha_{i}^vee> = {p}, expected 2")

    coroot_set = set(datum.coroots)
    for i in datum.simple_indices:
        if dot(datum.roots[i], datum.coroots[i]) != 2:
            continue  # reflection is meaningless without the pairing axiom
        for beta in datum.coroots:
            if datum.reflect(i, beta) not in coroot_set:
                problems.append(
                    f"reflection at simple root {i} does not permute the coroot set "
                    f"(image of {beta} missing)"
                )
                break

    try:
        simples = simple_roots(datum)
        for idx, root in enumerate(datum.roots):
            coeffs = solve_rational(simples, root)
            if coeffs is None:
                problems.append(f"root {root} lies outside the span of the simple roots")
                continue
            integral = all(c.denominator == 1 for c in coeffs)
            nonneg = all(c >= 0 for c in coeffs)
            nonpos = all(c <= 0 for c in coeffs)
            if not integral or not (nonneg or nonpos):
                problems.append(
                    f"root {root} is not a signed non-negative integer combination of simples"
                )
    except ValidationError:
        problems.append("simple roots are linearly dependent")
    return problems


def require_valid(datum: RootDatum) -> None:
    problems = validate_root_datum(datum)
    if problems:
        raise ValidationError(f"invalid root datum {datum.name!r}: " + "; ".join(problems))


# ---------------------------------------------------------------------------
# dominance and Weyl combinatorics


def dominant_representative(datum: RootDatum, coweight: Coweight) -> tuple[Coweight, tuple[int, ...]]:
    """Dominant member of the Weyl orbit, with the reflection word that reaches it.

    The word lists simple root indices in application order, so the result is
    s_{w[-1]} ... s_{w[0]} applied to the input.  Each step strictly increases
    the height pairing, which bounds the loop by the (finite) orbit.
    """
    x = coweight
    word: list[int] = []
    while True:
        neg = next((i for i in datum.simple_indices if dot(datum.roots[i], x) < 0), None)
        if neg is None:
            return x, tuple(word)
        x = datum.reflect(neg, x)
        word.append(neg)


def linear_solver(columns: tuple[Coweight, ...], dim: int | None = None):
    """Echelon data for writing a vector in the given independent column basis.

    Returns (solve_rows, consistency_rows) of Fractions: coefficients are
    solve_rows @ v, valid only when every consistency row pairs to zero.
    ``dim`` is required when the column list is empty.
    """
    k = len(columns)
    if k == 0:
        if dim is None:
            raise ValidationError("linear_solver needs the ambient dimension for no columns")
        return (), tuple(tuple(Fraction(int(i == j)) for j in range(dim)) for i in range(dim))
    m = len(columns[0])
    # [A | I] echelon; track the transformation applied to the identity block.
    aug = [[Fraction(columns[j][i]) for j in range(k)] + [Fraction(int(i == t)) for t in range(m)] for i in range(m)]
    row = 0
    pivot_rows = []
    for col in range(k):
        sel = next((r for r in range(row, m) if aug[r][col] != 0), None)
        if sel is None:
            raise ValidationError("dependent columns passed to linear_solver")
        aug[row], aug[sel] = aug[sel], aug[row]
        piv = aug[row][col]
        aug[row] = [x / piv for x in aug[row]]
        for r in range(m):
            if r != row and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[row])]
        pivot_rows.append(row)
        row += 1
    solve_rows = tuple(tuple(aug[pivot_rows[j]][k:]) for j in range(k))
    consistency = tuple(tuple(aug[r][k:]) for r in range(row, m))
    return solve_rows, consistency


@lru_cache(maxsize=None)
def _coroot_coordinate_solver(datum: RootDatum):
    try:
        return linear_solver(simple_coroots(datum), dim=datum.rank)
    except ValidationError:
        raise ValidationError("simple coroots are linearly dependent")


def coroot_coordinates(datum: RootDatum, vector: Coweight) -> tuple[Fraction, ...] | None:
    """Coordinates of a vector in the simple-coroot basis, or None if outside the span."""
    solve_rows, consistency = _coroot_coordinate_solver(datum)
    for row in consistency:
        if dot(row, vector) != 0:
            return None
    return tuple(sum(r * v for r, v in zip(row, vector)) for row in solve_rows)


@lru_cache(maxsize=None)
def _dominance_diff(datum: RootDatum, diff: Coweight) -> bool:
    coords = coroot_coordinates(datum, diff)
    if coords is None:
        return False
    return all(c.denominator == 1 and c >= 0 for c in coords)


def dominance_leq(datum: RootDatum, lower: Coweight, upper: Coweight) -> bool:
    """Coroot dominance order: lower <= upper iff the difference is a
    non-negative integer combination of simple coroots."""
    return _dominance_diff(datum, vec_sub(upper, lower))


@lru_cache(maxsize=None)
def _parabolic_positive_coroots(datum: RootDatum, subset: tuple[int, ...]) -> tuple[Coweight, ...]:
    """Positive coroots of the sub-system spanned by the given simple roots."""
    chosen = []
    sub_simple_positions = [datum.simple_indices.index(i) for i in subset]
    simples = simple_roots(datum)
    for idx in positive_root_indices(datum):
        coeffs = solve_rational(simples, datum.roots[idx])
        assert coeffs is not None
        support = {j for j, c in enumerate(coeffs) if c != 0}
        if support <= set(sub_simple_positions):
            chosen.append(datum.coroots[idx])
    return tuple(chosen)


def weyl_longest_element(datum: RootDatum, subset: frozenset[int] | tuple[int, ...]) -> IntMatrix:
    """Matrix of the longest element of the parabolic Weyl subgroup.

    Drives a regular dominant vector of the sub-system (the sum of its
    positive coroots) to the anti-dominant chamber; the accumulated product of
    reflections is the longest element.
    """
    subset = tuple(sorted(subset))
    if any(i not in datum.simple_indices for i in subset):
        raise ValidationError(f"subset {subset} is not a set of simple indices")
    if not subset:
        return identity_matrix(datum.rank)
    x = (0,) * datum.rank
    for beta in _parabolic_positive_coroots(datum, subset):
        x = vec_add(x, beta)
    w = identity_matrix(datum.rank)
    while True:
        pos = next((i for i in subset if dot(datum.roots[i], x) > 0), None)
        if pos is None:
            return w
        x = datum.reflect(pos, x)
        w = mat_mul(datum.reflection_matrix(pos), w)


# ---------------------------------------------------------------------------
# Smith normal form and finite abelian quotients


def smith_normal_form(matrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """U, D, V with U @ M @ V = D, U and V unimodular, D diagonal, d1 | d2 | ...

    Pivoting is deterministic (smallest nonzero absolute value, ties row-major)
    so every projection built on top of this is reproducible bit for bit.
    """
    rows = [list(r) for r in matrix]
    m = len(rows)
    n = len(rows[0]) if m else 0
    if any(len(r) != n for r in rows):
        raise ValidationError("ragged matrix")
    U = [list(r) for r in identity_matrix(m)]
    V = [list(r) for r in identity_matrix(n)]

    def row_op(i, j, q):  # row_i -= q * row_j
        rows[i] = [a - q * b for a, b in zip(rows[i], rows[j])]
        U[i] = [a - q * b for a, b in zip(U[i], U[j])]

    def col_op(i, j, q):  # col_i -= q * col_j
        for r in rows:
            r[i] -= q * r[j]
        for r in V:
            r[i] -= q * r[j]

    def swap_rows(i, j):
        rows[i], rows[j] = rows[j], rows[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for r in rows:
            r[i], r[j] = r[j], r[i]
        for r in V:
            r[i], r[j] = r[j], r[i]

    t = 0
    while t < min(m, n):
        pivot = None
        best = None
        for i in range(t, m):
            for j in range(t, n):
                v = abs(rows[i][j])
                if v and (best is None or v < best):
                    best, pivot = v, (i, j)
        if pivot is None:
            break
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])
        dirty = False
        for i in range(t + 1, m):
            if rows[i][t]:
                q = rows[i][t] // rows[t][t]
                row_op(i, t, q)
                if rows[i][t]:
                    dirty = True
        for j in range(t + 1, n):
            if rows[t][j]:
                q = rows[t][j] // rows[t][t]
                col_op(j, t, q)
                if rows[t][j]:
                    dirty = True
        if dirty:
            continue
        # divisibility: pivot must divide the remaining block
        offender = next(
            ((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if rows[i][j] % rows[t][t]),
            None,
        )
        if offender is not None:
            row_op(t, offender[0], -1)  # pull the offending row up, re-eliminate
            continue
        t += 1

    for i in range(min(m, n)):
        if rows[i][i] < 0:
            rows[i] = [-a for a in rows[i]]
            U[i] = [-a for a in U[i]]
    return tuple(map(tuple, U)), tuple(map(tuple, rows)), tuple(map(tuple, V))


def kernel_basis(matrix) -> tuple[Coweight, ...]:
    """Basis of the integer kernel, a saturated sublattice of the column domain."""
    m = len(matrix)
    n = len(matrix[0]) if m else 0
    if n == 0:
        return ()
    _, d, v = smith_normal_form(matrix)
    basis = []
    for j in range(n):
        dj = d[j][j] if j < min(m, n) else 0
        if dj == 0:
            col = tuple(v[i][j] for i in range(n))
            first = next((x for x in col if x != 0), 0)
            basis.append(vec_neg(col) if first < 0 else col)
    return tuple(sorted(basis))


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """A finitely generated abelian group in invariant-factor normal form.

    invariant_factors lists the nontrivial factors (each >= 2, divisibility
    chain) followed by zeros for free summands.  projection maps an
    ambient-lattice vector to its normal-form coordinates; reduce with
    ``image`` to compare classes.
    """

    invariant_factors: tuple[int, ...]
    projection: IntMatrix

    def image(self, vector) -> tuple[int, ...]:
        coords = tuple(dot(row, vector) for row in self.projection)
        return tuple(c % f if f else c for c, f in zip(coords, self.invariant_factors))

    def same_class(self, u, v) -> bool:
        return self.image(u) == self.image(v)

    def order(self) -> int | None:
        if any(f == 0 for f in self.invariant_factors):
            return None
        total = 1
        for f in self.invariant_factors:
            total *= f
        return total

    def is_trivial(self) -> bool:
        return not self.invariant_factors

    def describe(self) -> str:
        if not self.invariant_factors:
            return "1"
        return " x ".join("Z" if f == 0 else f"Z/{f}" for f in self.invariant_factors)


def quotient_group(ambient_rank: int, sublattice_generators: tuple[Coweight, ...]) -> FiniteAbelianGroup:
    """The quotient of Z^ambient_rank by the span of the given generators."""
    if ambient_rank == 0:
        return FiniteAbelianGroup((), ())
    if not sublattice_generators:
        return FiniteAbelianGroup((0,) * ambient_rank, identity_matrix(ambient_rank))
    k = len(sublattice_generators)
    matrix = tuple(tuple(g[i] for g in sublattice_generators) for i in range(ambient_rank))
    u, d, _ = smith_normal_form(matrix)
    factors = []
    rows = []
    for i in range(ambient_rank):
        di = d[i][i] if i < min(ambient_rank, k) else 0
        if di == 1:
            continue
        factors.append(di)
        rows.append(u[i])
    # zeros (free factors) sort after the torsion chain
    order = sorted(range(len(factors)), key=lambda i: (factors[i] == 0, i))
    return FiniteAbelianGroup(
        tuple(factors[i] for i in order),
        tuple(tuple(rows[i]) for i in order),
    )


def pi1_of_group(datum: RootDatum) -> FiniteAbelianGroup:
    """Fundamental group of the reductive group: cocharacters modulo all coroots."""
    return quotient_group(datum.rank, tuple(dict.fromkeys(datum.coroots)))


def sublattice_membership(generators: tuple[Coweight, ...], vector: Coweight, rank: int) -> bool:
    """Whether the vector is an integer combination of the generators."""
    group = quotient_group(rank, generators)
    return all(c == 0 for c in group.image(vector))


def sublattice_index(ambient_basis_rank: int, generators: tuple[Coweight, ...]) -> int | None:
    """Index of the generated sublattice in Z^rank; None when infinite."""
    return quotient_group(ambient_basis_rank, generators).order()


# ---------------------------------------------------------------------------
# stock data used by the catalog and the matrix model


def gl_datum(n: int) -> RootDatum:
    """GL_n with the standard diagonal torus: roots e_i - e_j in the dual basis."""
    roots = []
    coroots = []
    simple = []
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            vec = tuple(1 if k == i else -1 if k == j else 0 for k in range(n))
            if j == i + 1:
                simple.append(len(roots))
            roots.append(vec)
            coroots.append(vec)
    return RootDatum(rank=n, roots=tuple(roots), coroots=tuple(coroots),
                     simple_indices=tuple(simple), name=f"gl{n}")


def sl2_datum() -> RootDatum:
    """SL_2 on its coroot lattice: alpha = (2), alpha_vee = (1)."""
    return RootDatum(rank=1, roots=((2,), (-2,)), coroots=((1,), (-1,)),
                     simple_indices=(0,), name="sl2")


def pgl2_datum() -> RootDatum:
    """Adjoint form of SL_2: lattice Z*omega with alpha_vee = 2*omega, alpha = omega*."""
    return RootDatum(rank=1, roots=((1,), (-1,)), coroots=((2,), (-2,)),
                     simple_indices=(0,), name="pgl2")


def sl3_datum() -> RootDatum:
    """SL_3 in simple-coroot coordinates."""
    roots = ((2, -1), (-1, 2), (1, 1), (-2, 1), (1, -2), (-1, -1))
    coroots = ((1, 0), (0, 1), (1, 1), (-1, 0), (0, -1), (-1, -1))
    return RootDatum(rank=2, roots=roots, coroots=coroots, simple_indices=(0, 1), name="sl3")


def sl2xsl2_datum() -> RootDatum:
    """SL_2 x SL_2 on the product of coroot lattices."""
    roots = ((2, 0), (0, 2), (-2, 0), (0, -2))
    coroots = ((1, 0), (0, 1), (-1, 0), (0, -1))
    return RootDatum(rank=2, roots=roots, coroots=coroots, simple_indices=(0, 1), name="sl2xsl2")
