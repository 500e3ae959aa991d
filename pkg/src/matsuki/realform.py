"""Real-form involutions on a root datum, at the level of the cocharacter lattice.

A real form enters every computation here only through the integer involution
it induces on the cocharacter lattice of a stable maximally split torus.  The
catalog ships that involution for the classical low-rank forms, each with its
normalization documented in the entry notes, so orbit indices never drift
between the library, the CLI and the matrix model.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import ValidationError
from .rootdata import (
    Coweight,
    IntMatrix,
    RootDatum,
    dominant_representative,
    dot,
    gl_datum,
    identity_matrix,
    is_dominant,
    kernel_basis,
    mat_mul,
    mat_transpose,
    mat_vec,
    pgl2_datum,
    positive_root_indices,
    require_valid,
    sl2_datum,
    sl2xsl2_datum,
    sl3_datum,
    weyl_longest_element,
)


@dataclass(frozen=True)
class InvolutionSpec:
    """An integer involution of the cocharacter lattice encoding a real form."""

    datum: RootDatum
    theta: IntMatrix
    name: str = ""

    def apply(self, coweight: Coweight) -> Coweight:
        return mat_vec(self.theta, coweight)

    def is_real(self, coweight: Coweight) -> bool:
        return self.apply(coweight) == coweight


def validate_involution(spec: InvolutionSpec) -> list[str]:
    """Return violated invariants of the involution; empty means valid."""
    problems: list[str] = []
    datum = spec.datum
    n = datum.rank
    if len(spec.theta) != n or any(len(row) != n for row in spec.theta):
        return [f"theta must be a {n}x{n} integer matrix"]

    if mat_mul(spec.theta, spec.theta) != identity_matrix(n):
        problems.append("theta squared is not the identity")

    coroot_set = set(datum.coroots)
    for beta in datum.coroots:
        if spec.apply(beta) not in coroot_set:
            problems.append(f"theta does not permute the coroot set (image of {beta} missing)")
            break

    # positivity compatibility: the transpose action must permute the positive
    # roots that restrict non-trivially to the fixed sublattice
    basis = real_coweight_basis(spec)
    theta_t = mat_transpose(spec.theta)
    moving = {
        datum.roots[i]
        for i in positive_root_indices(datum)
        if any(dot(datum.roots[i], b) != 0 for b in basis)
    }
    for alpha in moving:
        if mat_vec(theta_t, alpha) not in moving:
            problems.append(
                "transpose of theta does not permute the positive roots restricting "
                f"non-trivially to the fixed sublattice (image of {alpha} leaves the set)"
            )
            break
    return problems


def require_valid_involution(spec: InvolutionSpec) -> None:
    require_valid(spec.datum)
    problems = validate_involution(spec)
    if problems:
        raise ValidationError(f"invalid involution {spec.name!r}: " + "; ".join(problems))


@lru_cache(maxsize=None)
def real_coweight_basis(spec: InvolutionSpec) -> tuple[Coweight, ...]:
    """Basis of the saturated sublattice of theta-fixed cocharacters.

    Computed as the integer kernel of (theta - 1) via Smith normal form; the
    kernel of an integer matrix is automatically saturated.  May be empty
    (anisotropic forms).
    """
    n = spec.datum.rank
    delta = tuple(
        tuple(spec.theta[i][j] - (1 if i == j else 0) for j in range(n)) for i in range(n)
    )
    return kernel_basis(delta)


def levi_simple_roots(spec: InvolutionSpec) -> tuple[int, ...]:
    """Simple roots vanishing on every theta-fixed cocharacter: the Levi of the
    minimal parabolic, whose Weyl group acts trivially on the split part."""
    basis = real_coweight_basis(spec)
    return tuple(
        i for i in spec.datum.simple_indices
        if all(dot(spec.datum.roots[i], b) == 0 for b in basis)
    )


@lru_cache(maxsize=None)
def levi_longest_element(spec: InvolutionSpec) -> IntMatrix:
    return weyl_longest_element(spec.datum, levi_simple_roots(spec))


def dominant_involution(spec: InvolutionSpec, coweight: Coweight) -> Coweight:
    """The induced involution on the dominant cone: theta followed by the
    dominant representative.  Rejects non-dominant input."""
    if not is_dominant(spec.datum, coweight):
        raise ValidationError(f"{coweight} is not dominant")
    image, _ = dominant_representative(spec.datum, spec.apply(coweight))
    return image


def real_criterion(spec: InvolutionSpec, coweight: Coweight) -> bool:
    """A dominant coweight is real iff it is fixed by the dominant involution
    and by the longest element of the Levi."""
    if not is_dominant(spec.datum, coweight):
        raise ValidationError(f"{coweight} is not dominant")
    if dominant_involution(spec, coweight) != coweight:
        return False
    return mat_vec(levi_longest_element(spec), coweight) == coweight


# ---------------------------------------------------------------------------
# catalog


@dataclass(frozen=True)
class RealFormCatalogEntry:
    name: str
    spec: InvolutionSpec
    expected_k_connected: bool
    notes: str

    @property
    def datum(self) -> RootDatum:
        return self.spec.datum

    @property
    def theta(self) -> IntMatrix:
        return self.spec.theta


def _entry(name, datum, theta, connected, notes) -> RealFormCatalogEntry:
    spec = InvolutionSpec(datum=datum, theta=theta, name=name)
    require_valid_involution(spec)
    return RealFormCatalogEntry(name=name, spec=spec, expected_k_connected=connected, notes=notes)


def _swap_matrix() -> IntMatrix:
    return ((0, 1), (1, 0))


@lru_cache(maxsize=None)
def _catalog() -> dict[str, RealFormCatalogEntry]:
    entries = [
        _entry(
            "sl2_split", sl2_datum(), identity_matrix(1), True,
            "SL2(R) inside SL2(C); lattice Z*alpha_vee with alpha_vee = (1); theta = id; "
            "symmetric subgroup SO2(C), connected.",
        ),
        _entry(
            "sl2_compact", sl2_datum(), ((-1,),), True,
            "SU(2) inside SL2(C); theta = -1, no split directions; symmetric subgroup is "
            "all of SL2(C).",
        ),
        _entry(
            "pgl2_so21", pgl2_datum(), identity_matrix(1), False,
            "SO(2,1) inside SO3(C), the adjoint form; lattice Z*omega with alpha_vee = 2*omega, "
            "theta = id; symmetric subgroup O2(C) is disconnected, so only even multiples of "
            "omega index orbits.  The classical n-th orbit corresponds to the coweight 2n*omega.",
        ),
        _entry(
            "sl2C_as_real", sl2xsl2_datum(), _swap_matrix(), True,
            "SL2(C) viewed as a real group; complexification SL2 x SL2 with theta swapping the "
            "factors; symmetric subgroup a diagonal SL2(C), connected.",
        ),
        _entry(
            "sl3_split", sl3_datum(), identity_matrix(2), True,
            "SL3(R) inside SL3(C); simple-coroot coordinates on the coroot lattice; theta = id; "
            "symmetric subgroup SO3(C), connected.",
        ),
        _entry(
            "su11", sl2_datum(), identity_matrix(1), True,
            "SU(1,1) inside SL2(C) with the anti-diagonal Hermitian form; on the split diagonal "
            "torus theta acts trivially (SU(1,1) is isomorphic to SL2(R)); symmetric subgroup "
            "GL1(C), connected.",
        ),
        _entry(
            "su21", sl3_datum(), _swap_matrix(), True,
            "SU(2,1) inside SL3(C) with the anti-diagonal Hermitian form; on the stable maximally "
            "split torus theta swaps the two simple coroots (simple-coroot coordinates); split "
            "sublattice spanned by (1,1); symmetric subgroup S(GL2 x GL1), connected.",
        ),
        _entry(
            "gl1_split", gl_datum(1), identity_matrix(1), False,
            "GL1(R) inside GL1(C); no roots; symmetric subgroup O1 = {±1} is disconnected, so "
            "only even cocharacters index orbits.",
        ),
        _entry(
            "gl2_split", gl_datum(2), identity_matrix(2), False,
            "GL2(R) inside GL2(C); standard coordinates e_1, e_2; theta = id; symmetric subgroup "
            "O2(C) is disconnected: orbit indices have even coordinate sum.",
        ),
        _entry(
            "gl3_split", gl_datum(3), identity_matrix(3), False,
            "GL3(R) inside GL3(C); standard coordinates; theta = id; symmetric subgroup O3(C) is "
            "disconnected: orbit indices have even coordinate sum.",
        ),
    ]
    return {e.name: e for e in entries}


def catalog_names() -> tuple[str, ...]:
    return tuple(_catalog())


def catalog(name: str) -> RealFormCatalogEntry:
    """Look up a shipped real form; unknown names raise with the available list."""
    table = _catalog()
    if name not in table:
        raise ValidationError(
            f"unknown catalog entry {name!r}; available: {', '.join(table)}"
        )
    return table[name]


def is_catalog_spec(spec: InvolutionSpec) -> bool:
    """Structural match against the shipped entry of the same name; the datum's
    own name is ignored so exported files still count as catalog data."""
    table = _catalog()
    if spec.name not in table:
        return False
    known = table[spec.name]
    return (
        known.theta == spec.theta
        and known.datum.rank == spec.datum.rank
        and known.datum.roots == spec.datum.roots
        and known.datum.coroots == spec.datum.coroots
        and known.datum.simple_indices == spec.datum.simple_indices
    )
