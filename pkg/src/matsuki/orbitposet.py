"""The two orbit posets, their order-reversing duality, and core data.

Orbit indices are dominant theta-fixed coweights whose loop class lies in the
image sub-semigroup.  The symmetric-subgroup order is coroot dominance; the
real order is its reverse; dual orbits share the same index and meet along a
finite-dimensional flag variety described by ``CoreData``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product as iter_product

from .errors import ValidationError
from .fundgroup import in_image_semigroup, restricted_coroot_generators
from .realform import InvolutionSpec, real_coweight_basis
from .rootdata import (
    Coweight,
    dominance_leq,
    dot,
    height,
    is_dominant,
    positive_root_indices,
    simple_coroots,
    vec_add,
    vec_scale,
    vec_sub,
)


@dataclass(frozen=True)
class CoreData:
    """Flag-variety data of the locus where dual orbits meet."""

    coweight: Coweight
    parabolic_simple_roots: tuple[int, ...]
    flag_dimension: int


@dataclass(frozen=True)
class PosetSlice:
    """A height-bounded slice of one of the two orbit posets."""

    spec_name: str
    height_bound: int
    order: str  # "K" or "R"
    elements: tuple[Coweight, ...]
    hasse_edges: tuple[tuple[Coweight, Coweight], ...]
    component_count: int
    image_index: int


def is_orbit_index(spec: InvolutionSpec, coweight: Coweight) -> bool:
    """Dominant, theta-fixed and in the image sub-semigroup (no height bound)."""
    if not is_dominant(spec.datum, coweight):
        return False
    if not spec.is_real(coweight):
        return False
    return in_image_semigroup(spec, coweight)


def require_orbit_index(spec: InvolutionSpec, coweight: Coweight) -> None:
    if len(coweight) != spec.datum.rank:
        raise ValidationError(f"{coweight} does not have length rank={spec.datum.rank}")
    if not is_dominant(spec.datum, coweight):
        raise ValidationError(f"{coweight} is not dominant")
    if not spec.is_real(coweight):
        raise ValidationError(f"{coweight} is not theta-fixed")
    if not in_image_semigroup(spec, coweight):
        raise ValidationError(f"{coweight} is not in the image sub-semigroup")


@lru_cache(maxsize=None)
def enumerate_orbits(spec: InvolutionSpec, height_bound: int) -> tuple[Coweight, ...]:
    """All orbit indices with height at most the bound, sorted lexicographically.

    The height functional (pairing with the sum of positive roots) vanishes on
    central directions, so enumeration additionally restricts every lattice
    coordinate to [-H, H]; for semisimple data that box never cuts anything the
    height bound allows.  Always contains zero.
    """
    if height_bound < 0:
        raise ValidationError("height bound must be non-negative")
    basis = real_coweight_basis(spec)
    if not basis:
        return ((0,) * spec.datum.rank,)
    # coefficient ranges: coordinates boxed by H force |c_i| <= H * l1-norm of
    # the i-th row of the rational solve matrix for the basis
    from math import ceil

    from .rootdata import linear_solver

    solve_rows, _ = linear_solver(basis)
    found = []
    bound = height_bound
    ranges = []
    for row in solve_rows:
        norm = sum(abs(x) for x in row)
        limit = ceil(bound * norm)
        ranges.append(range(-limit, limit + 1))
    for coeffs in iter_product(*ranges):
        vec = (0,) * spec.datum.rank
        for c, b in zip(coeffs, basis):
            if c:
                vec = vec_add(vec, vec_scale(c, b))
        if any(abs(x) > bound for x in vec):
            continue
        if not is_dominant(spec.datum, vec):
            continue
        h = height(spec.datum, vec)
        if h < 0 or h > bound:
            continue
        if in_image_semigroup(spec, vec):
            found.append(vec)
    return tuple(sorted(found))


def k_leq(spec: InvolutionSpec, lower: Coweight, upper: Coweight) -> bool:
    """Order of the symmetric-subgroup orbit poset: coroot dominance."""
    return dominance_leq(spec.datum, lower, upper)


def r_leq(spec: InvolutionSpec, lower: Coweight, upper: Coweight) -> bool:
    """Order of the real orbit poset: reversed dominance."""
    return k_leq(spec, upper, lower)


def core_data(spec: InvolutionSpec, coweight: Coweight) -> CoreData:
    """Parabolic type and flag dimension of the core at a given index."""
    require_orbit_index(spec, coweight)
    datum = spec.datum
    parabolic = tuple(i for i in datum.simple_indices if dot(datum.roots[i], coweight) == 0)
    dim = sum(1 for i in positive_root_indices(datum) if dot(datum.roots[i], coweight) > 0)
    return CoreData(coweight=coweight, parabolic_simple_roots=parabolic, flag_dimension=dim)


def matsuki_dual(spec: InvolutionSpec, coweight: Coweight) -> tuple[Coweight, CoreData]:
    """The dual orbit carries the same index; the meeting locus is the core.
    Order reversal is built into k_leq/r_leq."""
    require_orbit_index(spec, coweight)
    return coweight, core_data(spec, coweight)


@lru_cache(maxsize=None)
def _real_step_diff(spec: InvolutionSpec, diff: Coweight) -> bool:
    """Decide membership of diff in the non-negative span of the restricted
    coroot generators by bounded search, memoized on the difference."""
    gens = restricted_coroot_generators(spec)
    heights = tuple(height(spec.datum, g) for g in gens)
    if any(h <= 0 for h in heights):
        raise ValidationError("restricted coroot generator with non-positive height")
    target_h = height(spec.datum, diff)
    if target_h < 0:
        return False

    @lru_cache(maxsize=None)
    def search(rest: Coweight, idx: int) -> bool:
        if all(x == 0 for x in rest):
            return True
        if idx == len(gens):
            return False
        g, gh = gens[idx], heights[idx]
        rest_h = height(spec.datum, rest)
        cur = rest
        for c in range(rest_h // gh + 1):
            if search(cur, idx + 1):
                return True
            cur = vec_sub(cur, g)
        return False

    return search(diff, 0)


def real_step_leq(spec: InvolutionSpec, lower: Coweight, upper: Coweight) -> bool:
    """True when upper - lower is a non-negative integer combination of the
    restricted coroot generators; both arguments must be real coweights."""
    for v in (lower, upper):
        if not spec.is_real(v):
            raise ValidationError(f"{v} is not theta-fixed")
    return _real_step_diff(spec, vec_sub(upper, lower))


def _interval_has_strictly_between(spec: InvolutionSpec, lower: Coweight, upper: Coweight) -> bool:
    """Exhaustive betweenness test against the full sub-semigroup: candidates
    live in the simple-coroot coefficient box of upper - lower."""
    from .rootdata import coroot_coordinates

    coords = coroot_coordinates(spec.datum, vec_sub(upper, lower))
    assert coords is not None and all(c.denominator == 1 and c >= 0 for c in coords)
    simples = simple_coroots(spec.datum)
    boxes = [range(int(c) + 1) for c in coords]
    for cs in iter_product(*boxes):
        vec = lower
        for c, b in zip(cs, simples):
            if c:
                vec = vec_add(vec, vec_scale(c, b))
        if vec == lower or vec == upper:
            continue
        if is_orbit_index(spec, vec):
            return True
    return False


def primitive_relations(
    spec: InvolutionSpec, elements: tuple[Coweight, ...]
) -> tuple[tuple[Coweight, Coweight], ...]:
    """Hasse edges of the dominance order on the given orbit indices.

    Primitivity is decided against the unbounded sub-semigroup, not just the
    supplied slice, so edges near the height boundary are still correct.
    """
    edges = []
    elems = tuple(elements)
    for a in elems:
        for b in elems:
            if a == b or not k_leq(spec, a, b):
                continue
            if not _interval_has_strictly_between(spec, a, b):
                edges.append((a, b))
    return tuple(sorted(edges))


def component_count(spec: InvolutionSpec, elements: tuple[Coweight, ...]) -> int:
    """Connected components of the comparability graph on the given indices."""
    parent = {e: e for e in elements}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, a in enumerate(elements):
        for b in elements[i + 1:]:
            if k_leq(spec, a, b) or k_leq(spec, b, a):
                ra, rb = find(a), find(b)
                if ra != rb:
                    parent[ra] = rb
    return len({find(e) for e in elements})


def build_poset_slice(spec: InvolutionSpec, height_bound: int, order: str = "K") -> PosetSlice:
    """Assemble a slice report for one of the two orders; edges point upward
    in the chosen order."""
    from .fundgroup import pi1_model

    if order not in ("K", "R"):
        raise ValidationError("order must be 'K' or 'R'")
    elements = enumerate_orbits(spec, height_bound)
    edges = primitive_relations(spec, elements)
    if order == "R":
        edges = tuple(sorted((b, a) for a, b in edges))
    return PosetSlice(
        spec_name=spec.name,
        height_bound=height_bound,
        order=order,
        elements=elements,
        hasse_edges=edges,
        component_count=component_count(spec, elements),
        image_index=pi1_model(spec).image_index,
    )
