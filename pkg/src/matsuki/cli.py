"""Command-line surface: deterministic, file-based reports.

Exit codes: 0 success, 1 validation error (bad input, unknown name, parse
failure), 2 theorem-violation diagnostic (a structural law failed on the
given data).  All output is plain structured text with a stable field order,
so reports can be diffed against golden files.
"""

from __future__ import annotations

import argparse
import os
import sys

from .errors import TheoremViolationError, ValidationError
from .fundgroup import pi1_model, restricted_coroot_generators
from .loopmatrix import (
    form_action,
    geodesic_representative,
    k_orbit_invariant,
    mat_mul,
    r_orbit_invariant,
    random_k_loop,
    random_polynomial_loop,
    random_real_loop,
    splitting_type,
    stratum_invariant,
)
from .orbitposet import (
    build_poset_slice,
    component_count,
    core_data,
    enumerate_orbits,
    k_leq,
    matsuki_dual,
    primitive_relations,
    r_leq,
    real_step_leq,
)
from .realform import InvolutionSpec, catalog, catalog_names, is_catalog_spec
from .rootdata import dominance_leq, gl_datum, height, is_dominant, vec_add
from .textio import format_involution, parse_involution, parse_matrix

# catalog entries that admit a concrete matrix model, and the form that models them
MATRIX_FORMS = {
    "sl2_split": "sl2_split",
    "sl3_split": "sl3_split",
    "gl1_split": "gl1_split",
    "gl2_split": "gl2_split",
    "gl3_split": "gl3_split",
    "su11": "u11",
    "su21": "u21",
}


def fmt_coweight(vec) -> str:
    return "(" + ",".join(str(x) for x in vec) + ")"


def resolve_spec(source: str) -> InvolutionSpec:
    """A spec source is a catalog name or a path to an involution file."""
    if source in catalog_names():
        return catalog(source).spec
    if os.path.exists(source):
        with open(source, encoding="utf-8") as fh:
            return parse_involution(fh.read())
    raise ValidationError(
        f"{source!r} is neither a catalog name ({', '.join(catalog_names())}) nor a readable file"
    )


def _spec_note_lines(spec: InvolutionSpec) -> list[str]:
    if is_catalog_spec(spec):
        return []
    return ["note: non-catalog involution; lattice-level models are best-effort"]


def _parse_coweight(tokens, rank) -> tuple[int, ...]:
    try:
        vec = tuple(int(t) for t in tokens)
    except ValueError:
        raise ValidationError(f"coweight coordinates must be integers, got {tokens}")
    if len(vec) != rank:
        raise ValidationError(f"expected {rank} coordinates, got {len(vec)}")
    return vec


# ---------------------------------------------------------------------------
# commands


def cmd_catalog(args) -> int:
    names = catalog_names()
    if args.name is not None:
        entry = catalog(args.name)
        print(f"name: {entry.name}")
        print(f"rank: {entry.datum.rank}")
        print(f"expected_k_connected: {str(entry.expected_k_connected).lower()}")
        print("theta:")
        for row in entry.theta:
            print("  " + " ".join(str(x) for x in row))
        print(f"notes: {entry.notes}")
        return 0
    if args.export is not None:
        os.makedirs(args.export, exist_ok=True)
        for name in names:
            path = os.path.join(args.export, f"{name}.involution")
            with open(path, "w", encoding="utf-8") as fh:
                fh.write(format_involution(catalog(name)))
            print(f"wrote: {path}")
        return 0
    for name in names:
        entry = catalog(name)
        theta_kind = (
            "identity"
            if entry.theta == tuple(tuple(int(i == j) for j in range(entry.datum.rank)) for i in range(entry.datum.rank))
            else "non-trivial"
        )
        print(
            f"{entry.name}: rank {entry.datum.rank}, theta {theta_kind}, "
            f"expected_k_connected {str(entry.expected_k_connected).lower()}"
        )
    return 0


def cmd_orbits(args) -> int:
    spec = resolve_spec(args.spec)
    elements = enumerate_orbits(spec, args.height)
    print(f"spec: {spec.name}")
    print(f"height: {args.height}")
    print(f"image_index: {pi1_model(spec).image_index}")
    print(f"components: {component_count(spec, elements)}")
    for line in _spec_note_lines(spec):
        print(line)
    print(f"count: {len(elements)}")
    for lam in elements:
        print(f"orbit: {fmt_coweight(lam)}")
    return 0


def cmd_poset(args) -> int:
    spec = resolve_spec(args.spec)
    slice_ = build_poset_slice(spec, args.height, args.order)
    if args.format == "graph":
        for a, b in slice_.hasse_edges:
            print(f"{fmt_coweight(a)} -> {fmt_coweight(b)}")
        return 0
    print(f"spec: {slice_.spec_name}")
    print(f"height: {slice_.height_bound}")
    print(f"order: {slice_.order}")
    print(f"image_index: {slice_.image_index}")
    print(f"components: {slice_.component_count}")
    for line in _spec_note_lines(spec):
        print(line)
    print(f"elements: {len(slice_.elements)}")
    for lam in slice_.elements:
        print(f"element: {fmt_coweight(lam)}")
    print(f"edges: {len(slice_.hasse_edges)}")
    for a, b in slice_.hasse_edges:
        print(f"edge: {fmt_coweight(a)} -> {fmt_coweight(b)}")
    return 0


def cmd_dual(args) -> int:
    spec = resolve_spec(args.spec)
    lam = _parse_coweight(args.coweight, spec.datum.rank)
    dual, core = matsuki_dual(spec, lam)
    print(f"spec: {spec.name}")
    print(f"orbit: {fmt_coweight(lam)}")
    print(f"dual: {fmt_coweight(dual)}")
    roots = " ".join(str(i) for i in core.parabolic_simple_roots)
    print(f"core_parabolic_simple_roots: {roots if roots else 'none'}")
    print(f"core_flag_dimension: {core.flag_dimension}")
    return 0


def cmd_core(args) -> int:
    spec = resolve_spec(args.spec)
    lam = _parse_coweight(args.coweight, spec.datum.rank)
    core = core_data(spec, lam)
    print(f"spec: {spec.name}")
    print(f"orbit: {fmt_coweight(lam)}")
    roots = " ".join(str(i) for i in core.parabolic_simple_roots)
    print(f"parabolic_simple_roots: {roots if roots else 'none'}")
    print(f"flag_dimension: {core.flag_dimension}")
    return 0


def cmd_pi1(args) -> int:
    spec = resolve_spec(args.spec)
    model = pi1_model(spec)
    print(f"spec: {spec.name}")
    print(f"pi1_group: {model.group_pi1.describe()}")
    print(f"pi1_group_factors: {' '.join(str(f) for f in model.group_pi1.invariant_factors) or 'none'}")
    print(f"pi1_space: {model.space_pi1.describe()}")
    print(f"pi1_space_factors: {' '.join(str(f) for f in model.space_pi1.invariant_factors) or 'none'}")
    gens = " ".join(fmt_coweight(g) for g in model.image_generators)
    print(f"image_generators: {gens if gens else 'none'}")
    restricted = " ".join(fmt_coweight(g) for g in restricted_coroot_generators(spec))
    print(f"restricted_coroot_generators: {restricted if restricted else 'none'}")
    print(f"image_index: {model.image_index}")
    for line in _spec_note_lines(spec):
        print(line)
    return 0


def cmd_invariant(args) -> int:
    with open(args.matrix, encoding="utf-8") as fh:
        g = parse_matrix(fh.read())
    print(f"form: {g.form}")
    print(f"size: {g.n}")
    print(f"cartan: {fmt_coweight(stratum_invariant(g))}")
    print(f"birkhoff: {fmt_coweight(splitting_type(g))}")
    print(f"k_orbit: {fmt_coweight(k_orbit_invariant(g))}")
    print(f"r_orbit: {fmt_coweight(r_orbit_invariant(g))}")
    return 0


# ---------------------------------------------------------------------------
# property-check suites


def _real_dominant_up_to(spec, bound):
    from itertools import product

    out = []
    for vec in product(range(-bound, bound + 1), repeat=spec.datum.rank):
        if spec.is_real(vec) and is_dominant(spec.datum, vec) and 0 <= height(spec.datum, vec) <= bound:
            out.append(vec)
    return out


def _suite_generation(spec) -> str | None:
    """Every fixed vector of the positive cone decomposes into the restricted
    coroot generators (bounded exhaustive check)."""
    from itertools import product as iproduct

    from .rootdata import simple_coroots, vec_scale

    gens = restricted_coroot_generators(spec)
    simples = simple_coroots(spec.datum)
    bound = 10
    heights = [height(spec.datum, b) for b in simples]

    def decomposes(target, pool):
        if all(x == 0 for x in target):
            return True
        if not pool:
            return False
        g, rest = pool[0], pool[1:]
        gh = height(spec.datum, g)
        cur = target
        for _ in range(height(spec.datum, target) // gh + 1):
            if decomposes(cur, rest):
                return True
            cur = tuple(a - b for a, b in zip(cur, g))
        return False

    for coeffs in iproduct(*[range(bound // h + 1) for h in heights]):
        vec = (0,) * spec.datum.rank
        for c, b in zip(coeffs, simples):
            vec = vec_add(vec, vec_scale(c, b))
        if height(spec.datum, vec) > bound or not spec.is_real(vec):
            continue
        if not decomposes(vec, gens):
            return f"{fmt_coweight(vec)} does not decompose into restricted generators"
    return None


def _suite_duality(spec) -> str | None:
    elements = enumerate_orbits(spec, 10)
    for a in elements:
        for b in elements:
            if r_leq(spec, a, b) != k_leq(spec, b, a):
                return f"duality fails at {fmt_coweight(a)}, {fmt_coweight(b)}"
    return None


def _suite_step_order(spec) -> str | None:
    reals = _real_dominant_up_to(spec, 8)
    for a in reals:
        for b in reals:
            if real_step_leq(spec, a, b) != dominance_leq(spec.datum, a, b):
                return f"step order disagrees with dominance at {fmt_coweight(a)}, {fmt_coweight(b)}"
    return None


def _suite_hasse(spec) -> str | None:
    elements = enumerate_orbits(spec, 10)
    edges = set(primitive_relations(spec, elements))
    reach = {a: {a} for a in elements}
    changed = True
    while changed:
        changed = False
        for a, b in edges:
            for targets in reach.values():
                if a in targets and b not in targets:
                    targets.add(b)
                    changed = True
    for a in elements:
        for b in elements:
            if (b in reach[a]) != k_leq(spec, a, b):
                return f"Hasse closure disagrees with the order at {fmt_coweight(a)}, {fmt_coweight(b)}"
    return None


def _suite_chain(spec) -> str | None:
    """For the adjoint rank-one entry the poset is a total chain with index 2."""
    slice_ = build_poset_slice(spec, 12, "K")
    if slice_.image_index != 2:
        return f"image index {slice_.image_index}, expected 2"
    elems = slice_.elements
    for a in elems:
        for b in elems:
            if not (k_leq(spec, a, b) or k_leq(spec, b, a)):
                return f"{fmt_coweight(a)} and {fmt_coweight(b)} are incomparable"
    expected_edges = tuple((elems[i], elems[i + 1]) for i in range(len(elems) - 1))
    if slice_.hasse_edges != expected_edges:
        return "Hasse edges are not the consecutive chain"
    return None


def _suite_matrix(form_name: str, seed: int, loops: int = 12) -> str | None:
    form = form_action(form_name)
    datum = gl_datum(form.n)
    for i in range(loops):
        g = mat_mul(
            mat_mul(random_real_loop(form, seed * 1000 + i), random_k_loop(form, seed * 2000 + i)),
            random_polynomial_loop(form, seed * 3000 + i),
        )
        cartan = stratum_invariant(g)
        birkhoff = splitting_type(g)
        if not dominance_leq(datum, birkhoff, cartan):
            return f"Birkhoff {fmt_coweight(birkhoff)} not below Cartan {fmt_coweight(cartan)} at loop {i}"
        a = random_polynomial_loop(form, seed * 4000 + i)
        b = random_polynomial_loop(form, seed * 5000 + i)
        if stratum_invariant(mat_mul(mat_mul(a, g), b)) != cartan:
            return f"Cartan invariance fails at loop {i}"
        minus = random_polynomial_loop(form, seed * 6000 + i, negative=True)
        if splitting_type(mat_mul(mat_mul(minus, g), b)) != birkhoff:
            return f"Birkhoff invariance fails at loop {i}"
        k_inv = k_orbit_invariant(g)
        if k_orbit_invariant(mat_mul(mat_mul(random_k_loop(form, seed * 7000 + i), g), b)) != k_inv:
            return f"k-orbit invariance fails at loop {i}"
        r_inv = r_orbit_invariant(g)
        if r_orbit_invariant(mat_mul(random_real_loop(form, seed * 8000 + i), g)) != r_inv:
            return f"r-orbit invariance fails at loop {i}"
    if form.family == "split" and form.n > 1:
        if form.special:
            lam = (1,) + (0,) * (form.n - 2) + (-1,)
        else:
            lam = (1, 1) + (0,) * (form.n - 2)
        c = geodesic_representative(form, lam)
        if k_orbit_invariant(c) != lam or r_orbit_invariant(c) != lam:
            return "geodesic duality pairing fails"
    return None


def _run_suites(names, seed: int) -> int:
    failures = 0
    for entry_name in names:
        spec = catalog(entry_name).spec
        suites = [
            ("generation", lambda s=spec: _suite_generation(s)),
            ("duality", lambda s=spec: _suite_duality(s)),
            ("step-order", lambda s=spec: _suite_step_order(s)),
            ("hasse-closure", lambda s=spec: _suite_hasse(s)),
        ]
        if entry_name == "pgl2_so21":
            suites.append(("chain-structure", lambda s=spec: _suite_chain(s)))
        if entry_name in MATRIX_FORMS:
            suites.append(
                ("matrix-invariance", lambda f=MATRIX_FORMS[entry_name]: _suite_matrix(f, seed))
            )
        for suite_name, runner in suites:
            try:
                problem = runner()
            except (ValidationError, TheoremViolationError) as exc:
                problem = str(exc)
            if problem is None:
                print(f"suite {entry_name}/{suite_name}: PASS")
            else:
                failures += 1
                print(f"suite {entry_name}/{suite_name}: FAIL ({problem})")
    if failures:
        print(f"check: {failures} suite(s) failed")
        return 2
    print("check: all suites passed")
    return 0


def cmd_check(args) -> int:
    if args.all:
        return _run_suites(catalog_names(), args.seed)
    if args.spec is None:
        raise ValidationError("check needs a catalog name or --all")
    if args.spec not in catalog_names():
        raise ValidationError(f"check runs on catalog entries; unknown {args.spec!r}")
    return _run_suites([args.spec], args.seed)


# ---------------------------------------------------------------------------
# argument parsing


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="matsuki",
        description="Orbit posets of real and symmetric loop groups on the affine Grassmannian.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("catalog", help="list shipped real forms")
    p.add_argument("--name", help="show one entry in full")
    p.add_argument("--export", metavar="DIR", help="write every entry as an involution file")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("orbits", help="enumerate orbit indices up to a height bound")
    p.add_argument("spec", help="catalog name or involution file")
    p.add_argument("--height", type=int, default=12)
    p.set_defaults(func=cmd_orbits)

    p = sub.add_parser("poset", help="orbit poset slice with Hasse edges")
    p.add_argument("spec", help="catalog name or involution file")
    p.add_argument("--height", type=int, default=12)
    p.add_argument("--format", choices=("report", "graph"), default="report")
    p.add_argument("--order", choices=("K", "R"), default="K")
    p.set_defaults(func=cmd_poset)

    p = sub.add_parser("dual", help="dual orbit and core data of an index")
    p.add_argument("spec")
    p.add_argument("coweight", nargs="+", help="coordinates in the entry's documented basis")
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("core", help="core flag-variety data of an index")
    p.add_argument("spec")
    p.add_argument("coweight", nargs="+")
    p.set_defaults(func=cmd_core)

    p = sub.add_parser("pi1", help="fundamental-group report")
    p.add_argument("spec")
    p.set_defaults(func=cmd_pi1)

    p = sub.add_parser("invariant", help="double-coset invariants of a loop matrix file")
    p.add_argument("matrix", help="path to a matrix file")
    p.set_defaults(func=cmd_invariant)

    p = sub.add_parser("check", help="run the property suites")
    p.add_argument("spec", nargs="?", help="catalog name")
    p.add_argument("--all", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_check)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except TheoremViolationError as exc:
        print(f"theorem violation: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except BrokenPipeError:
        # reader went away (e.g. piped into head); not an error
        try:
            sys.stdout.close()
        except OSError:
            pass
        return 0


def entry_point() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entry_point()
