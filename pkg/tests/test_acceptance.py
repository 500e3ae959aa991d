"""Acceptance suite: one test per criterion, each printing a PASS line.

Every bound and tolerance is pinned here:
- golden chain and exact file match at height 20;
- connected-symmetric-subgroup law at height 20, zero exceptions;
- generation of the fixed positive cone at height 12, exhaustive;
- order reversal on height-20 slices and step-order equivalence at height 12;
- real-coweight criterion at height 12, exhaustive;
- 200 seeded loops per supported matrix form (seed base 7), zero failures;
- geodesic duality pairing at height 8 for the split gl forms;
- the three hand-verified invariant matrices, exact.
"""

import os
from itertools import product

import pytest

from matsuki.cli import main
from matsuki.errors import ValidationError
from matsuki.fundgroup import in_image_semigroup, pi1_model, restricted_coroot_generators
from matsuki.loopmatrix import (
    LaurentPoly,
    diagonal_loop,
    form_action,
    form_names,
    geodesic_representative,
    identity_loop,
    k_orbit_invariant,
    lm_from_rows,
    loops_equal,
    mat_mul,
    r_orbit_invariant,
    random_k_loop,
    random_polynomial_loop,
    random_real_loop,
    splitting_type,
    stratum_invariant,
)
from matsuki.orbitposet import enumerate_orbits, k_leq, primitive_relations, r_leq, real_step_leq
from matsuki.realform import catalog, catalog_names, real_criterion
from matsuki.rootdata import (
    dominance_leq,
    gl_datum,
    height,
    is_dominant,
    simple_coroots,
    vec_add,
    vec_scale,
)

ACCEPTANCE_SEED = 7
GOLDEN_DIR = os.path.join(os.path.dirname(__file__), "golden")


def report(criterion: str) -> None:
    print(f"ACCEPTANCE {criterion}: PASS")


def real_dominant_up_to(spec, bound):
    out = []
    for vec in product(range(-bound, bound + 1), repeat=spec.datum.rank):
        if spec.is_real(vec) and is_dominant(spec.datum, vec) and 0 <= height(spec.datum, vec) <= bound:
            out.append(vec)
    return out


def dominant_up_to(datum, bound):
    out = []
    for vec in product(range(-bound, bound + 1), repeat=datum.rank):
        if is_dominant(datum, vec) and 0 <= height(datum, vec) <= bound:
            out.append(vec)
    return out


# ---------------------------------------------------------------------------
# 1. golden chain


def test_criterion_1_golden_chain(capsys):
    spec = catalog("pgl2_so21").spec
    elements = enumerate_orbits(spec, 20)
    # total order, chain Hasse diagram, disconnected symmetric subgroup
    for a in elements:
        for b in elements:
            assert k_leq(spec, a, b) or k_leq(spec, b, a)
    edges = primitive_relations(spec, elements)
    assert edges == tuple((elements[i], elements[i + 1]) for i in range(len(elements) - 1))
    assert pi1_model(spec).image_index == 2

    rc = main(["poset", "pgl2_so21", "--height", "20"])
    out = capsys.readouterr().out
    assert rc == 0
    with open(os.path.join(GOLDEN_DIR, "pgl2_so21_poset_h20.txt"), encoding="utf-8") as fh:
        assert out == fh.read()
    with capsys.disabled():
        report("1 (golden chain, exact file match)")


# ---------------------------------------------------------------------------
# 2. connected symmetric subgroup law


def test_criterion_2_connected_k_law(capsys):
    checked = 0
    for name in catalog_names():
        entry = catalog(name)
        if not entry.expected_k_connected:
            continue
        for lam in real_dominant_up_to(entry.spec, 20):
            assert in_image_semigroup(entry.spec, lam), (name, lam)
            checked += 1
    assert checked > 0
    with capsys.disabled():
        report(f"2 (connected-K law, {checked} coweights, zero exceptions)")


# ---------------------------------------------------------------------------
# 3. generation of the fixed positive cone


def decomposes(spec, generators, target):
    if all(x == 0 for x in target):
        return True
    if not generators:
        return False
    g, rest = generators[0], generators[1:]
    gh = height(spec.datum, g)
    cur = target
    for _ in range(height(spec.datum, target) // gh + 1):
        if decomposes(spec, rest, cur):
            return True
        cur = tuple(a - b for a, b in zip(cur, g))
    return False


def test_criterion_3_cone_generation(capsys):
    names = [n for n in catalog_names() if catalog(n).datum.rank <= 2] + ["sl3_split"]
    checked = 0
    for name in dict.fromkeys(names):
        spec = catalog(name).spec
        gens = restricted_coroot_generators(spec)
        simples = simple_coroots(spec.datum)
        heights = [height(spec.datum, b) for b in simples]
        for coeffs in product(*[range(12 // h + 1) for h in heights]):
            vec = (0,) * spec.datum.rank
            for c, b in zip(coeffs, simples):
                vec = vec_add(vec, vec_scale(c, b))
            if height(spec.datum, vec) > 12 or not spec.is_real(vec):
                continue
            assert decomposes(spec, gens, vec), (name, vec)
            checked += 1
    with capsys.disabled():
        report(f"3 (cone generation at height 12, {checked} vectors, exhaustive)")


# ---------------------------------------------------------------------------
# 4. order reversal and step-order equivalence


def test_criterion_4_order_reversal(capsys):
    pair_count = 0
    for name in catalog_names():
        spec = catalog(name).spec
        elements = enumerate_orbits(spec, 20)
        for a in elements:
            for b in elements:
                assert r_leq(spec, a, b) == k_leq(spec, b, a), (name, a, b)
        pair_count += len(elements) ** 2
    step_count = 0
    for name in catalog_names():
        spec = catalog(name).spec
        reals = real_dominant_up_to(spec, 12)
        for a in reals:
            for b in reals:
                assert real_step_leq(spec, a, b) == dominance_leq(spec.datum, a, b), (name, a, b)
        step_count += len(reals) ** 2
    with capsys.disabled():
        report(f"4 (order reversal on {pair_count} pairs, step order on {step_count} pairs)")


# ---------------------------------------------------------------------------
# 5. real-coweight criterion


def test_criterion_5_real_criterion(capsys):
    checked = 0
    for name in catalog_names():
        entry = catalog(name)
        for lam in dominant_up_to(entry.datum, 12):
            assert real_criterion(entry.spec, lam) == entry.spec.is_real(lam), (name, lam)
            checked += 1
    with capsys.disabled():
        report(f"5 (real criterion at height 12, {checked} coweights, exhaustive)")


# ---------------------------------------------------------------------------
# 6. matrix-model double-coset laws


@pytest.mark.parametrize("form_name", form_names())
def test_criterion_6_matrix_laws(form_name, capsys):
    form = form_action(form_name)
    datum = gl_datum(form.n)
    base = ACCEPTANCE_SEED
    for i in range(200):
        g = mat_mul(
            mat_mul(
                random_real_loop(form, base * 1000 + i),
                random_k_loop(form, base * 2000 + i),
            ),
            random_polynomial_loop(form, base * 3000 + i),
        )
        cartan = stratum_invariant(g)
        birkhoff = splitting_type(g)
        assert dominance_leq(datum, birkhoff, cartan), (form_name, i)

        a = random_polynomial_loop(form, base * 4000 + i)
        b = random_polynomial_loop(form, base * 5000 + i)
        assert stratum_invariant(mat_mul(mat_mul(a, g), b)) == cartan, (form_name, i)
        minus = random_polynomial_loop(form, base * 6000 + i, negative=True)
        assert splitting_type(mat_mul(mat_mul(minus, g), b)) == birkhoff, (form_name, i)
        k_val = k_orbit_invariant(g)
        k_move = mat_mul(mat_mul(random_k_loop(form, base * 7000 + i), g), b)
        assert k_orbit_invariant(k_move) == k_val, (form_name, i)
        r_val = r_orbit_invariant(g)
        r_move = mat_mul(random_real_loop(form, base * 8000 + i), g)
        assert r_orbit_invariant(r_move) == r_val, (form_name, i)
    with capsys.disabled():
        report(f"6 ({form_name}: 200 loops at seed {ACCEPTANCE_SEED}, zero failures)")


# ---------------------------------------------------------------------------
# 7. duality pairing at geodesics


@pytest.mark.parametrize("entry_name,form_name", [("gl2_split", "gl2_split"), ("gl3_split", "gl3_split")])
def test_criterion_7_geodesic_duality(entry_name, form_name, capsys):
    spec = catalog(entry_name).spec
    form = form_action(form_name)
    members = enumerate_orbits(spec, 8)
    assert members
    for lam in members:
        c = geodesic_representative(form, lam)
        back = mat_mul(form.real_antiinvolution(c), c)
        assert loops_equal(back, diagonal_loop(form_name, lam)), lam
        assert k_orbit_invariant(c) == lam
        assert r_orbit_invariant(c) == lam
    refused = 0
    for lam in real_dominant_up_to(spec, 8):
        if in_image_semigroup(spec, lam):
            continue
        with pytest.raises(ValidationError, match="parity"):
            geodesic_representative(form, lam)
        refused += 1
    assert refused > 0
    with capsys.disabled():
        report(f"7 ({entry_name}: {len(members)} geodesics verified, {refused} refusals)")


# ---------------------------------------------------------------------------
# 8. hand-verified invariant values


def test_criterion_8_hand_verified_matrices(capsys):
    one = LaurentPoly.one()
    zero = LaurentPoly.zero()
    t = LaurentPoly.t_power(1)
    tinv = LaurentPoly.t_power(-1)

    unipotent = lm_from_rows("gl2_split", [[one, tinv], [zero, one]])
    assert stratum_invariant(unipotent) == (1, -1)
    assert splitting_type(unipotent) == (0, 0)

    shear = lm_from_rows("gl2_split", [[t, one], [zero, tinv]])
    assert splitting_type(shear) == (0, 0)
    assert stratum_invariant(shear) == (1, -1)

    diag = diagonal_loop("gl2_split", (2, -1))
    assert stratum_invariant(diag) == (2, -1)

    assert stratum_invariant(identity_loop("gl2_split", 2)) == (0, 0)
    with capsys.disabled():
        report("8 (hand-verified invariant matrices, exact)")
