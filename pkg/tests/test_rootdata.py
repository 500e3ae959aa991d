"""Root-datum arithmetic: axioms, dominance, Weyl elements, Smith normal form."""

from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from matsuki.errors import ValidationError
from matsuki.rootdata import (
    RootDatum,
    dominance_leq,
    dominant_representative,
    gl_datum,
    height,
    identity_matrix,
    is_dominant,
    kernel_basis,
    mat_mul,
    mat_vec,
    pgl2_datum,
    pi1_of_group,
    positive_coroots,
    positive_root_indices,
    quotient_group,
    simple_coroots,
    sl2_datum,
    sl2xsl2_datum,
    sl3_datum,
    smith_normal_form,
    two_rho,
    validate_root_datum,
    vec_add,
    vec_scale,
    vec_sub,
)

ALL_DATA = [sl2_datum(), pgl2_datum(), sl3_datum(), sl2xsl2_datum(), gl_datum(2), gl_datum(3)]


def weyl_orbit(datum, coweight):
    """Brute-force Weyl orbit by closing under simple reflections."""
    seen = {coweight}
    frontier = [coweight]
    while frontier:
        x = frontier.pop()
        for i in datum.simple_indices:
            y = datum.reflect(i, x)
            if y not in seen:
                seen.add(y)
                frontier.append(y)
    return seen


def weyl_group_matrices(datum):
    """All Weyl group elements as matrices, by closure under generators."""
    gens = [datum.reflection_matrix(i) for i in datum.simple_indices]
    seen = {identity_matrix(datum.rank)}
    frontier = list(seen)
    while frontier:
        w = frontier.pop()
        for g in gens:
            x = mat_mul(g, w)
            if x not in seen:
                seen.add(x)
                frontier.append(x)
    return seen


# ---------------------------------------------------------------------------
# validation


def test_sl2_datum_valid():
    assert validate_root_datum(sl2_datum()) == []


def test_pairing_violation_reported():
    bad = RootDatum(rank=1, roots=((3,), (-3,)), coroots=((1,), (-1,)), simple_indices=(0,))
    problems = validate_root_datum(bad)
    assert any("pairing" in p for p in problems)


def test_a2_datum_valid_and_reflections_permute_six_coroots():
    datum = sl3_datum()
    assert validate_root_datum(datum) == []
    coroots = set(datum.coroots)
    assert len(coroots) == 6
    for i in datum.simple_indices:
        assert {datum.reflect(i, b) for b in coroots} == coroots


def test_reflection_closure_violation_reported():
    # drop the negative roots: reflections leave the set
    bad = RootDatum(rank=1, roots=((2,),), coroots=((1,),), simple_indices=(0,))
    problems = validate_root_datum(bad)
    assert any("permute" in p for p in problems)


@pytest.mark.parametrize("datum", ALL_DATA, ids=lambda d: d.name)
def test_catalog_data_valid(datum):
    assert validate_root_datum(datum) == []


def test_positive_roots_of_sl3():
    datum = sl3_datum()
    pos = {datum.roots[i] for i in positive_root_indices(datum)}
    assert pos == {(2, -1), (-1, 2), (1, 1)}
    assert set(positive_coroots(datum)) == {(1, 0), (0, 1), (1, 1)}


# ---------------------------------------------------------------------------
# dominant representatives


def test_sl2_dominant_representative_of_negative_coroot():
    datum = sl2_datum()
    rep, word = dominant_representative(datum, (-1,))
    assert rep == (1,)
    assert word == (0,)


@pytest.mark.parametrize("datum", ALL_DATA, ids=lambda d: d.name)
def test_dominant_input_returns_empty_word(datum):
    lam = (0,) * datum.rank
    assert dominant_representative(datum, lam) == (lam, ())


def test_a2_dominant_representative_matches_brute_force():
    datum = sl3_datum()
    lam = (-1, 0)  # minus the first simple coroot
    rep, word = dominant_representative(datum, lam)
    orbit = weyl_orbit(datum, lam)
    dominants = {x for x in orbit if is_dominant(datum, x)}
    assert dominants == {rep}
    assert rep == (1, 1)
    # replay the word
    x = lam
    for i in word:
        x = datum.reflect(i, x)
    assert x == rep


def test_dominant_representative_idempotent():
    datum = sl3_datum()
    for vec in product(range(-3, 4), repeat=2):
        rep, _ = dominant_representative(datum, vec)
        again, word = dominant_representative(datum, rep)
        assert again == rep and word == ()


# ---------------------------------------------------------------------------
# dominance order


def test_dominance_examples():
    assert dominance_leq(sl2_datum(), (0,), (2,))
    assert not dominance_leq(pgl2_datum(), (0,), (1,))  # coefficient 1/2
    assert dominance_leq(sl3_datum(), (0, 0), (1, 1))


def test_dominance_outside_coroot_span_is_false():
    datum = gl_datum(2)
    assert not dominance_leq(datum, (0, 0), (1, 1))  # central direction
    assert dominance_leq(datum, (0, 0), (1, -1))


def brute_force_dominance(datum, lower, upper, bound=12):
    diff = vec_sub(upper, lower)
    simples = simple_coroots(datum)
    for coeffs in product(range(bound + 1), repeat=len(simples)):
        total = (0,) * datum.rank
        for c, b in zip(coeffs, simples):
            total = vec_add(total, vec_scale(c, b))
        if total == diff:
            return True
    return False


@settings(max_examples=60, deadline=None)
@given(st.integers(-4, 4), st.integers(-4, 4), st.integers(-4, 4), st.integers(-4, 4))
def test_dominance_agrees_with_brute_force_rank2(a, b, c, d):
    for datum in (sl3_datum(), sl2xsl2_datum(), gl_datum(2)):
        assert dominance_leq(datum, (a, b), (c, d)) == brute_force_dominance(datum, (a, b), (c, d))


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_dominance_partial_order_properties(data):
    datum = data.draw(st.sampled_from([sl3_datum(), gl_datum(3)]))
    coords = st.integers(-5, 5)
    vec = st.tuples(*[coords] * datum.rank)
    x, y, z = data.draw(vec), data.draw(vec), data.draw(vec)
    assert dominance_leq(datum, x, x)
    if dominance_leq(datum, x, y) and dominance_leq(datum, y, z):
        assert dominance_leq(datum, x, z)
    if dominance_leq(datum, x, y) and dominance_leq(datum, y, x):
        assert x == y


# ---------------------------------------------------------------------------
# Smith normal form


def test_snf_trivial_cases():
    _, d, _ = smith_normal_form(((2,),))
    assert d == ((2,),)
    _, d, _ = smith_normal_form(((1, 0), (0, 0)))
    assert d == ((1, 0), (0, 0))


def test_snf_divisibility_example():
    m = ((2, 4), (6, 8))
    u, d, v = smith_normal_form(m)
    assert d == ((2, 0), (0, 4))  # gcd of entries, then |det|/gcd
    assert mat_mul(mat_mul(u, m), v) == d


def int_matrices(rows, cols):
    return st.lists(
        st.lists(st.integers(-9, 9), min_size=cols, max_size=cols),
        min_size=rows,
        max_size=rows,
    ).map(lambda m: tuple(map(tuple, m)))


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 3), st.integers(1, 3), st.data())
def test_snf_reconstructs_and_chains(rows, cols, data):
    m = data.draw(int_matrices(rows, cols))
    u, d, v = smith_normal_form(m)
    assert mat_mul(mat_mul(u, m), v) == d
    diag = [d[i][i] for i in range(min(rows, cols))]
    for i in range(rows):
        for j in range(cols):
            if i != j:
                assert d[i][j] == 0
    nonzero = [x for x in diag if x]
    for a, b in zip(nonzero, nonzero[1:]):
        assert b % a == 0
    # zeros trail the chain
    if 0 in diag:
        assert all(x == 0 for x in diag[diag.index(0):])


def test_snf_deterministic():
    m = ((2, 4), (6, 8))
    assert smith_normal_form(m) == smith_normal_form(m)


def test_kernel_basis_of_swap_difference():
    # theta - id for the swap involution on Z^2
    assert kernel_basis(((-1, 1), (1, -1))) == ((1, 1),)


# ---------------------------------------------------------------------------
# fundamental group of the ambient group


def test_pi1_examples():
    assert pi1_of_group(sl2_datum()).is_trivial()
    g = pi1_of_group(pgl2_datum())
    assert g.invariant_factors == (2,)
    free = pi1_of_group(gl_datum(1))
    assert free.invariant_factors == (0,)
    assert free.describe() == "Z"


def test_quotient_group_classes():
    group = quotient_group(1, ((2,),))
    assert group.image((1,)) != group.image((0,))
    assert group.image((2,)) == group.image((0,))
    assert group.order() == 2


# ---------------------------------------------------------------------------
# longest Weyl elements


def test_longest_element_empty_and_sl2():
    datum = sl2_datum()
    from matsuki.rootdata import weyl_longest_element

    assert weyl_longest_element(datum, ()) == identity_matrix(1)
    assert weyl_longest_element(datum, (0,)) == ((-1,),)


def test_longest_element_a2_against_brute_force():
    from matsuki.rootdata import weyl_longest_element

    datum = sl3_datum()
    w0 = weyl_longest_element(datum, (0, 1))
    assert mat_vec(w0, (1, 0)) == (0, -1)  # first simple coroot to minus the second
    assert mat_mul(w0, w0) == identity_matrix(2)
    # brute force: the element with the maximal number of inversions
    pos = [datum.coroots[i] for i in positive_root_indices(datum)]

    def inversions(w):
        return sum(1 for b in pos if tuple(-x for x in mat_vec(w, b)) in pos)

    best = max(weyl_group_matrices(datum), key=inversions)
    assert inversions(best) == len(pos)
    assert best == w0


def test_height_functional():
    assert two_rho(sl2_datum()) == (2,)
    assert height(sl2_datum(), (1,)) == 2
    assert two_rho(pgl2_datum()) == (1,)
    assert two_rho(sl3_datum()) == (2, 2)
    assert two_rho(gl_datum(3)) == (2, 0, -2)


def test_solve_rational_rejects_dependent_columns():
    from matsuki.rootdata import solve_rational

    with pytest.raises(ValidationError):
        solve_rational(((1, 0), (2, 0)), (1, 0))
