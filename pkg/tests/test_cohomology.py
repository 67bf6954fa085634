from fractions import Fraction

import pytest

from su3kahler.cohomology import (
    BASIC_BETTI,
    DEGENERATE_BETA,
    GENERIC_BETA,
    OMEGA,
    SU3_DERHAM_BETTI,
    Eisenstein,
    basic_model,
    build_derham_model,
    cohomology_of_complex,
    dga_cohomology,
    exact_rank,
    hodge_model,
)

F = Fraction


# --- scalars ------------------------------------------------------------------


def test_eisenstein_cube_root():
    w = OMEGA
    assert w * w * w == 1
    assert w * w + w + 1 == Eisenstein.of(0)
    assert (w / w) == 1
    x = Eisenstein(F(3, 2), F(-1, 3))
    assert x * (Eisenstein.of(1) / x) == 1
    with pytest.raises(ZeroDivisionError):
        Eisenstein.of(1) / Eisenstein.of(0)


def test_exact_rank_small_cases():
    assert exact_rank([]) == 0
    assert exact_rank([[F(0), F(0)]]) == 0
    assert exact_rank([[F(1), F(2)], [F(2), F(4)]]) == 1
    assert exact_rank([[F(1), F(0)], [F(0), F(1)]]) == 2
    w = OMEGA
    assert exact_rank([[w, w * w], [w * w, w]]) == 2
    assert exact_rank([[w, w * w], [w * w, Eisenstein.of(1)]]) == 1  # w^4 = w


# --- the concrete basic algebra ---------------------------------------------------


def test_basic_dimensions():
    alg = basic_model()
    assert tuple(alg.dim(k) for k in range(7)) == BASIC_BETTI
    assert sum(alg.dim(k) for k in range(7)) == 6  # order of the symmetry group


def test_basic_multiplication_laws():
    basic_model().check_multiplication()


def test_basic_table_against_polynomial_oracle():
    """Reduce products of basis monomials modulo the symmetric-polynomial
    ideal with an independent Groebner-basis computation."""
    sympy = pytest.importorskip("sympy")
    x1, x2, x3 = sympy.symbols("x1 x2 x3")
    ideal = [x1 + x2 + x3, x1 * x2 + x1 * x3 + x2 * x3, x1 * x2 * x3]
    gb = sympy.groebner(ideal, x3, x2, x1, order="lex")
    monomials = {
        (0, 0): sympy.Integer(1),
        (2, 0): x1,
        (2, 1): x2,
        (4, 0): x1**2,
        (4, 1): x1 * x2,
        (6, 0): x1**2 * x2,
    }
    basis_order = [(0, 0), (2, 0), (2, 1), (4, 0), (4, 1), (6, 0)]

    def normal_form(p):
        return sympy.expand(gb.reduce(p)[1])

    alg = basic_model()
    for d1, i1 in basis_order:
        for d2, i2 in basis_order:
            product = normal_form(monomials[(d1, i1)] * monomials[(d2, i2)])
            target = d1 + d2
            expected = sympy.Integer(0)
            if target <= 6:
                for k, coeff in enumerate(alg.mul_basis(d1, i1, d2, i2)):
                    expected += sympy.Rational(coeff.numerator, coeff.denominator) * monomials[(target, k)]
            assert sympy.expand(product - expected) == 0, (d1, i1, d2, i2)
    # the distinguished class is x1 - x3 reduced to the basis
    lef = normal_form(x1 - x3)
    alg_lef = alg.lefschetz
    assert sympy.expand(lef - (alg_lef[0] * x1 + alg_lef[1] * x2)) == 0


def test_hard_lefschetz():
    alg = basic_model()
    lef = alg.lefschetz
    square = alg.mul_class(2, lef, 2, lef)
    cube = alg.mul_class(4, square, 2, lef)
    assert cube != (F(0),)  # the cube spans the top degree
    rows = [
        list(alg.mul_class(2, (F(1), F(0)), 2, lef)),
        list(alg.mul_class(2, (F(0), F(1)), 2, lef)),
    ]
    assert exact_rank(rows) == 2  # multiplication deg 2 -> deg 4 is injective


# --- de Rham model ------------------------------------------------------------------


def test_derham_betti():
    assert dga_cohomology(build_derham_model()) == SU3_DERHAM_BETTI


def test_zero_differential_gives_graded_dimensions():
    assert dga_cohomology(build_derham_model((0, 0), (0, 0))) == (1, 2, 3, 4, 4, 4, 3, 2, 1)


def test_negative_control_differs():
    control = dga_cohomology(build_derham_model((1, 0), (1, 0)))
    assert control == (1, 1, 1, 1, 0, 1, 1, 1, 1)
    assert control != SU3_DERHAM_BETTI


def test_derham_independent_of_degree2_basis():
    for dw1, dw2 in [((1, 1), (0, 1)), ((2, 1), (1, 1)), ((0, 3), (-1, 0)), ((1, -2), (2, 1))]:
        assert dga_cohomology(build_derham_model(dw1, dw2)) == SU3_DERHAM_BETTI


def test_euler_characteristics():
    derham = dga_cohomology(build_derham_model())
    assert sum((-1) ** k * b for k, b in enumerate(derham)) == 0
    assert sum((-1) ** k * b for k, b in enumerate(BASIC_BETTI)) == 6


def test_model_rejects_wrong_degree_images():
    from su3kahler.cohomology import DGAModel

    with pytest.raises(ValueError):
        DGAModel(basic_model(), ("w1", "w2"), ((F(1),), (F(0), F(1))))


def test_complex_validation():
    with pytest.raises(ValueError):
        cohomology_of_complex([1, 1], [])
    with pytest.raises(ValueError):
        cohomology_of_complex([1, 1, 1], [[[F(1)]], [[F(1)]]])  # d o d != 0
    assert cohomology_of_complex([1, 1, 1], [[[F(1)]], [[F(0)]]]) == (0, 0, 1)


# --- Hodge model ----------------------------------------------------------------------


def test_hodge_generic_branch():
    table = hodge_model(GENERIC_BETA)
    assert table.branch == (0, 0, 0)


def test_hodge_degenerate_branch():
    table = hodge_model(DEGENERATE_BETA)
    assert table.branch == (1, 2, 1)


def test_degenerate_beta_kills_multiplication_determinant():
    b1, b2 = DEGENERATE_BETA
    assert b1 * b1 - b1 * b2 + b2 * b2 == Eisenstein.of(0)


def test_rational_beta_always_generic():
    # the determinant form is positive definite over the rationals
    for beta in [(1, 0), (0, 1), (2, 3), (F(1, 2), F(-5, 7)), (-1, 1)]:
        assert hodge_model(beta).branch == (0, 0, 0)


def test_hodge_rejects_zero_beta():
    with pytest.raises(ValueError):
        hodge_model((0, 0))


def test_hodge_fixed_entries_and_symmetry():
    for beta in (GENERIC_BETA, DEGENERATE_BETA):
        table = hodge_model(beta)
        e = table.entries
        assert e[(0, 0)] == e[(4, 4)] == 1
        assert e[(0, 1)] == e[(4, 3)] == 1
        assert e[(1, 1)] == e[(3, 3)] == 1
        assert e[(1, 2)] == e[(3, 2)] == 1
        assert e.get((1, 0), 0) == 0 and e.get((3, 4), 0) == 0
        # central duality of the printed diamond (complex dimension 4)
        for (p, q), v in e.items():
            assert e.get((4 - p, 4 - q), 0) == v
        assert table.branch in ((0, 0, 0), (1, 2, 1))


def test_hodge_diamond_rows():
    rows = hodge_model(GENERIC_BETA).diamond()
    assert rows[0] == [1]
    assert rows[1] == [0, 1]
    assert rows[2] == [0, 1, 0]
    assert rows[3] == [0, 0, 1, 0]
    assert rows[8] == [1]
    assert [len(r) for r in rows] == [1, 2, 3, 4, 5, 4, 3, 2, 1]
