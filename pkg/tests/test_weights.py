import itertools
import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from su3kahler.conegeom import MembershipStatus, vadd, vscale, vsub
from su3kahler.weights import (
    DerivedConeData,
    WeightSystem,
    check_interpolation_path,
    check_level_set_conditions,
    check_cone_condition,
    cone_data,
    default_interpolation_times,
    derive,
    enumerate_admissible_systems,
    interpolation_spec,
    positive_combination,
    cone_condition_holds,
    weights_from_cone_data,
)

F = Fraction

# regression values from the exhaustive searches (re-derived in
# test_enumerate_bound1_against_slow_oracle for bound 1)
BOUND1_COUNT = 24
BOUND2_COUNT = 2856


# --- weight systems and derivation ------------------------------------------


def test_weight_system_validates_sums():
    with pytest.raises(ValueError):
        WeightSystem(((1, 0), (0, 0), (0, 0)), ((0, 0),) * 3)
    with pytest.raises(ValueError):
        WeightSystem(((0, 0),) * 3, ((1, 0), (0, 1), (0, 0)))


def test_weight_system_json_round_trip(orbifold_ws):
    blob = json.dumps(orbifold_ws.to_json())
    assert WeightSystem.from_json(json.loads(blob)) == orbifold_ws


def test_derive_scaled_example(orbifold_ws):
    d = derive(orbifold_ws)
    assert d.a == ((3, 0), (3, 0), (6, -3))
    assert d.b == ((0, 3), (0, 3), (-3, 6))
    assert d.c == (3, 3)


def test_derive_standard_torus(standard_ws):
    d = derive(standard_ws)
    assert d.a == ((-1, 0), (-1, 0), (-1, 0))
    assert d.b == ((-1, -1), (-1, -1), (-1, -1))
    assert d.c == (-2, -1)


def test_derive_zero_weights():
    d = derive(WeightSystem(((0, 0),) * 3, ((0, 0),) * 3))
    assert d.a == ((0, 0),) * 3 and d.b == ((0, 0),) * 3 and d.c == (0, 0)
    assert not cone_condition_holds(d)


def test_cone_data_requires_constant_sum():
    with pytest.raises(ValueError):
        cone_data([(1, 0), (1, 0), (1, 0)], [(0, 1), (0, 1), (1, 1)])


# --- separating cone condition -----------------------------------------------


def test_cone_condition_orbifold_example(orbifold_data):
    report = check_cone_condition(orbifold_data)
    assert report.holds
    assert all(not m.member for m in report.a_pairs.values())
    assert all(not m.member for m in report.b_pairs.values())
    assert all(m.member for m in report.mixed_pairs.values())
    assert len(report.a_pairs) == len(report.b_pairs) == len(report.mixed_pairs) == 9


def test_cone_condition_standard_torus(standard_ws):
    assert check_cone_condition(derive(standard_ws)).holds


def test_cone_condition_zero_data_fails():
    d = DerivedConeData(((0, 0),) * 3, ((0, 0),) * 3, (0, 0))
    assert not check_cone_condition(d).holds


def test_level_set_conditions_orbifold_example(orbifold_data):
    conditions = check_level_set_conditions(orbifold_data)
    assert conditions.nonempty and conditions.regular and conditions.compact
    assert conditions.nonempty_witness == (1, 2, F(1), F(1))
    assert conditions.apex_functional == (F(1), F(1))


def test_regularity_fails_on_dependent_pair():
    d = cone_data([(1, 0), (1, 0), (1, 0)], [(1, 0), (1, 0), (1, 0)])
    assert not check_level_set_conditions(d).regular


def test_compactness_fails_on_zero_generators():
    d = DerivedConeData(((0, 0),) * 3, ((0, 0),) * 3, (0, 0))
    conditions = check_level_set_conditions(d)
    assert not conditions.compact and conditions.apex_functional is None


def test_positive_combination_branches():
    assert positive_combination((1, 1), (1, 0), (0, 1)) == (F(1), F(1))
    assert positive_combination((1, 1), (1, 0), (2, -1)) is None  # needs negative
    # parallel, aligned: split the coefficient
    a, b = positive_combination((6, 0), (1, 0), (2, 0))
    assert a > 0 and b > 0 and vadd(vscale(a, (1, 0)), vscale(b, (2, 0))) == (F(6), F(0))
    # parallel, opposite: always solvable on the line
    a, b = positive_combination((-5, 0), (1, 0), (-2, 0))
    assert a > 0 and b > 0 and vadd(vscale(a, (1, 0)), vscale(b, (-2, 0))) == (F(-5), F(0))
    assert positive_combination((0, 1), (1, 0), (2, 0)) is None


# --- solving for weights -------------------------------------------------------


def test_generate_worked_example(orbifold_data):
    sol = weights_from_cone_data(orbifold_data.a, orbifold_data.b)
    assert sol.wl_rational[0] == (F(-1, 3), F(1, 3))
    assert sol.wl_rational[2] == (F(2, 3), F(-2, 3))
    assert sol.wr_rational[1] == (F(5, 3), F(-5, 3))
    assert sol.scale == 3
    assert sol.system.wl == ((-1, 1), (-1, 1), (2, -2))
    assert sol.system.wr == ((-4, 1), (5, -5), (-1, 4))


def test_generate_standard_torus():
    sol = weights_from_cone_data([(-1, 0)] * 3, [(-1, -1)] * 3)
    assert sol.scale == 1
    assert sol.system.wl == ((0, 0),) * 3
    assert sol.system.wr == ((1, 0), (0, 1), (-1, -1))


def test_generate_zero_data():
    sol = weights_from_cone_data([(0, 0)] * 3, [(0, 0)] * 3)
    assert sol.scale == 1
    assert sol.system.wl == ((0, 0),) * 3 and sol.system.wr == ((0, 0),) * 3


def test_generate_rejects_inconsistent_sums():
    with pytest.raises(ValueError):
        weights_from_cone_data([(1, 0), (1, 0), (1, 0)], [(0, 1), (0, 1), (0, 2)])


small_vec = st.tuples(st.integers(-6, 6), st.integers(-6, 6))


@given(st.tuples(small_vec, small_vec, small_vec), small_vec)
@settings(max_examples=200)
def test_generate_round_trip_exact(a_vectors, c):
    b_vectors = [vsub(c, a) for a in a_vectors]
    sol = weights_from_cone_data(a_vectors, b_vectors)
    d = derive(sol.system)
    s = sol.scale
    assert d.a == tuple(vscale(s, a) for a in a_vectors)
    assert d.b == tuple(vscale(s, b) for b in b_vectors)
    assert d.c == vscale(s, c)


# --- interpolation path -----------------------------------------------------


def test_interpolation_worked_example(orbifold_data):
    spec = interpolation_spec(orbifold_data, [F(0), F(1, 4), F(1, 2), F(3, 4), F(1)])
    assert spec.a == 1 and spec.b == 1
    assert check_interpolation_path(orbifold_data, spec)


def test_interpolation_endpoints(orbifold_data):
    assert check_interpolation_path(orbifold_data, interpolation_spec(orbifold_data, [F(1)]))
    assert check_interpolation_path(orbifold_data, interpolation_spec(orbifold_data, [F(0)]))


def test_interpolation_requires_interior():
    # C on the ray of A_1: not in the interior of cone(A_1, B_1)
    d = cone_data([(1, 0), (0, 1), (1, 1)], [(1, 0), (2, -1), (1, -1)])
    with pytest.raises(ValueError):
        interpolation_spec(d)


def test_interpolation_rejects_bad_times(orbifold_data):
    with pytest.raises(ValueError):
        interpolation_spec(orbifold_data, [F(3, 2)])


def test_default_times():
    ts = default_interpolation_times()
    assert ts[0] == 0 and ts[-1] == 1 and len(ts) == 9


# --- enumeration -------------------------------------------------------------


def test_enumerate_bound0_empty():
    assert list(enumerate_admissible_systems(0)) == []


def test_enumerate_rejects_negative():
    with pytest.raises(ValueError):
        list(enumerate_admissible_systems(-1))


def test_enumerate_bound1(bound1_systems, standard_ws):
    assert len(bound1_systems) == BOUND1_COUNT
    base = ((1, 0), (0, 1), (-1, -1))
    for perm in itertools.permutations(base):
        assert WeightSystem(((0, 0),) * 3, perm) in bound1_systems
    assert standard_ws in bound1_systems


def test_enumerate_bound1_against_slow_oracle(bound1_systems):
    """Re-filter the whole bound-1 space with the evidence-building checker."""
    rng = range(-1, 2)
    found = []
    for x1, y1, x2, y2 in itertools.product(rng, rng, rng, rng):
        if abs(x1 + x2) > 1 or abs(y1 + y2) > 1:
            continue
        for u1, v1, u2, v2 in itertools.product(rng, rng, rng, rng):
            if abs(u1 + u2) > 1 or abs(v1 + v2) > 1:
                continue
            ws = WeightSystem(
                ((x1, y1), (x2, y2), (-x1 - x2, -y1 - y2)),
                ((u1, v1), (u2, v2), (-u1 - u2, -v1 - v2)),
            )
            if check_cone_condition(derive(ws)).holds:
                found.append(ws)
    assert found == bound1_systems


def test_enumerate_is_sorted(bound1_systems):
    assert bound1_systems == sorted(bound1_systems)


def test_enumerate_partitions_merge(bound1_systems):
    merged = []
    for k in range(3):
        merged.extend(enumerate_admissible_systems(1, part=(k, 3)))
    assert sorted(merged) == bound1_systems


def test_enumerate_bound2_count(bound2_systems):
    assert len(bound2_systems) == BOUND2_COUNT
    assert bound2_systems == sorted(bound2_systems)


def test_enumerate_bound2_has_nontrivial_left(bound2_systems):
    assert any(ws.wl != ((0, 0),) * 3 for ws in bound2_systems)


# --- properties over enumerated systems ----------------------------------------


def test_condition_implies_level_set_conditions_bound1(bound1_systems):
    for ws in bound1_systems:
        report = check_cone_condition(derive(ws))
        assert report.holds and report.level_set.all_hold


def test_fast_path_agrees_with_evidence(bound2_systems):
    sample = bound2_systems[:: max(1, len(bound2_systems) // 100)]
    for ws in sample:
        d = derive(ws)
        assert cone_condition_holds(d) == check_cone_condition(d).holds


@given(st.tuples(small_vec, small_vec, small_vec), small_vec)
@settings(max_examples=300)
def test_fast_path_agrees_on_random_data(a_vectors, c):
    d = DerivedConeData(a_vectors, tuple(vsub(c, a) for a in a_vectors), c)
    assert cone_condition_holds(d) == check_cone_condition(d).holds


def test_cone_condition_symmetries(bound1_systems):
    for ws in bound1_systems:
        d = derive(ws)
        for perm in itertools.permutations(range(3)):
            permuted = DerivedConeData(
                tuple(d.a[p] for p in perm), tuple(d.b[p] for p in perm), d.c
            )
            assert cone_condition_holds(permuted)
        assert cone_condition_holds(DerivedConeData(d.b, d.a, d.c))


def test_mixed_membership_is_interior_under_condition(bound1_systems):
    """Ray exclusion forces strictly positive mixed coefficients."""
    for ws in bound1_systems:
        report = check_cone_condition(derive(ws))
        for m in report.mixed_pairs.values():
            assert m.status is MembershipStatus.INTERIOR
