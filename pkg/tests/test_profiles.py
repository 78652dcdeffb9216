"""Compressed profiles against the literal oracle, and the published tables."""

import pytest

from fibquiver.errors import NotSymmetric, OracleCapExceeded
from fibquiver.fibcore import fib
from fibquiver.profiles import (
    BiRadialProfile,
    RadialProfile,
    class_size,
    class_vertices,
    compress_biradial,
    compress_radial,
    compress_signed_classes,
    expand_biradial,
    expand_radial,
    partition_report,
    radial_profile,
    radial_sums,
    radial_start,
    radial_step,
    radial_table,
    shell_size,
    stencil_coeffs,
    u_odd_phase,
    u_profile,
    u_sums,
    u_start,
    u_step,
    u_table,
)
from fibquiver.reflect import TreeVector, edge_unit, r_vec, s_vec, unit
from fibquiver.tree import BASE

# Signed-class table rows 0..4 and their weighted sums, as published.
U_ROWS = [
    {-1: 1, 0: 1},
    {0: 1, 1: 1, 2: 1},
    {-2: 1, -1: 1, 0: 4, 1: 2, 2: 3, 3: 1, 4: 1},
    {-4: 1, -3: 1, -2: 6, -1: 5, 0: 17, 1: 8, 2: 13, 3: 4, 4: 5, 5: 1, 6: 1},
    {-6: 1, -5: 1, -4: 8, -3: 7, -2: 32, -1: 24, 0: 77, 1: 35, 2: 60, 3: 19,
     4: 26, 5: 6, 6: 7, 7: 1, 8: 1},
]
U_SUMS = [(1, 1), (2, 5), (13, 34), (89, 233), (610, 1597)]


def test_shell_and_class_sizes():
    assert [shell_size(d) for d in range(5)] == [1, 3, 6, 12, 24]
    assert class_size(0) == 1 and class_size(3) == 8
    assert class_size(-1) == 1 and class_size(-3) == 4
    assert len(class_vertices(2)) == 4
    assert class_vertices(-1) == ["0"]


def test_radial_step_examples():
    p0 = radial_start()
    assert p0.values == (1,)
    p1 = radial_step(p0)
    assert p1.values == (1, 1)
    p2 = radial_step(p1)
    assert p2.values == (2, 1, 1)
    # The next row is pinned by the oracle, not guessed.
    p3 = radial_step(p2)
    assert p3.values == tuple(compress_radial(s_vec(3)).values)
    assert p3.values == (2, 3, 1, 1)


def test_radial_profile_validation():
    with pytest.raises(ValueError):
        RadialProfile(1, (1,))
    with pytest.raises(ValueError):
        RadialProfile(1, (1, 2))  # outermost class must be 1
    with pytest.raises(ValueError):
        RadialProfile(1, (-1, 1))


def test_radial_sums_examples():
    assert radial_sums(RadialProfile(1, (1, 1))) == (1, 3)
    assert radial_sums(RadialProfile(0, (1,))) == (0, 1)
    assert radial_sums(RadialProfile(2, (2, 1, 1))) == (3, 8)


def test_radial_table_matches_oracle():
    rows = radial_table(8)
    for t, row in enumerate(rows):
        assert expand_radial(row).equals(s_vec(t))
        assert compress_radial(s_vec(t)) == row


def test_u_step_published_rows():
    rows = u_table(4)
    for want, row in zip(U_ROWS, rows):
        assert row.as_dict() == want
    assert [u_sums(r) for r in rows] == U_SUMS
    assert rows[4].value(0) == 77


def test_u_table_shortest():
    (row,) = u_table(0)
    assert row.as_dict() == {-1: 1, 0: 1}


def test_u_sums_examples():
    assert u_sums(u_profile(2)) == (13, 34)
    assert u_sums(u_start()) == (1, 1)
    assert u_sums(u_profile(4)) == (610, 1597)


def test_u_sums_match_fib_at_scale():
    u = u_start()
    p = radial_start()
    for t in range(301):
        assert u_sums(u) == (fib(4 * t - 1), fib(4 * t + 1)), t
        assert radial_sums(p) == (fib(2 * t), fib(2 * t + 2)), t
        assert all(v >= 0 for v in u.values)
        assert all(v >= 0 for v in p.values)
        u, p = u_step(u), radial_step(p)


def test_support_grows_by_at_most_two():
    u = u_start()
    for _ in range(40):
        nxt = u_step(u)
        assert nxt.lo >= u.lo - 2 and nxt.hi <= u.hi + 2
        u = nxt


def test_stencil_matches_cartan_rows():
    # Doubly-laced line with one simple bond between classes -1 and 0.
    assert stencil_coeffs(-3) == (2, -1, 1)
    assert stencil_coeffs(5) == (1, -1, 2)
    assert stencil_coeffs(0) == (1, -1, 2)
    assert stencil_coeffs(-1) == (2, -1, 1)
    # Simple lacing both ways across the marked edge: coefficient 1 on the
    # neighbor across it.
    assert stencil_coeffs(0)[0] == 1  # class 0 reads class -1 once
    assert stencil_coeffs(-1)[2] == 1  # class -1 reads class 0 once


def _cartan_abs(i, j):
    # Off-diagonal magnitude |a(i, j)| for adjacent classes on the line.
    assert abs(i - j) == 1
    if i >= 0:
        return 1 if j == i - 1 else 2
    return 1 if j == i + 1 else 2


def test_u_step_equals_cartan_reflection_route():
    # Independent route: generic simple reflections new[i] = -u[i] +
    # sum |a(i,j)| u[j], odd sites first, then even sites.
    u = u_start()
    for _ in range(12):
        lo, hi = u.lo - 2, u.hi + 2
        mixed = {s: u.value(s) for s in range(lo, hi + 1)}
        for s in range(lo, hi + 1):
            if s % 2 != 0:
                mixed[s] = -u.value(s) + _cartan_abs(s, s - 1) * u.value(s - 1) \
                    + _cartan_abs(s, s + 1) * u.value(s + 1)
        final = dict(mixed)
        for s in range(lo, hi + 1):
            if s % 2 == 0:
                final[s] = -u.value(s) + _cartan_abs(s, s - 1) * mixed.get(s - 1, 0) \
                    + _cartan_abs(s, s + 1) * mixed.get(s + 1, 0)
        nxt = u_step(u)
        assert {s: v for s, v in final.items() if v} == nxt.as_dict()
        u = nxt


def test_odd_phase_state_is_the_next_odd_wave_vector():
    # Observed relation, recorded as a regression: the half-stepped state
    # (fresh odd classes over stale even ones) compresses r after 2t+1
    # waves, with no re-indexing.
    for t in range(4):
        mixed = u_odd_phase(u_profile(t))
        assert mixed == compress_signed_classes(r_vec(2 * t + 1))


def test_partition_report_examples():
    rep = partition_report(2)
    assert [tuple(x) for x in rep.terms_minus] == [(-1, 1, 1, 1), (1, 2, 2, 4), (3, 8, 1, 8)]
    assert rep.target_minus == 13
    assert sum(x.product for x in rep.terms_minus) == 13
    assert partition_report(0).target_minus == 1
    assert partition_report(3).target_plus == 233
    assert sum(x.product for x in partition_report(3).terms_plus) == 233


def test_partition_terms_use_class_sizes():
    rep = partition_report(4)
    for term in rep.terms_minus + rep.terms_plus:
        assert term.weight == class_size(term.cls)
        assert term.product == term.weight * term.value


def test_expand_examples():
    assert expand_radial(radial_start()).equals(unit(BASE))
    assert expand_biradial(u_start()).equals(edge_unit(BASE, "0"))
    assert expand_radial(radial_profile(2)).equals(s_vec(2))


def test_compress_examples():
    assert compress_radial(s_vec(2)).values == (2, 1, 1)
    assert compress_biradial(r_vec(4)) == u_profile(2)
    with pytest.raises(NotSymmetric) as exc:
        compress_radial(unit(BASE).add(unit("0")))
    assert exc.value.cls == 1


def test_biradial_round_trip():
    for tt in range(5):
        prof = u_profile(tt)
        assert compress_biradial(expand_biradial(prof)) == prof
        vec = r_vec(2 * tt)
        assert expand_biradial(compress_biradial(vec)).equals(vec)


def test_compress_rejects_odd_wave_vectors():
    with pytest.raises(ValueError):
        compress_biradial(r_vec(3))


def test_compress_zero_vector():
    with pytest.raises(ValueError):
        compress_radial(TreeVector({}))


def test_expand_cap():
    with pytest.raises(OracleCapExceeded):
        expand_radial(radial_profile(20))
    with pytest.raises(OracleCapExceeded):
        expand_biradial(u_profile(8))  # rim class 16 is past the default cap


def test_biradial_validation():
    with pytest.raises(ValueError):
        BiRadialProfile(0, -1, (1, 0))  # untrimmed
    with pytest.raises(ValueError):
        BiRadialProfile(0, -4, (1, 1, 1, 1, 1))  # support outside bounds
    prof = u_profile(3)
    assert prof.value(prof.lo - 1) == 0 and prof.value(prof.hi + 1) == 0
    assert list(prof.support()) == list(range(prof.lo, prof.hi + 1))
