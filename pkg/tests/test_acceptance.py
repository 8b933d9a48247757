"""Acceptance gate: eleven criteria, one test (one pass/fail line) each.

Every comparison below is exact integer equality unless a tolerance is
named explicitly.  Wall-clock budgets use time.perf_counter and are meant
as generous sanity caps, not benchmarks.
"""

import io
import itertools
import time
from fractions import Fraction

from youngwalls import (
    cli,
    closed_forms,
    poset_lab,
    series_engine,
    tree_child,
    wall_tables,
)
from youngwalls.exact_arith import binomial, double_factorial, factorial

from conftest import TABLE_A, TABLE_B
from test_closed_forms import _a_fixed_k, _b_fixed_k


def _cli(*argv):
    buf = io.StringIO()
    code = cli.main(list(argv), out=buf)
    return code, buf.getvalue()


def test_criterion_01_reference_tables_cell_for_cell():
    t0 = time.perf_counter()
    for seq, table in (("a", TABLE_A), ("b", TABLE_B)):
        code, text = _cli("table", "--seq", seq, "--nmax", "6")
        assert code == 0
        got = [[int(v) for v in line.split(",")] for line in text.splitlines()]
        assert got == [table[n] for n in range(7)], seq
    assert time.perf_counter() - t0 < 1.0


def test_criterion_02_main_identity_to_n30():
    t0 = time.perf_counter()
    for n in range(31):
        for k in range(n + 1):
            lhs = 2 ** (n - k) * wall_tables.a_rec(n, k)
            rhs = factorial(n - k + 1) * wall_tables.b(n, k)
            assert lhs == rhs, (n, k)
    assert time.perf_counter() - t0 < 5.0


def test_criterion_03_omega_bridge_and_vanishing_layers():
    for n in range(15):
        for m in range(15 - n):
            for k in range(m + 2):
                assert wall_tables.omega(n, m, k) == wall_tables.b3(n + m, m, k), (n, m, k)
    for k in range(1, 7):
        for n in range(11):
            assert wall_tables.omega(n, k - 1, k) == 0, (n, k)
    for k in range(1, 9):
        assert closed_forms.omega_init(k - 1, k) == 0, k


def test_criterion_04_semi_closed_forms_match_recurrences():
    for n in range(26):
        for k in range(n + 1):
            assert closed_forms.a_closed(n, k) == wall_tables.a_rec(n, k), ("a", n, k)
            assert closed_forms.b_closed(n, k) == wall_tables.b(n, k), ("b", n, k)
    for k in range(4):
        for n in range(max(k, 2), 13):
            assert _a_fixed_k(n, k) == wall_tables.a_rec(n, k), ("a-fixture", n, k)
            assert _b_fixed_k(n, k) == wall_tables.b(n, k), ("b-fixture", n, k)


def test_criterion_05_lemma_suite_and_alpha_fixtures():
    for n in range(1, 9):
        for k in range(1, 7):
            for i in range(k + 1):
                assert closed_forms.lemma29_check(n, k, i), (n, k, i)
    for n in range(1, 9):
        for k in range(1, 6):
            for s in range(1, n + 1):
                assert closed_forms.lemma28_rhs(n, k, s, wall_tables.omega) == 0, (n, k, s)
    assert closed_forms.alpha(1, 1, 1) == -1
    assert closed_forms.alpha(2, 1, 1) == -1
    assert closed_forms.alpha(2, 1, 2) == 1


def test_criterion_06_generating_function_three_way_agreement():
    t0 = time.perf_counter()
    for k in range(1, 9):
        table, closed, kernel = series_engine.dk_threeway(k, 20)
        assert table == closed == kernel, k
    for k in range(6):
        f, d, b = series_engine.kernel_chain(k, 24)
        res = series_engine.kernel_residual(b, f, d)
        assert all(
            res.entry(j, n) == 0 for j in range(13) for n in range(13)
        ), k
    half, whole = Fraction(1, 2), Fraction(1)
    want = series_engine.neg_pow_series(Fraction(3, 2), 10).scale(half) - (
        series_engine.neg_pow_series(whole, 10).scale(half)
    )
    assert series_engine.dk_closed(1, 10) == want
    assert time.perf_counter() - t0 < 30.0


def test_criterion_07_brute_force_oracles_to_n6():
    t0 = time.perf_counter()
    for n in range(7):
        for k in range(n + 1):
            assert poset_lab.a_brute(n, k) == wall_tables.a_rec(n, k), ("a", n, k)
            assert poset_lab.b_brute(n, k) == wall_tables.b(n, k), ("b", n, k)
    for n in range(7):
        for m in range(n + 1):
            for k in range(m + 1):
                assert poset_lab.b3_brute(n, m, k) == wall_tables.b3(n, m, k), (n, m, k)
    assert time.perf_counter() - t0 < 120.0


def test_criterion_08_extension_family_machinery():
    for n in range(7):
        for k in range(n + 1):
            brute = sum(
                poset_lab.forest_hook_count(poset_lab.build_F(n, idx))
                for idx in itertools.combinations(range(1, n + 1), k)
            )
            assert brute == poset_lab.f_closed(n, k) == poset_lab.f_sum(n, k), (n, k)
    for n in range(1, 6):
        for k in range(n + 1):
            ft_brute = sum(
                poset_lab.forest_hook_count(poset_lab.build_Ftilde(n, idx))
                for idx in itertools.combinations(range(1, n + 1), k)
            )
            assert ft_brute == poset_lab.ftilde(n, k), (n, k)
            u_brute = sum(
                poset_lab.count_linear_extensions(poset_lab.build_U(n, idx))
                for idx in itertools.combinations(range(1, n + 1), k)
            )
            assert u_brute == poset_lab.u_from_b(n, k), (n, k)
    for n in range(9):
        for k in range(n + 1):
            assert poset_lab.b_from_u(n, k) == wall_tables.b(n, k), (n, k)
    for n in range(1, 13):
        for k in range(n + 1):
            decompose = binomial(2 * n + k, n) * poset_lab.f_closed(n, k) - poset_lab.r_sum(n, k)
            assert decompose == wall_tables.b(n, k), ("decomposition", n, k)
            assert poset_lab.b_monster(n, k) == wall_tables.b(n, k), ("monster", n, k)


def test_criterion_09_tree_child_route_agreement():
    for n in range(1, 16):
        for k in range(n):
            want = tree_child.tc(n, k)
            assert tree_child.tc_via_b(n, k) == want, ("via_b", n, k)
            assert tree_child.tc_rec(n, k) == want, ("rec", n, k)
            assert tree_child.tc_sum(n, k) == want, ("sum", n, k)
            assert tree_child.tc_closed(n, k) == want, ("closed", n, k)
            if k >= 1:
                assert tree_child.tc_chain(k, n - k - 1) == want, ("chain", n, k)
    for n in range(2, 16):
        assert tree_child.tc(n, 0) == double_factorial(2 * n - 3), n


def test_criterion_10_asymptotic_error_decreases_and_is_small():
    t0 = time.perf_counter()
    for k in range(4):
        errs = [tree_child.tc_asym_rel_error(n, k) for n in (50, 100, 200)]
        assert errs[0] > errs[1] > errs[2], (k, errs)
        if k == 0:
            assert errs[2] < 1e-3, errs
    assert time.perf_counter() - t0 < 10.0


def test_criterion_11_oeis_crosschecks_agree_offline():
    t0 = time.perf_counter()
    for map_name in sorted(cli.OEIS_MAPS):
        code, text = _cli("crosscheck", "--map", map_name, "--offline")
        assert code == 0, (map_name, text)
        assert "agree" in text, (map_name, text)
    assert time.perf_counter() - t0 < 10.0
