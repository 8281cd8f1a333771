import pytest
from hypothesis import given, settings

from surd_strategies import lpp_roots
from surdpath.core import QuadraticSurd, left_child, neg_conjugate, right_child
from surdpath.errors import PreconditionViolated, StepBudgetExceeded
from surdpath.lpp import (
    L,
    R,
    Step,
    check_unique_parentage,
    default_max_steps,
    irrationality_certificate,
    lpp_step,
    palindrome_checks,
    trace_lpp,
)
from surdpath.notation import parse_surd


def brute_lpp(alpha, limit=100_000):
    """Walk by the defining rule: go left exactly when the left child keeps eps=+1."""
    x, nodes, steps = alpha, [alpha], []
    for _ in range(limit):
        lc = left_child(x)
        if lc.eps == 1:
            x, s = lc, "l"
        else:
            x, s = right_child(x), "r"
        nodes.append(x)
        steps.append(s)
        if x == alpha:
            return nodes, steps
    raise AssertionError("no return")


def steps_text(trace):
    return "".join(s.value for s in trace.steps)


class TestKnownPaths:
    def test_sqrt5(self):
        t = trace_lpp(QuadraticSurd(5, 1, 0, 1))
        assert t.c_seq == [0, 1, 2, 1, 0, -1, -2, -1, 0]
        assert t.d_seq == [1, 1, 1, 4, 5, 4, 1, 1, 1]
        assert steps_text(t) == "rrllllrr"
        assert (t.period, t.symmetry_index) == (8, 8)
        assert t.nodes[4] == QuadraticSurd(5, 1, 0, 5)

    def test_sqrt3_plus_1_over_2(self):
        t = trace_lpp(parse_surd("(sqrt(3)+1)/2"))
        assert t.period == 3
        assert t.steps == [L, L, R]

    def test_sqrt2(self):
        t = trace_lpp(parse_surd("sqrt(2)"))
        assert t.period == 4
        assert steps_text(t) == "rllr"

    def test_sqrt34_without_symmetry(self):
        t = trace_lpp(parse_surd("(sqrt(34)+1)/3"))
        assert t.period == 10
        assert t.symmetry_index is None
        labels = [
            "(sqrt(34)+1)/3", "(sqrt(34)+4)/3", "(sqrt(34)-2)/5", "(sqrt(34)+3)/5",
            "(sqrt(34)-2)/6", "(sqrt(34)+4)/6", "(sqrt(34)+1)/11", "(sqrt(34)-2)/10",
            "(sqrt(34)-5)/3", "(sqrt(34)-2)/3", "(sqrt(34)+1)/3",
        ]
        assert [str(x) for x in t.nodes] == labels
        report = palindrome_checks(t)
        assert report.symmetry_index is None and report.steps_palindrome is None
        assert report.passed

    def test_sqrt19_plus_4_over_3(self):
        t = trace_lpp(parse_surd("(sqrt(19)+4)/3"))
        assert (t.period, t.symmetry_index) == (17, 8)
        assert t.nodes[8] == neg_conjugate(t.root)


class TestTrace:
    @settings(max_examples=200)
    @given(lpp_roots(300))
    def test_matches_brute_force(self, alpha):
        t = trace_lpp(alpha)
        nodes, steps = brute_lpp(alpha)
        assert t.nodes == nodes
        assert steps_text(t) == "".join(steps)

    @given(lpp_roots(300))
    def test_invariants(self, alpha):
        t = trace_lpp(alpha)
        N = alpha.N
        assert t.period >= 2
        assert len(t.c_seq) == len(t.d_seq) == t.period + 1
        for c, d in zip(t.c_seq, t.d_seq):
            assert c * c < N and 0 < d <= N - c * c
        # pure periodicity: only the last node repeats the root
        assert t.nodes[-1] == alpha and alpha not in t.nodes[1:-1]
        assert len(set(t.nodes[:-1])) == t.period
        assert check_unique_parentage(t)

    @given(lpp_roots(300))
    def test_cyclic_accessors(self, alpha):
        t = trace_lpp(alpha)
        T = t.period
        for n in range(3 * T):
            assert t.step(n) is t.steps[n % T]
            assert t.node(n) == t.nodes[n % T]

    def test_lpp_step(self):
        x = parse_surd("sqrt(5)")
        assert lpp_step(x) == (R, parse_surd("(sqrt(5)+1)/1"))
        assert lpp_step(parse_surd("(sqrt(5)+2)/1"))[0] is Step.LEFT
        with pytest.raises(PreconditionViolated):
            lpp_step(QuadraticSurd(5, -1, 5, 4))

    @pytest.mark.parametrize("bad", [(5, -1, 5, 4), (5, 1, 3, 1), (19, 1, 5, 2)])
    def test_root_precondition(self, bad):
        with pytest.raises(PreconditionViolated):
            trace_lpp(QuadraticSurd(*bad))

    def test_budget(self):
        with pytest.raises(StepBudgetExceeded) as info:
            trace_lpp(parse_surd("sqrt(5)"), max_steps=7)
        assert info.value.steps == 7
        assert trace_lpp(parse_surd("sqrt(5)"), max_steps=8).period == 8

    def test_budget_env(self, monkeypatch):
        monkeypatch.setenv("SURDPATH_MAX_STEPS", "5")
        assert default_max_steps(1000) == 5
        with pytest.raises(StepBudgetExceeded):
            trace_lpp(parse_surd("sqrt(5)"))
        monkeypatch.delenv("SURDPATH_MAX_STEPS")
        assert default_max_steps(5) == 4 * 5 * 6

    def test_large_radicand(self):
        # values beyond 64-bit range go through the unbounded fallback
        N = 46341**2 + 1
        assert N > 2**30
        t = trace_lpp(QuadraticSurd(N, 1, 0, 1))
        assert t.nodes[-1] == t.root
        assert steps_text(t) == "".join(brute_lpp(t.root, limit=10**6)[1])


class TestCertificateAndSymmetry:
    @given(lpp_roots(300))
    def test_certificate(self, alpha):
        t = trace_lpp(alpha)
        cert = irrationality_certificate(t)
        assert (cert.index_a, cert.index_b) == (0, t.period)
        assert t.nodes[cert.index_a] == t.nodes[cert.index_b] == cert.repeated

    def test_sqrt5_report(self):
        r = palindrome_checks(trace_lpp(parse_surd("sqrt(5)")))
        assert r.symmetry_index == 8
        assert r.steps_palindrome and r.c_antisymmetric and r.d_symmetric
        assert r.middle_index == 4 and r.middle_zero
        assert r.middle_node == parse_surd("sqrt(5)/5")
        assert r.neg_conjugate_closed and r.full_palindrome
        assert r.passed

    def test_odd_symmetry_index(self):
        # m = T = 3 for sqrt(3): no middle node
        t = trace_lpp(parse_surd("sqrt(3)"))
        r = palindrome_checks(t)
        assert t.symmetry_index == 3
        assert r.middle_index is None and r.passed

    @settings(max_examples=200)
    @given(lpp_roots(300))
    def test_symmetry_properties(self, alpha):
        t = trace_lpp(alpha)
        r = palindrome_checks(t)
        assert r.passed
        m = t.symmetry_index
        if m is not None:
            assert t.nodes[m] == neg_conjugate(alpha)
        if alpha.c == 0 and alpha.N > alpha.d**2:
            assert t.steps[0] is R
            assert m == t.period
            assert r.full_palindrome
