"""The left-positive path (LPP) through the Calkin-Wilf tree of a surd.

From a node ``(sqrt(N)+c)/d`` the path goes left exactly when the left child
keeps a positive sqrt coefficient, i.e. when ``(c+d)**2 > N``.  The path is
purely periodic: it returns to its root after ``T >= 2`` steps without
repeating any other node, which is what makes it an irrationality path.
"""

from __future__ import annotations

import enum
import os
from dataclasses import dataclass
from functools import cached_property

from . import _kernel
from .core import QuadraticSurd, _trusted, conjugate, isqrt, left_child, right_child
from .errors import PeriodicityViolation, PreconditionViolated, StepBudgetExceeded


class Step(enum.Enum):
    LEFT = "l"
    RIGHT = "r"

    def __str__(self):
        return self.value


L, R = Step.LEFT, Step.RIGHT


def default_max_steps(N: int) -> int:
    """Step budget for a trace; ``SURDPATH_MAX_STEPS`` overrides it."""
    env = os.environ.get("SURDPATH_MAX_STEPS")
    if env:
        return int(env)
    return 4 * N * (2 * isqrt(N) + 2)


def lpp_step(x: QuadraticSurd) -> tuple[Step, QuadraticSurd]:
    if x.eps != 1:
        raise PreconditionViolated(f"LPP nodes have eps=+1, got {x}")
    s = x.c + x.d
    if s * s > x.N:
        return L, left_child(x)
    return R, right_child(x)


@dataclass
class LppTrace:
    """One full period of the LPP: nodes x_0..x_T with x_T == x_0."""

    root: QuadraticSurd
    c_seq: list[int]
    d_seq: list[int]
    steps: list[Step]
    symmetry_index: int | None = None

    @property
    def period(self) -> int:
        return len(self.steps)

    @property
    def N(self) -> int:
        return self.root.N

    @cached_property
    def nodes(self) -> list[QuadraticSurd]:
        N = self.root.N
        return [_trusted(N, 1, c, d) for c, d in zip(self.c_seq, self.d_seq)]

    def step(self, n: int) -> Step:
        """s_n for any n >= 0, reading the period cyclically."""
        return self.steps[n % len(self.steps)]

    def node(self, n: int) -> QuadraticSurd:
        return self.nodes[n % len(self.steps)]


def trace_lpp(alpha: QuadraticSurd, max_steps: int | None = None) -> LppTrace:
    """Walk the LPP of ``alpha`` until the root value comes back."""
    N, c0, d0 = alpha.N, alpha.c, alpha.d
    if alpha.eps != 1 or c0 * c0 >= N:
        raise PreconditionViolated(f"LPP root must be (sqrt(N)+p)/q with p^2 < N, got {alpha}")
    if max_steps is None:
        max_steps = default_max_steps(N)
    walked = _kernel.lpp_walk(N, c0, d0, max_steps)
    if walked is None:
        raise StepBudgetExceeded(
            f"LPP of {alpha} did not return within {max_steps} steps", steps=max_steps
        )
    cs, ds, lefts = walked
    T = len(lefts)
    if len(set(zip(cs[:T], ds[:T]))) != T:
        raise PeriodicityViolation(f"LPP of {alpha} repeats an interior node")
    m = next((i for i in range(1, T + 1) if cs[i] == -c0 and ds[i] == d0), None)
    steps = [L if left else R for left in lefts]
    return LppTrace(alpha, cs, ds, steps, m)


@dataclass(frozen=True)
class IrrationalityCertificate:
    """Two path positions carrying the same value."""

    index_a: int
    index_b: int
    repeated: QuadraticSurd


def irrationality_certificate(trace: LppTrace) -> IrrationalityCertificate:
    T = trace.period
    if trace.nodes[0] != trace.nodes[T]:
        raise PeriodicityViolation("trace does not close on its root")
    return IrrationalityCertificate(0, T, trace.nodes[0])


def check_unique_parentage(trace: LppTrace) -> bool:
    """No node of the period is reached both as a left and as a right child."""
    nodes = trace.nodes
    as_left, as_right = set(), set()
    for n, s in enumerate(trace.steps):
        (as_left if s is L else as_right).add(nodes[n + 1])
    return not (as_left & as_right)


@dataclass(frozen=True)
class PalindromeReport:
    """Symmetry facts about one LPP period.

    Fields are None when they do not apply: the block checks need a
    symmetry index m, the middle checks need m even, and the full-period
    palindrome applies only to roots with c_0 = 0.
    """

    symmetry_index: int | None
    steps_palindrome: bool | None = None
    c_antisymmetric: bool | None = None
    d_symmetric: bool | None = None
    middle_index: int | None = None
    middle_zero: bool | None = None
    middle_node: QuadraticSurd | None = None
    neg_conjugate_closed: bool | None = None
    full_palindrome: bool | None = None

    @property
    def passed(self) -> bool:
        checks = (
            self.steps_palindrome,
            self.c_antisymmetric,
            self.d_symmetric,
            self.middle_zero,
            self.neg_conjugate_closed,
            self.full_palindrome,
        )
        return all(v is not False for v in checks)


def _is_palindrome(seq) -> bool:
    return list(seq) == list(reversed(seq))


def palindrome_checks(trace: LppTrace) -> PalindromeReport:
    m = trace.symmetry_index
    cs, ds, steps = trace.c_seq, trace.d_seq, trace.steps
    full = _is_palindrome(steps) if cs[0] == 0 else None
    if m is None:
        return PalindromeReport(None, full_palindrome=full)
    middle = middle_zero = middle_node = None
    if m % 2 == 0:
        middle = m // 2
        middle_zero = cs[middle] == 0
        middle_node = trace.nodes[middle]
    members = set(trace.nodes)
    closed = True
    for x in trace.nodes:
        conj = conjugate(x)
        if conj.sign > 0 or conj.magnitude not in members:
            closed = False
            break
    return PalindromeReport(
        symmetry_index=m,
        steps_palindrome=_is_palindrome(steps[:m]),
        c_antisymmetric=all(cs[m - n] == -cs[n] for n in range(m + 1)),
        d_symmetric=all(ds[m - n] == ds[n] for n in range(m + 1)),
        middle_index=middle,
        middle_zero=middle_zero,
        middle_node=middle_node,
        neg_conjugate_closed=closed,
        full_palindrome=full,
    )
