"""Finite-range evidence for the gargantuan conditions.

Every asymptotic statement in this package assumes the reduced counting
sequence u_n (a_n/n! for labeled classes, a_n for unlabeled ones, taken on
the reindexed support for periodic classes) is *gargantuan*:

    (i)   u_{n-1}/u_n -> 0,
    (ii)  sum_{k=r}^{n-r} |u_k u_{n-k}| = O(u_{n-r})   for every fixed r >= 1.

No finite computation proves either condition, so the audit never says
"gargantuan: yes".  It computes exact traces over a range n <= N and renders
one of two verdicts:

* ``evidence-consistent`` — the ratio trace keeps shrinking across the tail
  of the range and midpoint monotonicity holds at (almost) every tail size;
* ``visibly-failing`` — the data contradicts the conditions outright, e.g.
  the ratio trace is flat (linear orders with d=1: u_n = 1 for all n).

Two sufficient conditions are also checked and reported as flags with
witnesses: n·u_{n-1} = O(u_n) (witnessed by the largest observed n·u_{n-1}/u_n)
and |u_k u_{n-k}| nonincreasing for 1 <= k < n/2 (first violation recorded).
Either flag may be False for a sequence that is nonetheless gargantuan; the
flags are evidence for a *sufficient* criterion, not for the property itself.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Sequence, Union

from .catalog import CountingSequence
from .errors import RangeError

__all__ = [
    "AuditReport",
    "audit",
    "audit_sequence",
    "reduced_values",
    "product_closure_check",
    "perturbation_check",
]

Rational = Union[int, Fraction]


@dataclass(frozen=True)
class AuditReport:
    """Exact finite-range audit traces plus a two-valued verdict."""

    class_name: str
    N: int
    r_max: int
    ratio_trace: tuple[Fraction, ...]  # u_{n-1}/u_n for n = 1..N
    convolution_trace: dict[int, tuple[Fraction, ...]] = field(repr=False)
    # convolution_trace[r][i] = S_{n,r} = (sum_{k=r}^{n-r} |u_k u_{n-k}|)/u_{n-r}
    # at n = 2r + i, up to n = N.
    ratio_linear_bound: bool = True
    ratio_linear_witness: Fraction = Fraction(0)
    midpoint_monotone: bool = True
    midpoint_first_violation: tuple[int, int] | None = None  # (n, k)
    verdict: str = "evidence-consistent"
    notes: tuple[str, ...] = ()

    def ratio(self, n: int) -> Fraction:
        if not 1 <= n <= self.N:
            raise RangeError(f"ratio index {n} outside 1..{self.N}")
        return self.ratio_trace[n - 1]


def reduced_values(A: CountingSequence, N: int) -> list[Fraction]:
    """The audited sequence u_0..u_N: reduced, on the reindexed support."""
    p = A.period
    out = []
    for i in range(N + 1):
        n = p * i
        a = A.value(n)
        out.append(Fraction(a, factorial(n)) if A.labeling == "labeled" else Fraction(a))
    return out


def _midpoint_violations(u: Sequence[Fraction], n: int) -> list[int]:
    """k values with |u_k u_{n-k}| < |u_{k+1} u_{n-k-1}| and k+1 <= n//2."""
    bad = []
    for k in range(1, n // 2):
        if abs(u[k] * u[n - k]) < abs(u[k + 1] * u[n - k - 1]):
            bad.append(k)
    return bad


def audit_sequence(
    name: str, values: Sequence[Rational], N: int, r_max: int = 3
) -> AuditReport:
    """Audit an already-reduced sequence u_0..u_N (exact rationals)."""
    if N < 10:
        raise RangeError("audit needs N >= 10 to have a meaningful tail")
    if r_max < 1:
        raise RangeError("r_max must be >= 1")
    if len(values) < N + 1:
        raise RangeError(f"need values up to index {N}, got {len(values)}")
    u = [Fraction(v) for v in values[: N + 1]]

    if any(x == 0 for x in u[1:]):
        first = next(n for n in range(1, N + 1) if u[n] == 0)
        return AuditReport(
            class_name=name,
            N=N,
            r_max=r_max,
            ratio_trace=tuple(
                u[n - 1] / u[n] for n in range(1, first) if u[n] != 0
            ),
            convolution_trace={},
            ratio_linear_bound=False,
            ratio_linear_witness=Fraction(0),
            midpoint_monotone=False,
            midpoint_first_violation=None,
            verdict="visibly-failing",
            notes=(f"u_{first} = 0: ratios undefined past n={first - 1}",),
        )

    ratios = tuple(u[n - 1] / u[n] for n in range(1, N + 1))

    conv: dict[int, tuple[Fraction, ...]] = {}
    for r in range(1, r_max + 1):
        trace = []
        for n in range(2 * r, N + 1):
            s = sum(abs(u[k] * u[n - k]) for k in range(r, n - r + 1))
            trace.append(s / u[n - r])
        conv[r] = tuple(trace)

    # Sufficient-condition flags (Lemma-style, over the whole range).
    linear = [n * ratios[n - 1] for n in range(1, N + 1)]
    witness = max(linear)
    tail_start = N - N // 4 + 1
    linear_ok = max(linear[tail_start - 1 :]) <= max(linear[: tail_start - 1])

    first_violation = None
    for n in range(2, N + 1):
        bad = _midpoint_violations(u, n)
        if bad:
            first_violation = (n, bad[0])
            break

    # Verdict: does the ratio trace keep shrinking across the tail, and does
    # midpoint monotonicity hold at more than half of the tail sizes?
    r_start, r_end = ratios[tail_start - 1], ratios[N - 1]
    shrinks = r_end < r_start and 10 * r_end <= 9 * r_start
    tail_sizes = range(tail_start, N + 1)
    bad_tail = sum(1 for n in tail_sizes if _midpoint_violations(u, n))
    persistent = 2 * bad_tail > len(tail_sizes)
    verdict = "evidence-consistent" if shrinks and not persistent else "visibly-failing"

    return AuditReport(
        class_name=name,
        N=N,
        r_max=r_max,
        ratio_trace=ratios,
        convolution_trace=conv,
        ratio_linear_bound=linear_ok,
        ratio_linear_witness=witness,
        midpoint_monotone=first_violation is None,
        midpoint_first_violation=first_violation,
        verdict=verdict,
    )


def audit(A: CountingSequence, N: int, r_max: int = 3) -> AuditReport:
    """Audit a catalog or custom class on its reduced (reindexed) sequence."""
    name = A.name if A.period == 1 else f"{A.name}[/{A.period}]"
    return audit_sequence(name, reduced_values(A, N), N, r_max)


def product_closure_check(
    A: CountingSequence, B: CountingSequence, N: int, r_max: int = 3
) -> AuditReport:
    """Audit the termwise product of two reduced sequences.

    Closure under termwise products is a theorem for nonnegative gargantuan
    sequences; this check shows the finite-range evidence carries over.
    """
    ua, ub = reduced_values(A, N), reduced_values(B, N)
    prod = [x * y for x, y in zip(ua, ub)]
    return audit_sequence(f"{A.name} * {B.name}", prod, N, r_max)


def perturbation_check(
    A: Union[CountingSequence, Sequence[Rational]],
    B: Sequence[Rational],
    K: Rational,
    N: int,
    r_max: int = 3,
) -> AuditReport:
    """Audit c_n = K·a_n + b_n for a gargantuan-looking base a and small b.

    ``A`` is the base (a catalog class, audited reduced, or an explicit
    sequence); ``B`` is the explicit perturbation, indexed like the base.
    The stability theorem needs b_n/a_n -> 0 and K >= 1; the report carries
    the observed b/a witness at the tail endpoints as a note.  The motivating
    instance: unlabeled tournament counts equal t_n/n! plus an exponentially
    smaller symmetry correction, so their audit inherits the labeled one's.
    """
    a = reduced_values(A, N) if isinstance(A, CountingSequence) else [
        Fraction(v) for v in A[: N + 1]
    ]
    if len(a) < N + 1:
        raise RangeError(f"base sequence shorter than N={N}")
    if len(B) < N + 1:
        raise RangeError(f"perturbation shorter than N={N}")
    b = [Fraction(v) for v in B[: N + 1]]
    K = Fraction(K)
    c = [K * x + y for x, y in zip(a, b)]

    tail_start = N - N // 4 + 1
    note_parts = []
    if a[tail_start] != 0 and a[N] != 0:
        w0, w1 = abs(b[tail_start] / a[tail_start]), abs(b[N] / a[N])
        note_parts.append(
            f"|b/a| witness: {w0} at n={tail_start} -> {w1} at n={N}"
            + ("" if w1 <= w0 else " (not shrinking)")
        )
    base_name = A.name if isinstance(A, CountingSequence) else "base"
    report = audit_sequence(f"{K}*{base_name} + perturbation", c, N, r_max)
    return AuditReport(
        class_name=report.class_name,
        N=report.N,
        r_max=report.r_max,
        ratio_trace=report.ratio_trace,
        convolution_trace=report.convolution_trace,
        ratio_linear_bound=report.ratio_linear_bound,
        ratio_linear_witness=report.ratio_linear_witness,
        midpoint_monotone=report.midpoint_monotone,
        midpoint_first_violation=report.midpoint_first_violation,
        verdict=report.verdict,
        notes=tuple(note_parts),
    )
