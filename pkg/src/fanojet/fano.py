"""Embedding-order analysis of Fano complete intersections.

A complete intersection X of degrees d_1, ..., d_r in P^N has
K_X = O(-N - 1 + sum(d_i)) restricted to X, so X is Fano exactly when
sum(d_i) <= N.  For Fano X of dimension >= 2 the anticanonical bundle is
k-jet ample with k = N + 1 - sum(d_i), and since X contains a line ell with
-K_X . ell = k, it is not (k+1)-spanned: the jet order is exact.  The only
curve escaping the pattern is the plane conic.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb, prod

from .lines import (
    CompleteIntersection,
    LineCount,
    count_lines,
    line_family_through_point,
)


@dataclass(frozen=True)
class EmbeddingOrderReport:
    """Everything the analysis pins down for one complete intersection.

    `jet_order` is exact when set (k-jet ample but not (k+1)-spanned);
    `contains_line` is None when not asserted; `formula_extrapolated` marks
    dimension-1 results, where the order comes from the same formula but the
    line-existence argument is silent.
    """

    is_fano: bool
    dim: int
    jet_order: int | None
    not_spanned_order: int | None
    contains_line: bool | None
    line_family: LineCount
    family_through_point: int | None
    anticanonical_degree: int
    curve_exception: bool
    formula_extrapolated: bool = False


def degree_of_twist(ci: CompleteIntersection, t: int) -> int:
    """Self-intersection of O_X(t): t^dim times the degree prod(d_i) of X."""
    return t ** ci.dim * prod(ci.degrees)


def anticanonical_degree(ci: CompleteIntersection) -> int:
    """(-K_X)^dim for a Fano complete intersection."""
    if ci.r >= ci.N:
        raise ValueError("not positive-dimensional")
    if ci.degree_sum > ci.N:
        raise ValueError("not Fano: sum of degrees exceeds ambient dimension")
    return degree_of_twist(ci, ci.N + 1 - ci.degree_sum)


def _binom(n: int, k: int) -> int:
    return comb(n, k) if 0 <= k <= n else 0


def h0_of_twist(ci: CompleteIntersection, t: int) -> int:
    """h^0(O_X(t)) via the Koszul alternating sum over subsets of the degrees.

    Complete intersections are projectively normal, so this is also the
    Hilbert function of the homogeneous coordinate ring:
    sum over S of (-1)^|S| C(N + t - sum_{i in S} d_i, N).
    """
    if t < 0:
        raise ValueError("twist must be >= 0")
    total = 0
    for size in range(ci.r + 1):
        for subset in combinations(ci.degrees, size):
            total += (-1) ** size * _binom(ci.N + t - sum(subset), ci.N)
    return total


def analyze(ci: CompleteIntersection) -> EmbeddingOrderReport:
    """Jet order of -K_X, line-family data, and the anticanonical degree.

    r = 0 means X = P^N itself.  Raises for r >= N (not positive-dimensional).
    """
    if ci.r >= ci.N:
        raise ValueError("not positive-dimensional")
    total = ci.degree_sum
    fano = total <= ci.N
    antideg = degree_of_twist(ci, ci.N + 1 - total)
    if ci.r >= 1:
        family = count_lines(ci)
    elif ci.N >= 2:
        # the lines of P^N form the whole Grassmannian G(2, N+1)
        family = LineCount.family(2 * (ci.N - 1), True)
    else:
        family = LineCount.finite(1)  # P^1 is the one line of its own ambient
    through = line_family_through_point(ci)

    jet: int | None = None
    not_spanned: int | None = None
    contains: bool | None = None
    curve_exception = False
    extrapolated = False
    if fano:
        if ci.dim >= 2:
            jet = ci.N + 1 - total
            not_spanned = jet + 1
            contains = True
        else:
            curve_exception = ci.N == 2 and ci.degrees == (2,)
            if not curve_exception:
                jet = ci.N + 1 - total
                not_spanned = jet + 1
                extrapolated = True
    return EmbeddingOrderReport(
        is_fano=fano,
        dim=ci.dim,
        jet_order=jet,
        not_spanned_order=not_spanned,
        contains_line=contains,
        line_family=family,
        family_through_point=through,
        anticanonical_degree=antideg,
        curve_exception=curve_exception,
        formula_extrapolated=extrapolated,
    )
