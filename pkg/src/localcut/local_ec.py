"""Randomized local edge cut search around a seed vertex.

``local_ec(graph, x, nu, k, gamma, seed)`` repeatedly grows a DFS from x,
stops at each newly marked arc with probability (gamma+1)/(8*nu), and
reverses the tree path to the stop vertex.  A pass that runs out of arcs
returns its tree as the cut side; marking more than ceil(128*nu*k /
(gamma+1)) arcs aborts.  Any returned set S has x in S, S != V and
|E(S, V-S)| < k + gamma; when some S' with x in S', vol_out(S') <= nu and
|E(S', V-S')| < k exists, the failure probability is at most 1/4.

Strict mode enforces gamma <= k < nu < m*(gamma+1)/(130*k); relaxed mode
runs anyway but tags the outcome with ``guarantee_void``.
"""

import math
from dataclasses import dataclass

from .graph import PreconditionError, cut_size
from .kernel import (
    STATUS_CAP,
    STATUS_CUT,
    STATUS_EXHAUSTED,
    STATUS_FULL,
    local_ec_alt_run,
    local_ec_run,
)
from .rng import MASK64, bernoulli_threshold, derive_seed

MARK_CAP_NUM = 128     # cap = ceil(128 * nu * k / (gamma + 1))
RANGE_DEN = 130        # strict mode needs nu < m * (gamma + 1) / (130 * k)
STOP_DEN = 8           # stop probability (gamma + 1) / (8 * nu)

_STATUS_NAMES = {
    STATUS_CUT: "cut",
    STATUS_EXHAUSTED: "stopped_out",
    STATUS_CAP: "mark_cap",
    STATUS_FULL: "swallowed_all",
}


@dataclass(frozen=True)
class CutOutcome:
    """Result of one local edge cut search."""

    found: bool
    cut_side: frozenset | None   # S with x in S, or None
    cut_value: int | None        # |E(S, V-S)|, recounted on the input graph
    status: str                  # cut / stopped_out / mark_cap / swallowed_all
    queries: int
    marked: int
    guarantee_void: bool         # True when run with violated preconditions

    @property
    def is_bot(self):
        return not self.found


def _validate_common(x, nu, k, gamma, n):
    if not (0 <= x < n):
        raise PreconditionError(f"seed {x} out of range")
    for name, val in (("nu", nu), ("k", k), ("gamma", gamma)):
        if int(val) != val or val < 0:
            raise PreconditionError(f"{name} must be a nonnegative integer")
    if k < 1:
        raise PreconditionError("k must be at least 1")


def check_local_ec_preconditions(graph, x, nu, k, gamma):
    """Strict parameter range; raises PreconditionError on violation."""
    _validate_common(x, nu, k, gamma, graph.n)
    if gamma > k:
        raise PreconditionError(f"need gamma <= k, got gamma={gamma}, k={k}")
    if not (k < nu):
        raise PreconditionError(f"need k < nu, got k={k}, nu={nu}")
    if not (nu * RANGE_DEN * k < graph.m * (gamma + 1)):
        raise PreconditionError(
            f"need nu < m*(gamma+1)/({RANGE_DEN}*k): "
            f"nu={nu}, m={graph.m}, k={k}, gamma={gamma}")


def mark_cap(nu, k, gamma):
    return -(-(MARK_CAP_NUM * nu * k) // (gamma + 1))


def _run(graph, x, nu, k, gamma, seed, guarantee_void):
    cap = mark_cap(nu, k, gamma)
    thr = min(bernoulli_threshold(gamma + 1, STOP_DEN * nu), MASK64)
    status, members, queries, marked = local_ec_run(
        graph.indptr, graph.heads, graph.n, False, 0,
        int(x), k + gamma, cap, thr, seed & MASK64)
    if status == STATUS_CUT:
        side = frozenset(int(v) for v in members)
        return CutOutcome(True, side, cut_size(graph, side),
                          _STATUS_NAMES[status], queries, marked,
                          guarantee_void)
    return CutOutcome(False, None, None, _STATUS_NAMES[status],
                      queries, marked, guarantee_void)


def local_ec(graph, x, nu, k, gamma, seed, strict=True):
    """Local edge cut search; see the module docstring."""
    guarantee_void = False
    if strict:
        check_local_ec_preconditions(graph, x, nu, k, gamma)
    else:
        _validate_common(x, nu, k, gamma, graph.n)
        try:
            check_local_ec_preconditions(graph, x, nu, k, gamma)
        except PreconditionError:
            guarantee_void = True
    if nu < 1:
        raise PreconditionError("nu must be positive")
    return _run(graph, x, nu, k, gamma, seed, guarantee_void)


def local_ec_exact(graph, x, nu, k, seed, strict=True):
    """gamma = 0: any returned cut has size strictly below k."""
    return local_ec(graph, x, nu, k, 0, seed, strict=strict)


def local_ec_approx(graph, x, nu, k, eps, seed, strict=True):
    """gamma = floor(eps*k): cut size strictly below floor((1+eps)*k)."""
    if eps < 0:
        raise PreconditionError("eps must be nonnegative")
    gamma = min(int(math.floor(eps * k + 1e-12)), k)
    return local_ec(graph, x, nu, k, gamma, seed, strict=strict)


def local_ec_boosted(graph, x, nu, k, gamma, reps, seed, strict=True):
    """First non-failure over ``reps`` independent runs (seeds derived
    from ``seed``); failure probability drops to (1/4)**reps."""
    if reps < 1:
        raise PreconditionError("reps must be at least 1")
    if strict:
        check_local_ec_preconditions(graph, x, nu, k, gamma)
    out = None
    for rep in range(reps):
        out = local_ec(graph, x, nu, k, gamma, derive_seed(seed, rep),
                       strict=False)
        if out.found:
            return out
    return out


def gap_local_ec(graph, x, nu, k, gamma, seed, strict=True):
    """Gap variant: either some S with vol_out <= nu is cut off by fewer
    than k - gamma edges (then a cut of size below k is found with
    probability >= 3/4), or the answer may be failure.

    Strict mode needs k >= 1 + gamma, gamma <= k/2 and
    nu < m*(gamma+1)/(130*(k-gamma)).
    """
    _validate_common(x, nu, k, gamma, graph.n)
    guarantee_void = False
    ok = (k >= 1 + gamma and 2 * gamma <= k
          and nu * RANGE_DEN * (k - gamma) < graph.m * (gamma + 1))
    if not ok:
        if strict:
            raise PreconditionError(
                f"gap variant needs k>=1+gamma, gamma<=k/2 and "
                f"nu < m*(gamma+1)/({RANGE_DEN}*(k-gamma)); "
                f"got nu={nu}, k={k}, gamma={gamma}, m={graph.m}")
        guarantee_void = True
    if nu < k - gamma:
        # any set of volume <= nu < k - gamma is a single low-degree vertex
        if graph.out_degree(x) < k - gamma:
            side = frozenset([int(x)])
            return CutOutcome(True, side, cut_size(graph, side), "cut",
                              0, 0, guarantee_void)
        return CutOutcome(False, None, None, "degree_at_least_target",
                          0, 0, guarantee_void)
    out = local_ec(graph, x, nu, k - gamma, gamma, seed, strict=False)
    if guarantee_void and not out.guarantee_void:
        out = CutOutcome(out.found, out.cut_side, out.cut_value, out.status,
                         out.queries, out.marked, True)
    return out


def local_ec_alt(graph, x, nu, k, eps, seed, strict=True):
    """Budgeted variant: floor((1+eps)*k) passes, each visiting at most
    ceil(8*nu/eps) edges; a short pass returns its DFS tree, otherwise a
    uniform visited edge picks the reversal target.  Returned sets satisfy
    |E(S, V-S)| < floor((1+eps)*k) and vol_out(S) <= 10*nu/eps; detection
    probability is at least 1/2.  Strict mode needs nu < eps*m/8.
    """
    _validate_common(x, nu, k, 0, graph.n)
    if eps <= 0:
        raise PreconditionError("eps must be positive")
    guarantee_void = False
    if not (8 * nu < eps * graph.m):
        if strict:
            raise PreconditionError(
                f"need nu < eps*m/8, got nu={nu}, eps={eps}, m={graph.m}")
        guarantee_void = True
    iters = int(math.floor((1 + eps) * k + 1e-12))
    budget = max(1, int(math.ceil(8 * nu / eps - 1e-12)))
    status, members, queries, visited = local_ec_alt_run(
        graph.indptr, graph.heads, graph.n, False, 0,
        int(x), iters, budget, seed & MASK64)
    if status == STATUS_CUT:
        side = frozenset(int(v) for v in members)
        return CutOutcome(True, side, cut_size(graph, side),
                          _STATUS_NAMES[status], queries, visited,
                          guarantee_void)
    return CutOutcome(False, None, None, _STATUS_NAMES[status],
                      queries, visited, guarantee_void)
