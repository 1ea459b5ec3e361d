"""Lossless DC power flow and congestion levels.

Flows solve  p_i = sum_out f - sum_in f,  f_ij = b_ij (theta_i - theta_j)
with the reference bus angle pinned to zero. The reduced weighted Laplacian
system is symmetric positive definite on a connected network, so a direct
factorization is used (dense below 256 buses, sparse above).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp
import scipy.sparse.linalg as spla

from .grid import DisconnectedError, Network, SwitchSet, TreepartError, apply_switch, components

BALANCE_TOL = 1e-6
RESIDUAL_TOL = 1e-8
_DENSE_LIMIT = 256


class UnbalancedInjectionsError(TreepartError):
    """Net injections do not sum to zero, so the lossless model has no solution."""


class CongestionUndefinedError(TreepartError):
    """Every line is unlimited; the maximum congestion has no finite meaning."""


@dataclass(frozen=True)
class DcSolution:
    flows: np.ndarray    # per line position, sign follows line direction
    angles: np.ndarray   # radians, 0 at the reference bus
    residual: float      # max bus-balance violation


@dataclass(frozen=True)
class CongestionReport:
    levels: np.ndarray      # |f|/c per line position (0 on unlimited lines)
    gamma: float
    argmax_line: int        # stable line id attaining gamma


def solve_dc(net: Network) -> DcSolution:
    """Solve the DC power flow equations for the network's injections."""
    if abs(float(net.p.sum())) > BALANCE_TOL:
        raise UnbalancedInjectionsError(
            f"injections sum to {net.p.sum():.3e} (tolerance {BALANCE_TOL})"
        )
    comps = components(net)
    if len(comps) != 1:
        raise DisconnectedError(
            f"DC solve requires a connected network ({len(comps)} components)",
            components=comps,
        )
    n = net.n_buses
    theta = np.zeros(n)
    keep = np.ones(n, bool)
    keep[net.reference] = False
    fb, tb, b = net.from_bus, net.to_bus, net.susceptance

    if n <= _DENSE_LIMIT:
        lap = np.zeros((n, n))
        np.add.at(lap, (fb, fb), b)
        np.add.at(lap, (tb, tb), b)
        np.add.at(lap, (fb, tb), -b)
        np.add.at(lap, (tb, fb), -b)
        reduced = lap[np.ix_(keep, keep)]
        solve = lambda rhs: np.linalg.solve(reduced, rhs)  # noqa: E731
    else:
        rows = np.concatenate([fb, tb, fb, tb])
        cols = np.concatenate([fb, tb, tb, fb])
        vals = np.concatenate([b, b, -b, -b])
        lap = sp.csc_matrix((vals, (rows, cols)), shape=(n, n))
        idx = np.flatnonzero(keep)
        solve = spla.factorized(lap[np.ix_(idx, idx)].tocsc())

    def recompute(th):
        f = b * (th[fb] - th[tb])
        bal = net.p.copy()
        np.subtract.at(bal, fb, f)
        np.add.at(bal, tb, f)
        return f, bal

    theta[keep] = solve(net.p[keep])
    flows, balance = recompute(theta)
    residual = float(np.abs(balance).max()) if n else 0.0
    if residual > RESIDUAL_TOL:
        # one step of iterative refinement rescues ill-conditioned cases
        theta[keep] += solve(balance[keep])
        flows, balance = recompute(theta)
        residual = float(np.abs(balance).max())
    if residual > RESIDUAL_TOL:
        raise TreepartError(f"DC solve residual {residual:.3e} exceeds {RESIDUAL_TOL}")
    return DcSolution(flows=flows, angles=theta, residual=residual)


def congestion(solution: DcSolution, net: Network) -> CongestionReport:
    """Per-line congestion |f|/c and its maximum over capacity-limited lines."""
    limited = ~net.unlimited
    if not limited.any():
        raise CongestionUndefinedError("all lines are unlimited")
    levels = np.zeros(net.n_lines)
    levels[limited] = np.abs(solution.flows[limited]) / net.capacity[limited]
    pos = int(np.argmax(np.where(limited, levels, -1.0)))
    return CongestionReport(
        levels=levels,
        gamma=float(levels[pos]),
        argmax_line=int(net.line_ids[pos]),
    )


def gamma_of_switch(net: Network, switch: SwitchSet) -> float:
    """Maximum congestion after switching the given lines off."""
    post = apply_switch(net, switch)
    return congestion(solve_dc(post), post).gamma
