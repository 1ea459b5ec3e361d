"""AC power flow (full Newton-Raphson, polar form) and apparent-power congestion.

The Jacobian is rebuilt every iteration; no decoupled shortcuts. Generator
reactive limits are honored by switching PV buses to PQ at a violated limit
and re-solving. Candidate evaluations during switching typically warm-start
from the pre-switching solution.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp
import scipy.sparse.linalg as spla

from .dcflow import CongestionReport, CongestionUndefinedError
from .grid import DisconnectedError, Network, TreepartError, components

PQ, PV, SLACK = 1, 2, 3

AC_TOL = 1e-6
MAX_ITER = 30
_Q_ROUNDS = 10


class ConvergenceError(TreepartError):
    """Newton iteration did not reach the mismatch tolerance."""

    def __init__(self, residual: float, iterations: int):
        super().__init__(
            f"AC power flow did not converge (residual {residual:.3e} "
            f"after {iterations} iterations)"
        )
        self.residual = residual
        self.iterations = iterations


@dataclass(frozen=True)
class AcSolution:
    voltages: np.ndarray     # complex per bus
    s_from: np.ndarray       # complex power entering each line at its from end
    s_to: np.ndarray         # ... and at its to end
    iterations: int
    residual: float          # max |power mismatch| (per-unit)
    bus_type: np.ndarray     # types after any PV->PQ limit switching


def _branch_admittances(net: Network):
    ac = net.ac
    ys = 1.0 / (ac.resistance + 1j * ac.reactance)
    bc = ac.charging
    tap = np.where(ac.tap == 0.0, 1.0, ac.tap)
    tc = tap * np.exp(1j * ac.shift)
    yff = (ys + 0.5j * bc) / (tap * tap)
    yft = -ys / np.conj(tc)
    ytf = -ys / tc
    ytt = ys + 0.5j * bc
    return yff, yft, ytf, ytt


def _ybus(net: Network) -> sp.csr_matrix:
    n = net.n_buses
    ac = net.ac
    yff, yft, ytf, ytt = _branch_admittances(net)
    f, t = net.from_bus, net.to_bus
    rows = np.concatenate([f, f, t, t, np.arange(n)])
    cols = np.concatenate([f, t, f, t, np.arange(n)])
    vals = np.concatenate([yff, yft, ytf, ytt, ac.gs + 1j * ac.bs])
    return sp.csr_matrix((vals, (rows, cols)), shape=(n, n))


def _newton(ybus, s_spec, v0, pv, pq, tol, max_iter):
    v = v0.copy()
    npv, npq = len(pv), len(pq)
    pvpq = np.concatenate([pv, pq])
    iterations = 0

    def mismatch(volt):
        s_calc = volt * np.conj(ybus @ volt)
        dm = s_calc - s_spec
        return np.concatenate([dm[pvpq].real, dm[pq].imag])

    f = mismatch(v)
    residual = float(np.abs(f).max()) if f.size else 0.0
    while residual > tol and np.isfinite(residual) and iterations < max_iter:
        iterations += 1
        ib = ybus @ v
        diag_v = sp.diags(v)
        diag_i = sp.diags(ib)
        diag_vnorm = sp.diags(v / np.abs(v))
        ds_dva = (1j * diag_v @ (diag_i - ybus @ diag_v).conjugate()).tocsr()
        ds_dvm = (diag_v @ (ybus @ diag_vnorm).conjugate() + diag_i.conjugate() @ diag_vnorm).tocsr()
        j11 = ds_dva[np.ix_(pvpq, pvpq)].real
        j12 = ds_dvm[np.ix_(pvpq, pq)].real
        j21 = ds_dva[np.ix_(pq, pvpq)].imag
        j22 = ds_dvm[np.ix_(pq, pq)].imag
        jac = sp.bmat([[j11, j12], [j21, j22]], format="csc")
        dx = spla.spsolve(jac, -f)
        va = np.angle(v)
        vm = np.abs(v)
        va[pvpq] += dx[: npv + npq]
        vm[pq] += dx[npv + npq:]
        if np.any(vm <= 0):
            return v, np.inf, iterations
        v = vm * np.exp(1j * va)
        f = mismatch(v)
        residual = float(np.abs(f).max()) if f.size else 0.0
    if not np.isfinite(residual):
        residual = np.inf
    return v, residual, iterations


def solve_ac(net: Network, start: AcSolution | None = None,
             tol: float = AC_TOL, max_iter: int = MAX_ITER,
             enforce_q_limits: bool = True) -> AcSolution:
    """Newton-Raphson AC solve; flat start unless a warm start is given."""
    if net.ac is None:
        raise TreepartError("network carries no AC data; build it with engine='ac'")
    comps = components(net)
    if len(comps) != 1:
        raise DisconnectedError(
            f"AC solve requires a connected network ({len(comps)} components)",
            components=comps,
        )
    ac = net.ac
    n = net.n_buses
    ybus = _ybus(net)
    bus_type = ac.bus_type.copy()
    q_spec = ac.q.copy()

    if start is not None and start.voltages.shape[0] == n:
        v = start.voltages.copy()
        # keep PV/slack magnitudes pinned at their setpoints
        ctrl = bus_type != PQ
        vm = np.abs(v)
        vm[ctrl] = ac.vset[ctrl]
        va = np.angle(v)
        v = vm * np.exp(1j * va)
    else:
        vm = np.where(bus_type == PQ, 1.0, ac.vset)
        v = vm.astype(complex)

    total_iter = 0
    residual = np.inf
    # iterate well below the acceptance tolerance so that re-solves from a
    # different start reproduce gamma to ~1e-8
    target = 0.01 * tol
    for _ in range(_Q_ROUNDS):
        pv = np.flatnonzero(bus_type == PV)
        pq = np.flatnonzero(bus_type == PQ)
        s_spec = net.p + 1j * q_spec
        v, residual, iters = _newton(ybus, s_spec, v, pv, pq, target, max_iter - total_iter)
        total_iter += iters
        if residual > tol:
            raise ConvergenceError(residual, total_iter)
        if not enforce_q_limits or pv.size == 0:
            break
        # reactive output of the aggregated generator at each PV bus
        s_calc = v * np.conj(ybus @ v)
        qg = s_calc.imag[pv] + ac.qd[pv]
        hi = qg > ac.qmax[pv] + 1e-7
        lo = qg < ac.qmin[pv] - 1e-7
        if not (hi.any() or lo.any()):
            break
        for idx, over, under in zip(pv, hi, lo):
            if over:
                bus_type[idx] = PQ
                q_spec[idx] = ac.qmax[idx] - ac.qd[idx]
            elif under:
                bus_type[idx] = PQ
                q_spec[idx] = ac.qmin[idx] - ac.qd[idx]
    else:
        raise ConvergenceError(residual, total_iter)

    yff, yft, ytf, ytt = _branch_admittances(net)
    vf = v[net.from_bus]
    vt = v[net.to_bus]
    s_from = vf * np.conj(yff * vf + yft * vt)
    s_to = vt * np.conj(ytf * vf + ytt * vt)
    return AcSolution(
        voltages=v,
        s_from=s_from,
        s_to=s_to,
        iterations=total_iter,
        residual=residual,
        bus_type=bus_type,
    )


def congestion_ac(solution: AcSolution, net: Network) -> CongestionReport:
    """Apparent-power congestion; each line scored at its worse end."""
    limited = ~net.unlimited
    if not limited.any():
        raise CongestionUndefinedError("all lines are unlimited")
    loading = np.maximum(np.abs(solution.s_from), np.abs(solution.s_to))
    levels = np.zeros(net.n_lines)
    levels[limited] = loading[limited] / net.capacity[limited]
    pos = int(np.argmax(np.where(limited, levels, -1.0)))
    return CongestionReport(
        levels=levels,
        gamma=float(levels[pos]),
        argmax_line=int(net.line_ids[pos]),
    )
