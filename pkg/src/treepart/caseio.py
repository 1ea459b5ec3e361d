"""Case ingestion and result serialization.

Two entry formats:

* MATPOWER-style ``.m`` files (subset: ``baseMVA``, ``bus``, ``gen``,
  ``branch`` matrices) are imported one-way into the internal snapshot form.
* Snapshot JSON, the internal format: explicit per-unit fields, one record
  per bus and line. This is what solvers and the CLI consume and what the
  fixture files under ``data/snapshots`` contain.

Reports are written as canonical JSON (byte-stable round trip) or flat CSV.
"""

from __future__ import annotations

import json
import logging
import re
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .grid import AcData, Network, TreepartError, make_network

log = logging.getLogger(__name__)

SNAPSHOT_SCHEMA_VERSION = 1

# MATPOWER column positions
BUS_I, BUS_TYPE, PD, QD, GS, BS = 0, 1, 2, 3, 4, 5
VM, VA, BASE_KV, VMAX, VMIN = 7, 8, 9, 11, 12
GEN_BUS, PG, QG, QMAX, QMIN, VG, GEN_STATUS = 0, 1, 2, 3, 4, 5, 7
F_BUS, T_BUS, BR_R, BR_X, BR_B, RATE_A, TAP, SHIFT, BR_STATUS = 0, 1, 2, 3, 4, 5, 8, 9, 10

PQ, PV, SLACK = 1, 2, 3

_REQUIRED = {"bus": 13, "gen": 10, "branch": 11}


class ParseError(TreepartError):
    """Malformed case text; carries the offending line when known."""

    def __init__(self, message: str, line: int | None = None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class RawCase:
    """Numeric MATPOWER tables, exactly as read (MW/MVAr units, 1-based ids)."""

    base_mva: float
    bus: np.ndarray
    gen: np.ndarray
    branch: np.ndarray

    def validate(self) -> None:
        if self.base_mva <= 0:
            raise ParseError(f"baseMVA must be positive, got {self.base_mva}")
        bus_ids = set(int(b) for b in self.bus[:, BUS_I])
        if len(bus_ids) != self.bus.shape[0]:
            raise ParseError("duplicate bus ids")
        for g in self.gen:
            if int(g[GEN_BUS]) not in bus_ids:
                raise ParseError(f"generator at unknown bus {int(g[GEN_BUS])}")
        for br in self.branch:
            for col in (F_BUS, T_BUS):
                if int(br[col]) not in bus_ids:
                    raise ParseError(f"branch endpoint at unknown bus {int(br[col])}")
        n_slack = int((self.bus[:, BUS_TYPE] == SLACK).sum())
        if n_slack != 1:
            raise ParseError(f"expected exactly one slack bus, found {n_slack}")


def parse_matpower(text: str) -> RawCase:
    """Parse the MATPOWER subset (baseMVA/bus/gen/branch) from file text."""
    lines = text.split("\n")
    stripped = [re.sub(r"%.*", "", ln) for ln in lines]
    clean = "\n".join(stripped)

    m = re.search(r"\bmpc\.baseMVA\s*=\s*([0-9eE.+-]+)\s*;", clean)
    if m is None:
        raise ParseError("missing baseMVA assignment")
    base_mva = float(m.group(1))

    tables: dict[str, np.ndarray] = {}
    for match in re.finditer(r"\bmpc\.(\w+)\s*=\s*\[(.*?)\]\s*;", clean, re.DOTALL):
        name, body = match.group(1), match.group(2)
        if name not in _REQUIRED:
            if name not in ("version", "baseMVA"):
                log.warning("ignoring unknown matrix 'mpc.%s'", name)
            continue
        start_line = clean.count("\n", 0, match.start(2)) + 1
        rows: list[list[float]] = []
        width = None
        for offset, raw_row in enumerate(body.split("\n")):
            for chunk in raw_row.split(";"):
                chunk = chunk.strip()
                if not chunk:
                    continue
                try:
                    row = [float(tok) for tok in chunk.split()]
                except ValueError as exc:
                    raise ParseError(f"bad numeric token in mpc.{name}: {exc}",
                                     line=start_line + offset) from None
                if len(row) < _REQUIRED[name]:
                    raise ParseError(
                        f"mpc.{name} rows need {_REQUIRED[name]} columns, got {len(row)}",
                        line=start_line + offset,
                    )
                if width is None:
                    width = len(row)
                elif len(row) != width:
                    raise ParseError(
                        f"mpc.{name} row has {len(row)} fields, expected {width}",
                        line=start_line + offset,
                    )
                rows.append(row)
        tables[name] = np.array(rows, float) if rows else np.zeros((0, _REQUIRED[name]))

    for name in _REQUIRED:
        if name not in tables:
            raise ParseError(f"missing required matrix 'mpc.{name}'")

    case = RawCase(base_mva=base_mva, bus=tables["bus"], gen=tables["gen"], branch=tables["branch"])
    case.validate()
    return case


# ---------------------------------------------------------------------------
# Snapshots
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Snapshot:
    """Per-unit network state: topology, parameters and net injections."""

    base_mva: float
    provenance: str
    # per bus
    bus_ids: np.ndarray
    bus_type: np.ndarray
    p: np.ndarray
    q: np.ndarray
    qd: np.ndarray
    qmin: np.ndarray
    qmax: np.ndarray
    vset: np.ndarray
    gs: np.ndarray
    bs: np.ndarray
    # per line
    line_ids: np.ndarray
    line_from: np.ndarray   # original bus ids
    line_to: np.ndarray
    b: np.ndarray
    r: np.ndarray
    x: np.ndarray
    charging: np.ndarray
    tap: np.ndarray
    shift: np.ndarray
    capacity: np.ndarray
    unlimited: np.ndarray

    @property
    def n_buses(self) -> int:
        return int(self.bus_ids.shape[0])

    @property
    def n_lines(self) -> int:
        return int(self.line_ids.shape[0])


def snapshot_from_case(case: RawCase, provenance: str = "matpower-setpoints",
                       balance: str = "none") -> Snapshot:
    """Convert a parsed case to the per-unit snapshot form.

    Injections come from the case's dispatch setpoints (Pg - Pd). With
    ``balance="slack"`` any active-power mismatch is absorbed at the slack
    bus so the result is usable with the lossless DC engine.
    """
    if balance not in ("none", "slack"):
        raise ValueError("balance must be 'none' or 'slack'")
    base = case.base_mva
    nb = case.bus.shape[0]
    bus_ids = case.bus[:, BUS_I].astype(np.int64)
    pos_of = {int(b): i for i, b in enumerate(bus_ids)}

    pg = np.zeros(nb)
    qg = np.zeros(nb)
    qmin = np.zeros(nb)
    qmax = np.zeros(nb)
    vset = np.ones(nb)
    has_gen = np.zeros(nb, bool)
    for g in case.gen:
        if int(g[GEN_STATUS]) <= 0:
            continue
        i = pos_of[int(g[GEN_BUS])]
        pg[i] += g[PG]
        qg[i] += g[QG]
        qmin[i] += g[QMIN]
        qmax[i] += g[QMAX]
        if not has_gen[i]:
            vset[i] = g[VG] if g[VG] > 0 else 1.0
        has_gen[i] = True

    bus_type = case.bus[:, BUS_TYPE].astype(np.int64)
    # a PV bus with no in-service generator behaves as PQ
    bus_type[(bus_type == PV) & ~has_gen] = PQ
    slack_pos = int(np.flatnonzero(bus_type == SLACK)[0])
    if not has_gen[slack_pos]:
        raise ParseError(f"slack bus {int(bus_ids[slack_pos])} has no in-service generator")

    p = (pg - case.bus[:, PD]) / base
    q = (qg - case.bus[:, QD]) / base
    if balance == "slack":
        mismatch = float(p.sum())
        p[slack_pos] -= mismatch
        if abs(mismatch) > 1e-9:
            log.info("absorbed %.6f p.u. injection mismatch at the slack bus", mismatch)

    rows = [br for br in case.branch if int(br[BR_STATUS]) > 0]
    nl = len(rows)
    line_from = np.zeros(nl, np.int64)
    line_to = np.zeros(nl, np.int64)
    r = np.zeros(nl)
    x = np.zeros(nl)
    charging = np.zeros(nl)
    tap = np.zeros(nl)
    shift = np.zeros(nl)
    capacity = np.zeros(nl)
    for e, br in enumerate(rows):
        line_from[e] = int(br[F_BUS])
        line_to[e] = int(br[T_BUS])
        if br[BR_X] == 0:
            raise ParseError(
                f"in-service branch {int(br[F_BUS])}-{int(br[T_BUS])} has zero reactance"
            )
        r[e] = br[BR_R]
        x[e] = br[BR_X]
        charging[e] = br[BR_B]
        tap[e] = br[TAP]
        shift[e] = np.deg2rad(br[SHIFT])
        capacity[e] = br[RATE_A] / base if br[RATE_A] > 0 else np.inf
    unlimited = ~np.isfinite(capacity)

    return Snapshot(
        base_mva=base,
        provenance=provenance,
        bus_ids=bus_ids,
        bus_type=bus_type,
        p=p,
        q=q,
        qd=case.bus[:, QD] / base,
        qmin=qmin / base,
        qmax=qmax / base,
        vset=vset,
        gs=case.bus[:, GS] / base,
        bs=case.bus[:, BS] / base,
        line_ids=np.arange(nl, dtype=np.int64),
        line_from=line_from,
        line_to=line_to,
        b=1.0 / x,
        r=r,
        x=x,
        charging=charging,
        tap=tap,
        shift=shift,
        capacity=capacity,
        unlimited=unlimited,
    )


def snapshot_to_dict(snap: Snapshot) -> dict:
    buses = []
    for i in range(snap.n_buses):
        buses.append({
            "id": int(snap.bus_ids[i]),
            "type": int(snap.bus_type[i]),
            "p": float(snap.p[i]),
            "q": float(snap.q[i]),
            "qd": float(snap.qd[i]),
            "qmin": float(snap.qmin[i]),
            "qmax": float(snap.qmax[i]),
            "vset": float(snap.vset[i]),
            "gs": float(snap.gs[i]),
            "bs": float(snap.bs[i]),
        })
    lines = []
    for e in range(snap.n_lines):
        lines.append({
            "id": int(snap.line_ids[e]),
            "from": int(snap.line_from[e]),
            "to": int(snap.line_to[e]),
            "b": float(snap.b[e]),
            "r": float(snap.r[e]),
            "x": float(snap.x[e]),
            "charging": float(snap.charging[e]),
            "tap": float(snap.tap[e]),
            "shift": float(snap.shift[e]),
            "c": None if snap.unlimited[e] else float(snap.capacity[e]),
            "unlimited": bool(snap.unlimited[e]),
        })
    return {
        "schema_version": SNAPSHOT_SCHEMA_VERSION,
        "base_mva": float(snap.base_mva),
        "provenance": snap.provenance,
        "buses": buses,
        "lines": lines,
    }


def snapshot_from_dict(d: dict) -> Snapshot:
    try:
        buses = d["buses"]
        lines = d["lines"]
        base = float(d["base_mva"])
    except KeyError as exc:
        raise ParseError(f"snapshot JSON missing key {exc}") from None
    nb, nl = len(buses), len(lines)

    def bus_col(key, default=None, dtype=float):
        out = np.zeros(nb, dtype)
        for i, rec in enumerate(buses):
            if default is None and key not in rec:
                raise ParseError(f"bus record {i} missing '{key}'")
            out[i] = rec.get(key, default)
        return out

    def line_col(key, default=None, dtype=float):
        out = np.zeros(nl, dtype)
        for e, rec in enumerate(lines):
            if default is None and key not in rec:
                raise ParseError(f"line record {e} missing '{key}'")
            val = rec.get(key, default)
            out[e] = val
        return out

    unlimited = np.array([bool(rec.get("unlimited", rec.get("c") is None)) for rec in lines])
    capacity = np.array(
        [np.inf if unlimited[e] else float(lines[e]["c"]) for e in range(nl)]
    )
    x = line_col("x")
    b = np.zeros(nl)
    for e, rec in enumerate(lines):
        if "b" in rec:
            b[e] = float(rec["b"])
        elif x[e] != 0:
            b[e] = 1.0 / x[e]
        else:
            raise ParseError(f"line record {e} has neither 'b' nor a nonzero 'x'")

    snap = Snapshot(
        base_mva=base,
        provenance=str(d.get("provenance", "")),
        bus_ids=bus_col("id", dtype=np.int64),
        bus_type=bus_col("type", dtype=np.int64),
        p=bus_col("p"),
        q=bus_col("q", default=0.0),
        qd=bus_col("qd", default=0.0),
        qmin=bus_col("qmin", default=0.0),
        qmax=bus_col("qmax", default=0.0),
        vset=bus_col("vset", default=1.0),
        gs=bus_col("gs", default=0.0),
        bs=bus_col("bs", default=0.0),
        line_ids=line_col("id", dtype=np.int64),
        line_from=line_col("from", dtype=np.int64),
        line_to=line_col("to", dtype=np.int64),
        b=b,
        r=line_col("r", default=0.0),
        x=x,
        charging=line_col("charging", default=0.0),
        tap=line_col("tap", default=0.0),
        shift=line_col("shift", default=0.0),
        capacity=capacity,
        unlimited=unlimited,
    )
    if np.any(np.diff(snap.line_ids) <= 0):
        raise ParseError("line ids must be strictly increasing")
    return snap


def dumps_snapshot(snap: Snapshot) -> str:
    """Canonical JSON text (stable bytes for identical snapshots)."""
    return json.dumps(snapshot_to_dict(snap), sort_keys=True, indent=1) + "\n"


def loads_snapshot(text: str) -> Snapshot:
    return snapshot_from_dict(json.loads(text))


def load_snapshot(path: str | Path) -> Snapshot:
    return loads_snapshot(Path(path).read_text())


def save_snapshot(snap: Snapshot, path: str | Path) -> None:
    Path(path).write_text(dumps_snapshot(snap))


def load_case(path: str | Path, balance: str = "slack") -> Snapshot:
    """Load either a snapshot ``.json`` or a MATPOWER ``.m`` file."""
    path = Path(path)
    if path.suffix.lower() == ".json":
        return load_snapshot(path)
    return snapshot_from_case(parse_matpower(path.read_text()),
                              provenance=f"matpower-setpoints:{path.name}",
                              balance=balance)


# ---------------------------------------------------------------------------
# Network assembly
# ---------------------------------------------------------------------------

def to_network(snap: Snapshot, engine: str = "dc") -> Network:
    """Build the solver-facing network for the requested flow engine."""
    if engine not in ("dc", "ac"):
        raise ValueError(f"engine must be 'dc' or 'ac', got {engine!r}")
    if engine == "dc":
        total = float(snap.p.sum())
        if abs(total) > 1e-6:
            from .dcflow import UnbalancedInjectionsError

            raise UnbalancedInjectionsError(
                f"snapshot injections sum to {total:.3e}; DC engine needs balance"
            )
    pos_of = {int(b): i for i, b in enumerate(snap.bus_ids)}
    try:
        from_bus = np.array([pos_of[int(b)] for b in snap.line_from], np.int64)
        to_bus = np.array([pos_of[int(b)] for b in snap.line_to], np.int64)
    except KeyError as exc:
        raise ParseError(f"line references unknown bus {exc}") from None
    slack = np.flatnonzero(snap.bus_type == SLACK)
    if slack.shape[0] != 1:
        raise ParseError(f"expected exactly one slack bus, found {slack.shape[0]}")

    ac = None
    if engine == "ac":
        ac = AcData(
            bus_type=snap.bus_type.copy(),
            q=snap.q.copy(),
            qd=snap.qd.copy(),
            qmin=snap.qmin.copy(),
            qmax=snap.qmax.copy(),
            vset=snap.vset.copy(),
            gs=snap.gs.copy(),
            bs=snap.bs.copy(),
            resistance=snap.r.copy(),
            reactance=snap.x.copy(),
            charging=snap.charging.copy(),
            tap=snap.tap.copy(),
            shift=snap.shift.copy(),
        )
    return make_network(
        bus_ids=snap.bus_ids,
        p=snap.p,
        from_bus=from_bus,
        to_bus=to_bus,
        susceptance=snap.b,
        capacity=snap.capacity,
        unlimited=snap.unlimited,
        line_ids=snap.line_ids,
        reference=int(slack[0]),
        base_mva=snap.base_mva,
        ac=ac,
    )


# ---------------------------------------------------------------------------
# Report output
# ---------------------------------------------------------------------------

def canonical_json(d: dict) -> str:
    return json.dumps(d, sort_keys=True, indent=2) + "\n"


def write_report(report, fmt: str = "json") -> bytes:
    """Serialize a TreePartitionReport as JSON or a one-row CSV."""
    if fmt == "json":
        return canonical_json(report.to_dict()).encode()
    if fmt == "csv":
        d = report.to_dict()
        cols = [
            "schema_version", "method", "clusterer", "engine", "k", "seed",
            "gamma_pre", "gamma_post", "pre_nontrivial_count", "pre_sizes",
            "post_nontrivial_count", "post_sizes", "n_switched", "switched_lines",
            "optimal",
        ]
        vals = {
            "schema_version": d["schema_version"],
            "method": d["method"],
            "clusterer": d["clusterer"],
            "engine": d["engine"],
            "k": d["k"],
            "seed": d["seed"],
            "gamma_pre": repr(d["gamma_pre"]),
            "gamma_post": repr(d["gamma_post"]),
            "pre_nontrivial_count": d["bbd_pre"]["nontrivial_count"],
            "pre_sizes": "|".join(str(s) for s in d["bbd_pre"]["nontrivial_sizes"]),
            "post_nontrivial_count": d["bbd_post"]["nontrivial_count"],
            "post_sizes": "|".join(str(s) for s in d["bbd_post"]["nontrivial_sizes"]),
            "n_switched": len(d["switched_lines"]),
            "switched_lines": "|".join(str(s["id"]) for s in d["switched_lines"]),
            "optimal": d["optimal"],
        }
        header = ",".join(cols)
        row = ",".join(str(vals[c]) for c in cols)
        return (header + "\n" + row + "\n").encode()
    raise ValueError(f"unknown report format {fmt!r}")
