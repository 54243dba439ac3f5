"""Exact and baseline solvers for the nonideal beamforming problem.

The objective is g(w) = |sum_n w_n h_n| with every w_n drawn from one
feasible set W.  The angle sweep and the Minkowski-sum solver are both
exact for finite W and are validated against exhaustive search.
"""

from __future__ import annotations

import cmath
import csv
import io
import json
import math
from dataclasses import dataclass

import numpy as np

from . import geometry
from .errors import (
    BudgetExceeded,
    ContinuousSetNotSupported,
    NotAGroup,
    TooLarge,
)
from .sets import DEFAULT_RESOLUTION, FeasibleSet, OnOff, RegularMGon

TWO_PI = 2.0 * math.pi

MINKOWSKI_BUDGET = 1_000_000
BRUTE_FORCE_CAP = 10_000_000

# full recomputation interval of the running sum, bounds float drift
RESYNC_INTERVAL = 4096


@dataclass(frozen=True)
class PhasorChannel:
    """Channel coefficients h_1..h_N plus an optional direct path h_0."""

    coefficients: tuple
    direct: complex | None = None

    def __post_init__(self):
        coeffs = tuple(complex(h) for h in self.coefficients)
        if not coeffs:
            raise ValueError("channel needs at least one coefficient")
        for h in coeffs:
            if not (math.isfinite(h.real) and math.isfinite(h.imag)):
                raise ValueError(f"non-finite coefficient {h!r}")
        object.__setattr__(self, "coefficients", coeffs)
        if self.direct is not None:
            object.__setattr__(self, "direct", complex(self.direct))

    def __len__(self):
        return len(self.coefficients)

    @classmethod
    def from_json_obj(cls, obj: dict) -> "PhasorChannel":
        direct = obj.get("direct")
        if direct is not None:
            direct = complex(direct[0], direct[1])
        return cls(tuple(complex(p[0], p[1]) for p in obj["h"]), direct=direct)

    @classmethod
    def from_csv_text(cls, text: str) -> "PhasorChannel":
        direct = None
        coeffs = []
        for row in csv.reader(io.StringIO(text)):
            if not row or not "".join(row).strip():
                continue
            if row[0].strip() == "direct":
                direct = complex(float(row[1]), float(row[2]))
            else:
                coeffs.append(complex(float(row[0]), float(row[1])))
        return cls(tuple(coeffs), direct=direct)

    @classmethod
    def load(cls, path: str) -> "PhasorChannel":
        with open(path, "r", encoding="utf-8") as f:
            text = f.read()
        stripped = text.lstrip()
        if stripped.startswith("{"):
            return cls.from_json_obj(json.loads(text))
        return cls.from_csv_text(text)


@dataclass(frozen=True)
class BeamformingSolution:
    weights: tuple
    gain: float
    ideal_gain: float
    ratio: float
    method: str

    def to_dict(self) -> dict:
        return {
            "weights": [[w.real, w.imag] for w in self.weights],
            "gain": self.gain,
            "ideal_gain": self.ideal_gain,
            "ratio": self.ratio,
            "method": self.method,
        }


def ideal_gain(ch: PhasorChannel) -> float:
    """sum_n |h_n|, the unconstrained coherent-combining gain."""
    return float(sum(abs(h) for h in ch.coefficients))


def _finish(weights, ch: PhasorChannel, method: str,
            extra: complex = 0j, ideal: float | None = None) -> BeamformingSolution:
    weights = tuple(complex(w) for w in weights)
    gain = abs(extra + sum(w * h for w, h in zip(weights, ch.coefficients)))
    if ideal is None:
        ideal = ideal_gain(ch)
    ratio = gain / ideal if ideal > 0.0 else 1.0
    return BeamformingSolution(weights, float(gain), float(ideal), float(ratio), method)


def greedy_quantize(ch: PhasorChannel, fset: FeasibleSet,
                    resolution: int = DEFAULT_RESOLUTION) -> BeamformingSolution:
    """Round each antenna to the set member best aligned with -theta_n."""
    weights = [fset.project(-cmath.phase(h), resolution) for h in ch.coefficients]
    return _finish(weights, ch, "greedy")


def _sweep_polygon(fset: FeasibleSet, resolution: int | None):
    if fset.is_discrete:
        return fset.to_polygon()
    if resolution is None:
        raise ContinuousSetNotSupported(
            f"{type(fset).__name__} needs an explicit approximation resolution")
    return fset.to_polygon(resolution)


def solve_angle_sweep(ch: PhasorChannel, fset: FeasibleSet,
                      resolution: int | None = None) -> BeamformingSolution:
    """Exact optimum for finite W by the decoupled 1-D angle sweep.

    Per-antenna argmax assignments are piecewise constant in the sweep
    angle; breakpoints are the normal-fan boundaries of Conv W shifted by
    each channel phase.  Every visited assignment is feasible, so its
    |sum w_n h_n| is an attainable gain and the best arc is exact.
    """
    poly = _sweep_polygon(fset, resolution)
    verts = poly.array
    h = np.asarray(ch.coefficients, dtype=complex)
    n_ant = len(h)
    if len(poly) == 1:
        return _finish([poly.vertices[0]] * n_ant, ch, "angle_sweep")

    phases = np.angle(h)
    bounds, after = geometry.normal_fan(poly)

    def assignment_at_zero():
        phi = (-phases) % TWO_PI
        idx = np.searchsorted(bounds, phi, side="right") - 1
        return after[idx]  # idx == -1 wraps to the last arc

    active = np.flatnonzero(np.abs(h) > 0.0)
    ev_theta = ((bounds[None, :] + phases[active, None]) % TWO_PI).ravel()
    ev_ant = np.repeat(active, len(bounds))
    ev_vert = np.tile(after, len(active))
    order = np.argsort(ev_theta, kind="stable")
    ev_ant, ev_vert = ev_ant[order], ev_vert[order]

    def sweep(stop: int | None):
        assign = assignment_at_zero()
        s = complex(np.sum(verts[assign] * h))
        best_val, best_idx = abs(s), -1
        limit = len(ev_ant) if stop is None else stop + 1
        for t in range(limit):
            n, v = ev_ant[t], ev_vert[t]
            s += (verts[v] - verts[assign[n]]) * h[n]
            assign[n] = v
            if (t + 1) % RESYNC_INTERVAL == 0:
                s = complex(np.sum(verts[assign] * h))
            if abs(s) > best_val:
                best_val, best_idx = abs(s), t
        return assign, best_idx

    _, best_idx = sweep(None)
    assign, _ = sweep(best_idx) if best_idx >= 0 else (assignment_at_zero(), -1)
    return _finish(verts[assign], ch, "angle_sweep")


def solve_minkowski(ch: PhasorChannel, fset: FeasibleSet,
                    budget: int = MINKOWSKI_BUDGET) -> BeamformingSolution:
    """Exact optimum via the iterated Minkowski sum of h_n * Conv W.

    The running sum polygon carries, per vertex, the feasible weights that
    produce it, so the maximizer comes with a certificate.
    """
    if not fset.is_discrete:
        raise ContinuousSetNotSupported("Minkowski solver needs a finite set")
    poly = fset.to_polygon()
    verts = list(poly.vertices)
    if len(ch) * len(verts) > budget:
        raise BudgetExceeded(
            f"N*|V| = {len(ch) * len(verts)} exceeds budget {budget}")

    cur = None
    assigns = None
    for hn in ch.coefficients:
        if hn == 0:
            if cur is None:
                cur, assigns = [0j], [(verts[0],)]
            else:
                assigns = [a + (verts[0],) for a in assigns]
            continue
        q = [v * hn for v in verts]
        if cur is None:
            cur = q
            assigns = [(v,) for v in verts]
        else:
            cur, contribs = geometry.minkowski_sum_indexed(cur, q)
            assigns = [assigns[i] + (verts[j],) for i, j in contribs]
    k = max(range(len(cur)), key=lambda i: abs(cur[i]))
    sol = _finish(assigns[k], ch, "minkowski")
    return sol


def brute_force(ch: PhasorChannel, fset: FeasibleSet,
                cap: int = BRUTE_FORCE_CAP) -> BeamformingSolution:
    """Exhaustive search over W^N; first-found tie kept."""
    if not fset.is_discrete:
        raise ContinuousSetNotSupported("exhaustive search needs a finite set")
    pts = np.asarray(fset.points(), dtype=complex)
    n_comb = len(pts) ** len(ch)
    if n_comb > cap:
        raise TooLarge(f"|W|^N = {n_comb} exceeds cap {cap}")
    acc = np.zeros(1, dtype=complex)
    for hn in ch.coefficients:
        acc = (acc[:, None] + (pts * hn)[None, :]).ravel()
    k = int(np.argmax(np.abs(acc)))
    digits = []
    for _ in ch.coefficients:
        digits.append(k % len(pts))
        k //= len(pts)
    weights = pts[digits[::-1]]
    return _finish(weights, ch, "brute_force")


def ris_solve(ch: PhasorChannel, M: int) -> BeamformingSolution:
    """RIS configuration with a direct path, over the rotation group W_M.

    Solves the augmented (N+1)-antenna problem on (h_0, h_1..h_N), then
    rescales so the direct path carries a unit coefficient.  The reported
    ideal gain is that of the augmented problem, |h_0| + sum |h_n|.
    """
    if M < 1:
        raise NotAGroup("M must be >= 1")
    if ch.direct is None:
        raise ValueError("ris_solve needs a channel with a direct path")
    fset = RegularMGon(M)
    aug = PhasorChannel((ch.direct,) + ch.coefficients)
    sol = solve_angle_sweep(aug, fset)
    w0 = sol.weights[0]
    weights = []
    for w in sol.weights[1:]:
        k = round(cmath.phase(w / w0) * M / TWO_PI) % M
        weights.append(cmath.exp(2j * math.pi * k / M))
    ideal = abs(ch.direct) + ideal_gain(ch)
    return _finish(weights, ch, "ris", extra=ch.direct, ideal=ideal)


def worst_case_channel(N: int) -> PhasorChannel:
    """h_n = e^{j 2 pi n / N}: phases spread uniformly over the circle."""
    if N < 1:
        raise ValueError("N must be >= 1")
    return PhasorChannel(tuple(cmath.exp(2j * math.pi * n / N) for n in range(1, N + 1)))


def tightness_channel(M: int, N: int) -> PhasorChannel:
    """h_n = e^{j 2 pi n / (M N)}: attains the fixed-N constant for W_M."""
    if M < 2 or N < 1:
        raise ValueError("need M >= 2 and N >= 1")
    return PhasorChannel(
        tuple(cmath.exp(2j * math.pi * n / (M * N)) for n in range(1, N + 1)))


def onoff_subset_check(ch: PhasorChannel, exhaustive: bool = False):
    """Subset S with |sum_{n in S} h_n| >= (1/pi) sum |h_n|.

    Returns (mask, ratio) where mask[n] is True for the kept antennas.
    The exhaustive variant enumerates all subsets and is limited to N <= 24.
    """
    if exhaustive:
        if len(ch) > 24:
            raise TooLarge("exhaustive subset search limited to N <= 24")
        sol = brute_force(ch, OnOff(), cap=2 ** 25)
    else:
        sol = solve_angle_sweep(ch, OnOff())
    mask = tuple(abs(w - 1.0) < 0.5 for w in sol.weights)
    return mask, sol.ratio
