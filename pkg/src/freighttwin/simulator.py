"""Plan replay and Monte Carlo on-time evaluation.

Randomness contract (frozen; golden tests depend on it):

- Generator: numpy Philox (counter-based), one substream per sample, keyed
  ``Philox(key=[seed, sample_index])``. Sample results are therefore
  independent of evaluation order and reproducible across platforms.
- Per sample, one vector of standard normals is drawn in a single call:
  first one value per leg (in leg order), then one per transfer (in
  transfer order).
- Each duration is multiplied by a lognormal factor with mean 1 and
  coefficient of variation cv:  sigma^2 = ln(1 + cv^2), mu = -sigma^2/2,
  factor = exp(mu + sigma * z).  cv = 0 keeps every duration exact.
- Costs are never perturbed; the deadline is the binding uncertain
  constraint.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np
from numpy.random import Generator, Philox

from .errors import InconsistentPlanError, UnknownTransferError
from .netmodel import Network
from .optimizer import Leg, RoutePlan, Scenario, TransferStop, walk_arcs

_TIME_TOLERANCE = 1e-9
DEFAULT_SEED = 0


@dataclass(frozen=True)
class SimulationReport:
    samples: int
    on_time_probability: float
    completion_p50_hours: float
    completion_p95_hours: float
    mean_completion_hours: float
    per_leg_mean_hours: tuple[float, ...]
    seed_used: int


def report_to_dict(report: SimulationReport) -> dict:
    return {
        "samples": report.samples,
        "on_time_probability": report.on_time_probability,
        "completion_p50_hours": report.completion_p50_hours,
        "completion_p95_hours": report.completion_p95_hours,
        "mean_completion_hours": report.mean_completion_hours,
        "per_leg_mean_hours": list(report.per_leg_mean_hours),
        "seed_used": report.seed_used,
    }


def _timeline(net: Network, plan: RoutePlan) -> tuple[list[Leg], list[TransferStop], list[int | None]]:
    """Recompute the plan's timeline from network data, starting at t=0.

    The third element maps each leg index to the index of the transfer
    immediately preceding it (None when the leg follows directly).
    """
    legs: list[Leg] = []
    transfers: list[TransferStop] = []
    pre_transfer: list[int | None] = []
    t = 0.0
    last_mode = None
    for edge, tail, _head in walk_arcs(net, plan.origin, plan.edge_ids):
        stop_index: int | None = None
        if last_mode is not None and edge.mode is not last_mode:
            rule = net.transfer_by_key.get((tail, last_mode, edge.mode))
            if rule is None:
                raise UnknownTransferError(
                    f"no transfer rule at node {tail} for {last_mode.value}->{edge.mode.value}"
                )
            transfers.append(TransferStop(tail, last_mode, edge.mode, t, t + rule.transfer_time_hours))
            stop_index = len(transfers) - 1
            t = t + rule.transfer_time_hours
        depart = t
        t = t + edge.distance_miles / edge.speed_mph
        legs.append(Leg(edge.id, edge.mode, depart, t))
        pre_transfer.append(stop_index)
        last_mode = edge.mode
    return legs, transfers, pre_transfer


def replay_plan(net: Network, plan: RoutePlan) -> RoutePlan:
    """Re-derive every depart/arrive time from edge and transfer data and
    check the plan's own timeline against it (cross-engine consistency)."""
    legs, transfers, _ = _timeline(net, plan)
    if len(legs) != len(plan.legs):
        raise InconsistentPlanError(0, "leg_count", len(legs), len(plan.legs))
    for index, (fresh, stated) in enumerate(zip(legs, plan.legs)):
        if abs(fresh.depart_hours - stated.depart_hours) > _TIME_TOLERANCE:
            raise InconsistentPlanError(index, "depart_hours", fresh.depart_hours, stated.depart_hours)
        if abs(fresh.arrive_hours - stated.arrive_hours) > _TIME_TOLERANCE:
            raise InconsistentPlanError(index, "arrive_hours", fresh.arrive_hours, stated.arrive_hours)
    total_time = legs[-1].arrive_hours if legs else 0.0
    return replace(plan, legs=tuple(legs), transfers=tuple(transfers), total_time_hours=total_time)


def _lognormal_params(cv: float) -> tuple[float, float]:
    sigma_sq = math.log(1.0 + cv * cv)
    return -sigma_sq / 2.0, math.sqrt(sigma_sq)


def sample_factors(seed: int, sample_index: int, count: int, cv: float) -> np.ndarray:
    """Lognormal duration multipliers for one sample (the frozen RNG rule)."""
    if cv == 0.0 or count == 0:
        return np.ones(count)
    mu, sigma = _lognormal_params(cv)
    z = Generator(Philox(key=[seed, sample_index])).standard_normal(count)
    return np.exp(mu + sigma * z)


def monte_carlo(net: Network, plan: RoutePlan, s: Scenario, samples: int) -> SimulationReport:
    """Estimate on-time probability under lognormal travel-time noise.

    Deterministic given (scenario seed, samples); the plan timeline is
    re-derived from the network first, so a tampered plan fails loudly.
    """
    if samples < 1:
        raise ValueError(f"samples must be >= 1, got {samples}")
    checked = replay_plan(net, plan)
    legs, transfers, pre_transfer = _timeline(net, checked)
    leg_durations = [leg.arrive_hours - leg.depart_hours for leg in legs]
    transfer_durations = [t.end_hours - t.start_hours for t in transfers]
    n_legs = len(leg_durations)
    seed = s.seed if s.seed is not None else DEFAULT_SEED
    cv = s.travel_time_cv

    if cv == 0.0:
        # zero variance degenerates to the deterministic replay
        completion = checked.total_time_hours
        return SimulationReport(
            samples=samples,
            on_time_probability=1.0 if completion <= s.deadline_hours else 0.0,
            completion_p50_hours=completion,
            completion_p95_hours=completion,
            mean_completion_hours=completion,
            per_leg_mean_hours=tuple(leg_durations),
            seed_used=seed,
        )

    n_factors = n_legs + len(transfer_durations)
    completions = np.empty(samples)
    leg_sums = np.zeros(n_legs)
    on_time = 0
    for i in range(samples):
        factors = sample_factors(seed, i, n_factors, cv)
        t = 0.0
        for leg_index in range(n_legs):
            stop = pre_transfer[leg_index]
            if stop is not None:
                t += transfer_durations[stop] * factors[n_legs + stop]
            duration = leg_durations[leg_index] * factors[leg_index]
            leg_sums[leg_index] += duration
            t += duration
        completions[i] = t
        if t <= s.deadline_hours:
            on_time += 1

    return SimulationReport(
        samples=samples,
        on_time_probability=on_time / samples,
        completion_p50_hours=float(np.percentile(completions, 50)),
        completion_p95_hours=float(np.percentile(completions, 95)),
        mean_completion_hours=float(np.mean(completions)),
        per_leg_mean_hours=tuple(float(x) for x in leg_sums / samples) if n_legs else (),
        seed_used=seed,
    )
