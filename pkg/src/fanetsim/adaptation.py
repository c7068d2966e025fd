"""Threshold-ladder adaptive transmission controller.

Packet size grows by a fixed step each tick. When the loss predicted by the
current power's curve crosses that rung's threshold, the controller backs
off the packet size and escalates to the next power rung; crossing the
final rung's threshold terminates the run. Power never decreases.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from enum import Enum

from fanetsim.curves import CurveFamily, evaluate_curve


class TraceEvent(Enum):
    NONE = "none"
    ESCALATED = "escalated"
    TERMINATED = "terminated"


class NonTerminationError(RuntimeError):
    """The run exhausted its tick budget without crossing the final threshold."""


@dataclass(frozen=True)
class PowerRung:
    power_dbm: float
    loss_threshold_percent: float


@dataclass(frozen=True)
class AdaptationPolicy:
    """Escalation ladder plus packet-size schedule.

    One tick is one transmission interval (a minute, in the default
    labelling); the controller itself is unit-agnostic.
    """

    rungs: tuple[PowerRung, ...]
    initial_packet_bits: int = 20
    growth_step_bits: int = 10
    backoff_bits: int = 20
    max_ticks: int = 10000

    def __post_init__(self):
        if not self.rungs:
            raise ValueError("policy needs at least one power rung")
        powers = [r.power_dbm for r in self.rungs]
        if any(hi <= lo for lo, hi in zip(powers, powers[1:])):
            raise ValueError("rung powers must be strictly increasing")
        if self.initial_packet_bits < 1:
            raise ValueError("initial_packet_bits must be >= 1")
        if self.growth_step_bits < 0 or self.backoff_bits < 0:
            raise ValueError("growth_step_bits and backoff_bits must be >= 0")
        if self.max_ticks < 1:
            raise ValueError("max_ticks must be >= 1")


def default_policy() -> AdaptationPolicy:
    """Stock ladder: 5 dBm / 50%, 7 dBm / 40%, 9 dBm / 30%; start 20 bits, +10/tick, -20 on escalation."""
    return AdaptationPolicy(
        rungs=(PowerRung(5.0, 50.0), PowerRung(7.0, 40.0), PowerRung(9.0, 30.0)),
    )


@dataclass(frozen=True)
class TraceSample:
    tick: int
    packet_bits: int
    loss_percent: float
    power_dbm: float
    event: TraceEvent


@dataclass(frozen=True)
class ControllerState:
    tick: int
    packet_bits: int
    rung_index: int
    terminated: bool = False


def initial_state(policy: AdaptationPolicy) -> ControllerState:
    return ControllerState(tick=0, packet_bits=policy.initial_packet_bits, rung_index=0)


def _validate_against_family(policy: AdaptationPolicy, family: CurveFamily) -> None:
    for rung in policy.rungs:
        if family.curve_at(rung.power_dbm) is None:
            raise ValueError(f"no loss curve for rung power {rung.power_dbm} dBm")


def step(
    state: ControllerState, policy: AdaptationPolicy, family: CurveFamily
) -> tuple[ControllerState, TraceSample]:
    """Advance one tick: sample the loss, then apply threshold/growth rules.

    Escalation applies the backoff and power change before the
    unconditional per-tick growth, so a 40-bit escalation with backoff 20
    and growth 10 resumes at 30 bits on the next rung.
    """
    if state.terminated:
        raise ValueError("controller already terminated")
    rung = policy.rungs[state.rung_index]
    curve = family.curve_at(rung.power_dbm)
    if curve is None:
        raise ValueError(f"no loss curve for rung power {rung.power_dbm} dBm")
    loss = evaluate_curve(curve, state.packet_bits)

    final_rung = state.rung_index == len(policy.rungs) - 1
    if loss >= rung.loss_threshold_percent:
        if final_rung:
            sample = TraceSample(
                state.tick, state.packet_bits, loss, rung.power_dbm, TraceEvent.TERMINATED
            )
            return replace(state, terminated=True), sample
        event = TraceEvent.ESCALATED
        next_bits = state.packet_bits - policy.backoff_bits
        if next_bits < 1:
            raise ValueError(
                f"degenerate policy: backoff drops packet size to {next_bits} bits"
            )
        next_rung = state.rung_index + 1
    else:
        event = TraceEvent.NONE
        next_bits = state.packet_bits
        next_rung = state.rung_index

    sample = TraceSample(state.tick, state.packet_bits, loss, rung.power_dbm, event)
    next_state = ControllerState(
        tick=state.tick + 1,
        packet_bits=next_bits + policy.growth_step_bits,
        rung_index=next_rung,
    )
    return next_state, sample


def run_adaptation(policy: AdaptationPolicy, family: CurveFamily) -> tuple[TraceSample, ...]:
    """Run the controller to termination; error out after max_ticks samples."""
    _validate_against_family(policy, family)
    state = initial_state(policy)
    samples: list[TraceSample] = []
    while True:
        state, sample = step(state, policy, family)
        samples.append(sample)
        if sample.event is TraceEvent.TERMINATED:
            return tuple(samples)
        if len(samples) >= policy.max_ticks:
            raise NonTerminationError(
                f"no termination within {policy.max_ticks} ticks "
                f"(loss {sample.loss_percent:.2f}% at {sample.power_dbm} dBm)"
            )


@dataclass(frozen=True)
class TraceSummary:
    """Aggregates of one adaptation run."""

    dwell_ticks: tuple[tuple[float, int], ...]  # (power_dbm, samples at that power)
    peak_loss_percent: float
    peak_loss_tick: int
    final: TraceSample


def summarize_trace(trace: tuple[TraceSample, ...] | list[TraceSample]) -> TraceSummary:
    if not trace:
        raise ValueError("cannot summarize an empty trace")
    dwell: dict[float, int] = {}
    for sample in trace:
        dwell[sample.power_dbm] = dwell.get(sample.power_dbm, 0) + 1
    peak = max(trace, key=lambda s: s.loss_percent)
    return TraceSummary(
        dwell_ticks=tuple(dwell.items()),
        peak_loss_percent=peak.loss_percent,
        peak_loss_tick=peak.tick,
        final=trace[-1],
    )
