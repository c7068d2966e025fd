#!/usr/bin/env python3
"""The adaptive-transmission control loop, tick by tick.

Packet size starts at 20 bits and grows 10 bits per tick. Whenever the
predicted loss crosses the active rung's threshold (50% at 5 dBm, 40% at
7 dBm), the controller drops 20 bits and escalates the power; crossing
the final 30% threshold at 9 dBm ends the run.
"""

from fanetsim import default_curve_family, default_policy, run_adaptation, summarize_trace

family = default_curve_family()
policy = default_policy()

print("rungs:", ", ".join(f"{r.power_dbm:g} dBm @ {r.loss_threshold_percent:g}%" for r in policy.rungs))
print(
    f"start {policy.initial_packet_bits} bits, +{policy.growth_step_bits}/tick, "
    f"-{policy.backoff_bits} on escalation\n"
)

trace = run_adaptation(policy, family)

print(f"{'tick':>5} {'bits':>6} {'loss %':>8} {'dBm':>5}  event")
for sample in trace:
    marker = "" if sample.event.value == "none" else f" <-- {sample.event.value}"
    print(
        f"{sample.tick:5d} {sample.packet_bits:6d} {sample.loss_percent:8.2f} "
        f"{sample.power_dbm:5g} {marker}"
    )

summary = summarize_trace(trace)
print("\nsummary")
for power, ticks in summary.dwell_ticks:
    print(f"  dwell at {power:g} dBm: {ticks} ticks")
print(f"  peak loss {summary.peak_loss_percent:.2f}% at tick {summary.peak_loss_tick}")
print(
    f"  finished at tick {summary.final.tick}: {summary.final.packet_bits} bits, "
    f"{summary.final.loss_percent:.2f}% loss, {summary.final.power_dbm:g} dBm"
)
