#!/usr/bin/env python3
"""Free-space link budget walkthrough.

Shows the building blocks one at a time: dBm/mW conversion, Friis gain,
path loss in dB, the two BER approximations, and the packet-loss formula,
ending with the full chain for a single UAV-to-UAV link.
"""

import math

from fanetsim import (
    BerModel,
    RadioParams,
    ber_from_snr,
    dbm_to_mw,
    friis_gain_linear,
    fspl_db,
    link_quality,
    packet_loss_prob,
)

print("=== power conversions ===")
for dbm in (0.0, 5.0, 7.0, 9.0):
    print(f"  {dbm:4.1f} dBm = {dbm_to_mw(dbm):.4f} mW")

print("\n=== free-space path loss at 2.4 GHz ===")
print(f"  {'d (m)':>8}  {'gain':>12}  {'FSPL (dB)':>10}")
for d in (10, 100, 200, 400, 1000, 2000):
    print(f"  {d:8d}  {friis_gain_linear(d, 2.4e9):12.3e}  {fspl_db(d, 2.4e9):10.3f}")
print("  doubling the distance adds", round(fspl_db(200, 2.4e9) - fspl_db(100, 2.4e9), 4), "dB")
print("  doubling the frequency adds", round(fspl_db(100, 4.8e9) - fspl_db(100, 2.4e9), 4), "dB")
print("  (both equal 20*log10(2) =", round(20 * math.log10(2), 4), "dB)")

print("\n=== BER approximations vs linear SNR ===")
print(f"  {'snr':>6}  {'0.5*exp(-snr/2)':>16}  {'0.5*exp(-snr)':>14}")
for snr in (0.0, 1.0, 2.0, 5.0, 10.0, 20.0):
    half = ber_from_snr(snr, BerModel.EXP_HALF_SNR)
    full = ber_from_snr(snr, BerModel.EXP_SNR)
    print(f"  {snr:6.1f}  {half:16.6e}  {full:14.6e}")

print("\n=== packet loss vs size at BER = 1e-3 ===")
for n in (10, 100, 1000, 10000):
    print(f"  {n:6d} bits -> loss {packet_loss_prob(1e-3, n) * 100:7.3f} %")

print("\n=== full chain: 800 m link, defaults (7 dBm, -100 dBm floor, 2.4 GHz) ===")
lq = link_quality(800.0, RadioParams(), 1000)
print(f"  rx power   {lq.rx_power_dbm:9.3f} dBm")
print(f"  snr        {lq.snr_db:9.3f} dB ({lq.snr_linear:.3f} linear)")
print(f"  ber        {lq.ber:.6e}")
print(f"  loss(1000) {lq.loss_prob * 100:9.3f} %")
