"""Regenerates revenue_trace.csv: a synthetic hourly demand/revenue trace.

Demand oscillates inside [120, 460]; revenue is 2.6 x demand with seeded
Gaussian noise, so most points fall between the cost bounds of the fig2
scenario.
"""
import csv
import math
import random

rng = random.Random(20201)
with open("revenue_trace.csv", "w", newline="") as fh:
    out = csv.writer(fh, lineterminator="\n")
    out.writerow(["t", "demand", "value"])
    for k in range(96):
        t = 3600.0 * k
        demand = 290 + 170 * math.sin(2 * math.pi * k / 48) * (0.8 + 0.2 * math.cos(k / 7))
        value = 2.6 * demand + rng.gauss(0, 45)
        out.writerow([f"{t:.0f}", f"{demand:.2f}", f"{value:.2f}"])
