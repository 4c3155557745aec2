#!/usr/bin/env python3
"""Evaluates the scalar reference values frozen into the unit tests.

Uses mpmath at 50 digits so the printed values do not share rounding paths
with the C++ implementation.
"""
from mpmath import mp, mpf, log, sqrt

mp.dps = 50


def fitness(k_in, k_out, alpha):
    return mpf(k_in) / (mpf(k_in) + k_out) ** mpf(alpha)


def ranking(d_in, d_out, alpha):
    return 2 * mpf(d_in) / (mpf(d_in) + d_out) ** mpf(alpha)


def scales(v_min, a, x):
    return [mpf(v_min) + (mpf(a) - v_min) * (1 - log(i) / log(x)) for i in range(1, x + 1)]


print("fitness(6,2,0.5) =", fitness(6, 2, 0.5), " 6/sqrt(8) =", 6 / sqrt(8))
print("fitness(6,2,1) =", fitness(6, 2, 1))
print("ranking(3,5,0.8) =", ranking(3, 5, 0.8))
print("ranking(2,1,1) =", ranking(2, 1, 1))
print("scales(0.5,1,4) =", [mp.nstr(v, 20) for v in scales(0.5, 1.0, 4)])
# Two 5-cliques joined by one edge, community = clique A (k_in 20, k_out 1).
# Adding the bridge endpoint b from clique B: d_in 1, degree 5.
print("clique gain a=1 =", fitness(22, 4, 1) - fitness(20, 1, 1))
