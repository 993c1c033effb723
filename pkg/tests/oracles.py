"""Slow, obviously-correct reference computations used only by the tests.

Nothing here imports the vectorised code paths under test.
"""

from fractions import Fraction
import math

import numpy as np


def gtdm_bruteforce(px, G, K=1):
    """Exact GTDM via nested loops and rational arithmetic."""
    px = [[int(v) for v in row] for row in np.asarray(px)]
    h, w = len(px), len(px[0])
    n_neigh = (2 * K + 1) ** 2 - 1
    s = [Fraction(0)] * G
    counts = [0] * G
    n = 0
    for y in range(K, h - K):
        for x in range(K, w - K):
            total = 0
            for dy in range(-K, K + 1):
                for dx in range(-K, K + 1):
                    if dy == 0 and dx == 0:
                        continue
                    total += px[y + dy][x + dx]
            i = px[y][x]
            s[i] += abs(i - Fraction(total, n_neigh))
            counts[i] += 1
            n += 1
    p = [Fraction(c, n) for c in counts]
    return s, p, n


def coarseness_ref(s, p, eps):
    return 1.0 / (eps + float(sum(pi * si for pi, si in zip(p, s))))


def complexity_ref(s, p, n):
    total = Fraction(0)
    G = len(s)
    for i in range(G):
        for j in range(G):
            if p[i] == 0 or p[j] == 0:
                continue
            total += Fraction(abs(i - j)) / (n * (p[i] + p[j])) * (p[i] * s[i] + p[j] * s[j])
    return float(total)


def strength_ref(s, p, eps):
    num = Fraction(0)
    G = len(s)
    for i in range(G):
        for j in range(G):
            if p[i] == 0 or p[j] == 0:
                continue
            num += (p[i] + p[j]) * (i - j) ** 2
    return float(num) / (eps + float(sum(s)))


def histogram_ref(px, G):
    counts = [0] * G
    total = 0
    for row in np.asarray(px):
        for v in row:
            counts[int(v)] += 1
            total += 1
    return [c / total for c in counts]


def hist_features_ref(p):
    mean = sum(i * pi for i, pi in enumerate(p))
    var = sum((i - mean) ** 2 * pi for i, pi in enumerate(p))
    m3 = sum((i - mean) ** 3 * pi for i, pi in enumerate(p))
    m4 = sum((i - mean) ** 4 * pi for i, pi in enumerate(p))
    if var > 0:
        skew = m3 / var ** 1.5
        kurt = m4 / var ** 2 - 3
    else:
        skew, kurt = 0.0, -3.0
    energy = sum(pi * pi for pi in p)
    entropy = -sum(pi * math.log2(pi) for pi in p if pi > 0)
    return [mean, skew, kurt, energy, entropy]


# E, NE, N, NW, W, SW, S, SE in (row, col) steps
_RING = [(0, 1), (-1, 1), (-1, 0), (-1, -1), (0, -1), (1, -1), (1, 0), (1, 1)]


def lbp_label_ref(centre, neighbours, P=8, U_T=2):
    bits = [1 if g - centre >= 0 else 0 for g in neighbours]
    U = abs(bits[P - 1] - bits[0]) + sum(abs(bits[i] - bits[i - 1]) for i in range(1, P))
    return sum(bits) if U <= U_T else P + 1


def lbp_histogram_ref(px, P=8, U_T=2):
    px = np.asarray(px)
    h, w = px.shape
    counts = [0] * (P + 2)
    total = 0
    for y in range(1, h - 1):
        for x in range(1, w - 1):
            neigh = [int(px[y + dy, x + dx]) for dy, dx in _RING]
            counts[lbp_label_ref(int(px[y, x]), neigh, P, U_T)] += 1
            total += 1
    return [c / total for c in counts]


def soergel_ref(a, b):
    num = sum(abs(x - y) for x, y in zip(a, b))
    den = sum(max(x, y) for x, y in zip(a, b))
    return 0.0 if den == 0 else num / den


def features_ref(px, G, gtdm_levels=None, K=1, eps=1e-6):
    """18-dim descriptor assembled from the independent oracles above."""
    px = np.asarray(px)
    g_px, g_G = px, G
    if gtdm_levels is not None and G > gtdm_levels:
        g_px = np.array([[v * gtdm_levels // G for v in row] for row in px.tolist()])
        g_G = gtdm_levels
    s, p, n = gtdm_bruteforce(g_px, g_G, K)
    gt = [coarseness_ref(s, p, eps), complexity_ref(s, p, n), strength_ref(s, p, eps)]
    return gt + hist_features_ref(histogram_ref(px, G)) + lbp_histogram_ref(px)
