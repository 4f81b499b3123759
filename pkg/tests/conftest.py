import math
from itertools import combinations

from hypothesis import settings

from delpezzo.linalg import det_bareiss

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def maximal_minor_gcd(rows):
    """gcd of the k x k minors of a k x n integer matrix (product of its invariant factors)."""
    k = len(rows)
    n = len(rows[0])
    g = 0
    for cols in combinations(range(n), k):
        g = math.gcd(g, int(det_bareiss([[row[c] for c in cols] for row in rows])))
    return g
