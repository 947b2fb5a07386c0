"""Brute-force reference computations, independent of the library code."""
import itertools


def warping_paths(n, m):
    """Every warping path from (0, 0) to (n - 1, m - 1)."""
    def extend(path):
        i, j = path[-1]
        if (i, j) == (n - 1, m - 1):
            yield tuple(path)
            return
        for di, dj in ((1, 0), (1, 1), (0, 1)):
            if i + di < n and j + dj < m:
                yield from extend(path + [(i + di, j + dj)])

    yield from extend([(0, 0)])


def dtw_enumerated(s, t):
    return min(sum(abs(s[i] - t[j]) for i, j in p) for p in warping_paths(len(s), len(t)))


def sublevel_components(q, x):
    """Count maximal runs of consecutive indices with q[i] <= x."""
    count, inside = 0, False
    for v in q:
        if v <= x and not inside:
            count += 1
        inside = v <= x
    return count


def bottleneck_bruteforce(a, b):
    """Bottleneck distance by trying every bijection of the augmented diagrams."""
    a = [p for p in a if p[0] != p[1]]
    b = [p for p in b if p[0] != p[1]]
    left = [("pt", p) for p in a] + [("diag", p) for p in b]
    right = [("pt", p) for p in b] + [("diag", p) for p in a]

    def cost(u, v):
        if u[0] == "pt" and v[0] == "pt":
            return max(abs(u[1][0] - v[1][0]), abs(u[1][1] - v[1][1]))
        if u[0] == "pt" and v[0] == "diag":
            return (u[1][1] - u[1][0]) / 2 if u[1] == v[1] else float("inf")
        if u[0] == "diag" and v[0] == "pt":
            return (v[1][1] - v[1][0]) / 2 if u[1] == v[1] else float("inf")
        return 0.0

    if not left:
        return 0.0
    return min(max(cost(u, right[k]) for u, k in zip(left, perm))
               for perm in itertools.permutations(range(len(right))))
