#!/usr/bin/env python3
"""Independent re-derivation of every construction's size bound and vertex
count, as plain arithmetic.

These functions deliberately do not import the construction code: they are
the second entry of the double-entry bookkeeping for the parameter
formulas, and the acceptance suite compares them against the recorded
provenance of the built instances.
"""

from __future__ import annotations


def mrss_soafn(vectors, target, kprime):
    """(vertex count, bound) of the tree-gadget stage.

    Per vector s: four index sets of max(s)+1 vertices, a 2*max(s)+2 set,
    a 6-vertex block and three connectors.  Per coordinate i: a port, a
    pendant forbidden set of column-sum size and a pendant necessary set of
    2*col(i) - 2*t(i) + 2.  Plus the hub and its 4 pendants.
    """
    k = len(target)
    n = len(vectors)
    col = [sum(v[i] for v in vectors) for i in range(k)]
    tree = sum(4 * (max(s) + 1) + (2 * max(s) + 2) + 6 + 3 for s in vectors)
    hub = 1 + 4
    ports = k + sum(col[i] + (2 * col[i] - 2 * target[i] + 2) for i in range(k))
    vertices = tree + hub + ports
    bound = (
        sum(2 * (col[i] - target[i] + 1) for i in range(k))
        + sum(2 * (max(s) + 1) for s in vectors)
        + 5 * n + 3 + kprime
    )
    return vertices, bound


def collapse(old_r, old_necessary):
    """(added vertices, bound) of the necessary-set collapse."""
    return 2 + (old_necessary - 1), old_r + 1


def soafn_oaf(old_r, old_n):
    """(vertex count, bound) after the bridge stage: 10n + 2 and r + 4n."""
    return 10 * old_n + 2, old_r + 4 * old_n


def oaf_oa(old_n, r, deg_one_forbidden):
    """Vertex count after hanging a 4r-by-4r pendant tree under every
    degree-one forbidden vertex; the bound is unchanged."""
    return old_n + deg_one_forbidden * (4 * r + 16 * r * r), r


def phs(k, family_sizes):
    """(vertex count, bound) of the hitting-set construction: bound 5k."""
    vertices = (
        len(family_sizes)          # one vertex per family set
        + k * k                    # the grid
        + 4 * k * (1 + 10 * k)     # forced clique with pendants
        + 12 * k + 1               # poison clique
        + k + k                    # row and column vertices
    )
    return vertices, 5 * k


def closest_string(k, n, d):
    """(vertex count, bound, declared cover size): bound 4n+2d+1, cover
    18n+2d+2."""
    vertices = (
        k
        + 2 * n
        + (3 * n + 2 * d + 1) * (1 + 12 * n)
        + 12 * n + 1
        + n
    )
    return vertices, 4 * n + 2 * d + 1, 18 * n + 2 * d + 2


def vc_bipartite(n, m, k):
    """(vertex count, bound) of the bipartite construction: bound k+5."""
    kp = k + 5
    return 2 * n + m + 5 + 5 * 4 * kp, kp


def vc_split(n, m, k):
    """(vertex count, bound) of the split construction: bound k+m+1."""
    return n + m + (m + 1) + 4 * (n + m), k + m + 1


def apex(n, m, k):
    """(vertex count, bound) of the apex construction: bound m+k+2."""
    return n + m + 3 * m + 2 + 6 * n, m + k + 2


def circle(n, degree_sum, k):
    """(vertex count, bound) of the circle construction: bound 2m+k with
    2m = degree sum."""
    r = degree_sum + k  # 2m + k
    return n + degree_sum + degree_sum * 2 * r, r


def main():
    ref_vectors = ((2, 1), (1, 1), (1, 2))
    ref_target = (3, 3)
    v, r = mrss_soafn(ref_vectors, ref_target, 2)
    print(f"mrss tree stage on the reference instance: {v} vertices, bound {r}")
    print(f"hitting set k=2, one singleton set: {phs(2, [1])}")
    print(f"closest string k=2 n=2 d=1: {closest_string(2, 2, 1)}")
    print(f"vertex cover bipartite n=2 m=1 k=1: {vc_bipartite(2, 1, 1)}")
    print(f"vertex cover split n=3 m=3 k=2: {vc_split(3, 3, 2)}")
    print(f"apex n=4 m=4 k=2: {apex(4, 4, 2)}")
    print(f"circle n=4 degree-sum=8 k=2: {circle(4, 8, 2)}")


if __name__ == "__main__":
    main()
