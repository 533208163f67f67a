"""Exact evaluation of the component-size bounds.

All values are Python ints (arbitrary precision).  The theorem-level
constants come in two readings: the *tight* ones used inside the chordless
cycle case and the *barred* ones (an extra factor ``16 D^2``) that the
induction carries; verification is done against the barred values.
"""

from __future__ import annotations


def f1(d: int) -> int:
    """Cap on 1-components from the cycle-plus-stable-set lemma."""
    if d < 0:
        raise ValueError("d must be non-negative")
    return 2 * d + 5


def f2(d: int, D: int) -> int:
    """Cap on 2-components from the cycle-plus-stable-set lemma."""
    if d < 0 or D < 1:
        raise ValueError("need d >= 0 and D >= 1")
    return d * (6 * D) ** (3 * d + 2)


def path_lemma_caps(d: int, D: int) -> tuple[int, int]:
    """(1-component cap, 2-component cap) for the path-plus-stable-set lemma."""
    if d < 2 or D < 1:
        raise ValueError("need d >= 2 and D >= 1")
    return 2 * d + 1, (3 * D) ** (3 * d - 4)


def barred_bounds(D: int) -> tuple[int, int]:
    if D < 1:
        raise ValueError("D must be at least 1")
    g1 = 16 * D * D * f1(D)
    return g1, g1 * f2(D, D * f1(D))


def tight_bounds(D: int) -> tuple[int, int]:
    """Constants of the chordless-cycle case: caps for 1-components on the
    outer face and for 2-components near it."""
    if D < 1:
        raise ValueError("D must be at least 1")
    return f1(D), f1(D) * f2(D, D * f1(D))


def global_bound(D: int) -> int:
    """Cap on every monochromatic component of a near-triangulated graph."""
    return 6 * D * D * barred_bounds(D)[1]


def final_bound(D: int) -> int:
    """(15 D)^(32 D + 8): cap for any plane graph of maximum degree D."""
    if D < 1:
        raise ValueError("D must be at least 1")
    return (15 * D) ** (32 * D + 8)


def outer_one_component_bound(D: int) -> int:
    return 6 ** 4 * D ** 3


def recolor_bound(l: int, D: int, k: int) -> int:
    """Size cap after recolouring at most ``l`` vertices when every
    i-component had size at most ``k`` in a graph of max degree ``D``."""
    if l < 1 or D < 1 or k < 0:
        raise ValueError("need l >= 1, D >= 1, k >= 0")
    return l * D * k + l


def recolor_bound_rounded(l: int, D: int, k: int) -> int:
    if l < 1 or D < 1 or k < 0:
        raise ValueError("need l >= 1, D >= 1, k >= 0")
    return 2 * l * D * k


def bounds_table(D: int) -> dict[str, int]:
    g1, g2 = barred_bounds(D)
    t1, t2 = tight_bounds(D)
    return {
        "delta": D,
        "f1": f1(D),
        "f2": f2(D, D),
        "f2_lemma": f2(D, D * f1(D)),
        "tight_1": t1,
        "tight_2": t2,
        "barred_1": g1,
        "barred_2": g2,
        "global": global_bound(D),
        "outer_1": outer_one_component_bound(D),
        "final": final_bound(D),
    }
