"""Bracketed scalar root finding: bisection plus a guarded secant polish."""

from __future__ import annotations

from .errors import NumericalError


def _polish(f, lo, hi, flo, fhi, steps):
    # f(lo) < 0 < f(hi); secant steps that would leave the bracket fall back
    # to the midpoint.
    for _ in range(steps):
        if fhi == flo:
            break
        x = hi - fhi * (hi - lo) / (fhi - flo)
        if not lo < x < hi:
            x = 0.5 * (lo + hi)
        fx = f(x)
        if fx == 0.0:
            return x
        if fx < 0.0:
            lo, flo = x, fx
        else:
            hi, fhi = x, fx
    return lo if abs(flo) <= abs(fhi) else hi


def bracket_zero(f, lo, hi, flo=None, fhi=None, *, xtol, secant_steps=3):
    """Zero of ``f`` in [lo, hi] given endpoint values of opposite sign."""
    flo = f(lo) if flo is None else flo
    fhi = f(hi) if fhi is None else fhi
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if (flo < 0.0) == (fhi < 0.0):
        raise NumericalError(f"no sign change on [{lo}, {hi}]")
    if flo > 0.0:
        g = lambda x: -f(x)  # noqa: E731
        return bracket_zero(g, lo, hi, -flo, -fhi, xtol=xtol, secant_steps=secant_steps)
    while hi - lo > xtol:
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi:
            break
        fm = f(mid)
        if fm == 0.0:
            return mid
        if fm < 0.0:
            lo, flo = mid, fm
        else:
            hi, fhi = mid, fm
    return _polish(f, lo, hi, flo, fhi, secant_steps)


def pinned_zero(f, lo, hi, *, xtol, secant_steps=3, context=""):
    """Unique zero of an increasing ``f`` on the open interval (lo, hi).

    The endpoints are never evaluated (they are typically poles, with
    f -> -inf at ``lo`` and f -> +inf at ``hi``); midpoint signs alone steer
    the bracket.  Raises ``NumericalError`` if only one sign is ever seen.
    """
    seen_neg = seen_pos = False
    flo = fhi = None
    a, b = lo, hi
    while b - a > xtol:
        mid = 0.5 * (a + b)
        if mid == a or mid == b:
            break
        fm = f(mid)
        if fm == 0.0:
            return mid
        if fm < 0.0:
            a, flo, seen_neg = mid, fm, True
        else:
            b, fhi, seen_pos = mid, fm, True
    if not (seen_neg and seen_pos):
        where = f" in {context}" if context else ""
        raise NumericalError(f"no sign change detected{where}")
    return _polish(f, a, b, flo, fhi, secant_steps)


def expanding_bracket(f, lo, step, *, max_doublings=60):
    """First point right of ``lo`` where ``f`` turns positive.

    Doubles the trial step until ``f(lo + step) > 0``; returns the bracket
    end.  Raises ``NumericalError`` once the doubling budget is spent.
    """
    g = step
    for _ in range(max_doublings):
        x = lo + g
        fx = f(x)
        if fx == 0.0:
            return x, fx
        if fx > 0.0:
            return x, fx
        g *= 2.0
    raise NumericalError(
        f"no sign change within {max_doublings} doublings right of {lo}"
    )
