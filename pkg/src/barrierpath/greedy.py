"""Greedy power assignment along a path and its (opt, phi) summary.

The greedy rule pushes power forward: the first vertex gets nothing and
every later vertex receives exactly the deficit its incoming edge still has.
For unit coefficients this is a cheapest assignment activating the path.
"""
from __future__ import annotations

from dataclasses import dataclass

from .graph import NonUnitCoefficients, Path, PowerAssignment, Rational, WeightedGraph, as_rational


@dataclass(frozen=True)
class PathProfile:
    """Minimum activation cost of a path and the greedy power left at its end."""

    opt: Rational = 0
    phi: Rational = 0


def greedy_powers(weights) -> list:
    """Greedy powers for a path given only its edge weights (len(weights)+1 entries)."""
    powers = [0]
    for w in weights:
        powers.append(max(0, w - powers[-1]))
    return powers


def _unit_weights(path: Path, g: WeightedGraph) -> list:
    path.check_in(g)
    for k in path.edges:
        if not g.edges[k].unit:
            raise NonUnitCoefficients("greedy assignment needs alpha = beta = 1 on edge %d" % k)
    return path.weights(g)


def greedy_assign(path: Path, g: WeightedGraph) -> PowerAssignment:
    powers = greedy_powers(_unit_weights(path, g))
    return PowerAssignment(zip(path.vertices, powers))


def profile(path: Path, g: WeightedGraph) -> PathProfile:
    powers = greedy_powers(_unit_weights(path, g))
    return PathProfile(sum(powers), powers[-1])


def profile_of_weights(weights) -> PathProfile:
    prof = PathProfile()
    for w in weights:
        prof = extend(prof, w)
    return prof


def extend(prof: PathProfile, w_new: Rational) -> PathProfile:
    """Profile after appending one edge of weight ``w_new`` to the path."""
    w_new = as_rational(w_new)
    if w_new <= 0:
        raise ValueError("edge weight must be positive")
    phi = max(0, w_new - prof.phi)
    return PathProfile(prof.opt + phi, phi)
