"""
The built-in catalog of (G, H) pairs used by the verification suites.

Families are written as short specs:

    "path:2-6"                 path graphs P2 .. P6
    "complete_bipartite:3,3"   a single graph K3,3
    "random_regular:8,3"       random 3-regular graph on 8 vertices (seeded)
    "petersen"
"""

from __future__ import annotations

from typing import Iterable

from .errors import ParameterError
from .graphs import Graph, generate

DEFAULT_G_FAMILIES = (
    "path:2-6",
    "cycle:3-7",
    "complete:2-5",
    "star:3-4",
    # graphs outside the QE class, needed to reach the QEC(G) > 0 branches
    "complete_bipartite:2,3",
    "complete_bipartite:2,4",
    "complete_bipartite:2,5",
    "complete_bipartite:3,3",
    "complete_bipartite:3,4",
    "complete_bipartite:4,4",
    "petersen",
)

DEFAULT_H_FAMILIES = (
    "empty:1-4",
    "complete:2-4",
    "cycle:3-6",
    "petersen",
    "complete_bipartite:3,3",
    "random_regular:8,3",
)

DEFAULT_SEED = 7


def expand_family(spec: str, seed: int = DEFAULT_SEED) -> list[Graph]:
    family, _, arg = spec.partition(":")
    family = family.strip()
    arg = arg.strip()
    if not arg:
        return [generate(family, seed=seed)]
    try:
        if "-" in arg:
            lo, hi = (int(t) for t in arg.split("-"))
            return [generate(family, k, seed=seed) for k in range(lo, hi + 1)]
        params = [int(t) for t in arg.split(",")]
    except ValueError as exc:
        raise ParameterError(f"bad family spec {spec!r}") from exc
    return [generate(family, *params, seed=seed)]


def build(specs: Iterable[str], seed: int = DEFAULT_SEED) -> list[Graph]:
    graphs = []
    for spec in specs:
        graphs.extend(expand_family(spec, seed))
    return graphs


def default_pairs(seed: int = DEFAULT_SEED) -> list[tuple[Graph, Graph]]:
    Gs = build(DEFAULT_G_FAMILIES, seed)
    Hs = build(DEFAULT_H_FAMILIES, seed)
    return [(G, H) for G in Gs for H in Hs]
