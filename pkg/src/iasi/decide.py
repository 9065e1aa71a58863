"""Closed-form existence decisions for (weakly) k-uniform labelings.

A graph admits a k-uniform labeling iff k is odd or the graph is
bipartite; it admits a weakly k-uniform labeling for k > 1 iff it is
bipartite, and always for k = 1.  Positive decisions are constructively
backed (the matching constructor succeeds); negative ones carry an odd
cycle as the certificate.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from .graphs import Bipartition, Graph, bipartition, find_odd_cycle

Rule = Literal[
    "k_odd",
    "bipartite_any_k",
    "nonbipartite_even_k",
    "weakly_k1_always",
    "weakly_bipartite",
    "weakly_nonbipartite",
]


@dataclass(frozen=True)
class Decision:
    exists: bool
    rule: Rule
    certificate: Bipartition | tuple[int, ...] | None = None


def admits_uniform(g: Graph, k: int) -> Decision:
    """Does ``g`` admit a k-uniform labeling?  True iff k odd or g bipartite.

    When both disjuncts hold the reported rule is k_odd; the bipartition
    is then not computed.
    """
    if k < 1:
        raise ValueError("k must be a positive integer")
    if k % 2 == 1:
        return Decision(exists=True, rule="k_odd")
    sides = bipartition(g)
    if sides is not None:
        return Decision(exists=True, rule="bipartite_any_k", certificate=sides)
    return Decision(exists=False, rule="nonbipartite_even_k", certificate=find_odd_cycle(g))


def admits_weakly_uniform(g: Graph, k: int) -> Decision:
    """Does ``g`` admit a weakly k-uniform labeling?

    k = 1 always (distinct Sidon singletons); k > 1 iff bipartite.
    """
    if k < 1:
        raise ValueError("k must be a positive integer")
    if k == 1:
        return Decision(exists=True, rule="weakly_k1_always")
    sides = bipartition(g)
    if sides is not None:
        return Decision(exists=True, rule="weakly_bipartite", certificate=sides)
    return Decision(exists=False, rule="weakly_nonbipartite", certificate=find_odd_cycle(g))
