"""Exhaustive search for (weakly) k-uniform labelings over a bounded universe.

This is the ground truth for small instances: it enumerates candidate
labelings over subsets of {0..universe_max}, backtracking with partial
edge checks, and accepts a full assignment only if ``verify`` confirms
the requested predicate.  A completed enumeration that finds nothing is
proof of non-existence *within the bounded space*; running out of step
budget proves nothing and is reported as a distinct abort error.

Candidate order is deterministic: vertices in descending-degree order
(ties by ascending id, so dense vertices fail fast), and for each vertex
the labels in ascending (size, bitmask) order.  The first hit is
therefore a stable function of the inputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Literal

from .errors import BudgetExceededError
from .graphs import Graph
from .intset import IntSet
from .labeling import Labeling, verify

DEFAULT_BUDGET = 100_000_000

SearchMode = Literal["uniform_k", "weakly_k"]


@dataclass(frozen=True)
class SearchSpace:
    """Candidate labels are subsets of {0..universe_max} with admissible sizes.

    weakly_k mode admits only sizes 1 and k; uniform_k mode admits sizes
    1..max_label_size.
    """

    universe_max: int
    max_label_size: int
    mode: SearchMode
    k: int

    def __post_init__(self):
        if self.universe_max < 0:
            raise ValueError("universe_max must be non-negative")
        if self.max_label_size < 1:
            raise ValueError("max_label_size must be positive")
        if self.k < 1:
            raise ValueError("k must be a positive integer")
        if self.mode not in ("uniform_k", "weakly_k"):
            raise ValueError(f"unknown search mode {self.mode!r}")

    def allowed_sizes(self) -> tuple[int, ...]:
        if self.mode == "weakly_k":
            return (1,) if self.k == 1 else (1, self.k)
        return tuple(range(1, self.max_label_size + 1))


@dataclass(frozen=True)
class SearchResult:
    labelings: tuple[Labeling, ...]
    exhausted: bool  # True iff the whole space was enumerated
    steps: int


def _colex_subsets(universe_size: int, size: int) -> Iterator[tuple[int, ...]]:
    """Size-``size`` subsets of {0..universe_size-1} in ascending bitmask order."""
    if size == 0:
        yield ()
        return
    for top in range(size - 1, universe_size):
        for rest in _colex_subsets(top, size - 1):
            yield rest + (top,)


def run_search(g: Graph, space: SearchSpace, limit: int = 1, budget: int = DEFAULT_BUDGET) -> SearchResult:
    """Backtracking enumeration; collects up to ``limit`` verified labelings.

    A step is one candidate label tried or one incremental edge check;
    exceeding ``budget`` raises BudgetExceededError carrying the partial
    finds.  ``exhausted`` in the result is True only when the full space
    was covered, which is what licenses "none exists in this space".
    """
    if budget < 1:
        raise ValueError("budget must be positive")
    if limit < 0:
        raise ValueError("limit must be non-negative")
    if limit == 0:
        return SearchResult(labelings=(), exhausted=False, steps=0)

    n = g.vertex_count
    k = space.k
    universe_size = space.universe_max + 1
    order = sorted(range(n), key=lambda v: (-g.degree(v), v))
    pos_of = {v: i for i, v in enumerate(order)}
    earlier = [[u for u in g.adjacency[v] if pos_of[u] < i] for i, v in enumerate(order)]
    sizes = [s for s in space.allowed_sizes() if s <= universe_size]
    candidates = {s: list(_colex_subsets(universe_size, s)) for s in sizes}

    unassigned: tuple[int, ...] = ()
    assigned: list[tuple[int, ...]] = [unassigned] * n
    used_labels: set[tuple[int, ...]] = set()
    used_edge_labels: set[tuple[int, ...]] = set()
    found: list[Labeling] = []
    steps = 0

    want_weakly = space.mode == "weakly_k"

    def accept_full() -> bool:
        labeling = Labeling(g, tuple(IntSet(t) for t in assigned))
        report = verify(g, labeling)
        value = report.is_weakly_uniform if want_weakly else report.uniform_k
        if value == k:
            found.append(labeling)
        return len(found) >= limit

    def dfs(i: int) -> bool:
        nonlocal steps
        if i == n:
            return accept_full()
        v = order[i]
        nbr_labels = [assigned[u] for u in earlier[i]]
        nbr_sizes = [len(t) for t in nbr_labels]
        for size in sizes:
            # |A+B| for integer sets lies in [|A|+|B|-1, |A||B|]; edges need it == k
            if any(s + size - 1 > k or s * size < k for s in nbr_sizes):
                continue
            for cand in candidates[size]:
                steps += 1
                if steps > budget:
                    raise BudgetExceededError(steps, tuple(found))
                if cand in used_labels:
                    continue
                new_edge_labels: list[tuple[int, ...]] = []
                ok = True
                for t in nbr_labels:
                    steps += 1
                    if size == 1:
                        c = cand[0]
                        lab = tuple(x + c for x in t)
                    elif len(t) == 1:
                        b = t[0]
                        lab = tuple(x + b for x in cand)
                    else:
                        lab = tuple(sorted({x + y for x in cand for y in t}))
                    if len(lab) != k or lab in used_edge_labels or lab in new_edge_labels:
                        ok = False
                        break
                    new_edge_labels.append(lab)
                if not ok:
                    continue
                assigned[v] = cand
                used_labels.add(cand)
                used_edge_labels.update(new_edge_labels)
                stop = dfs(i + 1)
                assigned[v] = unassigned
                used_labels.discard(cand)
                used_edge_labels.difference_update(new_edge_labels)
                if stop:
                    return True
        return False

    stopped = dfs(0)
    return SearchResult(labelings=tuple(found), exhausted=not stopped, steps=steps)


def search(g: Graph, space: SearchSpace, budget: int = DEFAULT_BUDGET) -> Labeling | None:
    """First labeling in the space matching the mode, or None if none exists.

    None is a definitive negative for the bounded space (the enumeration
    completed).  An out-of-budget run raises instead of returning None.
    """
    result = run_search(g, space, limit=1, budget=budget)
    return result.labelings[0] if result.labelings else None


def enumerate_all(g: Graph, space: SearchSpace, limit: int, budget: int = DEFAULT_BUDGET) -> tuple[Labeling, ...]:
    """Up to ``limit`` distinct valid labelings in deterministic order."""
    return run_search(g, space, limit=limit, budget=budget).labelings
