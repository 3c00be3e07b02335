"""
Exact backtracking search for neighborhood-prime labelings, plus a brute-force oracle.
"""

import itertools
import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from nprimelabel.errors import UsageError
from nprimelabel.graph_core import Labeling

DEFAULT_NODE_BUDGET = 10**7
ORACLE_MAX_VERTICES = 9


class VertexOrder(Enum):
    DEGREE_DESCENDING = "deg"
    NATURAL = "nat"


class SearchStatus(Enum):
    FOUND = "FOUND"
    EXHAUSTED = "EXHAUSTED"
    INCONCLUSIVE = "INCONCLUSIVE"


@dataclass(frozen=True)
class SearchConfig:
    node_budget: Optional[int] = DEFAULT_NODE_BUDGET
    order: VertexOrder = VertexOrder.DEGREE_DESCENDING
    find_all: bool = False

    def __post_init__(self):
        if self.node_budget is not None and self.node_budget < 1:
            raise UsageError(f"node_budget must be >= 1, got {self.node_budget}")


@dataclass(frozen=True)
class SearchOutcome:
    status: SearchStatus
    labeling: Optional[Labeling]
    nodes_explored: int
    all_solutions: Optional[tuple] = None


class _BudgetExceeded(Exception):
    pass


def _vertex_order(g, order):
    vertices = range(1, g.vertex_count + 1)
    if order is VertexOrder.NATURAL:
        return list(vertices)
    # high-degree vertices sit in many neighborhoods, so they close neighborhoods first
    return sorted(vertices, key=lambda v: (-len(g.adjacency[v]), v))


def find_labeling(g, cfg=SearchConfig()):
    """
    Depth-first assignment of labels in cfg.order, smallest label first.

    Each vertex keeps a running gcd over its labeled neighbors; a branch dies as soon
    as the last neighbor of a degree >= 2 vertex is labeled and that gcd is not 1.

    With cfg.find_all, running out of budget gives INCONCLUSIVE even when some
    labelings were found; `all_solutions` then holds that partial list.
    """
    n = g.vertex_count
    adjacency = g.adjacency
    order = _vertex_order(g, cfg.order)
    degree = [len(a) for a in adjacency]
    running = [0] * (n + 1)
    unlabeled = degree[:]
    labels = [0] * (n + 1)
    used = [False] * (n + 1)
    solutions = []
    nodes = 0

    def descend(depth):
        nonlocal nodes
        if depth == n:
            solutions.append(Labeling(labels[1:]))
            return not cfg.find_all

        v = order[depth]
        for label in range(1, n + 1):
            if used[label]:
                continue
            if cfg.node_budget is not None and nodes >= cfg.node_budget:
                raise _BudgetExceeded()
            nodes += 1

            touched = []
            alive = True
            for w in adjacency[v]:
                touched.append((w, running[w]))
                running[w] = math.gcd(running[w], label)
                unlabeled[w] -= 1
                if unlabeled[w] == 0 and degree[w] >= 2 and running[w] != 1:
                    alive = False
                    break

            stop = False
            if alive:
                labels[v] = label
                used[label] = True
                stop = descend(depth + 1)
                used[label] = False
                labels[v] = 0

            for w, previous in touched:
                running[w] = previous
                unlabeled[w] += 1
            if stop:
                return True
        return False

    try:
        descend(0)
        exhausted_budget = False
    except _BudgetExceeded:
        exhausted_budget = True

    if solutions and not (cfg.find_all and exhausted_budget):
        status = SearchStatus.FOUND
    elif exhausted_budget:
        status = SearchStatus.INCONCLUSIVE
    else:
        status = SearchStatus.EXHAUSTED

    logging.debug(f"find_labeling: n={n} status={status.value} nodes={nodes}")
    return SearchOutcome(
        status,
        solutions[0] if solutions else None,
        nodes,
        tuple(solutions) if cfg.find_all else None,
    )


def _is_neighborhood_prime(adjacency, labels):
    for nbrs in adjacency:
        if len(nbrs) >= 2 and math.gcd(*(labels[u - 1] for u in nbrs)) != 1:
            return False
    return True


def brute_force_oracle(g, find_all=True):
    """Check every one of the n! bijections; ground truth for small graphs only."""
    n = g.vertex_count
    if n > ORACLE_MAX_VERTICES:
        raise UsageError(
            f"brute_force_oracle is limited to {ORACLE_MAX_VERTICES} vertices, got {n}"
        )

    solutions = []
    checked = 0
    for labels in itertools.permutations(range(1, n + 1)):
        checked += 1
        if _is_neighborhood_prime(g.adjacency, labels):
            solutions.append(Labeling(labels))
            if not find_all:
                break

    status = SearchStatus.FOUND if solutions else SearchStatus.EXHAUSTED
    return SearchOutcome(
        status,
        solutions[0] if solutions else None,
        checked,
        tuple(solutions) if find_all else None,
    )
