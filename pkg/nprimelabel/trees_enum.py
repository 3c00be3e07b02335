"""
Free-tree enumeration and the all-trees conjecture scan.
"""

import itertools
import logging
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import networkx as nx

from nprimelabel.errors import UsageError
from nprimelabel.file_io import save_file, write_edge_list
from nprimelabel.graph_core import Graph, is_tree
from nprimelabel.search import SearchConfig, SearchStatus, find_labeling

MAX_TREE_ORDER = 18
PRUFER_MAX_ORDER = 9


def tree_centers(t):
    """The one or two centers of a tree, found by peeling leaves layer by layer."""
    n = t.vertex_count
    degree = [len(a) for a in t.adjacency]
    layer = [v for v in range(1, n + 1) if degree[v] <= 1]
    remaining = n
    while remaining > 2:
        remaining -= len(layer)
        next_layer = []
        for v in layer:
            for w in t.adjacency[v]:
                degree[w] -= 1
                if degree[w] == 1:
                    next_layer.append(w)
        layer = next_layer
    return sorted(layer)


def _rooted_code(adjacency, root):
    parent = {root: 0}
    order = [root]
    for v in order:
        for w in adjacency[v]:
            if w != parent[v]:
                parent[w] = v
                order.append(w)

    codes = {}
    for v in reversed(order):
        children = sorted(codes.pop(w) for w in adjacency[v] if w != parent[v])
        codes[v] = "(" + "".join(children) + ")"
    return codes[root]


def ahu_canonical(t):
    """AHU encoding rooted at the center; equal strings iff the trees are isomorphic."""
    if not is_tree(t):
        raise UsageError("ahu_canonical needs a tree")
    return min(_rooted_code(t.adjacency, c) for c in tree_centers(t))


def _check_order(n, limit):
    if not 1 <= n <= limit:
        raise UsageError(f"tree order must be in 1..{limit}, got {n}")


def _rooted_level_sequences(n):
    """All rooted trees on n nodes as canonical level sequences, by successor steps."""
    levels = list(range(n))
    while True:
        yield levels
        p = max((i for i in range(1, n) if levels[i] > 1), default=None)
        if p is None:
            return
        q = max(i for i in range(p) if levels[i] == levels[p] - 1)
        levels = levels[:]
        for i in range(p, n):
            levels[i] = levels[i - (p - q)]


def _tree_from_levels(levels):
    edges = []
    last_at_level = {}
    for i, level in enumerate(levels):
        if level > 0:
            edges.append((last_at_level[level - 1] + 1, i + 1))
        last_at_level[level] = i
    return Graph.from_edges(len(levels), edges)


def _rooted_at_centroid(levels):
    n = len(levels)
    branch_sizes = []
    for level in levels[1:]:
        if level == 1:
            branch_sizes.append(0)
        branch_sizes[-1] += 1
    return all(size <= n // 2 for size in branch_sizes)


def enumerate_free_trees(n):
    """One tree per isomorphism class on n vertices, in a fixed order."""
    _check_order(n, MAX_TREE_ORDER)
    seen = set()
    for levels in _rooted_level_sequences(n):
        if not _rooted_at_centroid(levels):
            continue
        tree = _tree_from_levels(levels)
        code = ahu_canonical(tree)
        if code not in seen:
            seen.add(code)
            yield tree


def enumerate_free_trees_prufer(n):
    """Cross-check generator: decode every Prüfer sequence and keep the first of each class."""
    _check_order(n, PRUFER_MAX_ORDER)
    if n == 1:
        yield Graph(1, frozenset())
        return
    seen = set()
    for sequence in itertools.product(range(n), repeat=n - 2):
        decoded = nx.from_prufer_sequence(list(sequence))
        tree = Graph.from_edges(n, ((u + 1, v + 1) for u, v in decoded.edges()))
        code = ahu_canonical(tree)
        if code not in seen:
            seen.add(code)
            yield tree


@dataclass(frozen=True)
class SizeReport:
    n: int
    tree_count: int
    solved_count: int
    failures: tuple
    inconclusive: tuple
    seconds: float


@dataclass(frozen=True)
class ConjectureReport:
    sizes: tuple

    @property
    def holds(self):
        return all(not row.failures for row in self.sizes)

    @property
    def inconclusive_count(self):
        return sum(len(row.inconclusive) for row in self.sizes)

    def format_table(self):
        lines = [
            f"{'n':>3} {'trees':>8} {'solved':>8} {'failed':>7} "
            f"{'inconclusive':>13} {'seconds':>9}"
        ]
        for row in self.sizes:
            lines.append(
                f"{row.n:>3} {row.tree_count:>8} {row.solved_count:>8} {len(row.failures):>7} "
                f"{len(row.inconclusive):>13} {row.seconds:>9.2f}"
            )
        return "\n".join(lines) + "\n"


def _search_tree(job):
    tree, cfg = job
    return find_labeling(tree, cfg).status


def _record_failure(tree, code, fail_dir, index):
    text = write_edge_list(tree)
    logging.warning(f"Counterexample candidate on {tree.vertex_count} vertices ({code}):\n{text}")
    if fail_dir:
        save_file(os.path.join(fail_dir, f"failure_n{tree.vertex_count}_{index}.el"), text)


def scan_conjecture(max_n, cfg=SearchConfig(), jobs=1, fail_dir=None):
    """Run the searcher on every free tree with at most max_n vertices."""
    _check_order(max_n, MAX_TREE_ORDER)
    rows = []
    executor = ProcessPoolExecutor(max_workers=jobs) if jobs > 1 else None
    try:
        for n in range(1, max_n + 1):
            started = time.perf_counter()
            trees = list(enumerate_free_trees(n))
            jobs_for_n = [(tree, cfg) for tree in trees]
            # lazy: each failure is reported as soon as its search returns
            if executor is None:
                statuses = map(_search_tree, jobs_for_n)
            else:
                statuses = executor.map(_search_tree, jobs_for_n)

            failures, inconclusive = [], []
            for tree, status in zip(trees, statuses):
                if status is SearchStatus.EXHAUSTED:
                    code = ahu_canonical(tree)
                    failures.append(code)
                    _record_failure(tree, code, fail_dir, len(failures))
                elif status is SearchStatus.INCONCLUSIVE:
                    inconclusive.append(ahu_canonical(tree))

            row = SizeReport(
                n=n,
                tree_count=len(trees),
                solved_count=len(trees) - len(failures) - len(inconclusive),
                failures=tuple(sorted(failures)),
                inconclusive=tuple(sorted(inconclusive)),
                seconds=time.perf_counter() - started,
            )
            logging.info(
                f"n={n}: {row.tree_count} trees, {row.solved_count} solved, "
                f"{len(row.failures)} failed, {len(row.inconclusive)} inconclusive"
            )
            rows.append(row)
    finally:
        if executor is not None:
            executor.shutdown()
    return ConjectureReport(tuple(rows))
