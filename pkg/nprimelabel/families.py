"""
Constructors for the graph families, each with one canonical vertex numbering.

The labelers index into these numberings directly, so they are part of the contract:

- Gear(n): 1 is the hub, 2..2n+1 run around the rim, odd rim vertices touch the hub.
- Snake(k, n): 1..m along the zigzag trace (m = (n-1)(k-1)+1) plus base chords
  between trace positions (i)(k-1)+1 and (i+1)(k-1)+1; base vertex u_j sits at
  trace position (j-1)(k-1)+1.
- StarGon(k, n): Snake(k, n+1) with its two end base vertices contracted into 1.
- Book(k, n): u1=1, u2=2, then each page's k-2 path vertices consecutively.
- Mobius(n): u_i = i, v_i = n+i.
- Caterpillar(counts): spine 1..s, then pendants grouped by interior spine vertex.
- Spider(lengths): center 1, then each leg numbered outward from the center.
- Banana(n, k): root 1, then star by star: u_i, w_i, and the k-2 other leaves.
- Firecracker(n, k): u_i = i, v_i = n+i, w_i = 2n+i, remaining leaves after 3n.
- k-ary, Cayley and binary trees: level order, root 1.
"""

import random
from collections import deque
from dataclasses import dataclass
from enum import Enum

import networkx as nx

from nprimelabel.errors import InvalidSpec
from nprimelabel.graph_core import Graph, contract_vertices


class Family(Enum):
    PATH = "path"
    CYCLE = "cycle"
    GEAR = "gear"
    SNAKE = "snake"
    STAR_GON = "stargon"
    BOOK = "book"
    MOBIUS = "mobius"
    CATERPILLAR = "caterpillar"
    SPIDER = "spider"
    BANANA = "banana"
    FIRECRACKER = "firecracker"
    FULL_KARY = "fullkary"
    CAYLEY = "cayley"
    FULL_BINARY = "fullbinary"
    COMPLETE_BINARY = "completebinary"
    RANDOM_TREE = "random"


TREE_FAMILIES = frozenset(
    {
        Family.PATH,
        Family.CATERPILLAR,
        Family.SPIDER,
        Family.BANANA,
        Family.FIRECRACKER,
        Family.FULL_KARY,
        Family.CAYLEY,
        Family.FULL_BINARY,
        Family.COMPLETE_BINARY,
        Family.RANDOM_TREE,
    }
)

# family -> (parameter names, minimum per parameter); list-valued families are checked apart
_BOUNDS = {
    Family.PATH: (("n",), (1,)),
    Family.CYCLE: (("n",), (3,)),
    Family.GEAR: (("n",), (3,)),
    Family.SNAKE: (("k", "n"), (3, 2)),
    Family.STAR_GON: (("k", "n"), (3, 3)),
    Family.BOOK: (("k", "n"), (3, 1)),
    Family.MOBIUS: (("n",), (3,)),
    Family.BANANA: (("n", "k"), (1, 3)),
    Family.FIRECRACKER: (("n", "k"), (1, 1)),
    Family.FULL_KARY: (("k",), (2,)),
    Family.CAYLEY: (("k",), (3,)),
    Family.FULL_BINARY: ((), ()),
    Family.COMPLETE_BINARY: (("n_nodes",), (1,)),
    Family.RANDOM_TREE: (("n", "seed"), (1, None)),
}


@dataclass(frozen=True)
class FamilySpec:
    """
    Tagged parameter record selecting one graph family.

    `params` holds the integer parameters in the order of the family's signature
    (for Caterpillar the pendant counts, for Spider the leg lengths); `shape` holds
    level-order internal/leaf decisions for the k-ary, Cayley and full binary trees.
    """

    family: Family
    params: tuple = ()
    shape: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "params", tuple(int(p) for p in self.params))
        object.__setattr__(self, "shape", tuple(bool(s) for s in self.shape))
        _validate(self)

    def __str__(self):
        values = [str(p) for p in self.params]
        if self.family in (Family.FULL_KARY, Family.CAYLEY, Family.FULL_BINARY):
            values.append("".join("1" if s else "0" for s in self.shape))
        return f"{self.family.value}:{','.join(values)}"


def _validate(spec):
    family, params = spec.family, spec.params
    if family is Family.CATERPILLAR:
        if any(c < 0 for c in params):
            raise InvalidSpec(f"caterpillar pendant counts must be >= 0, got {list(params)}")
        return
    if family is Family.SPIDER:
        if len(params) < 3:
            raise InvalidSpec(f"a spider needs >= 3 legs, got {len(params)}")
        if any(length < 1 for length in params):
            raise InvalidSpec(f"spider legs must have length >= 1, got {list(params)}")
        return

    names, minimums = _BOUNDS[family]
    if len(params) != len(names):
        raise InvalidSpec(
            f"{family.value} takes {len(names)} parameter(s) ({', '.join(names) or 'none'}), "
            f"got {len(params)}"
        )
    for name, minimum, value in zip(names, minimums, params):
        if minimum is not None and value < minimum:
            raise InvalidSpec(f"{family.value}: {name} must be >= {minimum}, got {value}")
    if family is Family.BOOK and params[0] > 5:
        raise InvalidSpec(f"book: k must be 3, 4 or 5, got {params[0]}")
    if spec.shape and family not in (Family.FULL_KARY, Family.CAYLEY, Family.FULL_BINARY):
        raise InvalidSpec(f"{family.value} does not take a shape descriptor")


def generate(spec):
    """Build the canonical graph of a FamilySpec; deterministic for identical specs."""
    builder = _BUILDERS[spec.family]
    return builder(spec)


def random_tree(n, seed):
    """Uniformly random labeled tree on 1..n from a seeded random Prüfer sequence."""
    if n < 1:
        raise InvalidSpec(f"random: n must be >= 1, got {n}")
    if n == 1:
        return Graph(1, frozenset())
    rng = random.Random(seed)
    sequence = [rng.randrange(n) for _ in range(n - 2)]
    tree = nx.from_prufer_sequence(sequence)
    return Graph.from_edges(n, ((u + 1, v + 1) for u, v in tree.edges()))


def _path_edges(vertices):
    return list(zip(vertices, vertices[1:]))


def _path(spec):
    (n,) = spec.params
    return Graph.from_edges(n, _path_edges(range(1, n + 1)))


def _cycle(spec):
    (n,) = spec.params
    return Graph.from_edges(n, _path_edges(range(1, n + 1)) + [(n, 1)])


def _gear(spec):
    (n,) = spec.params
    rim = list(range(2, 2 * n + 2))
    edges = _path_edges(rim) + [(rim[-1], rim[0])]
    edges += [(1, 2 * i + 1) for i in range(1, n + 1)]
    return Graph.from_edges(2 * n + 1, edges)


def snake_graph(k, n):
    m = (n - 1) * (k - 1) + 1
    edges = _path_edges(range(1, m + 1))
    edges += [(i * (k - 1) + 1, (i + 1) * (k - 1) + 1) for i in range(n - 1)]
    return Graph.from_edges(m, edges)


def _snake(spec):
    return snake_graph(*spec.params)


def _star_gon(spec):
    k, n = spec.params
    snake = snake_graph(k, n + 1)
    return contract_vertices(snake, 1, snake.vertex_count)


def _book(spec):
    k, n = spec.params
    per_page = k - 2
    edges = [(1, 2)]
    for i in range(n):
        page = list(range(3 + i * per_page, 3 + (i + 1) * per_page))
        edges += _path_edges([1] + page + [2])
    return Graph.from_edges(2 + n * per_page, edges)


def _mobius(spec):
    (n,) = spec.params
    u = list(range(1, n + 1))
    v = list(range(n + 1, 2 * n + 1))
    edges = _path_edges(u) + _path_edges(v) + list(zip(u, v))
    edges += [(v[0], u[-1]), (u[0], v[-1])]
    return Graph.from_edges(2 * n, edges)


def _caterpillar(spec):
    counts = spec.params
    spine = len(counts) + 2
    edges = _path_edges(range(1, spine + 1))
    next_id = spine + 1
    for j, count in enumerate(counts):
        for _ in range(count):
            edges.append((j + 2, next_id))
            next_id += 1
    return Graph.from_edges(next_id - 1, edges)


def _spider(spec):
    edges = []
    next_id = 2
    for length in spec.params:
        leg = list(range(next_id, next_id + length))
        edges += _path_edges([1] + leg)
        next_id += length
    return Graph.from_edges(next_id - 1, edges)


def _banana(spec):
    n, k = spec.params
    edges = []
    for i in range(n):
        u = 2 + i * k
        w = u + 1
        edges += [(1, u), (u, w)]
        edges += [(w, leaf) for leaf in range(w + 1, u + k)]
    return Graph.from_edges(n * k + 1, edges)


def _firecracker(spec):
    n, k = spec.params
    edges = _path_edges(range(1, n + 1))
    if k >= 2:
        edges += [(i, n + i) for i in range(1, n + 1)]
    if k >= 3:
        edges += [(n + i, 2 * n + i) for i in range(1, n + 1)]
    extra = k - 3
    for i in range(1, n + 1):
        first = 3 * n + (i - 1) * extra + 1
        edges += [(n + i, leaf) for leaf in range(first, first + extra)]
    return Graph.from_edges(n * k, edges)


def _level_order_tree(shape, root_children, children):
    edges = []
    queue = deque([1])
    next_id = 2
    consumed = 0
    while queue:
        node = queue.popleft()
        internal = shape[consumed] if consumed < len(shape) else False
        consumed += 1
        if internal:
            count = root_children if node == 1 else children
            for child in range(next_id, next_id + count):
                edges.append((node, child))
                queue.append(child)
            next_id += count
    if consumed < len(shape):
        raise InvalidSpec(
            f"shape has {len(shape)} decisions but the tree only has {consumed} nodes"
        )
    return Graph.from_edges(next_id - 1, edges)


def _full_kary(spec):
    (k,) = spec.params
    return _level_order_tree(spec.shape, k, k)


def _cayley(spec):
    (k,) = spec.params
    return _level_order_tree(spec.shape, k, k - 1)


def _full_binary(spec):
    return _level_order_tree(spec.shape, 2, 2)


def _complete_binary(spec):
    (n_nodes,) = spec.params
    return Graph.from_edges(n_nodes, ((i // 2, i) for i in range(2, n_nodes + 1)))


def _random_tree(spec):
    return random_tree(*spec.params)


_BUILDERS = {
    Family.PATH: _path,
    Family.CYCLE: _cycle,
    Family.GEAR: _gear,
    Family.SNAKE: _snake,
    Family.STAR_GON: _star_gon,
    Family.BOOK: _book,
    Family.MOBIUS: _mobius,
    Family.CATERPILLAR: _caterpillar,
    Family.SPIDER: _spider,
    Family.BANANA: _banana,
    Family.FIRECRACKER: _firecracker,
    Family.FULL_KARY: _full_kary,
    Family.CAYLEY: _cayley,
    Family.FULL_BINARY: _full_binary,
    Family.COMPLETE_BINARY: _complete_binary,
    Family.RANDOM_TREE: _random_tree,
}
