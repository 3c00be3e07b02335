"""
Constructive neighborhood-prime labelings, one per graph family.

Every labeler returns a Labeling over the canonical numbering of `families`.
"""

from collections import deque
from dataclasses import dataclass
from enum import Enum

from nprimelabel.errors import (
    InvalidSpec,
    PreconditionViolated,
    UnsupportedParameters,
    UnsupportedStructure,
)
from nprimelabel.families import Family, FamilySpec, generate, snake_graph
from nprimelabel.graph_core import (
    Labeling,
    as_labeling,
    attach_pendant,
    contract_vertices,
    is_tree,
    verify,
)
from nprimelabel.number_theory import bertrand_prime, coprime_matching


class ShiftKind(Enum):
    INTERIOR_MIN = "interior-min"
    HEAD_MIN = "head-min"


@dataclass(frozen=True)
class ShiftVariant:
    variant: ShiftKind
    offset: int
    length: int

    def __post_init__(self):
        if self.offset < 0 or self.length < 1:
            raise InvalidSpec(f"shifted path needs offset >= 0 and length >= 1, got {self}")


def shifted_path_labels(v):
    """
    Labels {N+1..N+m} along a path so that the two neighbors of any interior
    position receive consecutive integers.

    INTERIOR_MIN puts the smallest label at the second position, HEAD_MIN at the first.
    """
    n, m = v.offset, v.length
    labels = []
    for i in range(1, m + 1):
        if v.variant is ShiftKind.INTERIOR_MIN:
            labels.append(n + m // 2 + (i + 1) // 2 if i % 2 else n + i // 2)
        else:
            # ceil(m/2): with floor, odd m would hand out N+2 twice
            labels.append(n + (i + 1) // 2 if i % 2 else n + (m + 1) // 2 + i // 2)
    return labels


def label_path(n):
    return Labeling(shifted_path_labels(ShiftVariant(ShiftKind.INTERIOR_MIN, 0, n)))


def label_gear(n):
    if n < 3:
        raise InvalidSpec(f"gear: n must be >= 3, got {n}")
    labels = list(range(1, 2 * n + 2))
    if n % 3 == 1:
        # swap the labels of v_{2n-1} and v_{2n+1}
        labels[2 * n - 2], labels[2 * n] = 2 * n + 1, 2 * n - 1
    return Labeling(labels)


def _is_power_of_two(x):
    return x >= 1 and x & (x - 1) == 0


def snake_cases(k, n):
    """Names of the large-polygon snake case families, (i) to (vi), that cover (k, n)."""
    cases = []
    if k % 4 == 1 and n - 1 >= 2 and _is_power_of_two(n - 1):
        cases.append("i")
    if k % 4 == 0 and n >= 4 and _is_power_of_two(n):
        cases.append("ii")
    if k % 4 == 0 and n - 1 >= 2 and _is_power_of_two(n - 1):
        cases.append("iii")
    if k - 2 >= 4 and _is_power_of_two(k - 2) and n % 4 == 3:
        cases.append("iv")
    if k % 2 == 0 and n == 3:
        cases.append("v")
    if k - 3 >= 4 and _is_power_of_two(k - 3) and n % 2 == 0:
        cases.append("vi")
    return cases


def label_snake(k, n):
    if k < 3 or n < 2:
        raise InvalidSpec(f"snake needs k >= 3 and n >= 2, got k={k}, n={n}")
    m = (n - 1) * (k - 1) + 1

    if k == 3:
        return Labeling(range(1, m + 1))

    if k == 4:
        labels = list(range(1, m + 1))
        for i in range(1, n):
            # trace positions 3i-1 (v_i) and 3i (w_i)
            labels[3 * i - 2], labels[3 * i - 1] = 3 * i, 3 * i - 1
        return Labeling(labels)

    if k == 5:
        labels = [0] * m
        for i in range(1, n + 1):
            base = 4 * i - 3
            labels[base - 1] = 4 * i - 1 if i % 3 == 0 and i < n else 4 * i - 3
            if i < n:
                labels[base] = 4 * i - 3 if i % 3 == 0 else 4 * i - 1
                labels[base + 1] = 4 * i
                labels[base + 2] = 4 * i - 2
        return Labeling(labels)

    if not snake_cases(k, n):
        raise UnsupportedParameters(
            f"snake: no constructive labeling for k={k}, n={n} (k >= 6 needs one of the "
            f"six power-of-two case families)"
        )
    return label_path(m)


def contract_one_max(g, f, u1, u2):
    """Contract u1 (label 1) with u2 (label n); the merged vertex keeps label 1."""
    f = as_labeling(f)
    degree1, degree2 = g.degree(u1), g.degree(u2)
    if not verify(g, f).ok:
        raise PreconditionViolated("contract_one_max: the input labeling is not neighborhood-prime")
    if f[u1] != 1:
        raise PreconditionViolated(f"contract_one_max: f(u1) must be 1, got {f[u1]}")
    if f[u2] != g.vertex_count:
        raise PreconditionViolated(
            f"contract_one_max: f(u2) must be {g.vertex_count}, got {f[u2]}"
        )
    if (min(u1, u2), max(u1, u2)) in g.edges:
        raise PreconditionViolated(f"contract_one_max: u1={u1} and u2={u2} are adjacent")
    if degree1 <= 1 and degree2 <= 1:
        raise PreconditionViolated("contract_one_max: u1 or u2 must have degree > 1")

    labels = f.labels[: u2 - 1] + f.labels[u2:]
    return contract_vertices(g, u1, u2), Labeling(labels)


def label_star_gon(k, n):
    if k not in (3, 4, 5):
        raise UnsupportedParameters(f"stargon: only k in 3, 4, 5 is supported, got k={k}")
    if n < 3:
        raise InvalidSpec(f"stargon: n must be >= 3, got {n}")
    snake = snake_graph(k, n + 1)
    _, labeling = contract_one_max(snake, label_snake(k, n + 1), 1, snake.vertex_count)
    return labeling


def label_book5(n):
    if n < 1:
        raise InvalidSpec(f"book: n must be >= 1, got {n}")
    # u1, u2, then page 1 (v1, w1, x1)
    labels = [3, 1, 2, 4, 5]
    for i in range(2, n + 1):
        if i % 2:
            labels += [3 * i, 3 * i + 1, 3 * i + 2]
        else:
            labels += [3 * i, 3 * i + 2, 3 * i + 1]
    return Labeling(labels)


def label_mobius(n):
    if n < 3:
        raise InvalidSpec(f"mobius: n must be >= 3, got {n}")
    return Labeling([2 * i - 1 for i in range(1, n + 1)] + [2 * i for i in range(1, n + 1)])


def extend_pendant(g, f, v):
    """Attach a new leaf n+1 to v and label it n+1."""
    f = as_labeling(f)
    degree = g.degree(v)
    if not verify(g, f).ok:
        raise PreconditionViolated("extend_pendant: the input labeling is not neighborhood-prime")
    if degree <= 1:
        raise PreconditionViolated(f"extend_pendant: vertex {v} has degree {degree} <= 1")
    return attach_pendant(g, v), Labeling(f.labels + (g.vertex_count + 1,))


def label_caterpillar(pendant_counts):
    spec = FamilySpec(Family.CATERPILLAR, pendant_counts)
    spine = len(spec.params) + 2
    g = generate(FamilySpec(Family.PATH, (spine,)))
    f = label_path(spine)
    for j, count in enumerate(spec.params):
        for _ in range(count):
            g, f = extend_pendant(g, f, j + 2)
    return f


def _spider_order(lengths):
    order = list(range(len(lengths)))
    odd = [j for j in order if lengths[j] % 2]
    if odd:
        order.remove(odd[0])
        order.insert(0, odd[0])
    return order


def label_spider(leg_lengths):
    spec = FamilySpec(Family.SPIDER, leg_lengths)
    lengths = spec.params
    starts = [2 + sum(lengths[:j]) for j in range(len(lengths))]
    labels = [0] * (1 + sum(lengths))
    labels[0] = 1

    order = _spider_order(lengths)
    reflect_last = all(length % 2 == 0 for length in lengths)
    offset = 1
    for position, j in enumerate(order):
        leg = shifted_path_labels(ShiftVariant(ShiftKind.HEAD_MIN, offset, lengths[j]))
        if reflect_last and position == len(order) - 1:
            leg.reverse()
        labels[starts[j] - 1 : starts[j] - 1 + lengths[j]] = leg
        offset += lengths[j]
    return Labeling(labels)


def label_banana(n, k):
    if n < 3 or k < 4:
        raise UnsupportedParameters(f"banana: needs n >= 3 and k >= 4, got n={n}, k={k}")
    labels = [1]
    for i in range(1, n + 1):
        w = (i - 1) * (k - 1) + n + 2
        labels += [i + 1, w] + list(range(w + 1, i * (k - 1) + n + 2))
    return Labeling(labels)


def label_firecracker(n, k):
    if n < 1 or k < 3:
        raise UnsupportedParameters(f"firecracker: needs n >= 1 and k >= 3, got n={n}, k={k}")
    path = label_path(n).labels
    p = bertrand_prime(n)
    middle = [x for x in range(n + 1, 2 * n + 1) if x != p] + [p]
    matching = coprime_matching(n)
    leaves = [matching[x] for x in path]

    g = generate(FamilySpec(Family.FIRECRACKER, (n, 3)))
    f = Labeling(path + tuple(middle) + tuple(leaves))
    for i in range(1, n + 1):
        for _ in range(k - 3):
            g, f = extend_pendant(g, f, n + i)
    return f


def _walk_to_leaf(adjacency, start, previous, taken):
    walk = [start]
    current = start
    while len(adjacency[current]) > 1:
        nxt = min(w for w in adjacency[current] if w != previous and w not in taken)
        walk.append(nxt)
        previous, current = current, nxt
    return walk


def _path_through(adjacency, v, taken):
    """Leaf-to-leaf path through v that avoids `taken`, always stepping to the lowest id."""
    first, second = sorted(w for w in adjacency[v] if w not in taken)[:2]
    head = _walk_to_leaf(adjacency, first, v, taken)
    tail = _walk_to_leaf(adjacency, second, v, taken)
    return head[::-1] + [v] + tail


def _steiner_path(adjacency, required):
    """Smallest subtree spanning `required`, as a vertex sequence; None if it is not a path."""
    degree = {v: len(adjacency[v]) for v in range(1, len(adjacency))}
    alive = set(degree)
    queue = deque(v for v in sorted(alive) if degree[v] <= 1 and v not in required)
    while queue:
        v = queue.popleft()
        if v not in alive:
            continue
        alive.discard(v)
        for w in adjacency[v]:
            if w in alive:
                degree[w] -= 1
                if degree[w] <= 1 and w not in required:
                    queue.append(w)
    if any(degree[v] > 2 for v in alive):
        return None

    start = min(v for v in alive if degree[v] <= 1)
    sequence = [start]
    previous = None
    while True:
        step = [w for w in adjacency[sequence[-1]] if w in alive and w != previous]
        if not step:
            return sequence
        previous = sequence[-1]
        sequence.append(step[0])


def _first_path(adjacency, degree2):
    if not degree2:
        hub = min(v for v in range(1, len(adjacency)) if len(adjacency[v]) > 1)
        return _path_through(adjacency, hub, set())
    core = _steiner_path(adjacency, degree2)
    if core is None:
        raise UnsupportedStructure(
            "label_bivalent_free: the degree-2 vertices do not lie on one leaf-to-leaf path"
        )
    if len(core) == 1:
        return _path_through(adjacency, core[0], set())
    taken = set(core)
    head = _walk_to_leaf(adjacency, _off_path_neighbor(adjacency, core[0], taken), core[0], taken)
    tail = _walk_to_leaf(adjacency, _off_path_neighbor(adjacency, core[-1], taken), core[-1], taken)
    return head[::-1] + core + tail


def _off_path_neighbor(adjacency, v, taken):
    return min(w for w in adjacency[v] if w not in taken)


def label_bivalent_free(t):
    """
    Cover every non-leaf with leaf-to-leaf paths, each labeled by a shifted path
    labeling, then hand the leftover labels to the remaining leaves.

    The first path carries all degree-2 vertices (if any); later paths branch off
    non-leaves adjacent to interiors of earlier paths, in FIFO order.
    """
    if not is_tree(t):
        raise UnsupportedStructure("label_bivalent_free: the graph is not a tree")
    n = t.vertex_count
    if n <= 2:
        return label_path(n)

    adjacency = t.adjacency
    degree2 = {v for v in range(1, n + 1) if len(adjacency[v]) == 2}
    labels = [0] * (n + 1)
    labeled = set()
    queue = deque()
    queued = set()
    offset = 0

    path = _first_path(adjacency, degree2)
    while True:
        variant = ShiftVariant(ShiftKind.INTERIOR_MIN, offset, len(path))
        for v, label in zip(path, shifted_path_labels(variant)):
            labels[v] = label
        labeled.update(path)
        offset += len(path)

        for x in path[1:-1]:
            for w in adjacency[x]:
                if w not in labeled and w not in queued and len(adjacency[w]) > 1:
                    queue.append(w)
                    queued.add(w)
        if not queue:
            break
        path = _path_through(adjacency, queue.popleft(), labeled)

    for v in range(1, n + 1):
        if v not in labeled:
            offset += 1
            labels[v] = offset
    return Labeling(labels[1:])


def label_full_binary(t):
    """
    Breadth-first rank from vertex 1 for full binary trees, so that siblings get
    consecutive labels. Binary trees with single-child nodes go through
    label_bivalent_free.
    """
    if not is_tree(t):
        raise UnsupportedStructure("label_full_binary: the graph is not a tree")
    adjacency = t.adjacency
    rank = [0] * (t.vertex_count + 1)
    full = True
    queue = deque([(1, 0)])
    seen = 0
    while queue:
        v, parent = queue.popleft()
        seen += 1
        rank[v] = seen
        children = [w for w in adjacency[v] if w != parent]
        if len(children) > 2:
            raise UnsupportedStructure(
                f"label_full_binary: node {v} has {len(children)} children, not a binary tree"
            )
        full = full and len(children) != 1
        queue.extend((w, v) for w in children)

    if full:
        return Labeling(rank[1:])
    return label_bivalent_free(t)


def label_family(spec):
    """Generate the canonical graph of `spec` and its constructive labeling."""
    g = generate(spec)
    p = spec.params
    family = spec.family

    if family is Family.PATH:
        f = label_path(*p)
    elif family is Family.GEAR:
        f = label_gear(*p)
    elif family is Family.SNAKE:
        f = label_snake(*p)
    elif family is Family.STAR_GON:
        f = label_star_gon(*p)
    elif family is Family.BOOK:
        if p[0] != 5:
            raise UnsupportedParameters(f"book: only k=5 has a constructive labeling, got k={p[0]}")
        f = label_book5(p[1])
    elif family is Family.MOBIUS:
        f = label_mobius(*p)
    elif family is Family.CATERPILLAR:
        f = label_caterpillar(p)
    elif family is Family.SPIDER:
        f = label_spider(p)
    elif family is Family.BANANA:
        f = label_banana(*p)
    elif family is Family.FIRECRACKER:
        f = label_firecracker(*p)
    elif family in (Family.FULL_BINARY, Family.COMPLETE_BINARY):
        f = label_full_binary(g)
    elif family in (Family.FULL_KARY, Family.CAYLEY, Family.RANDOM_TREE):
        f = label_bivalent_free(g)
    else:
        raise UnsupportedParameters(f"{family.value}: no constructive labeling in this toolkit")
    return g, f
