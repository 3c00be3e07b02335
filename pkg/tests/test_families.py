import networkx as nx
import pytest

from nprimelabel.errors import InvalidSpec
from nprimelabel.families import TREE_FAMILIES, Family, FamilySpec, generate, random_tree
from nprimelabel.graph_core import Graph, is_tree


def counts(family, *params, shape=()):
    g = generate(FamilySpec(family, params, shape))
    return g.vertex_count, g.edge_count


def snake_reference(k, n):
    """Snake built the long way: a base path plus a (k-2)-vertex arc per base edge."""
    g = nx.path_graph(n)
    next_id = n
    for i in range(n - 1):
        arc = list(range(next_id, next_id + k - 2))
        nx.add_path(g, [i] + arc + [i + 1])
        next_id += k - 2
    return g


class TestFamilySpec:
    def test_str(self):
        assert str(FamilySpec(Family.SNAKE, (9, 3))) == "snake:9,3"
        assert str(FamilySpec(Family.FULL_BINARY, (), (True, False, True))) == "fullbinary:101"

    def test_params_become_tuple(self):
        assert FamilySpec(Family.SPIDER, [2, 2, 2]).params == (2, 2, 2)

    @pytest.mark.parametrize(
        "family, params",
        [
            (Family.PATH, (0,)),
            (Family.CYCLE, (2,)),
            (Family.GEAR, (2,)),
            (Family.SNAKE, (2, 3)),
            (Family.SNAKE, (3, 1)),
            (Family.STAR_GON, (3, 2)),
            (Family.BOOK, (6, 2)),
            (Family.BOOK, (2, 2)),
            (Family.MOBIUS, (2,)),
            (Family.BANANA, (2, 2)),
            (Family.FIRECRACKER, (0, 3)),
            (Family.FULL_KARY, (1,)),
            (Family.CAYLEY, (2,)),
            (Family.COMPLETE_BINARY, (0,)),
            (Family.GEAR, (3, 4)),
            (Family.SNAKE, (3,)),
        ],
    )
    def test_out_of_range(self, family, params):
        with pytest.raises(InvalidSpec):
            FamilySpec(family, params)

    def test_message_names_bound(self):
        with pytest.raises(InvalidSpec, match="n must be >= 3, got 2"):
            FamilySpec(Family.GEAR, (2,))

    def test_spider_needs_three_legs(self):
        with pytest.raises(InvalidSpec, match="3 legs"):
            FamilySpec(Family.SPIDER, (2, 3))

    def test_spider_leg_length(self):
        with pytest.raises(InvalidSpec):
            FamilySpec(Family.SPIDER, (2, 0, 3))

    def test_caterpillar_counts_non_negative(self):
        with pytest.raises(InvalidSpec):
            FamilySpec(Family.CATERPILLAR, (1, -1))

    def test_shape_only_for_shaped_families(self):
        with pytest.raises(InvalidSpec, match="shape"):
            FamilySpec(Family.GEAR, (3,), (True,))


class TestGenerate:
    def test_gear(self):
        assert counts(Family.GEAR, 3) == (7, 9)

    def test_gear_hub_touches_odd_rim_vertices(self):
        g = generate(FamilySpec(Family.GEAR, (4,)))
        assert g.adjacency[1] == (3, 5, 7, 9)
        assert (2, 9) in g.edges

    def test_snake(self):
        assert counts(Family.SNAKE, 3, 4) == (7, 9)

    @pytest.mark.parametrize("k, n", [(3, 2), (4, 5), (5, 4), (6, 3), (9, 3)])
    def test_snake_matches_reference(self, k, n):
        g = generate(FamilySpec(Family.SNAKE, (k, n)))
        assert g.vertex_count == (n - 1) * (k - 1) + 1
        assert g.edge_count == (n - 1) * k
        assert nx.is_isomorphic(g.to_networkx(), snake_reference(k, n))

    def test_mobius(self):
        assert counts(Family.MOBIUS, 3) == (6, 9)

    @pytest.mark.parametrize("n", [3, 4, 6])
    def test_mobius_is_cycle_with_long_chords(self, n):
        reference = nx.cycle_graph(2 * n)
        reference.add_edges_from((i, i + n) for i in range(n))
        g = generate(FamilySpec(Family.MOBIUS, (n,)))
        assert nx.is_isomorphic(g.to_networkx(), reference)

    @pytest.mark.parametrize("k, n", [(3, 3), (4, 3), (5, 4), (7, 5)])
    def test_star_gon_counts(self, k, n):
        assert counts(Family.STAR_GON, k, n) == (n * (k - 1), n * k)

    def test_star_gon_3_3_is_cycle_with_triangles(self):
        g = generate(FamilySpec(Family.STAR_GON, (3, 3)))
        reference = nx.cycle_graph(6)
        reference.add_edges_from([(0, 2), (2, 4), (4, 0)])
        assert nx.is_isomorphic(g.to_networkx(), reference)

    @pytest.mark.parametrize("n", [1, 2, 5])
    def test_book5(self, n):
        assert counts(Family.BOOK, 5, n) == (3 * n + 2, 4 * n + 1)

    @pytest.mark.parametrize("k", [3, 4, 5])
    def test_book_pages_share_spine(self, k):
        g = generate(FamilySpec(Family.BOOK, (k, 3)))
        assert g.vertex_count == 2 + 3 * (k - 2)
        assert g.edge_count == 1 + 3 * (k - 1)
        assert g.degree(1) == g.degree(2) == 4

    def test_caterpillar(self):
        g = generate(FamilySpec(Family.CATERPILLAR, (0, 2)))
        assert g.sorted_edges() == [(1, 2), (2, 3), (3, 4), (3, 5), (3, 6)]

    def test_caterpillar_bare_spine(self):
        assert generate(FamilySpec(Family.CATERPILLAR, ())) == Graph(2, frozenset({(1, 2)}))

    def test_spider(self):
        g = generate(FamilySpec(Family.SPIDER, (2, 1, 3)))
        assert g.adjacency[1] == (2, 4, 5)
        assert g.sorted_edges() == [(1, 2), (1, 4), (1, 5), (2, 3), (5, 6), (6, 7)]

    @pytest.mark.parametrize("n, k", [(1, 3), (3, 4), (3, 6)])
    def test_banana(self, n, k):
        g = generate(FamilySpec(Family.BANANA, (n, k)))
        assert (g.vertex_count, g.edge_count) == (n * k + 1, n * k)
        assert is_tree(g)
        assert g.degree(1) == n

    def test_banana_numbering(self):
        g = generate(FamilySpec(Family.BANANA, (3, 4)))
        # star 2: u=6, w=7, leaves 8 and 9
        assert g.adjacency[6] == (1, 7)
        assert g.adjacency[7] == (6, 8, 9)

    @pytest.mark.parametrize("n, k", [(1, 3), (3, 3), (4, 5), (6, 3)])
    def test_firecracker(self, n, k):
        g = generate(FamilySpec(Family.FIRECRACKER, (n, k)))
        assert (g.vertex_count, g.edge_count) == (n * k, n * k - 1)
        assert is_tree(g)
        assert all(g.degree(n + i) == k - 1 for i in range(1, n + 1))

    def test_firecracker_small_stars(self):
        assert generate(FamilySpec(Family.FIRECRACKER, (4, 1))) == generate(
            FamilySpec(Family.PATH, (4,))
        )
        assert generate(FamilySpec(Family.FIRECRACKER, (3, 2))).sorted_edges() == [
            (1, 2),
            (1, 4),
            (2, 3),
            (2, 5),
            (3, 6),
        ]

    def test_firecracker_extra_leaves(self):
        g = generate(FamilySpec(Family.FIRECRACKER, (2, 5)))
        # v_1 = 3 gets w_1 = 5 and extra leaves 7, 8
        assert g.adjacency[3] == (1, 5, 7, 8)
        assert g.adjacency[4] == (2, 6, 9, 10)

    def test_full_kary(self):
        g = generate(FamilySpec(Family.FULL_KARY, (3,), (True, True)))
        assert g.vertex_count == 7
        assert g.adjacency[1] == (2, 3, 4)
        assert g.adjacency[2] == (1, 5, 6, 7)

    def test_cayley(self):
        g = generate(FamilySpec(Family.CAYLEY, (3,), (True, True, False, True)))
        assert g.adjacency[1] == (2, 3, 4)
        assert g.adjacency[2] == (1, 5, 6)
        assert g.adjacency[4] == (1, 7, 8)
        assert all(g.degree(v) in (1, 3) for v in range(1, g.vertex_count + 1))

    def test_full_binary_level_order(self):
        g = generate(FamilySpec(Family.FULL_BINARY, (), (True, True, True)))
        assert g == generate(FamilySpec(Family.COMPLETE_BINARY, (7,)))

    def test_empty_shape_is_single_node(self):
        assert generate(FamilySpec(Family.FULL_BINARY, ())).vertex_count == 1

    def test_shape_with_extra_decisions(self):
        with pytest.raises(InvalidSpec, match="decisions"):
            generate(FamilySpec(Family.FULL_BINARY, (), (True, False, False, True)))

    def test_complete_binary(self):
        g = generate(FamilySpec(Family.COMPLETE_BINARY, (6,)))
        assert g.sorted_edges() == [(1, 2), (1, 3), (2, 4), (2, 5), (3, 6)]

    def test_cycle(self):
        assert generate(FamilySpec(Family.CYCLE, (5,))).adjacency[1] == (2, 5)

    @pytest.mark.parametrize(
        "spec",
        [
            FamilySpec(Family.PATH, (6,)),
            FamilySpec(Family.CATERPILLAR, (1, 0, 3)),
            FamilySpec(Family.SPIDER, (1, 2, 3, 4)),
            FamilySpec(Family.BANANA, (4, 5)),
            FamilySpec(Family.FIRECRACKER, (5, 4)),
            FamilySpec(Family.FULL_KARY, (4,), (True, False, True)),
            FamilySpec(Family.CAYLEY, (5,), (True, True)),
            FamilySpec(Family.FULL_BINARY, (), (True, False, True, True)),
            FamilySpec(Family.COMPLETE_BINARY, (12,)),
            FamilySpec(Family.RANDOM_TREE, (20, 3)),
        ],
    )
    def test_tree_families_are_trees(self, spec):
        assert spec.family in TREE_FAMILIES
        assert is_tree(generate(spec))

    def test_deterministic(self):
        spec = FamilySpec(Family.STAR_GON, (5, 4))
        assert generate(spec) == generate(spec)


class TestRandomTree:
    def test_single_vertex(self):
        assert random_tree(1, 42) == Graph(1, frozenset())

    def test_single_edge(self):
        assert random_tree(2, 42) == Graph(2, frozenset({(1, 2)}))

    def test_eight_vertices(self):
        t = random_tree(8, 7)
        assert t.edge_count == 7
        assert is_tree(t)

    def test_seeded(self):
        assert random_tree(30, 5) == random_tree(30, 5)

    def test_invalid(self):
        with pytest.raises(InvalidSpec):
            random_tree(0, 1)
