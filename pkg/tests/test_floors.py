from itertools import permutations

import pytest

from tropgw.curves import SimpleCurve, arith_mult, complex_mult, real_mult
from tropgw.lattice import DualSubdivision, boundary_end_weights

from tropgw.ch import ch_count, max_genus
from tropgw.curves import VertexStar, vertex_mult
from tropgw.floors import (
    FloorDiagram,
    _attachments,
    count_interleavings,
    count_markings,
    delta_floor_count,
    diagram_mult,
    edge_mult,
    enumerate_diagrams,
    floor_count,
    hirzebruch_count,
    marked_mult,
    severi_count,
)
from tropgw.gw import H, ONE, diag, gw_equal, hyperbolic, hyperbolic_decomposition, render
from tropgw.lattice import delta_polygon, hirzebruch_polygon
from tropgw.paths import count_lattice_path


def brute_force_markings(diagram, w_left, w_right, free=()):
    """Independent marking count: enumerate labeled orders and gap choices,
    then deduplicate by the class-id sequence (= isomorphism class)."""
    a = diagram.floors
    total = 0
    for left, right in _attachments(diagram, w_left, w_right):
        items = []
        for i, j, w in diagram.edges:
            items.append((("edge", i, j, w), i, j - 1))
        for v in range(a):
            for w in left[v]:
                items.append((("left", v, w), 0, v))
            for w in right[v]:
                items.append((("right", v, w), v + 1, a))
        for w in free:
            items.append((("free", w), 0, a))
        n = len(items)
        seen = set()
        for perm in permutations(range(n)):
            def rec(pos, min_gap, acc):
                if pos == n:
                    seen.add(tuple(acc))
                    return
                cid, lo, hi = items[perm[pos]]
                for gap in range(max(min_gap, lo), hi + 1):
                    acc.append((gap, cid))
                    rec(pos + 1, gap, acc)
                    acc.pop()

            rec(0, 0, [])
        total += len(seen)
    return total


def test_diagram_validation():
    with pytest.raises(ValueError):
        FloorDiagram(2, 1, ((2, 1, 1),))
    with pytest.raises(ValueError):
        FloorDiagram(2, 1, ((1, 2, 0),))
    d = FloorDiagram(3, 1, ((1, 2, 2), (2, 3, 1)))
    assert d.div(1) == -2 and d.div(2) == 1 and d.div(3) == 1
    assert d.genus == 0
    assert d.is_connected()
    assert not FloorDiagram(3, 1, ((1, 2, 1),)).is_connected()


def test_diagram_json_dump():
    d = FloorDiagram(3, 1, ((1, 2, 2), (2, 3, 1)))
    assert d.to_json() == {"floors": 3, "k": 1, "edges": [[1, 2, 2], [2, 3, 1]]}


def test_edge_and_diagram_mult():
    assert edge_mult(1) == ONE
    assert edge_mult(2) == H
    assert edge_mult(3) == H + diag(3)
    assert diagram_mult(FloorDiagram(2, 1, ())) == ONE
    assert diagram_mult(FloorDiagram(2, 1, ((1, 2, 3),))) == H + diag(3)
    assert diagram_mult(FloorDiagram(2, 1, ((1, 2, 2),))) == H


def test_marked_mult_squares_bounded_edges():
    d = FloorDiagram(2, 1, ((1, 2, 2),))
    assert marked_mult(d, (1, 1, 1), ()) == hyperbolic(2)
    d3 = FloorDiagram(2, 3, ((1, 2, 3),))
    value = marked_mult(d3, (3, 3, 3), ())
    base = edge_mult(3)
    expected = base * base * base * base * base
    assert gw_equal(value, expected)


def test_floor_vertex_matches_edge_factor():
    # a floor vertex adjacent to a horizontal edge of weight w has dual
    # triangle of area w, reproducing the per-edge factor
    for w in range(1, 7):
        for x in (0, 1, 2):
            star = VertexStar.from_vectors([(-w, 0), (x, 1), (w - x, -1)])
            assert gw_equal(vertex_mult(star), edge_mult(w))


def test_enumerate_diagrams_examples():
    assert len(enumerate_diagrams(1, 1, 0)) == 1
    conic = enumerate_diagrams(1, 2, 0)
    assert [d.edges for d in conic] == [((1, 2, 1),)]
    cubic = enumerate_diagrams(1, 3, 0)
    assert sorted(d.edges for d in cubic) == [
        ((1, 2, 1), (1, 3, 1)),
        ((1, 2, 1), (2, 3, 1)),
        ((1, 2, 2), (2, 3, 1)),
    ]
    assert enumerate_diagrams(1, 2, -2) == []


def test_count_markings_examples():
    assert count_markings(FloorDiagram(2, 1, ((1, 2, 1),)), (1, 1), ()) == 1
    assert count_markings(FloorDiagram(1, 1, ()), (1,), ()) == 1
    d3 = {
        ((1, 2, 1), (2, 3, 1)): 5,
        ((1, 2, 1), (1, 3, 1)): 3,
        ((1, 2, 2), (2, 3, 1)): 1,
    }
    for edges, expected in d3.items():
        assert count_markings(FloorDiagram(3, 1, edges), (1, 1, 1), ()) == expected


def test_count_markings_against_brute_force():
    cases = [
        (FloorDiagram(2, 1, ((1, 2, 1),)), (1, 1), (), ()),
        (FloorDiagram(2, 1, ((1, 2, 2),)), (1, 1), (), ()),
        (FloorDiagram(3, 1, ((1, 2, 1), (1, 3, 1))), (1, 1, 1), (), ()),
        (FloorDiagram(2, 2, ((1, 2, 1),)), (1, 1, 1, 1), (), ()),
        (FloorDiagram(2, 2, ((1, 2, 1),)), (3, 1, 1), (1,), ()),
        (FloorDiagram(2, 0, ((1, 2, 1), (1, 2, 1))), (1, 1), (1, 1), ()),
        (FloorDiagram(2, 2, ((1, 2, 1), (1, 2, 1))), (1, 1, 1, 1), (), (1,)),
        (FloorDiagram(1, 2, ()), (3, 1), (1, 1), (1,)),
    ]
    for diagram, wl, wr, free in cases:
        assert count_markings(diagram, wl, wr, free) == brute_force_markings(
            diagram, wl, wr, free
        ), (diagram, wl, wr, free)


def test_count_markings_against_brute_force_randomized():
    import random

    rng = random.Random(424)
    checked = 0
    while checked < 30:
        a = rng.randint(1, 3)
        k = rng.randint(0, 2)
        n_edges = rng.randint(0, 2) if a > 1 else 0
        edges = []
        for _ in range(n_edges):
            i = rng.randint(1, a - 1)
            j = rng.randint(i + 1, a)
            edges.append((i, j, rng.randint(1, 3)))
        diagram = FloorDiagram(a, k, tuple(edges))
        n_right = rng.randint(0, 2)
        w_right = tuple(rng.randint(1, 3) for _ in range(n_right))
        need_left = a * k + sum(w_right)
        if need_left == 0 or need_left > 6:
            continue
        w_left = []
        while sum(w_left) < need_left:
            w_left.append(min(rng.randint(1, 3), need_left - sum(w_left)))
        w_left = tuple(w_left)
        free = tuple(
            w for w in set(w_left) & set(w_right) if rng.random() < 0.3
        )
        if len(diagram.edges) + len(w_left) + len(w_right) + len(free) > 7:
            continue
        fast = count_markings(diagram, w_left, w_right, free)
        slow = brute_force_markings(diagram, w_left, w_right, free)
        assert fast == slow, (diagram, w_left, w_right, free)
        checked += 1


def test_floor_vs_path_small_hirzebruch_sweep():
    for k in (0, 1, 2):
        for a in (1, 2):
            for b in (0, 1, 2):
                if b == 0 and a * k == 0:
                    continue
                polygon = hirzebruch_polygon(k, a, b)
                gmax = polygon.interior_count()
                for g in range(-1, min(gmax, 1) + 1):
                    wl, wr = (1,) * (a * k + b), (1,) * b
                    value = floor_count(k, a, wl, wr, g)
                    path = count_lattice_path(polygon, g)
                    assert gw_equal(value, path), (k, a, b, g)


def test_count_interleavings_basics():
    # two identical items in one gap: a single class
    assert count_interleavings(1, [(0, 0, 2)]) == 1
    # two distinguishable items in one gap: both orders
    assert count_interleavings(1, [(0, 0, 1), (0, 0, 1)]) == 2
    # one item over two gaps
    assert count_interleavings(2, [(0, 1, 1)]) == 2


def test_marking_size_invariant():
    # #white + #black = #ends + g - 1
    for d in (2, 3, 4):
        for g in range(0, max_genus(d) + 1):
            for diagram in enumerate_diagrams(1, d, g):
                n_black = len(diagram.edges) + d  # subdivision blacks + unit ends
                n_ends = 2 * d + d
                assert d + n_black == n_ends + g - 1


def test_floor_count_examples():
    assert delta_floor_count(3, 0) == hyperbolic(2) + 8 * ONE
    for d in (2, 3, 4):
        assert delta_floor_count(d, max_genus(d)) == ONE
    assert floor_count(0, 1, (1,), (1,), 0) == ONE


def test_floor_against_lattice_path_and_recursion():
    for d in (2, 3, 4):
        for g in range(-1, max_genus(d) + 1):
            value = delta_floor_count(d, g)
            assert gw_equal(value, count_lattice_path(delta_polygon(d), g)), (d, g)
            assert gw_equal(value, ch_count(d, g)), (d, g)


def test_floor_count_hirzebruch_with_free_lines():
    # bidegree (2,1) on the k=2 surface needs horizontal line components
    value = floor_count(2, 2, (1,) * 5, (1,), 0)
    path = count_lattice_path(hirzebruch_polygon(2, 2, 1), 0)
    assert gw_equal(value, path)
    assert value.rank == 102
    # the smooth (2,2) curve on the quadric surface
    assert floor_count(0, 2, (1, 1), (1, 1), 1) == ONE


def test_connected_flag():
    full = delta_floor_count(4, 0)
    connected = delta_floor_count(4, 0, connected=True)
    assert full.rank == 675
    assert connected.rank == 620
    assert delta_floor_count(3, 0, connected=True) == delta_floor_count(3, 0)


def test_severi_examples():
    for d in (1, 2, 3, 4, 5, 6):
        assert severi_count(d, 0) == ONE
    for d in (2, 3, 4, 5):
        value = severi_count(d, 1)
        assert value == hyperbolic((d - 1) * (d - 2)) + (d * d - 1) * ONE
    value = severi_count(4, 2)
    assert value.rank == 2 * 66 + 93 and value.signature == 93


def test_severi_rank_known_values():
    assert severi_count(4, 3, system="rank") == 675
    assert [severi_count(d, 1, system="rank") for d in (3, 4, 5)] == [12, 27, 48]
    for d in range(3, 9):
        assert severi_count(d, 1, system="rank") == 3 * (d - 1) ** 2
        assert severi_count(d, 2, system="rank") == (
            3 * (3 * d**4 - 12 * d**3 + 4 * d**2 + 27 * d - 22) // 2
        )


def test_severi_matches_recursion_at_degree_five():
    assert gw_equal(severi_count(5, max_genus(5)), ch_count(5, 0))


def test_severi_matches_generic_floor_enumeration():
    for d in (2, 3, 4):
        for delta in (0, 1, 2):
            g = max_genus(d) - delta
            assert gw_equal(severi_count(d, delta), delta_floor_count(d, g))


def test_hirzebruch_count_shape():
    value = hirzebruch_count(1, 2, 0, (3, 1), (1, 1))
    n, rest = hyperbolic_decomposition(value)
    assert set(r for r, _ in rest.terms) <= {3, -3}
    with pytest.raises(ValueError):
        hirzebruch_count(1, 2, 0, (2, 2), (1, 1))


def floor_decomposed_subdivision(diagram, left_ends):
    """Dual subdivision of a floor-decomposed degree-d curve.

    ``left_ends[v]`` lists the left end weights attached to floor v+1.
    Horizontal edges occupy stacked height intervals on every column they
    cross (in a fixed global order); a floor cell is a triangle where an
    edge terminates or starts and a parallelogram where it passes through.
    """
    d = diagram.floors
    items = []  # (global key, start floor, end floor, weight); left end: start 0
    for copy, (i, j, w) in enumerate(diagram.edges):
        items.append(((i, j, w, copy), i, j, w))
    for v, weights in enumerate(left_ends, start=1):
        for copy, w in enumerate(weights):
            items.append(((0, v, w, 100 + copy), 0, v, w))
    items.sort()
    triangles, parallelograms = [], []
    for v in range(1, d + 1):
        yl = yr = 0
        for _, i, j, w in items:
            crosses_left, crosses_right = i < v <= j, i <= v < j
            if not (crosses_left or crosses_right):
                continue
            if crosses_left and not crosses_right:  # terminates at floor v
                triangles.append(((v - 1, yl), (v - 1, yl + w), (v, yr)))
                yl += w
            elif crosses_right and not crosses_left:  # starts at floor v
                triangles.append(((v - 1, yl), (v, yr + w), (v, yr)))
                yr += w
            else:  # passes through
                parallelograms.append(((v - 1, yl), (v - 1, yl + w), (v, yr + w)))
                yl += w
                yr += w
        assert (yl, yr) == (d - v + 1, d - v)
    return DualSubdivision(tuple(triangles), tuple(parallelograms))


def test_marked_mult_matches_curve_mult_on_all_small_diagrams():
    for d in (1, 2, 3):
        gmax = max_genus(d)
        w_left = (1,) * d
        for g in range(-1, gmax + 1):
            for diagram in enumerate_diagrams(1, d, g):
                for left, _right in _attachments(diagram, w_left, ()):
                    sub = floor_decomposed_subdivision(diagram, left)
                    polygon = delta_polygon(d)
                    assert sub.piece_area2() == polygon.area2
                    ends = boundary_end_weights(sub, polygon)
                    assert sorted(ends) == [1] * (3 * d)
                    curve = SimpleCurve(sub, ends)
                    value = marked_mult(diagram, w_left, ())
                    assert gw_equal(arith_mult(curve), value), diagram
                    assert complex_mult(curve) == value.rank
                    assert real_mult(curve) == value.signature


def test_marked_mult_matches_curve_mult_with_heavier_edges():
    # degree 4, one weight-2 and one weight-3 configuration
    cases = [
        FloorDiagram(4, 1, ((1, 2, 2), (2, 3, 1), (3, 4, 1))),
        FloorDiagram(4, 1, ((1, 2, 3), (2, 3, 2), (3, 4, 1))),
        FloorDiagram(4, 1, ((1, 3, 2), (2, 3, 1), (3, 4, 1))),
    ]
    for diagram in cases:
        w_left = (1,) * 4
        for left, _right in _attachments(diagram, w_left, ()):
            sub = floor_decomposed_subdivision(diagram, left)
            polygon = delta_polygon(4)
            assert sub.piece_area2() == polygon.area2
            curve = SimpleCurve(sub, boundary_end_weights(sub, polygon))
            value = marked_mult(diagram, w_left, ())
            assert gw_equal(arith_mult(curve), value), diagram
            assert complex_mult(curve) == value.rank
            assert real_mult(curve) == value.signature


def test_rank_signature_specializations():
    for d in (3, 4):
        for g in (0, 1):
            value = delta_floor_count(d, g)
            assert value.rank == delta_floor_count(d, g, system="rank")
            assert value.signature == delta_floor_count(d, g, system="real")
    for d, delta in ((4, 2), (5, 1), (6, 2)):
        value = severi_count(d, delta)
        assert value.rank == severi_count(d, delta, system="rank")
        assert value.signature == severi_count(d, delta, system="real")
