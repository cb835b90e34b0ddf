import random

import pytest

from fullex import graphs as G
from fullex.enumerator import enumerate_fullerenes

from conftest import backtracking_isomorphic


def test_cube_construction(cube):
    assert cube.n == 8
    assert cube.m == 12
    inv = G.faces(cube)
    assert inv.count == 6
    assert (inv.p4, inv.p5, inv.p6) == (6, 0, 0)


def test_k4_is_plane_cubic_but_not_fullerene(k4):
    assert G.faces(k4).count == 4
    with pytest.raises(G.BadFaceSize) as err:
        G.validate_fullerene(k4)
    assert err.value.size == 3


def test_dodecahedron_faces(dodecahedron):
    inv = G.validate_fullerene(dodecahedron)
    assert (inv.p4, inv.p5, inv.p6) == (0, 12, 0)


def test_validate_fullerene_face_identity(cube):
    inv = G.validate_fullerene(cube)
    assert 2 * inv.p4 + inv.p5 == 12


def test_construction_errors():
    with pytest.raises(G.NotCubic):
        G.from_rotation(4, [(1, 2), (0, 2), (0, 1), (0, 1, 2)])
    with pytest.raises(G.SelfLoopOrMultiEdge):
        G.from_rotation(4, [(1, 1, 2), (0, 2, 3), (0, 1, 3), (1, 2, 0)])
    with pytest.raises(G.SelfLoopOrMultiEdge):
        G.from_rotation(4, [(0, 1, 2), (0, 2, 3), (0, 1, 3), (1, 2, 0)])
    with pytest.raises(G.NotSymmetric):
        # vertex 5 lists 1 instead of 4: edge 4->5 has no reverse
        G.from_rotation(6, [(1, 2, 3), (2, 0, 4), (0, 1, 5),
                            (0, 4, 5), (1, 3, 5), (2, 3, 1)])


def test_two_spheres_rejected(cube):
    # disjoint union of two cubes has Euler characteristic 4, not 2
    rot = list(cube.rot) + [tuple(w + 8 for w in r) for r in cube.rot]
    with pytest.raises(G.NotSpherical):
        G.from_rotation(16, rot)


def test_face_tracing_covers_every_directed_edge(cube, dodecahedron):
    for g in (cube, dodecahedron):
        darts = [(v, w) for v in range(g.n) for w in g.rot[v]]
        traced = [e for f in G.faces(g).faces for e in f.directed_edges()]
        assert sorted(darts) == sorted(traced)
        assert g.n - g.m + G.faces(g).count == 2


def test_canonical_code_relabeling_invariance(cube, dodecahedron):
    rng = random.Random(7)
    for g in (cube, dodecahedron):
        code = G.canonical_code(g)
        for _ in range(100):
            perm = list(range(g.n))
            rng.shuffle(perm)
            rot = [()] * g.n
            for v in range(g.n):
                rot[perm[v]] = tuple(perm[w] for w in g.rot[v])
            h = G.from_rotation(g.n, rot)
            assert G.canonical_code(h) == code


def test_canonical_code_distinguishes(cube):
    t1 = enumerate_fullerenes(12)
    assert len({G.canonical_code(g) for g in t1.graphs}) == t1.size


def test_is_isomorphic_matches_backtracking_oracle():
    pool = list(enumerate_fullerenes(12).graphs) + list(enumerate_fullerenes(14).graphs)
    for i, g1 in enumerate(pool):
        for g2 in pool[i:]:
            assert G.is_isomorphic(g1, g2) == backtracking_isomorphic(g1, g2)


def test_mirror_images_identified():
    # a chiral fullerene and its mirror are distinct embeddings, one graph
    chirals = [g for g in enumerate_fullerenes(16).graphs if G.is_chiral(g)]
    assert chirals, "expected a chiral fullerene on 16 vertices"
    g = chirals[0]
    mirror = G.from_rotation(g.n, tuple(tuple(reversed(r)) for r in g.rot))
    assert G.is_isomorphic(g, mirror)
    assert not G.is_chiral(G.cube_graph())


def test_embedding_map_transports_adjacency(cube):
    rng = random.Random(3)
    perm = list(range(8))
    rng.shuffle(perm)
    rot = [()] * 8
    for v in range(8):
        rot[perm[v]] = tuple(perm[w] for w in cube.rot[v])
    h = G.from_rotation(8, rot)
    phi = G.embedding_map(cube, h)
    assert phi is not None
    for v in range(8):
        assert {phi[w] for w in cube.adj[v]} == h.adj[phi[v]]


def test_connectivity(cube, dodecahedron, k4):
    assert G.connectivity(cube) == 3
    assert G.connectivity(dodecahedron) == 3
    assert G.connectivity(k4) == 3


def test_girth(cube, dodecahedron, k4):
    assert G.girth(k4) == 3
    assert G.girth(cube) == 4
    assert G.girth(dodecahedron) == 5


def test_short_cycles_facial(cube, dodecahedron):
    assert G.short_cycles_facial(cube)
    assert G.short_cycles_facial(dodecahedron)


def test_cube_has_exactly_six_four_cycles(cube):
    assert len(G._simple_cycles_of_length(cube, 4)) == 6
    assert len(G._simple_cycles_of_length(cube, 5)) == 0


def test_edge_cuts_cube(cube):
    cuts = G.edge_cuts_up_to(cube, 3)
    assert len(cuts) == 8
    assert all(c.trivial for c in cuts)
    assert all(len(c.edges) == 3 for c in cuts)
    for c in cuts:
        small = min(c.sides, key=len)
        assert len(small) == 1


def test_edge_cut_cap():
    with pytest.raises(ValueError):
        G.edge_cuts_up_to(G.cube_graph(), 5)


def test_no_cyclic_cut_in_cube_or_dodecahedron(cube, dodecahedron):
    assert not G.has_cyclic_cut_leq3(cube)
    assert not G.has_cyclic_cut_leq3(dodecahedron)
