"""Local Clifford operations: validity, composition, graph action, completion."""

import random

import pytest

from conftest import all_graphs, random_graph, random_in_domain_op, random_valid_clifford
from stabgraph import clifford, gf2, graphs, stabilizer
from stabgraph.clifford import LocalCliffordOp, complete_from_cd, graph_action, local_complement_op
from stabgraph.errors import ParseError
from stabgraph.gf2 import BitMatrix, BitVec
from stabgraph.graphs import Graph


def test_validity_enforced():
    with pytest.raises(clifford.InvalidCliffordError):
        LocalCliffordOp(BitVec.ones(2), BitVec.ones(2), BitVec.ones(2), BitVec.ones(2))
    with pytest.raises(clifford.InvalidCliffordError):
        LocalCliffordOp.from_qubit_blocks([(1, 0, 0, 1), (0, 0, 0, 1)])


def test_validity_equals_symplectic_condition():
    rng = random.Random(30)
    p = gf2.SymplecticForm(4).matrix()
    for _ in range(100):
        q = random_valid_clifford(rng, 4)
        m = q.assemble()
        assert gf2.mat_mul(gf2.mat_mul(gf2.transpose(m), p), m) == p
    # a diagonal-block matrix with a non-invertible qubit block breaks it
    bad = BitMatrix.from_rows([[1, 0], [0, 0]])  # n=1 blocks a=1, b=0, c=0, d=0
    assert gf2.mat_mul(
        gf2.mat_mul(gf2.transpose(bad), gf2.SymplecticForm(1).matrix()), bad
    ) != gf2.SymplecticForm(1).matrix()


def test_compose_identity_and_hadamard():
    rng = random.Random(31)
    q = random_valid_clifford(rng, 5)
    ident = LocalCliffordOp.identity(5)
    assert clifford.compose(ident, q) == q
    assert clifford.compose(q, ident) == q
    h = LocalCliffordOp.hadamard_all(5)
    assert clifford.compose(h, h) == ident


def test_compose_matches_assembled_product():
    rng = random.Random(32)
    for _ in range(100):
        n = rng.randrange(1, 7)
        q1 = random_valid_clifford(rng, n)
        q2 = random_valid_clifford(rng, n)
        composed = clifford.compose(q2, q1)
        assert composed.assemble() == gf2.mat_mul(q2.assemble(), q1.assemble())


def test_inverse():
    rng = random.Random(33)
    for _ in range(50):
        q = random_valid_clifford(rng, rng.randrange(1, 7))
        assert clifford.compose(clifford.inverse(q), q) == LocalCliffordOp.identity(q.n)


def test_apply_to_stabilizer_identity():
    s = stabilizer.from_graph(Graph.path(3))
    assert clifford.apply_to_stabilizer(LocalCliffordOp.identity(3), s) == s.s


def test_apply_to_stabilizer_hadamard_swaps_blocks():
    z_only = stabilizer.from_pauli_strings(
        [stabilizer.PauliString.from_text("ZI"), stabilizer.PauliString.from_text("IZ")]
    )
    out = clifford.apply_to_stabilizer(LocalCliffordOp.hadamard_all(2), z_only)
    assert out == gf2.vstack(BitMatrix.zeros(2, 2), gf2.identity(2))


def test_apply_to_stabilizer_generator_blocks():
    # hand block-multiply for the 2-vertex edge graph and its vertex-1 generator op
    edge = Graph.from_edges(2, [(1, 2)])
    q = local_complement_op(edge, 1)
    out = clifford.apply_to_stabilizer(q, stabilizer.from_graph(edge))
    # upper block: adj + diag(row 1) = [[0,1],[1,1]]; lower: unit-diag.adj + I = [[1,1],[0,1]]
    assert out == BitMatrix.from_rows([[0, 1], [1, 1], [1, 1], [0, 1]])


def test_graph_action_identity():
    rng = random.Random(34)
    for _ in range(20):
        g = random_graph(rng, rng.randrange(1, 9))
        report = graph_action(LocalCliffordOp.identity(g.n), g)
        assert report.invertible_cd and report.zero_diagonal
        assert report.image == g


def test_graph_action_singular_denominator():
    report = graph_action(LocalCliffordOp.hadamard_all(3), Graph.empty(3))
    assert not report.invertible_cd
    assert not report.zero_diagonal
    assert report.image is None
    assert not report.in_domain()


def test_graph_action_zero_diagonal_failure():
    # shear on one qubit of an edge graph puts a 1 on the image diagonal
    edge = Graph.from_edges(2, [(1, 2)])
    q = LocalCliffordOp.from_qubit_blocks([(1, 1, 0, 1), (1, 0, 0, 1)])
    report = graph_action(q, edge)
    assert report.invertible_cd and not report.zero_diagonal


def test_local_complement_op_matches_edge_toggling():
    for n in range(1, 5):
        for g in all_graphs(n):
            for i in range(1, n + 1):
                report = graph_action(local_complement_op(g, i), g)
                assert report.in_domain()
                assert report.image == graphs.local_complement(g, i)
    rng = random.Random(35)
    for _ in range(300):
        n = rng.randrange(1, 13)
        g = random_graph(rng, n)
        i = rng.randrange(1, n + 1)
        report = graph_action(local_complement_op(g, i), g)
        assert report.image == graphs.local_complement(g, i)


def test_local_complement_op_examples():
    empty = Graph.empty(3)
    q = local_complement_op(empty, 2)
    assert q.qubit_block(2) == (1, 0, 1, 1)
    assert graph_action(q, empty).image == empty

    edge = Graph.from_edges(2, [(1, 2)])
    assert graph_action(local_complement_op(edge, 1), edge).image == edge

    k5 = Graph.complete(5)
    assert graph_action(local_complement_op(k5, 1), k5).image == Graph.star(5, 1)


def test_graph_action_consistent_with_stabilizer_action():
    rng = random.Random(36)
    for _ in range(100):
        n = rng.randrange(2, 9)
        g = random_graph(rng, n)
        q = random_in_domain_op(rng, g)
        image = graph_action(q, g).image
        moved = stabilizer.StabilizerGenMatrix(
            clifford.apply_to_stabilizer(q, stabilizer.from_graph(g))
        )
        assert stabilizer.same_subspace(moved, stabilizer.from_graph(image))


def test_complete_from_cd_identity_case():
    rng = random.Random(37)
    for _ in range(30):
        g = random_graph(rng, rng.randrange(1, 9))
        q = complete_from_cd(g, BitVec.zeros(g.n), BitVec.ones(g.n))
        assert q == LocalCliffordOp.identity(g.n)


def test_complete_from_cd_recovers_generator_op():
    rng = random.Random(38)
    for _ in range(100):
        n = rng.randrange(1, 10)
        g = random_graph(rng, n)
        i = rng.randrange(1, n + 1)
        q = complete_from_cd(g, BitVec.unit(n, i - 1), BitVec.ones(n))
        assert q == local_complement_op(g, i)


def test_complete_from_cd_alternates_break_zero_diagonal():
    rng = random.Random(39)
    tested = 0
    while tested < 60:
        n = rng.randrange(1, 8)
        g = random_graph(rng, n)
        c = BitVec(n, rng.getrandbits(n))
        d = BitVec(n, rng.getrandbits(n))
        try:
            q = complete_from_cd(g, c, d)
        except gf2.SingularError:
            continue
        tested += 1
        assert graph_action(q, g).in_domain()
        for i in range(n):
            flipped = LocalCliffordOp(
                q.a.with_bit(i, q.a[i] ^ c[i]),
                q.b.with_bit(i, q.b[i] ^ d[i]),
                c,
                d,
            )
            report = graph_action(flipped, g)
            assert report.invertible_cd
            assert not report.zero_diagonal


def test_complete_from_cd_unique_among_all_sign_choices():
    # exhaustive at n <= 3: exactly one of the 2^n upper-block choices lands in-domain
    for n in range(1, 4):
        for g in all_graphs(n):
            for cbits in range(1 << n):
                for dbits in range(1 << n):
                    c = BitVec(n, cbits)
                    d = BitVec(n, dbits)
                    try:
                        q = complete_from_cd(g, c, d)
                    except gf2.SingularError:
                        continue
                    hits = 0
                    for flips in range(1 << n):
                        cand = LocalCliffordOp(
                            BitVec(n, q.a.bits ^ (flips & cbits)),
                            BitVec(n, q.b.bits ^ (flips & dbits)),
                            c,
                            d,
                        )
                        if graph_action(cand, g).in_domain():
                            hits += 1
                    assert hits == 1


def test_complete_from_cd_singular():
    with pytest.raises(gf2.SingularError):
        complete_from_cd(Graph.empty(2), BitVec.ones(2), BitVec.zeros(2))


def test_clifford_text_roundtrip():
    rng = random.Random(40)
    for _ in range(50):
        q = random_valid_clifford(rng, rng.randrange(1, 10))
        text = clifford.format_clifford(q)
        assert clifford.parse_clifford(text) == q
        assert clifford.format_clifford(clifford.parse_clifford(text)) == text


def test_clifford_text_exact():
    q = LocalCliffordOp.hadamard_all(2)
    assert clifford.format_clifford(q) == "2\n0 1 1 0\n0 1 1 0\n"


def test_clifford_parse_errors():
    with pytest.raises(ParseError):
        clifford.parse_clifford("")
    with pytest.raises(ParseError) as err:
        clifford.parse_clifford("2\n1 0 0 1\n1 0 0\n")
    assert err.value.line == 3
    with pytest.raises(ParseError):
        clifford.parse_clifford("1\n0 0 1 1 \nxx")
    with pytest.raises(ParseError):
        clifford.parse_clifford("1\n1 1 1 1\n")  # fails per-qubit invertibility
