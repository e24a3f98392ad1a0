"""Command-line front end.

Commands map one-to-one onto library operations; all artifacts are plain
text (graphs, stabilizers, clifford operations, step sequences, matrices)
so fixtures diff cleanly and every writer round-trips through its reader.

Exit codes: 0 success, 1 inequivalent (equiv), 2 indeterminate (equiv),
64 usage error, 65 parse error, 70 operation failure (singular input,
domain violation, cap exceeded).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import clifford, decomposition, equivalence, gf2, graphs, oracle, orbit
from . import reduction, stabilizer
from .errors import ParseError

EXIT_OK = 0
EXIT_INEQUIVALENT = 1
EXIT_INDETERMINATE = 2
EXIT_USAGE = 64
EXIT_PARSE = 65
EXIT_FAILURE = 70


class _UsageError(Exception):
    pass


class CommandError(Exception):
    """A command-level failure (verification mismatch, unusable input)."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _build_parser():
    parser = _Parser(prog="stabgraph", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("reduce", help="reduce a stabilizer to graph-state standard form")
    p.add_argument("stabilizer", help="stabilizer file (Pauli lines or matrix block)")
    p.add_argument("--out-graph", help="output graph file (default: <stem>.graph)")
    p.add_argument("--out-clifford", help="output witness operation file (default: <stem>.lc)")
    p.add_argument("--out-basis", help="output basis-change matrix file (default: <stem>.basis)")
    _common_flags(p)

    p = sub.add_parser("decompose", help="turn a graph action into complementation steps")
    p.add_argument("clifford", help="local Clifford operation file")
    p.add_argument("graph", help="graph file")
    p.add_argument("--out", help="output sequence file (default: <graph stem>.lcs)")
    _common_flags(p)

    p = sub.add_parser("apply", help="apply a complementation sequence to a graph")
    p.add_argument("graph", help="graph file")
    p.add_argument("sequence", help="sequence file")
    p.add_argument("--out", help="output graph file (default: <graph stem>.out.graph)")
    _common_flags(p)

    p = sub.add_parser("orbit", help="enumerate the orbit under local complementation")
    p.add_argument("graph", help="graph file")
    p.add_argument("--members", help="write every member to this file")
    p.add_argument("--dot", help="write every member as DOT to this file")
    _common_flags(p)

    p = sub.add_parser("canon", help="print the canonical orbit representative")
    p.add_argument("graph", help="graph file")
    p.add_argument("--out", help="write the representative to a file instead")
    _common_flags(p)

    p = sub.add_parser("equiv", help="decide local Clifford equivalence of two states")
    p.add_argument("first", help="graph or stabilizer file")
    p.add_argument("second", help="graph or stabilizer file")
    p.add_argument("--witness", default="witness.lc", help="witness output (default: witness.lc)")
    _common_flags(p)

    p = sub.add_parser("export-dot", help="write a graph in DOT format")
    p.add_argument("graph", help="graph file")
    p.add_argument("--out", help="output file (default: stdout)")
    _common_flags(p)

    p = sub.add_parser("oracle-check", help="dense statevector self-checks for a graph")
    p.add_argument("graph", help="graph file")
    _common_flags(p)

    return parser


def _common_flags(p):
    p.add_argument("--cap", type=int, default=None, help="orbit member cap / search cap")
    p.add_argument("--seed", type=int, default=0, help="seed for seeded subroutines")
    p.add_argument("--verify", action="store_true", help="dense oracle cross-check (n <= 12)")
    p.add_argument("--quiet", action="store_true", help="suppress non-error output")


def run(argv):
    """Execute one command line; returns the process exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"error: usage: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return _dispatch(args)
    except ParseError as exc:
        print(f"error: parse: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except orbit.CapExceededError as exc:
        print(f"error: cap: {exc}", file=sys.stderr)
        return EXIT_FAILURE
    except decomposition.NotInDomainError as exc:
        print(f"error: domain: {exc}", file=sys.stderr)
        return EXIT_FAILURE
    except CommandError as exc:
        print(f"error: failed: {exc}", file=sys.stderr)
        return EXIT_FAILURE
    except (gf2.SingularError, stabilizer.StabilizerError, oracle.TooLargeError, ValueError) as exc:
        print(f"error: invalid: {exc}", file=sys.stderr)
        return EXIT_FAILURE


def _dispatch(args):
    handler = {
        "reduce": _cmd_reduce,
        "decompose": _cmd_decompose,
        "apply": _cmd_apply,
        "orbit": _cmd_orbit,
        "canon": _cmd_canon,
        "equiv": _cmd_equiv,
        "export-dot": _cmd_export_dot,
        "oracle-check": _cmd_oracle_check,
    }[args.command]
    return handler(args)


def _say(args, message):
    if not args.quiet:
        print(message)


def _read(path):
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"{path}: {exc.strerror or exc}") from exc


def _write(path, text):
    Path(path).write_text(text)


def _load_graph(path):
    try:
        return graphs.parse_edge_list(_read(path))
    except ParseError as exc:
        raise ParseError(f"{path}: {exc}") from exc


def _load_stabilizer(path):
    try:
        return stabilizer.parse_stabilizer(_read(path))
    except ParseError as exc:
        raise ParseError(f"{path}: {exc}") from exc


def _load_clifford(path):
    try:
        return clifford.parse_clifford(_read(path))
    except ParseError as exc:
        raise ParseError(f"{path}: {exc}") from exc


def _load_sequence(path):
    try:
        return decomposition.parse_sequence(_read(path))
    except ParseError as exc:
        raise ParseError(f"{path}: {exc}") from exc


def _load_state_input(path):
    """Graph or stabilizer file, sniffed by the first meaningful line."""
    text = _read(path)
    first = next(
        (ln.split("#", 1)[0].strip() for ln in text.splitlines() if ln.split("#", 1)[0].strip()),
        "",
    )
    try:
        if len(first.split()) == 1 and first.isdigit():
            g = graphs.parse_edge_list(text)
            return stabilizer.from_graph(g), g
        return stabilizer.parse_stabilizer(text), None
    except ParseError as exc:
        raise ParseError(f"{path}: {exc}") from exc


def _stem(path):
    return str(Path(path).with_suffix(""))


def _cmd_reduce(args):
    stab = _load_stabilizer(args.stabilizer)
    witness = reduction.to_graph_state(stab)
    stem = _stem(args.stabilizer)
    graph_path = args.out_graph or stem + ".graph"
    clifford_path = args.out_clifford or stem + ".lc"
    basis_path = args.out_basis or stem + ".basis"
    _write(graph_path, graphs.format_edge_list(witness.graph))
    _write(clifford_path, clifford.format_clifford(witness.q))
    _write(basis_path, gf2.format_matrix(witness.r))
    _say(args, f"graph with {len(witness.graph.edges())} edges -> {graph_path}")
    _say(args, f"witness operation -> {clifford_path}")
    _say(args, f"basis change -> {basis_path}")
    if args.verify:
        _verify_reduction(args, stab, witness)
    return EXIT_OK


def _verify_reduction(args, stab, witness):
    if stab.n > oracle.ORACLE_QUBIT_LIMIT:
        _say(args, "oracle check skipped: too many qubits")
        return
    state = oracle.stabilized_state(stab, seed=args.seed)
    moved = oracle.apply_lifted(state, oracle.lift_local_clifford(witness.q))
    target = stabilizer.from_graph(witness.graph)
    if not oracle.stabilized_up_to_signs(moved, target):
        raise CommandError("oracle check failed: witness does not map onto the graph state")
    _say(args, "oracle check: ok")


def _cmd_decompose(args):
    q = _load_clifford(args.clifford)
    g = _load_graph(args.graph)
    seq = decomposition.decompose_action(q, g)
    out = args.out or _stem(args.graph) + ".lcs"
    _write(out, decomposition.format_sequence(seq))
    _say(args, f"{len(seq)} steps -> {out}")
    if args.verify:
        _verify_decomposition(args, q, g, seq)
    return EXIT_OK


def _verify_decomposition(args, q, g, seq):
    if g.n > oracle.ORACLE_QUBIT_LIMIT:
        _say(args, "oracle check skipped: too many qubits")
        return
    state = oracle.build_graph_state(g)
    cur = g
    for v in seq.expand():
        step_q = clifford.local_complement_op(cur, v)
        state = oracle.apply_lifted(state, oracle.lift_local_clifford(step_q))
        cur = graphs.local_complement(cur, v)
    target = stabilizer.from_graph(clifford.graph_action(q, g).image)
    if not oracle.stabilized_up_to_signs(state, target):
        raise CommandError("oracle check failed: lifted sequence misses the target state")
    _say(args, "oracle check: ok")


def _cmd_apply(args):
    g = _load_graph(args.graph)
    seq = _load_sequence(args.sequence)
    result = decomposition.apply_sequence(g, seq)
    out = args.out or _stem(args.graph) + ".out.graph"
    _write(out, graphs.format_edge_list(result))
    _say(args, f"result graph with {len(result.edges())} edges -> {out}")
    if args.verify:
        check = g
        for v in seq.expand():
            check = graphs.Graph(graphs.local_complement_matrix_form(check.adj, v))
        if check != result:
            raise CommandError("matrix-form cross-check disagrees with edge toggling")
        _say(args, "matrix-form cross-check: ok")
    return EXIT_OK


def _cmd_orbit(args):
    g = _load_graph(args.graph)
    cap = args.cap if args.cap is not None else orbit.DEFAULT_MEMBER_CAP
    result = orbit.enumerate_orbit(g, member_cap=cap)
    count = len(result.members)
    _say(args, f"{count} member{'s' if count != 1 else ''}")
    _say(args, "canonical representative:")
    _say(args, graphs.format_edge_list(result.canonical).rstrip("\n"))
    ordered = sorted(result.members, key=orbit._lex_key)
    if args.members:
        blocks = [graphs.format_edge_list(m) for m in ordered]
        _write(args.members, "# orbit members\n" + "".join(b + "--\n" for b in blocks))
        _say(args, f"members -> {args.members}")
    if args.dot:
        _write(args.dot, "".join(graphs.to_dot(m) for m in ordered))
        _say(args, f"DOT bundle -> {args.dot}")
    if args.verify:
        for member, seq in result.transcripts.items():
            if decomposition.apply_sequence(g, seq) != member:
                raise CommandError("transcript replay mismatch")
        _say(args, "transcript replay: ok")
    return EXIT_OK


def _cmd_canon(args):
    g = _load_graph(args.graph)
    cap = args.cap if args.cap is not None else orbit.DEFAULT_MEMBER_CAP
    rep = orbit.canonical_form(g, member_cap=cap)
    text = graphs.format_edge_list(rep)
    if args.out:
        _write(args.out, text)
        _say(args, f"canonical representative -> {args.out}")
    else:
        _say(args, text.rstrip("\n"))
    return EXIT_OK


def _cmd_equiv(args):
    first, first_graph = _load_state_input(args.first)
    second, _ = _load_state_input(args.second)
    cap = args.cap if args.cap is not None else equivalence.DEFAULT_SEARCH_CAP
    result = equivalence.test_equivalence(first, second, search_cap=cap)
    if isinstance(result, equivalence.Equivalent):
        _write(args.witness, clifford.format_clifford(result.q))
        _say(args, "equivalent")
        _say(args, f"witness -> {args.witness}")
        if args.verify:
            _verify_equivalence(args, first, second, result.q)
        return EXIT_OK
    if isinstance(result, equivalence.Inequivalent):
        _say(args, "inequivalent")
        return EXIT_INEQUIVALENT
    _say(args, f"indeterminate (searched {result.searched} of 2^{result.space_dim})")
    return EXIT_INDETERMINATE


def _verify_equivalence(args, first, second, q):
    if first.n > oracle.ORACLE_QUBIT_LIMIT:
        _say(args, "oracle check skipped: too many qubits")
        return
    state = oracle.stabilized_state(first, seed=args.seed)
    moved = oracle.apply_lifted(state, oracle.lift_local_clifford(q))
    if not oracle.stabilized_up_to_signs(moved, second):
        raise CommandError("oracle check failed: witness does not connect the states")
    _say(args, "oracle check: ok")


def _cmd_export_dot(args):
    g = _load_graph(args.graph)
    text = graphs.to_dot(g)
    if args.out:
        _write(args.out, text)
        _say(args, f"DOT -> {args.out}")
    else:
        _say(args, text.rstrip("\n"))
    return EXIT_OK


def _cmd_oracle_check(args):
    g = _load_graph(args.graph)
    state = oracle.build_graph_state(g)
    err = oracle.defining_equation_error(state, g)
    _say(args, f"defining equations satisfied (max deviation {err:.2e})")
    stab = stabilizer.from_graph(g)
    projected = oracle.stabilized_state(stab, seed=args.seed)
    overlap = abs(state.inner(projected))
    if abs(overlap - 1.0) > oracle.ATOL:
        raise CommandError("projector state disagrees with the circuit construction")
    _say(args, "projector construction agrees with the circuit construction")
    return EXIT_OK


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
