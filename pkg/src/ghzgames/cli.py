"""Command-line front end: verification, state enumeration, export and play.

Every invocation is deterministic given ``--seed``; machine-readable reports
are compact JSON on stdout, switchable to indented output with ``--pretty``.
Exit codes: 0 success / all checks pass, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import itertools
import json
import re
import sys
from pathlib import Path

import numpy as np

from . import games, logic, quantum
from .linalg import EPS, commutes, is_projector

VERIFY_CHECKS = (
    "operators",
    "commutation",
    "product",
    "projectors",
    "sign-table",
    "expansions",
    "maximal-operator",
)

# Antidiagonal entries of the four context operators, read top-right to
# bottom-left, used as the reference for `verify`.
_EXPECTED_ANTIDIAGONALS = {
    "yyx": (-1, -1, 1, 1, 1, 1, -1, -1),
    "yxy": (-1, 1, -1, 1, 1, -1, 1, -1),
    "xyy": (-1, 1, 1, -1, -1, 1, 1, -1),
    "xxx": (1, 1, 1, 1, 1, 1, 1, 1),
}

# Expansion references for the first and last shared-basis states:
# context -> {outcome triple: coefficient}.
_EXPECTED_EXPANSION_FIRST = {
    "xxx": {(1, 1, 1): 0.5, (1, -1, -1): 0.5, (-1, 1, -1): 0.5, (-1, -1, 1): 0.5},
    "xyy": {(1, 1, -1): 0.5, (1, -1, 1): 0.5, (-1, 1, 1): 0.5, (-1, -1, -1): 0.5},
    "yxy": {(1, 1, -1): 0.5, (1, -1, 1): 0.5, (-1, 1, 1): 0.5, (-1, -1, -1): 0.5},
    "yyx": {(1, 1, -1): 0.5, (1, -1, 1): 0.5, (-1, 1, 1): 0.5, (-1, -1, -1): 0.5},
}
_EXPECTED_EXPANSION_LAST = {
    "xxx": {(1, 1, -1): -0.5, (1, -1, 1): -0.5, (-1, 1, 1): 0.5, (-1, -1, -1): 0.5},
    "xyy": {(1, 1, 1): -0.5, (1, -1, -1): -0.5, (-1, 1, -1): 0.5, (-1, -1, 1): 0.5},
    "yxy": {(1, 1, -1): 0.5j, (1, -1, 1): 0.5j, (-1, 1, 1): -0.5j, (-1, -1, -1): -0.5j},
    "yyx": {(1, 1, -1): 0.5j, (1, -1, 1): 0.5j, (-1, 1, 1): -0.5j, (-1, -1, -1): -0.5j},
}


def _check_operators() -> tuple[bool, str]:
    for label, expected in _EXPECTED_ANTIDIAGONALS.items():
        op = quantum.context_operator(label)
        ref = np.zeros((8, 8), dtype=complex)
        for i, v in enumerate(expected):
            ref[i, 7 - i] = v
        if np.abs(op - ref).max() > EPS:
            return False, f"operator {label} deviates from its antidiagonal form"
    return True, "four context operators match their antidiagonal forms"


def _check_commutation() -> tuple[bool, str]:
    labelled = [(c, quantum.context_operator(c)) for c in quantum.GHZ_CONTEXTS]
    for (la, a), (lb, b) in itertools.combinations(labelled, 2):
        if not commutes(a, b, EPS):
            return False, f"contexts {la} and {lb} do not commute"
    return True, "all six operator pairs commute"


def _check_product() -> tuple[bool, str]:
    ops = [quantum.context_operator(c) for c in quantum.GHZ_CONTEXTS]
    prod = ops[0] @ ops[1] @ ops[2] @ ops[3]
    ok = np.abs(prod + np.eye(8)).max() <= EPS
    return ok, "product of four operators = -I"


def _check_projectors() -> tuple[bool, str]:
    for label in quantum.GHZ_CONTEXTS:
        plus, minus = quantum.lagrange_projectors(quantum.context_operator(label))
        for name, proj in (("+", plus), ("-", minus)):
            if not is_projector(proj, EPS):
                return False, f"E{name}({label}) is not a projector"
            if abs(np.trace(proj).real - 4.0) > EPS:
                return False, f"E{name}({label}) does not have trace 4"
    return True, "all eight spectral projectors idempotent, Hermitian, trace 4"


def _check_sign_table() -> tuple[bool, str]:
    expected = np.array(quantum.GHZ_SIGN_ROWS)
    for variant in ("standard", "permuted"):
        table = quantum.sign_table(quantum.ghz_basis(variant))
        if not np.array_equal(table.entries, expected):
            return False, f"{variant} basis sign table deviates"
    return True, "sign table reproduced for standard and permuted bases"


def _check_expansions() -> tuple[bool, str]:
    basis = quantum.ghz_basis()
    for state, reference, which in (
        (basis.vectors[0], _EXPECTED_EXPANSION_FIRST, "first"),
        (basis.vectors[7], _EXPECTED_EXPANSION_LAST, "last"),
    ):
        for context, table in reference.items():
            for signs, coeff in quantum.expand(state, quantum.product_basis(context)):
                if abs(coeff - table.get(signs, 0.0)) > EPS:
                    return False, f"{which} state, context {context}: coefficient {signs} deviates"
    return True, "expansions of first and last basis states match the references"


def _check_maximal_operator() -> tuple[bool, str]:
    basis = quantum.ghz_basis()
    big = quantum.maximal_operator(basis)
    for i, v in enumerate(basis.vectors):
        if np.abs(big @ v - (i + 1) * v).max() > EPS:
            return False, f"maximal operator misses eigenvalue {i + 1}"
    table = quantum.sign_table(basis)
    for j, label in enumerate(quantum.GHZ_CONTEXTS):
        rebuilt = quantum.signed_projector_sum(basis, table.entries[:, j])
        if np.abs(rebuilt - quantum.context_operator(label)).max() > EPS:
            return False, f"context {label} is not recovered from the signed projector sum"
    return True, "context operators are functions of the maximal operator"


_CHECK_FUNCTIONS = {
    "operators": _check_operators,
    "commutation": _check_commutation,
    "product": _check_product,
    "projectors": _check_projectors,
    "sign-table": _check_sign_table,
    "expansions": _check_expansions,
    "maximal-operator": _check_maximal_operator,
}


def _print_sign_table() -> None:
    table = quantum.sign_table(quantum.ghz_basis())
    header = "state  " + "  ".join(f"{c:>3}" for c in quantum.GHZ_CONTEXTS)
    print(header)
    for i in range(8):
        row = "  ".join(f"{'+' if s > 0 else '-':>3}" for s in table.entries[i])
        print(f"{i + 1:>5}  {row}")


def cmd_verify(args) -> int:
    names = [args.check] if args.check else list(VERIFY_CHECKS)
    failed = False
    for name in names:
        ok, detail = _CHECK_FUNCTIONS[name]()
        print(f"{'PASS' if ok else 'FAIL'} {name}: {detail}")
        if name == "sign-table" and (args.check or args.pretty):
            _print_sign_table()
        if not ok:
            failed = True
            break
    return 1 if failed else 0


def _load_logic(name: str) -> logic.Hypergraph:
    if name == "isolated":
        return logic.ghz_isolated_logic()
    if name == "tightened":
        return logic.tightened_ghz_logic()
    path = Path(name)
    if not path.is_file():
        raise ValueError(f"no such logic or file: {name}")
    return logic.from_json(path.read_text())


def cmd_states(args) -> int:
    h = _load_logic(args.logic)
    states = logic.enumerate_states(h)
    separating = logic.is_separating(h, states) if states else False
    print(f"{len(states)} states, separating: {str(separating).lower()}")
    if args.list:
        if args.format == "json":
            print(logic.states_to_json(states))
        else:
            for s in states:
                print("".join(str(v) for v in s))
    return 0


def cmd_partition(args) -> int:
    h = _load_logic(args.logic)
    states = logic.enumerate_states(h)
    pl = logic.partition_logic(h, states)
    payload = {
        "state_count": pl.state_count,
        "contexts": [[sorted(block) for block in ctx] for ctx in pl.contexts],
        "atom_labels": {atom: sorted(label) for atom, label in pl.atom_labels.items()},
    }
    print(_dumps(payload, args.pretty))
    return 0


def _dumps(payload, pretty: bool) -> str:
    if pretty:
        return json.dumps(payload, sort_keys=True, indent=2)
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def cmd_game(args) -> int:
    try:
        game = games.GameSpec.three_party(args.targets)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.mode == "classical":
        value, winners = games.best_classical_strategies(game)
        payload = {
            "game": args.targets,
            "mode": "classical",
            "value": value,
            "strategy_count": len(winners),
            "strategies": [
                {"x": [a[0] for a in s.assignments], "y": [a[1] for a in s.assignments]}
                for s in winners
            ],
        }
        print(_dumps(payload, args.pretty))
        return 0
    rng = np.random.default_rng(args.seed)
    if args.mode == "quantum":
        index = games.quantum_share_for(game)
        if index is None:
            print(f"no GHZ share exists for targets {args.targets}", file=sys.stderr)
            return 1
        strategy = games.QuantumStrategy(share=quantum.ghz_basis().vectors[index])
        result = games.play_quantum(game, strategy, args.rounds, rng)
        payload = games.to_report(
            game, {"type": "ghz-share", "basis_index": index + 1}, result, args.seed
        )
        payload["mode"] = "quantum"
        payload["exact_win_probabilities"] = list(games.exact_win_probabilities(game, strategy))
        print(_dumps(payload, args.pretty))
        return 0
    # contextual: urn strategy over the tightened partition logic
    pl = logic.tightened_partition_logic()
    result = games.play_contextual(game, pl, args.rounds, rng)
    payload = games.to_report(game, {"type": "urn", "logic": "tightened"}, result, args.seed)
    payload["mode"] = "contextual"
    print(_dumps(payload, args.pretty))
    return 0


def cmd_prbox(args) -> int:
    try:
        game = games.GameSpec.two_party(args.targets)
        strategy = games.PrBoxStrategy(flip=args.flip)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    rng = np.random.default_rng(args.seed)
    infeasible, certificate = games.stranger_quantum_infeasible()
    result = games.play_prbox(game, strategy, args.rounds, rng)
    payload = games.to_report(game, {"type": "pr-box", "flip": args.flip}, result, args.seed)
    payload["classical_value"] = games.classical_value(game)
    payload["quantum_infeasible"] = infeasible
    payload["rank"] = certificate
    print(_dumps(payload, args.pretty))
    return 0


def cmd_export(args) -> int:
    h = _load_logic(args.logic)
    print(logic.export(h, args.format), end="" if args.format == "dot" else "\n")
    return 0


def cmd_entropy(args) -> int:
    h01 = quantum.outcome_entropy((0, 1))
    h11 = quantum.outcome_entropy((-1, 1))
    print(f"H{{0,1}}^3 = {h01:.4f}, H{{-1,+1}}^3 = {h11:.4f}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ghzgames",
        description="Parity games on four measurement contexts: verify, enumerate, export, play.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="recompute operators, tables and expansions; PASS/FAIL per check")
    p.add_argument("--check", choices=VERIFY_CHECKS, help="run a single named check")
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("states", help="enumerate two-valued states of a logic")
    p.add_argument("logic", help="'isolated', 'tightened', or a hypergraph JSON file")
    p.add_argument("--list", action="store_true", help="also print every state")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_states)

    p = sub.add_parser("partition", help="partition-logic representation of a logic")
    p.add_argument("logic", help="'isolated', 'tightened', or a hypergraph JSON file")
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(func=cmd_partition)

    p = sub.add_parser("game", help="play or analyze a three-party game")
    p.add_argument(
        "targets",
        type=_sign_string,
        help="four signs over +/- in context order (yyx, yxy, xyy, xxx)",
    )
    p.add_argument("mode", choices=("classical", "quantum", "contextual"))
    p.add_argument("--rounds", type=int, default=10000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(func=cmd_game)

    p = sub.add_parser("prbox", help="two-party game: classical value, infeasibility rank, box play")
    p.add_argument(
        "targets",
        type=_sign_string,
        help="four signs over +/- in context order (xx, xy, yx, yy)",
    )
    p.add_argument("--rounds", type=int, default=10000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--flip", type=int, choices=(1, 2), help="negate this party's announced values")
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(func=cmd_prbox)

    p = sub.add_parser("export", help="serialize a logic as JSON or DOT")
    p.add_argument("logic", help="'isolated', 'tightened', or a hypergraph JSON file")
    p.add_argument("--format", choices=("json", "dot"), default="json")
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("entropy", help="triple-product entropies of the two outcome encodings")
    p.set_defaults(func=cmd_entropy)

    return parser


# Bare sign strings such as "---+" would be read as option flags; guard them
# with a dot that the `targets` converter strips again.
_SIGN_TOKEN = re.compile(r"-[+-]+$")


def _sign_string(text: str) -> str:
    return text[1:] if text.startswith(".") else text


def _guard_sign_tokens(argv) -> list[str]:
    return ["." + a if a != "--" and _SIGN_TOKEN.fullmatch(a) else a for a in argv]


def main(argv=None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    parser = build_parser()
    args = parser.parse_args(_guard_sign_tokens(argv))
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    run()
