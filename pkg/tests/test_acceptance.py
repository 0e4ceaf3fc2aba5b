"""Acceptance suite: one test per criterion, one PASS line each.

Run ``pytest tests/test_acceptance.py -s`` to see the per-criterion lines
(they are also shown for any failing criterion by pytest itself).
"""

import itertools
import math

import numpy as np

from ghzgames import games, logic, quantum
from ghzgames.linalg import EPS, commutes, is_projector, rank

TOL = EPS  # 1e-9 throughout unless a criterion states otherwise


def _report(number, text):
    print(f"ACCEPTANCE {number} PASS: {text}")


ANTIDIAGONALS = {
    "yyx": (-1, -1, 1, 1, 1, 1, -1, -1),
    "yxy": (-1, 1, -1, 1, 1, -1, 1, -1),
    "xyy": (-1, 1, 1, -1, -1, 1, 1, -1),
    "xxx": (1, 1, 1, 1, 1, 1, 1, 1),
}

SIGN_TABLE = (
    (-1, -1, -1, +1),
    (+1, +1, +1, -1),
    (-1, +1, +1, +1),
    (+1, -1, -1, -1),
    (+1, -1, +1, +1),
    (-1, +1, -1, -1),
    (+1, +1, -1, +1),
    (-1, -1, +1, -1),
)

EXPANSION_FIRST = {
    "xxx": {(1, 1, 1): 0.5, (1, -1, -1): 0.5, (-1, 1, -1): 0.5, (-1, -1, 1): 0.5},
    "xyy": {(1, 1, -1): 0.5, (1, -1, 1): 0.5, (-1, 1, 1): 0.5, (-1, -1, -1): 0.5},
    "yxy": {(1, 1, -1): 0.5, (1, -1, 1): 0.5, (-1, 1, 1): 0.5, (-1, -1, -1): 0.5},
    "yyx": {(1, 1, -1): 0.5, (1, -1, 1): 0.5, (-1, 1, 1): 0.5, (-1, -1, -1): 0.5},
}

EXPANSION_LAST = {
    "xxx": {(1, 1, -1): -0.5, (1, -1, 1): -0.5, (-1, 1, 1): 0.5, (-1, -1, -1): 0.5},
    "xyy": {(1, 1, 1): -0.5, (1, -1, -1): -0.5, (-1, 1, -1): 0.5, (-1, -1, 1): 0.5},
    "yxy": {(1, 1, -1): 0.5j, (1, -1, 1): 0.5j, (-1, 1, 1): -0.5j, (-1, -1, -1): -0.5j},
    "yyx": {(1, 1, -1): 0.5j, (1, -1, 1): 0.5j, (-1, 1, 1): -0.5j, (-1, -1, -1): -0.5j},
}

WITNESS_STRATEGIES = {
    (-1, -1, -1, -1): ((-1, -1, -1), (-1, -1, -1)),
    (-1, -1, +1, +1): ((-1, -1, +1), (-1, +1, -1)),
    (-1, +1, +1, -1): ((-1, -1, -1), (-1, -1, +1)),
    (-1, +1, -1, +1): ((-1, -1, +1), (-1, +1, +1)),
    (+1, -1, +1, -1): ((-1, -1, -1), (-1, +1, -1)),
    (+1, -1, -1, +1): ((-1, -1, +1), (-1, -1, -1)),
    (+1, +1, -1, -1): ((-1, -1, -1), (-1, +1, +1)),
    (+1, +1, +1, +1): ((+1, +1, +1), (+1, +1, +1)),
}


def test_criterion_1_operator_block():
    ops = {c: quantum.context_operator(c) for c in quantum.GHZ_CONTEXTS}
    for label, entries in ANTIDIAGONALS.items():
        reference = np.zeros((8, 8), dtype=complex)
        for i, v in enumerate(entries):
            reference[i, 7 - i] = v
        assert np.abs(ops[label] - reference).max() <= TOL
    labels = list(quantum.GHZ_CONTEXTS)
    for a, b in itertools.combinations(labels, 2):
        assert commutes(ops[a], ops[b], TOL)
    product = ops["yyx"] @ ops["yxy"] @ ops["xyy"] @ ops["xxx"]
    assert np.abs(product + np.eye(8)).max() <= TOL
    _report(1, "context operators antidiagonal-exact, mutually commuting, product -I")


def test_criterion_2_sign_table_both_variants():
    expected = np.array(SIGN_TABLE)
    for variant in ("standard", "permuted"):
        table = quantum.sign_table(quantum.ghz_basis(variant))
        assert np.array_equal(table.entries, expected), variant
    _report(2, "sign table reproduced exactly for standard and permuted bases")


def test_criterion_3_expansions():
    basis = quantum.ghz_basis()
    for state, reference in ((basis.vectors[0], EXPANSION_FIRST), (basis.vectors[7], EXPANSION_LAST)):
        for context, table in reference.items():
            got = dict(quantum.expand(state, quantum.product_basis(context)))
            for outcome in got:
                assert abs(got[outcome] - table.get(outcome, 0.0)) <= TOL, (context, outcome)
            nonzero = {o for o, c in got.items() if abs(c) > TOL}
            assert nonzero == set(table)
    _report(3, "first/last state expansions match coefficient tables incl. imaginary phases")


def test_criterion_4_state_counts_and_partition_logic():
    isolated = logic.ghz_isolated_logic()
    iso_states = logic.enumerate_states(isolated)
    assert len(iso_states) == 4096
    assert logic.is_separating(isolated, iso_states)

    tightened = logic.tightened_ghz_logic()
    t_states = logic.enumerate_states(tightened)
    assert len(t_states) == 8
    assert logic.is_separating(tightened, t_states)

    pl = logic.partition_logic(tightened, t_states)
    reference = logic.tightened_partition_logic()
    mapping = {}
    for i in range(1, 9):
        candidates = None
        for atom, label in pl.atom_labels.items():
            if i in label:
                balls = reference.atom_labels[atom]
                candidates = balls if candidates is None else candidates & balls
        assert candidates is not None and len(candidates) == 1
        mapping[i] = next(iter(candidates))
    assert sorted(mapping.values()) == list(range(1, 9))
    for k in range(8):
        ours = {frozenset(mapping[i] for i in block) for block in pl.contexts[k]}
        assert ours == set(reference.contexts[k])
    _report(4, "4096 and 8 separating states; tightened partition logic matches up to a bijection")


def test_criterion_5_game_dichotomy_and_witness_table():
    quantum_patterns, classical_patterns = set(), set()
    for pattern in itertools.product((1, -1), repeat=4):
        game = games.GameSpec.three_party(pattern)
        share = games.quantum_share_for(game)
        value, winners = games.best_classical_strategies(game)
        if share is not None:
            quantum_patterns.add(pattern)
            assert value < 1.0
            assert tuple(quantum.sign_table(quantum.ghz_basis()).row(share)) == pattern
        if value == 1.0:
            classical_patterns.add(pattern)
            assert share is None
    assert len(quantum_patterns) == 8
    assert len(classical_patterns) == 8
    assert quantum_patterns.isdisjoint(classical_patterns)
    assert all(int(np.prod(p)) == -1 for p in quantum_patterns)
    assert all(int(np.prod(p)) == +1 for p in classical_patterns)
    assert classical_patterns == set(WITNESS_STRATEGIES)
    for targets, (x_values, y_values) in WITNESS_STRATEGIES.items():
        strategy = games.ClassicalStrategy(tuple(zip(x_values, y_values)))
        game = games.GameSpec.three_party(targets)
        assert all(
            strategy.context_product(c) == t for c, t in zip(game.contexts, game.targets)
        )
        _, winners = games.best_classical_strategies(game)
        assert strategy in winners
    assert dict(games.CLASSICALLY_WINNABLE_GAMES) == {
        t: games.ClassicalStrategy(tuple(zip(x, y))) for t, (x, y) in WITNESS_STRATEGIES.items()
    }
    _report(5, "exactly 8 odd patterns have shares, 8 even ones perfect classical witnesses")


def test_criterion_6_quantum_play_and_classical_value():
    basis = quantum.ghz_basis()
    rng = np.random.default_rng(20200807)
    for pattern in itertools.product((1, -1), repeat=4):
        if int(np.prod(pattern)) != -1:
            continue
        game = games.GameSpec.three_party(pattern)
        index = games.quantum_share_for(game)
        strategy = games.QuantumStrategy(share=basis.vectors[index])
        exact = games.exact_win_probabilities(game, strategy)
        assert all(abs(p - 1.0) <= TOL for p in exact)
        result = games.play_quantum(game, strategy, 10_000, rng)
        assert result.win_rate == 1.0
        assert result.wins_by_context == result.plays_by_context
    results = games.enumerate_classical(games.GameSpec.three_party("---+"))
    assert len(results) == 64
    assert max(sum(f) for _, f in results) == 3
    assert games.classical_value(games.GameSpec.three_party("---+")) == 0.75
    _report(6, "all 8 shares win exactly (Born support + 10^4 rounds); classical value 3/4")


def test_criterion_7_stranger_than_quantum():
    matrix = games.stranger_constraint_matrix()
    assert matrix.shape == (8, 4)
    assert rank(matrix, TOL) == 4
    assert np.linalg.matrix_rank(matrix, tol=1e-9) == 4
    assert games.stranger_quantum_infeasible() == (True, 4)

    results = games.enumerate_classical(games.GameSpec.two_party("+++-"))
    assert len(results) == 16
    assert max(sum(f) for _, f in results) == 3
    assert games.classical_value(games.GameSpec.two_party("+++-")) == 0.75

    rng = np.random.default_rng(517)
    for i1, i2 in itertools.product((0, 1), repeat=2):
        for _ in range(2_500):
            o1, o2 = games.pr_box(i1, i2, rng)
            assert o1 ^ o2 == i1 & i2
    result = games.play_prbox(
        games.GameSpec.two_party("+++-"), games.PrBoxStrategy(), 10_000, np.random.default_rng(99)
    )
    assert result.wins_by_context == result.plays_by_context
    assert sum(result.wins_by_context) == 10_000
    _report(7, "rank-4 infeasibility, classical value 3/4 over 16, box wins 10^4/10^4, XOR law exact")


def test_criterion_8_entropy():
    h01 = quantum.outcome_entropy((0, 1))
    h11 = quantum.outcome_entropy((-1, 1))
    assert abs(h01 - 0.5436) <= 0.0005
    assert h11 == 1.0
    closed_form = -(1 / 8) * math.log2(1 / 8) - (7 / 8) * math.log2(7 / 8)
    assert abs(h01 - closed_form) <= TOL
    _report(8, "triple-product entropies 0.5436 +- 0.0005 and exactly 1 bit")


def test_criterion_9_property_suite():
    basis = quantum.ghz_basis()
    for label in quantum.GHZ_CONTEXTS:
        for proj in quantum.lagrange_projectors(quantum.context_operator(label)):
            assert is_projector(proj, TOL)
    for variant in ("standard", "permuted"):
        vectors = quantum.ghz_basis(variant).vectors
        assert np.abs(vectors.conj() @ vectors.T - np.eye(8)).max() <= TOL

    rng = np.random.default_rng(424242)
    for _ in range(100):
        amps = rng.normal(size=8) + 1j * rng.normal(size=8)
        amps /= np.linalg.norm(amps)
        state = quantum.ghz_superposition(amps)
        assert np.abs(state - sum(a * v for a, v in zip(amps, basis.vectors))).max() <= TOL
        context = quantum.GHZ_CONTEXTS[int(rng.integers(0, 4))]
        product = quantum.product_basis(context)
        coeffs = np.array([c for _, c in quantum.expand(state, product)])
        assert np.abs(coeffs @ product.vectors - state).max() <= TOL
        probs = [p for _, p in quantum.born_probabilities(state, product)]
        assert abs(sum(probs) - 1.0) <= TOL

    game = games.GameSpec.three_party("---+")
    strategy = games.QuantumStrategy(share=basis.vectors[0])
    first = games.play_quantum(game, strategy, 2_000, np.random.default_rng(12345))
    second = games.play_quantum(game, strategy, 2_000, np.random.default_rng(12345))
    assert first == second
    product = quantum.product_basis("xxx")
    rng_a, rng_b = np.random.default_rng(8), np.random.default_rng(8)
    draws_a = [quantum.sample_outcome(basis.vectors[0], product, rng_a) for _ in range(50)]
    draws_b = [quantum.sample_outcome(basis.vectors[0], product, rng_b) for _ in range(50)]
    assert draws_a == draws_b and len(set(draws_a)) > 1
    _report(9, "projectors, orthonormality, 100 reconstructions, Born sums, seeded replay")
