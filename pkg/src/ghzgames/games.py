"""Parity game engine: classical, quantum, urn-contextual and nonlocal-box play.

A game fixes a target sign per measurement context. Noncontextual classical
strategies assign one value per observable per party; quantum strategies share
an entangled state and measure locally; the two-party variant admits a perfect
nonlocal-box strategy that no quantum share can match.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from . import quantum
from .linalg import EPS, is_unit, rank
from .logic import PartitionLogic
from .quantum import GHZ_CONTEXTS, TWO_PARTY_CONTEXTS

Targets = tuple[int, ...]


def parse_targets(text: str) -> Targets:
    """Turn a sign string like ``"---+"`` into a tuple of +-1 targets."""
    if any(ch not in "+-" for ch in text) or not text:
        raise ValueError(f"targets must be a string over '+'/'-', got {text!r}")
    return tuple(1 if ch == "+" else -1 for ch in text)


def format_targets(targets: Targets) -> str:
    return "".join("+" if t > 0 else "-" for t in targets)


@dataclass(frozen=True)
class GameSpec:
    """Measurement contexts, one target sign each, for 2 or 3 parties."""

    contexts: tuple[str, ...]
    targets: Targets
    parties: int

    def __post_init__(self):
        if len(self.contexts) != len(self.targets):
            raise ValueError("need one target per context")
        if any(len(c) != self.parties for c in self.contexts):
            raise ValueError("every context must name one observable per party")
        if any(t not in (1, -1) for t in self.targets):
            raise ValueError("targets must be +1 or -1")

    @classmethod
    def three_party(cls, targets: Targets | str) -> "GameSpec":
        """The standard four-context game; target order (yyx, yxy, xyy, xxx)."""
        t = parse_targets(targets) if isinstance(targets, str) else tuple(targets)
        if len(t) != 4:
            raise ValueError("three-party games take four targets")
        return cls(contexts=GHZ_CONTEXTS, targets=t, parties=3)

    @classmethod
    def two_party(cls, targets: Targets | str) -> "GameSpec":
        """The two-party variant on contexts (xx, xy, yx, yy)."""
        t = parse_targets(targets) if isinstance(targets, str) else tuple(targets)
        if len(t) != 4:
            raise ValueError("two-party games take four targets")
        return cls(contexts=TWO_PARTY_CONTEXTS, targets=t, parties=2)


@dataclass(frozen=True)
class ClassicalStrategy:
    """One fixed (x value, y value) pair per party, used in every context."""

    assignments: tuple[tuple[int, int], ...]

    def value(self, party: int, observable: str) -> int:
        x, y = self.assignments[party]
        return x if observable == "x" else y

    def context_product(self, context: str) -> int:
        prod = 1
        for party, ch in enumerate(context):
            prod *= self.value(party, ch)
        return prod


@dataclass(frozen=True, eq=False)
class QuantumStrategy:
    """A shared unit state; each party measures the x or y basis as told."""

    share: np.ndarray

    def __post_init__(self):
        if not is_unit(self.share, tol=1e-6):
            raise ValueError("share must be a unit vector")


@dataclass(frozen=True)
class PrBoxStrategy:
    """Box wiring: x encodes input 0, y input 1; output 0 means +1, 1 means -1.

    ``flip`` (1-based party index or None) negates that party's announced
    value, which swaps the pair of games the wiring wins.
    """

    flip: int | None = None


@dataclass(frozen=True)
class PlayResult:
    rounds: int
    plays_by_context: tuple[int, ...]
    wins_by_context: tuple[int, ...]

    @property
    def win_rate(self) -> float:
        return sum(self.wins_by_context) / self.rounds if self.rounds else 0.0


# The eight target patterns with even sign product cannot be won with any
# shared-basis state but each has perfect noncontextual assignments; one
# published witness per pattern (per-party x values, then y values).
CLASSICALLY_WINNABLE_GAMES = (
    ((-1, -1, -1, -1), ClassicalStrategy(((-1, -1), (-1, -1), (-1, -1)))),
    ((-1, -1, +1, +1), ClassicalStrategy(((-1, -1), (-1, +1), (+1, -1)))),
    ((-1, +1, +1, -1), ClassicalStrategy(((-1, -1), (-1, -1), (-1, +1)))),
    ((-1, +1, -1, +1), ClassicalStrategy(((-1, -1), (-1, +1), (+1, +1)))),
    ((+1, -1, +1, -1), ClassicalStrategy(((-1, -1), (-1, +1), (-1, -1)))),
    ((+1, -1, -1, +1), ClassicalStrategy(((-1, -1), (-1, -1), (+1, -1)))),
    ((+1, +1, -1, -1), ClassicalStrategy(((-1, -1), (-1, +1), (-1, +1)))),
    ((+1, +1, +1, +1), ClassicalStrategy(((+1, +1), (+1, +1), (+1, +1)))),
)


def parity_feasible_classically(game: GameSpec) -> bool:
    """Whether the multiply-everything parity argument permits a perfect win.

    Requires every (party, observable) pair to occur an even number of times
    across the contexts; the product of all assigned values is then forced to
    +1, so a perfect strategy can exist only if the targets multiply to +1.
    """
    for party in range(game.parties):
        for obs in "xy":
            if sum(1 for c in game.contexts if c[party] == obs) % 2:
                raise ValueError(f"observable {obs!r} of party {party + 1} has odd multiplicity")
    return int(np.prod(game.targets)) == 1


def all_classical_strategies(parties: int) -> list[ClassicalStrategy]:
    pairs = [(x, y) for x in (1, -1) for y in (1, -1)]
    return [ClassicalStrategy(combo) for combo in itertools.product(pairs, repeat=parties)]


def enumerate_classical(game: GameSpec) -> list[tuple[ClassicalStrategy, tuple[bool, ...]]]:
    """Every noncontextual strategy with its per-context win flags."""
    if game.parties not in (2, 3):
        raise ValueError("only 2- and 3-party games are supported")
    out = []
    for strat in all_classical_strategies(game.parties):
        flags = tuple(strat.context_product(c) == t for c, t in zip(game.contexts, game.targets))
        out.append((strat, flags))
    return out


def _context_distribution(game: GameSpec, distribution) -> np.ndarray:
    if distribution is None:
        return np.full(len(game.contexts), 1.0 / len(game.contexts))
    dist = np.asarray(distribution, dtype=float)
    if dist.shape != (len(game.contexts),) or np.any(dist < 0) or abs(dist.sum() - 1.0) > 1e-9:
        raise ValueError("context distribution must be nonnegative and sum to 1")
    return dist


def classical_value(game: GameSpec, context_distribution=None) -> float:
    """Best expected win rate over all noncontextual strategies."""
    return best_classical_strategies(game, context_distribution)[0]


def best_classical_strategies(
    game: GameSpec, context_distribution=None
) -> tuple[float, list[ClassicalStrategy]]:
    """The optimum and every strategy attaining it (ties matter here)."""
    dist = _context_distribution(game, context_distribution)
    best = -1.0
    winners: list[ClassicalStrategy] = []
    for strat, flags in enumerate_classical(game):
        value = float(sum(p for p, w in zip(dist, flags) if w))
        if value > best + 1e-12:
            best, winners = value, [strat]
        elif abs(value - best) <= 1e-12:
            winners.append(strat)
    return best, winners


def quantum_share_for(game: GameSpec, table: quantum.SignTable | None = None) -> int | None:
    """Index of the shared-basis state whose signature equals the targets.

    Exactly the eight target patterns with odd sign product have one; even
    patterns return None.
    """
    if game.contexts != GHZ_CONTEXTS:
        raise ValueError("shared-basis lookup needs the standard three-party contexts")
    if table is None:
        table = quantum.sign_table(quantum.ghz_basis())
    for i in range(len(table.entries)):
        if table.row(i) == game.targets:
            return i
    return None


def exact_win_probabilities(game: GameSpec, strategy: QuantumStrategy) -> tuple[float, ...]:
    """Born weight on the winning outcomes, context by context."""
    probs = []
    for context, target in zip(game.contexts, game.targets):
        basis = quantum.product_basis(context)
        mass = sum(
            p for signs, p in quantum.born_probabilities(strategy.share, basis) if int(np.prod(signs)) == target
        )
        probs.append(float(mass))
    return tuple(probs)


def play_quantum(
    game: GameSpec,
    strategy: QuantumStrategy,
    rounds: int,
    rng: np.random.Generator,
    context_distribution=None,
) -> PlayResult:
    """Simulate seeded rounds: draw a context, sample outcomes, score the product."""
    if rounds < 1:
        raise ValueError("rounds must be positive")
    dist = _context_distribution(game, context_distribution)
    bases = [quantum.product_basis(c) for c in game.contexts]
    outcome_probs = []
    win_mask = []
    for basis, target in zip(bases, game.targets):
        probs = np.array([p for _, p in quantum.born_probabilities(strategy.share, basis)])
        outcome_probs.append(probs / probs.sum())
        win_mask.append(np.array([int(np.prod(s)) == target for s in basis.outcome_signs]))
    draws = rng.choice(len(game.contexts), size=rounds, p=dist)
    plays, wins = [], []
    for ci in range(len(game.contexts)):
        n = int(np.sum(draws == ci))
        plays.append(n)
        if n == 0:
            wins.append(0)
            continue
        picks = rng.choice(len(outcome_probs[ci]), size=n, p=outcome_probs[ci])
        wins.append(int(win_mask[ci][picks].sum()))
    return PlayResult(rounds=rounds, plays_by_context=tuple(plays), wins_by_context=tuple(wins))


# Outcome triples of the shared state's support per context, in the reading
# order of its four expansions; the urn strategy answers with these.
_URN_ANSWERS = {
    "xxx": ((+1, +1, +1), (+1, -1, -1), (-1, +1, -1), (-1, -1, +1)),
    "xyy": ((-1, -1, -1), (-1, +1, +1), (+1, -1, +1), (+1, +1, -1)),
    "yxy": ((-1, -1, -1), (-1, +1, +1), (+1, -1, +1), (+1, +1, -1)),
    "yyx": ((-1, -1, -1), (-1, +1, +1), (+1, -1, +1), (+1, +1, -1)),
}

# Game context -> which of the partition logic's first four contexts it is.
_URN_CONTEXT_INDEX = {"xxx": 0, "xyy": 1, "yxy": 2, "yyx": 3}


def contextual_classical_strategy(
    pl: PartitionLogic, ball: int, context: str
) -> tuple[int, int, int]:
    """Answer triple for a drawn ball once the ward discloses the context.

    The ball's block within the disclosed context determines the answer:
    blocks are ordered by largest element and matched to the context's
    support triples, so e.g. the block {3,4} of the first context answers
    (+1, -1, -1). Context-dependent by construction: no fixed per-observable
    assignment reproduces it.
    """
    if context not in _URN_CONTEXT_INDEX:
        raise ValueError(f"context {context!r} is not one of the four game contexts")
    blocks = pl.contexts[_URN_CONTEXT_INDEX[context]]
    ordered = sorted(blocks, key=max)
    for position, block in enumerate(ordered):
        if ball in block:
            return _URN_ANSWERS[context][position]
    raise ValueError(f"ball {ball} is not covered by context {context!r}")


def play_contextual(
    game: GameSpec, pl: PartitionLogic, rounds: int, rng: np.random.Generator
) -> PlayResult:
    """Urn play with disclosed contexts: uniform ball, uniform context."""
    if game.contexts != GHZ_CONTEXTS:
        raise ValueError("urn play needs the standard three-party contexts")
    if rounds < 1:
        raise ValueError("rounds must be positive")
    answers = {
        (ball, c): contextual_classical_strategy(pl, ball, c)
        for ball in range(1, pl.state_count + 1)
        for c in game.contexts
    }
    draws = rng.choice(len(game.contexts), size=rounds)
    balls = rng.integers(1, pl.state_count + 1, size=rounds)
    plays = [0] * len(game.contexts)
    wins = [0] * len(game.contexts)
    for ci, ball in zip(draws, balls):
        ci = int(ci)
        context = game.contexts[ci]
        plays[ci] += 1
        triple = answers[(int(ball), context)]
        if int(np.prod(triple)) == game.targets[ci]:
            wins[ci] += 1
    return PlayResult(rounds=rounds, plays_by_context=tuple(plays), wins_by_context=tuple(wins))


def stranger_constraint_matrix() -> np.ndarray:
    """The stacked two-party orthogonality constraints as an 8x4 system.

    Local bases are pinned to x+ = (1,0), x- = (0,-1), y+- = (1,+-i)/sqrt(2);
    rows are the conjugated product vectors, so a perfect share would be a
    nonzero kernel element.
    """
    x_p, x_m = np.array([1, 0], dtype=complex), np.array([0, -1], dtype=complex)
    y_p, y_m = quantum.Y_PLUS, quantum.Y_MINUS
    kets = (
        np.kron(x_p, x_p),
        np.kron(x_m, x_m),
        np.kron(x_p, y_p),
        np.kron(x_m, y_m),
        np.kron(y_p, x_p),
        np.kron(y_m, x_m),
        np.kron(y_p, y_m),
        np.kron(y_m, y_p),
    )
    return np.array([k.conj() for k in kets])


def stranger_quantum_infeasible() -> tuple[bool, int]:
    """(infeasible, rank): full column rank means only the zero share works."""
    matrix = stranger_constraint_matrix()
    r = rank(matrix, EPS)
    return r == matrix.shape[1], r


def pr_box(i1: int, i2: int, rng: np.random.Generator) -> tuple[int, int]:
    """One box invocation: uniform first output, XOR law exact on every call."""
    if i1 not in (0, 1) or i2 not in (0, 1):
        raise ValueError("box inputs must be bits")
    o1 = int(rng.integers(0, 2))
    return o1, o1 ^ (i1 & i2)


def play_prbox(
    game: GameSpec, strategy: PrBoxStrategy, rounds: int, rng: np.random.Generator
) -> PlayResult:
    """Two-party play through the box wiring, scored against the targets."""
    if game.contexts != TWO_PARTY_CONTEXTS:
        raise ValueError("box play needs the two-party contexts (xx, xy, yx, yy)")
    if rounds < 1:
        raise ValueError("rounds must be positive")
    if strategy.flip not in (None, 1, 2):
        raise ValueError("flip must be None, 1 or 2")
    inputs = np.array([[0 if ch == "x" else 1 for ch in c] for c in game.contexts])
    draws = rng.choice(len(game.contexts), size=rounds)
    o1 = rng.integers(0, 2, size=rounds)
    o2 = o1 ^ (inputs[draws, 0] & inputs[draws, 1])
    v1, v2 = 1 - 2 * o1, 1 - 2 * o2
    if strategy.flip == 1:
        v1 = -v1
    elif strategy.flip == 2:
        v2 = -v2
    targets = np.asarray(game.targets)
    won = (v1 * v2) == targets[draws]
    plays = tuple(int(np.sum(draws == ci)) for ci in range(len(game.contexts)))
    wins = tuple(int(np.sum(won & (draws == ci))) for ci in range(len(game.contexts)))
    return PlayResult(rounds=rounds, plays_by_context=plays, wins_by_context=wins)


def to_report(game: GameSpec, strategy: dict, result: PlayResult, seed: int) -> dict:
    """JSON-ready record of one play session."""
    return {
        "game": format_targets(game.targets),
        "contexts": list(game.contexts),
        "strategy": strategy,
        "rounds": result.rounds,
        "plays_by_context": list(result.plays_by_context),
        "wins_by_context": list(result.wins_by_context),
        "win_rate": result.win_rate,
        "seed": seed,
    }
