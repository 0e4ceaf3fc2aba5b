"""Sweep all sixteen three-party games: classical optimum vs quantum share.

Usage: python scripts/games_sweep.py [--rounds N] [--seed S]
"""

import argparse
import itertools

import numpy as np

from ghzgames import games, quantum


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--rounds", type=int, default=2000)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    rng = np.random.default_rng(args.seed)
    basis = quantum.ghz_basis()
    print(f"{'targets':>8} {'classical':>10} {'perfect':>8} {'share':>6} {'quantum rate':>13}")
    for pattern in itertools.product("+-", repeat=4):
        targets = "".join(pattern)
        game = games.GameSpec.three_party(targets)
        value, winners = games.best_classical_strategies(game)
        index = games.quantum_share_for(game)
        if index is None:
            share, rate = "-", "-"
        else:
            strategy = games.QuantumStrategy(share=basis.vectors[index])
            result = games.play_quantum(game, strategy, args.rounds, rng)
            share, rate = str(index + 1), f"{result.win_rate:.4f}"
        perfect = len(winners) if value == 1.0 else 0
        print(f"{targets:>8} {value:>10.2f} {perfect:>8} {share:>6} {rate:>13}")


if __name__ == "__main__":
    main()
