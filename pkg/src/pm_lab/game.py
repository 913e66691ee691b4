"""Finite partial-monitoring games: the (loss, feedback) matrix pair.

A game is given by an N x M loss matrix and an N x M feedback matrix of
opaque symbol tokens.  Playing action i against outcome j costs loss[i, j]
but only reveals feedback[i, j].  Every question about what a learner can
infer reduces to the per-action signal matrices built here: the 0/1 matrix
mapping outcomes to the distinct symbols of that action's feedback row.

Actions and outcomes are 0-based throughout the Python API.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .errors import DuplicateLossRows, ShapeMismatch

SIMPLEX_TOL = 1e-12


@dataclass(frozen=True)
class SignalMatrix:
    """0/1 matrix mapping the M outcomes to an action's distinct symbols.

    Row k corresponds to the k-th distinct symbol of the feedback row,
    enumerated in first-occurrence order (left to right).  Each column has
    exactly one 1: every outcome produces exactly one symbol.
    """

    action: int
    entries: np.ndarray  # (s_i, M), dtype float64, values in {0, 1}
    symbol_order: tuple[str, ...]

    @property
    def num_symbols(self) -> int:
        return self.entries.shape[0]

    def symbol_index(self, outcome: int) -> int:
        """Index of the symbol produced by ``outcome`` under this action."""
        return int(np.argmax(self.entries[:, outcome]))


@dataclass(frozen=True)
class Game:
    """A finite partial-monitoring game.

    ``loss`` is an N x M float matrix; ``feedback`` an N x M grid of symbol
    tokens.  Symbols are opaque and compared per row only: the same token in
    two different rows carries no cross-row meaning.
    """

    name: str
    loss: np.ndarray
    feedback: tuple[tuple[str, ...], ...]
    _signal: tuple[SignalMatrix, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        loss = np.asarray(self.loss, dtype=np.float64)
        loss.setflags(write=False)
        object.__setattr__(self, "loss", loss)
        feedback = tuple(tuple(str(s) for s in row) for row in self.feedback)
        object.__setattr__(self, "feedback", feedback)
        validate_game(self)
        object.__setattr__(
            self,
            "_signal",
            tuple(_build_signal_matrix(self, i) for i in range(self.num_actions)),
        )

    @property
    def num_actions(self) -> int:
        return self.loss.shape[0]

    @property
    def num_outcomes(self) -> int:
        return self.loss.shape[1]

    def loss_vector(self, i: int) -> np.ndarray:
        """Loss row of action i as a vector over outcomes."""
        return self.loss[i]

    def signal_matrix(self, i: int) -> SignalMatrix:
        return self._signal[i]

    @property
    def signal_matrices(self) -> tuple[SignalMatrix, ...]:
        return self._signal


def validate_game(game: Game) -> None:
    """Check shape invariants and reject duplicate loss rows.

    Duplicate rows make two cells coincide, which breaks the neighbor
    relation downstream, so they are rejected up front.
    """
    loss = np.asarray(game.loss)
    if loss.ndim != 2 or loss.shape[0] < 2 or loss.shape[1] < 2:
        raise ShapeMismatch(
            f"loss matrix must be at least 2x2, got shape {loss.shape}"
        )
    n, m = loss.shape
    if len(game.feedback) != n or any(len(row) != m for row in game.feedback):
        fb_shape = (len(game.feedback), len(game.feedback[0]) if game.feedback else 0)
        raise ShapeMismatch(
            f"feedback shape {fb_shape} does not match loss shape {(n, m)}"
        )
    for i in range(n):
        for j in range(i + 1, n):
            if np.array_equal(loss[i], loss[j]):
                raise DuplicateLossRows(i, j)


def _build_signal_matrix(game: Game, i: int) -> SignalMatrix:
    row = game.feedback[i]
    symbols: list[str] = []
    for token in row:
        if token not in symbols:
            symbols.append(token)
    entries = np.zeros((len(symbols), game.num_outcomes))
    for j, token in enumerate(row):
        entries[symbols.index(token), j] = 1.0
    entries.setflags(write=False)
    return SignalMatrix(action=i, entries=entries, symbol_order=tuple(symbols))


def check_simplex_point(p, m: int) -> np.ndarray:
    """Validate and return ``p`` as a distribution over ``m`` outcomes."""
    p = np.asarray(p, dtype=np.float64)
    if p.shape != (m,):
        raise ShapeMismatch(f"expected a vector of length {m}, got shape {p.shape}")
    if np.any(p < -SIMPLEX_TOL):
        raise ValueError(f"negative entries in distribution: {p}")
    if abs(p.sum() - 1.0) > SIMPLEX_TOL:
        raise ValueError(f"distribution entries sum to {p.sum()}, not 1")
    return np.clip(p, 0.0, None)


def expected_loss(game: Game, i: int, p) -> float:
    """Expected loss of action i under outcome distribution p."""
    p = check_simplex_point(p, game.num_outcomes)
    return float(game.loss[i] @ p)


def observe(game: Game, i: int, j: int) -> np.ndarray:
    """One-hot observation of action i against outcome j.

    This is everything the learner sees in a round: the unit vector, of
    length s_i, selecting the symbol feedback[i, j] within action i's
    distinct-symbol enumeration.
    """
    sig = game.signal_matrix(i)
    return sig.entries[:, j].copy()


def game_to_json_dict(game: Game) -> dict:
    return {
        "name": game.name,
        "loss": [[float(x) for x in row] for row in game.loss],
        "feedback": [list(row) for row in game.feedback],
    }


def game_from_json_dict(doc: dict) -> Game:
    """Build a Game from the JSON description schema.

    Required fields: ``name`` (string), ``loss`` (N arrays of M numbers),
    ``feedback`` (N arrays of M strings).  Extra fields (for example an
    ``opponents`` array in a packaged setting) are ignored.
    """
    try:
        name = doc["name"]
        loss = doc["loss"]
        feedback = doc["feedback"]
    except (KeyError, TypeError) as exc:
        raise ShapeMismatch(f"game description missing field: {exc}") from exc
    if not isinstance(loss, list) or not all(isinstance(r, list) for r in loss):
        raise ShapeMismatch("'loss' must be an array of arrays of numbers")
    if not isinstance(feedback, list) or not all(isinstance(r, list) for r in feedback):
        raise ShapeMismatch("'feedback' must be an array of arrays of strings")
    return Game(name=str(name), loss=np.asarray(loss, dtype=np.float64),
                feedback=tuple(tuple(str(s) for s in row) for row in feedback))


def load_game(path: str) -> Game:
    with open(path) as fh:
        doc = json.load(fh)
    return game_from_json_dict(doc)
