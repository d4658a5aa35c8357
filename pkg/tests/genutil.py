"""Seeded random formula generators shared by the test modules."""

from __future__ import annotations

import random
from typing import Callable, Sequence

from bimodal.syntax import (
    Acc,
    And,
    Ann,
    AnnWhether,
    Atom,
    BOT,
    Box,
    Con,
    Diamond,
    Ess,
    Formula,
    Iff,
    Implies,
    NonCon,
    Not,
    Or,
    TOP,
)

CORE_UNARY = (Not, Con, Acc)
SUGAR_UNARY = (Not, Con, NonCon, Acc, Ess, Diamond, Box)
SUGAR_BINARY = (And, Or, Implies, Iff)


def random_formula(
    rng: random.Random,
    size: int,
    atom_names: Sequence[str],
    *,
    unary: Sequence[Callable[[Formula], Formula]] = SUGAR_UNARY,
    binary: Sequence[Callable[[Formula, Formula], Formula]] = SUGAR_BINARY,
    ann_depth: int = 0,
) -> Formula:
    """A random formula with exactly ``size`` nodes (before desugaring).

    Announcements appear only while ``ann_depth`` is positive; nesting
    consumes the budget on both sides of the operator.
    """
    leaves: list[Formula] = [TOP, BOT]
    leaves.extend(Atom(name) for name in atom_names)

    def gen(budget: int, depth: int) -> Formula:
        options: list[str] = []
        if budget >= 2:
            options += ["unary"] * 3
        if budget >= 3 and binary:
            options += ["binary"] * 3
        if budget >= 3 and depth > 0:
            options += ["ann"] * 2
        if not options:
            return rng.choice(leaves)
        pick = rng.choice(options)
        if pick == "unary":
            return rng.choice(unary)(gen(budget - 1, depth))
        split = rng.randint(1, budget - 2)
        if pick == "binary":
            op = rng.choice(binary)
            return op(gen(split, depth), gen(budget - 1 - split, depth))
        ann_op = rng.choice((Ann, AnnWhether))
        return ann_op(gen(split, depth - 1), gen(budget - 1 - split, depth - 1))

    return gen(size, ann_depth)


def count_core_formulas(
    num_atoms: int, num_modalities: int, max_size: int, *, with_announcements: bool = False
) -> int:
    """Independent count of the enumeration grammar, by size recurrence."""
    leaves = 2 + num_atoms
    unary = 1 + num_modalities
    binary_kinds = 2 if with_announcements else 1
    exactly = [0, leaves]
    for size in range(2, max_size + 1):
        total = unary * exactly[size - 1]
        total += binary_kinds * sum(
            exactly[i] * exactly[size - 1 - i] for i in range(1, size - 1)
        )
        exactly.append(total)
    return sum(exactly[1 : max_size + 1])
