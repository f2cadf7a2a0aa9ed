"""``K_i^+`` through the closed formulas: ``Z x A^x`` in degree 0, stable stems above."""

from __future__ import annotations

from functools import lru_cache
from importlib import resources

from ..abelian import FgAbelianGroup
from ..errors import OutOfTable
from ..monoid import FiniteMonoid, MonoidChart, units


def parse_group_descriptor(text: str) -> FgAbelianGroup:
    text = text.strip()
    if text == "0":
        return FgAbelianGroup()
    if text == "Z":
        return FgAbelianGroup(1)
    if text.startswith("Z/"):
        return FgAbelianGroup.from_cyclic_orders([int(text[2:])])
    raise ValueError(f"unrecognised group descriptor {text!r}")


@lru_cache(maxsize=None)
def stable_stems() -> dict[int, FgAbelianGroup]:
    """The shipped table ``i -> pi_i^s``."""
    text = resources.files("f1zeta").joinpath("data/stable_stems.txt").read_text(encoding="utf-8")
    table = {}
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            index, descriptor = line.split(None, 1)
            table[int(index)] = parse_group_descriptor(descriptor)
    return table


def unit_group(A: MonoidChart) -> FgAbelianGroup:
    return units(A) if isinstance(A, FiniteMonoid) else A.unit_group


def k_plus(A: MonoidChart, i: int) -> FgAbelianGroup:
    """``K_i^+(A) = K_i(A^x)``: ``Z x A^x`` for ``i = 0``, ``pi_i^s`` for ``i >= 1``."""
    if i == 0:
        return FgAbelianGroup(1).product(unit_group(A))
    table = stable_stems()
    if i not in table or i < 0:
        raise OutOfTable(f"no stable stem tabulated for i = {i}")
    return table[i]
