"""Constructive correspondences between parameter tuples and deals.

Two parameterizations are implemented, one per counting formula.  The
full-deck form pins down a deal that uses every denomination; the red-set
form pins down a deal with a prescribed red denomination set.  In both,
``encode`` and ``decode`` are exact inverses, and the parameter space is
exactly as large as the deal family it maps onto (the exhaustive audits in
the test suite and the ``audit`` CLI subcommand check this).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from .enumeration import subsets_lex
from .model import Card, Color, Deal, denom_set_text, require_valid

__all__ = [
    "FullDeckParams",
    "RedSetParams",
    "decode_full_deck",
    "decode_red_set",
    "encode_full_deck",
    "encode_red_set",
    "iter_full_deck_params",
    "iter_red_set_params",
]


@dataclass(frozen=True)
class FullDeckParams:
    """Free choices that pin down a deal using every denomination 1..n.

    Red's hand is the green cards of ``green_in_red`` plus the blue cards of
    ``blue_in_red``.  The leftover green cards are forced into blue's hand
    and the leftover blue cards into green's hand, so the only remaining
    freedom is which red cards blue takes (``red_in_blue``); green gets the
    rest.  Equal hand sizes force |blue_in_red| = n - |green_in_red| and
    |red_in_blue| = |green_in_red|, giving C(n, j)**3 choices for each size
    j of ``green_in_red`` and franel(n) tuples in total.
    """

    n: int
    green_in_red: frozenset[int]
    blue_in_red: frozenset[int]
    red_in_blue: frozenset[int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "green_in_red", frozenset(self.green_in_red))
        object.__setattr__(self, "blue_in_red", frozenset(self.blue_in_red))
        object.__setattr__(self, "red_in_blue", frozenset(self.red_in_blue))

    def to_text(self) -> str:
        return (
            f"green_in_red={denom_set_text(self.green_in_red)}"
            f";blue_in_red={denom_set_text(self.blue_in_red)}"
            f";red_in_blue={denom_set_text(self.red_in_blue)}"
        )


def _check_full_deck(params: FullDeckParams) -> None:
    if params.n < 0:
        raise ValueError(f"need n >= 0, got {params.n}")
    universe = frozenset(range(1, params.n + 1))
    for name in ("green_in_red", "blue_in_red", "red_in_blue"):
        value = getattr(params, name)
        if not value <= universe:
            raise ValueError(f"{name} must lie within 1..{params.n}")
    if len(params.blue_in_red) != params.n - len(params.green_in_red):
        raise ValueError("need |blue_in_red| = n - |green_in_red|")
    if len(params.red_in_blue) != len(params.green_in_red):
        raise ValueError("need |red_in_blue| = |green_in_red|")


def encode_full_deck(params: FullDeckParams) -> Deal:
    """Build the unique full-deck deal realizing the given choices."""
    _check_full_deck(params)
    universe = range(1, params.n + 1)
    red = {Card(d, Color.GREEN) for d in params.green_in_red} | {
        Card(d, Color.BLUE) for d in params.blue_in_red
    }
    blue = {Card(d, Color.GREEN) for d in universe if d not in params.green_in_red} | {
        Card(d, Color.RED) for d in params.red_in_blue
    }
    green = {Card(d, Color.BLUE) for d in universe if d not in params.blue_in_red} | {
        Card(d, Color.RED) for d in universe if d not in params.red_in_blue
    }
    return Deal(params.n, frozenset(universe), red, green, blue)


def decode_full_deck(deal: Deal) -> FullDeckParams:
    """Read the three choice sets back off a full-deck deal."""
    require_valid(deal)
    if deal.s != frozenset(range(1, deal.n + 1)):
        raise ValueError("not a full-deck deal: the denomination set must be all of 1..n")
    return FullDeckParams(
        deal.n,
        frozenset(c.denomination for c in deal.red if c.color is Color.GREEN),
        frozenset(c.denomination for c in deal.red if c.color is Color.BLUE),
        frozenset(c.denomination for c in deal.blue if c.color is Color.RED),
    )


@dataclass(frozen=True)
class RedSetParams:
    """Free choices that pin down a deal with a prescribed red denomination set.

    ``red_denoms`` is exactly the set of denominations in red's hand.
    Within it, ``both_colors`` marks denominations contributing their green
    and blue cards to red's hand, ``blue_only`` just the blue card, and the
    rest (``green_only``) just the green card.  Red's hand then has
    |red_denoms| + |both_colors| cards, so equal hand sizes pull
    |extra| = |both_colors| further denominations from outside
    ``red_denoms`` into play.  The green cards of ``blue_only`` and
    ``extra`` denominations are forced into blue's hand, which is topped up
    with the red cards of ``red_to_blue`` (|red_to_blue| = |both_colors| +
    |green_only|); green's hand takes everything left.
    """

    n: int
    red_denoms: frozenset[int]
    both_colors: frozenset[int]
    blue_only: frozenset[int]
    extra: frozenset[int]
    red_to_blue: frozenset[int]

    def __post_init__(self) -> None:
        for name in ("red_denoms", "both_colors", "blue_only", "extra", "red_to_blue"):
            object.__setattr__(self, name, frozenset(getattr(self, name)))

    @property
    def green_only(self) -> frozenset[int]:
        return self.red_denoms - self.both_colors - self.blue_only

    def to_text(self) -> str:
        """Audit rendering: ``D={..};A={..};B={..};E={..};R={..}``, sorted elements."""
        parts = (
            ("D", self.red_denoms),
            ("A", self.both_colors),
            ("B", self.blue_only),
            ("E", self.extra),
            ("R", self.red_to_blue),
        )
        return ";".join(f"{label}={denom_set_text(value)}" for label, value in parts)


def _check_red_set(params: RedSetParams) -> None:
    if params.n < 0:
        raise ValueError(f"need n >= 0, got {params.n}")
    universe = frozenset(range(1, params.n + 1))
    if not params.red_denoms <= universe:
        raise ValueError(f"red_denoms must lie within 1..{params.n}")
    if not params.both_colors <= params.red_denoms:
        raise ValueError("both_colors must be a subset of red_denoms")
    if not params.blue_only <= params.red_denoms - params.both_colors:
        raise ValueError("blue_only must be a subset of red_denoms disjoint from both_colors")
    if not params.extra <= universe - params.red_denoms:
        raise ValueError(f"extra must lie within 1..{params.n} and avoid red_denoms")
    if len(params.extra) != len(params.both_colors):
        raise ValueError("need |extra| = |both_colors|")
    if not params.red_to_blue <= params.red_denoms | params.extra:
        raise ValueError("red_to_blue must lie within red_denoms plus extra")
    if len(params.red_to_blue) != len(params.both_colors) + len(params.green_only):
        raise ValueError("need |red_to_blue| = |both_colors| + |green_only|")


def encode_red_set(params: RedSetParams) -> Deal:
    """Build the unique deal whose red hand shows exactly ``red_denoms``."""
    _check_red_set(params)
    s = params.red_denoms | params.extra
    red = {Card(d, Color.GREEN) for d in params.both_colors | params.green_only} | {
        Card(d, Color.BLUE) for d in params.both_colors | params.blue_only
    }
    blue = {Card(d, Color.GREEN) for d in params.blue_only | params.extra} | {
        Card(d, Color.RED) for d in params.red_to_blue
    }
    green = {Card(d, Color.BLUE) for d in params.green_only | params.extra} | {
        Card(d, Color.RED) for d in s - params.red_to_blue
    }
    return Deal(params.n, s, red, green, blue)


def decode_red_set(deal: Deal) -> RedSetParams:
    """Read the choice sets back off any valid deal."""
    require_valid(deal)
    red_denoms = frozenset(c.denomination for c in deal.red)
    greens = {c.denomination for c in deal.red if c.color is Color.GREEN}
    blues = {c.denomination for c in deal.red if c.color is Color.BLUE}
    return RedSetParams(
        deal.n,
        red_denoms,
        frozenset(greens & blues),
        frozenset(blues - greens),
        deal.s - red_denoms,
        frozenset(c.denomination for c in deal.blue if c.color is Color.RED),
    )


def iter_full_deck_params(n: int) -> Iterator[FullDeckParams]:
    """All valid full-deck tuples, lexicographic by (green, blue, red) choice sets."""
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    universe = tuple(range(1, n + 1))
    for greens in subsets_lex(universe):
        for blues in combinations(universe, n - len(greens)):
            for reds in combinations(universe, len(greens)):
                yield FullDeckParams(n, frozenset(greens), frozenset(blues), frozenset(reds))


def iter_red_set_params(n: int, denoms: Iterable[int]) -> Iterator[RedSetParams]:
    """All valid tuples for one red denomination set, in lexicographic order.

    The stream is ordered by (both_colors, blue_only, extra, red_to_blue) as
    sorted tuples; its length is red_set_count(n, len(denoms)).
    """
    red_denoms = tuple(sorted(set(denoms)))
    if not set(red_denoms) <= set(range(1, n + 1)):
        raise ValueError(f"denominations {list(red_denoms)} not within 1..{n}")
    outside = tuple(d for d in range(1, n + 1) if d not in set(red_denoms))
    for both in subsets_lex(red_denoms):
        rest = tuple(d for d in red_denoms if d not in set(both))
        for blue_only in subsets_lex(rest):
            green_only_size = len(rest) - len(blue_only)
            for extra in combinations(outside, len(both)):
                pool = tuple(sorted(set(red_denoms) | set(extra)))
                for red_to_blue in combinations(pool, len(both) + green_only_size):
                    yield RedSetParams(
                        n,
                        frozenset(red_denoms),
                        frozenset(both),
                        frozenset(blue_only),
                        frozenset(extra),
                        frozenset(red_to_blue),
                    )
