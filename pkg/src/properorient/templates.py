"""In-degree sequences for proper orientations of attached paths.

Every sequence lists the in-degree each vertex of ``v1 .. vn`` receives from
the path's own edges.  Long paths come from a short base orientation by the
insertion rule: a vertex of in-degree 0 is replaced by ``0, 2, 0`` (a new
segment of two edges pointing inward), always at the leftmost interior 0.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .graph import realize_path


def _grow(base: list[int], length: int) -> list[int]:
    extra = length - (len(base) - 1)
    if extra < 0 or extra % 2:
        raise ValueError(f"cannot grow {base} to length {length}")
    if extra == 0:
        return list(base)
    i = next(j for j in range(1, len(base) - 1) if base[j] == 0)
    return base[: i + 1] + [2, 0] * (extra // 2) + base[i + 1:]


def _by_parity(odd: list[int] | None, even: list[int] | None, min_len: int):
    def gen(length: int) -> list[int]:
        if length < min_len:
            raise ValueError(f"length {length} below minimum {min_len}")
        base = odd if length % 2 else even
        if base is None or length < len(base) - 1:
            raise ValueError(f"length {length} not admissible")
        return _grow(base, length)
    return gen


@dataclass(frozen=True)
class PathTemplate:
    name: str
    min_length: int
    generate: Callable[[int], list[int]]
    parity: int | None = None  # restrict to odd (1) / even (0) lengths
    max_length: int | None = None

    def admits(self, length: int) -> bool:
        if length < self.min_length:
            return False
        if self.max_length is not None and length > self.max_length:
            return False
        return self.parity is None or length % 2 == self.parity

    def sequence(self, length: int) -> list[int]:
        if not self.admits(length):
            raise ValueError(f"{self.name} does not admit length {length}")
        return self.generate(length)

    def endpoint_contribution(self, length: int) -> tuple[int, int]:
        s = self.sequence(length)
        return s[0], s[-1]

    def arcs(self, length: int) -> list[bool]:
        return realize_path(self.sequence(length))


def _fixed(seq: list[int]):
    return lambda length: list(seq)


# v1 = 0, v2 = 1, v_{n-2} = 0, v_{n-1} = 2, vn = 0 for lengths >= 5
BASE = PathTemplate("base", 5, _by_parity([0, 1, 2, 0, 2, 0], [0, 1, 2, 1, 0, 2, 0], 5))
BASE4A = PathTemplate("base4a", 4, _fixed([0, 1, 2, 1, 0]), max_length=4)
BASE4B = PathTemplate("base4b", 4, _fixed([0, 2, 0, 2, 0]), max_length=4)
BASE3 = PathTemplate("base3", 3, _fixed([0, 1, 2, 0]), max_length=3)
# v1 = 0, v2 = 2, v_{n-1} = 2, vn = 0
CONNECTFAN = PathTemplate("connectfan", 4, _by_parity([0, 2, 1, 0, 2, 0], [0, 2, 0, 2, 0], 4))
# v1 = 1, v2 = 0, v_{n-1} = 0, vn = 1
IN1 = PathTemplate("in1", 4, _by_parity([1, 0, 2, 1, 0, 1], [1, 0, 2, 0, 1], 4))
# v1 = 1, v2 = 0, v_{n-1} in {1, 2}, vn = 0: a shared endpoint gains exactly one
RAISE1 = PathTemplate("raise1", 3, _by_parity([1, 0, 2, 0], [1, 0, 2, 1, 0], 3))
CF23_ODD = PathTemplate("cf23-odd", 5, _by_parity([0, 2, 1, 0, 2, 0], None, 5), parity=1)
CF23_EVEN = PathTemplate("cf23-even", 6, _by_parity(None, [0, 2, 1, 0, 2, 1, 0], 6), parity=0)
CF23_4 = PathTemplate("cf23-4", 4, _fixed([0, 2, 0, 2, 0]), max_length=4)
CF23_3 = PathTemplate("cf23-3", 3, _fixed([0, 2, 1, 0]), max_length=3)
CF23A_ODD = PathTemplate("cf23a-odd", 5, _by_parity([0, 1, 2, 0, 2, 0], None, 5), parity=1)
CF23A_EVEN = PathTemplate(
    "cf23a-even", 4,
    lambda length: [0, 1, 2, 1, 0] if length == 4 else _grow([0, 1, 2, 0, 2, 1, 0], length),
    parity=0,
)

CATALOG = (
    BASE, BASE4A, BASE4B, BASE3, CONNECTFAN, IN1, RAISE1,
    CF23_ODD, CF23_EVEN, CF23_4, CF23_3, CF23A_ODD, CF23A_EVEN,
)


def base_sequence(length: int, variant: str = "a") -> list[int]:
    """Plain path orientation: ``v2`` gets 1, ``v_{n-1}`` gets 2, endpoints 0."""
    if length == 3:
        return BASE3.sequence(3)
    if length == 4:
        return (BASE4A if variant == "a" else BASE4B).sequence(4)
    return BASE.sequence(length)


def connectfan_sequence(length: int) -> list[int]:
    return CONNECTFAN.sequence(length)


def in1_sequence(length: int) -> list[int]:
    return IN1.sequence(length)


def raise1_sequence(length: int) -> list[int]:
    return RAISE1.sequence(length)


def cf23_sequence(length: int) -> list[int]:
    """``v2`` gets 2; the far end is shielded from an in-degree-3 ``vn``."""
    if length == 3:
        return CF23_3.sequence(3)
    if length == 4:
        return CF23_4.sequence(4)
    return (CF23_ODD if length % 2 else CF23_EVEN).sequence(length)


def cf23a_sequence(length: int) -> list[int]:
    """``v2`` gets 1; the far end is shielded from an in-degree-3 ``vn``."""
    return (CF23A_ODD if length % 2 else CF23A_EVEN).sequence(length)
