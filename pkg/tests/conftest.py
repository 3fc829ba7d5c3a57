"""Shared brute-force oracles.

These deliberately avoid the package's own scanning code: fixed points are
built by iterating the morphism on whole words, occurrences by comparing
every window.
"""

from __future__ import annotations

import pytest

from derivclosure import registry


def naive_fixed_point(rules: dict[str, str], letter: str, n: int) -> str:
    word = letter
    while len(word) < n:
        word = "".join(rules[c] for c in word)
    return word[:n]


def naive_occurrences(w: str, x: str) -> list[int]:
    return [i for i in range(len(x) - len(w) + 1) if x[i:i + len(w)] == w]


def naive_returns(w: str, x: str) -> tuple[list[str], list[int]]:
    """Return words in first-appearance order and the derived word as indices."""
    occ = naive_occurrences(w, x)
    order: list[str] = []
    coded = []
    for i, j in zip(occ, occ[1:]):
        gap = x[i:j]
        if gap not in order:
            order.append(gap)
        coded.append(order.index(gap))
    return order, coded


def naive_factors(x: str, n: int) -> set[str]:
    return {x[i:i + n] for i in range(len(x) - n + 1)}


@pytest.fixture(scope="session")
def z() -> str:
    """65536 letters of the period-doubling word."""
    return naive_fixed_point({"a": "ab", "b": "aa"}, "a", 1 << 16)


@pytest.fixture(scope="session")
def trib_word() -> str:
    return naive_fixed_point({"a": "ab", "b": "ac", "c": "a"}, "a", 1 << 16)


@pytest.fixture(scope="session")
def psi():
    return registry.psi()


@pytest.fixture(scope="session")
def xi():
    return registry.xi()


@pytest.fixture(scope="session")
def nu():
    return registry.nu()


@pytest.fixture(scope="session")
def trib():
    return registry.tribonacci()
