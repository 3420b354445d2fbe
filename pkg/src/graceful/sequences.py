"""Minimum-span progression-free sets.

span_free(n) is the least k such that {1..k} contains an n-element subset
with no three distinct elements in arithmetic progression (OEIS A065825,
written a(n) throughout the API).  Witnesses are explicit and re-checked.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from itertools import combinations

DEFAULT_LIMIT = 14


@dataclass(frozen=True)
class ApFreeSet:
    """A progression-free set of positive integers with its span."""

    elements: tuple[int, ...]

    def __post_init__(self):
        if not is_ap_free(self.elements):
            raise ValueError(f"{self.elements} is not AP-free")
        if list(self.elements) != sorted(set(self.elements)):
            raise ValueError("elements must be strictly increasing")

    @property
    def span(self) -> int:
        return self.elements[-1] if self.elements else 0


def is_ap_free(s) -> bool:
    """True iff s has distinct positive elements and no three distinct
    elements x < y < z with z - y = y - x."""
    xs = sorted(s)
    if len(xs) != len(set(xs)) or (xs and xs[0] < 1):
        return False
    elems = set(xs)
    for i in range(len(xs)):
        for j in range(i + 1, len(xs)):
            x, z = xs[i], xs[j]
            if (x + z) % 2 == 0 and (x + z) // 2 in elems and x != z:
                mid = (x + z) // 2
                if mid != x and mid != z:
                    return False
    return True


class _Cache:
    def __init__(self):
        self.lock = threading.Lock()
        self.values: dict[int, tuple[int, tuple[int, ...]]] = {}
        self.witnesses: dict[int, tuple[tuple[int, ...], ...]] = {}


_cache = _Cache()


def _extends_ap_free(chosen: list[int], c: int) -> bool:
    """Can c (> all of chosen) be appended keeping the set AP-free?"""
    in_set = set(chosen)
    for b in chosen:
        # c completes an AP a,b,c  (a = 2b - c) or b,mid,c
        if 2 * b - c in in_set and 2 * b - c != b:
            return False
        if (b + c) % 2 == 0 and (b + c) // 2 in in_set:
            return False
    return True


def _exists_with_span(n: int, k: int) -> tuple[int, ...] | None:
    """DFS for an AP-free n-subset of {1..k}; elements chosen increasingly.

    WLOG the witness can be shifted to start at 1, so fix 1 as the first
    element for n >= 1."""
    if n == 0:
        return ()
    chosen = [1]

    def dfs(lo: int) -> tuple[int, ...] | None:
        if len(chosen) == n:
            return tuple(chosen)
        # span pruning: enough room must remain for the missing elements
        if k - lo + 1 < n - len(chosen):
            return None
        for c in range(lo, k + 1):
            if k - c + 1 < n - len(chosen):
                break
            if _extends_ap_free(chosen, c):
                chosen.append(c)
                got = dfs(c + 1)
                if got:
                    return got
                chosen.pop()
        return None

    return dfs(2)


def a_of_n(n: int, limit: int = DEFAULT_LIMIT) -> tuple[int, ApFreeSet]:
    """Least span a(n) of an n-element AP-free subset of the positive
    integers, with a witness attaining it."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > limit:
        raise ValueError(f"n={n} exceeds configured limit {limit}")
    with _cache.lock:
        hit = _cache.values.get(n)
    if hit:
        return hit[0], ApFreeSet(hit[1])
    # start the scan at the previous value + 1 (a is strictly increasing);
    # this is only a starting hint, correctness comes from the upward scan
    k = n
    if n - 1 in _cache.values:
        k = max(k, _cache.values[n - 1][0] + 1)
    while True:
        wit = _exists_with_span(n, k)
        if wit is not None:
            with _cache.lock:
                _cache.values[n] = (k, wit)
            return k, ApFreeSet(wit)
        k += 1


def all_optimal_witnesses(n: int, limit: int = DEFAULT_LIMIT) -> list[ApFreeSet]:
    """Every AP-free n-subset of {1..a(n)} whose span is exactly a(n),
    in lexicographic order."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > limit:
        raise ValueError(f"n={n} exceeds configured limit {limit}")
    with _cache.lock:
        hit = _cache.witnesses.get(n)
    if hit is not None:
        return [ApFreeSet(w) for w in hit]
    value, _ = a_of_n(n, limit)
    found: list[tuple[int, ...]] = []
    chosen: list[int] = []

    def dfs(lo: int):
        if len(chosen) == n:
            if chosen[-1] == value:
                found.append(tuple(chosen))
            return
        for c in range(lo, value + 1):
            if value - c + 1 < n - len(chosen):
                break
            if _extends_ap_free(chosen, c):
                chosen.append(c)
                dfs(c + 1)
                chosen.pop()

    dfs(1)
    found.sort()
    with _cache.lock:
        _cache.witnesses[n] = tuple(found)
    return [ApFreeSet(w) for w in found]


def a_of_n_bruteforce(n: int) -> int:
    """Independent oracle: enumerate ALL n-subsets of {1..k} for k = n, n+1, ...
    Only feasible for small n; kept deliberately naive."""
    if n < 1:
        raise ValueError("n must be >= 1")
    k = n
    while True:
        for sub in combinations(range(1, k + 1), n):
            if is_ap_free(sub):
                return k
        k += 1
