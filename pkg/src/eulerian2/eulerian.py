"""Second-order Eulerian numbers and the Stirling permutations they count.

A Stirling permutation of order n is an arrangement of 1,1,2,2,...,n,n in
which everything between the two copies of m is larger than m.  Descents are
counted with an implicit trailing 0, so the last position always descends.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Iterator

from .exceptions import DomainError, EnumerationLimitError
from .special import double_factorial_odd

DEFAULT_ENUMERATION_CAP = 8
HARD_ENUMERATION_CAP = 10

Word = tuple[int, ...]


@dataclass(frozen=True)
class EulerianRow:
    n: int
    entries: tuple[int, ...]

    def __getitem__(self, k: int) -> int:
        """``C_{n,k}``, zero outside ``1..n``."""
        if 1 <= k <= self.n:
            return self.entries[k - 1]
        return 0

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def total(self) -> int:
        return sum(self.entries)


@lru_cache(maxsize=None)
def _row(n: int) -> tuple[int, ...]:
    if n == 1:
        return (1,)
    prev = _row(n - 1)

    def c(k):
        return prev[k - 1] if 1 <= k <= n - 1 else 0

    return tuple(k * c(k) + (2 * n - k) * c(k - 1) for k in range(1, n + 1))


def eulerian_row(n: int) -> EulerianRow:
    """Row n of the triangle, from ``C_{n,k} = k C_{n-1,k} + (2n-k) C_{n-1,k-1}``."""
    if not isinstance(n, int) or n < 1:
        raise DomainError(f"the triangle starts at n = 1, got {n!r}")
    for i in range(1, n, 256):
        _row(i)
    return EulerianRow(n, _row(n))


def eulerian(n: int, k: int) -> int:
    return eulerian_row(n)[k]


def is_stirling_permutation(word) -> bool:
    word = tuple(word)
    if len(word) % 2:
        return False
    n = len(word) // 2
    counts = Counter(word)
    if set(counts) != set(range(1, n + 1)) or any(v != 2 for v in counts.values()):
        return False
    first: dict[int, int] = {}
    for i, v in enumerate(word):
        if v not in first:
            first[v] = i
        elif any(u <= v for u in word[first[v] + 1 : i]):
            return False
    return True


def enumerate_stirling_perms(n: int, cap: int = DEFAULT_ENUMERATION_CAP) -> Iterator[Word]:
    """Yield every Stirling permutation of order n exactly once.

    Each order-n word arises from exactly one order-(n-1) word by dropping the
    adjacent pair ``n n`` into one of its 2n-1 gaps.
    """
    if not isinstance(n, int) or n < 1:
        raise DomainError(f"order must be >= 1, got {n!r}")
    if n > min(cap, HARD_ENUMERATION_CAP):
        raise EnumerationLimitError(
            f"enumeration of order {n} exceeds the cap of {min(cap, HARD_ENUMERATION_CAP)}"
        )
    yield from _insert((), 1, n)


def _insert(word: Word, m: int, n: int) -> Iterator[Word]:
    pair = (m, m)
    gaps = range(len(word), -1, -1)
    if m == n:
        for g in gaps:
            yield word[:g] + pair + word[g:]
        return
    for g in gaps:
        yield from _insert(word[:g] + pair + word[g:], m + 1, n)


def _descents(word: Word) -> int:
    d = 1  # trailing sentinel
    for i in range(len(word) - 1):
        if word[i] > word[i + 1]:
            d += 1
    return d


def descent_count(word, check: bool = True) -> int:
    """Number of i with ``a_i > a_{i+1}``, taking ``a_{2n+1} = 0``."""
    word = tuple(word)
    if check and not is_stirling_permutation(word):
        raise DomainError(f"{word!r} is not a Stirling permutation")
    return _descents(word)


def descent_histogram(n: int, cap: int = DEFAULT_ENUMERATION_CAP) -> EulerianRow:
    """Descent counts over all Stirling permutations of order n, indexed k = 1..n."""
    hist = [0] * (n + 1)
    for word in enumerate_stirling_perms(n, cap):
        hist[_descents(word)] += 1
    return EulerianRow(n, tuple(hist[1:]))


def check_row_invariants(row: EulerianRow) -> None:
    if row.entries[0] != 1 or row.entries[-1] != factorial(row.n):
        raise AssertionError(f"boundary entries wrong in row {row.n}")
    if any(c <= 0 for c in row.entries):
        raise AssertionError(f"nonpositive entry in row {row.n}")
    if row.total() != double_factorial_odd(row.n):
        raise AssertionError(f"row {row.n} does not sum to (2n-1)!!")
