from __future__ import annotations

from itertools import product
from typing import Iterator

from superpatterns import Word


def all_words(d: int, n: int) -> Iterator[Word]:
    """Every word of length n over {1..d}, in counter order."""
    for letters in product(range(1, d + 1), repeat=n):
        yield Word(letters, d)
