"""Permutations in one-line form, cycle statistics, and the n-cycles Q_n.

Letters are 1-based everywhere in the public API.  Products compose left to
right: ``compose(a, b)`` applies ``a`` first, then ``b``.
"""

from __future__ import annotations

import itertools
import math
import random
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import ParseError, UsageError


class Permutation:
    """A bijection of {1..n}; ``images[i-1]`` is the image of letter ``i``."""

    __slots__ = ("images",)

    def __init__(self, images: Iterable[int]):
        images = tuple(int(x) for x in images)
        n = len(images)
        if n == 0:
            raise UsageError("a permutation needs at least one letter")
        if sorted(images) != list(range(1, n + 1)):
            raise UsageError(f"not a bijection of 1..{n}: {list(images)}")
        object.__setattr__(self, "images", images)

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    @property
    def n(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(range(1, n + 1))

    @classmethod
    def rho(cls, n: int) -> Permutation:
        """The long cycle (1 2 ... n), i -> i+1 mod n."""
        return cls([i % n + 1 for i in range(1, n + 1)])

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], n: int | None = None) -> Permutation:
        cycles = [tuple(c) for c in cycles]
        letters = [x for c in cycles for x in c]
        if len(set(letters)) != len(letters):
            raise UsageError("a letter appears in more than one cycle")
        if n is None:
            n = max(letters, default=0)
        if any(x < 1 or x > n for x in letters):
            raise UsageError(f"letters must lie in 1..{n}")
        images = list(range(1, n + 1))
        for c in cycles:
            for a, b in zip(c, c[1:] + c[:1]):
                images[a - 1] = b
        return cls(images)

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> Permutation:
        """Parse ``"(1 2 3)(4 5)"`` (fixed points optional) or ``"[2,3,1]"``."""
        s = text.strip()
        offset = len(text) - len(text.lstrip())
        if s.startswith("["):
            if not s.endswith("]"):
                raise ParseError("missing closing ']'", text, len(text.rstrip()))
            body = s[1:-1]
            items = [t for t in re.split(r"[,\s]+", body.strip()) if t]
            for tok in items:
                if not tok.isdigit():
                    raise ParseError(f"not a letter: {tok!r}", text, offset + s.index(tok))
            return cls(int(t) for t in items)
        cycles = []
        pos = 0
        while pos < len(s):
            if s[pos].isspace():
                pos += 1
                continue
            if s[pos] != "(":
                raise ParseError("expected '('", text, offset + pos)
            end = s.find(")", pos)
            if end < 0:
                raise ParseError("unclosed cycle", text, offset + pos)
            cyc = []
            for m in re.finditer(r"\S+", s[pos + 1:end]):
                tok = m.group().strip(",")
                if not tok.isdigit():
                    raise ParseError(f"not a letter: {tok!r}", text, offset + pos + 1 + m.start())
                cyc.append(int(tok))
            cycles.append(cyc)
            pos = end + 1
        if not cycles and n is None:
            raise ParseError("empty permutation", text, offset)
        return cls.from_cycles(cycles, n)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"Permutation({list(self.images)})"

    def __str__(self):
        cycles = [c for c in self.cycles() if len(c) > 1]
        if not cycles:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for i, x in enumerate(self.images, 1):
            inv[x - 1] = i
        return Permutation(inv)

    def cycles(self) -> list[tuple[int, ...]]:
        """Orbits, each starting at its smallest letter, ordered by that letter."""
        seen = [False] * self.n
        out = []
        for start in range(1, self.n + 1):
            if seen[start - 1]:
                continue
            cyc = []
            x = start
            while not seen[x - 1]:
                seen[x - 1] = True
                cyc.append(x)
                x = self.images[x - 1]
            out.append(tuple(cyc))
        return out

    def cycle_count(self) -> int:
        return cycle_count(self)

    def cycle_type(self) -> Partition:
        return cycle_type(self)

    def parity(self) -> int:
        return parity(self)


def compose(a: Permutation, b: Permutation) -> Permutation:
    """Left-to-right product: ``compose(a, b)(i) == b(a(i))``."""
    if a.n != b.n:
        raise UsageError(f"size mismatch: {a.n} vs {b.n}")
    bi = b.images
    return Permutation(bi[x - 1] for x in a.images)


def _orbit_lengths(images: Sequence[int]) -> list[int]:
    n = len(images)
    seen = bytearray(n)
    lengths = []
    for start in range(n):
        if seen[start]:
            continue
        length = 0
        x = start
        while not seen[x]:
            seen[x] = 1
            length += 1
            x = images[x] - 1
        lengths.append(length)
    return lengths


def cycle_count(p: Permutation) -> int:
    """Number of orbits, fixed points included."""
    return len(_orbit_lengths(p.images))


def cycle_type(p: Permutation) -> Partition:
    return Partition(sorted(_orbit_lengths(p.images), reverse=True))


def parity(p: Permutation) -> int:
    """1 for odd permutations, 0 for even."""
    return (p.n - cycle_count(p)) % 2


def odd_even_cycle_counts(p: Permutation) -> tuple[int, int]:
    lengths = _orbit_lengths(p.images)
    odd = sum(1 for k in lengths if k % 2)
    return odd, len(lengths) - odd


def _cycle_word_to_perm(word: Sequence[int]) -> Permutation:
    n = len(word)
    images = [0] * n
    for j in range(n):
        images[word[j] - 1] = word[(j + 1) % n]
    return Permutation(images)


def enumerate_n_cycles(n: int, second: int | None = None) -> Iterator[Permutation]:
    """Stream the (n-1)! n-cycles of {1..n}.

    Each cycle is written as a word starting with letter 1; the remaining
    letters run over all arrangements in lexicographic order.  Passing
    ``second`` restricts the stream to the chunk whose word starts ``1, second``.
    """
    if n < 1:
        raise UsageError("n must be >= 1")
    if n == 1:
        yield Permutation([1])
        return
    for word in _cycle_words(n, second):
        yield _cycle_word_to_perm(word)


def _cycle_words(n: int, second: int | None) -> Iterator[tuple[int, ...]]:
    if second is None:
        for rest in itertools.permutations(range(2, n + 1)):
            yield (1,) + rest
        return
    if not 2 <= second <= n:
        raise UsageError(f"second letter must lie in 2..{n}")
    others = [x for x in range(2, n + 1) if x != second]
    for rest in itertools.permutations(others):
        yield (1, second) + rest


def lex_permutations(k: int) -> np.ndarray:
    """All permutations of range(k) as rows, in lexicographic order."""
    out = np.zeros((1, 0), dtype=np.int64)
    for m in range(1, k + 1):
        blocks = []
        for first in range(m):
            rest = out + (out >= first)
            blocks.append(np.hstack([np.full((len(rest), 1), first, dtype=np.int64), rest]))
        out = np.vstack(blocks)
    return out


def n_cycle_array(n: int, second: int | None = None, prefix: Sequence[int] = ()) -> np.ndarray:
    """The same stream as :func:`enumerate_n_cycles`, as 0-based image rows.

    Row ``r`` is the one-line form (0-based) of the r-th n-cycle.  ``second``
    (or, more generally, ``prefix``: the 1-based letters following 1 in the
    cycle word) selects one chunk of the stream.
    """
    if n < 1:
        raise UsageError("n must be >= 1")
    if second is not None:
        prefix = (second,)
    prefix = tuple(prefix)
    if len(set(prefix)) != len(prefix) or any(not 2 <= x <= n for x in prefix):
        raise UsageError(f"prefix letters must be distinct and lie in 2..{n}")
    head = np.array([0] + [x - 1 for x in prefix], dtype=np.int64)
    others = np.array(sorted(set(range(1, n)) - set(head.tolist())), dtype=np.int64)
    tail = others[lex_permutations(len(others))]
    words = np.hstack([np.broadcast_to(head, (len(tail), len(head))), tail])
    images = np.empty_like(words)
    rows = np.arange(len(words))[:, None]
    images[rows, words] = np.roll(words, -1, axis=1)
    return images


def chunk_prefixes(n: int, max_rows: int = 362880) -> list[tuple[int, ...]]:
    """Split Q_n into independent chunks by fixing the letters after 1.

    Uses the n-1 second-letter chunks, going deeper only when a chunk would
    exceed ``max_rows`` cycles.
    """
    prefixes: list[tuple[int, ...]] = [()]
    depth = 0
    while n - 1 - depth > 0 and (depth == 0 or math.factorial(n - 1 - depth) > max_rows):
        prefixes = [p + (x,) for p in prefixes for x in range(2, n + 1) if x not in p]
        depth += 1
    return prefixes


def batch_cycle_counts(images: np.ndarray) -> np.ndarray:
    """Cycle counts of each row of a batch of 0-based one-line permutations.

    A letter is counted when it is the minimum of its orbit; orbit minima come
    from pointer doubling, so the cost is O(log n) gathers per batch.
    """
    b, n = images.shape
    letters = np.broadcast_to(np.arange(n), (b, n))
    low = letters
    jump = images
    span = 1
    # invariant: low[i] = min of the first `span` orbit elements from i; jump = f^span
    while span < n:
        low = np.minimum(low, np.take_along_axis(low, jump, axis=1))
        jump = np.take_along_axis(jump, jump, axis=1)
        span *= 2
    return np.count_nonzero(low == letters, axis=1)


def insert_letter(zeta: Permutation, j: int) -> Permutation:
    """Insert a new letter n+1 right after ``zeta_j`` in the cycle word of an n-cycle."""
    word = _cycle_word(zeta)
    if not 1 <= j <= len(word):
        raise UsageError(f"position must lie in 1..{len(word)}")
    return _cycle_word_to_perm(word[:j] + (zeta.n + 1,) + word[j:])


def _cycle_word(zeta: Permutation) -> tuple[int, ...]:
    cycles = zeta.cycles()
    if len(cycles) != 1:
        raise UsageError("not an n-cycle")
    return cycles[0]


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing positive parts; ``n`` is their sum."""

    parts: tuple[int, ...]

    def __init__(self, parts: Iterable[int]):
        parts = tuple(int(x) for x in parts)
        if any(x < 1 for x in parts):
            raise UsageError(f"parts must be positive: {list(parts)}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise UsageError(f"parts must be weakly decreasing: {list(parts)}")
        object.__setattr__(self, "parts", parts)

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __str__(self):
        return ",".join(map(str, self.parts))

    def exponent_form(self) -> str:
        """``[3,2,2,1]`` -> ``"3 2^2 1"``."""
        out = []
        for part, group in itertools.groupby(self.parts):
            k = len(list(group))
            out.append(str(part) if k == 1 else f"{part}^{k}")
        return " ".join(out)

    def unit_reduction(self) -> tuple[Partition, int]:
        """Split off unit parts, keeping one part: returns (mu, k) with self = mu·1^k."""
        core = [x for x in self.parts if x > 1]
        if not core:
            core = [1]
        return Partition(core), self.n - sum(core)

    @classmethod
    def parse(cls, text: str) -> Partition:
        """Comma-separated weakly decreasing positive integers, e.g. ``"3,1,1"``."""
        parts = []
        prev = None
        for m in re.finditer(r"[^,]+|,", text):
            tok = m.group()
            if tok == ",":
                if prev in (None, ","):
                    raise ParseError("empty part", text, m.start())
                prev = ","
                continue
            stripped = tok.strip()
            col = m.start() + (len(tok) - len(tok.lstrip()))
            if not stripped.isdigit() or int(stripped) < 1:
                raise ParseError(f"not a positive integer: {stripped!r}", text, col)
            value = int(stripped)
            if parts and value > parts[-1]:
                raise ParseError("parts must be weakly decreasing", text, col)
            parts.append(value)
            prev = "part"
        if not parts:
            raise ParseError("empty partition", text, 0)
        if prev == ",":
            raise ParseError("trailing comma", text, len(text) - 1)
        return cls(parts)


def partitions(n: int, no_unit_parts: bool = False) -> Iterator[Partition]:
    """All partitions of n in reverse-lexicographic order ([n] first, [1^n] last)."""
    if n < 1:
        raise UsageError("n must be >= 1")
    smallest = 2 if no_unit_parts else 1

    def rec(remaining, cap):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, cap), smallest - 1, -1):
            for rest in rec(remaining - first, first):
                yield (first,) + rest

    for parts in rec(n, n):
        yield Partition(parts)


def canonical_permutation(lam: Partition | Sequence[int]) -> Permutation:
    """Consecutive blocks: the first part cycles 1..l1, the next the following letters."""
    lam = lam if isinstance(lam, Partition) else Partition(lam)
    cycles = []
    start = 1
    for part in lam.parts:
        cycles.append(range(start, start + part))
        start += part
    return Permutation.from_cycles(cycles, lam.n)


def random_permutation(n: int, rng: random.Random) -> Permutation:
    images = list(range(1, n + 1))
    rng.shuffle(images)
    return Permutation(images)


def random_of_type(lam: Partition, rng: random.Random) -> Permutation:
    """Uniform element of the conjugacy class of type ``lam``."""
    tau = random_permutation(lam.n, rng)
    return compose(compose(tau.inverse(), canonical_permutation(lam)), tau)


def class_size(lam: Partition) -> int:
    """Number of permutations of type ``lam``: n! / prod(j^k_j k_j!)."""
    denom = 1
    for part, group in itertools.groupby(lam.parts):
        k = len(list(group))
        denom *= part**k * math.factorial(k)
    return math.factorial(lam.n) // denom
