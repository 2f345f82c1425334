"""Integer partitions and Young diagram combinatorics.

Partitions are tuples of weakly decreasing positive integers.  Everything
else in the package keys dictionaries on them, so they are canonicalized on
construction (trailing zeros dropped) and are immutable.
"""

from __future__ import annotations

from functools import lru_cache
from math import factorial, prod
from typing import Iterable, Iterator


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    >>> Partition([3, 1, 0])
    Partition(3, 1)
    >>> str(Partition((6, 5, 4, 2, 1)))
    '[6,5,4,2,1]'
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = [int(x) for x in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts must be weakly decreasing: {parts}")
        if parts and parts[-1] < 0:
            raise ValueError(f"parts must be nonnegative: {parts}")
        return super().__new__(cls, parts)

    def __repr__(self):
        return f"Partition({', '.join(map(str, self))})"

    def __str__(self):
        return "[" + ",".join(map(str, self)) + "]"

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def height(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """The i-th part (0-based), zero past the end."""
        return self[i] if i < len(self) else 0

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def cells(self) -> Iterator[tuple[int, int]]:
        """Cells (row, column), 0-based, in row-major order."""
        for i, row in enumerate(self):
            for j in range(row):
                yield i, j

    def is_strict(self) -> bool:
        return all(a > b for a, b in zip(self, self[1:]))

    def frobenius(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """Frobenius coordinates (arms | legs) of the diagonal hooks."""
        conj = conjugate(self)
        d = sum(1 for i, row in enumerate(self) if row > i)
        arms = tuple(self[i] - i - 1 for i in range(d))
        legs = tuple(conj[i] - i - 1 for i in range(d))
        return arms, legs

    def diagonal_hooks(self) -> tuple[int, ...]:
        arms, legs = self.frobenius()
        return tuple(a + b + 1 for a, b in zip(arms, legs))


def parse_partition(text: str) -> Partition:
    """Parse ``"[6,5,4,2,1]"`` (brackets optional, ``"[]"`` is empty)."""
    body = text.strip()
    if body.startswith("[") and body.endswith("]"):
        body = body[1:-1]
    elif body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
    body = body.strip()
    if not body:
        return Partition()
    try:
        parts = [int(tok) for tok in body.split(",")]
    except ValueError:
        raise ValueError(f"not a partition: {text!r}") from None
    if any(x <= 0 for x in parts):
        raise ValueError(f"partition parts must be positive: {text!r}")
    return Partition(parts)


def conjugate(lam: Iterable[int]) -> Partition:
    lam = tuple(lam)
    if not lam:
        return Partition()
    return Partition(sum(1 for x in lam if x > i) for i in range(lam[0]))


def sigma_perm(lam: Partition) -> dict[int, int]:
    """The transpose permutation on the |lam| cells, numbered 1.. row-major.

    Cell (i, j) of ``lam`` is sent to the row-major number of cell (j, i) in
    the conjugate diagram.
    """
    lam = Partition(lam)
    conj = conjugate(lam)
    offsets = [0]
    for row in conj:
        offsets.append(offsets[-1] + row)
    perm = {}
    for number, (i, j) in enumerate(lam.cells(), start=1):
        perm[number] = offsets[j] + i + 1
    return perm


def two_bracket(lam: Partition) -> Partition:
    """The partition 2[lam] indexing the graded pieces of exterior powers of Sym^2.

    Defined for strict ``lam``: the diagonal hooks of the result are
    ``2*lam_i`` and its i-th row has ``lam_i + i`` boxes (1-based i), so the
    Frobenius coordinates are ``(lam_1, ..., lam_r | lam_1 - 1, ..., lam_r - 1)``.

    >>> two_bracket(Partition((5, 3, 1)))
    Partition(6, 5, 4, 2, 1)
    """
    lam = Partition(lam)
    if not lam.is_strict():
        raise ValueError(f"2[lambda] needs distinct parts, got {lam}")
    return from_frobenius(tuple(lam), tuple(x - 1 for x in lam))


def from_frobenius(arms: tuple[int, ...], legs: tuple[int, ...]) -> Partition:
    r = len(arms)
    if len(legs) != r:
        raise ValueError("arms and legs must have equal length")
    if any(a <= b for a, b in zip(arms, arms[1:])) or any(a <= b for a, b in zip(legs, legs[1:])):
        raise ValueError("Frobenius coordinates must be strictly decreasing")
    if r and (arms[-1] < 0 or legs[-1] < 0):
        raise ValueError("Frobenius coordinates must be nonnegative")
    rows = [arms[i] + i + 1 for i in range(r)]
    cols = [legs[j] + j + 1 for j in range(r)]
    # rows below the Durfee square are read off the leg columns
    height = cols[0] if cols else 0
    for i in range(r, height):
        rows.append(sum(1 for c in cols if c > i))
    return Partition(rows)


def dim_gl(lam: Iterable[int], g: int) -> int:
    """Dimension of the irreducible GL_g-module of highest weight ``lam``.

    Zero when ``lam`` has more than ``g`` parts.
    """
    lam = tuple(lam)
    if len(lam) > g:
        return 0
    padded = lam + (0,) * (g - len(lam))
    num, den = 1, 1
    for i in range(g):
        for j in range(i + 1, g):
            num *= padded[i] - padded[j] + j - i
            den *= j - i
    return num // den


@lru_cache(maxsize=None)
def _partitions(n: int, max_part: int) -> tuple[Partition, ...]:
    if n == 0:
        return (Partition(),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in _partitions(n - first, first):
            out.append(Partition((first,) + rest))
    return tuple(out)


def partitions_of(n: int, max_part: int | None = None, max_height: int | None = None) -> Iterator[Partition]:
    """All partitions of ``n``, in reverse lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    for lam in _partitions(n, n if max_part is None else max_part):
        if max_height is None or len(lam) <= max_height:
            yield lam


def distinct_part_partitions(n: int) -> Iterator[Partition]:
    return (lam for lam in partitions_of(n) if lam.is_strict())


def dominance_leq(mu: Iterable[int], lam: Iterable[int]) -> bool:
    """True when ``mu`` is dominated by ``lam`` (partial sums, zero-padded)."""
    mu, lam = tuple(mu), tuple(lam)
    if sum(mu) != sum(lam):
        return False
    s_mu = s_lam = 0
    for i in range(max(len(mu), len(lam))):
        s_mu += mu[i] if i < len(mu) else 0
        s_lam += lam[i] if i < len(lam) else 0
        if s_mu > s_lam:
            return False
    return True


def hook_lengths(lam: Partition) -> list[list[int]]:
    conj = conjugate(lam)
    return [[lam[i] - j + conj[j] - i - 1 for j in range(lam[i])] for i in range(len(lam))]


def num_standard_tableaux(lam: Partition) -> int:
    """f^lam by the hook length formula."""
    return factorial(sum(lam)) // prod(h for row in hook_lengths(Partition(lam)) for h in row)
