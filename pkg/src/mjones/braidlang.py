"""Braid words and the combinatorial invariants of their trace closures.

A braid word on ``n`` strands is a sequence of signed generator indices:
``+k`` stands for the generator crossing strand ``k`` over strand ``k+1``
(written ``s<k>``), ``-k`` for its inverse (``s<k>^-1``).  Strands and
generators are numbered from 1 on the outside; internally everything is
0-based.  Closing a braid by joining each top endpoint to the bottom
endpoint directly below it (trace closure) produces an oriented link, and
all invariants computed here refer to that closure.

The invariants are purely combinatorial: writhe, component count, pairwise
linking numbers, the evenness condition on total linking ("properness"),
and the mod-2 concordance data (self-linking per component, the pairwise
value derived from linking numbers, and the triple-component count) that
together determine the sign of the Jones polynomial at t = i.  Self-linking
and triple data cannot be read off a braid word without a full diagram
analysis, so they are accepted as inputs; a small built-in table covers the
standard sample links.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from itertools import combinations


class BraidSyntaxError(ValueError):
    """Raised for malformed braid-word text; message carries the token position."""


@dataclass(frozen=True)
class BraidWord:
    """A braid word: strand count plus signed generator letters.

    ``strands`` must exceed ``|g|`` for every letter ``g``.  The empty word
    is legal and closes to the ``strands``-component unlink.
    """

    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise ValueError(f"strand count must be positive, got {self.strands}")
        object.__setattr__(self, "letters", tuple(self.letters))
        for g in self.letters:
            if g == 0 or abs(g) >= self.strands:
                raise ValueError(
                    f"letter {g} out of range for {self.strands} strands "
                    f"(need 1 <= |g| <= {self.strands - 1})"
                )

    @property
    def writhe(self) -> int:
        return sum(1 if g > 0 else -1 for g in self.letters)

    @property
    def crossings(self) -> int:
        return len(self.letters)

    def max_generator(self) -> int:
        return max((abs(g) for g in self.letters), default=0)

    def with_strands(self, strands: int) -> "BraidWord":
        """Same letters on a wider braid; the closure gains unknot components."""
        return BraidWord(strands, self.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strands, tuple(-g for g in reversed(self.letters)))

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if other.strands != self.strands:
            raise ValueError("cannot concatenate words on different strand counts")
        return BraidWord(self.strands, self.letters + other.letters)

    def __str__(self) -> str:
        return format_braid(self)


_TOKEN = re.compile(r"^(?:s(\d+)(\^-1)?|(-?\d+))$")
_STRANDS = re.compile(r"^strands=(\d+)$")


def parse_braid(text: str) -> BraidWord:
    """Parse whitespace-separated braid tokens into a :class:`BraidWord`.

    Accepted tokens: ``s<k>``, ``s<k>^-1``, ``<k>``, ``-<k>``, plus an
    optional leading ``strands=<n>``.  Without the prefix the strand count
    defaults to ``1 + max |k|`` (1 for the empty word).  ``k = 0`` and
    generators out of range are rejected with the token position in the
    message.
    """
    tokens = text.split()
    strands = None
    start = 0
    if tokens and (m := _STRANDS.match(tokens[0])):
        strands = int(m.group(1))
        if strands < 1:
            raise BraidSyntaxError("token 1: strand count must be positive")
        start = 1

    letters = []
    for pos, tok in enumerate(tokens[start:], start=start + 1):
        m = _TOKEN.match(tok)
        if not m:
            raise BraidSyntaxError(f"token {pos}: malformed braid token {tok!r}")
        if m.group(1) is not None:
            k = int(m.group(1))
            g = -k if m.group(2) else k
        else:
            g = int(m.group(3))
        if g == 0:
            raise BraidSyntaxError(f"token {pos}: generator index 0 is not allowed")
        letters.append(g)

    if strands is None:
        strands = 1 + max((abs(g) for g in letters), default=0)
    for pos, g in enumerate(letters, start=start + 1):
        if abs(g) >= strands:
            raise BraidSyntaxError(
                f"token {pos}: generator s{abs(g)} out of range for {strands} strands"
            )
    return BraidWord(strands, tuple(letters))


def format_braid(word: BraidWord) -> str:
    """Canonical printed form; ``parse_braid`` round-trips it exactly.

    The ``strands=`` prefix is emitted only when the count is not implied
    by the letters.
    """
    toks = [f"s{abs(g)}" + ("^-1" if g < 0 else "") for g in word.letters]
    if word.strands != 1 + word.max_generator():
        toks.insert(0, f"strands={word.strands}")
    return " ".join(toks)


def closure_permutation(word: BraidWord) -> tuple[int, ...]:
    """Permutation induced on strands by the word (0-based; signs ignored).

    Entry ``i`` is the final position of the strand that starts at position
    ``i``; its cycles are the closure's components.
    """
    at_pos = list(range(word.strands))
    for g in word.letters:
        k = abs(g) - 1
        at_pos[k], at_pos[k + 1] = at_pos[k + 1], at_pos[k]
    perm = [0] * word.strands
    for pos, strand in enumerate(at_pos):
        perm[strand] = pos
    return tuple(perm)


@dataclass(frozen=True)
class LinkInvariants:
    """Combinatorial data of a braid closure.

    ``linking[i][j]`` is the linking number of components ``i`` and ``j``
    (half the signed count of crossings between them); the diagonal is
    zero.  ``proper`` records whether every component has even total
    linking with the union of the others.
    """

    writhe: int
    components: int
    component_of_strand: tuple[int, ...]
    linking: tuple[tuple[int, ...], ...]
    proper: bool


def link_invariants(word: BraidWord) -> LinkInvariants:
    """Writhe, components, linking matrix and properness of the closure."""
    perm = closure_permutation(word)
    comp_of = [-1] * word.strands
    ncomp = 0
    for s in range(word.strands):
        if comp_of[s] >= 0:
            continue
        t = s
        while comp_of[t] < 0:
            comp_of[t] = ncomp
            t = perm[t]
        ncomp += 1

    crossing_sum = [[0] * ncomp for _ in range(ncomp)]
    at_pos = list(range(word.strands))
    for g in word.letters:
        k = abs(g) - 1
        a, b = at_pos[k], at_pos[k + 1]
        ca, cb = comp_of[a], comp_of[b]
        if ca != cb:
            s = 1 if g > 0 else -1
            crossing_sum[ca][cb] += s
            crossing_sum[cb][ca] += s
        at_pos[k], at_pos[k + 1] = at_pos[k + 1], at_pos[k]

    linking = []
    for i in range(ncomp):
        row = []
        for j in range(ncomp):
            # each inter-component crossing was recorded twice (once per order)
            total = crossing_sum[i][j]
            if total % 2 != 0:
                raise AssertionError(
                    "inter-component crossing count is odd; impossible for a closure"
                )
            row.append(total // 2)
        linking.append(tuple(row))

    proper = all(
        sum(linking[i][j] for j in range(ncomp) if j != i) % 2 == 0
        for i in range(ncomp)
    )
    return LinkInvariants(
        writhe=word.writhe,
        components=ncomp,
        component_of_strand=tuple(comp_of),
        linking=tuple(linking),
        proper=proper,
    )


@dataclass(frozen=True)
class ArfData:
    """Externally supplied mod-2 data: self-linking per component and the
    triple-component count per component triple (lexicographic order)."""

    c1: tuple[int, ...]
    c3: tuple[int, ...] = ()

    def validate(self, components: int) -> None:
        if len(self.c1) != components:
            raise ValueError(
                f"c1 has {len(self.c1)} entries for {components} components"
            )
        ntriples = math.comb(components, 3)
        if len(self.c3) != ntriples:
            raise ValueError(
                f"c3 has {len(self.c3)} entries, expected {ntriples} triples"
            )


def c2_pair(lk: int) -> int:
    """Pairwise mod-2 value lk(lk^2 - 1)/6 reduced mod 2.

    The product of three consecutive integers (lk-1)lk(lk+1) is always
    divisible by 6, so the division is exact.
    """
    num = lk * (lk * lk - 1)
    assert num % 6 == 0
    return (num // 6) % 2


def arf_invariant(inv: LinkInvariants, data: ArfData) -> int:
    """Mod-2 invariant fixing the sign of the Jones value at t = i.

    Sum of the supplied self-linking values, the pairwise values derived
    from the linking matrix, and the supplied triple values.  Undefined
    (raises) for non-proper links.
    """
    if not inv.proper:
        raise ValueError("invariant undefined: link is not proper")
    data.validate(inv.components)
    total = sum(data.c1)
    for i, j in combinations(range(inv.components), 2):
        total += c2_pair(inv.linking[i][j])
    total += sum(data.c3)
    return total % 2


def jones_from_arf(inv: LinkInvariants, arf: int | None) -> float:
    """Jones value at t = i from component count and the mod-2 invariant.

    Non-proper links evaluate to 0 (and must be called with ``arf=None``);
    proper links give sqrt(2)^(components-1) with sign (-1)^arf.
    """
    if not inv.proper:
        if arf is not None:
            raise ValueError("arf value supplied for a non-proper link")
        return 0.0
    if arf is None:
        raise ValueError("proper link requires an arf value")
    half, odd = divmod(inv.components - 1, 2)
    magnitude = float(2 ** half) * (math.sqrt(2.0) if odd else 1.0)
    return -magnitude if arf % 2 else magnitude


# Self-linking / triple data for the sample links, keyed by the canonical
# printed form of their braid words.  Computing these from diagrams is out
# of scope; anything else needs a user-supplied table.
LINK_TABLE: dict[str, ArfData] = {
    "s1": ArfData(c1=(0,)),                                  # unknot
    "s1 s1": ArfData(c1=(0, 0)),                             # Hopf (not proper)
    "s1 s1 s1": ArfData(c1=(1,)),                            # trefoil
    "s1 s1 s1 s1": ArfData(c1=(0, 0)),                       # Solomon
    "s1 s2^-1 s1 s2^-1": ArfData(c1=(1,)),                   # figure-eight
    "s1 s2^-1 s1 s2^-1 s1 s2^-1": ArfData(c1=(0, 0, 0), c3=(1,)),  # Borromean
}


def lookup_arf_data(word: BraidWord, table: dict[str, ArfData] | None = None) -> ArfData | None:
    """Find c1/c3 data for a word's closure, or None if unknown.

    Empty words are unlinks (all zeros).  Otherwise the word reduced to its
    minimal strand count is looked up in the table (built-in unless one is
    supplied); spare strands beyond the generators' reach close to split
    unknot components, whose data extends by zeros.
    """
    if not word.letters:
        n = word.strands
        return ArfData(c1=(0,) * n, c3=(0,) * math.comb(n, 3))
    base_strands = 1 + word.max_generator()
    key = format_braid(BraidWord(base_strands, word.letters))
    data = (LINK_TABLE if table is None else table).get(key)
    if data is None or word.strands == base_strands:
        return data
    # spare strands become trailing unknot components
    m_base = len(data.c1)
    m = m_base + (word.strands - base_strands)
    base_triples = dict(zip(combinations(range(m_base), 3), data.c3))
    c3 = tuple(base_triples.get(t, 0) for t in combinations(range(m), 3))
    return ArfData(c1=data.c1 + (0,) * (m - m_base), c3=c3)
