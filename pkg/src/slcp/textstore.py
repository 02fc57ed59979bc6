"""Text ingestion and synthetic corpus generators.

A :class:`Text` holds symbol *ranks* in a ``bytes`` object: the terminator is
rank 0 and occurs only at the last position, and the regular symbols use the
dense ranks ``1..sigma``.  Positions are 1-based in every public API of this
package, as in the literature; Python sequences are 0-based, so ``T[i]`` is
``text.symbols[i - 1]``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

TERMINATOR = 0
MAX_SIGMA = 255
MAX_GENERATED = 1 << 27


class TextError(ValueError):
    """Invalid input text or generator parameters."""


@dataclass(frozen=True)
class Text:
    symbols: bytes
    alphabet: bytes = b""  # alphabet[c - 1] is the external byte of rank c

    def __post_init__(self):
        s = self.symbols
        if not s or s[-1] != TERMINATOR:
            raise TextError("text must end with the terminator")
        if s.find(TERMINATOR) != len(s) - 1:
            raise TextError("terminator occurs before the end of the text")
        sigma = max(s)
        present = set(s)
        if len(present) != sigma + 1:
            raise TextError("alphabet is not dense")
        if self.alphabet and len(self.alphabet) != sigma:
            raise TextError("alphabet map does not match the ranks in use")

    @property
    def n(self) -> int:
        return len(self.symbols)

    @property
    def sigma(self) -> int:
        return max(self.symbols)

    @property
    def num_ranks(self) -> int:
        return self.sigma + 1

    def content(self) -> bytes:
        """Symbols without the terminator."""
        return self.symbols[:-1]

    def to_bytes(self) -> bytes:
        """External representation (terminator dropped)."""
        alphabet = self.alphabet or _default_alphabet(self.sigma)
        table = bytes([0]) + alphabet + bytes(255 - len(alphabet))
        return self.content().translate(table)

    def ranks_of(self, pattern: bytes) -> bytes | None:
        """Pattern mapped to ranks, or None if it uses a byte outside the alphabet."""
        alphabet = self.alphabet or _default_alphabet(self.sigma)
        out = bytearray()
        for b in pattern:
            idx = alphabet.find(bytes([b]))
            if idx < 0:
                return None
            out.append(idx + 1)
        return bytes(out)


def _default_alphabet(sigma: int) -> bytes:
    # generated texts print as a, b, c, ... when the letters suffice
    if sigma <= 26:
        return bytes(range(ord("a"), ord("a") + sigma))
    return bytes(range(1, sigma + 1))


def _from_ranks(ranks: bytes, sigma: int) -> Text:
    return Text(ranks + bytes([TERMINATOR]), _default_alphabet(sigma))


def load_text(data: bytes, terminator: int = 0x00) -> Text:
    """Map raw bytes to a dense, order-preserving alphabet and append the terminator."""
    if not data:
        raise TextError("empty input")
    pos = data.find(bytes([terminator]))
    if pos >= 0:
        raise TextError(f"reserved terminator byte 0x{terminator:02x} at position {pos + 1}")
    alphabet = bytes(sorted(set(data)))
    table = bytearray(256)
    for rank, b in enumerate(alphabet, start=1):
        table[b] = rank
    return Text(data.translate(bytes(table)) + bytes([TERMINATOR]), alphabet)


def read_text(path, terminator: int = 0x00) -> Text:
    with open(path, "rb") as fh:
        return load_text(fh.read(), terminator)


def generate_de_bruijn(sigma: int, k: int) -> Text:
    """Lexicographically least de Bruijn sequence of order ``k`` (FKM Lyndon-word
    construction), linearized once without wraparound padding."""
    if sigma < 2 or k < 1:
        raise TextError("de Bruijn sequence needs sigma >= 2 and k >= 1")
    if sigma > MAX_SIGMA or sigma**k > MAX_GENERATED:
        raise TextError(f"sigma^k = {sigma}^{k} exceeds the generator budget")
    a = [0] * (k + 1)
    out = bytearray()

    def db(t: int, p: int) -> None:
        if t > k:
            if k % p == 0:
                out.extend(a[1:p + 1])
        else:
            a[t] = a[t - p]
            db(t + 1, p)
            for j in range(a[t - p] + 1, sigma):
                a[t] = j
                db(t + 1, t)

    db(1, 1)
    return _from_ranks(bytes(c + 1 for c in out), sigma)


def generate_random(sigma: int, n: int, seed: int) -> Text:
    """``n`` i.i.d. uniform symbols over ``sigma`` letters, plus the terminator."""
    if not 1 <= sigma <= MAX_SIGMA or n < 1:
        raise TextError("need 1 <= sigma <= 255 and n >= 1")
    rng = random.Random(seed)
    ranks = bytes(rng.choices(range(1, sigma + 1), k=n))
    # a short text may miss letters; keep the alphabet dense
    return _densify(ranks)


def generate_repeats(sigma: int, base_len: int, copies: int, mutation_rate: float, seed: int) -> Text:
    """Repetitive collection: ``copies`` point-mutated copies of one random base."""
    if copies < 1 or not 0.0 <= mutation_rate <= 1.0:
        raise TextError("need copies >= 1 and 0 <= mutation_rate <= 1")
    rng = random.Random(seed)
    base = generate_random(sigma, base_len, seed).content()
    out = bytearray()
    for _ in range(copies):
        copy = bytearray(base)
        hits = int(round(mutation_rate * base_len))
        for p in rng.sample(range(base_len), hits):
            copy[p] = rng.randrange(1, sigma + 1)
        out += copy
    return _densify(bytes(out))


def _densify(ranks: bytes) -> Text:
    used = sorted(set(ranks))
    if used == list(range(1, len(used) + 1)):
        return _from_ranks(ranks, len(used))
    table = bytearray(256)
    for new, old in enumerate(used, start=1):
        table[old] = new
    return _from_ranks(ranks.translate(bytes(table)), len(used))


@dataclass(frozen=True)
class SentinelConcat:
    """``r`` copies of a base text, each closed by an end marker.

    Inner markers share rank 0 and the final marker has rank 1; regular symbols
    are shifted up by one so both markers sort below them.  With ``tie_markers``
    enabled downstream, the final marker counts as equal to the inner ones when
    measuring common prefixes while still sorting after them.
    """

    base: Text
    r: int
    symbols: bytes

    inner_marker_rank = 0
    final_marker_rank = 1

    @property
    def n(self) -> int:
        return len(self.symbols)

    @property
    def num_ranks(self) -> int:
        return self.base.sigma + 2

    @property
    def sigma(self) -> int:
        return self.base.sigma + 1

    def content(self) -> bytes:
        """Symbols without the final marker."""
        return self.symbols[:-1]

    @property
    def copy_length(self) -> int:
        return self.base.n

    @property
    def tie(self) -> tuple[int, int]:
        return (self.inner_marker_rank, self.final_marker_rank)


def generate_concat(base: Text, r: int) -> SentinelConcat:
    if r < 2:
        raise TextError("concatenation needs r >= 2 copies")
    if base.sigma >= MAX_SIGMA:
        raise TextError("no room below the regular symbols for the markers")
    body = base.content().translate(bytes(min(c + 1, 255) for c in range(256)))
    copy = body + bytes([SentinelConcat.inner_marker_rank])
    symbols = copy * (r - 1) + body + bytes([SentinelConcat.final_marker_rank])
    return SentinelConcat(base, r, symbols)
