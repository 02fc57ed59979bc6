"""Sampled LCP array indexed by SA position.

Samples sit at the SA positions of the strictly minimal PLCP values, plus any
extra samples that bound the unsampled stretches in text order.  An unsampled
value satisfies ``PLCP[i] = PLCP[i + 1] + 1``, so ``LCP[x]`` is the stored value
at the first sampled ``Psi^k(x)`` plus ``k``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bitcodec import DeltaStream

# n, d_prime, and the two sample counts, each stored as a u64
HEADER_BITS = 4 * 64


@dataclass(frozen=True)
class SizeReport:
    marks_bits: int
    values_bits: int
    header_bits: int
    n: int

    @property
    def total_bits(self) -> int:
        return self.marks_bits + self.values_bits + self.header_bits

    @property
    def bits_per_symbol(self) -> float:
        return self.total_bits / self.n

    def as_dict(self) -> dict:
        return {
            "marks_bits": self.marks_bits,
            "values_bits": self.values_bits,
            "header_bits": self.header_bits,
            "total_bits": self.total_bits,
            "bits_per_symbol": self.bits_per_symbol,
        }


@dataclass(eq=False)
class SampledLcp:
    n: int
    d_prime: int | None
    marks: object  # any bit vector from bitcodec
    values: DeltaStream
    minimal_samples: int
    extra_samples: int

    @property
    def samples(self) -> int:
        return self.minimal_samples + self.extra_samples

    def walk(self, csa, x: int) -> tuple[int, int]:
        """(LCP[x], number of Psi steps taken)."""
        if not 1 <= x <= self.n:
            raise IndexError(f"SA position {x} outside 1..{self.n}")
        index_of = self.marks.index_of
        psi = csa.psi
        k = 0
        while True:
            idx = index_of(x)
            if idx:
                return self.values.access(idx) + k, k
            x = psi(x)
            k += 1

    def access(self, csa, x: int) -> int:
        return self.walk(csa, x)[0]

    def size_report(self) -> SizeReport:
        return SizeReport(self.marks.size_in_bits(), self.values.size_in_bits(), HEADER_BITS, self.n)

    def max_walk_length(self, csa) -> int:
        """Longest Psi walk over all SA positions, found with one text-order pass."""
        index_of = self.marks.index_of
        psi = csa.psi
        x = csa.isa_samples[0]
        longest = run = 0
        for i in range(self.n):
            if index_of(x):
                run = 0
            else:
                run += 1
                longest = max(longest, run)
            if i + 1 < self.n:
                x = psi(x)
        return longest


def access(slcp: SampledLcp, csa, x: int) -> int:
    return slcp.access(csa, x)


def size_report(slcp: SampledLcp) -> SizeReport:
    return slcp.size_report()


def max_walk_length(slcp: SampledLcp, csa) -> int:
    return slcp.max_walk_length(csa)
