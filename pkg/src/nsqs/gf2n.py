"""GF(2^n) arithmetic via log/antilog tables.

Elements are n-bit integers; the polynomial modulus is an (n+1)-bit mask
(x^5 + x^2 + 1 -> 0b100101).  The generator used for the tables is the
class of x itself, so the modulus must be primitive, not just
irreducible; this is checked at construction time.
"""

from __future__ import annotations

from .errors import InvalidFieldError

# One fixed primitive polynomial per degree.  Degrees 3, 4, 5 and 7 match
# the defaults used by the catalog constructions.
DEFAULT_PRIMITIVE_POLYS = {
    2: 0b111,        # x^2 + x + 1
    3: 0b1011,       # x^3 + x + 1
    4: 0b10011,      # x^4 + x + 1
    5: 0b100101,     # x^5 + x^2 + 1
    6: 0b1000011,    # x^6 + x + 1
    7: 0b10000011,   # x^7 + x + 1
}


class Gf2nField:
    """GF(2^n) with exp/log tables for the primitive element alpha = x."""

    def __init__(self, n: int, modulus: int | None = None):
        if n < 1:
            raise InvalidFieldError(f"need n >= 1, got {n}")
        if modulus is None:
            try:
                modulus = DEFAULT_PRIMITIVE_POLYS[n]
            except KeyError:
                raise InvalidFieldError(f"no default primitive polynomial for n={n}")
        if modulus.bit_length() != n + 1:
            raise InvalidFieldError(
                f"modulus {modulus:#b} does not have degree {n}"
            )
        self.n = n
        self.modulus = modulus
        self.order = (1 << n) - 1
        self._build_tables()

    def _build_tables(self) -> None:
        exp = [0] * self.order
        log = [-1] * (self.order + 1)
        x = 1
        for i in range(self.order):
            if log[x] != -1:
                # x has order < 2^n - 1, so the modulus is not primitive
                raise InvalidFieldError(
                    f"modulus {self.modulus:#b} is not primitive for n={self.n}"
                )
            exp[i] = x
            log[x] = i
            x <<= 1
            if x > self.order:
                x ^= self.modulus
        if x != 1:
            raise InvalidFieldError(
                f"modulus {self.modulus:#b} is not primitive for n={self.n}"
            )
        self.exp_table = exp
        self.log_table = log

    def exp(self, i: int) -> int:
        """alpha^i as a bit vector."""
        return self.exp_table[i % self.order]

    def log(self, x: int) -> int:
        """Discrete log of a nonzero element to base alpha."""
        if not 0 < x <= self.order:
            raise InvalidFieldError(f"log of {x} undefined in GF(2^{self.n})")
        return self.log_table[x]

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self.exp_table[(self.log_table[a] + self.log_table[b]) % self.order]

    def add(self, a: int, b: int) -> int:
        return a ^ b
