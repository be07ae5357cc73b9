"""Ambient data for a special Cremona transformation.

A transformation of projective n-space of type (delta1, delta2) with a smooth
base locus of dimension r is admissible only if the classical dimension
relation

    n * (delta1 - 1) * delta2 == (delta1*delta2 - 1) * r + (delta1 + 1) * delta2 - 2

holds, together with the degree and dimension bounds below.  The two
configurations driving the built-in pipelines are the cubo-quintic
transformation of P^6 (threefold base locus) and the cubo-cubic
transformation of P^7 (fourfold base locus).
"""

from __future__ import annotations

from dataclasses import dataclass

MODE_THREEFOLD_P6 = "threefold-in-P6"
MODE_FOURFOLD_P7 = "fourfold-in-P7"

MODES = (MODE_THREEFOLD_P6, MODE_FOURFOLD_P7)


def dimension_relation_holds(n: int, delta1: int, delta2: int, r: int) -> bool:
    """Cross-multiplied integer check of the dimension relation (no division)."""
    return n * (delta1 - 1) * delta2 == (delta1 * delta2 - 1) * r + (delta1 + 1) * delta2 - 2


@dataclass(frozen=True)
class TransformationConfig:
    """Dimensions and degrees parameterizing every computation downstream."""

    n: int
    delta1: int
    delta2: int
    r: int
    mode: str

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"unknown mode {self.mode!r}; expected one of {MODES}")
        if not (2 <= self.delta1 <= self.n and 2 <= self.delta2 <= self.n):
            raise ValueError("degrees must satisfy 2 <= delta1, delta2 <= n")
        if not (1 <= self.r <= self.n - 2):
            raise ValueError("base locus dimension must satisfy 1 <= r <= n - 2")
        if self.n >= 6 and (self.delta1 > self.n - 1 or self.r > self.n - 3):
            raise ValueError("for n >= 6 one needs delta1 <= n - 1 and r <= n - 3")
        if not dimension_relation_holds(self.n, self.delta1, self.delta2, self.r):
            raise ValueError(
                f"(n, delta1, delta2, r) = ({self.n}, {self.delta1}, "
                f"{self.delta2}, {self.r}) violates the dimension relation"
            )

    @property
    def codim(self) -> int:
        return self.n - self.r

    @property
    def lambda_max(self) -> int:
        """Degree bound for a base locus cut out by degree-delta1 hypersurfaces."""
        return self.delta1**self.codim

    @classmethod
    def cubic_p6(cls) -> "TransformationConfig":
        return cls(n=6, delta1=3, delta2=5, r=3, mode=MODE_THREEFOLD_P6)

    @classmethod
    def cubo_cubic_p7(cls) -> "TransformationConfig":
        return cls(n=7, delta1=3, delta2=3, r=4, mode=MODE_FOURFOLD_P7)
