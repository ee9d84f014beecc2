"""
Generators of the exotic conformal Galilei algebra and its triangular parts
"""
from enum import Enum
from typing import Dict, Tuple


class Generator(str, Enum):
    """The 11 basis generators in the X+/X- basis"""

    H = "H"
    D = "D"
    C = "C"
    J = "J"
    Theta = "Theta"
    Pplus = "Pplus"
    Pminus = "Pminus"
    Kplus = "Kplus"
    Kminus = "Kminus"
    Fplus = "Fplus"
    Fminus = "Fminus"

    def __str__(self) -> str:
        return self.value

    @classmethod
    def parse(cls, tag: str) -> "Generator":
        try:
            return cls(tag)
        except ValueError:
            known = ", ".join(g.value for g in cls)
            raise ValueError(f"unknown generator {tag!r} (expected one of {known})") from None


class TriangularPart(str, Enum):
    raising = "raising"
    cartan = "cartan"
    lowering = "lowering"


RAISING: Tuple[Generator, ...] = (Generator.H, Generator.Pplus, Generator.Pminus, Generator.Kplus)
CARTAN: Tuple[Generator, ...] = (Generator.D, Generator.J, Generator.Theta)
# PBW order of the Verma basis C^h K-^k F-^l F+^m
LOWERING: Tuple[Generator, ...] = (Generator.C, Generator.Kminus, Generator.Fminus, Generator.Fplus)

_PARTS: Dict[Generator, TriangularPart] = {
    **{g: TriangularPart.raising for g in RAISING},
    **{g: TriangularPart.cartan for g in CARTAN},
    **{g: TriangularPart.lowering for g in LOWERING},
}

# Position of each lowering generator in the PBW order
LOWERING_INDEX: Dict[Generator, int] = {g: i for i, g in enumerate(LOWERING)}


def part_of(x: Generator) -> TriangularPart:
    return _PARTS[x]
