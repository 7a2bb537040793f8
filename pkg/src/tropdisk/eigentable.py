"""Integer eigenvalues of quantum multiplication by the first Chern class.

The shipped table records, for each del Pezzo surface, its integer
eigenvalues with multiplicities and whether each has maximal modulus among
all eigenvalues of the surface (the non-integer eigenvalues only enter
through that flag).  Non-maximal integer eigenvalues are the ones realized
by sphere potentials; the realizing fixture cases are listed alongside.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple


@dataclass(frozen=True)
class EigenTableEntry:
    surface: str                       # Bl^k P^2 style name
    fixture: Optional[str]             # fixture family for this surface
    integer_eigenvalues: Tuple[Tuple[int, int, bool], ...]
    # (value, multiplicity, is_maximal_modulus)
    realizations: Tuple[Tuple[int, str, str], ...] = ()
    # (eigenvalue, fixture name, case name)


EIGENVALUE_TABLE: Tuple[EigenTableEntry, ...] = (
    EigenTableEntry("P2", None, ((3, 1, True),)),
    EigenTableEntry(
        "P1xP1", "p1xp1",
        ((4, 1, True), (0, 2, False), (-4, 1, True)),
        ((0, "p1xp1", "antidiagonal"),),
    ),
    EigenTableEntry("Bl1P2", None, ()),
    EigenTableEntry(
        "Bl2P2", "dp7", ((-1, 2, False),),
        ((-1, "dp7", "leg"),),
    ),
    EigenTableEntry(
        "Bl3P2", "dp6",
        ((-2, 3, False), (-3, 2, False), (6, 1, True)),
        ((-2, "dp6", "segment"), (-3, "dp6", "trivalent")),
    ),
    EigenTableEntry(
        "Bl4P2", "dp5", ((-3, 5, False),),
        ((-3, "dp5", "segment"),),
    ),
    EigenTableEntry(
        "Bl5P2", "dp4", ((-4, 7, False), (12, 1, True)),
        ((-4, "dp4", "sphere"),),
    ),
    EigenTableEntry(
        "Bl6P2", "dp3", ((-6, 8, False), (21, 1, True)),
        ((-6, "dp3", "trivalent"),),
    ),
    EigenTableEntry(
        "Bl7P2", "dp2", ((-12, 9, False), (52, 1, True)),
        ((-12, "dp2", "l1"), (-12, "dp2", "l2")),
    ),
    EigenTableEntry(
        "Bl8P2", "dp1", ((-60, 10, False), (372, 1, True)),
        ((-60, "dp1", "vertical"),),
    ),
)


def entry_for_fixture(fixture_name: str) -> Optional[EigenTableEntry]:
    for entry in EIGENVALUE_TABLE:
        if entry.fixture == fixture_name:
            return entry
    return None


def nonmaximal_integers(entry: EigenTableEntry) -> List[int]:
    return [v for v, _, is_max in entry.integer_eigenvalues if not is_max]


def eigenvalue_verdict(fixture_name: str, total) -> str:
    """Compare a computed potential with the table."""
    entry = entry_for_fixture(fixture_name)
    if entry is None:
        return "no eigenvalue data for this fixture"
    if total.denominator != 1:
        return f"total {total} is not an integer: no eigenvalue match"
    value = int(total)
    for v, mult, is_max in entry.integer_eigenvalues:
        if v == value:
            if is_max:
                return f"matches integer eigenvalue {value} (maximal modulus)"
            return f"matches eigenvalue {value} (non-maximal, multiplicity {mult})"
    return f"total {value} is not an integer eigenvalue of {entry.surface}"
