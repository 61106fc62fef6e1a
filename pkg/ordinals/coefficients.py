"""
Множества коэффициентов K_Ω.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Tuple

from .order import EQ, LT, compare
from .terms import OrdTerm, coefficient_members


@dataclass(frozen=True)
class CoeffSet:
    """Конечное множество термов < Ω, без повторов с точностью до EQ"""
    members: Tuple[OrdTerm, ...] = ()

    @classmethod
    def of(cls, items: Iterable[OrdTerm]) -> 'CoeffSet':
        unique = []
        for item in items:
            if not any(compare(item, seen) is EQ for seen in unique):
                unique.append(item)
        return cls(tuple(unique))

    def __iter__(self) -> Iterator[OrdTerm]:
        return iter(self.members)

    def __len__(self):
        return len(self.members)

    def all_below(self, bound: OrdTerm) -> bool:
        """K < bound: каждый элемент строго меньше bound"""
        return all(compare(m, bound) is LT for m in self.members)


def coefficients(t: OrdTerm) -> CoeffSet:
    """K_Ω t для канонического терма"""
    return CoeffSet.of(coefficient_members(t))
