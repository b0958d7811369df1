"""Compensated (error-carrying) floating-point accumulation."""

from __future__ import annotations

from typing import Iterable

__all__ = ["CompensatedSum", "comp_sum"]


class CompensatedSum:
    """Running sum with Neumaier compensation.

    Keeps a separate low-order correction term so that long series loops do
    not lose mass to cancellation; `value` folds the correction back in.
    """

    __slots__ = ("_hi", "_lo")

    def __init__(self, start: float = 0.0) -> None:
        self._hi = float(start)
        self._lo = 0.0

    def add(self, x: float) -> None:
        t = self._hi + x
        if abs(self._hi) >= abs(x):
            self._lo += (self._hi - t) + x
        else:
            self._lo += (x - t) + self._hi
        self._hi = t

    @property
    def value(self) -> float:
        return self._hi + self._lo


def comp_sum(terms: Iterable[float]) -> float:
    """Compensated sum of an iterable of floats."""
    acc = CompensatedSum()
    for t in terms:
        acc.add(t)
    return acc.value
