"""Frames of discernment, focal sets, and validated mass functions.

A frame is an ordered collection of mutually exclusive singleton hypothesis
labels. Subsets of the frame are encoded as bitmasks over the label
positions, so subset, superset, and intersection tests are single word
operations. Frames are capped at 64 labels for that reason.

Everything here is immutable after construction and safe to share between
threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Sequence

import numpy as np

from .errors import (
    DuplicateFocalSetError,
    DuplicateLabelError,
    EmptyFrameError,
    EmptySetMassError,
    FrameMismatchError,
    FrameTooLargeError,
    MassOutOfRangeError,
    MassSumMismatchError,
    UnknownLabelError,
)

MAX_FRAME_SIZE = 64

#: Masses must sum to 1 within this tolerance; inputs outside it are
#: rejected rather than renormalized.
MASS_SUM_TOLERANCE = 1e-9


@dataclass(frozen=True)
class Frame:
    """An ordered frame of discernment."""

    labels: tuple[str, ...]

    def __init__(self, labels: Iterable[str]):
        labels = tuple(labels)
        if not labels:
            raise EmptyFrameError("a frame needs at least one label")
        seen = set()
        for label in labels:
            if not label:
                raise EmptyFrameError("frame labels must be non-empty strings")
            if label in seen:
                raise DuplicateLabelError(f"duplicate label {label!r}")
            seen.add(label)
        if len(labels) > MAX_FRAME_SIZE:
            raise FrameTooLargeError(
                f"frame has {len(labels)} labels; at most {MAX_FRAME_SIZE} supported"
            )
        object.__setattr__(self, "labels", labels)

    @property
    def size(self) -> int:
        return len(self.labels)

    def __len__(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise UnknownLabelError(f"label {label!r} not in frame {self.labels}") from None

    def subset(self, members: Iterable[str]) -> FocalSet:
        """Build a focal set from labels of this frame."""
        bits = 0
        for label in members:
            bits |= 1 << self.index(label)
        return FocalSet(self, bits)

    def singleton(self, label: str) -> FocalSet:
        return FocalSet(self, 1 << self.index(label))

    @property
    def full_set(self) -> FocalSet:
        """The focal set containing every label (Omega)."""
        return FocalSet(self, (1 << self.size) - 1)


@dataclass(frozen=True)
class FocalSet:
    """A nonempty subset of a frame, stored as a bitmask over label positions."""

    frame: Frame
    bits: int

    def __post_init__(self):
        if self.bits == 0:
            raise EmptySetMassError("the empty set is not a valid focal set")
        if self.bits >> self.frame.size:
            raise UnknownLabelError("bitmask references positions outside the frame")

    @property
    def cardinality(self) -> int:
        return self.bits.bit_count()

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(
            label for i, label in enumerate(self.frame.labels) if self.bits >> i & 1
        )

    def __contains__(self, label: str) -> bool:
        return self.bits >> self.frame.index(label) & 1 == 1

    def issubset(self, other: FocalSet) -> bool:
        _check_same_frame(self.frame, other.frame)
        return self.bits & ~other.bits == 0

    def intersects(self, other: FocalSet) -> bool:
        _check_same_frame(self.frame, other.frame)
        return self.bits & other.bits != 0

    def indices(self) -> Iterator[int]:
        """Positions of the member singletons, ascending."""
        bits = self.bits
        while bits:
            low = bits & -bits
            yield low.bit_length() - 1
            bits ^= low


def _check_same_frame(a: Frame, b: Frame) -> None:
    if a != b:
        raise FrameMismatchError(f"frames differ: {a.labels} vs {b.labels}")


@dataclass(frozen=True)
class SingletonVector:
    """One non-negative value per singleton of a frame, in frame order.

    Holds Belief or Plausibility tabulations and anything else that is
    reduced over focal sets with :meth:`sum_over`.
    """

    frame: Frame
    values: np.ndarray = field(compare=False)

    def __init__(self, frame: Frame, values: Sequence[float] | np.ndarray):
        arr = np.asarray(values, dtype=float)
        if arr.shape != (frame.size,):
            raise ValueError(
                f"expected {frame.size} values, got shape {arr.shape}"
            )
        if (arr < 0).any():
            raise ValueError("singleton values must be non-negative")
        arr.flags.writeable = False
        object.__setattr__(self, "frame", frame)
        object.__setattr__(self, "values", arr)

    def __getitem__(self, label: str) -> float:
        return float(self.values[self.frame.index(label)])

    def sum_over(self, subset: FocalSet) -> float:
        """Sum of the values over the singletons of ``subset``.

        This is the compound-to-sum reduction used throughout the
        proportional transforms.
        """
        _check_same_frame(self.frame, subset.frame)
        return float(sum(self.values[i] for i in subset.indices()))

    @property
    def total(self) -> float:
        return float(self.values.sum())


class MassFunction:
    """A validated basic belief assignment over a frame.

    Masses are attached to nonempty subsets only (closed world), each lies
    in [0, 1], and they sum to one within ``MASS_SUM_TOLERANCE``. Inputs
    violating any of this are rejected; nothing is silently renormalized.
    Zero-mass entries are accepted and dropped.
    """

    __slots__ = ("frame", "_masses")

    def __init__(self, frame: Frame, assignments: Mapping[FocalSet, float]):
        masses: dict[int, float] = {}
        total = 0.0
        for subset, mass in assignments.items():
            _check_same_frame(frame, subset.frame)
            if mass < 0.0 or mass > 1.0:
                raise MassOutOfRangeError(
                    f"mass {mass} on {subset.labels} is outside [0, 1]"
                )
            if subset.bits in masses:
                raise DuplicateFocalSetError(
                    f"focal set {subset.labels} assigned more than once"
                )
            masses[subset.bits] = mass
            total += mass
        if abs(total - 1.0) > MASS_SUM_TOLERANCE:
            raise MassSumMismatchError(
                f"masses sum to {total!r}, off by {total - 1.0:+.3g}"
            )
        self.frame = frame
        self._masses = {bits: m for bits, m in masses.items() if m > 0.0}

    @classmethod
    def from_labels(
        cls,
        frame: Frame,
        assignments: Iterable[tuple[Iterable[str], float]],
    ) -> MassFunction:
        """Build from (subset labels, mass) pairs; unlisted subsets get mass 0."""
        mapping: dict[FocalSet, float] = {}
        for members, mass in assignments:
            subset = frame.subset(members)
            if subset in mapping:
                raise DuplicateFocalSetError(
                    f"focal set {subset.labels} assigned more than once"
                )
            mapping[subset] = mass
        return cls(frame, mapping)

    def focal_sets(self) -> Iterator[tuple[FocalSet, float]]:
        """Focal sets with strictly positive mass, with their masses."""
        for bits, mass in self._masses.items():
            yield FocalSet(self.frame, bits), mass

    def __len__(self) -> int:
        return len(self._masses)

    def mass(self, subset: FocalSet) -> float:
        _check_same_frame(self.frame, subset.frame)
        return self._masses.get(subset.bits, 0.0)

    def singleton_masses(self) -> SingletonVector:
        values = np.zeros(self.frame.size)
        for i in range(self.frame.size):
            values[i] = self._masses.get(1 << i, 0.0)
        return SingletonVector(self.frame, values)

    def is_bayesian(self) -> bool:
        """True if all mass sits on singletons."""
        return all(bits.bit_count() == 1 for bits in self._masses)

    def belief(self, subset: FocalSet) -> float:
        """Total mass on focal sets contained in ``subset``."""
        _check_same_frame(self.frame, subset.frame)
        return math.fsum(
            mass for bits, mass in self._masses.items() if bits & ~subset.bits == 0
        )

    def plausibility(self, subset: FocalSet) -> float:
        """Total mass on focal sets intersecting ``subset``."""
        _check_same_frame(self.frame, subset.frame)
        return math.fsum(
            mass for bits, mass in self._masses.items() if bits & subset.bits
        )

    def singleton_beliefs(self) -> SingletonVector:
        values = [
            self.belief(FocalSet(self.frame, 1 << i)) for i in range(self.frame.size)
        ]
        return SingletonVector(self.frame, values)

    def singleton_plausibilities(self) -> SingletonVector:
        values = [
            self.plausibility(FocalSet(self.frame, 1 << i))
            for i in range(self.frame.size)
        ]
        return SingletonVector(self.frame, values)

    def sum_bel(self) -> float:
        """Sum of singleton Beliefs; at most 1, with equality iff Bayesian."""
        return self.singleton_beliefs().total

    def sum_pl(self) -> float:
        """Sum of singleton Plausibilities; at least 1, with equality iff Bayesian."""
        return self.singleton_plausibilities().total

    def __repr__(self) -> str:
        parts = ", ".join(
            f"{{{','.join(FocalSet(self.frame, bits).labels)}}}: {mass:g}"
            for bits, mass in sorted(self._masses.items())
        )
        return f"MassFunction({parts})"


def make_frame(labels: Iterable[str]) -> Frame:
    return Frame(labels)


def make_mass_function(
    frame: Frame, assignments: Iterable[tuple[Iterable[str], float]]
) -> MassFunction:
    return MassFunction.from_labels(frame, assignments)
