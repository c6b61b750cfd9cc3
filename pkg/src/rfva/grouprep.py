"""Finite matrix groups given by integer generator matrices.

A Rep materializes the multiplicative closure of its generators by a
deterministic breadth-first search, so element and conjugacy-class ordering
are reproducible across runs (character tables reference classes through
generator words resolved against this ordering).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import NotFinite, NotInvertible
from .exactalg import IntMatrix, adjugate, det

DEFAULT_ELEMENT_BOUND = 20_000


@dataclass(frozen=True)
class Rep:
    """An integral representation: generator images plus their finite closure."""

    degree: int
    generators: tuple[IntMatrix, ...]
    elements: tuple[IntMatrix, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    def element_index(self, m: IntMatrix) -> int:
        return _index_of(self)[m]

    def inverse(self, m: IntMatrix) -> IntMatrix:
        d = det(m)
        return adjugate(m) if d == 1 else -adjugate(m)

    def resolve_word(self, word) -> IntMatrix:
        """Product of generator images for a word of generator indices."""
        acc = IntMatrix.identity(self.degree)
        for g in word:
            acc = acc * self.generators[g]
        return acc


@lru_cache(maxsize=None)
def _index_of(rep: Rep) -> dict[IntMatrix, int]:
    return {m: i for i, m in enumerate(rep.elements)}


@dataclass(frozen=True)
class ConjClasses:
    """Partition of the element list into conjugacy classes, BFS-ordered."""

    representatives: tuple[int, ...]  # element indices
    members: tuple[tuple[int, ...], ...]

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(m) for m in self.members)

    def __len__(self) -> int:
        return len(self.representatives)


@dataclass(frozen=True)
class ClassFunction:
    """One integer value per conjugacy class, in ConjClasses order."""

    values: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class RepReport:
    degree: int
    order: int
    class_count: int
    abelian: bool


def close_group(generators, element_bound: int = DEFAULT_ELEMENT_BOUND) -> Rep:
    """BFS closure of the generator images under multiplication.

    Raises NotInvertible unless every generator has determinant +-1, and
    NotFinite when the closure exceeds element_bound.
    """
    gens = tuple(
        g if isinstance(g, IntMatrix) else IntMatrix.from_rows(g) for g in generators
    )
    if not gens:
        raise ValueError("need at least one generator")
    degree = gens[0].rows
    for g in gens:
        if not g.is_square() or g.rows != degree:
            raise NotInvertible("generators must be square of equal degree")
        if det(g) not in (1, -1):
            raise NotInvertible("generator determinant must be +1 or -1")
    identity = IntMatrix.identity(degree)
    elements = [identity]
    seen = {identity}
    frontier = [identity]
    while frontier:
        next_frontier = []
        for e in frontier:
            for g in gens:
                prod = e * g
                if prod not in seen:
                    seen.add(prod)
                    elements.append(prod)
                    next_frontier.append(prod)
                    if len(elements) > element_bound:
                        raise NotFinite(
                            f"closure exceeded element bound {element_bound}"
                        )
        frontier = next_frontier
    return Rep(degree=degree, generators=gens, elements=tuple(elements))


def conjugacy_classes(rep: Rep) -> ConjClasses:
    """Classes ordered by their first-discovered member in BFS element order."""
    index = _index_of(rep)
    assigned = [False] * rep.order
    reps = []
    members = []
    inverses = [rep.inverse(g) for g in rep.elements]
    for i, x in enumerate(rep.elements):
        if assigned[i]:
            continue
        orbit = sorted({index[g * x * ginv] for g, ginv in zip(rep.elements, inverses)})
        for j in orbit:
            assigned[j] = True
        reps.append(i)
        members.append(tuple(orbit))
    assert sum(len(m) for m in members) == rep.order
    assert all(rep.order % len(m) == 0 for m in members)
    return ConjClasses(representatives=tuple(reps), members=tuple(members))


def character_of_rep(rep: Rep, classes: ConjClasses | None = None) -> ClassFunction:
    """Trace per conjugacy class; constancy on each class is asserted."""
    if classes is None:
        classes = conjugacy_classes(rep)
    values = []
    for member_ids in classes.members:
        traces = {rep.elements[i].trace() for i in member_ids}
        assert len(traces) == 1, "trace must be constant on a conjugacy class"
        values.append(traces.pop())
    return ClassFunction(values=tuple(values))


def validate_rep(rep: Rep) -> RepReport:
    classes = conjugacy_classes(rep)
    return RepReport(
        degree=rep.degree,
        order=rep.order,
        class_count=len(classes),
        abelian=is_abelian_image(rep),
    )


def is_abelian_image(rep: Rep) -> bool:
    """True iff the image group is abelian (generator pairs suffice)."""
    gens = rep.generators
    return all(
        gens[i] * gens[j] == gens[j] * gens[i]
        for i in range(len(gens))
        for j in range(i + 1, len(gens))
    )
