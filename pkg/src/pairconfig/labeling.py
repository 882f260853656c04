"""Label pairs, configurations and their verification.

A configuration assigns every vertex a two-element subset of ``{1..5}`` such
that the closed neighborhood of every vertex sees all five labels.  Partial
assignments are plain dicts that simply omit unassigned vertices.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Hashable, Iterable, Mapping

from .graph import Graph

LABELS = (1, 2, 3, 4, 5)
FULL = frozenset(LABELS)


class LabelingError(ValueError):
    pass


class LabelPair(tuple):
    """Unordered pair of distinct labels from ``1..5``, stored smaller first."""

    __slots__ = ()

    def __new__(cls, a: int, b: int) -> "LabelPair":
        if a == b or not (1 <= a <= 5 and 1 <= b <= 5):
            raise LabelingError(f"invalid label pair {{{a}, {b}}}")
        return super().__new__(cls, (a, b) if a < b else (b, a))

    def __repr__(self) -> str:
        return f"{{{self[0]},{self[1]}}}"

    @property
    def mask(self) -> int:
        return (1 << (self[0] - 1)) | (1 << (self[1] - 1))

    @classmethod
    def of(cls, labels: Iterable[int]) -> "LabelPair":
        items = sorted(set(labels))
        if len(items) != 2:
            raise LabelingError(f"a label pair needs exactly two labels, got {items}")
        return cls(*items)


# lexicographic order; the oracle and tests depend on it
ALL_PAIRS: tuple[LabelPair, ...] = tuple(LabelPair(a, b) for a, b in combinations(LABELS, 2))
PAIR_INDEX = {p: i for i, p in enumerate(ALL_PAIRS)}

Configuration = dict[int, LabelPair]


def pair(a: int, b: int) -> LabelPair:
    return LabelPair(a, b)


def as_config(raw: Mapping[int, Iterable[int]]) -> Configuration:
    """Coerce ``{v: (a, b)}`` style input into a configuration."""
    return {int(v): p if isinstance(p, LabelPair) else LabelPair.of(p) for v, p in raw.items()}


def seen_labels(g: Graph, f: Mapping[int, LabelPair], v: int) -> set[int]:
    """Labels present on the assigned part of the closed neighborhood of ``v``."""
    out: set[int] = set()
    for u in g.closed_neighborhood(v):
        p = f.get(u)
        if p is not None:
            out.update(p)
    return out


def missing_colors(g: Graph, f: Mapping[int, LabelPair], v: int) -> set[int]:
    return set(FULL - seen_labels(g, f, v))


def is_satisfied(g: Graph, f: Mapping[int, LabelPair], v: int) -> bool:
    for u in g.closed_neighborhood(v):
        if u not in f:
            raise LabelingError(f"vertex {u} in N[{v}] is unassigned")
    return len(seen_labels(g, f, v)) == 5


def verify(g: Graph, f: Mapping[int, LabelPair]) -> list[int]:
    """Return the unsatisfied vertices; an empty list certifies a configuration."""
    unassigned = [v for v in g.vertices() if v not in f]
    if unassigned:
        raise LabelingError(f"assignment is partial; unassigned vertices {unassigned[:10]}")
    return [v for v in g.vertices() if len(seen_labels(g, f, v)) < 5]


def is_configuration(g: Graph, f: Mapping[int, LabelPair]) -> bool:
    return all(v in f for v in g.vertices()) and not verify(g, f)


def check_permutation(sigma: Mapping[int, int]) -> None:
    if sorted(sigma) != list(LABELS) or sorted(sigma.values()) != list(LABELS):
        raise LabelingError(f"not a permutation of 1..5: {dict(sigma)}")


def permute_labels(f: Mapping[int, LabelPair], sigma: Mapping[int, int]) -> Configuration:
    """Apply the label bijection ``sigma`` pointwise."""
    check_permutation(sigma)
    return {v: LabelPair(sigma[p[0]], sigma[p[1]]) for v, p in f.items()}


def all_permutations() -> list[dict[int, int]]:
    return [dict(zip(LABELS, img)) for img in permutations(LABELS)]


def canonical_form(f: Mapping[int, LabelPair]) -> tuple[tuple[int, int, int], ...]:
    """Lexicographically least encoding over all 120 label permutations."""
    verts = sorted(f)
    best = None
    for sigma in all_permutations():
        enc = tuple((v, *sorted((sigma[f[v][0]], sigma[f[v][1]]))) for v in verts)
        if best is None or enc < best:
            best = enc
    return best


def equal_up_to_permutation(f: Mapping[int, LabelPair], h: Mapping[int, LabelPair]) -> bool:
    return sorted(f) == sorted(h) and canonical_form(f) == canonical_form(h)


def permutation_mapping(constraints: Iterable[tuple[Iterable[int], Iterable[int]]]) -> dict[int, int] | None:
    """Least permutation ``sigma`` with ``sigma(A) ⊆ B`` for every ``(A, B)``.

    Candidates are scanned in lexicographic order of the image tuple, so the
    result is deterministic.
    """
    cons = [(frozenset(a), frozenset(b)) for a, b in constraints]
    for sigma in all_permutations():
        if all(all(sigma[x] in b for x in a) for a, b in cons):
            return sigma
    return None


# ---------------------------------------------------------------------------
# r-configurations


@dataclass
class RConfiguration:
    """Assignment of ``r``-element label sets drawn from ``universe``."""

    r: int
    assignment: dict[int, frozenset[Hashable]]
    universe: frozenset[Hashable]

    def __post_init__(self) -> None:
        if self.r < 1:
            raise LabelingError("r must be positive")
        for v, labels in self.assignment.items():
            if len(labels) != self.r:
                raise LabelingError(f"vertex {v} carries {len(labels)} labels, expected {self.r}")
            if not labels <= self.universe:
                raise LabelingError(f"vertex {v} uses labels outside the universe")

    def used_labels(self) -> frozenset[Hashable]:
        out: set[Hashable] = set()
        for labels in self.assignment.values():
            out |= labels
        return frozenset(out)


def r_size(f: RConfiguration) -> int:
    return len(f.used_labels())


def verify_r_configuration(g: Graph, f: RConfiguration) -> bool:
    """Every used label must appear in every closed neighborhood."""
    if any(v not in f.assignment for v in g.vertices()):
        raise LabelingError("r-configuration must be total")
    for v, labels in f.assignment.items():
        if len(labels) != f.r:
            raise LabelingError(f"vertex {v} carries {len(labels)} labels, expected {f.r}")
    used = f.used_labels()
    for v in g.vertices():
        seen: set[Hashable] = set()
        for u in g.closed_neighborhood(v):
            seen |= f.assignment[u]
        if not used <= seen:
            return False
    return True


# ---------------------------------------------------------------------------
# Serialization


def format_config(f: Mapping[int, LabelPair]) -> str:
    return "".join(f"{v}: {p[0]} {p[1]}\n" for v, p in sorted(f.items()))


def config_to_json(f: Mapping[int, LabelPair]) -> dict[str, list[int]]:
    return {str(v): [p[0], p[1]] for v, p in sorted(f.items())}


def parse_config(text: str) -> Configuration:
    """Parse either ``v: a b`` lines or a JSON object ``{"v": [a, b]}``."""
    stripped = text.strip()
    if stripped.startswith("{"):
        try:
            raw = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise LabelingError(f"line {exc.lineno}: invalid JSON configuration") from None
        if "labels" in raw and isinstance(raw["labels"], dict):
            raw = raw["labels"]
        try:
            return {int(v): LabelPair.of(p) for v, p in raw.items()}
        except (TypeError, ValueError) as exc:
            raise LabelingError(f"invalid configuration entry: {exc}") from None
    out: Configuration = {}
    for no, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        head, sep, tail = line.partition(":")
        try:
            if not sep:
                raise ValueError
            v = int(head)
            a, b = (int(t) for t in tail.split())
            out[v] = LabelPair(a, b)
        except (ValueError, LabelingError):
            raise LabelingError(f"line {no}: expected 'v: a b' with distinct labels in 1..5") from None
    return out
