"""Point configurations and the negative curves they carry.

A configuration of six points is described either combinatorially, for
distinct plane points (which maximal subsets are collinear, whether all six
lie on a conic), or through its set of nodal roots (classes of (-2)-curves)
when some points are infinitely near.  Either description determines
NEG(X), the finite set of classes of reduced irreducible curves of negative
self-intersection on the blow-up, and NEG(X) drives every computation in
this package.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field

from . import weyl
from .lattice import K, MINUS_K, DivisorClass, E


class ConfigError(ValueError):
    """A point-configuration description violates its invariants."""


# ---------------------------------------------------------------------------
# NEG sets


@dataclass(frozen=True)
class NegSet:
    """The classes of prime divisors of negative self-intersection.

    Members split by self-intersection: nodal classes (square -2), the
    exceptional ones (square -1), and, for distinct points with four or more
    on a line, a few line classes of square <= -3.
    """

    classes: tuple

    _cache: dict = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "classes", tuple(sorted(set(self.classes))))
        for c in self.classes:
            if c.dot(c) >= 0:
                raise ConfigError(f"{c!r} has nonnegative self-intersection")
            if not 0 <= c.degree <= 2:
                raise ConfigError(f"{c!r} has degree outside 0..2")
        for a, b in itertools.combinations(self.classes, 2):
            if a.dot(b) < 0:
                raise ConfigError(f"distinct members {a!r}, {b!r} meet negatively")

    def __hash__(self):
        return hash(self.classes)

    def __iter__(self):
        return iter(self.classes)

    def __len__(self):
        return len(self.classes)

    @property
    def nodal(self) -> tuple:
        return tuple(c for c in self.classes if c.dot(c) == -2)

    @property
    def exceptional(self) -> tuple:
        return tuple(c for c in self.classes if c.dot(c) == -1)

    @property
    def other(self) -> tuple:
        return tuple(c for c in self.classes if c.dot(c) <= -3)


def anticanonical_nef(neg: NegSet) -> bool:
    """True when -K meets every negative curve nonnegatively."""
    return all(MINUS_K.dot(c) >= 0 for c in neg)


def neg_from_nodal(nodal) -> NegSet:
    """NEG(X) from a set of nodal roots.

    An exceptional class is the class of an actual curve exactly when it
    meets every nodal root nonnegatively, so NEG is the nodal set together
    with the surviving exceptional classes.
    """
    nodal = tuple(sorted(set(nodal)))
    for c in nodal:
        if c.dot(c) != -2 or K.dot(c) != 0:
            raise ConfigError(f"{c!r} is not a nodal root")
    for a, b in itertools.combinations(nodal, 2):
        if a.dot(b) < 0:
            raise ConfigError(f"nodal roots {a!r}, {b!r} meet negatively")
    keep = [e for e in weyl.exceptional_classes()
            if all(e.dot(c) >= 0 for c in nodal)]
    return NegSet(nodal + tuple(keep))


# ---------------------------------------------------------------------------
# Distinct points


@dataclass(frozen=True)
class DistinctSpec:
    """Six distinct plane points, described by their collinearity pattern.

    ``collinear`` lists the maximal collinear subsets of {1..6} of size at
    least 3; ``six_on_conic`` records whether an irreducible conic passes
    through all six (which forces ``collinear`` to be empty).
    """

    collinear: tuple = ()
    six_on_conic: bool = False

    def __post_init__(self):
        sets = tuple(frozenset(s) for s in self.collinear)
        object.__setattr__(self, "collinear", tuple(sorted(sets, key=sorted)))
        for s in sets:
            if not s <= frozenset(range(1, 7)):
                raise ConfigError(f"collinear subset {sorted(s)} has indices outside 1..6")
            if len(s) < 3:
                raise ConfigError(f"collinear subset {sorted(s)} has fewer than 3 points")
            if len(s) >= 5:
                raise ConfigError(f"collinear subset {sorted(s)} has 5 or more points; "
                                  "not representable here")
        for a, b in itertools.combinations(sets, 2):
            if len(a & b) > 1:
                raise ConfigError(
                    f"two collinear subsets {sorted(a)}, {sorted(b)} share 2 points")
        if self.six_on_conic and sets:
            raise ConfigError("six_on_conic requires an empty collinear list "
                              "(an irreducible conic has no 3 collinear points)")


def neg_from_distinct(spec: DistinctSpec) -> NegSet:
    """NEG(X) for six distinct points with the given collinearity pattern.

    Members: the six basis classes Ei; one line class E0 - sum(Ei, i in S)
    per maximal collinear subset S; E0-Ei-Ej for every pair on no listed
    line; and conic classes 2E0 - sum over T for 5-subsets T containing no
    collinear triple, or the full 2E0-E1-...-E6 when all six are conconic.
    """
    classes = list(E[1:])
    covered_pairs = set()
    for s in spec.collinear:
        v = [1] + [0] * 6
        for i in s:
            v[i] = 1
        classes.append(DivisorClass(v))
        covered_pairs.update(frozenset(p) for p in itertools.combinations(sorted(s), 2))
    for i, j in itertools.combinations(range(1, 7), 2):
        if frozenset((i, j)) not in covered_pairs:
            v = [1] + [0] * 6
            v[i] = 1
            v[j] = 1
            classes.append(DivisorClass(v))
    if spec.six_on_conic:
        classes.append(DivisorClass((2, 1, 1, 1, 1, 1, 1)))
    else:
        for t in itertools.combinations(range(1, 7), 5):
            ts = frozenset(t)
            if any(len(s & ts) >= 3 for s in spec.collinear):
                continue
            v = [2] + [0] * 6
            for i in t:
                v[i] = 1
            classes.append(DivisorClass(v))
    return NegSet(tuple(classes))


# ---------------------------------------------------------------------------
# The twenty nodal-root configurations with nef anticanonical class


def _v(i: int, j: int) -> DivisorClass:
    return E[i] - E[j]


def _line(i: int, j: int, k: int) -> DivisorClass:
    v = [1] + [0] * 6
    for t in (i, j, k):
        v[t] = 1
    return DivisorClass(v)


_CONIC6 = DivisorClass((2, 1, 1, 1, 1, 1, 1))

_CATALOG = {
    "A1": (_CONIC6,),
    "2A1": (_CONIC6, _v(1, 2)),
    "A2": (_line(1, 2, 3), _line(4, 5, 6)),
    "3A1": (_CONIC6, _v(1, 2), _v(3, 4)),
    "A1A2": (_CONIC6, _v(1, 2), _v(2, 3)),
    "A3": (_line(1, 2, 3), _line(1, 4, 5), _v(1, 6)),
    "4A1": (_CONIC6, _v(1, 2), _v(3, 4), _v(5, 6)),
    "2A1A2": (_CONIC6, _v(1, 2), _v(3, 4), _v(4, 5)),
    "A1A3": (_CONIC6, _v(1, 2), _v(2, 3), _v(3, 4)),
    "2A2": (_line(1, 2, 3), _line(4, 5, 6), _v(1, 2), _v(2, 3)),
    "A4": (_line(1, 2, 3), _line(1, 4, 5), _v(1, 2), _v(2, 6)),
    "D4": (_line(1, 3, 5), _v(1, 2), _v(3, 4), _v(5, 6)),
    "A12A2": (_CONIC6, _v(1, 2), _v(2, 3), _v(4, 5), _v(5, 6)),
    "2A1A3": (_CONIC6, _v(1, 2), _v(3, 4), _v(4, 5), _v(5, 6)),
    "A1A4": (_CONIC6, _v(1, 2), _v(2, 3), _v(3, 4), _v(4, 5)),
    "A5": (_line(1, 2, 3), _line(1, 4, 5), _v(1, 2), _v(2, 3), _v(3, 6)),
    "D5": (_line(1, 3, 4), _v(1, 2), _v(3, 4), _v(4, 5), _v(5, 6)),
    "3A2": (_line(1, 2, 3), _line(4, 5, 6), _v(1, 2), _v(2, 3), _v(4, 5), _v(5, 6)),
    "A1A5": (_CONIC6, _v(1, 2), _v(2, 3), _v(3, 4), _v(4, 5), _v(5, 6)),
    "E6": (_line(1, 2, 3), _v(1, 2), _v(2, 3), _v(3, 4), _v(4, 5), _v(5, 6)),
}


def dynkin_catalog() -> dict:
    """Canonical nodal-root sets for the 20 realizable diagram types."""
    return dict(_CATALOG)


def dynkin_classify(nodal) -> str:
    """Recognize a nodal-root set as a disjoint union of A/D/E diagrams.

    Builds the intersection graph (edges where two roots meet once), splits
    into connected components, and names each by its shape: paths are A_n,
    a single degree-3 vertex with leg lengths (1,1,n-3) is D_n, legs
    (1,2,2) on six vertices is E6.  The multiset name sorts components as
    A1 < A2 < ... < D4 < D5 < E6 with count prefixes, e.g. "2A1A3".
    """
    nodes = tuple(sorted(set(nodal)))
    for c in nodes:
        if c.dot(c) != -2:
            raise ConfigError(f"{c!r} is not a nodal root (square != -2)")
    n = len(nodes)
    adj = {i: set() for i in range(n)}
    for i in range(n):
        for j in range(i + 1, n):
            p = nodes[i].dot(nodes[j])
            if p not in (0, 1):
                raise ConfigError(
                    f"roots {nodes[i]!r}, {nodes[j]!r} pair to {p}, not 0 or 1")
            if p == 1:
                adj[i].add(j)
                adj[j].add(i)
    comps = []
    seen = set()
    for i in range(n):
        if i in seen:
            continue
        comp = set()
        stack = [i]
        seen.add(i)
        while stack:
            x = stack.pop()
            comp.add(x)
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        comps.append(comp)
    names = []
    for comp in comps:
        m = len(comp)
        degs = sorted(len(adj[x] & comp) for x in comp)
        if m == 1:
            names.append(("A", 1))
            continue
        if degs[-1] > 3 or degs.count(3) > 1 or degs.count(0) > 0:
            raise ConfigError("component is not an A/D/E diagram")
        if degs[-1] <= 2:
            if degs.count(1) != 2:
                raise ConfigError("component contains a cycle")
            names.append(("A", m))
            continue
        branch = next(x for x in comp if len(adj[x] & comp) == 3)
        legs = []
        for s in adj[branch] & comp:
            length, prev, cur = 1, branch, s
            while True:
                nxt = (adj[cur] & comp) - {prev}
                if not nxt:
                    break
                if len(nxt) > 1:
                    raise ConfigError("component is not an A/D/E diagram")
                prev, cur = cur, nxt.pop()
                length += 1
            legs.append(length)
        legs.sort()
        if legs == [1, 1, m - 3]:
            names.append(("D", m))
        elif legs == [1, 2, 2] and m == 6:
            names.append(("E", 6))
        else:
            raise ConfigError(f"component with legs {legs} is not an A/D/E diagram")
    names.sort()
    parts = []
    for key, grp in itertools.groupby(names):
        cnt = len(list(grp))
        parts.append((str(cnt) if cnt > 1 else "") + f"{key[0]}{key[1]}")
    return "".join(parts)


def _sets_weyl_equivalent(a, b, cap: int = 200_000) -> bool:
    """Whether two root sets lie in one orbit of the simultaneous W-action."""
    start = tuple(sorted(a))
    goal = tuple(sorted(b))
    if start == goal:
        return True
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for state in frontier:
            for i in range(6):
                new = tuple(sorted(weyl.reflect(c, i) for c in state))
                if new == goal:
                    return True
                if new not in seen:
                    seen.add(new)
                    nxt.append(new)
        if len(seen) > cap:
            raise ConfigError("root-set orbit search exceeded its cap")
        frontier = nxt
    return False


def match_catalog_type(nodal) -> str:
    """Classify an explicit nodal-root list and confirm it is realizable.

    The diagram name must appear in the catalog and the list must be
    equivalent to the catalog's canonical set under the reflection group;
    anything else is rejected rather than guessed.
    """
    name = dynkin_classify(nodal)
    if name not in _CATALOG:
        raise ConfigError(f"diagram type {name} is not realizable by six points")
    if not _sets_weyl_equivalent(nodal, _CATALOG[name]):
        raise ConfigError(
            f"nodal set classifies as {name} but is not equivalent to its "
            "canonical configuration")
    return name


# ---------------------------------------------------------------------------
# Top-level configuration objects


@dataclass(frozen=True)
class PointConfiguration:
    """A validated configuration plus its computed NEG set."""

    kind: str  # "distinct" | "dynkin" | "nodal"
    neg: NegSet
    distinct: DistinctSpec | None = None
    type_name: str | None = None

    @classmethod
    def from_distinct(cls, spec: DistinctSpec) -> "PointConfiguration":
        return cls(kind="distinct", neg=neg_from_distinct(spec), distinct=spec)

    @classmethod
    def from_dynkin(cls, type_name: str) -> "PointConfiguration":
        if type_name not in _CATALOG:
            raise ConfigError(
                f"unknown type {type_name!r}; expected one of "
                f"{', '.join(sorted(_CATALOG))}")
        return cls(kind="dynkin", neg=neg_from_nodal(_CATALOG[type_name]),
                   type_name=type_name)

    @classmethod
    def from_nodal(cls, roots) -> "PointConfiguration":
        roots = tuple(roots)
        name = match_catalog_type(roots) if roots else None
        return cls(kind="nodal", neg=neg_from_nodal(roots), type_name=name)

    @classmethod
    def from_dict(cls, data: dict) -> "PointConfiguration":
        kind = data.get("kind")
        if kind == "distinct":
            spec = DistinctSpec(
                collinear=tuple(tuple(s) for s in data.get("collinear", ())),
                six_on_conic=bool(data.get("six_on_conic", False)))
            return cls.from_distinct(spec)
        if kind == "dynkin":
            return cls.from_dynkin(data["type"])
        if kind == "nodal":
            roots = tuple(DivisorClass.from_display_row(r) for r in data["roots"])
            return cls.from_nodal(roots)
        raise ConfigError(f"unknown configuration kind {kind!r}")

    @classmethod
    def load(cls, path) -> "PointConfiguration":
        with open(path, "r", encoding="utf-8") as fh:
            try:
                data = json.load(fh)
            except json.JSONDecodeError as exc:
                raise ConfigError(f"config file is not valid JSON: {exc}") from exc
        return cls.from_dict(data)


def general_position() -> PointConfiguration:
    """Six points with no three collinear and no conic through all six."""
    return PointConfiguration.from_distinct(DistinctSpec())
