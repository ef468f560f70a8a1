"""Maximal-rank certificates for the degree-raising multiplication maps.

For a nef class F the multiplication map from (sections of F) x (linear
forms) to sections of F+E0 is the object of study.  Four section counts
give two-sided bounds on its kernel and cokernel:

    q  = h0(F - Ej),        q* = h1(F - Ej),
    l  = h0(F - (E0-Ej)),   l* = h1(F - (E0-Ej)),

where j is a valid reindexing (largest multiplicity, least index on ties):
the kernel dimension lies in [l, l+q], and when h1(F) = 0 the cokernel is
at most q* + l*.  So q* + l* = 0 certifies surjectivity and q = l = 0
certifies injectivity.

Classes where neither fires are organised into a chain of levels: the
nef-cone generators that fail the criteria (level 1), then sums of a
failing class with a level-1 class that fail again, and so on.  Once the
levels repeat along rays F + i*C, every ray tail is certified in closed
form, either by induction along a rational curve (surjectivity persists)
or by a pairing argument forcing q = l = 0 forever (injectivity persists).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum

from . import weyl
from .config import NegSet, anticanonical_nef, neg_from_nodal
from .cones import GeneratorSet, gamma, h0, is_nef, nef_generators, reduce
from .lattice import E0, MINUS_K, ZERO, DivisorClass, E, arithmetic_genus, chi

_CONIC6 = DivisorClass((2, 1, 1, 1, 1, 1, 1))


class Status(str, Enum):
    SURJECTIVE = "surjective"
    INJECTIVE = "injective"
    MAXIMAL_RANK = "maximal-rank"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class Certificate:
    status: Status
    reason: str


@dataclass(frozen=True)
class MuBounds:
    """Kernel/cokernel bounds for the multiplication map out of one class."""

    q: int
    l: int
    q_star: int
    l_star: int
    h: int
    h_next: int
    index: int

    @property
    def expected_ker(self) -> int:
        return max(0, 3 * self.h - self.h_next)

    @property
    def expected_cok(self) -> int:
        return max(0, self.h_next - 3 * self.h)


def plane_point_indices(neg: NegSet) -> tuple:
    """Indices j whose point sits in the plane itself.

    A point is only infinitely near another when some difference Ei - Ej
    is effective; those j are unusable as the auxiliary index in the
    kernel/cokernel machinery.
    """
    cache = neg._cache.get("plane_idx")
    if cache is not None:
        return cache
    out = []
    for j in range(1, 7):
        if all(not reduce(E[i] - E[j], neg).effective
               for i in range(1, 7) if i != j):
            out.append(j)
    if not out:
        raise ValueError("no usable point index; malformed negative-curve set")
    got = tuple(out)
    neg._cache["plane_idx"] = got
    return got


def pivot_index(f: DivisorClass, neg: NegSet) -> int:
    """Least usable index in 1..6 carrying the largest multiplicity of f.

    Only points lying in the plane itself (not infinitely near another)
    may serve as the auxiliary index; for a nef class the overall largest
    multiplicity always occurs at such a point.
    """
    usable = plane_point_indices(neg)
    mults = f.multiplicities
    best = max(mults[j - 1] for j in usable)
    return next(j for j in usable if mults[j - 1] == best)


def ql_bounds(f: DivisorClass, neg: NegSet, e0_index_rule: bool = True) -> MuBounds:
    """The four section counts bounding kernel and cokernel, plus h-values.

    ``e0_index_rule`` selects the reindexing above; with it off the first
    basis class is always used.
    """
    cache = neg._cache.setdefault("bounds", {})
    key = (f, e0_index_rule)
    got = cache.get(key)
    if got is not None:
        return got
    h = h0(f, neg)
    if h == 0:
        raise ValueError(f"{f!r} is not effective")
    j = pivot_index(f, neg) if e0_index_rule else 1
    fq = f - E[j]
    fl = f - (E0 - E[j])
    q = h0(fq, neg)
    l = h0(fl, neg)
    q_star = q - chi(fq)
    l_star = l - chi(fl)
    if q_star < 0 or l_star < 0:
        raise ArithmeticError(f"negative h1 in bounds for {f!r}")
    got = MuBounds(q=q, l=l, q_star=q_star, l_star=l_star, h=h,
                   h_next=h0(f + E0, neg), index=j)
    cache[key] = got
    return got


def deficient(f: DivisorClass, neg: NegSet) -> bool:
    """True when the bounds fail to make f a usable good summand.

    A nef class with q > 0, l > 0 and q* = l* = 0 forces surjectivity for
    everything it is added to; the chain levels collect the classes where
    one of those four conditions fails.
    """
    b = ql_bounds(f, neg)
    return b.q == 0 or b.l == 0 or b.q_star > 0 or b.l_star > 0


def on_conic(neg: NegSet) -> bool:
    """Whether 2E0-E1-...-E6 is effective (all six points on some conic)."""
    cache = neg._cache.get("on_conic")
    if cache is None:
        cache = h0(_CONIC6, neg) > 0
        neg._cache["on_conic"] = cache
    return cache


# ---------------------------------------------------------------------------
# Rational-curve step


def _pairing_floor(c: DivisorClass, neg: NegSet) -> int:
    """min over usable j of max(C.Ej, C.(E0-Ej))."""
    return min(max(c.dot(E[j]), c.dot(E0 - E[j]))
               for j in plane_point_indices(neg))


def _full_restriction(c: DivisorClass, neg: NegSet) -> bool:
    """Lines restrict to a complete series on c (degree at most 2 only)."""
    e = c.degree
    if e > 2:
        return False
    return h0(E0 - c, neg) == 2 - e


def step_allows(c: DivisorClass, target: DivisorClass, neg: NegSet) -> bool:
    """Surjectivity transfers from target-c to target across the curve c.

    c must be the class of an irreducible rational curve (callers pick c
    from NEG or from nef genus-0 classes).  For c of degree <= 2 the
    restriction of the lines to c is a complete series, so nonnegative
    pairing with the target suffices; for higher degree the stronger
    pairing bound together with c^2 >= 0 is required, for some usable
    auxiliary index.
    """
    if arithmetic_genus(c) != 0:
        return False
    if c.degree <= 2:
        return _full_restriction(c, neg) and target.dot(c) >= 0
    return c.dot(c) >= 0 and target.dot(c) >= _pairing_floor(c, neg)


def _rational_curve_candidates(neg: NegSet, gens: GeneratorSet) -> tuple:
    """Classes of irreducible rational curves usable as induction steps.

    Negative curves are irreducible by definition of NEG; nef genus-0
    classes among the generators and the two marking orbits are classes of
    irreducible rational curves (base point free, with irreducible general
    member).
    """
    cache = neg._cache.get("rc_cands")
    if cache is not None:
        return cache
    cands = list(neg.classes)
    pool = set(gens.pared) | weyl.orbit(E0).elements | weyl.orbit(E0 - E[1]).elements
    extra = [c for c in sorted(pool)
             if c != ZERO and is_nef(c, neg) and arithmetic_genus(c) == 0]
    cands.extend(extra)
    out = tuple(dict.fromkeys(cands))
    neg._cache["rc_cands"] = out
    return out


# ---------------------------------------------------------------------------
# certify


def certify(f: DivisorClass, neg: NegSet, gens: GeneratorSet | None = None,
            _depth: int = 0) -> Certificate:
    """Try to certify maximal rank for the multiplication map out of f.

    Search order: conic-supported configurations are always surjective;
    then the q*/l* and q/l criteria; then surjectivity through a good nef
    summand; then induction along a rational curve whose complement
    certifies at the previous depth; then injectivity transfer across a
    prime curve the class is orthogonal to.  Anything else is
    inconclusive.
    """
    if not is_nef(f, neg):
        raise ValueError(f"{f!r} is not nef on this configuration")
    cache = neg._cache.setdefault("cert", {})
    got = cache.get(f)
    if got is not None:
        return got
    cert = _certify_uncached(f, neg, gens, _depth)
    if cert.status is not Status.INCONCLUSIVE or _depth == 0:
        cache[f] = cert
    return cert


def surjective_certified(f: DivisorClass, neg: NegSet,
                         gens: GeneratorSet | None = None,
                         _depth: int = 0) -> bool:
    """Certified surjective, directly or as bijective via the count.

    An injective map is onto as soon as three times the source section
    count reaches the target's.
    """
    cert = certify(f, neg, gens, _depth)
    if cert.status is Status.SURJECTIVE:
        return True
    if cert.status in (Status.INJECTIVE, Status.MAXIMAL_RANK):
        b = ql_bounds(f, neg)
        return b.h_next <= 3 * b.h
    return False


def injective_certified(f: DivisorClass, neg: NegSet,
                        gens: GeneratorSet | None = None,
                        _depth: int = 0) -> bool:
    """Certified injective, directly or as bijective via the count."""
    cert = certify(f, neg, gens, _depth)
    if cert.status in (Status.INJECTIVE, Status.MAXIMAL_RANK):
        return True
    if cert.status is Status.SURJECTIVE:
        b = ql_bounds(f, neg)
        return b.h_next >= 3 * b.h
    return False


def _certify_uncached(f, neg, gens, _depth) -> Certificate:
    if on_conic(neg):
        return Certificate(Status.SURJECTIVE, "conic-support")
    b = ql_bounds(f, neg)
    if b.q_star + b.l_star == 0:
        return Certificate(Status.SURJECTIVE, "qstar+lstar=0")
    if b.q == 0 and b.l == 0:
        return Certificate(Status.INJECTIVE, "q=l=0")
    if gens is None and anticanonical_nef(neg):
        gens = nef_generators(neg)
    if gens is None:
        return Certificate(Status.INCONCLUSIVE, "no generator set available")
    for p in gens.pared:
        g = f - p
        if g == ZERO or g.degree < 0 or not is_nef(g, neg):
            continue
        bp = ql_bounds(p, neg)
        if bp.q > 0 and bp.l > 0 and bp.q_star + bp.l_star == 0:
            return Certificate(
                Status.SURJECTIVE,
                f"good-part-sum:{' '.join(map(str, p.display_row()))}")
    if _depth < 1:
        for c in _rational_curve_candidates(neg, gens):
            fp = f - c
            if fp.degree < 0 or not is_nef(fp, neg):
                continue
            if not step_allows(c, f, neg):
                continue
            if surjective_certified(fp, neg, gens, _depth=_depth + 1):
                return Certificate(
                    Status.SURJECTIVE,
                    f"rational-curve-step:{' '.join(map(str, c.display_row()))}")
        cert = _kernel_transfer(f, neg, gens, _depth)
        if cert is not None:
            return cert
    return Certificate(Status.INCONCLUSIVE, "no criterion applied")


def _kernel_transfer(f, neg, gens, _depth):
    """Injectivity across a prime curve the class does not meet.

    Restriction to a prime curve c with f.c = 0 is left exact on sections;
    when no linear form vanishes on c the forms stay independent on it, so
    the restricted multiplication is injective in degree zero and any
    kernel element comes from f - c.  Stripping the fixed part of f - c
    preserves kernels, so injectivity of the residual nef part is enough.
    """
    for c in _rational_curve_candidates(neg, gens):
        if f.dot(c) != 0 or h0(E0 - c, neg) != 0:
            continue
        red = reduce(f - c, neg)
        if not red.effective:
            return Certificate(
                Status.INJECTIVE,
                f"kernel-transfer:{' '.join(map(str, c.display_row()))} "
                "(complement has no sections)")
        if injective_certified(red.nef_part, neg, gens, _depth=_depth + 1):
            return Certificate(
                Status.INJECTIVE,
                f"kernel-transfer:{' '.join(map(str, c.display_row()))}")
    return None


# ---------------------------------------------------------------------------
# Chain of deficient sums


@dataclass(frozen=True)
class SChain:
    """Levels of deficient sums: level i holds sums of i cone generators."""

    levels: tuple  # levels[i-1] = level i, each a sorted tuple
    gamma: tuple
    depth: int

    def level(self, i: int) -> tuple:
        return self.levels[i - 1]


def s_chain(neg: NegSet, depth: int = 6, gens: GeneratorSet | None = None) -> SChain:
    """Build the deficiency levels up to the given depth."""
    if not anticanonical_nef(neg):
        raise ValueError("chain construction requires a nef anticanonical class")
    if gens is None:
        gens = nef_generators(neg)
    gam = gamma(neg, gens)
    s1 = tuple(f for f in gam if deficient(f, neg))
    levels = [s1]
    for _ in range(2, depth + 1):
        prev = levels[-1]
        nxt = set()
        for a in prev:
            for b in s1:
                s = a + b
                if s not in nxt and deficient(s, neg):
                    nxt.add(s)
        levels.append(tuple(sorted(nxt)))
    return SChain(levels=tuple(levels), gamma=gam, depth=depth)


# ---------------------------------------------------------------------------
# Tail certificates along rays


@dataclass(frozen=True)
class TailCertificate:
    """Closed-form certificate for all F + i*C with i >= start."""

    base: DivisorClass
    step: DivisorClass
    kind: str  # "surjective-induction" | "injective-bound"
    start: int
    detail: str


def _stable_pivot(base: DivisorClass, step: DivisorClass, neg: NegSet):
    """Eventual pivot index of base + i*step and the offset where it locks in.

    Only usable indices compete (see :func:`plane_point_indices`).  Returns
    (index, i_stab) with the index the pivot for every i >= i_stab, or None
    when no usable index stays maximal.
    """
    usable = [j - 1 for j in plane_point_indices(neg)]
    bm = base.multiplicities
    sm = step.multiplicities
    a = max(usable, key=lambda b: (sm[b], bm[b], -b))
    i_stab = 1
    for b in usable:
        if b == a:
            continue
        strict = b < a  # lower indices must be beaten strictly
        if sm[a] == sm[b]:
            ok = bm[a] > bm[b] if strict else bm[a] >= bm[b]
            if not ok:
                return None
            continue
        if sm[a] < sm[b]:
            return None
        gap = bm[b] - bm[a]
        d = sm[a] - sm[b]
        need = gap // d + 1 if strict else -((-gap) // d)
        i_stab = max(i_stab, need)
    return a + 1, i_stab


def _injective_tail(base, step, neg, gens, computed: int):
    """Witness that q = l = 0 holds along the whole ray beyond the start.

    A nef witness W with (base + i*step - D).W < 0 proves the shifted class
    ineffective; with step.W <= 0 the pairing only decreases along the ray,
    so one check at the start degree covers every later one.
    """
    sp = _stable_pivot(base, step, neg)
    if sp is None:
        return None
    j, i_stab = sp
    start = max(1, i_stab)
    if start > computed + 1:
        return None  # members below start would be uncovered
    witnesses = []
    for shift in (E[j], E0 - E[j]):
        found = None
        for w in (step,) + gens.pared:
            if step.dot(w) <= 0 and (base + start * step - shift).dot(w) < 0:
                found = w
                break
        if found is None:
            return None
        witnesses.append(found)
    detail = ("q-witness " + " ".join(map(str, witnesses[0].display_row()))
              + "; l-witness " + " ".join(map(str, witnesses[1].display_row()))
              + f"; pivot {j}")
    return TailCertificate(base=base, step=step, kind="injective-bound",
                           start=start, detail=detail)


def _h1_persistence_tail(base, step, neg, gens, computed: int):
    """Vanishing of the starred counts propagates along a prime rational step.

    Restricting to the step curve shows h1 cannot reappear once the twisted
    classes meet the step in degree >= -1 on it; both pairings are
    nondecreasing in the ray parameter, so checking the first needed member
    covers the whole tail, and every tail member is then surjective.
    """
    if arithmetic_genus(step) != 0:
        return None
    sp = _stable_pivot(base, step, neg)
    if sp is None:
        return None
    j, i_stab = sp
    for i0 in range(max(1, i_stab), computed + 1):
        member = base + i0 * step
        try:
            b_q = h0(member - E[j], neg) - chi(member - E[j])
            b_l = h0(member - (E0 - E[j]), neg) - chi(member - (E0 - E[j]))
        except ArithmeticError:
            return None
        if b_q != 0 or b_l != 0:
            continue
        nxt = base + (i0 + 1) * step
        if (nxt - E[j]).dot(step) >= -1 and (nxt - (E0 - E[j])).dot(step) >= -1:
            return TailCertificate(
                base=base, step=step, kind="surjective-h1-persistence",
                start=i0,
                detail=f"starred counts vanish from offset {i0}, pivot {j}")
    return None


def _surjective_tail(base, step, neg, gens, computed: int):
    """Induction along the step curve once some ray member is surjective.

    Needs the step pairing condition from the base level onwards; the
    pairing (base + i*step).step is nondecreasing in i because the step is
    nef, so checking it at the first induction target suffices.
    """
    if arithmetic_genus(step) != 0:
        return None
    for i0 in range(1, computed + 1):
        member = base + i0 * step
        if not surjective_certified(member, neg, gens):
            continue
        target = base + (i0 + 1) * step
        if step_allows(step, target, neg):
            return TailCertificate(
                base=base, step=step, kind="surjective-induction", start=i0,
                detail=f"surjective at offset {i0}, induction step "
                       + " ".join(map(str, step.display_row())))
    return None


# ---------------------------------------------------------------------------
# Stabilization


@dataclass(frozen=True)
class StabilizationReport:
    """Outcome of the level-stabilization check plus all certificates."""

    ok: bool
    j: int | None
    k: int | None
    witness: dict  # level-j class -> step class
    certificates: dict  # class -> Certificate (all computed-level members)
    tails: tuple  # TailCertificate per ray
    inconclusive: tuple
    notes: tuple


def _find_stabilization(chain: SChain, j_max: int = 3, k_max: int = 2):
    """Smallest (j, k) whose ray description reproduces the computed levels.

    Requires: every level-j class F owns a unique level-1 class C with
    F + k*C in level j+k; F + i*C stays in level j+i for i <= k; the rays
    reproduce levels j+1 .. j+k exactly and also predict level j+k+1.
    """
    s1 = chain.level(1)
    level_sets = [set(lv) for lv in chain.levels]

    def level_set(i):
        return level_sets[i - 1]

    for j in range(1, j_max + 1):
        for k in range(1, k_max + 1):
            if j + k + 1 > chain.depth:
                continue
            witness = {}
            ok = True
            for f in chain.level(j):
                kc = {c for c in s1 if f + k * c in level_set(j + k)}
                if len(kc) != 1:
                    ok = False
                    break
                c = kc.pop()
                if any(f + i * c not in level_set(j + i) for i in range(1, k + 1)):
                    ok = False
                    break
                witness[f] = c
            if not ok:
                continue
            for i in range(1, k + 2):
                image = {f + i * c for f, c in witness.items()}
                if image != level_set(j + i):
                    ok = False
                    break
            if ok:
                return j, k, witness
    return None


def verify_stabilization(chain: SChain, neg: NegSet,
                         gens: GeneratorSet | None = None) -> StabilizationReport:
    """Certify maximal rank for every member of every level, to all depths.

    Every computed-level member is certified directly.  When the levels are
    nonempty a stabilization pair (j, k) is located; beyond the computed
    depth each ray F + i*C_F is certified in closed form.  The report is
    ``ok`` only if nothing stays inconclusive.
    """
    if gens is None:
        gens = nef_generators(neg)
    notes = []
    certificates: dict = {}
    inconclusive = []
    for f in gens.pared:
        cert = certify(f, neg, gens)
        certificates[f] = cert
        if cert.status is Status.INCONCLUSIVE:
            inconclusive.append(f)
    for lv in chain.levels:
        for f in lv:
            cert = certify(f, neg, gens)
            certificates[f] = cert
            if cert.status is Status.INCONCLUSIVE:
                inconclusive.append(f)
    empty_level = next((i + 1 for i, lv in enumerate(chain.levels) if not lv), None)
    if empty_level is not None:
        notes.append(f"levels die out at depth {empty_level}; no rays needed")
        return StabilizationReport(
            ok=not inconclusive, j=None, k=None, witness={},
            certificates=certificates, tails=(),
            inconclusive=tuple(inconclusive), notes=tuple(notes))
    found = _find_stabilization(chain)
    if found is None:
        notes.append("no stabilization pair (j, k) found within the depth")
        return StabilizationReport(
            ok=False, j=None, k=None, witness={}, certificates=certificates,
            tails=(), inconclusive=tuple(inconclusive), notes=tuple(notes))
    j, k, witness = found
    tails = []
    for f, c in sorted(witness.items()):
        computed = chain.depth - j
        tail = _h1_persistence_tail(f, c, neg, gens, computed)
        if tail is None:
            tail = _surjective_tail(f, c, neg, gens, computed)
        if tail is None:
            tail = _injective_tail(f, c, neg, gens, computed)
        if tail is None:
            inconclusive.append(f)
            notes.append("ray from " + " ".join(map(str, f.display_row()))
                         + " has no tail certificate")
            continue
        # ray members before the tail takes over need individual
        # certificates (surjective-induction carries its own base).
        first_uncovered = tail.start if tail.kind != "surjective-induction" \
            else tail.start + 1
        for i in range(1, first_uncovered):
            member = f + i * c
            cert = certificates.get(member)
            if cert is None:
                cert = certify(member, neg, gens)
                certificates[member] = cert
            if cert.status is Status.INCONCLUSIVE:
                inconclusive.append(member)
        tails.append(tail)
    return StabilizationReport(
        ok=not inconclusive, j=j, k=k, witness=witness,
        certificates=certificates, tails=tuple(tails),
        inconclusive=tuple(inconclusive), notes=tuple(notes))


# ---------------------------------------------------------------------------
# Markings


def e0_classes(neg: NegSet) -> tuple:
    """Nef members of the orbit of E0: the possible plane markings."""
    return tuple(h for h in sorted(weyl.orbit(E0).elements) if is_nef(h, neg))


def exceptional_configuration(h: DivisorClass, neg: NegSet) -> tuple:
    """The marking (E0'', ..., E6'') attached to a nef degree-1 class.

    The six companions are the exceptional classes orthogonal to h, ordered
    so that an effective difference puts its minuend first, ties broken
    lexicographically.
    """
    if h.dot(h) != 1 or MINUS_K.dot(h) != 3 or not is_nef(h, neg):
        raise ValueError(f"{h!r} is not a nef marking class")
    cands = [c for c in weyl.exceptional_classes() if c.dot(h) == 0]
    if len(cands) != 6:
        raise ArithmeticError(f"marking {h!r} has {len(cands)} companions, not 6")
    for a, b in itertools.combinations(cands, 2):
        if a.dot(b) != 0:
            raise ArithmeticError("companion classes are not orthogonal")
    total = ZERO
    for c in cands:
        total = total + c
    if 3 * h - total != MINUS_K:
        raise ArithmeticError("companion classes do not complete the marking")

    def effective(d: DivisorClass) -> bool:
        return reduce(d, neg).effective

    remaining = sorted(cands)
    ordered = []
    while remaining:
        # pick the lexicographically least class that no other must precede
        choice = None
        for a in remaining:
            if all(not effective(b - a) for b in remaining if b != a):
                choice = a
                break
        if choice is None:
            raise ArithmeticError("effectiveness order has a cycle")
        ordered.append(choice)
        remaining.remove(choice)
    return (h,) + tuple(ordered)


def change_of_marking(neg: NegSet, h: DivisorClass) -> tuple:
    """Nodal roots of the configuration in the coordinates of marking h.

    A class X has coordinates (X.E0'', X.E1'', ..., X.E6'') in the stored
    convention of the new marking.
    """
    marking = exceptional_configuration(h, neg)

    def transform(x: DivisorClass) -> DivisorClass:
        return DivisorClass(tuple(x.dot(m) for m in marking))

    new_nodal = tuple(sorted(transform(c) for c in neg.nodal))
    new_neg = neg_from_nodal(new_nodal)
    if set(new_neg.classes) != {transform(c) for c in neg.classes}:
        raise ArithmeticError("marking change did not preserve the negative curves")
    return new_nodal


# ---------------------------------------------------------------------------
# Full verification sweeps


@dataclass(frozen=True)
class MarkingReport:
    """Verification outcome for one configuration under one marking."""

    marking: DivisorClass
    ok: bool
    method: str  # "conic" | "chain"
    report: StabilizationReport | None


def verify_configuration(neg: NegSet, depth: int = 6) -> MarkingReport:
    """Verify maximal rank over one configuration in its given marking."""
    if on_conic(neg):
        return MarkingReport(marking=E0, ok=True, method="conic", report=None)
    gens = nef_generators(neg)
    chain = s_chain(neg, depth, gens)
    report = verify_stabilization(chain, neg, gens)
    return MarkingReport(marking=E0, ok=report.ok, method="chain", report=report)


def _canonical_problem(nodal) -> tuple:
    """Nodal set up to relabelling of the six points; dedupes marking runs."""
    best = None
    for p in itertools.permutations(range(6)):
        cand = tuple(sorted(
            (c[0],) + tuple(c[1 + p[i]] for i in range(6)) for c in nodal))
        if best is None or cand < best:
            best = cand
    return best


def verify_all_markings(neg: NegSet, depth: int = 6, _cache: dict | None = None):
    """Verify one configuration under every marking; yields MarkingReports.

    Relabelling the six points does not change any of the checks, so
    structurally identical marking problems are solved once.
    """
    solved = _cache if _cache is not None else {}
    for h in e0_classes(neg):
        nodal = change_of_marking(neg, h)
        key = _canonical_problem(nodal)
        if key not in solved:
            problem = neg_from_nodal(nodal)
            solved[key] = verify_configuration(problem, depth)
        base = solved[key]
        yield MarkingReport(marking=h, ok=base.ok, method=base.method,
                            report=base.report)


# ---------------------------------------------------------------------------
# Injectivity classification


_INJ_SPORADIC = (
    (0, ()),
    (4, (2, 2, 2, 1, 1, 1)),
    (5, (2, 2, 2, 2, 2, 2)),
    (6, (3, 3, 2, 2, 2, 2)),
    (8, (4, 3, 3, 3, 3, 3)),
    (10, (4, 4, 4, 4, 4, 4)),
)


def injectivity_class(f: DivisorClass) -> bool:
    """Whether f matches, up to point relabelling, a known injectivity class.

    The list: the zero class, five sporadic classes, and all multiples of
    2E0-E1-E2-E3-E4 and of 3E0-2E1-E2-E3-E4-E5-E6.
    """
    d = f.degree
    m = tuple(sorted(f.multiplicities, reverse=True))
    if f == ZERO:
        return True
    for deg, mults in _INJ_SPORADIC:
        if d == deg and m == tuple(sorted(mults, reverse=True)):
            return True
    if d > 0 and d % 2 == 0:
        t = d // 2
        if m == (t, t, t, t, 0, 0):
            return True
    if d > 0 and d % 3 == 0:
        t = d // 3
        if m == (2 * t, t, t, t, t, t):
            return True
    return False


def monotone_nef_generators() -> tuple:
    """Generators of the cone of nef classes with weakly decreasing entries.

    This cone equals the nef cone of the configuration whose nodal roots
    are the five differences Ei - Ei+1.
    """
    neg = neg_from_nodal(tuple(E[i] - E[i + 1] for i in range(1, 6)))
    return nef_generators(neg).pared
