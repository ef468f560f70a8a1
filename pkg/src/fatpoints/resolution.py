"""Fat point schemes: Hilbert functions and graded Betti numbers.

A fat point scheme attaches multiplicities (m1..m6) to a six-point
configuration; its degree-t piece corresponds to the class
t*E0 - m1*E1 - ... - m6*E6.  Section counts come from the reduction
algorithm, and the generator counts t_i of the minimal free resolution
come from cokernel dimensions of the degree-raising multiplication maps,
which have maximal rank on the configurations supported here.  Syzygy
counts follow as s_i = t_i - (third difference of the Hilbert function).
"""

from __future__ import annotations

from dataclasses import dataclass

from .config import NegSet, PointConfiguration, anticanonical_nef
from .cones import h0, h1, reduce
from .lattice import E0, DivisorClass, chi


class UnsupportedConfigurationError(ValueError):
    """Infinitely-near points without a nef anticanonical class."""


@dataclass(frozen=True)
class FatPointScheme:
    """Multiplicities attached to a configuration, given through its NEG set."""

    neg: NegSet
    multiplicities: tuple

    def __post_init__(self):
        m = tuple(int(x) for x in self.multiplicities)
        if len(m) != 6:
            raise ValueError(f"need 6 multiplicities, got {len(m)}")
        if any(x < 0 for x in m):
            raise ValueError(f"negative multiplicity in {m}")
        object.__setattr__(self, "multiplicities", m)

    @classmethod
    def from_configuration(cls, config: PointConfiguration, multiplicities) -> "FatPointScheme":
        return cls(neg=config.neg, multiplicities=tuple(multiplicities))

    def class_for_degree(self, t: int) -> DivisorClass:
        """The class t*E0 - m1*E1 - ... - m6*E6."""
        return DivisorClass((t,) + self.multiplicities)

    def is_supported(self) -> bool:
        """Distinct-point configurations, or infinitely-near ones with -K nef.

        A configuration involves infinitely-near points exactly when NEG
        contains a degree-0 class other than the basis classes Ei.
        """
        vertical = any(c.degree == 0 and c.dot(c) != -1 for c in self.neg)
        return not vertical or anticanonical_nef(self.neg)


def proximity_normalize(z: FatPointScheme) -> FatPointScheme:
    """Canonical multiplicities defining the same ideal.

    Degree-0 negative curves impose inequalities on the multiplicities
    (e.g. a point infinitely near another cannot carry a larger one); while
    any is violated the offending curve is a fixed component in every
    degree, so subtracting it off changes nothing.  Idempotent.
    """
    vertical = [c for c in z.neg if c.degree == 0]
    base = DivisorClass((0,) + z.multiplicities)
    changed = True
    while changed:
        changed = False
        for c in vertical:
            while base.dot(c) < 0:
                base = base - c
                changed = True
    m = base.multiplicities
    if any(x < 0 for x in m):
        raise ArithmeticError(f"normalization produced negative multiplicities {m}")
    if m == z.multiplicities:
        return z
    return FatPointScheme(neg=z.neg, multiplicities=m)


@dataclass(frozen=True)
class HilbertProfile:
    """Hilbert function values with the three attached invariants.

    ``alpha``: least degree with a nonzero value.  ``tau``: least degree
    from which the values agree with the Hilbert polynomial.  ``sigma``:
    tau + 1; generator degrees never exceed it.
    """

    values: dict
    alpha: int
    tau: int
    sigma: int

    def __call__(self, t: int) -> int:
        if t < 0:
            return 0
        got = self.values.get(t)
        if got is None:
            raise KeyError(f"degree {t} not computed (max {max(self.values)})")
        return got


def hilbert(z: FatPointScheme, t_max: int | None = None) -> HilbertProfile:
    """Hilbert function of the ideal of z, up to max(t_max, sigma + 1).

    Works with the normalized multiplicities; the ideal is unchanged by
    normalization.  The scan extends until the first-cohomology term of
    the degree class vanishes, which is stable in the degree, and two
    confirming degrees are checked anyway.
    """
    z = proximity_normalize(z)
    neg = z.neg
    values: dict = {}
    alpha = None
    tau = None
    t = 0
    hard_stop = 4 * (sum(z.multiplicities) + 3)
    while True:
        f = z.class_for_degree(t)
        values[t] = h0(f, neg)
        if alpha is None and values[t] > 0:
            alpha = t
        if tau is None and h1(f, neg) == 0:
            if h1(z.class_for_degree(t + 1), neg) != 0 or \
               h1(z.class_for_degree(t + 2), neg) != 0:
                raise ArithmeticError(
                    f"first cohomology failed to stay zero past degree {t}")
            tau = t
        if tau is not None and alpha is not None and t >= tau + 2 \
                and (t_max is None or t >= t_max):
            break
        if t > hard_stop:
            raise ArithmeticError("Hilbert scan failed to stabilize")
        t += 1
    return HilbertProfile(values=values, alpha=alpha, tau=tau, sigma=tau + 1)


def mu_cokernel(z: FatPointScheme, i: int) -> int:
    """Cokernel dimension of multiplication from degree i to degree i+1.

    Strips the fixed part of the degree-i class; on the residual nef part
    the multiplication map has maximal rank, and the fixed part contributes
    the difference of section counts one degree up.
    """
    z = proximity_normalize(z)
    if not z.is_supported():
        raise UnsupportedConfigurationError(
            "infinitely-near configuration without nef anticanonical class")
    neg = z.neg
    hi = h0(z.class_for_degree(i), neg)
    hnext = h0(z.class_for_degree(i + 1), neg)
    if hi == 0:
        return hnext
    red = reduce(z.class_for_degree(i), neg)
    m = red.nef_part
    hm = chi(m)
    hm_up = h0(m + E0, neg)
    return max(0, hm_up - 3 * hm) + (hnext - hm_up)


@dataclass(frozen=True)
class BettiTable:
    """Graded Betti numbers: generator counts t and syzygy counts s by degree."""

    t: dict
    s: dict

    def generator_summary(self) -> str:
        return format_shifts(self.t)

    def syzygy_summary(self) -> str:
        return format_shifts(self.s)


def format_shifts(counts: dict) -> str:
    """Render degree->count as shift notation, e.g. "R[-6] + R[-8]^3"."""
    if not counts:
        return "0"
    parts = []
    for d in sorted(counts):
        n = counts[d]
        parts.append(f"R[-{d}]" if n == 1 else f"R[-{d}]^{n}")
    return " + ".join(parts)


def betti(z: FatPointScheme) -> BettiTable:
    """Graded Betti numbers of the minimal free resolution of the ideal of z.

    Generator counts: t_alpha equals the first nonzero Hilbert value, the
    later ones are the cokernel dimensions of the multiplication maps, and
    nothing survives past sigma.  Syzygies: s_i = t_i minus the third
    difference of the Hilbert function, always nonnegative, with one more
    generator than syzygy in total.
    """
    z = proximity_normalize(z)
    if not z.is_supported():
        raise UnsupportedConfigurationError(
            "infinitely-near configuration without nef anticanonical class")
    prof = hilbert(z)
    alpha, sigma = prof.alpha, prof.sigma
    t: dict = {}
    if prof(alpha) > 0:
        t[alpha] = prof(alpha)
    for i in range(alpha, sigma):
        v = mu_cokernel(z, i)
        if v:
            t[i + 1] = v
    s: dict = {}
    for i in range(0, sigma + 2):
        d3 = prof(i) - 3 * prof(i - 1) + 3 * prof(i - 2) - prof(i - 3)
        v = t.get(i, 0) - d3
        if v < 0:
            raise ArithmeticError(
                f"negative syzygy count at degree {i}; maximal-rank step broken")
        if v:
            s[i] = v
    if sum(t.values()) - sum(s.values()) != 1:
        raise ArithmeticError("generator/syzygy totals do not differ by one")
    return BettiTable(t=t, s=s)
