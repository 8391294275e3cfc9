"""From polar multiplicities to the real link.

The chain-level data is a complex whose term k has rank
lambda^k = gamma^k + gamma^(k+1) and computes reduced cohomology of the
link in degree n+k-1.  Alternating partial sums of the lambda ranks
telescope back to single gamma values, and comparing them against a
hypothesized vector of reduced Betti numbers gives two families of
Morse-type upper bounds, one per end of the complex.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import TelescopeViolation


@dataclass(frozen=True)
class LambdaProfile:
    """Ranks lambda^0..lambda^n of the link complex."""

    n: int
    lam: tuple


def lambda_from_gamma(profile):
    g = profile.gamma
    lam = tuple(g[k] + g[k + 1] for k in range(profile.n + 1))
    return LambdaProfile(profile.n, lam)


@dataclass(frozen=True)
class ChainComplexSpec:
    """Term ranks and the cohomology degree each term computes."""

    n: int
    ranks: tuple
    degrees: tuple


def chain_complex(lamp):
    degrees = tuple(lamp.n + k - 1 for k in range(lamp.n + 1))
    return ChainComplexSpec(lamp.n, lamp.lam, degrees)


@dataclass(frozen=True)
class TelescopeRow:
    p: int
    from_bottom: int
    from_bottom_expected: int
    from_top: int
    from_top_expected: int


def telescope_sums(lamp, profile, p):
    """The two alternating partial sums of lambda at depth p, recomputed
    from lambda alone and compared against the gamma values they telescope
    to.  A mismatch raises TelescopeViolation and means the engine broke an
    algebraic identity, not that any input is infeasible."""
    g = profile.gamma
    lam = lamp.lam
    n = profile.n
    s_bottom = sum((-1) ** k * lam[k] for k in range(p + 1))
    s_top = sum((-1) ** k * lam[n - k] for k in range(p + 1))
    want_bottom = (-1) ** p * g[p + 1]
    want_top = 1 + (-1) ** p * g[n - p]
    if s_bottom != want_bottom or s_top != want_top:
        raise TelescopeViolation(
            f"telescope identity fails at p={p}: "
            f"bottom {s_bottom} vs {want_bottom}, top {s_top} vs {want_top}"
        )
    return s_bottom, s_top


def telescope_table(profile, lamp):
    """telescope_sums at every p, with the expected values alongside."""
    n = profile.n
    g = profile.gamma
    rows = []
    for p in range(n + 1):
        s_bottom, s_top = telescope_sums(lamp, profile, p)
        rows.append(
            TelescopeRow(
                p, s_bottom, (-1) ** p * g[p + 1], s_top, 1 + (-1) ** p * g[n - p]
            )
        )
    return tuple(rows)


@dataclass(frozen=True)
class BettiVector:
    """Hypothesized reduced Betti numbers b~^0..b~^(2n-1) of the link,
    optionally with the number of connected components of the germ."""

    values: tuple
    components: object = None

    def __post_init__(self):
        if any(v < 0 for v in self.values):
            raise ValueError("Betti numbers must be non-negative")
        if self.components is not None and self.components < 1:
            raise ValueError("component count must be positive")


@dataclass(frozen=True)
class MorseBound:
    """One inequality.  family 1 runs from the bottom of the complex with
    right side gamma^(p+1); family 2 from the top with right side
    (-1)^p + gamma^(n-p).  terms lists (sign, degree) pairs of the left
    side; lhs and satisfied are filled only when Betti input is present."""

    family: int
    p: int
    terms: tuple
    rhs: int
    lhs: object = None
    satisfied: object = None


def morse_bounds(profile, lamp, betti=None):
    """Both families of link inequalities for p = 0..n.

    The right-hand sides are also recomputed from lambda alone and must
    match the gamma expressions; disagreement raises TelescopeViolation.
    """
    n = profile.n
    g = profile.gamma
    lam = lamp.lam
    out = []
    for p in range(n + 1):
        terms1 = tuple(((-1) ** (p + k), n + k - 1) for k in range(p + 1))
        rhs1 = g[p + 1]
        check1 = (-1) ** p * sum((-1) ** k * lam[k] for k in range(p + 1))
        if check1 != rhs1:
            raise TelescopeViolation(
                f"family-1 right side at p={p}: {check1} vs gamma {rhs1}"
            )
        out.append(_fill(MorseBound(1, p, terms1, rhs1), betti))
        terms2 = tuple(((-1) ** (p + k), 2 * n - k - 1) for k in range(p + 1))
        rhs2 = (-1) ** p + g[n - p]
        check2 = (-1) ** p * sum((-1) ** k * lam[n - k] for k in range(p + 1))
        if check2 != rhs2:
            raise TelescopeViolation(
                f"family-2 right side at p={p}: {check2} vs gamma {rhs2}"
            )
        out.append(_fill(MorseBound(2, p, terms2, rhs2), betti))
    return tuple(out)


def _fill(bound, betti):
    if betti is None:
        return bound
    lhs = sum(sign * betti.values[deg] for sign, deg in bound.terms)
    return MorseBound(
        bound.family, bound.p, bound.terms, bound.rhs, lhs, lhs <= bound.rhs
    )


def allowed_degrees(n, s):
    """Degrees in 0..2n-1 where the reduced cohomology may be nonzero:
    0 and 2n-1 always, plus the window n-1..n+s."""
    top = 2 * n - 1
    out = {0, top}
    for k in range(n - 1, min(n + s, top) + 1):
        out.add(k)
    return tuple(sorted(out))


@dataclass(frozen=True)
class FeasibilityCheck:
    name: str
    passed: bool
    detail: str


def betti_feasibility(betti, profile, lamp):
    """Audit a Betti hypothesis against everything the profile forces.

    Checks the vanishing window, both families of Morse bounds at every p,
    the reduced Euler characteristic, and the component count when given.
    All at the level of ranks; a clean pass does not certify the vector is
    realized by the actual link.
    """
    n = profile.n
    if len(betti.values) != 2 * n:
        raise ValueError(
            f"expected {2 * n} Betti numbers for n={n}, got {len(betti.values)}"
        )
    checks = []

    window = allowed_degrees(n, profile.s)
    bad = [
        k for k, v in enumerate(betti.values) if v != 0 and k not in window
    ]
    checks.append(
        FeasibilityCheck(
            "vanishing_window",
            not bad,
            f"allowed degrees {list(window)}"
            + (f", nonzero outside at {bad}" if bad else ""),
        )
    )

    for b in morse_bounds(profile, lamp, betti):
        checks.append(
            FeasibilityCheck(
                f"morse_family{b.family}_p{b.p}",
                bool(b.satisfied),
                f"lhs {b.lhs} <= rhs {b.rhs}",
            )
        )

    euler = sum((-1) ** k * v for k, v in enumerate(betti.values))
    checks.append(
        FeasibilityCheck(
            "reduced_euler_characteristic",
            euler == -1,
            f"alternating sum {euler}, required -1",
        )
    )

    if betti.components is not None:
        c = betti.components
        top = betti.values[2 * n - 1]
        checks.append(
            FeasibilityCheck(
                "components_equal_top_betti",
                top == c,
                f"b~^{2 * n - 1} = {top}, components = {c}",
            )
        )
        if c != 1:
            checks.append(
                FeasibilityCheck(
                    "multiple_components_force_s",
                    profile.s == n - 1,
                    f"components {c} != 1 requires s = n-1 = {n - 1}, s = {profile.s}",
                )
            )
    return tuple(checks)


@dataclass(frozen=True)
class N1Sequence:
    """The n=1 four-term sequence pinning the link of a plane curve.

    ranks is (b~^0, mult-1, mult, b~^1) with None placeholders when no
    Betti input was supplied; exactness forces b~^1 - b~^0 = 1 and the
    injection forces b~^0 <= mult-1."""

    ranks: tuple
    checks: tuple


def n1_exact_sequence(profile, betti=None):
    if profile.n != 1:
        raise ValueError("the four-term sequence only applies when n = 1")
    mult = profile.mult
    b0 = betti.values[0] if betti is not None else None
    b1 = betti.values[1] if betti is not None else None
    checks = []
    if betti is not None:
        checks.append(
            FeasibilityCheck(
                "difference_is_one",
                b1 - b0 == 1,
                f"b~^1 - b~^0 = {b1 - b0}, exactness requires 1",
            )
        )
        checks.append(
            FeasibilityCheck(
                "injection_bound",
                b0 <= mult - 1,
                f"b~^0 = {b0} must not exceed mult-1 = {mult - 1}",
            )
        )
    return N1Sequence((b0, mult - 1, mult, b1), tuple(checks))
