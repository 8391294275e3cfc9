"""Independent cross-checks for the polar engine.

The main tool is a truncated colength: inside the finite-dimensional space
of polynomials of degree below a cap D it spans all truncated multiples of
the generators and counts, by exact Gaussian elimination, the monomials
that survive.  For an ideal of finite local colength the count stabilizes
once D is large enough, so agreement of two consecutive caps together with
an empty top boundary certifies the value.  None of this shares code with
the standard-basis machinery; that is the point.

Also here: the closed-form polar multiplicities of Fermat polynomials, the
Teissier sum check mu + mu' for the first polar curve, and the audit of the
boundary identities a gamma profile must satisfy.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ImproperIntersection, NonIsolated
from .ideals import Ideal, local_colength
from .orders import GLOBAL, mono_deg, mono_mul
from .poly import INFINITE
from .polar import milnor_number, polar_ideal

_F0 = Fraction(0)

HARD_DEGREE_CAP = 40


@dataclass(frozen=True)
class OracleVerdict:
    """One named comparison; passed is True exactly when the sides agree."""

    name: str
    expected: object
    actual: object
    passed: bool
    context: str = ""


def verdict(name, expected, actual, context=""):
    return OracleVerdict(name, expected, actual, expected == actual, context)


@dataclass(frozen=True)
class TruncatedColength:
    value: int
    stable: bool
    cap: int


def monomials_below(nvars, cap):
    """All exponent tuples with total degree strictly below cap."""
    if cap <= 0:
        return []
    out = []
    mono = [0] * nvars

    def rec(i, budget):
        if i == nvars - 1:
            for e in range(budget + 1):
                mono[i] = e
                out.append(tuple(mono))
            mono[i] = 0
            return
        for e in range(budget + 1):
            mono[i] = e
            rec(i + 1, budget - e)
        mono[i] = 0

    rec(0, cap - 1)
    return out


def _echelon_pivots(rows, keyf):
    """Leading monomials of an echelon form of the row space."""
    pivots = {}
    for row in rows:
        row = dict(row)
        while row:
            lead = max(row, key=keyf)
            piv = pivots.get(lead)
            if piv is None:
                c = row[lead]
                pivots[lead] = {m: v / c for m, v in row.items()}
                break
            factor = row[lead]
            for m, v in piv.items():
                c = row.get(m, _F0) - factor * v
                if c:
                    row[m] = c
                elif m in row:
                    del row[m]
    return pivots


def _survivors(I, cap):
    """Monomials of degree < cap independent of all truncated multiples."""
    keyf = GLOBAL.key
    rows = []
    for g in I.gens:
        room = cap - g.order_of_vanishing()
        for u in monomials_below(I.nvars, room):
            row = {}
            for gm, gc in g.terms.items():
                m = mono_mul(gm, u)
                if mono_deg(m) < cap:
                    row[m] = gc
            if row:
                rows.append(row)
    pivots = _echelon_pivots(rows, keyf)
    return [m for m in monomials_below(I.nvars, cap) if m not in pivots]


def truncated_colength(I, cap):
    """Colength estimate from degree-truncated linear algebra.

    Stable means the count at cap and cap+1 agree and no surviving monomial
    sits on the top boundary (degree cap-1); in that case the value is the
    exact local colength.  The zero ideal never stabilizes.
    """
    if cap < 1:
        raise ValueError("cap must be at least 1")
    if I.is_zero():
        return TruncatedColength(len(monomials_below(I.nvars, cap)), False, cap)
    here = _survivors(I, cap)
    nxt = _survivors(I, cap + 1)
    boundary_clear = all(mono_deg(m) < cap - 1 for m in here)
    stable = len(here) == len(nxt) and boundary_clear
    return TruncatedColength(len(here), stable, cap)


def stable_colength(I, start_cap, hard_cap=HARD_DEGREE_CAP):
    """Run the truncated colength, doubling the cap until it stabilizes or
    the hard cap is reached."""
    cap = max(2, start_cap)
    cap = min(cap, hard_cap)
    while True:
        r = truncated_colength(I, cap)
        if r.stable or cap >= hard_cap:
            return r
        cap = min(2 * cap, hard_cap)


def default_cap(f):
    """Starting cap used when auditing ideals derived from f."""
    return 2 * max(f.total_degree(), 1) + 4


def bezout_gamma(n, d, k):
    """Polar multiplicity of the Fermat polynomial sum z_i^d in n+1
    variables: (d-1)^(n+1-k)."""
    if not 0 <= k <= n + 1:
        raise ValueError("k out of range")
    if k == 0:
        return 0
    return (d - 1) ** (n + 1 - k)


def teissier_check(f, frame):
    """Intersection number of the first polar curve with V(f) versus the
    sum of the Milnor numbers of f and its slice by z_0 = 0 in the frame.

    The frame must be usable: f needs an isolated singularity, the slice
    must keep one too, and the polar curve must cut V(f) in finite
    colength.  NonIsolated or ImproperIntersection flag unusable frames.
    """
    mu = milnor_number(f)
    if mu is INFINITE:
        raise NonIsolated("f does not have an isolated singularity")
    fM = frame.transform(f)
    sliced = fM.substitute_zero([0])
    mu_slice = milnor_number(sliced)
    if mu_slice is INFINITE:
        raise NonIsolated("the hyperplane slice in this frame is not isolated")
    pol = polar_ideal(f, frame, 1)
    if pol.ideal.is_zero():
        raise ImproperIntersection("first polar ideal is zero in this frame")
    meet = Ideal(pol.ideal.gens + (fM,), f.nvars)
    lhs = local_colength(meet)
    if lhs is INFINITE:
        raise ImproperIntersection(
            "polar curve does not cut V(f) in finite colength"
        )
    return verdict(
        "teissier_polar_against_slice",
        mu + mu_slice,
        lhs,
        context=f"mu={mu}, mu_slice={mu_slice}",
    )


def gamma_identity_audit(profile):
    """The three boundary identities every profile must satisfy."""
    g = profile.gamma
    n = profile.n
    return [
        verdict("gamma_0_is_zero", 0, g[0]),
        verdict("gamma_top_is_one", 1, g[n + 1]),
        verdict("gamma_n_is_mult_minus_one", profile.mult - 1, g[n]),
    ]
