"""Polar ideals of a hypersurface singularity and their local multiplicities.

For f vanishing at the origin of C^(n+1), the k-th polar ideal is the
saturation of (df/dz_k, ..., df/dz_n) by the full Jacobian ideal, computed
after a linear change of coordinates.  Its local colength against the plane
z_0 = ... = z_(k-1) = 0 is the polar multiplicity; the profile samples
random integer frames and keeps, per k, the minimum over the frames where
the polar ideal has the expected dimension and the intersection is finite.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import (
    ExcludedCaseError,
    GammaIdentityViolation,
    ImproperIntersection,
    NoValidFrame,
    WrongPolarDimension,
)
from .ideals import Ideal, dimension, local_colength, mora_standard_basis, saturate
from .poly import INFINITE, Polynomial, det


@dataclass(frozen=True)
class CoordinateFrame:
    """Invertible integer change of coordinates z_i -> sum_j m[i][j] z_j.

    seed_trace records (seed, draw index) so a frame can be regenerated.
    """

    matrix: tuple
    seed_trace: tuple = ()

    def __post_init__(self):
        if det([list(r) for r in self.matrix]) == 0:
            raise ValueError("frame matrix is singular")

    @property
    def size(self):
        return len(self.matrix)

    def transform(self, p):
        return p.substitute_linear([list(r) for r in self.matrix])


def identity_frame(nvars):
    rows = tuple(
        tuple(1 if i == j else 0 for j in range(nvars)) for i in range(nvars)
    )
    return CoordinateFrame(rows, ("identity",))


def sample_frames(nvars, count, seed, bound=10):
    """count invertible frames with entries drawn uniformly from [-bound, bound].

    Draws are sequential from random.Random(seed); singular draws are
    discarded but still advance the draw index, so results only depend on
    (nvars, seed, bound) and the position in the stream.
    """
    if count < 1:
        raise ValueError("need at least one frame")
    if bound < 1:
        raise ValueError("bound must be at least 1")
    rng = random.Random(seed)
    frames = []
    draw = 0
    while len(frames) < count:
        rows = tuple(
            tuple(rng.randint(-bound, bound) for _ in range(nvars))
            for _ in range(nvars)
        )
        if det([list(r) for r in rows]) != 0:
            frames.append(CoordinateFrame(rows, (seed, draw)))
        draw += 1
    return frames


def jacobian_ideal(f):
    """Ideal of all first partials.  f must be non-constant."""
    if f.is_zero() or f.is_constant():
        raise ValueError("jacobian of a constant polynomial")
    gens = [f.partial_derivative(i) for i in range(f.nvars)]
    return Ideal(gens, f.nvars)


def critical_dimension(f):
    """Local dimension s of the critical locus of f at the origin.

    Raises ExcludedCaseError when the origin is a smooth point of V(f),
    i.e. some partial does not vanish there.
    """
    J = jacobian_ideal(f)
    if any(g.constant_term() != 0 for g in J.gens):
        raise ExcludedCaseError("origin is a smooth point of V(f)")
    d = dimension(mora_standard_basis(J))
    return d


def milnor_number(g):
    """Local colength of the Jacobian ideal; INFINITE when the singularity
    at the origin is not isolated (and for g identically zero)."""
    if g.is_zero():
        return INFINITE
    if g.constant_term() != 0:
        raise ValueError("g does not vanish at the origin")
    return local_colength(jacobian_ideal(g))


@dataclass(frozen=True)
class PolarIdeal:
    ideal: Ideal
    saturation_exponent: int
    frame: CoordinateFrame
    k: int


def polar_ideal(f, frame, k):
    """k-th polar ideal of f in the given frame.

    Generated by the partials of the transformed polynomial with respect to
    z_k..z_n, saturated by the full Jacobian ideal to remove the critical
    locus.
    """
    n = f.nvars - 1
    if not 1 <= k <= n:
        raise ValueError(f"polar index k={k} out of range 1..{n}")
    if frame.size != f.nvars:
        raise ValueError("frame size does not match the variable count")
    fM = frame.transform(f)
    gens = [fM.partial_derivative(i) for i in range(k, n + 1)]
    partial_ideal = Ideal(gens, f.nvars)
    if partial_ideal.is_zero():
        return PolarIdeal(partial_ideal, 0, frame, k)
    sat, exponent = saturate(partial_ideal, jacobian_ideal(fM))
    return PolarIdeal(sat, exponent, frame, k)


def gamma_k(f, frame, k):
    """Polar multiplicity for index k in one frame.

    Raises WrongPolarDimension when the polar ideal does not define a
    k-dimensional germ (empty germ counts as multiplicity 0), and
    ImproperIntersection when the cut by z_0 = ... = z_(k-1) = 0 is not
    finite.
    """
    n = f.nvars - 1
    if k == 0:
        return 0
    if k == n + 1:
        return 1
    pol = polar_ideal(f, frame, k)
    if pol.ideal.is_zero():
        raise WrongPolarDimension(
            f"polar ideal for k={k} is zero in this frame"
        )
    sb = mora_standard_basis(pol.ideal)
    d = dimension(sb)
    if d == -1:
        return 0  # polar variety misses the origin
    if d != k:
        raise WrongPolarDimension(
            f"polar ideal for k={k} has local dimension {d}"
        )
    cut = [g.substitute_zero(range(k)) for g in pol.ideal.gens]
    restricted = Ideal([g for g in cut if not g.is_zero()], f.nvars - k)
    c = local_colength(restricted)
    if c is INFINITE:
        raise ImproperIntersection(
            f"polar variety for k={k} meets the coordinate plane improperly"
        )
    return c


@dataclass(frozen=True)
class GammaProfile:
    """Polar multiplicities gamma^0..gamma^(n+1) with sampling diagnostics.

    per_trial[t][k-1] is the value gamma^k measured in frame t, or None if
    that frame was invalid for k.  witness[k-1] is the first trial index
    attaining the reported minimum and agreement[k-1] how many trials did.
    """

    n: int
    gamma: tuple
    mult: int
    s: int
    trials: int
    stable: bool
    per_trial: tuple
    agreement: tuple
    witness: tuple
    frames: tuple

    @property
    def nvars(self):
        return self.n + 1

    def witness_frame(self, k):
        return self.frames[self.witness[k - 1]]


def check_excluded(f):
    """Raise ExcludedCaseError for inputs outside the covered setting."""
    if f.is_zero():
        raise ExcludedCaseError("f is locally constant")
    if f.constant_term() != 0:
        raise ExcludedCaseError("f(0) != 0")
    if f.is_constant():
        raise ExcludedCaseError("f is locally constant")


def gamma_profile(f, trials=5, seed=0, bound=10):
    """Sample polar multiplicities of f over `trials` random frames.

    The reported gamma^k is the minimum over valid frames; the profile is
    stable when for every k at least ceil(trials/2) frames agree on that
    minimum.  gamma^0 = 0 and gamma^(n+1) = 1 by convention, and
    gamma^n = mult(f) - 1 is enforced as a consistency check.
    """
    if trials < 1:
        raise ValueError("trials must be at least 1")
    check_excluded(f)
    n = f.nvars - 1
    if n < 1:
        raise ValueError("need at least two variables")
    mult = f.order_of_vanishing()
    s = critical_dimension(f)
    frames = tuple(sample_frames(f.nvars, trials, seed, bound))

    per_trial = []
    for fr in frames:
        row = []
        for k in range(1, n + 1):
            try:
                row.append(gamma_k(f, fr, k))
            except (ImproperIntersection, WrongPolarDimension):
                row.append(None)
        per_trial.append(tuple(row))
    per_trial = tuple(per_trial)

    gamma = [0] * (n + 2)
    gamma[n + 1] = 1
    agreement = []
    witness = []
    for k in range(1, n + 1):
        vals = [row[k - 1] for row in per_trial if row[k - 1] is not None]
        if not vals:
            raise NoValidFrame(
                f"no valid frame for k={k} after {trials} trials"
            )
        best = min(vals)
        gamma[k] = best
        hits = [t for t, row in enumerate(per_trial) if row[k - 1] == best]
        agreement.append(len(hits))
        witness.append(hits[0])

    threshold = (trials + 1) // 2
    stable = all(a >= threshold for a in agreement)
    if gamma[n] != mult - 1:
        raise GammaIdentityViolation(
            f"gamma^n = {gamma[n]} disagrees with mult - 1 = {mult - 1}"
        )
    return GammaProfile(
        n=n,
        gamma=tuple(gamma),
        mult=mult,
        s=s,
        trials=trials,
        stable=stable,
        per_trial=per_trial,
        agreement=tuple(agreement),
        witness=tuple(witness),
        frames=frames,
    )
