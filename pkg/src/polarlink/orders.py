"""Monomial orders and exponent-tuple helpers.

A monomial is a tuple of non-negative integers, one exponent per variable.
Two public orders are provided:

* ``GLOBAL`` (degrevlex): a well-order, total degree first, ties broken so
  that the last variable is cheapest.
* ``LOCAL`` (negdegrevlex): ranks lower total degree larger, so leading
  terms pick out the tangent cone at the origin; same tie-break.

Elimination orders exist only as internal plumbing for tag-variable
intersections; the first ``n_elim`` variables dominate.
"""

from __future__ import annotations

from dataclasses import dataclass

Monomial = tuple  # tuple[int, ...]


def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a, b):
    """True iff monomial a divides monomial b."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(a, b):
    """Exponent vector of a / b; caller guarantees divisibility."""
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_deg(a):
    return sum(a)


@dataclass(frozen=True)
class MonomialOrder:
    """A monomial order, usable as a sort key via :meth:`key`.

    kind is one of 'degrevlex', 'negdegrevlex', 'elim'.  For 'elim' the
    first n_elim exponents are compared (degrevlex among themselves) before
    the remaining block, which makes it an elimination order for the tag
    variables.
    """

    kind: str
    n_elim: int = 0

    @property
    def is_global(self):
        return self.kind != "negdegrevlex"

    def key(self, mono):
        """Sort key; larger key means larger monomial."""
        if self.kind == "degrevlex":
            return (mono_deg(mono), tuple(-e for e in reversed(mono)))
        if self.kind == "negdegrevlex":
            return (-mono_deg(mono), tuple(-e for e in reversed(mono)))
        if self.kind == "elim":
            head, tail = mono[: self.n_elim], mono[self.n_elim :]
            return (
                mono_deg(head),
                tuple(-e for e in reversed(head)),
                mono_deg(tail),
                tuple(-e for e in reversed(tail)),
            )
        raise ValueError(f"unknown order kind {self.kind!r}")

    def greater(self, a, b):
        return self.key(a) > self.key(b)

    def max(self, monos):
        return max(monos, key=self.key)


GLOBAL = MonomialOrder("degrevlex")
LOCAL = MonomialOrder("negdegrevlex")


def elimination(n_elim=1):
    """Order eliminating the first n_elim variables (internal use)."""
    return MonomialOrder("elim", n_elim)
