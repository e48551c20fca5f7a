"""
Ramification filtrations in the upper numbering: Herbrand transforms between
upper and lower numbering, quotient invariance, conductors of composita, and
the closed-form conductors of the two extension shapes used by the wild
monodromy computation.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


class InvalidQuotient(ValueError):
    pass


class PreconditionViolated(ValueError):
    pass


@dataclass(frozen=True)
class Filtration:
    """Upper-numbering filtration as a step function.

    breaks[i] = (jump u_i, order o_i) means |G^u| = o_i for u in
    (u_(i-1), u_i], with the first entry at u_0 = 0 carrying |G^0| = order;
    the filtration is trivial beyond the last jump.
    """

    breaks: tuple
    order: int

    def __init__(self, breaks, order=None):
        breaks = tuple((Fraction(u), int(o)) for u, o in breaks)
        if not breaks:
            raise ValueError("filtration needs at least the u = 0 entry")
        if breaks[0][0] != 0:
            raise ValueError(f"first break must be at u = 0, got {breaks[0][0]}")
        jumps = [u for u, _ in breaks]
        if sorted(jumps) != jumps or len(set(jumps)) != len(jumps):
            raise ValueError(f"jumps must be strictly increasing, got {jumps}")
        orders = [o for _, o in breaks]
        if any(a < b for a, b in zip(orders, orders[1:])):
            raise ValueError(f"orders must be weakly decreasing, got {orders}")
        if order is None:
            order = orders[0]
        if order != orders[0]:
            raise ValueError(
                f"total order {order} must equal the order at u = 0 ({orders[0]})"
            )
        object.__setattr__(self, "breaks", breaks)
        object.__setattr__(self, "order", int(order))

    def group_order_at(self, u):
        """|G^u| for u >= 0."""
        u = Fraction(u)
        if u < 0:
            raise ValueError(f"u must be >= 0, got {u}")
        for jump, o in self.breaks:
            if u <= jump:
                return o
        return 1

    def conductor(self):
        """Largest jump with a nontrivial group, 0 if none."""
        h = Fraction(0)
        for jump, o in self.breaks:
            if o > 1:
                h = jump
        return h

    def to_json(self):
        return {
            "breaks": [{"jump": str(u), "order": o} for u, o in self.breaks],
            "order": self.order,
        }

    @classmethod
    def from_json(cls, data):
        return cls(
            [(Fraction(b["jump"]), int(b["order"])) for b in data["breaks"]],
            int(data.get("order") or 0) or None,
        )


def trivial_filtration():
    return Filtration([(Fraction(0), 1)])


def cyclotomic_filtration(p, nu):
    """Filtration of the degree (p-1)p^(nu-1) cyclotomic-type extension:
    jumps at 0, 1, ..., nu - 1 with orders (p-1)p^(nu-1), p^(nu-1), ..., p."""
    breaks = [(Fraction(0), (p - 1) * p ** (nu - 1))]
    for i in range(1, nu):
        breaks.append((Fraction(i), p ** (nu - i)))
    return Filtration(breaks)


def herbrand(filtration, direction, x):
    """Piecewise-linear change of numbering.

    psi maps upper to lower numbering (slope |G^0| / |G^u|); phi is its
    inverse (lower to upper). The stored filtration is upper-numbered.
    """
    x = Fraction(x)
    if x < 0:
        raise ValueError(f"x must be >= 0, got {x}")
    if direction not in ("phi", "psi"):
        raise ValueError(f"direction must be phi or psi, got {direction!r}")
    total = filtration.order
    segments = []  # (upper start, upper end, slope of psi)
    prev = Fraction(0)
    for jump, o in filtration.breaks[1:]:
        segments.append((prev, jump, Fraction(total, o)))
        prev = jump
    segments.append((prev, None, Fraction(total, 1)))
    if direction == "psi":
        acc = Fraction(0)
        for start, end, slope in segments:
            seg_end = end if end is not None else None
            if seg_end is None or x <= seg_end:
                return acc + (x - start) * slope
            acc += (seg_end - start) * slope
        raise AssertionError("unreachable")
    # phi: invert the same piecewise map
    acc = Fraction(0)
    for start, end, slope in segments:
        if end is None:
            return start + (x - acc) / slope
        length = (end - start) * slope
        if x <= acc + length:
            return start + (x - acc) / slope
        acc += length
    raise AssertionError("unreachable")


def upper_from_lower(lower_breaks):
    """Build the upper-numbered filtration from lower-numbered break data
    [(lower jump t_i, order of G_t on (t_(i-1), t_i])] via the running
    Herbrand integral."""
    lower_breaks = [(Fraction(t), int(o)) for t, o in lower_breaks]
    total = lower_breaks[0][1]
    out = [(Fraction(0), total)]
    upper = Fraction(0)
    prev = Fraction(0)
    for t, o in lower_breaks[1:]:
        upper += (t - prev) * Fraction(o, total)
        prev = t
        out.append((upper, o))
    return Filtration(out)


def quotient_filtration(filtration, surviving_orders):
    """Same jumps, quotient orders (upper numbering is quotient-invariant)."""
    surviving_orders = [int(o) for o in surviving_orders]
    if len(surviving_orders) != len(filtration.breaks):
        raise InvalidQuotient(
            f"expected {len(filtration.breaks)} orders, got {len(surviving_orders)}"
        )
    for (jump, o), q in zip(filtration.breaks, surviving_orders):
        if q < 1 or o % q != 0:
            raise InvalidQuotient(
                f"order {q} at jump {jump} does not divide {o}"
            )
    # drop trailing trivial jumps so the conductor reads correctly
    breaks = [
        (jump, q)
        for (jump, _), q in zip(filtration.breaks, surviving_orders)
    ]
    return Filtration(breaks)


def compositum_conductor(conductors):
    """Conductor of a compositum: the maximum of the conductors."""
    conductors = [Fraction(c) for c in conductors]
    if not conductors:
        raise ValueError("need at least one conductor")
    return max(conductors)


# conductor of one degree-p radical step over the first cyclotomic level,
# taken as an input constant (upper numbering over that level)
def radical_step_conductor(p):
    return Fraction(p)


def conductor_case(p, nu, shape):
    """Closed-form conductor over the base for the two extension shapes:
    a tame extension of the cyclotomic tower (nu - 1), or the Kummer tower
    obtained by adjoining a p-th radical (max(nu - 1, p/(p-1)), nu > 1)."""
    if shape == "tame-over-cyclotomic":
        if nu < 1:
            raise PreconditionViolated(f"nu must be >= 1, got {nu}")
        return Fraction(nu - 1)
    if shape == "kummer-tower":
        if nu <= 1:
            raise PreconditionViolated(f"kummer-tower shape needs nu > 1, got {nu}")
        return max(Fraction(nu - 1), Fraction(p, p - 1))
    raise ValueError(f"unknown shape {shape!r}")
