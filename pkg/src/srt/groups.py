"""
SL2 over a prime field: element orders, the trace-prescribed generator
construction, generation checks (a normalizer criterion and an exhaustive
breadth-first closure), and p-Sylow data.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np


class NoSolution(ValueError):
    pass


class Unsupported(ValueError):
    pass


class ResourceLimit(RuntimeError):
    pass


def _is_prime(n):
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


@dataclass(frozen=True)
class MatrixElement:
    """Element of SL2(F_q) with entries ((a, b), (c, d)) and det 1."""

    a: int
    b: int
    c: int
    d: int
    q: int

    def __post_init__(self):
        for name in "abcd":
            object.__setattr__(self, name, getattr(self, name) % self.q)
        if (self.a * self.d - self.b * self.c) % self.q != 1:
            raise ValueError(
                f"determinant must be 1 mod {self.q}, got "
                f"{(self.a * self.d - self.b * self.c) % self.q}"
            )

    def __mul__(self, other):
        if self.q != other.q:
            raise ValueError(f"field mismatch: {self.q} vs {other.q}")
        q = self.q
        return MatrixElement(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
            q,
        )

    def inverse(self):
        return MatrixElement(self.d, -self.b, -self.c, self.a, self.q)

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        out = identity(self.q)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    def trace(self):
        return (self.a + self.d) % self.q

    def is_identity(self):
        return (self.a, self.b, self.c, self.d) == (1 % self.q, 0, 0, 1 % self.q)

    def entries(self):
        return (self.a, self.b, self.c, self.d)


def identity(q):
    return MatrixElement(1, 0, 0, 1, q)


def minus_identity(q):
    return MatrixElement(-1, 0, 0, -1, q)


def _prime_factors(n):
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def element_order(m):
    """Multiplicative order, using that it divides q(q^2 - 1)."""
    q = m.q
    n = q * (q * q - 1)
    order = n
    for prime in _prime_factors(n):
        while order % prime == 0 and (m ** (order // prime)).is_identity():
            order //= prime
    return order


def solve_trace_system(q, tau, rho):
    """A matrix beta with tr(beta) = tau and tr(alpha*beta) = rho, where
    alpha = [[1,1],[0,1]]; requires tau, rho, 2, -2 pairwise distinct mod q.

    The solution has lower-left entry c = rho - tau != 0, so beta lies
    outside the upper-triangular subgroup.
    """
    tau %= q
    rho %= q
    values = [tau, rho, 2 % q, (-2) % q]
    if len(set(values)) != 4:
        raise NoSolution(
            f"tau, rho, 2, -2 must be pairwise distinct mod {q}, got {values}"
        )
    c = (rho - tau) % q
    b = (-pow(c, -1, q)) % q
    beta = MatrixElement(0, b, c, tau, q)
    alpha = MatrixElement(1, 1, 0, 1, q)
    assert beta.trace() == tau
    assert (alpha * beta).trace() == rho
    return beta


def _primitive_root(q):
    factors = _prime_factors(q - 1)
    for g in range(2, q):
        if all(pow(g, (q - 1) // f, q) != 1 for f in factors):
            return g
    raise NoSolution(f"no primitive root mod {q}")


def standard_generators(q, p):
    """The generating pair (alpha, beta) with alpha = [[1,1],[0,1]] of order q,
    beta of order q - 1, and alpha*beta of order (q-1)/p.

    beta is built by prescribing the traces of the split semisimple classes of
    those orders: tau = lam + lam^-1 for a primitive root lam, and
    rho = mu + mu^-1 for mu = lam^p.
    """
    if not _is_prime(q):
        raise Unsupported(f"q must be prime, got {q}")
    if (q - 1) % p != 0:
        raise NoSolution(f"p = {p} must divide q - 1 = {q - 1}")
    lam = _primitive_root(q)
    tau = (lam + pow(lam, -1, q)) % q
    mu = pow(lam, p, q)
    rho = (mu + pow(mu, -1, q)) % q
    alpha = MatrixElement(1, 1, 0, 1, q)
    beta = solve_trace_system(q, tau, rho)
    return alpha, beta


@dataclass
class GenerationVerdict:
    kind: str  # Generates | ProperSubgroup
    order: int | None = None
    evidence: dict = None

    def to_json(self):
        out = {"verdict": self.kind}
        if self.order is not None:
            out["order"] = self.order
        if self.evidence:
            out["evidence"] = {k: str(v) for k, v in self.evidence.items()}
        return out


def generation_check(gens, q, mode="criterion"):
    """Do the given matrices generate SL2(F_q)?

    criterion mode: for gens = (alpha, beta) with alpha of order q (q a prime
    >= 5), beta outside the normalizer of <alpha> (lower-left entry nonzero)
    forces the image in PSL2 to be everything; -I in <beta> then lifts the
    generation to SL2.

    bfs mode: exact closure size via breadth-first multiplication, compared
    with |SL2(F_q)| = q(q^2 - 1).
    """
    gens = list(gens)
    if not gens:
        raise ValueError("need at least one generator")
    if mode == "bfs":
        return _generation_bfs(gens, q)
    if mode != "criterion":
        raise ValueError(f"mode must be criterion or bfs, got {mode!r}")
    if len(gens) == 1:
        return GenerationVerdict(
            "ProperSubgroup",
            order=element_order(gens[0]),
            evidence={"reason": "single generator spans a cyclic group"},
        )
    if len(gens) != 2:
        raise Unsupported("criterion mode needs exactly two generators")
    alpha, beta = gens
    if not _is_prime(q) or q < 5:
        raise Unsupported(f"criterion mode needs a prime q >= 5, got {q}")
    if element_order(alpha) != q:
        raise Unsupported(
            f"criterion mode needs the first generator of order q = {q}"
        )
    # alpha of order q is conjugate to a unipotent; in the basis where alpha
    # is upper triangular, the normalizer of <alpha-bar> in PSL2 is the Borel
    if beta.c % q == 0 and alpha.c % q == 0:
        return GenerationVerdict(
            "ProperSubgroup",
            evidence={"reason": "both generators upper triangular"},
        )
    if alpha.c % q != 0:
        raise Unsupported("criterion mode expects the unipotent in upper form")
    ord_beta = element_order(beta)
    has_minus = ord_beta % 2 == 0 and (beta ** (ord_beta // 2)) == minus_identity(q)
    if not has_minus:
        return GenerationVerdict(
            "ProperSubgroup",
            evidence={"reason": "-I not in the cyclic group of the second generator"},
        )
    return GenerationVerdict(
        "Generates",
        order=q * (q * q - 1),
        evidence={
            "psl2_criterion": "order-q element plus element outside its "
            "normalizer",
            "minus_identity": f"beta^{ord_beta // 2}",
        },
    )


_BFS_LIMIT = 30_000_000


def _generation_bfs(gens, q, limit=_BFS_LIMIT):
    target = q * (q * q - 1)
    if target > limit:
        raise ResourceLimit(
            f"closure would need about {target} packed entries (limit {limit})"
        )
    for g in gens:
        if g.q != q:
            raise ValueError(f"generator over F_{g.q}, expected F_{q}")

    def encode(a, b, c, d):
        return ((a.astype(np.int64) * q + b) * q + c) * q + d

    def decode(code):
        d = code % q
        code //= q
        c = code % q
        code //= q
        b = code % q
        a = code // q
        return a, b, c, d

    gen_entries = [g.entries() for g in gens]
    identity_code = ((np.int64(1) * q + 0) * q + 0) * q + 1
    visited = np.array([identity_code], dtype=np.int64)
    frontier = visited
    while frontier.size:
        a, b, c, d = decode(frontier.copy())
        products = []
        for ga, gb, gc, gd in gen_entries:
            na = (a * ga + b * gc) % q
            nb = (a * gb + b * gd) % q
            nc = (c * ga + d * gc) % q
            nd = (c * gb + d * gd) % q
            products.append(encode(na, nb, nc, nd))
        new = np.unique(np.concatenate(products))
        del products, a, b, c, d
        # membership against the sorted visited array without np.isin's
        # internal concatenate-and-sort copy (keeps peak memory low)
        idx = np.searchsorted(visited, new)
        idx[idx == visited.size] = 0
        frontier = new[visited[idx] != new]
        del new, idx
        visited = np.concatenate([visited, frontier])
        visited.sort()
    size = int(visited.size)
    if size == target:
        return GenerationVerdict("Generates", order=size)
    return GenerationVerdict("ProperSubgroup", order=size)


@dataclass
class SylowData:
    order: int
    cyclic: bool
    m_G: int

    def to_json(self):
        return {"order": self.order, "cyclic": self.cyclic, "m_G": self.m_G}


def sylow_data(q, p):
    """p-Sylow data of SL2(F_q) for odd p dividing q^2 - 1: the Sylow is the
    p-part of q^2 - 1, it is cyclic, and the normalizer acts through a group
    of order m_G = 2."""
    if p == 2 or not _is_prime(p):
        raise Unsupported(f"p must be an odd prime, got {p}")
    if q % p == 0:
        raise Unsupported(f"p = {p} divides q = {q}")
    n = q * q - 1
    if n % p != 0:
        raise Unsupported(f"p = {p} does not divide q^2 - 1 = {n}")
    order = 1
    while n % p == 0:
        order *= p
        n //= p
    return SylowData(order=order, cyclic=True, m_G=2)
