"""
Dual graph of a stable reduction: a rooted tree of components with inertia
exponents, tail labels, branch-point specializations, edge epaisseurs and
effective ramification invariants. Implements the numeric laws relating
effective differents, effective invariants, epaisseurs, and vanishing cycles,
plus a propagation solver and the admissible tail-configuration enumeration
for m_G = 2.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction


class InvalidProfile(ValueError):
    pass


class MissingLabel(ValueError):
    pass


class Unsupported(ValueError):
    pass


class InvalidTree(ValueError):
    pass


# --- component-level numerics ---


@dataclass
class DeformationProfile:
    """Per-level data at a marked component: differents delta_i in (0, 1],
    with delta_i = 1 exactly at the multiplicative levels."""

    deltas: list

    def __post_init__(self):
        self.deltas = [Fraction(d) for d in self.deltas]
        if not self.deltas:
            raise InvalidProfile("profile needs at least one level")
        for d in self.deltas:
            if not 0 < d <= 1:
                raise InvalidProfile(f"delta = {d} outside (0, 1]")

    @property
    def multiplicative(self):
        return [d == 1 for d in self.deltas]


def effective_different(profile, p):
    """Sum of the differents with the last level weighted by p/(p-1); 0 for an
    etale component (empty or None profile)."""
    if profile is None:
        return Fraction(0)
    if not isinstance(profile, DeformationProfile):
        if len(list(profile)) == 0:
            return Fraction(0)
        profile = DeformationProfile(list(profile))
    deltas = profile.deltas
    return sum(deltas[:-1], Fraction(0)) + Fraction(p, p - 1) * deltas[-1]


def effective_invariant(sigmas, p):
    """Weighted average of the per-level invariants: weights (p-1)/p^i for
    i < r and 1/p^(r-1) for the last level; the weights sum to 1."""
    sigmas = [Fraction(s) for s in sigmas]
    if not sigmas:
        raise InvalidProfile("need at least one level")
    r = len(sigmas)
    out = Fraction(0)
    for i, s in enumerate(sigmas[:-1], start=1):
        out += Fraction(p - 1, p**i) * s
    out += Fraction(1, p ** (r - 1)) * sigmas[-1]
    return out


def invariant_weights(r, p):
    """The weights used by effective_invariant; exposed for the weight-sum
    identity check."""
    return [Fraction(p - 1, p**i) for i in range(1, r)] + [Fraction(1, p ** (r - 1))]


# --- the tree ---

TAIL_KINDS = ("none", "primitive", "new-etale", "new-inseparable")


@dataclass
class Vertex:
    id: str
    inertia: int = 0
    tail: str = "none"
    branch_points: list = field(default_factory=list)  # (point id, index)
    sigma: Fraction | None = None
    delta_eff: Fraction | None = None

    def __post_init__(self):
        if self.tail not in TAIL_KINDS:
            raise InvalidTree(f"unknown tail kind {self.tail!r}")
        if self.sigma is not None:
            self.sigma = Fraction(self.sigma)


@dataclass
class Edge:
    parent: str
    child: str
    epaisseur: Fraction | None = None
    sigma_eff: Fraction | None = None

    def __post_init__(self):
        if self.epaisseur is not None:
            self.epaisseur = Fraction(self.epaisseur)
        if self.sigma_eff is not None:
            self.sigma_eff = Fraction(self.sigma_eff)

    @property
    def key(self):
        return (self.parent, self.child)


class ReductionTree:
    def __init__(self, vertices, edges):
        self.vertices = {v.id: v for v in vertices}
        if len(self.vertices) != len(vertices):
            raise InvalidTree("duplicate vertex ids")
        self.edges = list(edges)
        self.children = {v: [] for v in self.vertices}
        parents = {}
        for e in self.edges:
            if e.parent not in self.vertices or e.child not in self.vertices:
                raise InvalidTree(f"edge {e.key} references unknown vertex")
            if e.child in parents:
                raise InvalidTree(f"vertex {e.child} has two parents")
            parents[e.child] = e.parent
            self.children[e.parent].append(e.child)
        roots = [v for v in self.vertices if v not in parents]
        if len(roots) != 1:
            raise InvalidTree(f"expected a unique root, found {roots}")
        self.root = roots[0]
        self.parent_of = parents
        # connectivity (tree = all vertices reachable from the root)
        seen = set()
        stack = [self.root]
        while stack:
            v = stack.pop()
            seen.add(v)
            stack.extend(self.children[v])
        if seen != set(self.vertices):
            raise InvalidTree("graph is not a connected tree")

    def edge(self, parent, child):
        for e in self.edges:
            if e.key == (parent, child):
                return e
        raise KeyError(f"no edge {(parent, child)}")

    def subtree(self, vertex):
        out = []
        stack = [vertex]
        while stack:
            v = stack.pop()
            out.append(v)
            stack.extend(self.children[v])
        return out

    def path_from_root(self, vertex):
        path = [vertex]
        while path[-1] != self.root:
            path.append(self.parent_of[path[-1]])
        return list(reversed(path))

    # serialization

    @classmethod
    def from_json(cls, data):
        vertices = []
        for v in data["vertices"]:
            vertices.append(
                Vertex(
                    id=str(v["id"]),
                    inertia=int(v.get("inertia", 0)),
                    tail=v.get("tail", "none"),
                    branch_points=[
                        (str(b["id"]), int(b["index"]))
                        for b in v.get("branch_points", [])
                    ],
                    sigma=Fraction(v["sigma"]) if v.get("sigma") is not None else None,
                    delta_eff=(
                        Fraction(v["delta_eff"])
                        if v.get("delta_eff") is not None
                        else None
                    ),
                )
            )
        edges = []
        for e in data["edges"]:
            edges.append(
                Edge(
                    parent=str(e["parent"]),
                    child=str(e["child"]),
                    epaisseur=(
                        Fraction(e["epaisseur"])
                        if e.get("epaisseur") is not None
                        else None
                    ),
                    sigma_eff=(
                        Fraction(e["sigma_eff"])
                        if e.get("sigma_eff") is not None
                        else None
                    ),
                )
            )
        return cls(vertices, edges)

    def to_json(self):
        return {
            "vertices": [
                {
                    "id": v.id,
                    "inertia": v.inertia,
                    "tail": v.tail,
                    "branch_points": [
                        {"id": b, "index": i} for b, i in v.branch_points
                    ],
                    **({"sigma": str(v.sigma)} if v.sigma is not None else {}),
                    **(
                        {"delta_eff": str(v.delta_eff)}
                        if v.delta_eff is not None
                        else {}
                    ),
                }
                for v in self.vertices.values()
            ],
            "edges": [
                {
                    "parent": e.parent,
                    "child": e.child,
                    **(
                        {"epaisseur": str(e.epaisseur)}
                        if e.epaisseur is not None
                        else {}
                    ),
                    **(
                        {"sigma_eff": str(e.sigma_eff)}
                        if e.sigma_eff is not None
                        else {}
                    ),
                }
                for e in self.edges
            ],
        }

    def copy(self):
        return ReductionTree.from_json(self.to_json())


def validate_tree(tree, p):
    """Structural lints: etale non-root components must be tails; a p^i-tail's
    parent must have strictly larger inertia; branch points of index p^a * m
    (p not dividing m) sit on components of inertia a; wild branch points of
    index divisible by p^r must not sit strictly below inertia on the path."""
    problems = []
    for v in tree.vertices.values():
        if v.id != tree.root and v.inertia == 0 and v.tail == "none":
            problems.append(f"etale component {v.id} is not marked as a tail")
        if v.tail != "none":
            parent = tree.parent_of.get(v.id)
            if parent is not None and not tree.vertices[parent].inertia > v.inertia:
                problems.append(
                    f"tail {v.id} (inertia {v.inertia}) under parent of inertia "
                    f"{tree.vertices[parent].inertia}"
                )
        for point, index in v.branch_points:
            a = 0
            m = index
            while m % p == 0:
                m //= p
                a += 1
            if v.inertia != a:
                problems.append(
                    f"branch point {point} of index {index} on a component of "
                    f"inertia {v.inertia}, expected {a}"
                )
            if a >= 1 and v.id != tree.root:
                parent = tree.vertices[tree.parent_of[v.id]]
                if not parent.inertia > a:
                    problems.append(
                        f"wild branch point {point} (index {index}) not under a "
                        f"component of inertia > {a}"
                    )
    return problems


# --- solving the delta/sigma/epaisseur laws ---


@dataclass
class SolveResult:
    status: str  # Solved | Contradiction | Unsolved
    tree: ReductionTree | None = None
    contradictions: list = field(default_factory=list)
    relations: list = field(default_factory=list)
    unknowns: list = field(default_factory=list)

    def to_json(self):
        out = {"status": self.status}
        if self.tree is not None:
            out["tree"] = self.tree.to_json()
        if self.contradictions:
            out["contradictions"] = self.contradictions
        if self.relations:
            out["relations"] = [
                {
                    "edges": [list(k) for k in edges],
                    "sum_epaisseur": str(value),
                }
                for edges, value in self.relations
            ]
        if self.unknowns:
            out["unknowns"] = self.unknowns
        return out


def propagate_differents(tree, p, root_delta=None):
    """Solve for delta_eff / sigma_eff / epaisseur using the local law
    delta_eff(parent) - delta_eff(child) = sigma_eff * epaisseur.

    Known boundary data: the root (delta = root_delta, default nu + 1/(p-1)
    for root inertia nu), etale vertices (delta = 0), and any vertex with an
    explicit delta_eff label. Returns a SolveResult; unresolved chains are
    reported as aggregate relations when their sigma_eff values agree.
    """
    work = tree.copy()
    root = work.vertices[work.root]
    if root_delta is None:
        root_delta = Fraction(root.inertia) + Fraction(1, p - 1)
    contradictions = []

    def set_delta(v, value):
        if v.delta_eff is None:
            v.delta_eff = Fraction(value)
            return True
        if v.delta_eff != value:
            contradictions.append(
                f"vertex {v.id}: delta_eff {v.delta_eff} vs derived {value}"
            )
        return False

    set_delta(root, root_delta)
    for v in work.vertices.values():
        if v.inertia == 0:
            set_delta(v, Fraction(0))
    changed = True
    while changed and not contradictions:
        changed = False
        for e in work.edges:
            vp_ = work.vertices[e.parent]
            vc = work.vertices[e.child]
            dp, dc, s, eps = vp_.delta_eff, vc.delta_eff, e.sigma_eff, e.epaisseur
            known = [x is not None for x in (dp, dc, s, eps)].count(True)
            if known < 3:
                continue
            if dp is not None and dc is not None:
                diff = dp - dc
                if s is not None and eps is not None:
                    if diff != s * eps:
                        contradictions.append(
                            f"edge {e.key}: delta drop {diff} != "
                            f"sigma_eff*epaisseur = {s * eps}"
                        )
                elif s is not None:
                    if s == 0:
                        if diff != 0:
                            contradictions.append(
                                f"edge {e.key}: sigma_eff = 0 but delta drop {diff}"
                            )
                    else:
                        e.epaisseur = diff / s
                        changed = True
                elif eps is not None:
                    if eps == 0:
                        contradictions.append(f"edge {e.key}: epaisseur must be > 0")
                    else:
                        e.sigma_eff = diff / eps
                        changed = True
            elif s is not None and eps is not None:
                if dp is not None:
                    changed |= set_delta(vc, dp - s * eps)
                else:
                    changed |= set_delta(vp_, dc + s * eps)
    if contradictions:
        return SolveResult("Contradiction", work, contradictions=contradictions)
    # aggregate relations along unresolved chains with uniform sigma_eff
    relations = []
    unknowns = []
    for e in work.edges:
        if e.epaisseur is None:
            unknowns.append(f"epaisseur{e.key}")
        if e.sigma_eff is None:
            unknowns.append(f"sigma_eff{e.key}")
    for leaf, v in work.vertices.items():
        if work.children[leaf]:
            continue
        path = work.path_from_root(leaf)
        path_edges = [work.edge(a, b) for a, b in zip(path, path[1:])]
        open_run = [e for e in path_edges if e.epaisseur is None]
        if not open_run:
            continue
        if any(e.sigma_eff is None for e in open_run):
            continue
        sigmas = {e.sigma_eff for e in open_run}
        d_top = work.vertices[work.root].delta_eff
        d_bot = work.vertices[leaf].delta_eff
        if d_top is None or d_bot is None or len(sigmas) != 1:
            continue
        sigma = sigmas.pop()
        if sigma == 0:
            continue
        known_drop = sum(
            (e.sigma_eff * e.epaisseur for e in path_edges if e.epaisseur is not None),
            Fraction(0),
        )
        relations.append(
            (tuple(e.key for e in open_run), (d_top - d_bot - known_drop) / sigma)
        )
    status = "Solved" if not unknowns else "Unsolved"
    if status == "Solved":
        for e in work.edges:
            if not e.epaisseur > 0:
                contradictions.append(f"edge {e.key}: epaisseur {e.epaisseur} <= 0")
        for e in work.edges:
            dp, dc = work.vertices[e.parent].delta_eff, work.vertices[e.child].delta_eff
            if dp is not None and dc is not None and dp < dc:
                contradictions.append(
                    f"edge {e.key}: effective different increases outward "
                    f"({dp} < {dc})"
                )
        if contradictions:
            return SolveResult("Contradiction", work, contradictions=contradictions)
    return SolveResult(status, work, relations=relations, unknowns=unknowns)


def effective_invariant_from_tails(tree, edge, p):
    """sigma_eff of an edge from the outward tails and wild branch points:
    sigma_eff - 1 = sum over outward etale tails (sigma_b - 1) - |Pi_e|."""
    if not isinstance(edge, Edge):
        edge = tree.edge(*edge)
    outward = tree.subtree(edge.child)
    total = Fraction(1)
    for vid in outward:
        v = tree.vertices[vid]
        if v.tail in ("primitive", "new-etale") or (v.tail != "none" and v.inertia == 0):
            if v.sigma is None:
                raise MissingLabel(f"outward etale tail {vid} has no sigma label")
            total += v.sigma - 1
        for point, index in v.branch_points:
            if index % p == 0:
                total -= 1
    return total


# --- vanishing cycles ---


@dataclass
class CycleCheck:
    kind: str  # Holds | Violated
    lhs: Fraction
    rhs: Fraction

    def to_json(self):
        return {"verdict": self.kind, "lhs": str(self.lhs), "rhs": str(self.rhs)}


def check_vanishing_cycles(data, level=None):
    """Global form: 1 = sum over new tails (sigma - 1) + sum over primitive
    tails sigma. Level form (level = j): |Pi_(j+1)| - 2 = sum (sigma - 1) over
    the level's tails; input {"pi_count": n, "sigmas": [...]}.
    """
    if level is not None:
        n = int(data["pi_count"])
        sigmas = [Fraction(s) for s in data["sigmas"]]
        lhs = sum((s - 1 for s in sigmas), Fraction(0))
        rhs = Fraction(n - 2)
        return CycleCheck("Holds" if lhs == rhs else "Violated", lhs, rhs)
    if isinstance(data, ReductionTree):
        new = [
            v.sigma
            for v in data.vertices.values()
            if v.tail in ("new-etale", "new-inseparable")
        ]
        prim = [v.sigma for v in data.vertices.values() if v.tail == "primitive"]
        if any(s is None for s in new + prim):
            raise MissingLabel("all tails need sigma labels")
    else:
        new = [Fraction(s) for s in data.get("new", [])]
        prim = [Fraction(s) for s in data.get("prim", [])]
    lhs = sum((Fraction(s) - 1 for s in new), Fraction(0)) + sum(
        (Fraction(s) for s in prim), Fraction(0)
    )
    return CycleCheck("Holds" if lhs == 1 else "Violated", lhs, Fraction(1))


@dataclass
class MonotonicityVerdict:
    kind: str  # Monotonic | Violation
    path: list = field(default_factory=list)

    def to_json(self):
        out = {"verdict": self.kind}
        if self.path:
            out["path"] = self.path
        return out


def check_monotonic(tree):
    """Generic inertia must not increase outward along any root-to-leaf path."""
    for e in tree.edges:
        if tree.vertices[e.child].inertia > tree.vertices[e.parent].inertia:
            return MonotonicityVerdict("Violation", tree.path_from_root(e.child))
    return MonotonicityVerdict("Monotonic")


# --- tail-configuration enumeration ---


@dataclass(frozen=True)
class TailConfig:
    prim: tuple
    new: tuple
    flagged: bool = False  # contains a sigma >= p/2, hence impossible

    def to_json(self):
        out = {
            "prim": [str(s) for s in self.prim],
            "new": [str(s) for s in self.new],
        }
        if self.flagged:
            out["flagged"] = True
        return out


def enumerate_tail_configs(tau, m_G, p):
    """Admissible etale-tail invariant multisets for m_G = 2 with tau
    primitive tails: sigma in (1/2)Z > 0, new-tail sigma > 1, at most two
    etale tails in total, vanishing-cycles identity satisfied. Entries with
    any sigma >= p/2 are flagged as impossible but still listed.
    """
    if m_G != 2:
        raise Unsupported(f"only m_G = 2 is modeled, got {m_G}")
    if not 0 <= tau <= 3:
        raise ValueError(f"tau must be 0..3, got {tau}")
    half = Fraction(1, 2)
    candidates = [half * k for k in range(1, 4 * p + 1)]
    out = []
    seen = set()
    for n_new in range(0, max(0, 2 - tau) + 1):
        for prim in _multisets(candidates, tau):
            for new in _multisets([s for s in candidates if s > 1], n_new):
                lhs = sum((s - 1 for s in new), Fraction(0)) + sum(
                    prim, Fraction(0)
                )
                if lhs != 1:
                    continue
                cfg = TailConfig(
                    prim=tuple(sorted(prim)),
                    new=tuple(sorted(new)),
                    flagged=any(s >= Fraction(p, 2) for s in prim + new),
                )
                key = (cfg.prim, cfg.new)
                if key not in seen:
                    seen.add(key)
                    out.append(cfg)
    return sorted(out, key=lambda c: (len(c.new), c.prim, c.new))


def _multisets(values, k):
    if k == 0:
        yield ()
        return
    for i, v in enumerate(values):
        for rest in _multisets(values[i:], k - 1):
            yield (v,) + rest
