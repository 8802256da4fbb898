"""Exact integer-feasibility verifier for the dimension-vector bounds.

For a type, a multiplicity n and a nonempty subset J of unframed
vertices, pin the framing dimension to 1 and the J dimensions to
n*delta, and impose at every remaining unframed vertex i the local
estimate

    2 v_i  <=  sum over arrows a with head i of v_tail(a)

(edge multiplicities count, so the doubled edge of rank-1 family A
contributes twice; the framing vertex contributes its pinned 1 to the
vertex-0 estimate).  The verifier enumerates every integer point of
this system and certifies that all of them satisfy v_j <= n*delta_j
off J.  An exact rational LP over the same system reports where the
relaxation exceeds the integer bound, which is the reason parity
arguments are needed at all.

No inequality is imposed at the framing vertex itself: the local
estimate is not a consequence of stability there (the coframing map of
a stable module may vanish), and imposing it would empty the system
for small n.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import floor

from .mckay import INF, DynkinType, build_framed_quiver, vertex_key, vertex_to_name


class UnboundedSystemError(RuntimeError):
    """A variable admits no finite bound; the system was built wrongly."""


@dataclass(frozen=True)
class Inequality:
    """sum(coeffs[v] * x_v) <= bound, over the unknown vertices."""

    center: int
    coeffs: tuple      # sorted ((vertex, coefficient), ...)
    bound: int

    def coeff_map(self):
        return dict(self.coeffs)

    def __str__(self):
        terms = " + ".join("%d*v%s" % (c, v) for v, c in self.coeffs)
        return "%s <= %d  (vertex %d)" % (terms, self.bound, self.center)


@dataclass(frozen=True)
class ConstraintSystem:
    """Pinned values plus local estimates at the non-J unframed vertices."""

    dtype: DynkinType
    n: int
    J: frozenset
    unknowns: tuple
    pinned: tuple      # sorted ((vertex, value), ...)
    inequalities: tuple

    def pinned_map(self):
        return dict(self.pinned)


def build_system(t, n, J):
    """Constraint system for (t, n, J); J must be nonempty.

    Removing a nonempty J from the affine diagram leaves components of
    finite type, whose quadratic form is positive definite, so the
    feasible region is bounded.  An empty J would lose that guarantee
    and is rejected.
    """
    J = frozenset(J)
    if not J:
        raise ValueError("J must be nonempty")
    if not J <= set(t.unframed_vertices):
        raise ValueError("J contains vertices outside 0..%d" % t.rank)
    if n < 1:
        raise ValueError("n must be at least 1")
    quiver = build_framed_quiver(t)
    pinned = {INF: 1}
    pinned.update({j: n * quiver.delta[j] for j in sorted(J)})
    unknowns = tuple(i for i in t.unframed_vertices if i not in J)
    inequalities = []
    for i in unknowns:
        coeffs = {i: 2}
        bound = 0
        for (u, v, mult) in quiver.edges:
            if i not in (u, v):
                continue
            other = v if u == i else u
            if other in pinned:
                bound += mult * pinned[other]
            else:
                coeffs[other] = coeffs.get(other, 0) - mult
        inequalities.append(Inequality(i, tuple(sorted(coeffs.items())), bound))
    return ConstraintSystem(t, n, J, unknowns,
                            tuple(sorted(pinned.items(), key=lambda kv: vertex_key(kv[0]))),
                            tuple(inequalities))


def simplex_max(objective, rows, bounds):
    """Maximise objective . x subject to rows . x <= bounds, x >= 0.

    Exact rational simplex with Bland's rule; the right-hand sides are
    nonnegative here, so the origin is a basic feasible start.  Raises
    UnboundedSystemError when the objective is unbounded.
    """
    m = len(rows)
    n = len(objective)
    tableau = []
    for i in range(m):
        if bounds[i] < 0:
            raise ValueError("negative right-hand side; origin start unavailable")
        row = [Fraction(x) for x in rows[i]]
        slack = [Fraction(1) if k == i else Fraction(0) for k in range(m)]
        tableau.append(row + slack + [Fraction(bounds[i])])
    cost = [-Fraction(c) for c in objective] + [Fraction(0)] * (m + 1)
    basis = list(range(n, n + m))
    while True:
        entering = None
        for j in range(n + m):
            if cost[j] < 0:
                entering = j
                break
        if entering is None:
            return cost[-1]
        leaving = None
        best = None
        for i in range(m):
            coeff = tableau[i][entering]
            if coeff > 0:
                ratio = tableau[i][-1] / coeff
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leaving]):
                    best = ratio
                    leaving = i
        if leaving is None:
            raise UnboundedSystemError("objective is unbounded")
        pivot = tableau[leaving][entering]
        tableau[leaving] = [x / pivot for x in tableau[leaving]]
        for i in range(m):
            if i != leaving and tableau[i][entering] != 0:
                factor = tableau[i][entering]
                tableau[i] = [a - factor * b for a, b in zip(tableau[i], tableau[leaving])]
        if cost[entering] != 0:
            factor = cost[entering]
            cost = [a - factor * b for a, b in zip(cost, tableau[leaving])]
        basis[leaving] = entering


def lp_max(system, vertex):
    """Exact maximum of one coordinate over the rational relaxation."""
    if vertex not in system.unknowns:
        raise ValueError("vertex %r is not an unknown of the system" % (vertex,))
    order = {v: k for k, v in enumerate(system.unknowns)}
    rows = []
    bounds = []
    for ineq in system.inequalities:
        row = [Fraction(0)] * len(system.unknowns)
        for v, c in ineq.coeffs:
            row[order[v]] = Fraction(c)
        rows.append(row)
        bounds.append(Fraction(ineq.bound))
    objective = [Fraction(1) if v == vertex else Fraction(0) for v in system.unknowns]
    return simplex_max(objective, rows, bounds)


def variable_bounds(system):
    """Integer upper bound per unknown, from the exact LP maxima.

    Every integer point is LP-feasible, so the floor of the LP maximum
    bounds the search box; unboundedness aborts loudly since it can
    only come from a wrongly built system.
    """
    return {v: floor(lp_max(system, v)) for v in system.unknowns}


def point_satisfies(system, point):
    """Exact re-substitution of an assignment into every inequality."""
    for ineq in system.inequalities:
        total = sum(c * point[v] for v, c in ineq.coeffs)
        if total > ineq.bound:
            return False
    return all(point[v] >= 0 for v in system.unknowns)


def integer_enumerate(system):
    """All integer points of the system, in lexicographic order.

    Depth-first search over the LP-bounded box, pruning with the
    optimistic value of each inequality over the unassigned variables.
    """
    unknowns = system.unknowns
    if not unknowns:
        return [{}]
    ubs = variable_bounds(system)
    order = {v: k for k, v in enumerate(unknowns)}
    ineq_data = []
    for ineq in system.inequalities:
        ineq_data.append((tuple((order[v], c) for v, c in ineq.coeffs), ineq.bound))
    out = []
    assignment = [0] * len(unknowns)

    def feasible_prefix(depth):
        for coeffs, bound in ineq_data:
            total = 0
            for pos, c in coeffs:
                if pos < depth:
                    total += c * assignment[pos]
                elif c < 0:
                    total += c * ubs[unknowns[pos]]
            if total > bound:
                return False
        return True

    def walk(depth):
        if depth == len(unknowns):
            out.append({v: assignment[order[v]] for v in unknowns})
            return
        for value in range(ubs[unknowns[depth]] + 1):
            assignment[depth] = value
            if feasible_prefix(depth + 1):
                walk(depth + 1)
        assignment[depth] = 0

    walk(0)
    return out


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of the bound check for one (type, n, J)."""

    dtype: DynkinType
    n: int
    J: tuple
    status: str              # "verified" | "counterexample"
    witnesses: tuple         # full integer vectors violating the bound
    integer_max: tuple       # sorted ((vertex, max), ...) over unknowns
    lp_max: tuple            # sorted ((vertex, Fraction), ...) over unknowns

    @property
    def verified(self):
        return self.status == "verified"

    def integer_max_map(self):
        return dict(self.integer_max)

    def lp_max_map(self):
        return dict(self.lp_max)

    def to_json(self):
        return {
            "type": str(self.dtype),
            "n": self.n,
            "J": list(self.J),
            "status": self.status,
            "witnesses": [
                {vertex_to_name(v): val for v, val in sorted(w.items(), key=lambda kv: vertex_key(kv[0]))}
                for w in self.witnesses
            ],
            "integer_max": {str(v): val for v, val in self.integer_max},
            "lp_max": {str(v): str(val) for v, val in self.lp_max},
        }


def verify_bound(t, n, J):
    """Certify v_j <= n*delta_j off J over every integer point of the system."""
    system = build_system(t, n, J)
    quiver = build_framed_quiver(t)
    points = integer_enumerate(system)
    witnesses = []
    maxima = {v: 0 for v in system.unknowns}
    for point in points:
        for v in system.unknowns:
            if point[v] > maxima[v]:
                maxima[v] = point[v]
        if any(point[v] > n * quiver.delta[v] for v in system.unknowns):
            full = dict(system.pinned_map())
            full.update(point)
            witnesses.append(full)
    lp_values = tuple((v, lp_max(system, v)) for v in system.unknowns)
    status = "verified" if not witnesses else "counterexample"
    return VerificationReport(t, n, tuple(sorted(J)), status, tuple(witnesses),
                              tuple(sorted(maxima.items())), lp_values)


def _verify_bound_job(args):
    t, n, J = args
    return verify_bound(t, n, J)


def all_nonempty_subsets(t):
    vertices = t.unframed_vertices
    subsets = [frozenset()]
    for v in vertices:
        subsets += [s | {v} for s in subsets]
    subsets = [s for s in subsets if s]
    return sorted(subsets, key=lambda s: (len(s), sorted(s)))


def verify_all(t, n, workers=1):
    """Reports for every nonempty J, in canonical order."""
    jobs = [(t, n, J) for J in all_nonempty_subsets(t)]
    if workers > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(_verify_bound_job, jobs))
    return [_verify_bound_job(job) for job in jobs]


def summarize(reports):
    verified = sum(1 for rep in reports if rep.verified)
    return "verified %d/%d" % (verified, len(reports))
