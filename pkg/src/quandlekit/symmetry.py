"""Groups and semigroups of translations, transitivity predicates,
quandle polynomial, isomorphism testing and exhaustive enumeration.

Permutations and transformations are image tuples: ``f[i]`` is the image
of ``i``.  ``compose(f, g)`` applies ``g`` first.
"""

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .errors import CapacityError, NotInvariantError, QuandleKitError
from .quandles import (
    Quandle,
    left_translation,
    orbits,
    partition_type,
    right_translation,
    validate_table,
)

DEFAULT_CLOSURE_CAP = 10**7
DEFAULT_ENUM_BOUND = 6
CANONICAL_MAX_N = 8


def compose(f, g):
    """f after g."""
    return tuple(f[x] for x in g)


def inverse(p):
    inv = [0] * len(p)
    for i, v in enumerate(p):
        inv[v] = i
    return tuple(inv)


def identity(n):
    return tuple(range(n))


@dataclass(frozen=True)
class GeneratedGroup:
    generators: tuple
    elements: frozenset

    def __len__(self):
        return len(self.elements)


@dataclass(frozen=True)
class GeneratedSemigroup:
    generators: tuple
    elements: frozenset

    def __len__(self):
        return len(self.elements)


def _closure(gens, with_identity, cap):
    """Breadth-first closure under composition.

    For permutation generators of a finite set this also yields closure
    under inverses, since every element has finite order.
    """
    gens = tuple(dict.fromkeys(gens))
    elements = set(gens)
    if with_identity and gens:
        elements.add(identity(len(gens[0])))
    frontier = list(elements)
    while frontier:
        new = []
        for f in frontier:
            for g in gens:
                h = compose(f, g)
                if h not in elements:
                    elements.add(h)
                    new.append(h)
                    if len(elements) > cap:
                        raise CapacityError("closure exceeded cap %d" % cap)
        frontier = new
    return elements


def inner_group(x, cap=DEFAULT_CLOSURE_CAP):
    """Inn(X): closure of the right translations under composition."""
    gens = tuple(right_translation(x, j) for j in range(x.n))
    for g in gens:
        # axiom III makes every column an automorphism; cheap sanity assert
        for i in range(x.n):
            for j in range(x.n):
                if g[x.table[i][j]] != x.table[g[i]][g[j]]:
                    raise QuandleKitError("right translation is not an automorphism; not a quandle")
    return GeneratedGroup(generators=gens, elements=frozenset(_closure(gens, True, cap)))


def left_semigroup(x, cap=DEFAULT_CLOSURE_CAP):
    """H_X: semigroup generated by the left translations (no identity added)."""
    gens = tuple(left_translation(x, i) for i in range(x.n))
    return GeneratedSemigroup(generators=gens, elements=frozenset(_closure(gens, False, cap)))


def restricted_action(elements, subset):
    """Restrict each self-map to an invariant subset, reindexed to subset coordinates."""
    subset = tuple(subset)
    pos = {v: i for i, v in enumerate(subset)}
    out = []
    for f in elements:
        images = []
        for v in subset:
            w = f[v]
            if w not in pos:
                raise NotInvariantError("subset %r is not invariant under %r" % (subset, f))
            images.append(pos[w])
        out.append(tuple(images))
    return out


def is_2transitive(elements, m):
    """Direct 2-transitivity check over ordered pairs of distinct points.

    Works for any collection of self-maps of [0,m); vacuously true for
    m <= 1.  Diagonal pairs are excluded on both sides: if they were
    included, no action would ever count as 2-transitive.
    """
    if m <= 1:
        return True
    elements = list(elements)
    needed = m * (m - 1)
    for x1 in range(m):
        for y1 in range(m):
            if x1 == y1:
                continue
            seen = set()
            for f in elements:
                a, b = f[x1], f[y1]
                if a != b:
                    seen.add((a, b))
            if len(seen) < needed:
                return False
    return True


def _pair_orbit_count(gens, m):
    """Number of orbits on ordered pairs of distinct points under the group
    generated by gens (permutations of [0,m))."""
    seen = set()
    count = 0
    for x in range(m):
        for y in range(m):
            if x == y or (x, y) in seen:
                continue
            count += 1
            stack = [(x, y)]
            seen.add((x, y))
            while stack:
                a, b = stack.pop()
                for g in gens:
                    p = (g[a], g[b])
                    if p not in seen:
                        seen.add(p)
                        stack.append(p)
    return count


def _semigroup_pair_reachable(gens, m):
    """For each distinct ordered pair, the set of pairs reachable by >= 1
    generator applications (semigroup action, pairs may collapse)."""
    results = {}
    for x in range(m):
        for y in range(m):
            if x == y:
                continue
            reached = set()
            frontier = [(x, y)]
            while frontier:
                new = []
                for a, b in frontier:
                    for g in gens:
                        p = (g[a], g[b])
                        if p not in reached:
                            reached.add(p)
                            new.append(p)
                frontier = new
            results[(x, y)] = reached
    return results


def is_right_2transitive(x):
    """Inn(X) 2-transitive on X (distinct ordered pairs)."""
    if x.n <= 1:
        return True
    gens = [right_translation(x, j) for j in range(x.n)]
    return _pair_orbit_count(gens, x.n) == 1


def is_left_2transitive(x):
    """H_X 2-transitive on X (distinct ordered pairs)."""
    if x.n <= 1:
        return True
    gens = [left_translation(x, i) for i in range(x.n)]
    needed = {(a, b) for a in range(x.n) for b in range(x.n) if a != b}
    reach = _semigroup_pair_reachable(gens, x.n)
    return all(needed <= r for r in reach.values())


def is_right_orbit_2transitive(x):
    """Every restricted G_{X_i} 2-transitive on its orbit.

    G_{X_i} is generated by the restrictions of ALL right translations
    R_y (y in X) to the orbit X_i; singleton orbits are vacuous.
    """
    all_gens = [right_translation(x, j) for j in range(x.n)]
    for orb in orbits(x):
        if len(orb) <= 1:
            continue
        gens = restricted_action(all_gens, orb)
        if _pair_orbit_count(gens, len(orb)) != 1:
            return False
    return True


def is_left_orbit_2transitive(x):
    """Every orbit subquandle's left-translation semigroup 2-transitive on the orbit.

    Orbits are subquandles (x > y = R_y(x) stays in the orbit of x), so
    the left translations of elements of an orbit restrict to it.
    """
    for orb in orbits(x):
        m = len(orb)
        if m <= 1:
            continue
        pos = {v: i for i, v in enumerate(orb)}
        gens = [tuple(pos[x.table[i][j]] for j in orb) for i in orb]
        needed = {(a, b) for a in range(m) for b in range(m) if a != b}
        reach = _semigroup_pair_reachable(gens, m)
        if not all(needed <= r for r in reach.values()):
            return False
    return True


def is_left_peak_2transitive(x):
    """2-transitivity of the row semigroup measured at its peak idempotents.

    A peak idempotent is an idempotent of H_X whose image has maximal
    cardinality among all elements of H_X.  The predicate holds when some
    peak idempotent exists and its maximal subgroup (the unit group of
    eSe, acting on the image of e) is 2-transitive there; images of size
    one pass vacuously.  For a quandle whose rows generate a group this
    reduces to plain 2-transitivity of that group on X.
    """
    if x.n <= 1:
        return True
    h = left_semigroup(x)
    maxrank = max(len(set(f)) for f in h.elements)
    for e, group in maximal_subgroup_at_idempotents(h):
        image = len(set(e))
        if image == maxrank and is_2transitive(group.elements, image):
            return True
    return False


def _is_full_cycle_off_fixed_point(f, x, n):
    """True iff f fixes x and acts as a single (n-1)-cycle on the rest."""
    if f[x] != x:
        return False
    if n <= 1:
        return True
    start = 0 if x != 0 else 1
    seen = 1
    cur = f[start]
    while cur != start:
        if cur == x:
            return False
        seen += 1
        if seen > n:
            return False
        cur = f[cur]
    return seen == n - 1


def is_right_cyclic_type(x):
    """Every R_j is an (n-1)-cycle on the complement of j."""
    return all(_is_full_cycle_off_fixed_point(right_translation(x, j), j, x.n) for j in range(x.n))


def is_left_cyclic_type(x):
    """Every L_i is a bijection acting as an (n-1)-cycle off i."""
    for i in range(x.n):
        f = left_translation(x, i)
        if len(set(f)) != x.n:
            return False
        if not _is_full_cycle_off_fixed_point(f, i, x.n):
            return False
    return True


def maximal_subgroup_at_idempotents(s):
    """For each idempotent e of the semigroup, the group of units of eSe
    restricted to the image of e (reindexed to image coordinates)."""
    elements = sorted(s.elements)
    results = []
    for e in elements:
        if compose(e, e) != e:
            continue
        monoid = {compose(e, compose(f, e)) for f in elements}
        monoid.add(e)
        units = set()
        for g in monoid:
            for h in monoid:
                if compose(g, h) == e and compose(h, g) == e:
                    units.add(g)
                    break
        image = sorted(set(e))
        restricted = restricted_action(sorted(units), image)
        results.append((e, GeneratedGroup(generators=tuple(restricted), elements=frozenset(restricted))))
    return results


@dataclass(frozen=True)
class QuandlePolynomial:
    """Multiset of (r(x), c(x)) exponent pairs, one per element."""

    terms: tuple  # sorted tuple of (r, c) pairs, with repetition

    def counts(self):
        out = {}
        for t in self.terms:
            out[t] = out.get(t, 0) + 1
        return out

    def to_json(self):
        return [
            {"r": r, "c": c, "mult": m}
            for (r, c), m in sorted(self.counts().items())
        ]

    def __str__(self):
        parts = []
        for (r, c), m in sorted(self.counts().items(), reverse=True):
            coeff = "" if m == 1 else str(m)
            parts.append("%ss^%dt^%d" % (coeff, r, c))
        return " + ".join(parts) if parts else "0"


def quandle_polynomial(x):
    """qp_X: for each element, r = #{j : x>j = x} and c = #{i : i>x = i}."""
    terms = []
    for v in range(x.n):
        r = sum(1 for j in range(x.n) if x.table[v][j] == v)
        c = sum(1 for i in range(x.n) if x.table[i][v] == i)
        terms.append((r, c))
    return QuandlePolynomial(terms=tuple(sorted(terms)))


def _element_invariants(x):
    orbit_of = {}
    for orb in orbits(x):
        for v in orb:
            orbit_of[v] = len(orb)
    inv = []
    for v in range(x.n):
        r = sum(1 for j in range(x.n) if x.table[v][j] == v)
        c = sum(1 for i in range(x.n) if x.table[i][v] == i)
        inv.append((r, c, orbit_of[v]))
    return inv


def quandles_isomorphic(x, y):
    """Return a relabeling sigma with sigma(i>j) = sigma(i)>sigma(j), or None.

    Prunes by partition type, quandle polynomial and per-element
    invariants before backtracking.
    """
    if x.n != y.n:
        raise QuandleKitError("size mismatch: %d vs %d" % (x.n, y.n))
    if partition_type(x) != partition_type(y):
        return None
    if quandle_polynomial(x) != quandle_polynomial(y):
        return None
    n = x.n
    inv_x = _element_invariants(x)
    inv_y = _element_invariants(y)
    candidates = [[w for w in range(n) if inv_y[w] == inv_x[v]] for v in range(n)]
    sigma = [None] * n
    used = [False] * n

    def consistent(v):
        for i in range(n):
            if sigma[i] is None:
                continue
            for a, b in ((i, v), (v, i)):
                t = x.table[a][b]
                if sigma[t] is not None and y.table[sigma[a]][sigma[b]] != sigma[t]:
                    return False
        return True

    def backtrack(v):
        if v == n:
            return True
        for w in candidates[v]:
            if used[w]:
                continue
            sigma[v] = w
            used[w] = True
            if consistent(v) and backtrack(v + 1):
                return True
            sigma[v] = None
            used[w] = False
        return False

    if backtrack(0):
        return tuple(sigma)
    return None


def canonical_form(x):
    """Lexicographically minimal row-major table over all relabelings.

    Full search over n! relabelings with early lexicographic abort;
    deterministic and idempotent.
    """
    n = x.n
    if n > CANONICAL_MAX_N:
        raise CapacityError("canonical_form limited to n <= %d" % CANONICAL_MAX_N)
    t = x.table
    best = None
    for sigma in itertools.permutations(range(n)):
        inv = [0] * n
        for i, v in enumerate(sigma):
            inv[v] = i
        flat = []
        worse = False
        comparing = best is not None
        for a in range(n):
            ia = inv[a]
            for b in range(n):
                entry = sigma[t[ia][inv[b]]]
                if comparing:
                    cmp = best[len(flat)]
                    if entry > cmp:
                        worse = True
                        break
                    if entry < cmp:
                        comparing = False  # strictly better prefix
                flat.append(entry)
            if worse:
                break
        if not worse and not comparing:
            best = tuple(flat)
    return tuple(tuple(best[a * n:(a + 1) * n]) for a in range(n))


def _diagonal_fixing_perms(n, j):
    """All permutations of [0,n) fixing j, as column candidates."""
    rest = [i for i in range(n) if i != j]
    out = []
    for perm in itertools.permutations(rest):
        col = [0] * n
        col[j] = j
        for src, dst in zip(rest, perm):
            col[src] = dst
        out.append(tuple(col))
    return out


def _partial_axiom3_ok(t, n, c):
    """Check axiom III instances that became decidable when column c was placed."""
    for j in range(c + 1):
        for k in range(c + 1):
            m = t[j][k]
            if m > c:
                continue
            if j != c and k != c and m != c:
                continue
            for i in range(n):
                if t[t[i][j]][k] != t[t[i][k]][m]:
                    return False
    return True


@lru_cache(maxsize=None)
def enumerate_quandles(n, bound=DEFAULT_ENUM_BOUND):
    """All isomorphism classes of quandles of order n, as canonical representatives.

    Columns are filled left to right; each column is a permutation fixing
    its own index (axioms I-II by construction) with incremental axiom
    III pruning; classes deduplicated by canonical form.
    """
    if n > bound:
        raise CapacityError("enumeration bounded at n = %d (requested %d)" % (bound, n))
    if n < 1:
        raise CapacityError("enumeration needs n >= 1")
    columns = {j: _diagonal_fixing_perms(n, j) for j in range(n)}
    t = [[None] * n for _ in range(n)]
    found = set()

    def place(c):
        if c == n:
            found.add(canonical_form(Quandle(n, tuple(tuple(r) for r in t))))
            return
        for col in columns[c]:
            for i in range(n):
                t[i][c] = col[i]
            if _partial_axiom3_ok(t, n, c):
                place(c + 1)
        for i in range(n):
            t[i][c] = None

    place(0)
    return tuple(Quandle(n, tbl) for tbl in sorted(found))
