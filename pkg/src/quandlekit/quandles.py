"""Finite quandles: representation, standard families, validation, orbits.

A quandle of size n is stored as an n x n table of element indices with
``table[i][j] = i > j`` (the row element acted on by the column element).
Elements are 0-indexed throughout; serialized tables are 0-indexed too.
"""

import json
from dataclasses import dataclass
from math import gcd

from .errors import (
    AxiomViolationError,
    EmptyQuandleError,
    GroupAxiomError,
    MalformedTableError,
    NonUnitParameterError,
    QuandleKitError,
)

AXIOM_IDEMPOTENCE = "I"
AXIOM_RIGHT_INVERTIBLE = "II"
AXIOM_SELF_DISTRIBUTIVE = "III"


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: tuple  # of (axiom_id, witness_tuple)


def _check_shape(n, table):
    if n < 1:
        raise EmptyQuandleError("quandle size must be >= 1, got %d" % n)
    if len(table) != n:
        raise MalformedTableError("ragged-rows", "expected %d rows, got %d" % (n, len(table)))
    for i, row in enumerate(table):
        if len(row) != n:
            raise MalformedTableError("ragged-rows", "row %d has length %d, expected %d" % (i, len(row), n))
        for j, v in enumerate(row):
            if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < n:
                raise MalformedTableError(
                    "entry-out-of-range", "entry (%d,%d)=%r not an index in [0,%d)" % (i, j, v, n)
                )


def validate_table(n, table, max_witnesses=10):
    """Check the three quandle axioms, reporting up to max_witnesses per axiom.

    Raises MalformedTableError for structurally broken input; axiom
    violations are reported, not raised.
    """
    _check_shape(n, table)
    violations = []

    count = 0
    for i in range(n):
        if table[i][i] != i:
            violations.append((AXIOM_IDEMPOTENCE, (i,)))
            count += 1
            if count >= max_witnesses:
                break

    count = 0
    for j in range(n):
        seen = set(table[i][j] for i in range(n))
        if len(seen) != n:
            violations.append((AXIOM_RIGHT_INVERTIBLE, (j,)))
            count += 1
            if count >= max_witnesses:
                break

    count = 0
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if table[table[i][j]][k] != table[table[i][k]][table[j][k]]:
                    violations.append((AXIOM_SELF_DISTRIBUTIVE, (i, j, k)))
                    count += 1
                    if count >= max_witnesses:
                        break
            if count >= max_witnesses:
                break
        if count >= max_witnesses:
            break

    return ValidationReport(ok=not violations, violations=tuple(violations))


@dataclass(frozen=True)
class Quandle:
    """Immutable finite quandle; table[i][j] = i > j."""

    n: int
    table: tuple  # of tuples of int

    @staticmethod
    def from_table(table, validate=True):
        n = len(table)
        tbl = tuple(tuple(row) for row in table)
        if validate:
            report = validate_table(n, tbl)
            if not report.ok:
                raise AxiomViolationError(
                    "table violates quandle axioms: %s" % (report.violations[:3],),
                    violations=report.violations,
                )
        return Quandle(n=n, table=tbl)

    def op(self, i, j):
        return self.table[i][j]

    def __mul__(self, other):
        return disjoint_union(self, other)


def trivial_quandle(n):
    """Quandle with i > j = i."""
    if n < 1:
        raise EmptyQuandleError("trivial quandle needs n >= 1")
    return Quandle(n, tuple(tuple(i for _ in range(n)) for i in range(n)))


def dihedral_quandle(n):
    """Dihedral quandle on Z_n: i > j = 2j - i (mod n)."""
    if n < 1:
        raise EmptyQuandleError("dihedral quandle needs n >= 1")
    return Quandle(n, tuple(tuple((2 * j - i) % n for j in range(n)) for i in range(n)))


def alexander_quandle(n, t):
    """Alexander quandle on Z_n: i > j = t*i + (1-t)*j (mod n); t must be a unit."""
    if n < 1:
        raise EmptyQuandleError("alexander quandle needs n >= 1")
    t = t % n if n > 1 else 0
    if n > 1 and gcd(t, n) != 1:
        raise NonUnitParameterError("t=%d is not a unit mod %d" % (t, n))
    return Quandle(n, tuple(tuple((t * i + (1 - t) * j) % n for j in range(n)) for i in range(n)))


def _validate_group(cayley):
    n = len(cayley)
    if n == 0:
        raise GroupAxiomError("empty Cayley table")
    for row in cayley:
        if len(row) != n:
            raise GroupAxiomError("Cayley table is not square")
        for v in row:
            if not 0 <= v < n:
                raise GroupAxiomError("Cayley entry out of range")
    identity = None
    for e in range(n):
        if all(cayley[e][j] == j for j in range(n)) and all(cayley[i][e] == i for i in range(n)):
            identity = e
            break
    if identity is None:
        raise GroupAxiomError("no identity element")
    inverse = [None] * n
    for i in range(n):
        for j in range(n):
            if cayley[i][j] == identity and cayley[j][i] == identity:
                inverse[i] = j
                break
        if inverse[i] is None:
            raise GroupAxiomError("element %d has no inverse" % i)
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if cayley[cayley[a][b]][c] != cayley[a][cayley[b][c]]:
                    raise GroupAxiomError("associativity fails at (%d,%d,%d)" % (a, b, c))
    return identity, inverse


def conjugation_quandle(cayley):
    """Conj(G): i > j = j^-1 * i * j, from a validated group Cayley table."""
    _, inverse = _validate_group(cayley)
    n = len(cayley)
    return Quandle(
        n, tuple(tuple(cayley[cayley[inverse[j]][i]][j] for j in range(n)) for i in range(n))
    )


def core_quandle(cayley):
    """Core(G): i > j = j * i^-1 * j, from a validated group Cayley table."""
    _, inverse = _validate_group(cayley)
    n = len(cayley)
    return Quandle(
        n, tuple(tuple(cayley[cayley[j][inverse[i]]][j] for j in range(n)) for i in range(n))
    )


def disjoint_union(x, y):
    """Disjoint union: blocks replicate X and Y, cross products return the left argument."""
    n, m = x.n, y.n
    size = n + m
    table = [[0] * size for _ in range(size)]
    for i in range(size):
        for j in range(size):
            if i < n and j < n:
                table[i][j] = x.table[i][j]
            elif i >= n and j >= n:
                table[i][j] = y.table[i - n][j - n] + n
            else:
                table[i][j] = i
    return Quandle(size, tuple(tuple(row) for row in table))


def orbits(x):
    """Orbit partition of [0,n) under Inn(X), as a sorted tuple of sorted tuples.

    Columns are bijections of a finite set, so closure under the columns
    alone already yields the Inn(X)-orbits.
    """
    n = x.n
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for j in range(n):
        for i in range(n):
            a, b = find(i), find(x.table[i][j])
            if a != b:
                parent[a] = b
    groups = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    return tuple(sorted(tuple(sorted(g)) for g in groups.values()))


def partition_type(x):
    """lambda[j-1] = number of orbits of cardinality j, for 1 <= j <= n."""
    lam = [0] * x.n
    for orb in orbits(x):
        lam[len(orb) - 1] += 1
    return tuple(lam)


def right_translation(x, j):
    """R_j: i -> i > j, a permutation of [0,n)."""
    if not 0 <= j < x.n:
        raise QuandleKitError("index %d out of range" % j)
    return tuple(x.table[i][j] for i in range(x.n))


def left_translation(x, i):
    """L_i: j -> i > j, an arbitrary self-map of [0,n)."""
    if not 0 <= i < x.n:
        raise QuandleKitError("index %d out of range" % i)
    return tuple(x.table[i])


def to_json_dict(x):
    return {"n": x.n, "table": [list(row) for row in x.table]}


def from_json_dict(d, validate=True):
    if not isinstance(d, dict) or "n" not in d or "table" not in d:
        raise MalformedTableError("bad-structure", "expected an object with 'n' and 'table'")
    n = d["n"]
    table = d["table"]
    if not isinstance(n, int) or not isinstance(table, list):
        raise MalformedTableError("bad-structure", "'n' must be an int and 'table' a list")
    _check_shape(n, table)
    return Quandle.from_table(table, validate=validate)


def dumps(x):
    return json.dumps(to_json_dict(x), sort_keys=True)


def loads(text, validate=True):
    try:
        d = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedTableError("bad-structure", "invalid JSON: %s" % exc) from exc
    return from_json_dict(d, validate=validate)
