"""Formal characters as integer lattices in Z^N, up to coordinate permutation.

Normal form convention: row-style Hermite normal form. Nonzero rows only,
pivot columns strictly increasing, each pivot positive, entries above a
pivot reduced into [0, pivot), entries below a pivot zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import BudgetExceeded, SchemaError

CANON_MAX_N = 12


def hnf(rows):
    """Row-style Hermite normal form of an integer matrix (zero rows dropped)."""
    A = [list(map(int, r)) for r in rows]
    if not A:
        return []
    m, ncols = len(A), len(A[0])
    r = 0
    for c in range(ncols):
        if r == m:
            break
        # gcd-reduce column c over rows r..m-1
        while True:
            nz = [i for i in range(r, m) if A[i][c]]
            if not nz:
                break
            i_min = min(nz, key=lambda i: abs(A[i][c]))
            A[r], A[i_min] = A[i_min], A[r]
            done = True
            for i in range(r + 1, m):
                if A[i][c]:
                    q = A[i][c] // A[r][c]
                    A[i] = [x - q * y for x, y in zip(A[i], A[r])]
                    if A[i][c]:
                        done = False
            if done:
                break
        if A[r][c] == 0:
            continue
        if A[r][c] < 0:
            A[r] = [-x for x in A[r]]
        piv = A[r][c]
        for i in range(r):
            q = A[i][c] // piv
            if q:
                A[i] = [x - q * y for x, y in zip(A[i], A[r])]
        r += 1
    return [tuple(row) for row in A[:r]]


def annihilator_lattice(weights, n=None):
    """HNF basis of {m in Z^N : sum_j m_j w_j = 0}, weights given as an r x N matrix."""
    W = [list(map(int, row)) for row in weights]
    if n is None:
        if not W:
            raise ValueError("ambient dimension needed when there are no weight rows")
        n = len(W[0])
    if any(len(row) != n for row in W):
        raise SchemaError("weight rows must all have length N")
    r = len(W)
    aug = [[W[i][j] for i in range(r)] + [int(j == k) for k in range(n)] for j in range(n)]
    H = hnf(aug)
    kernel = [row[r:] for row in H if not any(row[:r])]
    return hnf(kernel)


def _projection_invariants(B, n):
    """Per-coordinate permutation invariants from the rational projection onto span(B)."""
    if not B:
        return [((Fraction(0),), ())] * n
    k = len(B)
    G = [[Fraction(sum(a * b for a, b in zip(B[i], B[j]))) for j in range(k)] for i in range(k)]
    # invert Gram matrix
    aug = [G[i] + [Fraction(int(i == j)) for j in range(k)] for i in range(k)]
    for c in range(k):
        piv = next(i for i in range(c, k) if aug[i][c] != 0)
        aug[c], aug[piv] = aug[piv], aug[c]
        inv = 1 / aug[c][c]
        aug[c] = [x * inv for x in aug[c]]
        for i in range(k):
            if i != c and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    Ginv = [row[k:] for row in aug]
    # Pi = B^T Ginv B
    GB = [[sum(Ginv[i][l] * B[l][j] for l in range(k)) for j in range(n)] for i in range(k)]
    Pi = [[sum(B[l][a] * GB[l][b] for l in range(k)) for b in range(n)] for a in range(n)]
    return [(Pi[a][a], tuple(sorted(Pi[a]))) for a in range(n)]


def _prefix(B, coords):
    proj = [[row[c] for c in coords] for row in B]
    return hnf(proj)


def _prefix_key(P, rank):
    k = len(P[0]) if P else 0
    rows = list(P) + [(0,) * k] * (rank - len(P))
    return tuple(rows[i][c] for c in range(k) for i in range(rank))


def canonical_basis(B, n):
    """Least HNF, read column by column, over coordinate orders that sort the invariants.

    Coordinates are first sorted by invariants of the orthogonal projection
    onto span(B); only orders respecting that sort are searched, so the
    result depends on the permutation orbit alone. Within it, branch and
    bound on prefixes: the first k columns of the HNF of a permuted basis
    are the HNF of its projection to those k coordinates. Partial orders
    reaching the same permuted lattice are merged.
    """
    B = hnf(B)
    if n > CANON_MAX_N:
        raise BudgetExceeded(f"permutation canonical form supports N <= {CANON_MAX_N}, got {n}")
    if not B:
        return []
    rank = len(B)
    inv = _projection_invariants(B, n)
    slot_class = sorted(inv)

    best = [None]
    best_order = [None]
    seen = set()

    def full_hnf(order):
        rest = sorted(set(range(n)) - set(order))
        full = list(order) + rest
        return tuple(hnf([[row[c] for c in full] for row in B]))

    def rec(order):
        k = len(order)
        if k == n:
            key = _prefix_key(_prefix(B, order), rank)
            if best[0] is None or key < best[0]:
                best[0] = key
                best_order[0] = list(order)
            return
        cls = slot_class[k]
        cands = []
        for j in range(n):
            if j in order or inv[j] != cls:
                continue
            nxt = order + [j]
            key = _prefix_key(_prefix(B, nxt), rank)
            cands.append((key, j))
        if not cands:
            return
        cands.sort()
        low = cands[0][0]
        for key, j in cands:
            if key != low:
                break
            if best[0] is not None and key > best[0][: len(key)]:
                break
            nxt = order + [j]
            state = (len(nxt), full_hnf(nxt))
            if state in seen:
                continue
            seen.add(state)
            rec(nxt)

    rec([])
    order = best_order[0]
    return list(hnf([[row[c] for c in order] for row in B]))


@dataclass(frozen=True)
class FormalCharacter:
    n: int
    basis: tuple  # canonical HNF rows
    canonical: bool = True

    def to_json(self):
        return {"n": self.n, "basis": [list(r) for r in self.basis], "canonical": self.canonical}

    @classmethod
    def from_json(cls, obj):
        try:
            n = int(obj["n"])
            rows = [list(map(int, r)) for r in obj["basis"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise SchemaError(f"bad formal character: {exc}") from exc
        if any(len(r) != n for r in rows):
            raise SchemaError("basis rows must have length n")
        return canonical_form(rows, n)


def canonical_form(basis, n) -> FormalCharacter:
    rows = [tuple(map(int, r)) for r in basis]
    if any(len(r) != n for r in rows):
        raise SchemaError("basis rows must have length n")
    return FormalCharacter(n, tuple(tuple(r) for r in canonical_basis(rows, n)), True)


def formal_character(weights, n) -> FormalCharacter:
    return canonical_form(annihilator_lattice(weights, n), n)


def same_formal_character(a: FormalCharacter, b: FormalCharacter) -> bool:
    if a.n != b.n:
        raise SchemaError(f"formal characters live in different dimensions ({a.n} vs {b.n})")
    ca = a if a.canonical else canonical_form(a.basis, a.n)
    cb = b if b.canonical else canonical_form(b.basis, b.n)
    return ca.basis == cb.basis


def bounded_by(weights, C) -> bool:
    return all(abs(int(x)) <= C for row in weights for x in row)
