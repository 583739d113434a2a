"""Cartan matrices of the simple types, built from Bourbaki simple roots."""

from __future__ import annotations

import functools
from fractions import Fraction

TYPE_ORDER = "ABCDEFG"


def _vec(n, entries):
    v = [Fraction(0)] * n
    for i, c in entries:
        v[i] = Fraction(c)
    return v


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def _from_roots(roots):
    r = len(roots)
    return tuple(
        tuple(int(2 * _dot(roots[i], roots[j]) / _dot(roots[i], roots[i])) for j in range(r))
        for i in range(r)
    )


def _from_graph(r, edges):
    A = [[2 if i == j else 0 for j in range(r)] for i in range(r)]
    for a, b in edges:
        A[a][b] = A[b][a] = -1
    return tuple(tuple(row) for row in A)


def _chain(n, dim):
    return [_vec(dim, [(i, 1), (i + 1, -1)]) for i in range(n)]


@functools.lru_cache(maxsize=None)
def cartan_matrix(kind: str, rank: int):
    """A[i][j] = <alpha_j, alpha_i^vee> for the Bourbaki numbering."""
    if kind == "A" and rank >= 1:
        return _from_roots(_chain(rank, rank + 1))
    if kind == "B" and rank >= 2:
        return _from_roots(_chain(rank - 1, rank) + [_vec(rank, [(rank - 1, 1)])])
    if kind == "C" and rank >= 3:
        return _from_roots(_chain(rank - 1, rank) + [_vec(rank, [(rank - 1, 2)])])
    if kind == "D" and rank >= 4:
        return _from_roots(_chain(rank - 1, rank) + [_vec(rank, [(rank - 2, 1), (rank - 1, 1)])])
    if kind == "E" and rank in (6, 7, 8):
        edges = [(0, 2), (1, 3), (2, 3)] + [(i, i + 1) for i in range(3, rank - 1)]
        return _from_graph(rank, edges)
    if kind == "F" and rank == 4:
        h = Fraction(1, 2)
        roots = [
            _vec(4, [(1, 1), (2, -1)]),
            _vec(4, [(2, 1), (3, -1)]),
            _vec(4, [(3, 1)]),
            _vec(4, [(0, h), (1, -h), (2, -h), (3, -h)]),
        ]
        return _from_roots(roots)
    if kind == "G" and rank == 2:
        return _from_roots([_vec(3, [(0, 1), (1, -1)]), _vec(3, [(0, -2), (1, 1), (2, 1)])])
    raise ValueError(f"no simple type {kind}{rank}")


def types_of_rank(r: int):
    out = [("A", r)]
    if r >= 2:
        out.append(("B", r))
    if r >= 3:
        out.append(("C", r))
    if r >= 4:
        out.append(("D", r))
    if r in (6, 7, 8):
        out.append(("E", r))
    if r == 4:
        out.append(("F", 4))
    if r == 2:
        out.append(("G", 2))
    return out


def match_component(A, idx):
    """Find (kind, rank, ordering) with A restricted to ``ordering`` equal to a catalog matrix."""
    r = len(idx)
    for kind, rank in types_of_rank(r):
        C = cartan_matrix(kind, rank)
        perm = _match(A, idx, C)
        if perm is not None:
            return kind, rank, perm
    raise ValueError("Cartan matrix matches no simple type")


def _match(A, idx, C):
    r = len(idx)
    chosen = []
    used = set()

    def rec(k):
        if k == r:
            return True
        for cand in idx:
            if cand in used:
                continue
            if A[cand][cand] != C[k][k]:
                continue
            if all(A[chosen[j]][cand] == C[j][k] and A[cand][chosen[j]] == C[k][j] for j in range(k)):
                chosen.append(cand)
                used.add(cand)
                if rec(k + 1):
                    return True
                chosen.pop()
                used.discard(cand)
        return False

    return list(chosen) if rec(0) else None


def type_name(kind, rank) -> str:
    return f"{kind}{rank}"


def parse_type(name: str):
    name = name.strip().replace("_", "")
    if len(name) < 2 or name[0] not in TYPE_ORDER or not name[1:].isdigit():
        raise ValueError(f"bad simple type {name!r}")
    kind, rank = name[0], int(name[1:])
    cartan_matrix(kind, rank)  # validates
    return kind, rank


def type_sort_key(name: str):
    kind, rank = parse_type(name)
    return (TYPE_ORDER.index(kind), rank)
