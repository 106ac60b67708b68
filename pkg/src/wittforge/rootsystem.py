"""Root systems generated from Cartan matrices.

Used as an independent oracle for the closed-form Lie data table: the
dimension is ``rank + #roots`` and the dual Coxeter number is one plus the
sum of the comarks of the highest root.
"""
from __future__ import annotations

from fractions import Fraction


def cartan_matrix(family: str, rank: int) -> list[list[int]]:
    """Cartan matrix with ``A[i][j] = 2 (a_i, a_j) / (a_i, a_i)``.

    Bourbaki numbering: for B the last simple root is short, for C it is long,
    for D the last two roots branch off node rank-2, for E the branch node
    is attached to root 4 through root 2, for F roots 3, 4 are short, for G
    root 1 is short.
    """
    n = rank
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i, j, aij=-1, aji=-1):
        a[i][j] = aij
        a[j][i] = aji

    if family == "A":
        for i in range(n - 1):
            link(i, i + 1)
    elif family == "B":
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 2, n - 1, -1, -2)  # a_n short
    elif family == "C":
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 2, n - 1, -2, -1)  # a_n long
    elif family == "D":
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 3, n - 1)
    elif family == "E":
        link(0, 2)
        link(1, 3)
        for i in range(2, n - 1):
            link(i, i + 1)
    elif family == "F":
        link(0, 1)
        link(1, 2, -1, -2)  # a_3 short
        link(2, 3)
    elif family == "G":
        link(0, 1, -3, -1)  # a_1 short
    else:
        raise ValueError(f"unknown family {family}")
    return a


def _root_norms(a):
    """(a_i, a_i) up to a common scale, from the symmetrizability of A."""
    n = len(a)
    norms = [None] * n
    norms[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(n):
            if a[i][j] and norms[j] is None:
                # (a_i, a_j) = A_ij (a_i,a_i)/2 = A_ji (a_j,a_j)/2
                norms[j] = norms[i] * Fraction(a[i][j], a[j][i])
                stack.append(j)
    return norms


def positive_roots(a) -> list[tuple[int, ...]]:
    """Positive roots in simple-root coordinates, by height."""
    n = len(a)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    roots = set(simple)
    layer = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            for i in range(n):
                # <beta, a_i^vee> = sum_j k_j A_ij
                pairing = sum(beta[j] * a[i][j] for j in range(n))
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in roots:
                        p += 1
                    else:
                        break
                if p - pairing > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in roots:
                        roots.add(up)
                        nxt.append(up)
        layer = nxt
    return sorted(roots, key=lambda r: (sum(r), r))


def lie_data_from_roots(family: str, rank: int) -> tuple[int, int]:
    """(dim, dual Coxeter number) computed from the root system."""
    a = cartan_matrix(family, rank)
    roots = positive_roots(a)
    theta = roots[-1]
    norms = _root_norms(a)
    n = len(a)
    theta_norm = sum(theta[i] * theta[j] * a[i][j] * norms[i] / 2 for i in range(n) for j in range(n))
    comarks = [theta[i] * norms[i] / theta_norm for i in range(n)]
    h_dual = 1 + sum(comarks)
    if h_dual.denominator != 1:
        raise ArithmeticError(f"non-integral dual Coxeter number for {family}{rank}")
    return rank + 2 * len(roots), int(h_dual)
