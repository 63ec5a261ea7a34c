"""Quantum mutation of seeds.

The compatible pair mutates through the E/F matrices; the cluster mutates
through the rescaled exchange relation

    X*_k X_k = q^h ( q^(-1) X'_k + X''_k ),    h = [T*_k, T_k],

where X'_k and X''_k are the rescaled monomials attached to the two middle
terms of the exchange sequences (multiplicities -b_jk < 0 and b_jk > 0).
Expansions are kept in the fixed initial frame, so the new variable is the
right-division of the relation's right-hand side by the old expansion; the
Laurent phenomenon guarantees exactness, and a division failure aborts the
run as an engine error.

Hom-space dimensions between seed summands are recovered from dimension
vectors and the tracked commutation matrix:

    [T_i, T_j] = ((dim T_i, dim T_j) + lam_ij) / 2   (i != j),
    [T, T] = (dim T, dim T) / 2,

with [T*_k, T_k] computed as sum_{b_jk > 0} b_jk [T_j, T_k] - [T_k, T_k]
since T*_k and T_k never coexist in a seed.
"""

from __future__ import annotations

from .qarith import LaurentPoly
from .qtorus import TorusElement
from .rootsys import InputError, RootVector
from .seed import ExchangeMatrix, LambdaMatrix, QuantumSeed


class ParityError(ArithmeticError):
    """(dim T_i, dim T_j) + lam_ij came out odd: an invariant breach."""


class FrozenPositionError(ValueError):
    """Mutation requested at a frozen (final-occurrence) position."""


def mutate_pair(L: LambdaMatrix, B: ExchangeMatrix, k: int):
    """One compatible-pair mutation: L' = E^T L E, B' = E B F."""
    if k not in B.mutable:
        raise FrozenPositionError(f"position {k} is frozen")
    r = L.r
    bk = B.column(k)
    # E differs from the identity only in column k.
    ecol = [max(0, -bk[i]) for i in range(r)]
    ecol[k - 1] = -1

    rows = []
    for i in range(1, r + 1):
        row = []
        for j in range(1, r + 1):
            # (E^T L E)_ij = sum_{s,t} E_si L_st E_tj; E is identity except
            # in column k, so each index ranges over one or few sources.
            val = 0
            src_i = [(i, 1)] if i != k else [(s + 1, ecol[s]) for s in range(r) if ecol[s]]
            src_j = [(j, 1)] if j != k else [(t + 1, ecol[t]) for t in range(r) if ecol[t]]
            for s, cs in src_i:
                for t, ct in src_j:
                    val += cs * ct * L.entry(s, t)
            row.append(val)
        rows.append(tuple(row))
    L2 = LambdaMatrix(tuple(rows))

    # B' = E B F; F differs from the identity only in row k (mutable indices).
    cols2 = []
    for j in B.mutable:
        if j == k:
            src = [(k, -1)]
        else:
            fkj = max(0, B.entry(k, j))
            src = [(j, 1)] + ([(k, fkj)] if fkj else [])
        col = [0] * r
        for (j2, cf) in src:
            cj = B.column(j2)
            for i in range(r):
                col[i] += cf * cj[i]
        # multiply by E on the left: row i of E B is b_ij for i != k plus
        # correction through column k; E acts as x -> E x on columns.
        newcol = [0] * r
        for i in range(r):
            if i == k - 1:
                newcol[i] = -col[k - 1]
            else:
                newcol[i] = col[i] + ecol[i] * col[k - 1]
        cols2.append(tuple(newcol))
    B2 = ExchangeMatrix(B.r, B.mutable, tuple(cols2))
    B2.principal_skew_check()
    return L2, B2


def hom_dim(seed: QuantumSeed, i: int, j: int) -> int:
    """dim Hom between the summands at positions i and j of the seed."""
    di, dj = seed.dims[i - 1], seed.dims[j - 1]
    if i == j:
        val = seed.cartan.sym(di, di)
        if val % 2:
            raise ParityError(f"(dim, dim) odd at position {i}")
        return val // 2
    val = seed.cartan.sym(di, dj) + seed.L.entry(i, j)
    if val % 2:
        raise ParityError(f"parity breach between positions {i} and {j}")
    if val < 0:
        raise ParityError(f"negative Hom dimension between positions {i} and {j}")
    return val // 2


def y_monomial(seed: QuantumSeed, a) -> TorusElement:
    """The rescaled cluster monomial q^(-alpha(a)) X_1^(a_1) .. X_r^(a_r)
    on the current cluster, with
    alpha(a) = sum_{i<j} a_i a_j [T_i, T_j] + sum_i C(a_i, 2) [T_i, T_i]."""
    a = tuple(a)
    if len(a) != seed.r or any(x < 0 for x in a):
        raise InputError("multiplicity vector must be a length-r vector over N")
    alpha = 0
    for i in range(1, seed.r + 1):
        ai = a[i - 1]
        if ai == 0:
            continue
        alpha += ai * (ai - 1) // 2 * hom_dim(seed, i, i)
        for j in range(i + 1, seed.r + 1):
            if a[j - 1]:
                alpha += ai * a[j - 1] * hom_dim(seed, i, j)
    out = TorusElement.one(seed.frame).scale(LaurentPoly.q_power(-alpha))
    for k in range(1, seed.r + 1):
        for _ in range(a[k - 1]):
            out = out * seed.cluster[k - 1]
    return out


def exchange_terms(seed: QuantumSeed, k: int):
    """The pieces of the exchange at k: (h, up, down) with h = [T*_k, T_k],
    up/down the multiplicity vectors of the two exchange-sequence middles
    (b_jk > 0 and b_jk < 0 sides respectively)."""
    if k not in seed.B.mutable:
        raise FrozenPositionError(f"position {k} is frozen")
    col = seed.B.column(k)
    up = tuple(max(0, col[j]) if j != k - 1 else 0 for j in range(seed.r))
    down = tuple(max(0, -col[j]) if j != k - 1 else 0 for j in range(seed.r))
    h = sum(
        col[j - 1] * hom_dim(seed, j, k)
        for j in range(1, seed.r + 1)
        if col[j - 1] > 0
    ) - hom_dim(seed, k, k)
    return h, up, down


def mutate_seed(seed: QuantumSeed, k: int, new_label=None) -> QuantumSeed:
    """Mutate the seed at position k, returning a new validated seed.

    The new variable's expansion is ( q^h (q^(-1) Y_down + Y_up) ) / X_k by
    exact right division, where Y_down uses the -b_jk < 0 multiplicities
    (the sequence 0 -> T_k -> T'_k -> T*_k -> 0) and Y_up the b_jk > 0 ones.
    """
    h, up, down = exchange_terms(seed, k)
    rhs_inner = y_monomial(seed, down).scale(LaurentPoly.q_power(-1)) + y_monomial(
        seed, up
    )
    rhs = rhs_inner.scale(LaurentPoly.q_power(h))
    new_var = rhs.right_divide_exact(seed.cluster[k - 1])

    col = seed.B.column(k)
    n = seed.cartan.n
    acc = [0] * n
    for j in range(seed.r):
        m = max(0, -col[j])
        if m:
            for t in range(n):
                acc[t] += m * seed.dims[j].coords[t]
    new_dim = RootVector(tuple(acc)) - seed.dims[k - 1]

    L2, B2 = mutate_pair(seed.L, seed.B, k)
    cluster = list(seed.cluster)
    cluster[k - 1] = new_var
    dims = list(seed.dims)
    dims[k - 1] = new_dim
    labels = list(seed.labels)
    labels[k - 1] = new_label
    return QuantumSeed(
        word=seed.word,
        cartan=seed.cartan,
        frame=seed.frame,
        cluster=tuple(cluster),
        L=L2,
        B=B2,
        dims=tuple(dims),
        labels=tuple(labels),
    ).validate()
