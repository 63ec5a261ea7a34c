"""The quantum determinantal recursion (a q-analogue of a T-system).

For same-letter positions b < d with letter i, the minors D(b, d) satisfy

    q^A D(b,d) D(b-,d-) = q^(B-1) D(b,d-) D(b-,d)
                          + q^C prod_{j != i, ascending} D(b-(j), d-(j))^(-a_ij)

with integer exponents

    A = ( mu(d,i),  mu(b-,i) - mu(d-,i) ),
    B = ( mu(d-,i), mu(b-,i) - mu(d,i)  ),
    C = sum_{j<k, j != i != k}  a_ij a_ik ( mu(d,j), mu(b,k) - mu(d,k) )
        + sum_{j != i} C(-a_ij, 2) ( mu(d,j), mu(b,j) - mu(d,j) ).

Two independent constructions of the full minor table are provided:

* run_schedule drives the seed through one mutation per pair (b, d), taken
  in lexicographic order (which realizes every recursion dependency), and
  reads each minor off as the new cluster variable;
* solve_direct computes each minor from the recursion itself by exact right
  division, never touching the mutation machinery.

Their bit-exact agreement is the engine's strongest internal check.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .qarith import LaurentPoly
from .qtorus import TorusElement, TorusFrame
from .rootsys import CartanMatrix, InputError, MuTable, ReducedWord, RootVector, index_maps
from .mutation import mutate_seed
from .seed import QuantumSeed, initial_seed


class ScheduleError(RuntimeError):
    """A required interval label is absent from the current seed."""


@dataclass
class MinorTable:
    """The map (b, d) -> torus expansion of the unipotent quantum minor D(b, d).

    Entries cover b = 0 (flag minors, the initial cluster variables) and all
    same-letter pairs 1 <= b < d <= r; D(b, b) = 1 by convention.
    """

    word: ReducedWord
    cartan: CartanMatrix
    frame: TorusFrame
    entries: dict

    def get(self, b: int, d: int) -> TorusElement:
        if b == d:
            return TorusElement.one(self.frame)
        return self.entries[(b, d)]

    def pairs(self):
        return sorted(self.entries)

    def to_json(self) -> dict:
        return {
            f"{b},{d}": self.entries[(b, d)].to_json() for b, d in sorted(self.entries)
        }


def valid_pairs(word: ReducedWord) -> list:
    """All (b, d) with 1 <= b < d <= r and i_b = i_d, in lexicographic order."""
    out = []
    for b in range(1, word.r + 1):
        for d in range(b + 1, word.r + 1):
            if word.letter(b) == word.letter(d):
                out.append((b, d))
    return out


def exponents_ABC(word: ReducedWord, cartan: CartanMatrix, b: int, d: int, mt: MuTable = None):
    """The exponents (A, B, C) and the ordered factor list of the recursion
    at the pair (b, d).

    The factor list holds (b-(j), d-(j), -a_ij) for j != i in ascending j;
    factors with multiplicity 0 are dropped (and equal endpoints contribute
    the unit minor D(x, x) = 1).
    """
    if not (0 <= b < d <= word.r):
        raise InputError(f"pair ({b},{d}) out of range")
    i = word.letter(d)
    if b > 0 and word.letter(b) != i:
        raise InputError(f"pair ({b},{d}) mixes letters {word.letter(b)} and {i}")
    mt = mt or MuTable(word, cartan)
    imap = index_maps(word)
    bm = imap.b_minus(b, i) if b > 0 else 0
    dm = imap.k_minus[d - 1]
    A = cartan.pairing(mt.mu(d, i), mt.mu_diff(bm, dm, i))
    B = cartan.pairing(mt.mu(dm, i), mt.mu_diff(bm, d, i))
    C = 0
    n = cartan.n
    others = [j for j in range(1, n + 1) if j != i]
    for x in range(len(others)):
        j = others[x]
        aij = cartan.a(i, j)
        for y in range(x + 1, len(others)):
            k2 = others[y]
            aik = cartan.a(i, k2)
            if aij and aik:
                C += aij * aik * cartan.pairing(mt.mu(d, j), mt.mu_diff(b, d, k2))
        if aij:
            C += comb(-aij, 2) * cartan.pairing(mt.mu(d, j), mt.mu_diff(b, d, j))
    factors = []
    for j in others:
        m = -cartan.a(i, j)
        if m > 0:
            factors.append((imap.b_minus(b, j), imap.b_minus(d, j), m))
    return A, B, C, factors


def _recursion_rhs(table: MinorTable, b: int, d: int, mt: MuTable):
    """q^(B-1) D(b,d-) D(b-,d) + q^C prod D(b-(j),d-(j))^m, and the exponent A."""
    word, cartan = table.word, table.cartan
    imap = index_maps(word)
    i = word.letter(d)
    bm = imap.b_minus(b, i) if b > 0 else 0
    dm = imap.k_minus[d - 1]
    A, B, C, factors = exponents_ABC(word, cartan, b, d, mt)
    first = (table.get(b, dm) * table.get(bm, d)).scale(LaurentPoly.q_power(B - 1))
    prod = TorusElement.one(table.frame)
    for (bj, dj, m) in factors:
        prod = prod * table.get(bj, dj) ** m
    rhs = first + prod.scale(LaurentPoly.q_power(C))
    return A, bm, dm, rhs


def run_schedule(seed: QuantumSeed):
    """Realize every minor as a cluster variable along the mutation schedule.

    Pairs (b, d) are visited in lexicographic order; the pair (b, d) mutates
    the position currently labeled (d-, b), relabels it (d, b+), and records
    the new variable as D(b, d).  Returns (table, final seed); the final
    seed's labels are the final same-letter intervals.
    """
    word, cartan = seed.word, seed.cartan
    imap = index_maps(word)
    entries = {}
    for d in range(1, word.r + 1):
        entries[(0, d)] = seed.cluster[d - 1]
    current = seed
    for (b, d) in valid_pairs(word):
        dm = imap.k_minus[d - 1]
        target = (dm, b)
        pos = current.position_of_label(target)
        if pos == 0:
            raise ScheduleError(
                f"pair ({b},{d}): no position carries the interval label {target}"
            )
        bp = imap.k_plus[b - 1]
        current = mutate_seed(current, pos, new_label=(d, bp))
        entries[(b, d)] = current.cluster[pos - 1]
    table = MinorTable(word, cartan, seed.frame, entries)
    return table, current


def solve_direct(word: ReducedWord, cartan: CartanMatrix, seed: QuantumSeed = None) -> MinorTable:
    """Build the minor table from the recursion alone.

    Flag minors D(0, d) are the initial cluster variables; each later minor
    is the right-division of the recursion's right-hand side by D(b-, d-),
    in the same lexicographic order as the schedule.
    """
    seed = seed or initial_seed(word, cartan)
    mt = MuTable(word, cartan)
    entries = {}
    for d in range(1, word.r + 1):
        entries[(0, d)] = seed.cluster[d - 1]
    table = MinorTable(word, cartan, seed.frame, entries)
    for (b, d) in valid_pairs(word):
        A, bm, dm, rhs = _recursion_rhs(table, b, d, mt)
        scaled = rhs.scale(LaurentPoly.q_power(-A))
        entries[(b, d)] = scaled.right_divide_exact(table.get(bm, dm))
    return table


def verify_identities(table: MinorTable):
    """Residuals q^A D(b,d) D(b-,d-) - RHS for every pair; all must vanish.

    Returns a list of ((b, d), residual TorusElement).
    """
    mt = MuTable(table.word, table.cartan)
    out = []
    for (b, d) in valid_pairs(table.word):
        A, bm, dm, rhs = _recursion_rhs(table, b, d, mt)
        lhs = (table.get(b, d) * table.get(bm, dm)).scale(LaurentPoly.q_power(A))
        out.append(((b, d), lhs - rhs))
    return out


def minor_degree(word: ReducedWord, cartan: CartanMatrix, b: int, d: int) -> RootVector:
    """deg D(b, d) = mu(b, i_d) - mu(d, i_d), an element of Q_+."""
    mt = MuTable(word, cartan)
    return mt.mu_diff(b, d, word.letter(d))


def pbw_generator_expansions(table: MinorTable) -> list:
    """The dual PBW generators D(k-, k) for k = 1..r, as torus elements."""
    imap = index_maps(table.word)
    return [
        table.get(imap.k_minus[k - 1], k) for k in range(1, table.word.r + 1)
    ]
