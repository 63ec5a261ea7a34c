"""Initial quantum seed construction from a Cartan matrix and reduced word.

The combinatorial layer produces, for a reduced word (i_1, .., i_r):

* the quiver on positions 1..r (ordinary arrows from the Cartan matrix,
  horizontal arrows to the previous same-letter position) and the exchange
  matrix B with one column per non-final position;
* the matrices R (r_kl = (beta_k, beta_l) below the diagonal), H (row k is
  the interval-multiplicity pattern of position k), and the commutation
  matrix L = H (R - R^T) H^T;
* the dimension vectors of the initial variables and of all same-letter
  intervals;
* the compatibility check sum_k b_kj lam_ki = d delta_ij, which must give
  d = 2 for every seed this construction produces.

Columns of B are indexed by the non-final positions themselves; no
relabeling to a trailing frozen block ever happens, so position/label
bookkeeping survives mutation unchanged.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .qarith import LaurentPoly
from .qtorus import TorusElement, TorusFrame
from .rootsys import (
    CartanMatrix,
    IndexMaps,
    InputError,
    MuTable,
    ReducedWord,
    RootVector,
    beta_roots,
    index_maps,
)


class CompatibilityError(ValueError):
    """The pair (L, B) fails sum_k b_kj lam_ki = d delta_ij."""

    def __init__(self, i, j, value, expected):
        self.offending = (i, j)
        super().__init__(
            f"compatibility fails at (i,j)=({i},{j}): got {value}, expected {expected}"
        )


@dataclass(frozen=True)
class LambdaMatrix:
    """A skew-symmetric integer matrix of q-commutation exponents."""

    rows: tuple

    def __post_init__(self):
        r = len(self.rows)
        for i in range(r):
            for j in range(r):
                if self.rows[i][j] != -self.rows[j][i]:
                    raise InputError("lambda matrix must be skew-symmetric")

    @property
    def r(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int) -> int:
        return self.rows[i - 1][j - 1]

    def to_json(self):
        return [list(row) for row in self.rows]


@dataclass(frozen=True)
class ExchangeMatrix:
    """Integer exchange matrix with columns at the mutable positions.

    cols maps each mutable position j to the full length-r column (b_ij)_i.
    """

    r: int
    mutable: tuple
    cols: tuple  # parallel to mutable

    def column(self, j: int) -> tuple:
        return self.cols[self.mutable.index(j)]

    def entry(self, i: int, j: int) -> int:
        return self.column(j)[i - 1]

    def principal_skew_check(self):
        for j in self.mutable:
            for i in self.mutable:
                if self.entry(i, j) != -self.entry(j, i):
                    raise InputError("principal part of B must be skew-symmetric")

    def to_json(self):
        return {"mutable": list(self.mutable), "cols": [list(c) for c in self.cols]}


def build_gamma_btilde(word: ReducedWord, cartan: CartanMatrix):
    """The quiver arrows on positions 1..r and the exchange matrix B.

    Ordinary arrows: |a_{i_s i_t}| arrows s -> t whenever i_s != i_t and
    t^+ >= s^+ > t > s.  Horizontal arrows: s -> s^- whenever s^- > 0.
    Then b_ij = #(j -> i) - #(i -> j), columns at non-final positions only.
    """
    beta_roots(word, cartan)  # validates reducedness
    imap = index_maps(word)
    r = word.r
    arrows = []
    for s in range(1, r + 1):
        for t in range(s + 1, r + 1):
            if word.letter(s) == word.letter(t):
                continue
            a = cartan.a(word.letter(s), word.letter(t))
            if a == 0:
                continue
            if imap.k_plus[t - 1] >= imap.k_plus[s - 1] > t:
                arrows.extend([(s, t)] * (-a))
        if imap.k_minus[s - 1] > 0:
            arrows.append((s, imap.k_minus[s - 1]))
    mutable = imap.mutable()
    cols = []
    for j in mutable:
        col = [0] * r
        for (s, t) in arrows:
            if s == j:
                col[t - 1] += 1
            elif t == j:
                col[s - 1] -= 1
        cols.append(tuple(col))
    B = ExchangeMatrix(r, mutable, tuple(cols))
    B.principal_skew_check()
    return arrows, B


def build_RHL(word: ReducedWord, cartan: CartanMatrix):
    """The matrices R, H and the initial commutation matrix L = H(R - R^T)H^T."""
    betas = beta_roots(word, cartan)
    r = word.r
    R = [[0] * r for _ in range(r)]
    for k in range(r):
        for l in range(r):
            if k == l:
                R[k][l] = 1
            elif k > l:
                R[k][l] = cartan.sym(betas[k], betas[l])
    H = [
        [
            1 if word.letter(j + 1) == word.letter(k + 1) and j <= k else 0
            for j in range(r)
        ]
        for k in range(r)
    ]
    S = [[R[i][j] - R[j][i] for j in range(r)] for i in range(r)]
    HS = [[sum(H[i][k] * S[k][j] for k in range(r)) for j in range(r)] for i in range(r)]
    L = [
        tuple(sum(HS[i][k] * H[j][k] for k in range(r)) for j in range(r))
        for i in range(r)
    ]
    return (
        tuple(tuple(row) for row in R),
        tuple(tuple(row) for row in H),
        LambdaMatrix(tuple(L)),
    )


def dim_vectors(word: ReducedWord, cartan: CartanMatrix) -> list:
    """Dimension vectors of the initial variables: dim V_k = w_{i_k} - mu(k, i_k)."""
    mt = MuTable(word, cartan)
    return [mt.mu_diff(0, k, word.letter(k)) for k in range(1, word.r + 1)]


def dim_interval(word: ReducedWord, cartan: CartanMatrix, l: int, k: int) -> RootVector:
    """dim M[l, k] = mu(k^-, j) - mu(l, j) for a same-letter interval (j = i_l)."""
    if word.letter(k) != word.letter(l):
        raise InputError(f"positions {k} and {l} carry different letters")
    imap = index_maps(word)
    mt = MuTable(word, cartan)
    return mt.mu_diff(imap.k_minus[k - 1], l, word.letter(l))


def check_compatible(L: LambdaMatrix, B: ExchangeMatrix) -> int:
    """Verify sum_k b_kj lam_ki = d delta_ij for one positive d; return d.

    A B with no mutable columns is vacuously compatible and reports the
    conventional d = 2 of this construction.
    """
    if not B.mutable:
        return 2
    d = None
    for j in B.mutable:
        col = B.column(j)
        for i in range(1, L.r + 1):
            val = sum(col[k - 1] * L.entry(k, i) for k in range(1, L.r + 1))
            if i == j:
                if val <= 0 or (d is not None and val != d):
                    raise CompatibilityError(i, j, val, d if d else "positive d")
                d = val
            elif val != 0:
                raise CompatibilityError(i, j, val, 0)
    return d


@dataclass(frozen=True)
class QuantumSeed:
    """A quantum seed tracked in the fixed initial frame.

    cluster[k] is the expansion of the current variable at position k+1 as
    a torus element of the initial frame; L and B are the current compatible
    pair; dims[k] the dimension vector of the current variable; labels[k]
    the interval tag (l, k) when the schedule knows it, else None.
    """

    word: ReducedWord
    cartan: CartanMatrix
    frame: TorusFrame
    cluster: tuple
    L: LambdaMatrix
    B: ExchangeMatrix
    dims: tuple
    labels: tuple

    @property
    def r(self) -> int:
        return self.word.r

    def mutable(self) -> tuple:
        return self.B.mutable

    def validate(self):
        d = check_compatible(self.L, self.B)
        if d != 2:
            raise CompatibilityError(0, 0, d, 2)
        for k, x in enumerate(self.cluster):
            degs = x.homogeneous_degrees()
            if degs != {self.dims[k]}:
                raise InputError(
                    f"cluster entry {k + 1} not homogeneous of its recorded degree"
                )
        n = self.cartan.n
        for j in self.B.mutable:
            col = self.B.column(j)
            acc = [0] * n
            for i in range(self.r):
                for t in range(n):
                    acc[t] += col[i] * self.dims[i].coords[t]
            if any(acc):
                raise InputError(f"exchange column {j} does not kill dimension vectors")
        return self

    def position_of_label(self, label) -> int:
        """1-based position currently carrying the interval tag, or 0."""
        for k, lab in enumerate(self.labels):
            if lab == label:
                return k + 1
        return 0

    def to_json(self) -> dict:
        return {
            "version": 1,
            "cartan": [list(r) for r in self.cartan.entries],
            "word": list(self.word.letters),
            "frame": {
                "lambda": [list(r) for r in self.frame.lam],
                "degrees": [list(d.coords) for d in self.frame.degrees],
                "sigma": list(self.frame.sigma_exp),
            },
            "L": self.L.to_json(),
            "B": self.B.to_json(),
            "dims": [list(d.coords) for d in self.dims],
            "labels": [list(lab) if lab else None for lab in self.labels],
            "cluster": [x.to_json() for x in self.cluster],
        }

    @staticmethod
    def from_json(data: dict) -> "QuantumSeed":
        cartan = CartanMatrix(data["cartan"])
        word = ReducedWord(tuple(data["word"]))
        frame = TorusFrame(
            tuple(tuple(r) for r in data["frame"]["lambda"]),
            tuple(RootVector(tuple(d)) for d in data["frame"]["degrees"]),
            tuple(data["frame"]["sigma"]),
        )
        B = ExchangeMatrix(
            word.r,
            tuple(data["B"]["mutable"]),
            tuple(tuple(c) for c in data["B"]["cols"]),
        )
        return QuantumSeed(
            word=word,
            cartan=cartan,
            frame=frame,
            cluster=tuple(TorusElement.from_json(frame, x) for x in data["cluster"]),
            L=LambdaMatrix(tuple(tuple(r) for r in data["L"])),
            B=B,
            dims=tuple(RootVector(tuple(d)) for d in data["dims"]),
            labels=tuple(tuple(lab) if lab else None for lab in data["labels"]),
        ).validate()


def initial_seed(word: ReducedWord, cartan: CartanMatrix) -> QuantumSeed:
    """The seed of the word: unit cluster in its own frame, L from build_RHL,
    B from the quiver, labels the initial intervals (k, k_min)."""
    _, B = build_gamma_btilde(word, cartan)
    _, _, L = build_RHL(word, cartan)
    dims = dim_vectors(word, cartan)
    imap = index_maps(word)
    sigma_exp = tuple(
        cartan.sym(d, d) // 2 - d.deg() for d in dims
    )
    frame = TorusFrame(L.rows, tuple(dims), sigma_exp)
    cluster = tuple(TorusElement.generator(frame, k) for k in range(1, word.r + 1))
    labels = tuple((k, imap.k_min[k - 1]) for k in range(1, word.r + 1))
    return QuantumSeed(
        word=word,
        cartan=cartan,
        frame=frame,
        cluster=cluster,
        L=L,
        B=B,
        dims=tuple(dims),
        labels=labels,
    ).validate()
