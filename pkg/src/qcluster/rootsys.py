"""Symmetric Kac-Moody combinatorics for a fixed Cartan matrix and reduced word.

Conventions, fixed once for the whole engine:

* indices into the Cartan matrix (letters) are 1-based, i in {1, .., n};
* positions in a word are 1-based, k in {1, .., r}; 0 is the sentinel for
  "no previous occurrence";
* a word (i_1, .., i_r) is consumed left to right, the reflection s_{i_1}
  acting last in products such as s_{i_1} ... s_{i_b}(w_j).

Weights are stored in mixed coordinates: an integer combination of
fundamental weights plus an integer combination of simple roots.  The two
parts are never converted into each other (fundamental weights are only
defined up to a Weyl-invariant summand), and the symmetric bilinear form is
exposed only against pure root-lattice arguments, which is all the exponent
formulas ever need.
"""

from __future__ import annotations

from dataclasses import dataclass


class InputError(ValueError):
    """Raised for malformed Cartan data, words, or indices."""


class NotReducedError(ValueError):
    """Raised when a word fails the positivity test for some beta_k."""

    def __init__(self, position: int):
        self.position = position
        super().__init__(f"word is not reduced: beta_{position} is not a positive root")


@dataclass(frozen=True)
class RootVector:
    """An element of the root lattice, as integer coordinates on the alpha_i."""

    coords: tuple

    def __add__(self, other: "RootVector") -> "RootVector":
        return RootVector(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "RootVector") -> "RootVector":
        return RootVector(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def scale(self, m: int) -> "RootVector":
        return RootVector(tuple(m * a for a in self.coords))

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coords)

    def is_positive(self) -> bool:
        """Membership in Q_+ (all coordinates nonnegative)."""
        return all(a >= 0 for a in self.coords)

    def deg(self) -> int:
        """Total degree: the coordinate sum."""
        return sum(self.coords)

    @staticmethod
    def zero(n: int) -> "RootVector":
        return RootVector((0,) * n)

    @staticmethod
    def simple(n: int, i: int) -> "RootVector":
        """The simple root alpha_i."""
        return RootVector(tuple(1 if j == i else 0 for j in range(1, n + 1)))


@dataclass(frozen=True)
class Weight:
    """A weight sum_i omega_i w_i + sum_i root_i alpha_i in mixed coordinates."""

    omega: tuple
    root: tuple

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(
            tuple(a + b for a, b in zip(self.omega, other.omega)),
            tuple(a + b for a, b in zip(self.root, other.root)),
        )

    def __sub__(self, other: "Weight") -> "Weight":
        return Weight(
            tuple(a - b for a, b in zip(self.omega, other.omega)),
            tuple(a - b for a, b in zip(self.root, other.root)),
        )

    def as_root_vector(self) -> RootVector:
        """The root part, valid only when the fundamental part vanishes."""
        if any(self.omega):
            raise InputError("weight is not in the root lattice")
        return RootVector(self.root)

    @staticmethod
    def fundamental(n: int, j: int) -> "Weight":
        return Weight(tuple(1 if i == j else 0 for i in range(1, n + 1)), (0,) * n)


class CartanMatrix:
    """A symmetric generalized Cartan matrix, with the bilinear form it induces."""

    def __init__(self, entries):
        rows = [tuple(int(x) for x in row) for row in entries]
        n = len(rows)
        if any(len(row) != n for row in rows):
            raise InputError("Cartan matrix must be square")
        for i in range(n):
            if rows[i][i] != 2:
                raise InputError(f"Cartan diagonal entry a_{i+1}{i+1} must be 2")
            for j in range(n):
                if rows[i][j] != rows[j][i]:
                    raise InputError("Cartan matrix must be symmetric")
                if i != j and rows[i][j] > 0:
                    raise InputError("off-diagonal Cartan entries must be <= 0")
        self.n = n
        self.entries = tuple(rows)

    def a(self, i: int, j: int) -> int:
        """Entry a_ij = (alpha_i, alpha_j), 1-based."""
        return self.entries[i - 1][j - 1]

    def sym(self, x: RootVector, y: RootVector) -> int:
        """The symmetric form on the root lattice."""
        rows = self.entries
        total = 0
        for j, xj in enumerate(x.coords):
            if xj:
                row = rows[j]
                total += xj * sum(row[k] * yk for k, yk in enumerate(y.coords) if yk)
        return total

    def pairing(self, x: Weight, y: RootVector) -> int:
        """(x, y) for a general weight x against a root-lattice element y.

        Uses (w_i, alpha_j) = delta_ij and (alpha_i, alpha_j) = a_ij; pairing
        two general weights is deliberately not provided.
        """
        total = sum(o * c for o, c in zip(x.omega, y.coords))
        return total + self.sym(RootVector(x.root), y)

    def reflect_weight(self, i: int, x: Weight) -> Weight:
        """s_i(x) = x - <h_i, x> alpha_i; only the root part changes."""
        m = x.omega[i - 1] + sum(
            self.entries[i - 1][j] * c for j, c in enumerate(x.root)
        )
        if m == 0:
            return x
        root = list(x.root)
        root[i - 1] -= m
        return Weight(x.omega, tuple(root))

    def reflect_root(self, i: int, x: RootVector) -> RootVector:
        m = sum(self.entries[i - 1][j] * c for j, c in enumerate(x.coords))
        if m == 0:
            return x
        coords = list(x.coords)
        coords[i - 1] -= m
        return RootVector(tuple(coords))

    def __eq__(self, other) -> bool:
        return isinstance(other, CartanMatrix) and self.entries == other.entries

    def __repr__(self) -> str:
        return f"CartanMatrix({[list(r) for r in self.entries]})"


def type_a(n: int) -> CartanMatrix:
    """The Cartan matrix of type A_n with the linear labeling 1 - 2 - .. - n."""
    return CartanMatrix(
        [
            [2 if i == j else (-1 if abs(i - j) == 1 else 0) for j in range(n)]
            for i in range(n)
        ]
    )


def type_d4_central3() -> CartanMatrix:
    """Type D_4 with the central node labeled 3 (edges 1-3, 2-3, 4-3)."""
    return CartanMatrix(
        [
            [2, 0, -1, 0],
            [0, 2, -1, 0],
            [-1, -1, 2, -1],
            [0, 0, -1, 2],
        ]
    )


def affine_a1() -> CartanMatrix:
    """The affine Cartan matrix [[2,-2],[-2,2]]."""
    return CartanMatrix([[2, -2], [-2, 2]])


@dataclass(frozen=True)
class ReducedWord:
    """A word (i_1, .., i_r) in the index set; reducedness is a property
    checked by validate_reduced, not enforced by the constructor."""

    letters: tuple

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(int(x) for x in self.letters))

    @property
    def r(self) -> int:
        return len(self.letters)

    def letter(self, k: int) -> int:
        """The letter i_k, 1-based."""
        return self.letters[k - 1]


@dataclass(frozen=True)
class IndexMaps:
    """Occurrence bookkeeping for a word: k_minus[k] is the previous position
    with the same letter (0 if none), k_plus[k] the next one (r+1 if none)."""

    word: ReducedWord
    k_minus: tuple
    k_plus: tuple
    k_min: tuple
    k_max: tuple

    def b_minus(self, b: int, j: int) -> int:
        """max({s < b : i_s = j} plus {0})."""
        for s in range(b - 1, 0, -1):
            if self.word.letter(s) == j:
                return s
        return 0

    def mutable(self) -> tuple:
        """Positions k with k_plus <= r: the non-final occurrences."""
        r = self.word.r
        return tuple(k for k in range(1, r + 1) if self.k_plus[k - 1] <= r)

    def frozen(self) -> tuple:
        r = self.word.r
        return tuple(k for k in range(1, r + 1) if self.k_plus[k - 1] > r)


def index_maps(word: ReducedWord) -> IndexMaps:
    r = word.r
    k_minus, k_plus, k_min, k_max = [], [], [], []
    for k in range(1, r + 1):
        i = word.letter(k)
        prev = max((s for s in range(1, k) if word.letter(s) == i), default=0)
        nxt = min((s for s in range(k + 1, r + 1) if word.letter(s) == i), default=r + 1)
        first = min(s for s in range(1, r + 1) if word.letter(s) == i)
        last = max(s for s in range(1, r + 1) if word.letter(s) == i)
        k_minus.append(prev)
        k_plus.append(nxt)
        k_min.append(first)
        k_max.append(last)
    return IndexMaps(word, tuple(k_minus), tuple(k_plus), tuple(k_min), tuple(k_max))


def _check_letters(word: ReducedWord, cartan: CartanMatrix):
    for i in word.letters:
        if not 1 <= i <= cartan.n:
            raise InputError(f"letter {i} out of range 1..{cartan.n}")


def beta_roots(word: ReducedWord, cartan: CartanMatrix) -> list:
    """The roots beta_k = s_{i_1} .. s_{i_{k-1}}(alpha_{i_k}) of the word.

    Raises NotReducedError naming the first k whose beta_k fails to be a
    positive root.
    """
    _check_letters(word, cartan)
    betas = []
    for k in range(1, word.r + 1):
        b = RootVector.simple(cartan.n, word.letter(k))
        for t in range(k - 1, 0, -1):
            b = cartan.reflect_root(word.letter(t), b)
        if not b.is_positive():
            raise NotReducedError(k)
        betas.append(b)
    return betas


def validate_reduced(word: ReducedWord, cartan: CartanMatrix) -> bool:
    """True iff every beta_k is a positive root."""
    try:
        beta_roots(word, cartan)
    except NotReducedError:
        return False
    return True


def mu_weight(word: ReducedWord, cartan: CartanMatrix, b: int, j: int) -> Weight:
    """mu(b, j) = s_{i_1} .. s_{i_b}(w_j), with mu(0, j) = w_j."""
    if not 0 <= b <= word.r:
        raise InputError(f"prefix length {b} out of range 0..{word.r}")
    if not 1 <= j <= cartan.n:
        raise InputError(f"index {j} out of range 1..{cartan.n}")
    x = Weight.fundamental(cartan.n, j)
    for t in range(b, 0, -1):
        x = cartan.reflect_weight(word.letter(t), x)
    return x


class MuTable:
    """All weights mu(b, j) of a word, computed once from the beta roots.

    Peeling the innermost reflection gives mu(b, j) = mu(b-1, j) when
    i_b != j and mu(b, j) = mu(b-1, j) - beta_b when i_b = j, so the whole
    table is one running sum per column.
    """

    def __init__(self, word: ReducedWord, cartan: CartanMatrix):
        self.word = word
        self.cartan = cartan
        r, n = word.r, cartan.n
        betas = beta_roots(word, cartan)
        table = [[Weight.fundamental(n, j) for j in range(1, n + 1)]]
        for b in range(1, r + 1):
            row = list(table[b - 1])
            j = word.letter(b)
            prev = row[j - 1]
            row[j - 1] = Weight(
                prev.omega,
                tuple(c - d for c, d in zip(prev.root, betas[b - 1].coords)),
            )
            table.append(row)
        self._table = table
        self.betas = betas

    def mu(self, b: int, j: int) -> Weight:
        return self._table[b][j - 1]

    def mu_diff(self, b1: int, b2: int, j: int) -> RootVector:
        """mu(b1, j) - mu(b2, j), a root-lattice element."""
        return (self.mu(b1, j) - self.mu(b2, j)).as_root_vector()


def pair(x: Weight, y: RootVector, cartan: CartanMatrix) -> int:
    """Module-level alias for CartanMatrix.pairing."""
    return cartan.pairing(x, y)


def n_value(beta: RootVector, cartan: CartanMatrix) -> int:
    """N(beta) = (beta, beta)/2 - deg beta, the sigma-eigenvalue exponent
    of a homogeneous twisted-bar eigenvector of degree beta."""
    return cartan.sym(beta, beta) // 2 - beta.deg()
