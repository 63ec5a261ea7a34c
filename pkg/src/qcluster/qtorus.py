"""The based quantum torus: normalized monomials, exact multiplication and
right division, Q_+-grading, and the twisted bar anti-automorphism.

Generators X_1, .., X_r satisfy X_i X_j = q^(lam_ij) X_j X_i.  The working
basis is the normalized monomial

    X^a = v^(sum_{i>j} a_i a_j lam_ij) X_1^(a_1) .. X_r^(a_r),

so that X^a X^b = v^(sum_{i>j} (a_i b_j - b_i a_j) lam_ij) X^(a+b).
Coefficients of X^a-basis terms may carry odd v-powers; q-integrality is a
property of the ordered-monomial coefficients and is tested as such.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .qarith import LaurentPoly
from .rootsys import RootVector


class FrameMismatchError(ValueError):
    """Raised when combining torus elements over different frames."""


class DivisionError(ArithmeticError):
    """Exact right-division failed; carries the nonzero remainder."""

    def __init__(self, remainder):
        self.remainder = remainder
        super().__init__("right division left a nonzero remainder")


@dataclass(frozen=True)
class TorusFrame:
    """Commutation matrix, grading, and sigma-exponents of a based torus.

    lam is the r x r skew-symmetric integer matrix of q-exponents; degrees
    assigns each generator its Q_+-degree; sigma_exp[k] is the integer e_k
    in sigma(X_k) = q^(e_k) X_k.
    """

    lam: tuple
    degrees: tuple
    sigma_exp: tuple

    def __post_init__(self):
        r = len(self.lam)
        for i in range(r):
            for j in range(r):
                if self.lam[i][j] != -self.lam[j][i]:
                    raise ValueError("commutation matrix must be skew-symmetric")
        if len(self.degrees) != r or len(self.sigma_exp) != r:
            raise ValueError("frame components must all have length r")

    @property
    def r(self) -> int:
        return len(self.lam)

    def lam_entry(self, i: int, j: int) -> int:
        """q-exponent lam_ij, 1-based."""
        return self.lam[i - 1][j - 1]

    def cross(self, a, b) -> int:
        """sum_{i>j} (a_i b_j - b_i a_j) lam_ij, the v-exponent in X^a X^b."""
        lam = self.lam
        total = 0
        for i in range(len(a)):
            ai, bi = a[i], b[i]
            if ai == 0 and bi == 0:
                continue
            row = lam[i]
            for j in range(i):
                total += (ai * b[j] - bi * a[j]) * row[j]
        return total

    def ordered_twist(self, a) -> int:
        """sum_{i>j} a_i a_j lam_ij: X^a = v^twist X_1^(a_1) .. X_r^(a_r)."""
        lam = self.lam
        total = 0
        for i in range(len(a)):
            ai = a[i]
            if ai == 0:
                continue
            row = lam[i]
            for j in range(i):
                total += ai * a[j] * row[j]
        return total


def mono_mul(a, b, frame: TorusFrame):
    """Multiply basis monomials: returns (v-exponent, a + b)."""
    if len(a) != frame.r or len(b) != frame.r:
        raise ValueError("exponent vectors must have length r")
    return frame.cross(a, b), tuple(x + y for x, y in zip(a, b))


class TorusElement:
    """A finite Q[v^(±1)]-combination of normalized monomials X^a.

    Immutable by convention.  Terms map exponent vectors (tuples of ints)
    to nonzero LaurentPoly coefficients.
    """

    __slots__ = ("frame", "terms")

    def __init__(self, frame: TorusFrame, terms=None):
        t = {}
        if terms:
            for a, c in terms.items():
                if not c.is_zero():
                    t[tuple(a)] = c
        self.frame = frame
        self.terms = t

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(frame: TorusFrame) -> "TorusElement":
        return TorusElement(frame)

    @staticmethod
    def one(frame: TorusFrame) -> "TorusElement":
        return TorusElement(frame, {(0,) * frame.r: LaurentPoly.one()})

    @staticmethod
    def monomial(frame: TorusFrame, a, coeff=None) -> "TorusElement":
        c = coeff if coeff is not None else LaurentPoly.one()
        return TorusElement(frame, {tuple(a): c})

    @staticmethod
    def generator(frame: TorusFrame, k: int) -> "TorusElement":
        """The cluster variable X_k as a torus element, k 1-based."""
        a = tuple(1 if i == k else 0 for i in range(1, frame.r + 1))
        return TorusElement.monomial(frame, a)

    # -- ring structure ----------------------------------------------------

    def _check(self, other: "TorusElement"):
        if self.frame is not other.frame and self.frame != other.frame:
            raise FrameMismatchError("torus elements live over different frames")

    def __add__(self, other: "TorusElement") -> "TorusElement":
        self._check(other)
        t = dict(self.terms)
        for a, c in other.terms.items():
            s = t.get(a)
            s = c if s is None else s + c
            if s.is_zero():
                t.pop(a, None)
            else:
                t[a] = s
        out = TorusElement.__new__(TorusElement)
        out.frame, out.terms = self.frame, t
        return out

    def __neg__(self) -> "TorusElement":
        out = TorusElement.__new__(TorusElement)
        out.frame = self.frame
        out.terms = {a: -c for a, c in self.terms.items()}
        return out

    def __sub__(self, other: "TorusElement") -> "TorusElement":
        return self + (-other)

    def __mul__(self, other: "TorusElement") -> "TorusElement":
        self._check(other)
        frame = self.frame
        cross = frame.cross
        t = {}
        for a, ca in self.terms.items():
            for b, cb in other.terms.items():
                e = cross(a, b)
                ab = tuple(x + y for x, y in zip(a, b))
                c = (ca * cb).shift(e)
                s = t.get(ab)
                s = c if s is None else s + c
                if s.is_zero():
                    t.pop(ab, None)
                else:
                    t[ab] = s
        out = TorusElement.__new__(TorusElement)
        out.frame, out.terms = frame, t
        return out

    def scale(self, c: LaurentPoly) -> "TorusElement":
        out = TorusElement.__new__(TorusElement)
        out.frame = self.frame
        out.terms = {} if c.is_zero() else {a: x * c for a, x in self.terms.items()}
        return out

    def __pow__(self, n: int) -> "TorusElement":
        if n < 0:
            raise ValueError("negative powers are taken via explicit division")
        out = TorusElement.one(self.frame)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TorusElement)
            and self.frame == other.frame
            and self.terms == other.terms
        )

    def is_zero(self) -> bool:
        return not self.terms

    # -- grading -------------------------------------------------------------

    def degree(self) -> RootVector:
        """The common Q_+-degree sum_k a_k deg_k; raises if inhomogeneous."""
        degs = self.homogeneous_degrees()
        if len(degs) != 1:
            raise ValueError("element is not homogeneous")
        return next(iter(degs))

    def homogeneous_degrees(self) -> set:
        degrees = self.frame.degrees
        n = len(degrees[0].coords) if degrees else 0
        out = set()
        for a in self.terms:
            d = [0] * n
            for k, ak in enumerate(a):
                if ak:
                    for t, c in enumerate(degrees[k].coords):
                        d[t] += ak * c
            out.add(RootVector(tuple(d)))
        return out

    def is_homogeneous(self) -> bool:
        return len(self.homogeneous_degrees()) <= 1

    # -- division -------------------------------------------------------------

    def right_divide_exact(self, d: "TorusElement") -> "TorusElement":
        """Solve z * d = self exactly in the torus.

        Long division against the lex-leading term of d (leftmost coordinate
        dominant).  Divisibility is guaranteed by the Laurent phenomenon for
        every input the engine produces; failure raises DivisionError with
        the offending remainder, which falsifies the run.
        """
        self._check(d)
        if d.is_zero():
            raise ZeroDivisionError("division by zero torus element")
        frame = self.frame
        b = max(d.terms)
        cb = d.terms[b]
        quot = {}
        rem = self
        # Each pass strips the current lex-leading term, producing exactly
        # one term of z; a valid division finishes in len(z) passes.
        cap = 16 * (len(self.terms) + len(d.terms)) + 64
        for _ in range(cap):
            if rem.is_zero():
                return TorusElement(frame, quot)
            e = max(rem.terms)
            a = tuple(x - y for x, y in zip(e, b))
            twist = frame.cross(a, b)
            ca = rem.terms[e].shift(-twist).exact_div(cb)
            if ca is None:
                raise DivisionError(rem)
            quot[a] = ca
            rem = rem - TorusElement.monomial(frame, a, ca) * d
        raise DivisionError(rem)

    # -- involution ------------------------------------------------------------

    def sigma(self) -> "TorusElement":
        """The twisted bar involution: the ring anti-automorphism with
        sigma(v) = v^(-1) and sigma(X_k) = q^(e_k) X_k.

        On a normalized monomial the order reversal cancels the twist, so
        sigma(c X^a) = bar(c) q^(sum_k a_k e_k) X^a.
        """
        ek = self.frame.sigma_exp
        t = {}
        for a, c in self.terms.items():
            m = sum(x * e for x, e in zip(a, ek))
            t[a] = c.bar().shift(2 * m)
        out = TorusElement.__new__(TorusElement)
        out.frame, out.terms = self.frame, t
        return out

    # -- integrality and specialization -----------------------------------------

    def is_q_integral(self) -> bool:
        """True iff all ordered-monomial coefficients lie in Q[q^(±1)].

        The coefficient of X_1^(a_1) .. X_r^(a_r) is v^twist(a) times the
        stored X^a coefficient, so the test is a parity comparison.
        """
        for a, c in self.terms.items():
            parity = self.frame.ordered_twist(a) % 2
            if any(e % 2 != parity for e in c.terms):
                return False
        return True

    def eval_q1(self) -> dict:
        """Specialize v -> 1: exponent vector -> rational coefficient."""
        out = {}
        for a, c in self.terms.items():
            val = c.eval_q1()
            if val:
                out[a] = val
        return out

    # -- serialization ------------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "terms": [[list(a), self.terms[a].to_json()] for a in sorted(self.terms)]
        }

    @staticmethod
    def from_json(frame: TorusFrame, data: dict) -> "TorusElement":
        return TorusElement(
            frame,
            {tuple(a): LaurentPoly.from_json(c) for a, c in data["terms"]},
        )

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        bits = [f"({self.terms[a]})*X^{list(a)}" for a in sorted(self.terms)]
        return " + ".join(bits)


def q_power_element(frame: TorusFrame, m: int) -> TorusElement:
    """The central scalar q^m as a torus element."""
    return TorusElement(frame, {(0,) * frame.r: LaurentPoly.q_power(m)})


def commutation_v_exponent(x: TorusElement, y: TorusElement):
    """The integer t with x y = v^t y x, or None if no such t exists.

    For cluster variables t is even and t/2 is the tracked q-exponent.
    """
    xy = x * y
    yx = y * x
    if xy.is_zero() and yx.is_zero():
        return 0
    if set(xy.terms) != set(yx.terms):
        return None
    t = None
    for a, c1 in xy.terms.items():
        c2 = yx.terms[a]
        quot = c1.exact_div(c2)
        if quot is None or not quot.is_monomial():
            return None
        e, coeff = quot.monomial_parts()
        if coeff != 1:
            return None
        if t is None:
            t = e
        elif t != e:
            return None
    return t
