"""Exact coefficient arithmetic: Laurent polynomials in v = q^(1/2) over Q.

All quantum exponents in the engine are tracked in units of v, so that
half-integral powers of q arising from normalized monomial bases stay
representable.  A power q^m is v^(2m).  Coefficients are rational so that
exact linear solves never truncate; integrality of final results is a
checkable property, not a storage constraint.
"""

from __future__ import annotations

from fractions import Fraction


class LaurentPoly:
    """A sparse Laurent polynomial sum_e c_e v^e with c_e in Q.

    Immutable by convention: no method mutates self, all arithmetic returns
    fresh objects.  The zero polynomial is the empty term map.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        t = {}
        if terms:
            for e, c in terms.items():
                c = c if isinstance(c, Fraction) else Fraction(c)
                if c != 0:
                    t[int(e)] = c
        self.terms = t

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> "LaurentPoly":
        return LaurentPoly()

    @staticmethod
    def one() -> "LaurentPoly":
        return LaurentPoly({0: 1})

    @staticmethod
    def v_power(e: int, coeff=1) -> "LaurentPoly":
        return LaurentPoly({e: coeff})

    @staticmethod
    def q_power(m: int, coeff=1) -> "LaurentPoly":
        """q^m = v^(2m)."""
        return LaurentPoly({2 * m: coeff})

    @staticmethod
    def from_rational(c) -> "LaurentPoly":
        return LaurentPoly({0: c})

    # -- ring structure ----------------------------------------------------

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        t = dict(self.terms)
        for e, c in other.terms.items():
            s = t.get(e, Fraction(0)) + c
            if s:
                t[e] = s
            else:
                t.pop(e, None)
        out = LaurentPoly.__new__(LaurentPoly)
        out.terms = t
        return out

    def __neg__(self) -> "LaurentPoly":
        out = LaurentPoly.__new__(LaurentPoly)
        out.terms = {e: -c for e, c in self.terms.items()}
        return out

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        t = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                s = t.get(e, Fraction(0)) + c1 * c2
                if s:
                    t[e] = s
                else:
                    t.pop(e, None)
        out = LaurentPoly.__new__(LaurentPoly)
        out.terms = t
        return out

    def scale(self, c) -> "LaurentPoly":
        c = c if isinstance(c, Fraction) else Fraction(c)
        if c == 0:
            return LaurentPoly()
        out = LaurentPoly.__new__(LaurentPoly)
        out.terms = {e: a * c for e, a in self.terms.items()}
        return out

    def shift(self, e: int) -> "LaurentPoly":
        """Multiply by v^e."""
        out = LaurentPoly.__new__(LaurentPoly)
        out.terms = {k + e: c for k, c in self.terms.items()}
        return out

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            raise ValueError("negative power of a Laurent polynomial")
        out = LaurentPoly.one()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, LaurentPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == {0: Fraction(1)}

    # -- involution, evaluation, integrality -------------------------------

    def bar(self) -> "LaurentPoly":
        """The bar involution v -> v^(-1) (equivalently q -> q^(-1))."""
        out = LaurentPoly.__new__(LaurentPoly)
        out.terms = {-e: c for e, c in self.terms.items()}
        return out

    def eval_q1(self) -> Fraction:
        """Specialize v -> 1 (the homomorphism q -> 1)."""
        return sum(self.terms.values(), Fraction(0))

    def is_q_integral(self) -> bool:
        """True iff every v-exponent is even, i.e. the element lies in Q[q^(±1)]."""
        return all(e % 2 == 0 for e in self.terms)

    # -- structure queries --------------------------------------------------

    def min_exp(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no valuation")
        return min(self.terms)

    def max_exp(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no degree")
        return max(self.terms)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def monomial_parts(self):
        """For a one-term polynomial c v^e, return (e, c)."""
        if len(self.terms) != 1:
            raise ValueError("not a monomial")
        ((e, c),) = self.terms.items()
        return e, c

    def exact_div(self, other: "LaurentPoly"):
        """Exact division in Q[v^(±1)]; returns the quotient or None.

        Both operands are shifted so the divisor has valuation 0, then
        ordinary long division over Q runs; a nonzero remainder means the
        division is not exact.
        """
        if other.is_zero():
            raise ZeroDivisionError("division by zero Laurent polynomial")
        if self.is_zero():
            return LaurentPoly.zero()
        sv, dv = self.min_exp(), other.min_exp()
        num = {e - sv: c for e, c in self.terms.items()}
        den = {e - dv: c for e, c in other.terms.items()}
        dd = max(den)
        lead = den[dd]
        quot = {}
        while num:
            nd = max(num)
            if nd < dd:
                return None
            q = num[nd] / lead
            quot[nd - dd] = q
            for e, c in den.items():
                k = nd - dd + e
                s = num.get(k, Fraction(0)) - q * c
                if s:
                    num[k] = s
                else:
                    num.pop(k, None)
        out = LaurentPoly({e + sv - dv: c for e, c in quot.items()})
        return out

    def gcd(self, other: "LaurentPoly") -> "LaurentPoly":
        """Monic gcd in Q[v^(±1)] (units v^e are quotiented away)."""
        a, b = self, other
        while not b.is_zero():
            a, b = b, _poly_mod(a, b)
        if a.is_zero():
            return a
        e, c = a.max_exp(), a.terms[a.max_exp()]
        return a.shift(-a.min_exp()).scale(1 / c)

    # -- serialization -------------------------------------------------------

    def to_json(self) -> dict:
        return {str(e): str(self.terms[e]) for e in sorted(self.terms)}

    @staticmethod
    def from_json(data: dict) -> "LaurentPoly":
        return LaurentPoly({int(e): Fraction(c) for e, c in data.items()})

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for e in sorted(self.terms):
            c = self.terms[e]
            if e == 0:
                bits.append(f"{c}")
            elif e == 1:
                bits.append(f"{c}*v" if c != 1 else "v")
            else:
                bits.append(f"{c}*v^{e}" if c != 1 else f"v^{e}")
        return " + ".join(bits).replace("+ -", "- ")


def _poly_mod(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Remainder of a by b after normalizing both to valuation 0."""
    if a.is_zero():
        return a
    num = {e - a.min_exp(): c for e, c in a.terms.items()}
    den = {e - b.min_exp(): c for e, c in b.terms.items()}
    dd = max(den)
    lead = den[dd]
    while num and max(num) >= dd:
        nd = max(num)
        q = num[nd] / lead
        for e, c in den.items():
            k = nd - dd + e
            s = num.get(k, Fraction(0)) - q * c
            if s:
                num[k] = s
            else:
                num.pop(k, None)
    return LaurentPoly(num)


ZERO = LaurentPoly.zero()
ONE = LaurentPoly.one()


def bar(p: LaurentPoly) -> LaurentPoly:
    return p.bar()


def eval_q1(p: LaurentPoly) -> Fraction:
    return p.eval_q1()


def q_integral_test(p: LaurentPoly) -> bool:
    return p.is_q_integral()
