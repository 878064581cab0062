"""Representation-generic arithmetic on natural numbers.

A *representation* supplies six primitives: the empty value ``e`` standing
for zero, the digit constructors ``o`` (n -> 2n+1) and ``i`` (n -> 2n+2),
their inverses ``o_inv`` / ``i_inv``, and the recognizer ``is_o``.  Values
are then exactly the bijective base-2 numerals over the digit alphabet
{o, i}, with zero written as the empty digit string.

Everything else -- successor/predecessor, arithmetic, comparison, division,
and the digit-level "special computations" (dual, bitsize, the cons/decons
pairing) -- is derived here once from the primitives and shared by every
representation.  A representation may override a derived operation with a
faster equivalent as long as observable behaviour is unchanged; the derived
definitions below remain available through the base class for cross-checks.

All values are immutable and all operations are pure, so values can be
shared freely across threads.
"""

from __future__ import annotations

import enum
from abc import ABC, abstractmethod
from typing import Generic, Iterator, TypeVar

N = TypeVar("N")


class DomainError(ValueError):
    """Raised when an operation is applied outside its domain."""


class ParseError(ValueError):
    """Raised on malformed textual input; carries the offending position."""

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class Ordering(enum.Enum):
    """Three-way comparison result."""

    LT = -1
    EQ = 0
    GT = 1


LT = Ordering.LT
EQ = Ordering.EQ
GT = Ordering.GT


class NatRep(ABC, Generic[N]):
    """Contract for a natural-number representation plus derived algorithms.

    Subclasses implement the six primitives for their value type ``N``.
    Instances are stateless; one module-level singleton per representation
    is enough.
    """

    e: N

    def __init__(self) -> None:
        self._one = self.o(self.e)
        self._two = self.i(self.e)

    # ------------------------------------------------------------------
    # primitives (static: they never need the instance, and the hot generic
    # loops below fetch them through self a lot)
    # ------------------------------------------------------------------

    @staticmethod
    @abstractmethod
    def o(x: N) -> N:
        """Apply the digit taking n to 2n+1."""

    @staticmethod
    @abstractmethod
    def i(x: N) -> N:
        """Apply the digit taking n to 2n+2."""

    @staticmethod
    @abstractmethod
    def o_inv(x: N) -> N:
        """Undo ``o``; domain error unless the outermost digit is o."""

    @staticmethod
    @abstractmethod
    def i_inv(x: N) -> N:
        """Undo ``i``; domain error unless the outermost digit is i."""

    @staticmethod
    @abstractmethod
    def is_o(x: N) -> bool:
        """True when the outermost digit is o (the value is odd)."""

    # Derived recognizers.  Exactly one of is_e/is_o/is_i holds for any
    # value; subclasses usually override these with cheaper checks.

    def is_e(self, x: N) -> bool:
        """True for the zero value."""
        return x == self.e

    def is_i(self, x: N) -> bool:
        """True when the outermost digit is i (the value is even, nonzero)."""
        return not (self.is_e(x) or self.is_o(x))

    # ------------------------------------------------------------------
    # successor / predecessor
    # ------------------------------------------------------------------

    def succ(self, x: N) -> N:
        """Value plus one."""
        is_i, i_inv = self.is_i, self.i_inv
        runs = 0
        while is_i(x):
            x = i_inv(x)
            runs += 1
        x = self.o(x) if self.is_e(x) else self.i(self.o_inv(x))
        if runs:
            o = self.o
            for _ in range(runs):
                x = o(x)
        return x

    def pred(self, x: N) -> N:
        """Value minus one; domain error on zero."""
        is_o, o_inv, is_e = self.is_o, self.o_inv, self.is_e
        runs = 0
        while is_o(x):
            stripped = o_inv(x)
            if is_e(stripped):
                # x was the lone-o-digit value; the run below it is empty
                x = self.e
                break
            x = stripped
            runs += 1
        else:
            if not self.is_i(x):
                raise DomainError("predecessor of zero")
            x = self.o(self.i_inv(x))
        if runs:
            i = self.i
            for _ in range(runs):
                x = i(x)
        return x

    def succ_depth(self, x: N) -> int:
        """Number of rule applications ``succ`` performs on ``x``.

        One application for the terminal rule plus one per trailing i digit.
        Constant on average over a uniform range of values.
        """
        depth = 1
        while self.is_i(x):
            x = self.i_inv(x)
            depth += 1
        return depth

    def all_from(self, x: N) -> Iterator[N]:
        """Unbounded increasing stream x, x+1, x+2, ...; pull-driven."""
        while True:
            yield x
            x = self.succ(x)

    # ------------------------------------------------------------------
    # arithmetic
    # ------------------------------------------------------------------

    def add(self, x: N, y: N) -> N:
        """Sum.  Strips outer-digit pairs down to a base case, then rebuilds
        outward: o+o carries into an i digit, any case involving an i digit
        also needs a succ on the way out."""
        is_e, is_o = self.is_e, self.is_o
        o, i, o_inv, i_inv, succ = self.o, self.i, self.o_inv, self.i_inv, self.succ
        pairs = []
        while True:
            if is_e(x):
                res = y
                break
            if is_e(y):
                res = x
                break
            ao = is_o(x)
            bo = is_o(y)
            x = o_inv(x) if ao else i_inv(x)
            y = o_inv(y) if bo else i_inv(y)
            pairs.append(ao + bo)
        for both in reversed(pairs):
            if both == 2:
                res = i(res)
            elif both == 1:
                res = o(succ(res))
            else:
                res = i(succ(res))
        return res

    def sub(self, x: N, y: N) -> N:
        """Difference x - y; domain error when y exceeds x."""
        is_e, is_o = self.is_e, self.is_o
        o, o_inv, i_inv, pred = self.o, self.o_inv, self.i_inv, self.pred
        pairs = []
        while True:
            if is_e(y):
                res = x
                break
            if is_e(x):
                raise DomainError("subtraction underflow")
            ao = is_o(x)
            bo = is_o(y)
            x = o_inv(x) if ao else i_inv(x)
            y = o_inv(y) if bo else i_inv(y)
            pairs.append((ao, bo))
        for ao, bo in reversed(pairs):
            if ao:
                res = pred(o(res)) if bo else pred(pred(o(res)))
            else:
                res = o(res) if bo else pred(o(res))
        return res

    def cmp(self, x: N, y: N) -> Ordering:
        """Three-way comparison agreeing with the numeric order.

        Walks matched digits inward; the deepest o-vs-i mismatch breaks a
        tie between equal-length digit strings, a shorter string loses.
        """
        is_e, is_o = self.is_e, self.is_o
        o_inv, i_inv = self.o_inv, self.i_inv
        tiebreak = EQ
        while True:
            if is_e(x):
                base = EQ if is_e(y) else LT
                break
            if is_e(y):
                base = GT
                break
            ao = is_o(x)
            bo = is_o(y)
            x = o_inv(x) if ao else i_inv(x)
            y = o_inv(y) if bo else i_inv(y)
            if ao != bo:
                tiebreak = LT if ao else GT
        return base if base is not EQ else tiebreak

    def min2(self, x: N, y: N) -> N:
        return x if self.cmp(x, y) is LT else y

    def max2(self, x: N, y: N) -> N:
        return y if self.cmp(x, y) is LT else x

    def mul(self, x: N, y: N) -> N:
        """Product.  Zero absorbs; otherwise (x-1), (y-1) drive the digit loop."""
        if self.is_e(x) or self.is_e(y):
            return self.e
        is_e, is_o = self.is_e, self.is_o
        o, o_inv, i_inv, succ, add = self.o, self.o_inv, self.i_inv, self.succ, self.add
        a = self.pred(x)
        b = self.pred(y)
        # Strip a's digits outermost-first, then fold back innermost-first:
        # an o digit doubles-and-increments, an i digit also adds b back in.
        digits = []
        while not is_e(a):
            if is_o(a):
                digits.append(True)
                a = o_inv(a)
            else:
                digits.append(False)
                a = i_inv(a)
        acc = b
        for is_o_digit in reversed(digits):
            acc = o(acc) if is_o_digit else succ(add(b, o(acc)))
        return succ(acc)

    def db(self, x: N) -> N:
        """Double."""
        return self.pred(self.o(x))

    def hf(self, x: N) -> N:
        """Half of an even positive value; domain error otherwise."""
        return self.succ(self.i_inv(x))

    def pow(self, x: N, y: N) -> N:
        """x raised to y, by squaring on y's digits; pow(0, 0) is 1."""
        if self.is_e(y):
            return self._one
        xx = self.mul(x, x)
        if self.is_o(y):
            return self.mul(x, self.pow(xx, self.o_inv(y)))
        return self.mul(xx, self.pow(xx, self.i_inv(y)))

    def exp2(self, x: N) -> N:
        """2 raised to x."""
        acc = self._one
        db, pred, is_e = self.db, self.pred, self.is_e
        while not is_e(x):
            acc = db(acc)
            x = pred(x)
        return acc

    def leftshift(self, x: N, y: N) -> N:
        """y times 2 raised to x."""
        return self.mul(self.exp2(x), y)

    def div_and_rem(self, x: N, y: N) -> tuple[N, N]:
        """Quotient and remainder; domain error when y is zero."""
        if self.is_e(y):
            raise DomainError("division by zero")
        q = self.e
        r = x
        while self.cmp(r, y) is not LT:
            qt, r = self._divstep(r, y)
            q = self.add(q, self.exp2(qt))
        return q, r

    def _divstep(self, n: N, m: N) -> tuple[N, N]:
        # Largest k with 2^k * m <= n, found by repeated doubling; requires n >= m.
        k = self.e
        grown = m
        cmp, db, succ = self.cmp, self.db, self.succ
        while cmp(n, grown) is not LT:
            grown = db(grown)
            k = succ(k)
        qt = self.pred(k)
        return qt, self.sub(n, self.mul(self.exp2(qt), m))

    def divide(self, x: N, y: N) -> N:
        return self.div_and_rem(x, y)[0]

    def remainder(self, x: N, y: N) -> N:
        return self.div_and_rem(x, y)[1]

    # ------------------------------------------------------------------
    # digit-level special computations
    # ------------------------------------------------------------------

    def dual(self, x: N) -> N:
        """Swap every o digit with i and vice versa.  An involution."""
        digits = self._strip_digits(x)
        y = self.e
        o, i = self.o, self.i
        for is_o_digit in reversed(digits):
            y = i(y) if is_o_digit else o(y)
        return y

    def bitsize(self, x: N) -> N:
        """Digit count of x in bijective base 2, as a value of this representation."""
        n = self.e
        is_e, is_o, o_inv, i_inv, succ = self.is_e, self.is_o, self.o_inv, self.i_inv, self.succ
        while not is_e(x):
            x = o_inv(x) if is_o(x) else i_inv(x)
            n = succ(n)
        return n

    def repsize(self, x: N) -> N:
        """Representation size; for digit-string representations this is bitsize."""
        return self.bitsize(x)

    def decons(self, z: N) -> tuple[N, N]:
        """Split z > 0 into a pair, inverting :meth:`cons`.

        Separates the outermost run of identical digits from the rest;
        a bijection from positive values onto all pairs.
        """
        if self.is_o(z):
            x0 = self.pred(self._ocount(z))
            y = self._otrim(z)
            x = self.pred(self.o(x0)) if self.is_e(y) else x0
            return x, y
        if self.is_i(z):
            x0 = self.pred(self._icount(z))
            y = self._itrim(z)
            x = self.pred(self.i(x0)) if self.is_e(y) else x0
            return x, y
        raise DomainError("decons of zero")

    def cons(self, x: N, y: N) -> N:
        """Pair x and y into a single positive value; inverse of :meth:`decons`."""
        succ = self.succ
        if self.is_e(y):
            if self.is_e(x):
                return self._one
            if self.is_o(x):
                return self._itimes(succ(self.i_inv(succ(x))), self.e)
            return self._otimes(succ(self.o_inv(succ(x))), self.e)
        if self.is_o(y):
            return self._itimes(succ(x), y)
        return self._otimes(succ(x), y)

    def to_list_alt(self, x: N) -> list[N]:
        """Run-splitting bijection from values to lists, via repeated decons."""
        out = []
        is_e, decons = self.is_e, self.decons
        while not is_e(x):
            head, x = decons(x)
            out.append(head)
        return out

    def from_list_alt(self, xs: list[N]) -> N:
        """Inverse of :meth:`to_list_alt`."""
        acc = self.e
        cons = self.cons
        for v in reversed(xs):
            acc = cons(v, acc)
        return acc

    # Internal run helpers for cons/decons: count and drop the outermost
    # run of o (resp. i) digits, and iterate a digit a given number of times.

    def _ocount(self, x: N) -> N:
        n = self.e
        while self.is_o(x):
            x = self.o_inv(x)
            n = self.succ(n)
        return n

    def _icount(self, x: N) -> N:
        n = self.e
        while self.is_i(x):
            x = self.i_inv(x)
            n = self.succ(n)
        return n

    def _otrim(self, x: N) -> N:
        while self.is_o(x):
            x = self.o_inv(x)
        return x

    def _itrim(self, x: N) -> N:
        while self.is_i(x):
            x = self.i_inv(x)
        return x

    def _otimes(self, k: N, y: N) -> N:
        while not self.is_e(k):
            y = self.o(y)
            k = self.pred(k)
        return y

    def _itimes(self, k: N, y: N) -> N:
        while not self.is_e(k):
            y = self.i(y)
            k = self.pred(k)
        return y

    # ------------------------------------------------------------------
    # conversions
    # ------------------------------------------------------------------

    def _strip_digits(self, x: N) -> list[bool]:
        # Outermost digit first; True marks an o digit.
        digits = []
        is_e, is_o, o_inv, i_inv = self.is_e, self.is_o, self.o_inv, self.i_inv
        while not is_e(x):
            if is_o(x):
                digits.append(True)
                x = o_inv(x)
            else:
                digits.append(False)
                x = i_inv(x)
        return digits

    def from_int(self, k: int) -> N:
        """Build the value for a Python int."""
        if k < 0:
            raise DomainError("negative value")
        digits = []
        while k:
            if k & 1:
                digits.append(True)
                k = (k - 1) >> 1
            else:
                digits.append(False)
                k = (k - 2) >> 1
        x = self.e
        o, i = self.o, self.i
        for is_o_digit in reversed(digits):
            x = o(x) if is_o_digit else i(x)
        return x

    def to_int(self, x: N) -> int:
        """Numeric value as a Python int."""
        n = 0
        for is_o_digit in reversed(self._strip_digits(x)):
            n = 2 * n + 1 if is_o_digit else 2 * n + 2
        return n


def view(x, src: NatRep, dst: NatRep):
    """Re-express a value of representation ``src`` in representation ``dst``.

    Structural recursion over the digits; value preserving.
    """
    digits = src._strip_digits(x)
    y = dst.e
    o, i = dst.o, dst.i
    for is_o_digit in reversed(digits):
        y = o(y) if is_o_digit else i(y)
    return y
