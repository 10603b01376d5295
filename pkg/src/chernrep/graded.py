"""Graded side of the character ring: polynomials, symbol map, Chern data.

A virtual character embeds into polynomials on the Lie algebra of the torus
by sending a weight a to the truncated exponential of the linear form
La = a_1 x_1 + ... + a_n x_n.  The embedding is injective and filtration
preserving, so the lowest nonvanishing homogeneous degree of the image
computes the gamma-filtration degree, and homogeneous components of images
of gamma operations are Chern classes.
"""

from fractions import Fraction
from math import factorial

from .char_ring import VirtualCharacter, augmentation, gamma_series
from .errors import AugmentationError, FiltrationCapError, RankMismatchError

BEYOND_CAP = "beyond-cap"


def _coerce(c):
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError(f"coefficients must be exact rationals, got {type(c).__name__}")


class SymbolicPolynomial:
    """Sparse polynomial in x_1..x_n with exact rational coefficients.

    Stored as a map from exponent vectors to nonzero Fractions.
    """

    __slots__ = ("rank", "terms")

    def __init__(self, rank, terms=None):
        collected = {}
        for exps, c in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != rank:
                raise RankMismatchError(
                    f"exponent vector {exps} has length {len(exps)}, expected {rank}"
                )
            if any(e < 0 for e in exps):
                raise ValueError("exponents must be nonnegative")
            c = _coerce(c)
            if c:
                prev = collected.get(exps)
                collected[exps] = c if prev is None else prev + c
        object.__setattr__(
            self, "terms", {e: c for e, c in collected.items() if c}
        )
        object.__setattr__(self, "rank", rank)

    def __setattr__(self, name, value):
        raise AttributeError("SymbolicPolynomial is immutable")

    @classmethod
    def zero(cls, rank):
        return cls(rank, {})

    @classmethod
    def constant(cls, rank, c):
        return cls(rank, {(0,) * rank: c})

    @classmethod
    def one(cls, rank):
        return cls.constant(rank, 1)

    @classmethod
    def variable(cls, rank, i):
        """x_i with 1-based index i."""
        if not 1 <= i <= rank:
            raise ValueError(f"variable index {i} outside 1..{rank}")
        exps = [0] * rank
        exps[i - 1] = 1
        return cls(rank, {tuple(exps): 1})

    @classmethod
    def linear_form(cls, coords):
        """The form La = sum a_i x_i of a weight a."""
        rank = len(coords)
        terms = {}
        for i, a in enumerate(coords):
            if a:
                exps = [0] * rank
                exps[i] = 1
                terms[tuple(exps)] = Fraction(a)
        return cls(rank, terms)

    def coefficient(self, exps):
        return self.terms.get(tuple(exps), Fraction(0))

    def _check_rank(self, other):
        if self.rank != other.rank:
            raise RankMismatchError(f"rank {self.rank} != rank {other.rank}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SymbolicPolynomial.constant(self.rank, other)
        self._check_rank(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, Fraction(0)) + c
        return SymbolicPolynomial(self.rank, terms)

    __radd__ = __add__

    def __neg__(self):
        return SymbolicPolynomial(self.rank, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other if isinstance(other, SymbolicPolynomial) else -Fraction(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return SymbolicPolynomial(
                self.rank, {e: c * other for e, c in self.terms.items()}
            )
        self._check_rank(other)
        terms = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                key = tuple(a + b for a, b in zip(ea, eb))
                terms[key] = terms.get(key, Fraction(0)) + ca * cb
        return SymbolicPolynomial(self.rank, terms)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power")
        out = SymbolicPolynomial.one(self.rank)
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def __eq__(self, other):
        return (
            isinstance(other, SymbolicPolynomial)
            and self.rank == other.rank
            and self.terms == other.terms
        )

    def __bool__(self):
        return bool(self.terms)

    def __hash__(self):
        return hash((self.rank, tuple(sorted(self.terms.items()))))

    def total_degree(self):
        """Maximal total degree, or -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def homogeneous_component(self, p):
        return SymbolicPolynomial(
            self.rank, {e: c for e, c in self.terms.items() if sum(e) == p}
        )

    def homogeneous_split(self):
        """Map degree -> homogeneous component, only nonzero ones."""
        parts = {}
        for e, c in self.terms.items():
            parts.setdefault(sum(e), {})[e] = c
        return {
            p: SymbolicPolynomial(self.rank, terms)
            for p, terms in sorted(parts.items())
        }

    def is_homogeneous(self, p):
        return all(sum(e) == p for e in self.terms)

    def truncate(self, d):
        return SymbolicPolynomial(
            self.rank, {e: c for e, c in self.terms.items() if sum(e) <= d}
        )

    def apply_signed_permutation(self, w):
        """Substitute x_j -> signs[perm[j]] * x_perm[j].

        This is the action matching the Weyl action on weights: the image of
        the linear form of a weight a is the linear form of w.a.
        """
        if len(w.perm) != self.rank:
            raise RankMismatchError("permutation rank mismatch")
        terms = {}
        for e, c in self.terms.items():
            new = [0] * self.rank
            sign = 1
            for j, k in enumerate(e):
                i = w.perm[j]
                new[i] = k
                if w.signs[i] == -1 and k % 2 == 1:
                    sign = -sign
            key = tuple(new)
            terms[key] = terms.get(key, Fraction(0)) + sign * c
        return SymbolicPolynomial(self.rank, terms)

    def evaluate(self, point):
        """Evaluate at a tuple of Fractions/ints (exact)."""
        if len(point) != self.rank:
            raise RankMismatchError("evaluation point rank mismatch")
        total = Fraction(0)
        for e, c in self.terms.items():
            v = c
            for x, k in zip(point, e):
                if k:
                    v *= Fraction(x) ** k
            total += v
        return total

    def _ordered_exps(self):
        # ascending degree, then descending lex (x1 before x2 within a degree)
        return sorted(self.terms, key=lambda e: (sum(e), tuple(-k for k in e)))

    def to_text(self, var="x"):
        if not self.terms:
            return "0"
        parts = []
        for e in self._ordered_exps():
            c = self.terms[e]
            factors = []
            for i, k in enumerate(e):
                if k == 1:
                    factors.append(f"{var}{i + 1}")
                elif k > 1:
                    factors.append(f"{var}{i + 1}^{k}")
            mag = abs(c)
            if factors:
                body = "*".join(factors)
                text = body if mag == 1 else f"{mag}*{body}"
            else:
                text = str(mag)
            if not parts:
                parts.append(text if c > 0 else "-" + text)
            else:
                parts.append(("+ " if c > 0 else "- ") + text)
        return " ".join(parts)

    def to_json_obj(self):
        return [
            {
                "exponents": list(e),
                "numerator": self.terms[e].numerator,
                "denominator": self.terms[e].denominator,
            }
            for e in self._ordered_exps()
        ]

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"SymbolicPolynomial({self.rank}, {self.terms!r})"


class GradedClass:
    """A homogeneous polynomial explicitly tagged with its degree."""

    __slots__ = ("degree", "value")

    def __init__(self, degree, value):
        if not value.is_homogeneous(degree):
            raise ValueError(f"value is not homogeneous of degree {degree}")
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, value):
        raise AttributeError("GradedClass is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, GradedClass)
            and self.degree == other.degree
            and self.value == other.value
        )

    def __repr__(self):
        return f"GradedClass({self.degree}, {self.value!r})"


def symbol_map(x, d):
    """Embed a virtual character as a polynomial, truncated at degree d:
    each weight a contributes its multiplicity times sum_{k<=d} (La)^k / k!."""
    if d < 0:
        raise ValueError("truncation degree must be >= 0")
    rank = x.rank
    acc = {}
    for w in sorted(x.terms):
        m = x.terms[w]
        form = SymbolicPolynomial.linear_form(w)
        power = SymbolicPolynomial.one(rank)
        for k in range(d + 1):
            if k:
                power = (power * form).truncate(d)
            scale = Fraction(m, factorial(k))
            for e, c in power.terms.items():
                acc[e] = acc.get(e, Fraction(0)) + c * scale
    return SymbolicPolynomial(rank, acc)


def chern_character(x, d):
    """The Chern character: a ring homomorphism to rational polynomials,
    identical to the truncated exponential symbol map."""
    return symbol_map(x, d)


def default_cap(x):
    """Cap always large enough to detect nonzero filtration degree: two plus
    the summed coordinate spread of the distinct nonzero weights."""
    span = sum(sum(abs(c) for c in w) for w in x.terms if any(w))
    return 2 + span


def filtration_degree(x, cap):
    """Least p <= cap with nonzero degree-p symbol component of x - eps(x)[0];
    0 when eps(x) != 0, BEYOND_CAP when all components through cap vanish."""
    if cap < 1:
        raise ValueError("cap must be >= 1")
    eps = augmentation(x)
    if eps != 0:
        return 0
    image = symbol_map(x, cap)
    degrees = sorted(sum(e) for e in image.terms)
    if degrees:
        return degrees[0]
    return BEYOND_CAP


def leading_class(x, cap=None):
    """The class of x in gr: its lowest nonvanishing symbol component.

    Requires eps(x) = 0; raises FiltrationCapError past the cap (for x = 0
    there is no leading class at any cap).
    """
    if augmentation(x) != 0:
        raise AugmentationError("leading_class needs an augmentation-zero input")
    if cap is None:
        cap = default_cap(x)
    p = filtration_degree(x, cap)
    if p == BEYOND_CAP:
        raise FiltrationCapError(f"no nonzero component up to degree {cap}")
    return GradedClass(p, symbol_map(x, p).homogeneous_component(p))


def chern_class(x, p):
    """c_p(x): the degree-p component of the symbol of gamma^p(x - eps(x)),
    i.e. its class in the p-th graded piece; c_0 = 1."""
    if p < 0:
        raise ValueError("chern class degree must be >= 0")
    rank = x.rank
    if p == 0:
        return GradedClass(0, SymbolicPolynomial.one(rank))
    reduced = x - VirtualCharacter.unit(rank) * augmentation(x)
    g = gamma_series(reduced, p).coefficient(p)
    return GradedClass(p, symbol_map(g, p).homogeneous_component(p))


def total_chern(x, d):
    """Total Chern class through degree d; for an effective character this is
    the truncated product of (1 + La) over its weights."""
    if d < 0:
        raise ValueError("truncation degree must be >= 0")
    out = SymbolicPolynomial.zero(x.rank)
    for p in range(d + 1):
        out = out + chern_class(x, p).value
    return out
