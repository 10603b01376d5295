"""Classical group descriptors and Weyl groups as signed permutations.

Weights live in the character lattice Z^n of a maximal torus and are plain
integer tuples.  Weyl groups of the four classical families (and the trivial
group of a torus) are realized concretely: permutations for GL(n), all signed
permutations for Sp(2l) and SO(2l+1), and evenly-signed permutations for
SO(2l), acting in the standard coordinates of the lattice.
"""

from dataclasses import dataclass
from itertools import permutations, product
from math import factorial

from .errors import EnumerationLimitError, RankMismatchError

GL = "GL"
SP = "Sp"
SO_ODD = "SOodd"
SO_EVEN = "SOeven"
TORUS = "Torus"

FAMILIES = (GL, SP, SO_ODD, SO_EVEN, TORUS)

# Full enumeration of W is refused beyond this order.
ENUMERATION_LIMIT = 10**6


@dataclass(frozen=True)
class GroupSpec:
    """A classical reductive group (or torus) given by family and rank."""

    family: str
    rank: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.rank < 1:
            raise ValueError("rank must be >= 1")

    @property
    def torus_rank(self):
        return self.rank

    @property
    def ambient_dim(self):
        """Dimension of the standard representation."""
        if self.family == GL:
            return self.rank
        if self.family == SP:
            return 2 * self.rank
        if self.family == SO_ODD:
            return 2 * self.rank + 1
        if self.family == SO_EVEN:
            return 2 * self.rank
        raise ValueError("a torus has no standard representation")

    def __str__(self):
        if self.family == TORUS:
            return f"T{self.rank}"
        if self.family == GL:
            return f"GL{self.rank}"
        return f"{'Sp' if self.family == SP else 'SO'}{self.ambient_dim}"


@dataclass(frozen=True)
class SignedPermutation:
    """perm[j] is the image slot of slot j; signs[i] multiplies slot i."""

    perm: tuple
    signs: tuple

    def __post_init__(self):
        n = len(self.perm)
        if sorted(self.perm) != list(range(n)) or len(self.signs) != n:
            raise ValueError("not a signed permutation")
        if any(s not in (1, -1) for s in self.signs):
            raise ValueError("signs must be +-1")

    @classmethod
    def identity(cls, n):
        return cls(tuple(range(n)), (1,) * n)

    def act(self, coords):
        """Send weight a to w.a: coordinate perm[j] of the result is
        signs[perm[j]] * a[j]."""
        if len(coords) != len(self.perm):
            raise RankMismatchError(
                f"weight length {len(coords)} != rank {len(self.perm)}"
            )
        out = [0] * len(coords)
        for j, a in enumerate(coords):
            i = self.perm[j]
            out[i] = self.signs[i] * a
        return tuple(out)

    def compose(self, other):
        """self after other, so (self.compose(other)).act == self.act(other.act(.))."""
        n = len(self.perm)
        perm = tuple(self.perm[other.perm[j]] for j in range(n))
        # sign at slot i comes from self at i and from other at self^-1(i)
        inv = self.inverse()
        signs = tuple(self.signs[i] * other.signs[inv.perm[i]] for i in range(n))
        return SignedPermutation(perm, signs)

    def inverse(self):
        n = len(self.perm)
        inv = [0] * n
        for j in range(n):
            inv[self.perm[j]] = j
        signs = tuple(self.signs[self.perm[j]] for j in range(n))
        return SignedPermutation(tuple(inv), signs)


def act(w, a):
    return w.act(a)


def weyl_order(g):
    n = g.rank
    if g.family in (TORUS,):
        return 1
    if g.family == GL:
        return factorial(n)
    if g.family in (SP, SO_ODD):
        return 2**n * factorial(n)
    return 2 ** (n - 1) * factorial(n)


def weyl_elements(g):
    """All elements of W(g), each exactly once.

    Refuses with EnumerationLimitError when |W| exceeds the guard.
    """
    order = weyl_order(g)
    if order > ENUMERATION_LIMIT:
        raise EnumerationLimitError(
            f"|W| = {order} exceeds enumeration limit {ENUMERATION_LIMIT}"
        )
    n = g.rank
    if g.family == TORUS:
        return [SignedPermutation.identity(n)]
    perms = [tuple(p) for p in permutations(range(n))]
    if g.family == GL:
        plus = (1,) * n
        return [SignedPermutation(p, plus) for p in perms]
    if g.family in (SP, SO_ODD):
        return [
            SignedPermutation(p, s)
            for p in perms
            for s in product((1, -1), repeat=n)
        ]
    # SOeven: only sign vectors with product +1
    out = []
    for p in perms:
        for s in product((1, -1), repeat=n):
            sign_product = 1
            for v in s:
                sign_product *= v
            if sign_product == 1:
                out.append(SignedPermutation(p, s))
    return out


def weyl_generators(g):
    """A small generating set: adjacent transpositions plus, where the family
    has them, one sign-flip pattern (last slot for Sp/SOodd, last two slots
    for SOeven)."""
    n = g.rank
    gens = []
    for i in range(n - 1):
        perm = list(range(n))
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
        gens.append(SignedPermutation(tuple(perm), (1,) * n))
    ident = tuple(range(n))
    if g.family in (SP, SO_ODD):
        signs = [1] * n
        signs[n - 1] = -1
        gens.append(SignedPermutation(ident, tuple(signs)))
    elif g.family == SO_EVEN and n >= 2:
        signs = [1] * n
        signs[n - 1] = -1
        signs[n - 2] = -1
        gens.append(SignedPermutation(ident, tuple(signs)))
    if not gens:  # rank-1 torus-like cases still need a group
        gens.append(SignedPermutation.identity(n))
    return gens


def orbit(g, a):
    """The set {w.a : w in W}."""
    if len(a) != g.torus_rank:
        raise RankMismatchError(f"weight length {len(a)} != rank {g.torus_rank}")
    weyl_order_check = weyl_order(g)
    if weyl_order_check > ENUMERATION_LIMIT:
        raise EnumerationLimitError(
            f"|W| = {weyl_order_check} exceeds enumeration limit {ENUMERATION_LIMIT}"
        )
    # closure under generators; avoids materializing W for large orbits
    gens = weyl_generators(g)
    seen = {tuple(a)}
    frontier = [tuple(a)]
    while frontier:
        nxt = []
        for b in frontier:
            for w in gens:
                c = w.act(b)
                if c not in seen:
                    seen.add(c)
                    nxt.append(c)
        frontier = nxt
    return seen
