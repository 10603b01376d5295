"""Small-scale computational check that the gamma filtration of an invariant
subring matches the restricted ambient filtration, rationally.

The ambient ring R(T) (tensor Q) is modelled modulo r^(d+1), r the
augmentation ideal: with u_i = [e_i] - [0] the quotient is the truncated
polynomial algebra on u_1..u_n, with monomial basis of total degree <= d,
and every character reduces exactly via [a] = prod (1 + u_i)^(a_i) expanded
through generalized binomials.

Inside the model two subspaces are built per degree p and compared:

  * the span of products gamma^{a_1}(z_1)...gamma^{a_k}(z_k), sum a_j = p,
    with the z's running over Weyl-orbit sums of bounded weights (these span
    the augmentation-zero invariants exactly);
  * the W-invariant vectors supported on basis monomials of degree >= p
    (the reduction of r^p, which is the ambient filtration for a split ring,
    cut down to the invariants).

All linear algebra is exact: integer echelon forms with canonical rational
reduced row echelon bases, so subspace equality is literal equality.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd

from .char_ring import VirtualCharacter, binomial, gamma_series
from .errors import ModelSizeError, ReductionDefectError
from .weyl import orbit, weyl_generators

MODEL_DIM_LIMIT = 20000


def _primitive(vec):
    g = 0
    for v in vec:
        g = gcd(g, abs(v))
        if g == 1:
            break
    if g > 1:
        vec = [v // g for v in vec]
    return vec


class _IntEchelon:
    """Incremental integer row echelon accumulator."""

    def __init__(self, dim):
        self.dim = dim
        self.rows = {}  # pivot column -> primitive integer row

    def insert(self, vec):
        """Reduce vec against the current rows; returns True if it enlarged
        the span."""
        vec = list(vec)
        if any(isinstance(v, Fraction) for v in vec):
            scale = 1
            for v in vec:
                if isinstance(v, Fraction):
                    scale = scale * v.denominator // gcd(scale, v.denominator)
            vec = [int(v * scale) for v in vec]
        for j in range(self.dim):
            b = vec[j]
            if not b:
                continue
            row = self.rows.get(j)
            if row is None:
                vec = _primitive(vec)
                if vec[j] < 0:
                    vec = [-v for v in vec]
                self.rows[j] = vec
                return True
            a = row[j]
            vec = _primitive([v * a - r * b for v, r in zip(vec, row)])
        return False

    def extend(self, vectors):
        for v in vectors:
            self.insert(v)

    @property
    def rank(self):
        return len(self.rows)

    def basis(self):
        return [tuple(self.rows[p]) for p in sorted(self.rows)]

    def to_subspace(self):
        pivots = sorted(self.rows)
        rows = [[Fraction(v) for v in self.rows[p]] for p in pivots]
        for i in range(len(rows) - 1, -1, -1):
            piv = pivots[i]
            lead = rows[i][piv]
            rows[i] = [v / lead for v in rows[i]]
            for k in range(i):
                c = rows[k][piv]
                if c:
                    rows[k] = [a - c * b for a, b in zip(rows[k], rows[i])]
        return Subspace(self.dim, tuple(tuple(r) for r in rows))


class Subspace:
    """Subspace of Q^dim with a canonical reduced-row-echelon basis."""

    __slots__ = ("ambient_dim", "rows", "_pivots")

    def __init__(self, ambient_dim, rows):
        pivots = []
        for row in rows:
            if len(row) != ambient_dim:
                raise ValueError("row length mismatch")
            p = next((j for j, v in enumerate(row) if v), None)
            if p is None:
                raise ValueError("zero row in a subspace basis")
            pivots.append(p)
        if pivots != sorted(set(pivots)):
            raise ValueError("rows are not in echelon order")
        object.__setattr__(self, "ambient_dim", ambient_dim)
        object.__setattr__(self, "rows", tuple(tuple(map(Fraction, r)) for r in rows))
        object.__setattr__(self, "_pivots", tuple(pivots))

    def __setattr__(self, name, value):
        raise AttributeError("Subspace is immutable")

    @classmethod
    def from_vectors(cls, ambient_dim, vectors):
        ech = _IntEchelon(ambient_dim)
        ech.extend(vectors)
        return ech.to_subspace()

    @property
    def dim(self):
        return len(self.rows)

    def residue(self, vec):
        """Remainder of vec after reduction by the basis."""
        vec = [Fraction(v) for v in vec]
        for piv, row in zip(self._pivots, self.rows):
            c = vec[piv]
            if c:
                vec = [a - c * b for a, b in zip(vec, row)]
        return vec

    def contains(self, vec):
        return not any(self.residue(vec))

    def contains_subspace(self, other):
        return all(self.contains(row) for row in other.rows)

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.ambient_dim == other.ambient_dim
            and self.rows == other.rows
        )

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim})"


def _nullspace(rows, ncols):
    """Kernel basis of the linear map given by equation rows."""
    mat = [[Fraction(v) for v in row] for row in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, len(mat)) if mat[i][c]), None)
        if pivot_row is None:
            continue
        mat[r], mat[pivot_row] = mat[pivot_row], mat[r]
        lead = mat[r][c]
        mat[r] = [v / lead for v in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            vec[pc] = -mat[i][fc]
        basis.append(vec)
    return basis


class TruncatedAlgebra:
    """R(T) tensor Q modulo r^(d+1), with a monomial basis in the u_i."""

    def __init__(self, group, d):
        if d < 1:
            raise ValueError("truncation degree must be >= 1")
        n = group.torus_rank
        dim = comb(n + d, d)
        if dim > MODEL_DIM_LIMIT:
            raise ModelSizeError(
                f"model dimension {dim} exceeds limit {MODEL_DIM_LIMIT}"
            )
        self.group = group
        self.d = d
        self.rank = n
        self.monomials = self._enumerate(n, d)
        self.index = {m: i for i, m in enumerate(self.monomials)}
        self.dim = dim

    @staticmethod
    def _enumerate(n, d):
        mons = [()]
        for _ in range(n):
            mons = [m + (k,) for m in mons for k in range(d + 1 - sum(m))]
        return sorted(mons, key=lambda m: (sum(m), m))

    def zero(self):
        return [0] * self.dim

    def unit(self):
        vec = self.zero()
        vec[self.index[(0,) * self.rank]] = 1
        return vec

    def reduce(self, x):
        """Image of a virtual character: [a] expands as the product of
        (1 + u_i)^(a_i) truncated, with integer binomial coefficients."""
        if x.rank != self.rank:
            raise ValueError("character rank does not match the model")
        vec = self.zero()
        for w, mult in x.terms.items():
            for i, m in enumerate(self.monomials):
                c = 1
                for a, k in zip(w, m):
                    if k:
                        c *= binomial(a, k)
                        if c == 0:
                            break
                if c:
                    vec[i] += mult * c
        return vec

    def multiply(self, u, v):
        out = [0] * self.dim
        support_u = [(i, a) for i, a in enumerate(u) if a]
        support_v = [(j, b) for j, b in enumerate(v) if b]
        for i, a in support_u:
            mi = self.monomials[i]
            for j, b in support_v:
                key = tuple(x + y for x, y in zip(mi, self.monomials[j]))
                idx = self.index.get(key)
                if idx is not None:
                    out[idx] += a * b
        return out

    def action_rows(self, w):
        """Rows of the matrix of w acting on the model basis."""
        cols = []
        for m in self.monomials:
            char = VirtualCharacter.unit(self.rank)
            for i, k in enumerate(m):
                if k:
                    e = [0] * self.rank
                    e[i] = 1
                    beta = w.act(tuple(e))
                    u_i = VirtualCharacter(
                        self.rank, {beta: 1, (0,) * self.rank: -1}
                    )
                    char = char * u_i**k
            cols.append(self.reduce(char))
        return [[cols[j][i] for j in range(self.dim)] for i in range(self.dim)]

    def invariant_subspace(self):
        """W-invariant vectors, as the joint kernel of (M_w - 1) over the
        Weyl generators."""
        equations = []
        for w in weyl_generators(self.group):
            rows = self.action_rows(w)
            for i, row in enumerate(rows):
                eq = list(row)
                eq[i] -= 1
                if any(eq):
                    equations.append(eq)
        if not equations:
            ech = _IntEchelon(self.dim)
            for i in range(self.dim):
                vec = self.zero()
                vec[i] = 1
                ech.insert(vec)
            return ech.to_subspace()
        return Subspace.from_vectors(self.dim, _nullspace(equations, self.dim))


def truncated_model(g, d):
    return TruncatedAlgebra(g, d)


def orbit_sum_generators(g, bound):
    """Augmentation-zero orbit sums over weights with coordinates in
    [-bound, bound]; exactly one per Weyl orbit."""
    n = g.torus_rank
    boxes = [()]
    for _ in range(n):
        boxes = [b + (k,) for b in boxes for k in range(-bound, bound + 1)]
    gens = []
    zero = (0,) * n
    for a in boxes:
        if a == zero:
            continue
        orb = orbit(g, a)
        if a != max(orb):
            continue
        terms = {b: 1 for b in orb}
        terms[zero] = terms.get(zero, 0) - len(orb)
        gens.append(VirtualCharacter(n, terms))
    return gens


class _PropContext:
    """Shared state for the per-degree subspace computations."""

    def __init__(self, g, d, bound=None):
        self.group = g
        self.model = TruncatedAlgebra(g, d)
        self.bound = d if bound is None else bound
        self.generators = orbit_sum_generators(g, self.bound)
        self._gamma_spans = {}
        self._product_spans = {}
        self._invariant = None

    def gamma_span(self, a):
        """Echelon basis of span{gamma^a(z) : z an orbit-sum generator}."""
        if a not in self._gamma_spans:
            ech = _IntEchelon(self.model.dim)
            for z in self.generators:
                val = gamma_series(z, a).coefficient(a)
                ech.insert(self.model.reduce(val))
            self._gamma_spans[a] = ech
        return self._gamma_spans[a]

    def product_span(self, p):
        """Echelon basis of the image of Gamma^p(S): products of gamma
        operations of total weight p applied to orbit-sum generators."""
        if p == 0:
            raise ValueError("product spans start at p = 1")
        if p not in self._product_spans:
            ech = _IntEchelon(self.model.dim)
            ech.extend(self.gamma_span(p).basis())
            for a in range(1, p):
                left = self.gamma_span(a).basis()
                right = self.product_span(p - a).basis()
                for u in left:
                    for v in right:
                        ech.insert(self.model.multiply(u, v))
            self._product_spans[p] = ech
        return self._product_spans[p]

    def invariant_subspace(self):
        if self._invariant is None:
            self._invariant = self.model.invariant_subspace()
        return self._invariant

    def gamma_subspace(self, p):
        if p == 0:
            ech = _IntEchelon(self.model.dim)
            ech.insert(self.model.unit())
            ech.extend(self.product_span(1).basis())
            return ech.to_subspace()
        return self.product_span(p).to_subspace()

    def ambient_cap_subspace(self, p):
        inv = self.invariant_subspace()
        if p == 0:
            return inv
        low = [i for i, m in enumerate(self.model.monomials) if sum(m) < p]
        if not inv.rows:
            return inv
        equations = [[row[j] for row in inv.rows] for j in low]
        combos = _nullspace(equations, inv.dim)
        vectors = []
        for c in combos:
            vec = [Fraction(0)] * self.model.dim
            for coeff, row in zip(c, inv.rows):
                if coeff:
                    vec = [a + coeff * b for a, b in zip(vec, row)]
            vectors.append(vec)
        return Subspace.from_vectors(self.model.dim, vectors)


def gamma_subspace_invariant(g, p, d, bound=None):
    """Image in the truncated model of the degree-p piece of the gamma
    filtration of the invariant subring."""
    return _PropContext(g, d, bound).gamma_subspace(p)


def gamma_subspace_ambient_cap_invariant(g, p, d):
    """Image of (ambient filtration degree p) intersected with the
    invariants: W-invariant vectors supported in basis degrees >= p."""
    return _PropContext(g, d).ambient_cap_subspace(p)


@dataclass(frozen=True)
class PropEntry:
    p: int
    dim_gamma_S: int
    dim_gamma_R_cap_S: int
    equal: bool
    witnesses: tuple = ()
    gamma_S: Subspace | None = None
    gamma_R_cap_S: Subspace | None = None


@dataclass(frozen=True)
class PropReport:
    group: str
    d: int
    entries: tuple
    passed: bool

    def to_json_obj(self):
        return {
            "group": self.group,
            "d": self.d,
            "entries": [
                {
                    "p": e.p,
                    "dim_gamma_S": e.dim_gamma_S,
                    "dim_gamma_R_cap_S": e.dim_gamma_R_cap_S,
                    "equal": e.equal,
                }
                for e in self.entries
            ],
            "pass": self.passed,
        }


def verify_prop(g, p_max, d, bound=None):
    """Compare, for each p <= p_max, the invariant-ring filtration subspace
    with the restricted ambient one.  The inclusion of the former in the
    latter must hold outright; equality failures are reported with the
    offending ambient basis vectors."""
    ctx = _PropContext(g, d, bound)
    entries = []
    for p in range(p_max + 1):
        s_side = ctx.gamma_subspace(p)
        ambient = ctx.ambient_cap_subspace(p)
        if not ambient.contains_subspace(s_side):
            raise ReductionDefectError(
                f"Gamma^{p}(S) not inside Gamma^{p}(R) cap S at degree {d}: "
                "the filtration inclusion failed, which indicates a defect"
            )
        equal = s_side == ambient
        witnesses = ()
        if not equal:
            witnesses = tuple(
                row for row in ambient.rows if not s_side.contains(row)
            )
        entries.append(
            PropEntry(p, s_side.dim, ambient.dim, equal, witnesses, s_side, ambient)
        )
    return PropReport(
        group=str(g),
        d=d,
        entries=tuple(entries),
        passed=all(e.equal for e in entries),
    )
