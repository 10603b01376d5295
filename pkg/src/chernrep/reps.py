"""Characters of concrete representations and constructions on them."""

from .char_ring import CharSeries, VirtualCharacter, lambda_series
from .errors import RankMismatchError
from .weyl import GL, SO_ODD, TORUS, weyl_generators


def standard(g):
    """Character of the standard representation: unit weights for GL(n),
    +-x_i for Sp(2l) and SO(2l), +-x_i and 0 for SO(2l+1)."""
    if g.family == TORUS:
        raise ValueError("a torus has no standard representation")
    n = g.rank
    weights = []
    for i in range(n):
        e = [0] * n
        e[i] = 1
        weights.append(tuple(e))
        if g.family != GL:
            weights.append(tuple(-c for c in e))
    if g.family == SO_ODD:
        weights.append((0,) * n)
    return VirtualCharacter.from_weights(n, weights)


def exterior(x, p):
    """Exterior power: coefficient p of the lambda series."""
    if p < 0:
        raise ValueError("exterior power needs p >= 0")
    return lambda_series(x, p).coefficient(p)


def symmetric(x, p):
    """Symmetric power: coefficient p of the truncated inverse of
    lambda_{-t}(x)."""
    if p < 0:
        raise ValueError("symmetric power needs p >= 0")
    lam = lambda_series(x, p)
    alt = CharSeries(
        x.rank,
        [c if k % 2 == 0 else -c for k, c in enumerate(lam.coeffs)],
    )
    return alt.inverse().coefficient(p)


def dual(x):
    """Weight negation, multiplicities preserved."""
    return VirtualCharacter(x.rank, {tuple(-c for c in w): m for w, m in x.terms.items()})


def assert_g_rep(x, g):
    """True iff x is invariant under the Weyl group of g (checked on
    generators), i.e. lies in the image of R(G) inside R(T)."""
    if x.rank != g.torus_rank:
        raise RankMismatchError(f"character rank {x.rank} != torus rank {g.torus_rank}")
    for w in weyl_generators(g):
        moved = {}
        for weight, m in x.terms.items():
            moved[w.act(weight)] = m
        if moved != x.terms:
            return False
    return True
