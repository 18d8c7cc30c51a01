"""Shared strategies, fixtures, and independent oracles for the test suite.

The convolution oracle here deliberately computes coefficients the slow way
(filter all support pairs per target exponent) so it shares no code path with
Series multiplication. GPS_RB_SEED pins the plain-random sampling used by the
bulk acceptance checks; the default keeps runs reproducible without the env
var set.
"""

import os
import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from gpsrb import (
    IntLine,
    QQ,
    RatScalar,
    Series,
    VectorProduct,
    ZZ,
)

DEFAULT_SEED = 20260814


@pytest.fixture
def rng():
    return random.Random(int(os.environ.get("GPS_RB_SEED", DEFAULT_SEED)))


def naive_convolve(f: Series, g: Series) -> Series:
    """Independent convolution oracle: per-exponent pair filtering, no accumulation maps."""
    add = f.monoid.add
    sums = {add(u, v) for u in f.support() for v in g.support()}
    terms = {}
    for s in sums:
        total = f.ring.zero()
        for u in f.support():
            for v in g.support():
                if add(u, v) == s:
                    total = total + f.coeff(u) * g.coeff(v)
        terms[s] = total
    return Series(f.monoid, f.ring, terms)


# hypothesis strategies

int_scalars = st.integers(min_value=-50, max_value=50).map(ZZ.from_int)

rat_scalars = st.builds(
    lambda n, d: RatScalar(Fraction(n, d)),
    st.integers(min_value=-30, max_value=30),
    st.integers(min_value=1, max_value=12),
)


def int_series(ring=QQ, scalars=None, max_terms=6, exp_lo=-10, exp_hi=10):
    """Series over IntLine with bounded support."""
    if scalars is None:
        scalars = rat_scalars if ring is QQ else int_scalars
    return st.dictionaries(
        st.integers(min_value=exp_lo, max_value=exp_hi), scalars, max_size=max_terms
    ).map(lambda d: Series(IntLine(), ring, d))


def vec2_series(ring=QQ, scalars=None, max_terms=5, box=3):
    if scalars is None:
        scalars = rat_scalars if ring is QQ else int_scalars
    exps = st.tuples(
        st.integers(min_value=-box, max_value=box), st.integers(min_value=-box, max_value=box)
    )
    return st.dictionaries(exps, scalars, max_size=max_terms).map(
        lambda d: Series(VectorProduct(2), ring, d)
    )


def random_rat(rng: random.Random) -> RatScalar:
    return RatScalar(Fraction(rng.randint(-9, 9), rng.randint(1, 9)))


def random_int_series(rng: random.Random, max_support=8, exp_lo=-10, exp_hi=10) -> Series:
    """Plain-random counterpart of int_series for the bulk acceptance runs."""
    n = rng.randint(0, max_support)
    terms = {}
    for _ in range(n):
        terms[rng.randint(exp_lo, exp_hi)] = random_rat(rng)
    return Series(IntLine(), QQ, terms)
