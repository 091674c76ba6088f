"""Shared generators: fast seeded random weights and hypothesis strategies."""

from fractions import Fraction

from hypothesis import HealthCheck, settings, strategies as st

from superunitary.weights import Signature, Weight

settings.register_profile(
    'exact', deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much])
settings.load_profile('exact')


def random_block(rng, length, integral=False, lo=-8, hi=8):
    """Non-increasing block with integer steps and a shared denominator."""
    if length == 0:
        return ()
    den = 1 if integral else rng.choice((1, 2, 3, 4))
    out = [Fraction(rng.randint(lo * den, hi * den), den)]
    for _ in range(length - 1):
        out.append(out[-1] - rng.randint(0, 3))
    return tuple(out)


def random_dominant(rng, sig, integral=False):
    lam = (random_block(rng, sig.p, integral)
           + random_block(rng, sig.q, integral))
    omg = random_block(rng, sig.n, integral)
    return Weight(sig, lam, omg)


@st.composite
def signatures(draw, max_p=3, max_q=3, max_n=3, min_q=1, min_n=1):
    return Signature(draw(st.integers(1, max_p)),
                     draw(st.integers(min_q, max_q)),
                     draw(st.integers(min_n, max_n)))


@st.composite
def dominant_weights(draw, sig=None, integral=False):
    if sig is None:
        sig = draw(signatures())

    def block(length):
        if length == 0:
            return ()
        den = 1 if integral else draw(st.sampled_from((1, 2, 3, 4)))
        start = Fraction(draw(st.integers(-8 * den, 8 * den)), den)
        steps = draw(st.lists(st.integers(0, 3), min_size=length - 1,
                              max_size=length - 1))
        out = [start]
        for s in steps:
            out.append(out[-1] - s)
        return tuple(out)

    lam = block(sig.p) + block(sig.q)
    omg = block(sig.n)
    return Weight(sig, lam, omg)


@st.composite
def partitions(draw, max_len=4, max_part=5):
    length = draw(st.integers(0, max_len))
    parts = sorted((draw(st.integers(0, max_part)) for _ in range(length)),
                   reverse=True)
    return tuple(parts)
