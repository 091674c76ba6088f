"""Weights, roots and partition data for gl(p+q|n).

Coordinates: a weight is written (lam_1,...,lam_m ; omg_1,...,omg_n) with
m = p+q, in the basis eps_1..eps_m, delta_1..delta_n.  The invariant form is
(eps_i, eps_j) = delta_ij, (delta_mu, delta_nu) = -delta_munu, mixed = 0.
"""

from dataclasses import dataclass
from fractions import Fraction


class SignatureError(ValueError):
    pass


class SignatureMismatchError(ValueError):
    pass


class DominanceError(ValueError):
    pass


def rational(x):
    """Coerce to Fraction; accepts int, Fraction, or 'a/b' string."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f'not a rational: {x!r}')


@dataclass(frozen=True)
class Signature:
    """Block sizes (p, q | n) of the real form; m = p + q."""
    p: int
    q: int
    n: int

    def __post_init__(self):
        if self.p < 1 or self.q < 0 or self.n < 0:
            raise SignatureError(f'bad signature ({self.p},{self.q},{self.n})')
        if self.p + self.q + self.n < 1:
            raise SignatureError('empty signature')

    @property
    def m(self):
        return self.p + self.q

    def parity(self, a):
        # index parity: 0 for eps-block (a <= m), 1 for delta-block
        if not 1 <= a <= self.m + self.n:
            raise IndexError(f'index {a} out of range for {self}')
        return 0 if a <= self.m else 1

    def __str__(self):
        return f'{self.p},{self.q},{self.n}'


@dataclass(frozen=True)
class Weight:
    sig: Signature
    lam: tuple
    omg: tuple

    def __post_init__(self):
        if len(self.lam) != self.sig.m or len(self.omg) != self.sig.n:
            raise SignatureMismatchError(
                f'weight has blocks ({len(self.lam)}|{len(self.omg)}), '
                f'signature wants ({self.sig.m}|{self.sig.n})')
        object.__setattr__(self, 'lam', tuple(rational(x) for x in self.lam))
        object.__setattr__(self, 'omg', tuple(rational(x) for x in self.omg))

    def entry(self, a):
        """1-based coordinate: lam_a for a <= m, omg_{a-m} beyond."""
        m = self.sig.m
        return self.lam[a - 1] if a <= m else self.omg[a - m - 1]

    def __add__(self, other):
        if self.sig != other.sig:
            raise SignatureMismatchError('mixed signatures')
        return Weight(self.sig,
                      tuple(a + b for a, b in zip(self.lam, other.lam)),
                      tuple(a + b for a, b in zip(self.omg, other.omg)))

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return Weight(self.sig, tuple(-a for a in self.lam),
                      tuple(-a for a in self.omg))

    def __str__(self):
        return format_weight(self)


@dataclass(frozen=True)
class ExchangedWeight:
    """A weight of gl(n|q+p), the parity-exchanged partner of gl(p+q|n).

    `sig` records the underlying (p,q|n); `even` has the n entries of the
    exchanged even block, `odd` the q+p entries of the exchanged odd block.
    """
    sig: Signature
    even: tuple
    odd: tuple

    def __post_init__(self):
        if len(self.even) != self.sig.n or len(self.odd) != self.sig.m:
            raise SignatureMismatchError('exchanged weight block mismatch')
        object.__setattr__(self, 'even', tuple(rational(x) for x in self.even))
        object.__setattr__(self, 'odd', tuple(rational(x) for x in self.odd))


@dataclass(frozen=True)
class Root:
    """eps_a - eps_b in unified coordinates (delta_mu = eps_{m+mu}), a != b."""
    a: int
    b: int

    def parity(self, sig):
        return (sig.parity(self.a) + sig.parity(self.b)) % 2

    def is_positive(self):
        return self.a < self.b

    def weight(self, sig):
        m, n = sig.m, sig.n
        co = [Fraction(0)] * (m + n)
        co[self.a - 1] += 1
        co[self.b - 1] -= 1
        return Weight(sig, tuple(co[:m]), tuple(co[m:]))


def bilinear(u, v):
    """Invariant form; signatures must agree on block sizes (m|n)."""
    if (u.sig.m, u.sig.n) != (v.sig.m, v.sig.n):
        raise SignatureMismatchError('block sizes differ')
    s = sum(a * b for a, b in zip(u.lam, v.lam))
    return s - sum(a * b for a, b in zip(u.omg, v.omg))


def rho(m, n, sig=None):
    """Half-sum weight: rho = rho_even - rho_odd for gl(m|n)."""
    if sig is None:
        sig = Signature(m, 0, n)
    if (sig.m, sig.n) != (m, n):
        raise SignatureMismatchError('rho block sizes differ from signature')
    lam = tuple(Fraction(m - n - 2 * i + 1, 2) for i in range(1, m + 1))
    omg = tuple(Fraction(m + n - 2 * mu + 1, 2) for mu in range(1, n + 1))
    return Weight(sig, lam, omg)


def rho_weight(w):
    """rho on the signature of w."""
    return rho(w.sig.m, w.sig.n, w.sig)


def _nonneg_int(x):
    return x >= 0 and x.denominator == 1


def is_dominant(w):
    """Dominance w.r.t. the compact subalgebra: integral non-increasing
    steps inside each eps block (1..p and p+1..m) and along the delta block."""
    p, m = w.sig.p, w.sig.m
    for i in range(1, m):
        if i == p:
            continue
        if not _nonneg_int(w.lam[i - 1] - w.lam[i]):
            return False
    for mu in range(1, w.sig.n):
        if not _nonneg_int(w.omg[mu - 1] - w.omg[mu]):
            return False
    return True


def is_integral(w):
    if not is_dominant(w):
        return False
    return all(x.denominator == 1 for x in w.lam + w.omg)


def shift_scalar(w, s):
    """Tensor by the 1-dim character of weight (s,...,s;-s,...,-s)."""
    s = rational(s)
    return Weight(w.sig, tuple(x + s for x in w.lam),
                  tuple(x - s for x in w.omg))


def shift_block(w, s, plus=True):
    """Add s to the second eps block (plus) or subtract s from the first."""
    s = rational(s)
    if not 0 <= s <= 1:
        raise ValueError('block shift wants 0 <= s <= 1')
    p = w.sig.p
    if plus:
        lam = w.lam[:p] + tuple(x + s for x in w.lam[p:])
    else:
        lam = tuple(x - s for x in w.lam[:p]) + w.lam[p:]
    return Weight(w.sig, lam, w.omg)


def char_weight(sig, s):
    """The weight (s,...,s;-s,...,-s) of the 1-dim character."""
    s = rational(s)
    return Weight(sig, (s,) * sig.m, (-s,) * sig.n)


@dataclass(frozen=True)
class GeneralizedPartition:
    """Non-increasing integer tuple; equality ignores trailing zeros."""
    parts: tuple

    def __post_init__(self):
        parts = tuple(int(x) for x in self.parts)
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f'not non-increasing: {parts}')
        object.__setattr__(self, 'parts', parts)

    @property
    def normalized(self):
        parts = self.parts
        k = len(parts)
        while k and parts[k - 1] == 0:
            k -= 1
        return parts[:k]

    def __eq__(self, other):
        if isinstance(other, GeneralizedPartition):
            return self.normalized == other.normalized
        return NotImplemented

    def __hash__(self):
        return hash(self.normalized)

    def part(self, i):
        """1-based part with the out-of-range-is-zero convention."""
        if 1 <= i <= len(self.parts):
            return self.parts[i - 1]
        return 0

    @property
    def plus(self):
        """lam_plus: negative parts replaced by zero."""
        return GeneralizedPartition(tuple(max(x, 0) for x in self.parts))

    @property
    def minus(self):
        """lam_minus: positive parts replaced by zero."""
        return GeneralizedPartition(tuple(min(x, 0) for x in self.parts))

    @property
    def minus_star(self):
        """(-lam_minus) reversed: an ordinary partition."""
        return GeneralizedPartition(tuple(-x for x in reversed(self.minus.parts)))

    def __len__(self):
        return len(self.parts)


def conjugate(lam):
    """Transpose of the Young diagram of a partition (all parts >= 0)."""
    parts = lam.normalized
    if any(x < 0 for x in parts):
        raise ValueError('conjugate wants non-negative parts')
    if not parts:
        return GeneralizedPartition(())
    return GeneralizedPartition(
        tuple(sum(1 for x in parts if x >= i) for i in range(1, parts[0] + 1)))


def in_partition_cone(lam, d, sig):
    """Membership test for the parameter cone of depth-d partitions:
    length d (zeros padded), lam_{q+1} <= n and lam_{d-p} >= 0."""
    if len(lam.parts) > d:
        raise ValueError(f'partition longer than d={d}')
    return lam.part(sig.q + 1) <= sig.n and (d - sig.p < 1 or lam.part(d - sig.p) >= 0)


def lambda_flat(lam, d, sig):
    """The gl(p+q|n) highest weight paired with the depth-d parameter lam."""
    p, q, n = sig.p, sig.q, sig.n
    if not in_partition_cone(lam, d, sig):
        raise DominanceError(f'{lam.parts} not in the depth-{d} cone for {sig}')
    neg = [j for j in range(1, d + 1) if lam.part(j) < 0]
    first = [Fraction(-d)] * p
    if neg:
        r = neg[0]
        tail = [Fraction(-d + lam.part(j)) for j in range(r, d + 1)]
        first = [Fraction(-d)] * (p - len(tail)) + tail
    plus = lam.plus
    second = [Fraction(plus.part(k)) for k in range(1, q + 1)]
    cplus = conjugate(plus)
    third = [Fraction(max(cplus.part(mu) - q, 0)) for mu in range(1, n + 1)]
    return Weight(sig, tuple(first + second), tuple(third))


@dataclass(frozen=True)
class ThetaShift:
    """Noncompact shift with even multiplicities a_ik (i <= p < k,
    non-negative integers) and odd multiplicities b_imu in {0,1}.  Its
    weight has coordinates +a+b on the first eps block, -a on the second
    and +b on the delta block; heights count eps_i - eps_k as p+k-i and
    the odd cells as m-i+mu."""
    a: tuple  # p rows of q entries
    b: tuple  # p rows of n entries

    def __post_init__(self):
        a = tuple(tuple(int(x) for x in row) for row in self.a)
        b = tuple(tuple(int(x) for x in row) for row in self.b)
        if any(x < 0 for row in a for x in row):
            raise ValueError('even multiplicities must be non-negative')
        if any(x not in (0, 1) for row in b for x in row):
            raise ValueError('odd multiplicities must be 0/1')
        object.__setattr__(self, 'a', a)
        object.__setattr__(self, 'b', b)

    def weight(self, sig):
        p, q, n, m = sig.p, sig.q, sig.n, sig.m
        lam = [Fraction(0)] * m
        omg = [Fraction(0)] * n
        for i in range(p):
            for k in range(q):
                lam[i] += self.a[i][k]
                lam[p + k] -= self.a[i][k]
            for mu in range(n):
                lam[i] += self.b[i][mu]
                omg[mu] += self.b[i][mu]
        return Weight(sig, tuple(lam), tuple(omg))

    def height(self, sig):
        p, m = sig.p, sig.m
        h = 0
        for i in range(1, p + 1):
            for k in range(1, sig.q + 1):
                h += self.a[i - 1][k - 1] * (p + k - i)
            for mu in range(1, sig.n + 1):
                h += self.b[i - 1][mu - 1] * (m - i + mu)
        return h


def tau_weight(w):
    """Full coordinate reversal between gl(p+q|n) and gl(n|q+p) weights.

    Weight -> ExchangedWeight and back; an involution.
    """
    if isinstance(w, Weight):
        ents = w.lam + w.omg
        rev = tuple(reversed(ents))
        n = w.sig.n
        return ExchangedWeight(w.sig, rev[:n], rev[n:])
    if isinstance(w, ExchangedWeight):
        rev = tuple(reversed(w.even + w.odd))
        m = w.sig.m
        return Weight(w.sig, rev[:m], rev[m:])
    raise TypeError('tau_weight wants a Weight or ExchangedWeight')


def parse_signature(text):
    parts = text.split(',')
    if len(parts) != 3:
        raise SignatureError(f'signature wants "p,q,n": {text!r}')
    try:
        p, q, n = (int(x) for x in parts)
    except ValueError as exc:
        raise SignatureError(str(exc)) from None
    return Signature(p, q, n)


def parse_weight(text, sig):
    """Parse "l1,...,lm;w1,...,wn" with rational entries."""
    if ';' in text:
        left, _, right = text.partition(';')
    else:
        left, right = text, ''
    try:
        lam = tuple(rational(x) for x in left.split(',')) if left.strip() else ()
        omg = tuple(rational(x) for x in right.split(',')) if right.strip() else ()
    except (ValueError, ZeroDivisionError) as exc:
        raise SignatureMismatchError(f'bad weight {text!r}: {exc}') from None
    return Weight(sig, lam, omg)


def _fmt(x):
    return str(x.numerator) if x.denominator == 1 else f'{x.numerator}/{x.denominator}'


def format_weight(w):
    return ','.join(_fmt(x) for x in w.lam) + ';' + ','.join(_fmt(x) for x in w.omg)
