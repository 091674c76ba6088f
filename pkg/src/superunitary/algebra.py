"""Matrix units of gl(m|n), super-bracket, adjoints, and the Killing form.

Indices run 1..m+n; the first m are even, the rest odd.  E_{ab} has parity
[a]+[b] mod 2.  The adjoint operation of u(p,q|n) flips the sign on the
noncompact block (exactly one of a, b <= p).
"""

from dataclasses import dataclass
from fractions import Fraction

from .weights import Root, Signature, rational


class InhomogeneousError(ValueError):
    pass


@dataclass(frozen=True)
class GaussianRational:
    """Exact a + b*i with rational a, b."""
    re: Fraction
    im: Fraction

    def __post_init__(self):
        object.__setattr__(self, 're', rational(self.re))
        object.__setattr__(self, 'im', rational(self.im))

    def __add__(self, other):
        other = gaussian(other)
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        return self + (-gaussian(other))

    def __mul__(self, other):
        other = gaussian(other)
        return GaussianRational(self.re * other.re - self.im * other.im,
                                self.re * other.im + self.im * other.re)

    __rmul__ = __mul__

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return (self.re, self.im) == (other.re, other.im)
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        return hash((self.re, self.im)) if self.im else hash(self.re)

    def __bool__(self):
        return bool(self.re or self.im)


def gaussian(x):
    if isinstance(x, GaussianRational):
        return x
    return GaussianRational(rational(x), Fraction(0))


def _conj(c):
    return c.conjugate() if isinstance(c, GaussianRational) else c


@dataclass(frozen=True)
class MatrixUnit:
    a: int
    b: int
    sig: Signature

    def __post_init__(self):
        top = self.sig.m + self.sig.n
        if not (1 <= self.a <= top and 1 <= self.b <= top):
            raise IndexError(f'unit ({self.a},{self.b}) out of range for {self.sig}')

    @property
    def parity(self):
        return (self.sig.parity(self.a) + self.sig.parity(self.b)) % 2


class AlgebraElement:
    """Finite linear combination of matrix units over one signature."""

    def __init__(self, sig, terms=None):
        self.sig = sig
        self.terms = {}
        if terms:
            for key, co in terms.items():
                if isinstance(key, MatrixUnit):
                    key = (key.a, key.b)
                if co:
                    self.terms[key] = self.terms.get(key, 0) + co
            self.terms = {k: v for k, v in self.terms.items() if v}

    @classmethod
    def unit(cls, sig, a, b, coeff=1):
        return cls(sig, {(a, b): coeff})

    def __add__(self, other):
        if self.sig != other.sig:
            raise ValueError('mixed signatures')
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return AlgebraElement(self.sig, out)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return AlgebraElement(self.sig, {k: c * v for k, v in self.terms.items()})

    def coeff(self, a, b):
        return self.terms.get((a, b), 0)

    def __eq__(self, other):
        return isinstance(other, AlgebraElement) and self.sig == other.sig \
            and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    @property
    def parity(self):
        """Parity if homogeneous, else raises."""
        pars = {(self.sig.parity(a) + self.sig.parity(b)) % 2
                for a, b in self.terms}
        if len(pars) > 1:
            raise InhomogeneousError('element mixes parities')
        return pars.pop() if pars else 0

    def units(self):
        for (a, b), co in sorted(self.terms.items()):
            yield MatrixUnit(a, b, self.sig), co


def _bracket_pairs(a, b, c, d, par):
    """[E_ab, E_cd] as index pairs with coefficients, parity via par(i)."""
    sign = (-1) ** (((par(a) + par(b)) % 2) * ((par(c) + par(d)) % 2))
    out = {}
    if b == c:
        out[(a, d)] = out.get((a, d), 0) + 1
    if d == a:
        out[(c, b)] = out.get((c, b), 0) - sign
    return {k: v for k, v in out.items() if v}


def bracket(x, y):
    """Super-bracket; accepts MatrixUnit or AlgebraElement arguments."""
    if isinstance(x, MatrixUnit):
        x = AlgebraElement.unit(x.sig, x.a, x.b)
    if isinstance(y, MatrixUnit):
        y = AlgebraElement.unit(y.sig, y.a, y.b)
    if x.sig != y.sig:
        raise ValueError('mixed signatures')
    sig = x.sig
    out = {}
    for (a, b), cx in x.terms.items():
        for (c, d), cy in y.terms.items():
            for k, v in _bracket_pairs(a, b, c, d, sig.parity).items():
                out[k] = out.get(k, 0) + cx * cy * v
    return AlgebraElement(sig, out)


def star_sign(a, b, sig):
    """+1 on the compact block, -1 when exactly one index is <= p."""
    p = sig.p
    return 1 if (a <= p) == (b <= p) else -1


def star(x):
    """Adjoint of the real form u(p,q|n): E_ab -> +-E_ba, anti-linear."""
    if isinstance(x, MatrixUnit):
        x = AlgebraElement.unit(x.sig, x.a, x.b)
    out = {}
    for (a, b), co in x.terms.items():
        s = star_sign(a, b, x.sig)
        out[(b, a)] = out.get((b, a), 0) + s * _conj(co)
    return AlgebraElement(x.sig, out)


def dual_star(x):
    """The second adjoint: extra factor (-1)^([a]+[b]) on E_ab."""
    if isinstance(x, MatrixUnit):
        x = AlgebraElement.unit(x.sig, x.a, x.b)
    sig = x.sig
    out = {}
    for (a, b), co in x.terms.items():
        s = star_sign(a, b, sig) * (-1) ** ((sig.parity(a) + sig.parity(b)) % 2)
        out[(b, a)] = out.get((b, a), 0) + s * _conj(co)
    return AlgebraElement(sig, out)


def root_class(root, sig):
    """Classify eps_a - eps_b (a != b) for u(p,q|n)."""
    if isinstance(root, Root):
        a, b = root.a, root.b
    else:
        a, b = root
    if a == b:
        raise ValueError('not a root')
    m, p = sig.m, sig.p
    odd = (sig.parity(a) + sig.parity(b)) % 2 == 1
    lo, hi = min(a, b), max(a, b)
    # noncompact iff the eps index sits in the first block and the partner
    # beyond it (even: i <= p < j <= m; odd: i <= p)
    if odd:
        i = lo if lo <= m else hi  # the eps index
        noncompact = i <= p
    else:
        noncompact = lo <= p < hi
    kind = 'odd' if odd else 'even'
    return f'{"noncompact" if noncompact else "compact"}_{kind}'


def basis_units(sig):
    top = sig.m + sig.n
    return [(a, b) for a in range(1, top + 1) for b in range(1, top + 1)]


def killing(x, y):
    """Killing form str(ad x ad y), computed from the bracket."""
    if isinstance(x, MatrixUnit):
        x = AlgebraElement.unit(x.sig, x.a, x.b)
    if isinstance(y, MatrixUnit):
        y = AlgebraElement.unit(y.sig, y.a, y.b)
    sig = x.sig
    total = 0
    for c, d in basis_units(sig):
        z = AlgebraElement.unit(sig, c, d)
        w = bracket(x, bracket(y, z))
        co = w.coeff(c, d)
        if co:
            sgn = (-1) ** ((sig.parity(c) + sig.parity(d)) % 2)
            total = total + sgn * co
    return total


def star_killing_check(sig, samples=0, seed=0):
    """Check (x*, y*) = (-1)^[x] conj((x, y)) on all basis pairs, plus
    `samples` random Gaussian-rational homogeneous combinations."""
    import random
    pairs = basis_units(sig)
    for a, b in pairs:
        x = AlgebraElement.unit(sig, a, b)
        px = (sig.parity(a) + sig.parity(b)) % 2
        for c, d in pairs:
            y = AlgebraElement.unit(sig, c, d)
            lhs = killing(star(x), star(y))
            rhs = (-1) ** px * _conj(killing(x, y))
            if lhs != rhs:
                return False
    rng = random.Random(seed)
    for _ in range(samples):
        par = rng.randint(0, 1)
        homog = [(a, b) for a, b in pairs
                 if (sig.parity(a) + sig.parity(b)) % 2 == par]
        def rand_elem():
            terms = {}
            for ab in rng.sample(homog, min(3, len(homog))):
                terms[ab] = GaussianRational(Fraction(rng.randint(-3, 3)),
                                             Fraction(rng.randint(-3, 3)))
            return AlgebraElement(sig, terms)
        x, y = rand_elem(), rand_elem()
        if not x or not y:
            continue
        lhs = killing(star(x), star(y))
        rhs = (-1) ** par * _conj(killing(x, y))
        if gaussian(lhs) != gaussian(rhs):
            return False
    return True


# --- the parity-exchanged algebra gl(n|q+p) and the flip isomorphism ---

def tilde_parity(a, sig):
    """Index parity in gl(n|q+p): even block first (size n)."""
    top = sig.m + sig.n
    if not 1 <= a <= top:
        raise IndexError(f'index {a} out of range')
    return 0 if a <= sig.n else 1


def tilde_star_sign(a, b, sig):
    """Adjoint sign of the exchanged real form: -1 exactly on indices in
    the trailing block of size p."""
    cut = sig.n + sig.q
    sa = -1 if a > cut else 1
    sb = -1 if b > cut else 1
    return sa * sb


def tilde_bracket(x, y, sig):
    """Super-bracket of gl(n|q+p) on index-pair dicts."""
    out = {}
    for (a, b), cx in x.items():
        for (c, d), cy in y.items():
            for k, v in _bracket_pairs(a, b, c, d, lambda i: tilde_parity(i, sig)).items():
                out[k] = out.get(k, 0) + cx * cy * v
    return {k: v for k, v in out.items() if v}


def tau(a, b, sig):
    """Flip isomorphism gl(n|q+p) -> gl(p+q|n): index a -> m+n+1-a."""
    top = sig.m + sig.n
    return MatrixUnit(top + 1 - a, top + 1 - b, sig)
