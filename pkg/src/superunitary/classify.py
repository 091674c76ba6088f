"""Unitarity classification for highest-weight modules of u(p,q|n).

All predicates are evaluated componentwise through the pairing identities
(L+rho, eps_i - delta_mu) = lam_i + omg_mu + m + 1 - i - mu,
(L+rho, eps_i - eps_j)   = lam_i - lam_j + j - i,
(L+rho, delta_mu - delta_nu) = omg_nu - omg_mu + nu - mu.
"""

from dataclasses import dataclass
from fractions import Fraction

from .weights import (GeneralizedPartition, ThetaShift, Weight, bilinear,
                      char_weight, conjugate, in_partition_cone, is_dominant,
                      is_integral, lambda_flat, rho_weight, tau_weight,
                      DominanceError)


class UnsupportedSignatureError(ValueError):
    pass


@dataclass(frozen=True)
class Verdict:
    unitary: bool
    condition: str = None
    i: int = None
    mu: int = None
    j: int = None


@dataclass(frozen=True)
class IntegralVerdict:
    unitary: bool
    branch: int = None
    i: int = None
    mu: int = None
    j: int = None


def _require_dominant(w):
    if not is_dominant(w):
        raise DominanceError(f'weight {w} is not dominant for {w.sig}')


def _u_witnesses(w):
    """The six unitarity conditions; returns (name, i, mu, j) or None."""
    sig = w.sig
    p, m, n = sig.p, sig.m, sig.n
    lam, omg = w.lam, w.omg
    # boundary pairings with rho folded in
    low = lam[m - 1] + omg[n - 1] + 1 - n   # (L+rho, eps_m - delta_n)
    high = lam[0] + omg[0] + m - 1          # (L+rho, eps_1 - delta_1)

    def first_i():
        # smallest i <= p with lam_i = lam_1 and (L+rho, eps_i - delta_1) = 0
        for i in range(1, p + 1):
            if lam[i - 1] == lam[0] and lam[i - 1] + omg[0] + m - i == 0:
                return i
        return None

    def first_mu():
        # smallest mu in 2..n with omg_mu = omg_n and (L+rho, eps_m - delta_mu) = 0
        for mu in range(2, n + 1):
            if omg[mu - 1] == omg[n - 1] and lam[m - 1] + omg[mu - 1] + 1 - mu == 0:
                return mu
        return None

    if low > 0 and high < 0:
        return ('U1', None, None, None)
    if low > 0:
        i = first_i()
        if i is not None:
            return ('U2', i, None, None)
    if high < 0:
        mu = first_mu()
        if mu is not None:
            return ('U3', None, mu, None)
    mu = first_mu()
    if mu is not None:
        i = first_i()
        if i is not None:
            return ('U4', i, mu, None)
    # U5/U6 gate: (L+rho, eps_m - delta_1) = 0 and omg constant.  Both use
    # the canonical j: smallest j in {p..m-1} with lam_{j+1} = lam_m (the
    # existential forms reduce to this one, and it keeps them exclusive).
    if lam[m - 1] + omg[0] == 0 and omg[0] == omg[n - 1]:
        j = next(j for j in range(p, m) if lam[j] == lam[m - 1])
        if lam[0] + omg[0] < 1 - j:
            return ('U5', None, None, j)
        for i in range(1, p + 1):
            if lam[i - 1] == lam[0] and lam[i - 1] + omg[0] == i - j:
                return ('U6', i, None, j)
    return None


def check_U(w):
    """Unitarity of the irreducible highest-weight u(p,q|n)-module L(w)."""
    sig = w.sig
    if sig.q == 0 or sig.n == 0:
        raise UnsupportedSignatureError(
            'check_U wants q >= 1 and n >= 1; use classical_upq when n = 0')
    _require_dominant(w)
    hit = _u_witnesses(w)
    if hit is None:
        return Verdict(False)
    name, i, mu, j = hit
    return Verdict(True, name, i, mu, j)


def classical_upq(w):
    """Unitarity for u(p,q) (n = 0) highest-weight modules."""
    sig = w.sig
    if sig.n != 0:
        raise UnsupportedSignatureError('classical_upq wants n = 0')
    if sig.q == 0:
        raise UnsupportedSignatureError('classical_upq wants q >= 1')
    _require_dominant(w)
    p, q, m = sig.p, sig.q, sig.m
    lam = w.lam
    gap = lam[m - 1] - lam[0]
    for i in range(1, p + 1):
        if lam[i - 1] != lam[0]:
            continue
        for j in range(1, q + 1):
            if lam[m - j] != lam[m - 1]:
                continue
            if gap == m - j - i:
                return Verdict(True, 'C1', i=i, j=j)
            if gap > min(m - i, m - j) - 1:
                return Verdict(True, 'C2', i=i, j=j)
    return Verdict(False)


# --- finite-dimensionality and typicality over gl(m|n) ---

def type1_finite(w):
    """Finiteness of the type-1 depth in the odd directions at the bottom."""
    _require_dominant(w)
    m, n = w.sig.m, w.sig.n
    if n == 0:
        return True
    lam, omg = w.lam, w.omg
    if lam[m - 1] + omg[n - 1] + 1 - n > 0:
        return True
    return any(omg[mu - 1] == omg[n - 1]
               and lam[m - 1] + omg[mu - 1] + 1 - mu == 0
               for mu in range(1, n + 1))


def type2_finite(w):
    _require_dominant(w)
    m, n = w.sig.m, w.sig.n
    if n == 0:
        return True
    lam, omg = w.lam, w.omg
    if lam[0] + omg[0] + m - 1 < 0:
        return True
    return any(lam[k - 1] == lam[0] and lam[k - 1] + omg[0] + m - k == 0
               for k in range(1, m + 1))


def is_typical(w):
    """No vanishing odd pairing (L+rho, eps_i - delta_mu)."""
    m, n = w.sig.m, w.sig.n
    lam, omg = w.lam, w.omg
    return all(lam[i - 1] + omg[mu - 1] + m + 1 - i - mu != 0
               for i in range(1, m + 1) for mu in range(1, n + 1))


def _bar_mu(w):
    """Atypicality index used by the bar recipe: n+1 when typical."""
    m, n = w.sig.m, w.sig.n
    if is_typical(w):
        return n + 1
    lam, omg = w.lam, w.omg
    for mu in range(1, n + 1):
        if omg[mu - 1] == omg[n - 1] and lam[m - 1] + omg[mu - 1] + 1 - mu == 0:
            return mu
    raise DominanceError('bar recipe needs the type-1 condition')


def _apply_bar(w, lo, mu):
    """Subtract sum_{i>lo} sum_{nu<=mu_i} (eps_i - delta_nu)."""
    m, n = w.sig.m, w.sig.n
    lam, omg = list(w.lam), list(w.omg)
    mus = {m: mu - 1}
    for i in range(lo + 1, m):
        mus[i] = min(n, mu - 1 + int(w.lam[i - 1] - w.lam[m - 1]))
    for i in range(lo + 1, m + 1):
        lam[i - 1] -= mus[i]
        for nu in range(1, mus[i] + 1):
            omg[nu - 1] += 1
    return Weight(w.sig, tuple(lam), tuple(omg))


def lambda_bar(w):
    """Extremal companion weight of a finite type-1 gl(m|n) module."""
    if not type1_finite(w):
        raise DominanceError('lambda_bar wants a type-1 finite weight')
    return _apply_bar(w, 0, _bar_mu(w))


def kmod_type1(w):
    """Type-1 unitarity of the even-part module attached to the gl(q|n) block."""
    _require_dominant(w)
    m, n = w.sig.m, w.sig.n
    lam, omg = w.lam, w.omg
    if n == 0:
        return True
    if lam[m - 1] + omg[n - 1] + 1 - n > 0:
        return True
    return any(omg[mu - 1] == omg[n - 1]
               and lam[m - 1] + omg[mu - 1] + 1 - mu == 0
               for mu in range(1, n + 1))


def lambda_qn(w):
    """Companion weight from the bar recipe applied inside the gl(q|n) block."""
    if not kmod_type1(w):
        raise DominanceError('lambda_qn wants kmod_type1 to hold')
    sig = w.sig
    m, n = sig.m, sig.n
    lam, omg = w.lam, w.omg
    if lam[m - 1] + omg[n - 1] + 1 - n > 0:
        mu = n + 1
    else:
        mu = next(mu for mu in range(1, n + 1)
                  if omg[mu - 1] == omg[n - 1]
                  and lam[m - 1] + omg[mu - 1] + 1 - mu == 0)
    return _apply_bar(w, sig.p, mu)


# --- the noncompact quadratic shift gamma ---

def gamma(w, theta):
    """Eigenvalue (L+rho, theta) - (theta, theta)/2 of the noncompact part
    of the Casimir on a k-highest vector at drop theta."""
    tw = theta.weight(w.sig) if isinstance(theta, ThetaShift) else theta
    return bilinear(w + rho_weight(w), tw) - bilinear(tw, tw) / 2


def iter_theta(sig, max_height):
    """All admissible shifts of height <= max_height (including zero)."""
    p, q, n, m = sig.p, sig.q, sig.n, sig.m
    cells = []
    for i in range(1, p + 1):
        for k in range(1, q + 1):
            cells.append(('a', i, k, p + k - i))
        for mu in range(1, n + 1):
            cells.append(('b', i, mu, m - i + mu))

    def rec(idx, budget, acc):
        if idx == len(cells):
            a = tuple(tuple(acc.get(('a', i, k), 0) for k in range(1, q + 1))
                      for i in range(1, p + 1))
            b = tuple(tuple(acc.get(('b', i, mu), 0) for mu in range(1, n + 1))
                      for i in range(1, p + 1))
            yield ThetaShift(a, b)
            return
        kind, i, k, h = cells[idx]
        top = 1 if kind == 'b' else (budget // h if h else 0)
        for e in range(top + 1):
            if e * h > budget:
                break
            acc[(kind, i, k)] = e
            yield from rec(idx + 1, budget - e * h, acc)
        acc.pop((kind, i, k), None)

    yield from rec(0, max_height, {})


def gamma_positive_theta(w, max_height):
    """First admissible shift with gamma > 0, scanning by height; or None."""
    hits = []
    for theta in iter_theta(w.sig, max_height):
        if gamma(w, theta) > 0:
            hits.append((theta.height(w.sig), theta))
    if not hits:
        return None
    return min(hits, key=lambda t: (t[0], t[1].a, t[1].b))[1]


def gamma_bound_sufficient(w, max_height):
    """True when gamma <= 0 for every shift up to the height cap."""
    return gamma_positive_theta(w, max_height) is None


# --- integral classification and the explicit tensor construction ---

def _branch1(w):
    sig = w.sig
    p, m, n = sig.p, sig.m, sig.n
    lam, omg = w.lam, w.omg
    top = lam[0] + omg[0]
    bot = lam[m - 1] + omg[n - 1]
    if top < 1 - m:
        i = 0  # strict
    else:
        i = next((i for i in range(1, p + 1)
                  if lam[i - 1] == lam[0] and top == i - m), None)
        if i is None:
            return None
    if bot > n - 1:
        mu = 0  # strict
    else:
        mu = next((mu for mu in range(2, n + 1)
                   if omg[mu - 1] == omg[n - 1] and bot == mu - 1), None)
        if mu is None:
            return None
    return i, mu


def _branch2(w):
    sig = w.sig
    p, m, n = sig.p, sig.m, sig.n
    lam, omg = w.lam, w.omg
    if omg[0] != omg[n - 1] or lam[m - 1] + omg[n - 1] != 0:
        return None
    top = lam[0] + omg[0]
    for j in range(p, m):
        if lam[j] != lam[m - 1]:
            continue
        if top < 1 - j:
            return 0, j
        i = next((i for i in range(1, p + 1)
                  if lam[i - 1] == lam[0] and top == i - j), None)
        if i is not None:
            return i, j
    return None


def integral_classify(w):
    """Unitarity test for integral dominant weights, via the two-branch form."""
    sig = w.sig
    if sig.q == 0 or sig.n == 0:
        raise UnsupportedSignatureError('integral_classify wants q, n >= 1')
    if not is_integral(w):
        raise DominanceError(f'weight {w} is not integral dominant')
    hit = _branch1(w)
    if hit is not None:
        i, mu = hit
        return IntegralVerdict(True, 1, i=i or None, mu=mu or None)
    hit = _branch2(w)
    if hit is not None:
        i, j = hit
        return IntegralVerdict(True, 2, i=i or None, j=j)
    return IntegralVerdict(False)


@dataclass(frozen=True)
class IntegralConstruction:
    partition: GeneralizedPartition
    d: int
    flat: Weight
    shift: Fraction


def intuni_construction(w):
    """Realize an integral unitary L(w) as L(lambda_flat) tensor a character."""
    sig = w.sig
    p, q, m, n = sig.p, sig.q, sig.m, sig.n
    lam, omg = w.lam, w.omg
    verdict = integral_classify(w)
    if not verdict.unitary:
        raise DominanceError('construction wants an integral unitary weight')
    d = int(-lam[0] - omg[n - 1])
    if d == 0:
        flat = Weight(sig, (0,) * m, (0,) * n)
        assert w == char_weight(sig, lam[0])
        return IntegralConstruction(GeneralizedPartition(()), 0, flat, lam[0])
    if verdict.branch == 1:
        i, mu = _branch1(w)
        i = i or 1
        mu = mu or n
        part1 = [int(lam[k - 1] + omg[n - 1]) for k in range(p + 1, m + 1)]
        base2 = GeneralizedPartition(
            tuple(int(omg[k - 1] - omg[n - 1]) for k in range(1, mu)))
        part2 = list(conjugate(base2).parts)
        part3 = [int(lam[k - 1] - lam[0]) for k in range(i + 1, p + 1)]
    else:
        i, j = _branch2(w)
        i = i or 1
        part1 = [int(lam[k - 1] + omg[n - 1]) for k in range(p + 1, j + 1)]
        part2 = []
        part3 = [int(lam[k - 1] - lam[0]) for k in range(i + 1, p + 1)]
    pad = d - len(part1) - len(part2) - len(part3)
    assert pad >= 0, 'depth too small for the construction'
    parts = GeneralizedPartition(tuple(part1 + part2 + [0] * pad + part3))
    flat = lambda_flat(parts, d, sig)
    shift = d + lam[0]
    return IntegralConstruction(parts, d, flat, shift)


# --- dualities ---

def dual_unitary_lowest(w):
    """Dual-adjoint unitarity of the lowest-weight module of weight w."""
    return check_U(-w)


def gl_nqp_unitary_lowest(u):
    """Unitarity of the gl(n|q+p) lowest-weight module through the flip."""
    return check_U(tau_weight(u))


def gl_nqp_dual_unitary_highest(u):
    """Dual-adjoint unitarity of the gl(n|q+p) highest-weight module."""
    return check_U(-tau_weight(u))


def pqrs_is_trivial_only(p, q, r, s):
    """Real forms with both even blocks split admit only 1-dim unitary
    highest-weight modules."""
    return p * q != 0 and r * s != 0
