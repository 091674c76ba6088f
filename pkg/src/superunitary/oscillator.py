"""Joint oscillator action of gl_d and gl(p+q|n) on polynomials in the
commuting variables x^a_k, y^a_i and anticommuting eta^a_mu (a = 1..d,
i = 1..p, k = 1..q, mu = 1..n).

Polynomials are dicts monomial -> Fraction.  A monomial is a triple
(xpart, ypart, epart): xpart/ypart are sorted tuples of ((a, idx), exp),
epart is a sorted tuple of (a, mu) (each odd factor at most once, factors
multiply left-to-right in sorted order).
"""

import random
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .linalg import nullspace
from .weights import (GeneralizedPartition, Weight, in_partition_cone,
                      lambda_flat)
from .algebra import star_sign


ONE = ((), (), ())


def poly_add(f, g, scale=1):
    out = dict(f)
    for mono, co in g.items():
        val = out.get(mono, 0) + scale * co
        if val:
            out[mono] = val
        else:
            out.pop(mono, None)
    return out


def poly_scale(f, c):
    return {mono: c * co for mono, co in f.items()} if c else {}


def _bump(part, var, by):
    d = dict(part)
    d[var] = d.get(var, 0) + by
    if d[var] < 0:
        return None
    return tuple(sorted((k, v) for k, v in d.items() if v))


def _mul_even(slot, var, f):
    out = {}
    for mono, co in f.items():
        part = _bump(mono[slot], var, 1)
        mono2 = mono[:slot] + (part,) + mono[slot + 1:]
        out[mono2] = out.get(mono2, 0) + co
    return out


def _diff_even(slot, var, f):
    out = {}
    for mono, co in f.items():
        exp = dict(mono[slot]).get(var, 0)
        if not exp:
            continue
        part = _bump(mono[slot], var, -1)
        mono2 = mono[:slot] + (part,) + mono[slot + 1:]
        out[mono2] = out.get(mono2, 0) + exp * co
    return out


def _mul_eta(var, f):
    out = {}
    for mono, co in f.items():
        epart = mono[2]
        if var in epart:
            continue
        pos = sum(1 for v in epart if v < var)
        sign = (-1) ** pos
        mono2 = mono[:2] + (tuple(sorted(epart + (var,))),)
        out[mono2] = out.get(mono2, 0) + sign * co
    return out


def _diff_eta(var, f):
    out = {}
    for mono, co in f.items():
        epart = mono[2]
        if var not in epart:
            continue
        pos = epart.index(var)
        sign = (-1) ** pos
        mono2 = mono[:2] + (tuple(v for v in epart if v != var),)
        out[mono2] = out.get(mono2, 0) + sign * co
    return out


def mul_x(var, f):
    return _mul_even(0, var, f)


def mul_y(var, f):
    return _mul_even(1, var, f)


def diff_x(var, f):
    return _diff_even(0, var, f)


def diff_y(var, f):
    return _diff_even(1, var, f)


def act_gld(d, sig, unit, f):
    """e_{ab} of gl_d: sum_k x^a_k d/dx^b_k - sum_i y^b_i d/dy^a_i
    + sum_mu eta^a_mu d/deta^b_mu."""
    a, b = unit
    out = {}
    for k in range(1, sig.q + 1):
        out = poly_add(out, mul_x((a, k), diff_x((b, k), f)))
    for i in range(1, sig.p + 1):
        out = poly_add(out, mul_y((b, i), diff_y((a, i), f)), -1)
    for mu in range(1, sig.n + 1):
        out = poly_add(out, _mul_eta((a, mu), _diff_eta((b, mu), f)))
    return out


def act_gl(d, sig, unit, f):
    """E_{AB} of gl(p+q|n) through the nine block cases."""
    A, B = unit
    p, q, n = sig.p, sig.q, sig.n

    def block(c):
        if c <= p:
            return 0, c
        if c <= p + q:
            return 1, c - p
        return 2, c - p - q

    (ba, ia), (bb, ib) = block(A), block(B)
    out = {}
    for a in range(1, d + 1):
        if ba == 0 and bb == 0:
            term = diff_y((a, ia), mul_y((a, ib), f))
            out = poly_add(out, term, -1)
        elif ba == 0 and bb == 1:
            out = poly_add(out, diff_y((a, ia), diff_x((a, ib), f)))
        elif ba == 0 and bb == 2:
            out = poly_add(out, diff_y((a, ia), _diff_eta((a, ib), f)))
        elif ba == 1 and bb == 0:
            out = poly_add(out, mul_x((a, ia), mul_y((a, ib), f)), -1)
        elif ba == 1 and bb == 1:
            out = poly_add(out, mul_x((a, ia), diff_x((a, ib), f)))
        elif ba == 1 and bb == 2:
            out = poly_add(out, mul_x((a, ia), _diff_eta((a, ib), f)))
        elif ba == 2 and bb == 0:
            out = poly_add(out, _mul_eta((a, ia), mul_y((a, ib), f)), -1)
        elif ba == 2 and bb == 1:
            out = poly_add(out, _mul_eta((a, ia), diff_x((a, ib), f)))
        else:
            out = poly_add(out, _mul_eta((a, ia), _diff_eta((a, ib), f)))
    return out


def degree(mono):
    return sum(e for _, e in mono[0]) + sum(e for _, e in mono[1]) + len(mono[2])


def mono_norm(mono):
    out = 1
    for _, e in mono[0]:
        out *= factorial(e)
    for _, e in mono[1]:
        out *= factorial(e)
    return Fraction(out)


def herm(f, g):
    """Fock-space pairing: monomials orthogonal, <M, M> = prod of factorials."""
    out = Fraction(0)
    for mono, co in f.items():
        co2 = g.get(mono)
        if co2:
            out += co * co2 * mono_norm(mono)
    return out


def monomials(d, sig, deg):
    """All monomials of total degree deg."""
    xvars = [(a, k) for a in range(1, d + 1) for k in range(1, sig.q + 1)]
    yvars = [(a, i) for a in range(1, d + 1) for i in range(1, sig.p + 1)]
    evars = [(a, mu) for a in range(1, d + 1) for mu in range(1, sig.n + 1)]
    out = []

    def even_combos(vars_, budget):
        if not vars_:
            yield (), budget
            return
        head, tail = vars_[0], vars_[1:]
        for e in range(budget + 1):
            for rest, left in even_combos(tail, budget - e):
                yield ((head, e),) + rest if e else rest, left

    def odd_combos(vars_, budget):
        from itertools import combinations
        for r in range(min(budget, len(vars_)) + 1):
            for sel in combinations(vars_, r):
                yield tuple(sorted(sel)), budget - r

    for xpart, left1 in even_combos(xvars, deg):
        for ypart, left2 in even_combos(yvars, left1):
            for epart, left3 in odd_combos(evars, left2):
                if left3 == 0:
                    out.append((tuple(sorted(xpart)), tuple(sorted(ypart)), epart))
    return sorted(set(out))


def gld_weight(d, mono):
    """Eigenvalues of e_aa: #x^a + #eta^a - #y^a."""
    out = [0] * d
    for (a, _), e in mono[0]:
        out[a - 1] += e
    for (a, _), e in mono[1]:
        out[a - 1] -= e
    for a, _ in mono[2]:
        out[a - 1] += 1
    return tuple(out)


def gl_weight(d, sig, mono):
    """Eigenvalues of E_AA: (-d - #y_i | #x_k | #eta_mu)."""
    lam = [Fraction(-d)] * sig.p + [Fraction(0)] * sig.q
    omg = [Fraction(0)] * sig.n
    for (_, i), e in mono[1]:
        lam[i - 1] -= e
    for (_, k), e in mono[0]:
        lam[sig.p + k - 1] += e
    for _, mu in mono[2]:
        omg[mu - 1] += 1
    return Weight(sig, tuple(lam), tuple(omg))


@dataclass(frozen=True)
class JointHighestWeight:
    degree: int
    partition: GeneralizedPartition
    flat: Weight
    verified: bool


def raising_units(d, sig):
    gld = [(a, b) for a in range(1, d + 1) for b in range(a + 1, d + 1)]
    top = sig.m + sig.n
    gl = [(a, b) for a in range(1, top + 1) for b in range(a + 1, top + 1)]
    return gld, gl


def joint_hwv(d, sig, max_degree):
    """Joint highest-weight vectors up to the degree cap, with the matching
    between gl_d weights and gl(p+q|n) weights verified against lambda_flat."""
    gld_raise, gl_raise = raising_units(d, sig)
    found = []
    seen = set()
    for deg in range(max_degree + 1):
        basis = monomials(d, sig, deg)
        blocks = {}
        for mono in basis:
            key = (gld_weight(d, mono), gl_weight(d, sig, mono))
            blocks.setdefault(key, []).append(mono)
        for (wd, wg), block in sorted(blocks.items(),
                                      key=lambda kv: (kv[0][0], str(kv[0][1]))):
            rows = []
            for unit in gld_raise:
                images = [act_gld(d, sig, unit, {m: Fraction(1)}) for m in block]
                targets = sorted(set().union(*[set(im) for im in images]))
                tindex = {t: r for r, t in enumerate(targets)}
                blockrows = [[Fraction(0)] * len(block) for _ in targets]
                for c, im in enumerate(images):
                    for t, co in im.items():
                        blockrows[tindex[t]][c] = co
                rows.extend(blockrows)
            for unit in gl_raise:
                images = [act_gl(d, sig, unit, {m: Fraction(1)}) for m in block]
                targets = sorted(set().union(*[set(im) for im in images]))
                tindex = {t: r for r, t in enumerate(targets)}
                blockrows = [[Fraction(0)] * len(block) for _ in targets]
                for c, im in enumerate(images):
                    for t, co in im.items():
                        blockrows[tindex[t]][c] = co
                rows.extend(blockrows)
            kernel = nullspace(rows, len(block))
            if not kernel:
                continue
            if len(kernel) > 1:
                raise AssertionError('joint weight space with multiplicity > 1')
            if any(wd[t] < wd[t + 1] for t in range(d - 1)):
                raise AssertionError('non-dominant gl_d highest weight')
            part = GeneralizedPartition(wd)
            if part in seen:
                raise AssertionError('repeated gl_d highest weight')
            seen.add(part)
            ok = in_partition_cone(part, d, sig) and wg == lambda_flat(part, d, sig)
            found.append(JointHighestWeight(deg, part, wg, ok))
    return found


def _random_mono(rng, d, sig, max_degree):
    deg = rng.randint(0, max_degree)
    xe, ye, ee = {}, {}, {}
    evars = [(a, mu) for a in range(1, d + 1) for mu in range(1, sig.n + 1)]
    for _ in range(deg):
        choice = rng.randint(0, 2)
        if choice == 0 and sig.q:
            v = (rng.randint(1, d), rng.randint(1, sig.q))
            xe[v] = xe.get(v, 0) + 1
        elif choice == 1 and sig.p:
            v = (rng.randint(1, d), rng.randint(1, sig.p))
            ye[v] = ye.get(v, 0) + 1
        elif evars:
            v = evars[rng.randrange(len(evars))]
            ee[v] = 1
    return (tuple(sorted(xe.items())), tuple(sorted(ye.items())),
            tuple(sorted(ee)))


def _gl_parity(sig, a):
    return sig.parity(a)


def commutation_fuzz(d, sig, samples=3, max_degree=4, seed=0):
    """Bracket relations of both actions and their mutual commutation,
    exhaustively over basis pairs, on random monomials."""
    rng = random.Random(seed)
    top = sig.m + sig.n
    gld_units = [(a, b) for a in range(1, d + 1) for b in range(1, d + 1)]
    gl_units = [(a, b) for a in range(1, top + 1) for b in range(1, top + 1)]

    def probe():
        return [{_random_mono(rng, d, sig, max_degree): Fraction(1)}
                for _ in range(samples)]

    for u in gld_units:
        for v in gld_units:
            for f in probe():
                lhs = poly_add(act_gld(d, sig, u, act_gld(d, sig, v, f)),
                               act_gld(d, sig, v, act_gld(d, sig, u, f)), -1)
                rhs = {}
                if u[1] == v[0]:
                    rhs = poly_add(rhs, act_gld(d, sig, (u[0], v[1]), f))
                if v[1] == u[0]:
                    rhs = poly_add(rhs, act_gld(d, sig, (v[0], u[1]), f), -1)
                if lhs != rhs:
                    return False
    for u in gl_units:
        pu = (_gl_parity(sig, u[0]) + _gl_parity(sig, u[1])) % 2
        for v in gl_units:
            pv = (_gl_parity(sig, v[0]) + _gl_parity(sig, v[1])) % 2
            sgn = (-1) ** (pu * pv)
            for f in probe():
                lhs = poly_add(act_gl(d, sig, u, act_gl(d, sig, v, f)),
                               act_gl(d, sig, v, act_gl(d, sig, u, f)), -sgn)
                rhs = {}
                if u[1] == v[0]:
                    rhs = poly_add(rhs, act_gl(d, sig, (u[0], v[1]), f))
                if v[1] == u[0]:
                    rhs = poly_add(rhs, act_gl(d, sig, (v[0], u[1]), f), -sgn)
                if lhs != rhs:
                    return False
    for u in gld_units:
        for v in gl_units:
            for f in probe():
                lhs = act_gld(d, sig, u, act_gl(d, sig, v, f))
                rhs = act_gl(d, sig, v, act_gld(d, sig, u, f))
                if lhs != rhs:
                    return False
    return True


def psi_sigma_check(d, sig, samples=20, max_degree=4, seed=0):
    """Adjoint property of the pairing: <rho(X)f, g> = <f, rho(sigma(X))g>,
    with sigma the transpose on gl_d and the u(p,q|n) adjoint on gl(p+q|n)."""
    rng = random.Random(seed)
    top = sig.m + sig.n
    gld_units = [(a, b) for a in range(1, d + 1) for b in range(1, d + 1)]
    gl_units = [(a, b) for a in range(1, top + 1) for b in range(1, top + 1)]
    for _ in range(samples):
        f = {_random_mono(rng, d, sig, max_degree): Fraction(1)}
        g = {_random_mono(rng, d, sig, max_degree): Fraction(1)}
        for a, b in gld_units:
            if herm(act_gld(d, sig, (a, b), f), g) != \
                    herm(f, act_gld(d, sig, (b, a), g)):
                return False
        for a, b in gl_units:
            sgn = star_sign(a, b, sig)
            if herm(act_gl(d, sig, (a, b), f), g) != \
                    sgn * herm(f, act_gl(d, sig, (b, a), g)):
                return False
    return True


def joint_hwv_pair(d, sig, max_degree):
    """Convenience: (partition, flat) pairs found up to the cap."""
    return [(h.partition, h.flat) for h in joint_hwv(d, sig, max_degree)]
