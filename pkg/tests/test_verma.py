import random
from fractions import Fraction

import pytest

from conftest import random_dominant
from superunitary.linalg import quad_form
from superunitary.verma import (VermaModule, certify, drop_height,
                                drop_weight, enumerate_drops,
                                gamma_action_check, gram, level_one_norm,
                                psd_exact, weight_space_basis)
from superunitary.weights import (Signature, parse_signature, parse_weight)


def W(text, sig):
    return parse_weight(text, parse_signature(sig))


def test_drop_height():
    assert drop_height((0, 0, 0)) == 0
    assert drop_height((1, -1, 0)) == 1
    assert drop_height((1, 0, -1)) == 2
    assert drop_height((-1, 1, 0)) is None   # negative simple coordinate
    assert drop_height((1, 0, 0)) is None    # does not sum to zero


def test_enumerate_drops():
    sig = Signature(1, 1, 1)
    assert enumerate_drops(sig, 1) == [(0, 0, 0), (0, 1, -1), (1, -1, 0)]
    drops = enumerate_drops(sig, 3)
    assert all(drop_height(d) <= 3 for d in drops)
    heights = [drop_height(d) for d in drops]
    assert heights == sorted(heights)
    assert len(set(drops)) == len(drops)


def test_basis():
    hw = W('-3,1;1/2', '1,1,1')
    # eps_1 - delta_1: either E_31 alone or E_21 then E_32
    basis = weight_space_basis(hw, (1, 0, -1))
    assert basis == [(((2, 1), 1), ((3, 2), 1)), (((3, 1), 1),)]
    # odd generators square to zero: 2(eps_2 - delta_1) has no basis
    assert weight_space_basis(hw, (0, 2, -2)) == []
    # even generators do not: 2(eps_1 - eps_2) is 1-dimensional
    assert len(weight_space_basis(hw, (2, -2, 0))) == 1


def test_gram_values():
    hw = W('-3,1;1/2', '1,1,1')
    report = gram(hw, (1, 0, -1))
    assert report.dim == 2
    assert report.matrix == ((Fraction(9, 2), Fraction(3, 2)),
                            (Fraction(3, 2), Fraction(5, 2)))
    assert report.psd and report.witness is None
    assert report.drop == drop_weight(hw.sig, (1, 0, -1))


def test_level_one_norms():
    rng = random.Random(3)
    sigs = [Signature(p, q, n) for p in (1, 2) for q in (1, 2) for n in (1, 2)]
    for _ in range(25):
        sig = rng.choice(sigs)
        hw = random_dominant(rng, sig)
        for i in range(1, sig.m + 1):
            for mu in range(1, sig.n + 1):
                val = hw.lam[i - 1] + hw.omg[mu - 1]
                expect = -val if i <= sig.p else val
                assert level_one_norm(hw, i, mu) == expect


def test_certify_verdicts():
    assert certify(W('-3,1;1/2', '1,1,1'), 4)['verdict'] == 'psd_up_to_cap'
    out = certify(W('0,0;1', '1,1,1'), 4)
    assert out['verdict'] == 'negative_witness'
    bad = out['reports'][-1]
    assert not bad.psd
    assert quad_form(bad.matrix, bad.witness) < 0


def test_contravariance():
    # <E_{ba} x, y> = s <x, E_{ab} y> with s the adjoint sign of the root
    from superunitary.algebra import star_sign
    rng = random.Random(5)
    hw = random_dominant(rng, Signature(1, 1, 1))
    vm = VermaModule(hw)
    for drop in enumerate_drops(hw.sig, 3):
        basis = vm.basis(drop)
        if not basis:
            continue
        gm = vm.gram_matrix(drop)
        index = {mono: t for t, mono in enumerate(basis)}
        for a in range(1, 4):
            for b in range(a + 1, 4):
                lst = list(drop)
                lst[a - 1] -= 1
                lst[b - 1] += 1
                sub = tuple(lst)
                sub_basis = vm.basis(sub)
                if not sub_basis or drop_height(sub) is None:
                    continue
                sub_index = {m: t for t, m in enumerate(sub_basis)}
                sub_gm = vm.gram_matrix(sub)
                s = star_sign(a, b, hw.sig)
                for x in sub_basis:
                    lowered = vm.act((b, a), {x: Fraction(1)})
                    for y in basis:
                        lhs = sum(co * gm[index[mono]][index[y]]
                                  for mono, co in lowered.items())
                        raised = vm.act((a, b), {y: Fraction(1)})
                        rhs = s * sum(co * sub_gm[sub_index[x]][sub_index[mono]]
                                      for mono, co in raised.items())
                        assert lhs == rhs


def test_gamma_action():
    hw = W('-3,1;1/2', '1,1,1')
    for drop in enumerate_drops(hw.sig, 3):
        assert gamma_action_check(hw, drop)


def test_psd_exact():
    assert psd_exact([]) == (True, None)
    assert psd_exact([[Fraction(0)]]) == (True, None)
    assert psd_exact([[Fraction(2), Fraction(1)], [Fraction(1), Fraction(1)]])[0]
    ok, wit = psd_exact([[Fraction(1), Fraction(2)], [Fraction(2), Fraction(1)]])
    assert not ok and quad_form([[1, 2], [2, 1]], wit) < 0
    ok, wit = psd_exact([[Fraction(0), Fraction(1)], [Fraction(1), Fraction(0)]])
    assert not ok and quad_form([[0, 1], [1, 0]], wit) < 0
    ok, wit = psd_exact([[Fraction(-1)]])
    assert not ok and wit == [Fraction(1)]
    with pytest.raises(ValueError):
        psd_exact([[Fraction(0), Fraction(1)], [Fraction(2), Fraction(0)]])


def test_psd_exact_random_gram():
    # matrices B^T B are PSD; B^T B - c e e^T eventually is not
    rng = random.Random(9)
    for _ in range(30):
        k = rng.randint(1, 4)
        B = [[Fraction(rng.randint(-3, 3)) for _ in range(k)] for _ in range(k)]
        G = [[sum(B[t][i] * B[t][j] for t in range(k)) for j in range(k)]
             for i in range(k)]
        assert psd_exact(G)[0]
        bad = [row[:] for row in G]
        shift = sum(G[i][i] for i in range(k)) + 1
        for i in range(k):
            for j in range(k):
                bad[i][j] -= shift
        ok, wit = psd_exact(bad)
        assert not ok and quad_form(bad, wit) < 0
