from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import dominant_weights, partitions, signatures
from superunitary.weights import (DominanceError, GeneralizedPartition, Root,
                                  Signature, SignatureError,
                                  SignatureMismatchError, ThetaShift, Weight,
                                  bilinear, char_weight, conjugate,
                                  format_weight, in_partition_cone,
                                  is_dominant, is_integral, lambda_flat,
                                  parse_signature, parse_weight, rho,
                                  rho_weight, shift_block, shift_scalar,
                                  tau_weight)


def W(text, sig):
    return parse_weight(text, parse_signature(sig))


def test_signature_validation():
    with pytest.raises(SignatureError):
        Signature(0, 1, 1)
    with pytest.raises(SignatureError):
        Signature(1, -1, 0)
    assert Signature(1, 0, 0).m == 1
    assert Signature(2, 1, 3).m == 3
    assert Signature(1, 1, 1).parity(2) == 0
    assert Signature(1, 1, 1).parity(3) == 1


def test_weight_entry_and_arithmetic():
    w = W('-3,1;1/2', '1,1,1')
    assert w.entry(1) == -3 and w.entry(2) == 1 and w.entry(3) == Fraction(1, 2)
    assert (-w).lam == (3, -1)
    assert (w + w).omg == (1,)
    assert (w - w).lam == (0, 0)
    with pytest.raises(SignatureMismatchError):
        Weight(Signature(1, 1, 1), (1,), (0,))
    with pytest.raises(SignatureMismatchError):
        w + W('0;0', '1,0,1')


def test_bilinear_signature():
    sig = Signature(1, 1, 1)
    eps1 = Root(1, 2).weight(sig)  # eps_1 - eps_2
    de = Root(2, 3).weight(sig)    # eps_2 - delta_1
    assert bilinear(eps1, eps1) == 2
    assert bilinear(de, de) == 0   # isotropic odd root
    assert bilinear(eps1, de) == -1
    with pytest.raises(SignatureMismatchError):
        bilinear(eps1, W('0;0,0', '1,0,2'))


def test_rho_values():
    assert rho(2, 1).lam == (0, -1) and rho(2, 1).omg == (1,)
    assert rho(1, 0).lam == (0,) and rho(1, 0).omg == ()
    r = rho(3, 2)
    # (rho, alpha) = 1 on even simple roots, 0 on the odd simple root
    sig = r.sig
    for i in (1, 2):
        assert bilinear(r, Root(i, i + 1).weight(sig)) == 1
    assert bilinear(r, Root(3, 4).weight(sig)) == 0


@given(dominant_weights())
def test_pairing_identity_componentwise(w):
    # (w+rho, eps_i - delta_mu) = lam_i + omg_mu + m + 1 - i - mu
    sig = w.sig
    m = sig.m
    wr = w + rho_weight(w)
    for i in range(1, m + 1):
        for mu in range(1, sig.n + 1):
            root = Root(i, m + mu).weight(sig)
            assert bilinear(wr, root) == w.lam[i - 1] + w.omg[mu - 1] + m + 1 - i - mu


def test_dominance():
    assert is_dominant(W('-3,1;1/2', '1,1,1'))       # jump at the p-boundary
    assert not is_dominant(W('1,2;0', '2,0,1'))      # increasing inside a block
    assert not is_dominant(W('1,1/2;0', '2,0,1'))    # non-integral step
    assert is_dominant(W('1/2,-1/2;3,1', '1,1,2'))
    assert not is_dominant(W('0,0;1,2', '1,1,2'))
    assert is_integral(W('3,1;0', '2,0,1'))
    assert not is_integral(W('1/2,-1/2;0', '1,1,1'))


@given(dominant_weights())
def test_generated_weights_are_dominant(w):
    assert is_dominant(w)


def test_shifts():
    w = W('-3,1;1/2', '1,1,1')
    s = shift_scalar(w, Fraction(1, 2))
    assert s == w + char_weight(w.sig, Fraction(1, 2))
    assert shift_block(w, 1).lam == (-3, 2)
    assert shift_block(w, Fraction(1, 2), plus=False).lam == (Fraction(-7, 2), 1)
    with pytest.raises(ValueError):
        shift_block(w, 2)


def test_generalized_partition():
    a = GeneralizedPartition((2, 1, 0, 0))
    b = GeneralizedPartition((2, 1))
    assert a == b and hash(a) == hash(b)
    assert a.part(1) == 2 and a.part(5) == 0
    with pytest.raises(ValueError):
        GeneralizedPartition((1, 2))
    g = GeneralizedPartition((2, 1, -1, -3))
    assert g.plus.parts == (2, 1, 0, 0)
    assert g.minus.parts == (0, 0, -1, -3)
    assert g.minus_star.parts == (3, 1, 0, 0)


def test_conjugate_examples():
    assert conjugate(GeneralizedPartition((3, 1))).parts == (2, 1, 1)
    assert conjugate(GeneralizedPartition(())).parts == ()
    with pytest.raises(ValueError):
        conjugate(GeneralizedPartition((1, -1)))


@given(partitions())
def test_conjugate_involution(parts):
    lam = GeneralizedPartition(parts)
    assert conjugate(conjugate(lam)) == lam


def test_lambda_flat_values():
    sig = Signature(1, 1, 1)
    assert lambda_flat(GeneralizedPartition((1, -1)), 2, sig) == W('-3,1;0', '1,1,1')
    assert lambda_flat(GeneralizedPartition((0,)), 1, sig) == W('-1,0;0', '1,1,1')
    assert lambda_flat(GeneralizedPartition((2, 0)), 2, sig) == W('-2,2;0', '1,1,1')
    assert not in_partition_cone(GeneralizedPartition((2, 2)), 2, sig)
    with pytest.raises(DominanceError):
        lambda_flat(GeneralizedPartition((2, 2)), 2, sig)
    with pytest.raises(ValueError):
        lambda_flat(GeneralizedPartition((1, 0, 0)), 2, sig)


@given(signatures(max_p=2, max_q=2, max_n=2), st.data())
def test_lambda_flat_dominant(sig, data):
    d = data.draw(st.integers(1, 3))
    neg = sorted((data.draw(st.integers(-3, 0)) for _ in range(sig.p)),
                 reverse=True)
    pos = sorted((data.draw(st.integers(0, sig.n)) for _ in range(min(sig.q, d))),
                 reverse=True)
    parts = (pos + neg)[:d]
    parts = tuple(sorted(parts, reverse=True))
    lam = GeneralizedPartition(parts)
    if not in_partition_cone(lam, d, sig):
        return
    assert is_dominant(lambda_flat(lam, d, sig))


def test_theta_shift():
    sig = Signature(1, 1, 1)
    th = ThetaShift(((2,),), ((1,),))
    assert th.weight(sig) == W('3,-2;1', '1,1,1')
    assert th.height(sig) == 2 * 1 + 1 * 2
    with pytest.raises(ValueError):
        ThetaShift(((-1,),), ((0,),))
    with pytest.raises(ValueError):
        ThetaShift(((0,),), ((2,),))


@given(dominant_weights())
def test_tau_weight_involution(w):
    u = tau_weight(w)
    assert u.even == tuple(reversed(w.omg))
    assert u.odd == tuple(reversed(w.lam))
    assert tau_weight(u) == w


def test_parse_and_format():
    sig = parse_signature('2,1,1')
    w = parse_weight('-3,-3,1;1/2', sig)
    assert format_weight(w) == '-3,-3,1;1/2'
    with pytest.raises(SignatureError):
        parse_signature('2,1')
    with pytest.raises(SignatureMismatchError):
        parse_weight('1;2', sig)
    with pytest.raises(SignatureMismatchError):
        parse_weight('1,x,0;2', sig)
    assert parse_weight('1;', parse_signature('1,0,0')).omg == ()


@given(dominant_weights())
def test_format_parse_roundtrip(w):
    assert parse_weight(format_weight(w), w.sig) == w
