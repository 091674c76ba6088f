"""Command-line front end: classify, scan, gram, howe, selftest."""

import argparse
import json
import random
import sys
from fractions import Fraction

from . import algebra, classify, oscillator, verma
from .weights import (DominanceError, Signature, SignatureError,
                      SignatureMismatchError, Weight, format_weight,
                      is_dominant, parse_signature, parse_weight, rational)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NEGATIVE = 3


def _num(x):
    x = Fraction(x)
    return int(x) if x.denominator == 1 else f'{x.numerator}/{x.denominator}'


def _fail(msg):
    print(f'error: {msg}', file=sys.stderr)
    return EXIT_USAGE


def _classify_record(w, height_cap=0, gamma_cap=None):
    rec = {'signature': str(w.sig), 'weight': format_weight(w),
           'dominant': is_dominant(w)}
    if not rec['dominant']:
        return rec
    if w.sig.n == 0:
        verdict = classify.classical_upq(w)
    else:
        verdict = classify.check_U(w)
    rec.update(unitary=verdict.unitary, condition=verdict.condition,
               i=verdict.i, mu=verdict.mu, j=verdict.j)
    if height_cap:
        cert = verma.certify(w, height_cap)
        rec['oracle'] = cert['verdict']
        rec['oracle_agreement'] = _agreement(verdict.unitary, cert['verdict'])
    if gamma_cap is not None:
        theta = classify.gamma_positive_theta(w, gamma_cap)
        if theta is not None:
            rec['gamma_bound'] = 'positive-shift-found'
            rec['gamma_shift'] = {'a': theta.a, 'b': theta.b}
        else:
            rec['gamma_bound'] = 'nonpositive-up-to-cap'
    return rec


def _agreement(unitary, oracle_verdict):
    if unitary:
        return 'true' if oracle_verdict == 'psd_up_to_cap' else 'false'
    if oracle_verdict == 'negative_witness':
        return 'true'
    return 'inconclusive'


def cmd_classify(args):
    try:
        sig = parse_signature(args.signature)
        w = parse_weight(args.weight, sig)
    except (SignatureError, SignatureMismatchError) as exc:
        return _fail(str(exc))
    try:
        rec = _classify_record(w, args.height_cap, args.gamma_cap)
    except (DominanceError, classify.UnsupportedSignatureError) as exc:
        return _fail(str(exc))
    print(json.dumps(rec))
    return EXIT_OK


def _parse_range(text):
    parts = text.split(':')
    if len(parts) != 3:
        raise ValueError(f'range wants "lo:hi:step": {text!r}')
    lo, hi, step = (rational(x) for x in parts)
    if step <= 0:
        raise ValueError('range step must be positive')
    out = []
    v = lo
    while v <= hi:
        out.append(v)
        v += step
    return out


def cmd_scan(args):
    try:
        sig = parse_signature(args.signature)
        ranges = [_parse_range(r) for r in args.range]
    except (SignatureError, ValueError) as exc:
        return _fail(str(exc))
    if len(ranges) != sig.m + sig.n:
        return _fail(f'need {sig.m + sig.n} ranges for signature {sig}')
    if any(not r for r in ranges):
        return _fail('empty range')
    grids = [[]]
    for r in ranges:
        grids = [g + [v] for g in grids for v in r]
    rows = []
    for point in grids:
        w = Weight(sig, tuple(point[:sig.m]), tuple(point[sig.m:]))
        rec = {'signature': str(sig), 'weight': format_weight(w),
               'dominant': is_dominant(w), 'unitary': '', 'condition': '',
               'i': '', 'mu': '', 'j': '', 'oracle_agreement': ''}
        if rec['dominant']:
            try:
                full = _classify_record(w, args.height_cap)
            except classify.UnsupportedSignatureError as exc:
                return _fail(str(exc))
            for key in ('unitary', 'condition', 'i', 'mu', 'j',
                        'oracle_agreement'):
                if key in full and full[key] is not None:
                    rec[key] = full[key]
        rows.append(rec)
    header = ['signature', 'weight', 'dominant', 'unitary', 'condition',
              'i', 'mu', 'j', 'oracle_agreement']
    if args.format == 'json':
        print(json.dumps(rows))
    else:
        print(','.join(header))
        for rec in rows:
            print(','.join(_csv_cell(rec[h]) for h in header))
    return EXIT_OK


def _csv_cell(v):
    if isinstance(v, bool):
        return 'true' if v else 'false'
    if v is None:
        return ''
    s = str(v)
    return f'"{s}"' if ',' in s else s


def _report_json(report):
    return {'drop': [_num(x) for x in report.drop.lam + report.drop.omg],
            'dim': report.dim,
            'matrix': [[_num(x) for x in row] for row in report.matrix],
            'psd': report.psd,
            'witness': [_num(x) for x in report.witness]
            if report.witness else None}


def cmd_gram(args):
    try:
        sig = parse_signature(args.signature)
        w = parse_weight(args.weight, sig)
    except (SignatureError, SignatureMismatchError) as exc:
        return _fail(str(exc))
    if not is_dominant(w):
        return _fail(f'weight {format_weight(w)} is not dominant')
    if args.drop:
        try:
            drop = tuple(int(x) for x in args.drop.split(','))
        except ValueError as exc:
            return _fail(str(exc))
        if len(drop) != sig.m + sig.n or verma.drop_height(drop) is None:
            return _fail(f'not a drop for signature {sig}: {args.drop}')
        report = verma.gram(w, drop)
        print(json.dumps(_report_json(report)))
        return EXIT_OK if report.psd else EXIT_NEGATIVE
    cert = verma.certify(w, args.height_cap)
    print(json.dumps({'verdict': cert['verdict'],
                      'reports': [_report_json(r) for r in cert['reports']]}))
    return EXIT_OK if cert['verdict'] == 'psd_up_to_cap' else EXIT_NEGATIVE


def cmd_howe(args):
    try:
        sig = parse_signature(args.signature)
    except SignatureError as exc:
        return _fail(str(exc))
    if args.d < 1:
        return _fail('d must be >= 1')
    found = oscillator.joint_hwv(args.d, sig, args.max_degree)
    out = [{'partition': list(h.partition.parts),
            'flat': format_weight(h.flat),
            'degree': h.degree,
            'verified': h.verified} for h in found]
    print(json.dumps(out))
    return EXIT_OK if all(h.verified for h in found) else EXIT_NEGATIVE


def cmd_selftest(args):
    rng = random.Random(args.seed)
    sig = Signature(1, 1, 1)
    checks = []

    def check(name, fn):
        try:
            ok = bool(fn())
        except Exception as exc:  # report, do not crash the battery
            print(f'FAIL {name}: {exc}')
            checks.append(False)
            return
        print(('PASS' if ok else 'FAIL') + f' {name}')
        checks.append(ok)

    check('adjoint-killing-compatibility gl(1,1|1)',
          lambda: algebra.star_killing_check(sig, samples=3, seed=args.seed))
    check('classifier example is U1',
          lambda: classify.check_U(parse_weight('-3,1;1/2', sig)).condition == 'U1')

    def exclusivity():
        for _ in range(200):
            lam2 = Fraction(rng.randint(-8, 8), rng.choice((1, 2)))
            lam1 = lam2 - 0  # independent blocks for p = q = 1
            w = Weight(sig, (Fraction(rng.randint(-8, 8), rng.choice((1, 2))),
                             lam2),
                       (Fraction(rng.randint(-8, 8), rng.choice((1, 2))),))
            classify.check_U(w)
        return True
    check('classifier total on random dominant weights', exclusivity)
    check('oscillator bracket relations d=1',
          lambda: oscillator.commutation_fuzz(1, sig, samples=2, seed=args.seed))
    check('oscillator pairing adjunction d=1',
          lambda: oscillator.psi_sigma_check(1, sig, samples=5, seed=args.seed))
    check('gram certificate agrees on a unitary weight',
          lambda: verma.certify(parse_weight('-3,1;1/2', sig), 3)['verdict']
          == 'psd_up_to_cap')
    check('gram certificate rejects a non-unitary weight',
          lambda: verma.certify(parse_weight('0,0;1', sig), 3)['verdict']
          == 'negative_witness')
    return EXIT_OK if all(checks) else 1


def build_parser():
    ap = argparse.ArgumentParser(
        prog='superunitary',
        description='Unitarity of highest-weight u(p,q|n)-modules: '
                    'classification, Gram-matrix certificates, and the '
                    'oscillator realization.')
    sub = ap.add_subparsers(dest='cmd', required=True)

    c = sub.add_parser('classify', help='classify one weight')
    c.add_argument('--signature', required=True, help='p,q,n')
    c.add_argument('--weight', required=True, help='l1,..,lm;w1,..,wn')
    c.add_argument('--height-cap', type=int, default=0,
                   help='also run the Gram oracle up to this height')
    c.add_argument('--gamma-cap', type=int, default=None,
                   help='scan quadratic shifts up to this height')
    c.set_defaults(fn=cmd_classify)

    s = sub.add_parser('scan', help='classify a grid of weights')
    s.add_argument('--signature', required=True)
    s.add_argument('--range', action='append', required=True,
                   help='lo:hi:step, once per coordinate')
    s.add_argument('--format', choices=('csv', 'json'), default='csv')
    s.add_argument('--height-cap', type=int, default=0)
    s.set_defaults(fn=cmd_scan)

    g = sub.add_parser('gram', help='Gram matrix report')
    g.add_argument('--signature', required=True)
    g.add_argument('--weight', required=True)
    g.add_argument('--drop', default=None,
                   help='drop coordinates c1,..,c(m+n); omit to sweep')
    g.add_argument('--height-cap', type=int, default=2)
    g.set_defaults(fn=cmd_gram)

    h = sub.add_parser('howe', help='joint highest-weight decomposition')
    h.add_argument('--d', type=int, required=True)
    h.add_argument('--signature', required=True)
    h.add_argument('--max-degree', type=int, default=4)
    h.set_defaults(fn=cmd_howe)

    t = sub.add_parser('selftest', help='run a quick internal battery')
    t.add_argument('--seed', type=int, default=0)
    t.set_defaults(fn=cmd_selftest)
    return ap


def main(argv=None):
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    return args.fn(args)


if __name__ == '__main__':
    sys.exit(main())
