"""Frozen weight lists used by the acceptance battery.

POSITIVE: 30 dominant weights, 10 per family {U1/U2, U3/U4, U5/U6}, each of
the six conditions hit at least twice, all with at least one non-integer
entry (or designed edge cases); every entry certifies PSD up to height 6 on
its signature.  NEGATIVE: 30 dominant non-unitary weights obtained by
perturbing the positive list off its defining (in)equalities; every entry
exhibits an exact Gram negative witness within height 6.
"""

# (signature, weight, expected condition)
POSITIVE = [
    ('1,1,1', '-3,1;1/2', 'U1'),
    ('1,1,1', '-2,0;1/2', 'U1'),
    ('2,1,1', '-4,-4,2;1/2', 'U1'),
    ('1,1,2', '-4,1;3/2,1/2', 'U1'),
    ('1,2,1', '-4,1,0;1/2', 'U1'),
    ('1,1,1', '-3,1;2', 'U2'),
    ('2,1,1', '-3,-3,1;2', 'U2'),
    ('1,1,2', '-3/2,1;1/2,1/2', 'U2'),
    ('1,2,1', '-5/2,1,0;1/2', 'U2'),
    ('1,1,1', '-2,2;1', 'U2'),
    ('1,1,2', '-3,1/2;3/2,1/2', 'U3'),
    ('1,1,2', '-4,0;2,1', 'U3'),
    ('1,1,2', '-3,1/4;7/4,3/4', 'U3'),
    ('1,1,2', '-5,1;2,0', 'U3'),
    ('1,1,2', '-4,1/2;3/2,1/2', 'U3'),
    ('1,1,2', '-5/2,1/2;3/2,1/2', 'U4'),
    ('1,1,2', '-2,0;1,1', 'U4'),
    ('1,1,2', '-7/2,1/2;5/2,1/2', 'U4'),
    ('1,1,2', '-3,0;2,1', 'U4'),
    ('1,1,2', '-4,0;3,1', 'U4'),
    ('1,1,1', '-2,-1/2;1/2', 'U5'),
    ('2,1,1', '-3,-3,-1/2;1/2', 'U5'),
    ('1,2,1', '-3,1/2,-1/2;1/2', 'U5'),
    ('1,1,1', '-4,-1;1', 'U5'),
    ('1,2,1', '-1,0,0;0', 'U5'),
    ('1,1,1', '0,0;0', 'U6'),
    ('1,1,1', '-1,-1;1', 'U6'),
    ('1,1,1', '-1/2,-1/2;1/2', 'U6'),
    ('2,1,1', '-3/2,-3/2,-1/2;1/2', 'U6'),
    ('1,2,1', '-1,1,0;0', 'U6'),
]

# (signature, weight); NEGATIVE[k] is a dominance-preserving perturbation of
# POSITIVE[k] that the classifier rejects.
NEGATIVE = [
    ('1,1,1', '-5/4,1;1/2'),
    ('1,1,1', '-5/4,0;1/2'),
    ('2,1,1', '-4,-4,2;9/4'),
    ('1,1,2', '-4,1/4;3/2,1/2'),
    ('1,2,1', '-4,1,0;-1/4'),
    ('1,1,1', '-11/4,1;2'),
    ('2,1,1', '-3,-3,1;9/4'),
    ('1,1,2', '-5/4,1;1/2,1/2'),
    ('1,2,1', '-9/4,1,0;1/2'),
    ('1,1,1', '-7/4,2;1'),
    ('1,1,2', '-3,1/4;3/2,1/2'),
    ('1,1,2', '-4,-1/4;2,1'),
    ('1,1,2', '-3,0;7/4,3/4'),
    ('1,1,2', '-5,3/4;2,0'),
    ('1,1,2', '-4,0;3/2,1/2'),
    ('1,1,2', '-9/4,1/2;3/2,1/2'),
    ('1,1,2', '-7/4,0;1,1'),
    ('1,1,2', '-13/4,1/2;5/2,1/2'),
    ('1,1,2', '-11/4,0;2,1'),
    ('1,1,2', '-15/4,0;3,1'),
    ('1,1,1', '-2,-3/4;1/2'),
    ('2,1,1', '-3,-3,-3/4;1/2'),
    ('1,2,1', '-3,1/2,-1/2;1/4'),
    ('1,1,1', '-4,-5/4;1'),
    ('1,2,1', '-1,0,0;1/4'),
    ('1,1,1', '1/4,0;0'),
    ('1,1,1', '-3/4,-1;1'),
    ('1,1,1', '-1/4,-1/2;1/2'),
    ('2,1,1', '-3/2,-3/2,-1/2;3/4'),
    ('1,2,1', '-3/4,1,0;0'),
]
