"""Classifier against module oracle on a seeded corpus.

Any disagreement is shrunk to a smaller presentation before it is printed,
which is how one would start debugging either side.
"""

import sys
from collections import Counter

from monogp.algebra import build_algebra
from monogp.classify import is_gp_cyclic
from monogp.fuzz import GenConfig, generate, shrink
from monogp.oracle import gp_oracle
from monogp.presentation import format_presentation


def disagreements(pres):
    A = build_algebra(pres)
    return [p for p in A.nontrivial_basis() if gp_oracle(A, p) != is_gp_cyclic(A, p)]


count = int(sys.argv[1]) if len(sys.argv) > 1 else 200
verdicts = Counter()
for seed in range(count):
    pres = generate(GenConfig(seed=seed, max_dimension=60))
    A = build_algebra(pres)
    verdicts.update(str(is_gp_cyclic(A, p)) for p in A.nontrivial_basis())
    if disagreements(pres):
        small = shrink(pres, lambda q: bool(disagreements(q)))
        print("seed %d disagrees; shrunk to:\n%s" % (seed, format_presentation(small)))
print("verdicts over %d algebras: %s" % (count, dict(verdicts)))
