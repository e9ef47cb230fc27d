"""Which paths are perfect in kZ_n/J^d?

Every path of length d is a relation, so a nonzero path p of length l has
exactly one partner: the path of length d - l that closes it into a
relation.  The criterion therefore marks every length 1..d-1 as perfect.
These algebras are selfinjective, so every module is Gorenstein-projective,
and the module oracle (which never looks at perfect pairs) agrees path by
path.  In particular the longest nonzero paths, of length d - 1, are perfect
too.
"""

from monogp.algebra import truncated_algebra
from monogp.classify import Verdict, perfect_paths
from monogp.oracle import gp_oracle
from monogp.quiver import Quiver


def cycle(n):
    return Quiver(range(1, n + 1), [("x%d" % i, i, i % n + 1) for i in range(1, n + 1)])


print(" n  d  perfect lengths   oracle GP lengths")
for n in range(1, 5):
    for d in range(2, 6):
        A = truncated_algebra(cycle(n), d)
        perfect = sorted({p.length for p in perfect_paths(A).perfect_paths})
        gp = sorted({
            p.length for p in A.nontrivial_basis()
            if gp_oracle(A, p) is Verdict.GORENSTEIN_NON_PROJECTIVE
        })
        print("%2d %2d  %-16s  %s" % (n, d, perfect, gp))

# Add one extra loop and the picture collapses: no perfect paths at all.
Q = Quiver([1, 2], [("a", 1, 2), ("b", 2, 1), ("c", 1, 1)])
for d in (2, 3, 4):
    print("with a loop, d=%d: %d perfect paths" % (d, len(perfect_paths(truncated_algebra(Q, d)))))
