"""Independent oracles shared by several test modules."""
from sympy import GF as SGF
from sympy.polys.matrices import DomainMatrix

from gmdeg.algebra import rank_mod_p
from gmdeg.fibration import DEGENERATE, wedge


def _dm(rows, p):
    K = SGF(p)
    return DomainMatrix([[K(int(x)) for x in r] for r in rows], (len(rows), len(rows[0])), K)


def kernel_oracle(inst, x):
    """(conic rank, quadric rank) at x by restricting q to ker(l_v) explicitly."""
    p = inst.p
    v = [int(sum(x[i] * inst.V[i][a] for i in range(4))) % p for a in range(5)]
    # a complement of v from standard vectors, chosen greedily
    comp = []
    for j in range(5):
        e = [int(k == j) for k in range(5)]
        if rank_mod_p([v] + comp + [e], p) == len(comp) + 2:
            comp.append(e)
    Wg = [[c % p for c in wedge(v, b)] for b in comp]               # 4 x 10
    q = inst.q
    G = [[sum(Wg[i][a] * q[a][b] * Wg[j][b] for a in range(10) for b in range(10)) % p
          for j in range(4)] for i in range(4)]
    ell = [sum(inst.h[a] * Wg[i][a] for a in range(10)) % p for i in range(4)]
    quad = _dm(G, p).rank()
    if not any(ell):
        return DEGENERATE, quad
    K = _dm([ell], p).nullspace().to_Matrix()                       # rows span ker(l)
    Kr = [[int(c) % p for c in K.row(i)] for i in range(K.rows)]
    R = [[sum(Kr[a][i] * G[i][j] * Kr[b][j] for i in range(4) for j in range(4)) % p
          for b in range(len(Kr))] for a in range(len(Kr))]
    return _dm(R, p).rank(), quad
