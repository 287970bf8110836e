#!/usr/bin/env python3
"""Independent oracle for the frozen expected values in the C++ unit tests.

Builds the truncated tensor product of two sl2 Verma modules directly with
sympy matrices (exact arithmetic) and prints the quantities that the unit
tests assert.  Run manually; the printed values are copied into the tests.

Conventions (must match the library):
  basis of layer k: (a, b) with a + b = k, ascending a
  e . f^a v = a(mu - a + 1) f^{a-1} v
  f . f^a v = f^{a+1} v
  h . f^a v = (mu - 2a) f^a v
  Casimir C = ef + fe + h^2/2, eigenvalue nu(nu+2)/2 on hw vector of weight nu
"""

import sympy as sp


def layer_basis(k):
    return [(a, k - a) for a in range(k + 1)]


def raising_matrix(mu1, mu2, k):
    """e: layer k -> layer k-1, shape k x (k+1)."""
    src = layer_basis(k)
    dst = {p: i for i, p in enumerate(layer_basis(k - 1))}
    m = sp.zeros(k, k + 1)
    for j, (a, b) in enumerate(src):
        if a > 0:
            m[dst[(a - 1, b)], j] += a * (mu1 - a + 1)
        if b > 0:
            m[dst[(a, b - 1)], j] += b * (mu2 - b + 1)
    return m


def lowering_matrix(k):
    """f: layer k -> layer k+1, shape (k+2) x (k+1)."""
    src = layer_basis(k)
    dst = {p: i for i, p in enumerate(layer_basis(k + 1))}
    m = sp.zeros(k + 2, k + 1)
    for j, (a, b) in enumerate(src):
        m[dst[(a + 1, b)], j] += 1
        m[dst[(a, b + 1)], j] += 1
    return m


def casimir_matrix(mu1, mu2, k):
    lam = mu1 + mu2 - 2 * k
    c = (lam + lam**2 / sp.S(2)) * sp.eye(k + 1)
    if k > 0:
        c += 2 * lowering_matrix(k - 1) * raising_matrix(mu1, mu2, k)
    return sp.simplify(c)


def ceig(nu):
    return sp.simplify(nu * (nu + 2) / 2)


def singular_dim(mu1, mu2, k, c=None):
    e = raising_matrix(mu1, mu2, k)
    ns = e.nullspace()
    if c is None:
        return len(ns)
    cm = casimir_matrix(mu1, mu2, k)
    gen = ((cm - c * sp.eye(k + 1)) ** (k + 1)).nullspace()
    if not ns or not gen:
        return 0
    kerb = sp.Matrix.hstack(*ns)
    genb = sp.Matrix.hstack(*gen)
    both = sp.Matrix.hstack(kerb, -genb)
    inter = both.nullspace()
    return len(inter)  # dim of ker(E) cap geneig


i = sp.I

print("== raising_matrix (i,-i), k=1 ==")
print(raising_matrix(i, -i, 1))

print("== casimir_matrix (i,-i), k=1 ==")
print(casimir_matrix(i, -i, 1))
print("square:", sp.simplify(casimir_matrix(i, -i, 1) ** 2))

print("== c(i) ==", ceig(i))
print("== c(1/2), c(-3/2) ==", ceig(sp.S(1) / 2), ceig(-sp.S(3) / 2))

print("== singular vectors (i,-i) k=1 ==", raising_matrix(i, -i, 1).nullspace())
print("== singular dim (0,0) k=1 ==", singular_dim(0, 0, 1))

print("== geneig (0,0) k=1 c=0 dim ==")
cm = casimir_matrix(0, 0, 1)
print(len(((cm - 0 * sp.eye(2)) ** 2).nullspace()))

print("== geneig (1/2,0) k=1 dims for c(1/2), c(-3/2) ==")
cm = casimir_matrix(sp.S(1) / 2, 0, 1)
for c in (ceig(sp.S(1) / 2), ceig(-sp.S(3) / 2)):
    print(c, len(((cm - c * sp.eye(2)) ** 2).nullspace()))

print("== H(1,1,4): singular dim (−1,−1) k=1 restricted to c(−4) ==")
print(singular_dim(-1, -1, 1, ceig(-4)))
print("== H(0,0,2): singular dim (0,0) k=1 restricted to c(−2) ==")
print(singular_dim(0, 0, 1, ceig(-2)))

print("== casimir semisimple checks ==")
for mu1, mu2, k, label in [(i, -i, 1, "(i,-i) k=1"), (0, 0, 1, "(0,0) k=1")]:
    cm = casimir_matrix(mu1, mu2, k)
    c = ceig(mu1 + mu2 - 2 * k)
    gen = ((cm - c * sp.eye(k + 1)) ** (k + 1)).nullspace()
    plain = (cm - c * sp.eye(k + 1)).nullspace()
    print(label, "geneig dim", len(gen), "eig dim", len(plain))

print("== (1,3) classification data ==")
# orbit {-4, 2}: s=4, layers k=1 (nu=2) and k=4 (nu=-4)
print("singular dim at k=4 restricted to c(-4):", singular_dim(1, 3, 4, ceig(-4)))
print("singular dim at k=1 restricted to c(2):", singular_dim(1, 3, 1, ceig(2)))
# orbit {-2, 0}: layers k=2 (nu=0) and k=3 (nu=-2) -> P(-2) expected
print("singular dim at k=3 restricted to c(-2):", singular_dim(1, 3, 3, ceig(-2)))
print("singular dim at k=2 restricted to c(0):", singular_dim(1, 3, 2, ceig(0)))
