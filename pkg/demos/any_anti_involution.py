"""Certificates for a matrix that commutes with a scrambled anti-involution.

K is hidden by a random change of basis, so it has no visible block shape.
The library finds a basis v_1..v_k, Kv_1..Kv_k that restores one and
certifies det A as a sum of two squares, over Q and over F_7.
"""

import random

from pseudocentro import Matrix, PrimeField, QQ, build_basis, sos_certificate_general
from pseudocentro.structure import AntiInvolution, canonical_anti_involution
from pseudocentro.matrix import conjugate_by


def random_matrix(n, field, rng):
    return Matrix([[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)], field)


def scrambled_pair(k, field, rng):
    Kc = canonical_anti_involution(k, field).K
    while True:
        V = random_matrix(2 * k, field, rng)
        if V.det():
            break
    P, Q = random_matrix(k, field, rng), random_matrix(k, field, rng)
    # [[P, -Q], [Q, P]] commutes with [[0, -I], [I, 0]]
    top = [list(P.row(i)) + [-q for q in Q.row(i)] for i in range(k)]
    bottom = [list(Q.row(i)) + list(P.row(i)) for i in range(k)]
    Ac = Matrix(top + bottom, field)
    Vi = V.inverse()
    return V @ Ac @ Vi, V @ Kc @ Vi


def main(seed=7):
    rng = random.Random(seed)
    for field in (QQ, PrimeField(7)):
        A, K = scrambled_pair(3, field, rng)
        print(f"field {field.name}: K @ A == A @ K is {K @ A == A @ K}")
        V = build_basis(AntiInvolution(K))
        print("  K in the new basis is [[0, -I], [I, 0]]:",
              conjugate_by(K, V) == canonical_anti_involution(3, field).K)
        cert = sos_certificate_general(A, K)
        print(f"  det A = {A.det()} = ({cert.x})^2 + ({cert.y})^2")


if __name__ == "__main__":
    main()
