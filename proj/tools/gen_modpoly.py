#!/usr/bin/env python3
# This file is part of hassepairs.
#
# Licensed under the Apache License, Version 2.0 (see
# LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
"""Regenerate the classical modular polynomial tables in data/modpoly/.

Writes one file phi_<l>.txt per prime l in {2,3,5,7,11,13,17,19}, in the
format read by the library: lines "i j c" with i >= j, only nonzero
coefficients, symmetric completion implied.

Method: exact integer q-expansions.  Let J = j(q) = 1/q + 744 + ... and
let the roots of Phi_l(X, j(tau)) be j(l*tau) and j((tau+b)/l) for
b = 0..l-1.  The power sums of the l "small" roots are

    sigma_k = sum_b j((tau+b)/l)^k = l * U_l(J^k),

where U_l keeps exponents divisible by l and divides them by l (the root
sum over b kills every other exponent).  Newton's identities turn the
sigma_k into the coefficients of A(X) = prod_b (X - j((tau+b)/l)), all
integer q-series with shallow poles.  Multiplying by (X - j(l*tau)) gives
the coefficients of Phi_l(X, j) as q-series, each a polynomial in J of
degree <= l+1, recovered by subtracting leading terms against J^k.

Self-checks: the q-expansion of j, symmetry Phi(X,Y) = Phi(Y,X), the
Kronecker congruence Phi_l = (X^l - Y)(X - Y^l) mod l, and the published
Phi_2 coefficients.
"""

import sys
from pathlib import Path

LEVELS = [2, 3, 5, 7, 11, 13, 17, 19]
MARGIN = 8  # positive q-exponents checked to vanish

# Published classical Phi_2 (e.g. Cox, "Primes of the form x^2+ny^2", 11.22).
PHI2_KNOWN = {
    (3, 0): 1,
    (2, 2): -1,
    (2, 1): 1488,
    (2, 0): -162000,
    (1, 1): 40773375,
    (1, 0): 8748000000,
    (0, 0): -157464000000000,
}


# ---------------------------------------------------------------------------
# Integer Laurent series in q: dict {exponent: coefficient}, zero omitted.

def smul(c, f):
    return {e: c * v for e, v in f.items()} if c else {}


def sadd(f, g):
    h = dict(f)
    for e, v in g.items():
        w = h.get(e, 0) + v
        if w:
            h[e] = w
        elif e in h:
            del h[e]
    return h


def smulser(f, g, hi):
    """Product truncated at exponent hi."""
    h = {}
    gs = sorted(g.items())
    for ef, vf in f.items():
        for eg, vg in gs:
            e = ef + eg
            if e > hi:
                break
            h[e] = h.get(e, 0) + vf * vg
    return {e: v for e, v in h.items() if v}


def j_series(nmax):
    """q-expansion of j, exponents -1 .. nmax, as a dict."""
    # E4 = 1 + 240 sum sigma_3(n) q^n
    sig3 = [0] * (nmax + 2)
    for d in range(1, nmax + 2):
        d3 = d * d * d
        for m in range(d, nmax + 2, d):
            sig3[m] += d3
    e4 = {0: 1}
    for n in range(1, nmax + 2):
        e4[n] = 240 * sig3[n]

    # eta-product: prod (1-q^n) by the pentagonal number theorem
    eta = {0: 1}
    k = 1
    while True:
        e1 = k * (3 * k - 1) // 2
        e2 = k * (3 * k + 1) // 2
        if e1 > nmax + 2 and e2 > nmax + 2:
            break
        s = 1 if k % 2 == 0 else -1
        if e1 <= nmax + 2:
            eta[e1] = s
        if e2 <= nmax + 2:
            eta[e2] = s
        k += 1

    hi = nmax + 1
    eta3 = smulser(smulser(eta, eta, hi), eta, hi)
    eta6 = smulser(eta3, eta3, hi)
    eta12 = smulser(eta6, eta6, hi)
    eta24 = smulser(eta12, eta12, hi)

    e4c = smulser(smulser(e4, e4, hi), e4, hi)

    # j*q = E4^3 / eta24; invert eta24 (constant term 1)
    inv = {0: 1}
    for n in range(1, hi + 1):
        acc = 0
        for e, v in eta24.items():
            if 1 <= e <= n:
                acc += v * inv.get(n - e, 0)
        if acc:
            inv[n] = -acc
    num = smulser(e4c, inv, hi)
    j = {e - 1: v for e, v in num.items()}
    assert j[-1] == 1 and j[0] == 744 and j[1] == 196884
    assert j[2] == 21493760 and j[3] == 864299970
    return j


def u_op(f, ell):
    return {e // ell: v for e, v in f.items() if e % ell == 0}


def substitute_qpow(f, ell, hi):
    return {e * ell: v for e, v in f.items() if e * ell <= hi}


def series_to_jpoly(f, jpows, margin):
    """Write series f as sum alpha_k J^k; return [alpha_0, alpha_1, ...]."""
    pole = -min(f.keys(), default=0)
    if pole < 0:
        pole = 0
    alphas = [0] * (pole + 1)
    rem = dict(f)
    for k in range(pole, -1, -1):
        c = rem.get(-k, 0)
        alphas[k] = c
        if c:
            rem = sadd(rem, smul(-c, jpows[k]))
    for e in range(0, margin + 1):
        assert rem.get(e, 0) == 0, f"nonzero residual at q^{e}"
    assert not any(e < 0 and v for e, v in rem.items())
    return alphas


def modular_polynomial(ell):
    deg = ell + 1
    # Working window: every intermediate product loses exactness up to the
    # pole order of its factors, so leave generous slack above MARGIN.
    hi = MARGIN + 4 * ell + 12
    nmax = ell * hi                  # J precision needed for U_l(J^k)
    J = j_series(nmax)

    jpow = [{0: 1}]
    for _ in range(deg):
        jpow.append(smulser(jpow[-1], J, MARGIN + deg + 4))
    # full-precision powers, only used through U_l
    jpow_full = [{0: 1}]
    for _ in range(ell):
        jpow_full.append(smulser(jpow_full[-1], J, nmax))

    sigma = [None] * (ell + 1)
    for k in range(1, ell + 1):
        sigma[k] = smul(ell, u_op(jpow_full[k], ell))

    # Newton: e_m = (1/m) sum_{i=1..m} (-1)^{i-1} e_{m-i} sigma_i
    esym = [{0: 1}]
    for m in range(1, ell + 1):
        acc = {}
        for i in range(1, m + 1):
            t = smulser(esym[m - i], sigma[i], hi)
            acc = sadd(acc, smul(-1 if i % 2 == 0 else 1, t))
        em = {}
        for e, v in acc.items():
            if e > hi - ell - 2:  # beyond guaranteed-exact window
                continue
            q, r = divmod(v, m)
            assert r == 0, "Newton identity gave a non-integral series"
            if q:
                em[e] = q
        esym.append(em)

    acoef = [smul(-1 if m % 2 else 1, esym[m]) for m in range(ell + 1)]

    R = substitute_qpow(J, ell, hi)  # j(l*tau)
    phicoef = []
    for m in range(deg + 1):
        t = {e: v for e, v in (acoef[m] if m <= ell else {}).items()
             if e <= MARGIN + 4}
        if m >= 1:
            prod = smulser(R, acoef[m - 1], MARGIN + 4)
            t = sadd(t, smul(-1, prod))
        phicoef.append(t)

    coeffs = {}
    for m in range(deg + 1):
        alphas = series_to_jpoly(phicoef[m], jpow, MARGIN)
        assert len(alphas) <= deg + 1
        for k, a in enumerate(alphas):
            if a:
                coeffs[(deg - m, k)] = a

    # symmetry
    for (i, k), v in coeffs.items():
        assert coeffs.get((k, i), 0) == v, f"asymmetry at {(i, k)} for l={ell}"
    assert coeffs.get((deg, 0)) == 1

    # Kronecker congruence: Phi_l = (X^l - Y)(X - Y^l) mod l
    kron = {}
    for (i, k), v in (((ell + 1, 0), 1), ((ell, ell), -1), ((1, 1), -1),
                      ((0, ell + 1), 1)):
        kron[(i, k)] = v
    keys = set(coeffs) | set(kron)
    for key in keys:
        assert (coeffs.get(key, 0) - kron.get(key, 0)) % ell == 0, \
            f"Kronecker congruence fails at {key} for l={ell}"

    if ell == 2:
        for (i, k), v in PHI2_KNOWN.items():
            assert coeffs.get((i, k), 0) == v
            assert coeffs.get((k, i), 0) == v
        known = set()
        for (i, k) in PHI2_KNOWN:
            known.add((i, k))
            known.add((k, i))
        assert set(coeffs) == known

    return coeffs


def write_table(ell, coeffs, outdir):
    path = outdir / f"phi_{ell}.txt"
    lines = [f"# classical modular polynomial, level {ell}",
             "# i j c : coefficient of X^i Y^j (and of X^j Y^i)"]
    for (i, k) in sorted(coeffs, reverse=True):
        if i < k:
            continue
        lines.append(f"{i} {k} {coeffs[(i, k)]}")
    path.write_text("\n".join(lines) + "\n")
    return path


def main():
    outdir = Path(sys.argv[1]) if len(sys.argv) > 1 else \
        Path(__file__).resolve().parent.parent / "data" / "modpoly"
    outdir.mkdir(parents=True, exist_ok=True)
    for ell in LEVELS:
        coeffs = modular_polynomial(ell)
        path = write_table(ell, coeffs, outdir)
        print(f"l={ell}: {sum(1 for (i, k) in coeffs if i >= k)} entries "
              f"-> {path}")


if __name__ == "__main__":
    main()
