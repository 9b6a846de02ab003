# Copyright 2026 The ecs Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Independent truncated-Fock reference values for the C++ tests.

Everything here works on explicit Fock vectors and density matrices: the
decay is applied with amplitude-damping Kraus operators, the singlet
fraction is found by direct optimisation over local unitaries, and photon
statistics are read off the Fock amplitudes. Run it to regenerate the
constants frozen in tests/*_test.cpp.
"""

import math

import numpy as np
from scipy.optimize import minimize
from scipy.special import comb

CUT = 40


def coherent(beta, cut=CUT):
    n = np.arange(cut)
    logfact = np.array([math.lgamma(k + 1) for k in n])
    mag = np.exp(-abs(beta) ** 2 / 2 - 0.5 * logfact)
    return mag * np.power(complex(beta), n)


def logical_basis(a, cut=CUT):
    s2 = math.exp(-2 * a * a)
    c2 = math.sqrt(1 - s2 * s2)
    th = 0.5 * math.asin(s2)
    c, s = math.cos(th), math.sin(th)
    ka, kb = coherent(a, cut), coherent(-a, cut)
    plus = (c * ka - s * kb) / c2
    minus = (c * kb - s * ka) / c2
    return plus, minus


def damping_kraus(eta, cut=CUT):
    ops = []
    for k in range(cut):
        e = np.zeros((cut, cut))
        for n in range(k, cut):
            e[n - k, n] = math.sqrt(comb(n, k) * eta ** (n - k) * (1 - eta) ** k)
        ops.append(e)
    return ops


def channel_rho4(alpha, r, cut=30):
    ka, kb = coherent(alpha, cut), coherent(-alpha, cut)
    psi = np.outer(ka, kb) - np.outer(kb, ka)
    psi /= np.linalg.norm(psi)
    eta = 1 - r * r
    ks = damping_kraus(eta, cut)
    plus, minus = logical_basis(alpha * math.sqrt(eta), cut)
    basis = [np.outer(x, y) for x in (plus, minus) for y in (plus, minus)]
    m = np.zeros((4, 4), dtype=complex)
    # Unravel the product channel into pure branches and project each.
    for e1 in ks:
        left = e1 @ psi
        for e2 in ks:
            v = left @ e2.T
            c = np.array([np.vdot(b, v) for b in basis])
            m += np.outer(c, c.conj())
    return m


def negativity(rho):
    pt = rho.reshape(2, 2, 2, 2).transpose(0, 3, 2, 1).reshape(4, 4)
    lam = np.linalg.eigvalsh(pt)
    return -2 * lam[lam < 0].sum()


def su2(p):
    a, b, c = p
    return np.array([[np.cos(a) * np.exp(1j * b), np.sin(a) * np.exp(1j * c)],
                     [-np.sin(a) * np.exp(-1j * c), np.cos(a) * np.exp(-1j * b)]])


def singlet_fraction(rho):
    phi = np.array([1, 0, 0, 1]) / math.sqrt(2)

    def neg(p):
        v = np.kron(np.eye(2), su2(p)) @ phi
        return -(v.conj() @ rho @ v).real

    best = 0.0
    rng = np.random.default_rng(7)
    for _ in range(40):
        res = minimize(neg, rng.uniform(-3, 3, 3), method="BFGS",
                       options={"gtol": 1e-12})
        best = max(best, -res.fun)
    return best


def entropies(rho):
    lam = np.clip(np.linalg.eigvalsh(rho), 0, None)
    lin = 1 - (rho @ rho).trace().real
    vn = -sum(x * math.log2(x) for x in lam if x > 1e-15)
    return lin, vn


def classify(nf, ng):
    if nf % 2:
        return 2
    if ng % 2:
        return 4
    if nf > 0:
        return 1
    if ng > 0:
        return 3
    return 0


def bell_terms(k, a):
    # Coherent expansions of the logical Bell states, unnormalised.
    plus = [(1.0, a), (-1.0, -a)]  # up to the common factor, see below
    del plus
    s2 = math.exp(-2 * a * a)
    c2 = math.sqrt(1 - s2 * s2)
    th = 0.5 * math.asin(s2)
    c, s = math.cos(th), math.sin(th)
    p = [(c / c2, a), (-s / c2, -a)]
    m = [(-s / c2, a), (c / c2, -a)]
    pairs = {1: [(p, p, 1), (m, m, 1)], 2: [(p, p, 1), (m, m, -1)],
             3: [(p, m, 1), (m, p, 1)], 4: [(p, m, 1), (m, p, -1)]}[k]
    terms = []
    for x, y, sign in pairs:
        for cx, bx in x:
            for cy, by in y:
                terms.append((sign * cx * cy / math.sqrt(2), bx, by))
    return terms


def bell_masses(k, a, cut=70):
    amp = np.zeros((cut, cut), dtype=complex)
    for coef, b1, b2 in bell_terms(k, a):
        f = (b1 + b2) / math.sqrt(2)
        g = (b1 - b2) / math.sqrt(2)
        amp += coef * np.outer(coherent(f, cut), coherent(g, cut))
    prob = abs(amp) ** 2
    masses = [0.0] * 5
    for nf in range(cut):
        for ng in range(cut):
            masses[classify(nf, ng)] += prob[nf, ng]
    return masses


def misid(a):
    total = 0.0
    for k in range(1, 5):
        ms = bell_masses(k, a)
        decisive = sum(ms[1:])
        total += (decisive - ms[k]) / decisive
    return total / 4, bell_masses(1, a)[3]


def concentration(alpha, eta, cut=16):
    ka, kb = coherent(alpha, cut), coherent(-alpha, cut)
    pair = math.cos(eta) * np.kron(ka, kb) - math.sin(eta) * np.kron(kb, ka)
    pair /= np.linalg.norm(pair)
    plus, minus = logical_basis(alpha, cut)
    b2 = (np.kron(plus, plus) - np.kron(minus, minus)) / math.sqrt(2)
    full = np.einsum("ab,cd->abcd", pair.reshape(cut, cut), pair.reshape(cut, cut))
    rest = np.einsum("bc,abcd->ad", b2.conj().reshape(cut, cut), full)
    return np.linalg.norm(rest) ** 2


def main():
    np.set_printoptions(precision=17)
    for alpha, r in [(0.5, 0.2), (1.0, 0.5), (2.0, 0.3), (1.3, 0.8)]:
        rho = channel_rho4(alpha, r)
        f_single = singlet_fraction(rho)
        lin, vn = entropies(rho)
        print(f"channel alpha={alpha} r={r}: trace={rho.trace().real:.17g}")
        print(f"  E={negativity(rho):.17g} F={f_single:.17g} "
              f"f={(2 * f_single + 1) / 3:.17g}")
        print(f"  S_lin={lin:.17g} S_vn={vn:.17g}")
        print(f"  rho00={rho[0, 0].real:.17g} rho03={rho[0, 3].real:.17g} "
              f"rho11={rho[1, 1].real:.17g} rho12={rho[1, 2].real:.17g}")
    for a in (0.5, 1.0, 2.0):
        p, b13 = misid(a)
        print(f"misid alpha={a}: rate={p:.17g} b1_as_b3={b13:.17g}")
    for alpha, eta in [(1.0, math.pi / 8), (0.5, math.pi / 3)]:
        print(f"concentration alpha={alpha} eta={eta}: "
              f"P={concentration(alpha, eta):.17g}")


if __name__ == "__main__":
    main()
