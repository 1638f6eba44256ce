"""Displaced Fourier-invariant states on Z_N.

The displacement family is D_mn = v^{-mn/2} U^m V^{-n} with the half phase
e^{-iπmn/N} evaluated at representatives 0 ≤ m,n ≤ N-1 (same convention as
the phase-point basis).  The reference state

    |0⟩ = (|u_0⟩ + |v_0⟩) / ||...||

is invariant under the discrete Fourier transform, and the N² states
|m,n⟩ = D_mn|0⟩ form an overcomplete family resolving the identity as
Σ|m,n⟩⟨m,n| = N·I.

The overlap of two family members factors as a symplectic phase times a
real magnitude:

    ⟨p,q|r,s⟩ = v^{(rq-ps)/2} · M(p,q,r,s)

with M = 1 on the diagonal, (N + 2√N)/(2(N + √N)) when exactly one index
pair agrees, and cos(π(r-p)(s-q)/N)/(√N + 1) when both differ.  The cosine
vanishes at half-integer arguments, which exist exactly when N is even:
even dimensions admit orthogonal pairs of distinct coherent states, odd
ones never do.
"""

from __future__ import annotations

import numpy as np

from .linalg import basis_ket, normalize
from .schwinger import Kinematics


def displacement(n: int, m: int, nn: int) -> np.ndarray:
    """Displacement D_mn = v^{-mn/2} U^m V^{-n}, canonical representatives."""
    kin = Kinematics(n)
    m %= n
    nn %= n
    half = np.exp(-1j * np.pi * m * nn / n)
    um = np.linalg.matrix_power(kin.U, m)
    vminus = np.linalg.matrix_power(kin.V, (n - nn) % n)
    return half * um @ vminus


def reference_state(n: int) -> np.ndarray:
    """Fourier-invariant reference |0⟩ ∝ |u_0⟩ + |v_0⟩.

    The pre-normalization squared norm is 2 + 2/√N.
    """
    kin = Kinematics(n)
    raw = basis_ket(n, 0) + kin.F[:, 0]
    return normalize(raw)


def coherent_state(n: int, m: int, nn: int) -> np.ndarray:
    """Family member |m,n⟩ = D_mn|0⟩."""
    return displacement(n, m, nn) @ reference_state(n)


def coherent_overlap(n: int, p: int, q: int, r: int, s: int) -> complex:
    """Direct inner product ⟨p,q|r,s⟩ of two family members."""
    return complex(coherent_state(n, p, q).conj() @ coherent_state(n, r, s))


def symplectic_phase(n: int, p: int, q: int, r: int, s: int) -> complex:
    """Phase factor v^{(rq-ps)/2} = e^{iπ(rq-ps)/N}, canonical representatives."""
    p %= n
    q %= n
    r %= n
    s %= n
    return complex(np.exp(1j * np.pi * (r * q - p * s) / n))


def overlap_magnitude(n: int, p: int, q: int, r: int, s: int) -> float:
    """Closed-form |⟨p,q|r,s⟩| by case on which index pairs agree."""
    p %= n
    q %= n
    r %= n
    s %= n
    rt = np.sqrt(n)
    if (p, q) == (r, s):
        return 1.0
    if p == r or q == s:
        return float((n + 2 * rt) / (2 * (n + rt)))
    return float(abs(np.cos(np.pi * (r - p) * (s - q) / n)) / (rt + 1))


def coherent_overlap_closed(n: int, p: int, q: int, r: int, s: int) -> complex:
    """Closed-form complex overlap: symplectic phase times a signed factor.

    The generic-case factor keeps the sign of the cosine; only the
    magnitude helper above takes its absolute value.
    """
    p %= n
    q %= n
    r %= n
    s %= n
    rt = np.sqrt(n)
    if (p, q) == (r, s):
        factor = 1.0
    elif p == r or q == s:
        factor = (n + 2 * rt) / (2 * (n + rt))
    else:
        factor = np.cos(np.pi * (r - p) * (s - q) / n) / (rt + 1)
    return symplectic_phase(n, p, q, r, s) * factor


class CoherentFamily:
    """All N² coherent states of one dimension, flat index i = m·N + n."""

    def __init__(self, n: int):
        if not isinstance(n, (int, np.integer)) or n < 1:
            raise ValueError(f"dimension must be a positive integer, got {n!r}")
        self.dim = int(n)
        self.ref = reference_state(self.dim)
        kin = Kinematics(self.dim)
        states = np.zeros((self.dim, self.dim, self.dim), dtype=complex)
        for m in range(self.dim):
            um = np.linalg.matrix_power(kin.U, m)
            for nn in range(self.dim):
                half = np.exp(-1j * np.pi * m * nn / self.dim)
                vminus = np.linalg.matrix_power(kin.V, (self.dim - nn) % self.dim)
                states[m, nn] = half * um @ (vminus @ self.ref)
        self.states = states

    def state(self, m: int, nn: int) -> np.ndarray:
        return self.states[m % self.dim, nn % self.dim].copy()

    def gram(self) -> np.ndarray:
        """Gram matrix G[i,j] = ⟨state_i|state_j⟩ over the flat index."""
        flat = self.states.reshape(self.dim * self.dim, self.dim)
        return flat.conj() @ flat.T

    def identity_resolution(self) -> np.ndarray:
        """Σ_mn |m,n⟩⟨m,n|; equals N·I for the Fourier-invariant reference."""
        flat = self.states.reshape(self.dim * self.dim, self.dim)
        return flat.T @ flat.conj()


def coherent_family(n: int) -> CoherentFamily:
    return CoherentFamily(n)
