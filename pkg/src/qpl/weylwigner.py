"""Phase-point operator basis on Z_N x Z_N and the discrete Wigner transform.

The basis is built from the double sum

    Δ_mn = (1/N) Σ_{r,s} h(r,s) v^{-s·m} v^{-r·n} U^r V^s

over representatives 0 ≤ r,s ≤ N-1, where h(r,s) is the half phase
"v^{rs/2}".  The half phase is the only delicate ingredient:

  * odd N:  h(r,s) = v^{2⁻¹·rs} with 2⁻¹ = (N+1)/2, the ring inverse of 2
    in Z_N.  This yields the full algebra: Δ² = I, the symplectic product
    rule, and the u(N) structure constants below.
  * even N: 2 has no inverse in Z_N, so h(r,s) = e^{iπrs/N} is evaluated
    at the representatives directly, with the sign flipped on the points
    {r+s odd, r+s > N} — the minimal repair that keeps every Δ hermitian
    and the completeness sum Σ Δ O Δ = N·tr(O)·I intact.  (The repair set
    is empty for N ≤ 2, so the N = 2 basis is the classic textbook one.)
    Δ² = I is genuinely lost for even N.

Label convention: the first index m pairs with the V-power phase and the
second index n with the U-power phase.  Equivalently, for odd N,

    Δ_mn = V^{-n} U^{2m} V^{-n} F²,

and the Wigner marginals come out as

    Σ_n W(m,n) = ⟨v_m|ρ|v_m⟩   (momentum marginal along the first index)
    Σ_m W(m,n) = ⟨u_n|ρ|u_n⟩   (position marginal along the second index)

for every N, not just odd N.

Pinned constants (fixed by brute-force oracles at N = 3 and regression
tested; see the test suite):

    Δ_a Δ_b = v^{2Ω(a,b)} Δ_{a-b} F²          with Ω(a,b) = p·n - m·q
    Δ_pq F² = (1/N) Σ_{k,s} v^{2(ps-kq)} Δ_ks
    [Δ_a, Δ_b] = (2i/N) Σ_c sin((2π/N)·{a,b,c}) Δ_c
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import as_operator, is_hermitian
from .schwinger import Kinematics

# Prefactor c0 in [Δ_a, Δ_b] = c0 · Σ_c Λ_ab^c · Δ_c, odd N.  Pinned
# numerically; the value is 2i/N.
COMMUTATOR_PREFACTOR_NUMERATOR = 2j


def half_phase_exponents(n: int) -> np.ndarray:
    """Half-phase table h(r,s) as an (n, n) array of unimodular factors."""
    r = np.arange(n)[:, None]
    s = np.arange(n)[None, :]
    if n % 2 == 1:
        inv2 = (n + 1) // 2
        return np.exp(2j * np.pi * ((r * s * inv2) % n) / n)
    h = np.exp(1j * np.pi * r * s / n)
    flip = ((r + s) % 2 == 1) & (r + s > n)
    return np.where(flip, -h, h)


def parity_operator(n: int) -> np.ndarray:
    """Exact parity permutation e_k → e_{-k mod n}; equals F² up to rounding."""
    p = np.zeros((n, n), dtype=complex)
    p[(-np.arange(n)) % n, np.arange(n)] = 1.0
    return p


class WeylWignerBasis:
    """All N² phase-point operators for one dimension.

    `deltas[m, n]` is the operator at phase point (m, n), stored as an
    (N, N, N, N) complex array.
    """

    def __init__(self, n: int):
        if not isinstance(n, (int, np.integer)) or n < 1:
            raise ValueError(f"dimension must be a positive integer, got {n!r}")
        self.dim = int(n)
        kin = Kinematics(self.dim)
        up = np.stack([np.linalg.matrix_power(kin.U, r) for r in range(self.dim)])
        vp = np.stack([np.linalg.matrix_power(kin.V, s) for s in range(self.dim)])
        words = np.einsum("rab,sbc->rsac", up, vp)  # U^r V^s for all (r, s)
        k = np.arange(self.dim)
        labels = np.exp(-2j * np.pi * np.outer(k, k) / self.dim)  # v^{-k·m} table
        # phases[m, n, r, s] = h(r,s) · v^{-s·m} · v^{-r·n}
        phases = np.einsum("rs,ms,nr->mnrs", half_phase_exponents(self.dim), labels, labels)
        self.deltas = np.einsum("mnrs,rsac->mnac", phases, words) / self.dim

    def delta(self, m: int, n: int) -> np.ndarray:
        """Operator at phase point (m, n); indices are taken mod N."""
        return self.deltas[m % self.dim, n % self.dim].copy()

    def transform(self, op) -> np.ndarray:
        """Coefficient grid O^{mn} = tr(Δ_mn O); complex (N, N) array."""
        op = as_operator(op)
        if op.shape[0] != self.dim:
            raise ValueError(f"operator side {op.shape[0]} does not match basis dim {self.dim}")
        return np.einsum("mnab,ba->mn", self.deltas, op)

    def reconstruct(self, coeffs) -> np.ndarray:
        """Operator (1/N)·Σ_mn coeffs[m,n]·Δ_mn from a coefficient grid."""
        coeffs = np.asarray(coeffs, dtype=complex)
        if coeffs.shape != (self.dim, self.dim):
            raise ValueError(f"expected a {self.dim}x{self.dim} coefficient grid, got {coeffs.shape}")
        return np.einsum("mn,mnab->ab", coeffs, self.deltas) / self.dim

    def wigner(self, rho) -> "WignerMap":
        """Wigner map W(m,n) = (1/N)·tr(Δ_mn ρ) of a density operator."""
        rho = as_operator(rho)
        if rho.shape[0] != self.dim:
            raise ValueError(f"density side {rho.shape[0]} does not match basis dim {self.dim}")
        if not is_hermitian(rho):
            raise ValueError("wigner map requires a hermitian input")
        tr = complex(np.trace(rho))
        if abs(tr - 1.0) > 1e-10:
            raise ValueError(f"wigner map requires unit trace, got trace {tr:.3g}")
        grid = self.transform(rho) / self.dim
        return WignerMap(dim=self.dim, values=grid.real.copy())


@dataclass(frozen=True)
class WignerMap:
    """Real Wigner grid over Z_N x Z_N.

    First index: momentum-like coordinate m (row sums give the momentum
    marginal).  Second index: position-like coordinate n (column sums give
    the position marginal).
    """

    dim: int
    values: np.ndarray

    @property
    def total(self) -> float:
        return float(self.values.sum())

    @property
    def negativity(self) -> float:
        """Σ|W| - 1: zero exactly when the grid is pointwise nonnegative."""
        return float(np.abs(self.values).sum() - 1.0)

    @property
    def min_value(self) -> float:
        return float(self.values.min())


def ww_basis(n: int) -> WeylWignerBasis:
    return WeylWignerBasis(n)


def ww_transform(op, basis: WeylWignerBasis) -> np.ndarray:
    return basis.transform(op)


def ww_reconstruct(coeffs, basis: WeylWignerBasis) -> np.ndarray:
    return basis.reconstruct(coeffs)


def wigner_function(rho, basis: WeylWignerBasis) -> WignerMap:
    return basis.wigner(rho)


def wigner_map(rho) -> WignerMap:
    """Wigner map of a density operator without materializing the basis.

    Expands tr(Δ_mn ρ) through the double sum and contracts it as three
    N x N matrix products (O(N³) time, O(N²) memory), so large grids stay
    cheap.  Agrees with `WeylWignerBasis.wigner` to rounding.
    """
    rho = as_operator(rho)
    n = rho.shape[0]
    if not is_hermitian(rho):
        raise ValueError("wigner map requires a hermitian input")
    tr = complex(np.trace(rho))
    if abs(tr - 1.0) > 1e-10:
        raise ValueError(f"wigner map requires unit trace, got trace {tr:.3g}")
    idx = np.arange(n)
    # moments[r, s] = tr(U^r V^s ρ) = Σ_a v^{r·a} · ρ[(a+s) mod n, a]
    shifted = rho[(idx[:, None] + idx[None, :]) % n, idx[None, :]]  # [s, a]
    phases = np.exp(2j * np.pi * np.outer(idx, idx) / n)
    moments = phases @ shifted.T
    labels = phases.conj()  # v^{-k·j} table
    inner = labels @ (half_phase_exponents(n) * moments)  # [n, s]
    grid = labels @ inner.T / n**2
    return WignerMap(dim=n, values=grid.real.copy())


def symplectic_area(a, b) -> int:
    """Ω(a, b) = p·n - m·q for phase points a = (m, n), b = (p, q)."""
    m, n = a
    p, q = b
    return int(p) * int(n) - int(m) * int(q)


def phase_space_symbol(a, b, c) -> int:
    """{a, b, c} = 2[Ω(a,b) + Ω(b,c) + Ω(c,a)]; zero when two points coincide."""
    return 2 * (symplectic_area(a, b) + symplectic_area(b, c) + symplectic_area(c, a))


def delta_product(a, b, basis: WeylWignerBasis) -> np.ndarray:
    """Product Δ_a·Δ_b via the closed form v^{2Ω(a,b)}·Δ_{a-b}·F² (odd N).

    The exponent 2Ω(a,b) = 2(p·n - m·q) is the pinned convention; tests
    check the result against the direct matrix product.
    """
    n = basis.dim
    if n % 2 == 0:
        raise ValueError("the closed-form product rule is defined only for odd dimensions")
    m, nn = int(a[0]) % n, int(a[1]) % n
    p, q = int(b[0]) % n, int(b[1]) % n
    phase = np.exp(2j * np.pi * (2 * symplectic_area((m, nn), (p, q))) / n)
    return phase * basis.deltas[(m - p) % n, (nn - q) % n] @ parity_operator(n)


class StructureConstants:
    """u(N) structure data for odd N.

    [Δ_a, Δ_b] = c0 · Σ_c Λ_ab^c · Δ_c with Λ_ab^c = sin((2π/N)·{a,b,c})
    and c0 = 2i/N (pinned numerically, regression tested).
    """

    def __init__(self, n: int):
        if not isinstance(n, (int, np.integer)) or n < 1:
            raise ValueError(f"dimension must be a positive integer, got {n!r}")
        if n % 2 == 0:
            raise ValueError("structure constants are defined only for odd dimensions")
        self.dim = int(n)
        self.prefactor = COMMUTATOR_PREFACTOR_NUMERATOR / self.dim

    def value(self, a, b, c) -> float:
        """Λ_ab^c = sin((2π/N)·{a,b,c})."""
        return float(np.sin(2 * np.pi * phase_space_symbol(a, b, c) / self.dim))

    def table(self) -> np.ndarray:
        """Full tensor Λ[m,n,p,q,r,s] over (Z_N x Z_N)³."""
        n = self.dim
        k = np.arange(n)
        # Ω((m,n),(p,q)) = p·n - m·q, broadcast over all six indices.
        m_, n_, p_, q_, r_, s_ = np.ix_(k, k, k, k, k, k)
        sym = 2 * ((p_ * n_ - m_ * q_) + (r_ * q_ - p_ * s_) + (m_ * s_ - r_ * n_))
        return np.sin(2 * np.pi * sym / n)

    def commutator(self, a, b, basis: WeylWignerBasis) -> np.ndarray:
        """Reconstruct [Δ_a, Δ_b] from the structure constants."""
        if basis.dim != self.dim:
            raise ValueError("basis dimension does not match")
        n = self.dim
        k = np.arange(n)
        r_, s_ = np.meshgrid(k, k, indexing="ij")
        sym = 2 * (
            symplectic_area(a, b)
            + (r_ * int(b[1]) - int(b[0]) * s_)
            + (int(a[0]) * s_ - r_ * int(a[1]))
        )
        lam = np.sin(2 * np.pi * sym / n)
        return self.prefactor * np.einsum("rs,rsab->ab", lam, basis.deltas)


def structure_constants(n: int) -> StructureConstants:
    return StructureConstants(n)
