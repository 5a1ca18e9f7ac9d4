"""Constructive isomorphism of one component Z_{p^r}G w onto a matrix ring.

For Shoda data (H, K, class) with centralizer C and transversal T, the
component factors in two stages:

  1. block map onto [G:C] x [G:C] matrices over Z_{p^r}C*omega, block (u,v)
     of a being  omega t_u a t_v^{-1} omega;
  2. each block, written in the basis {1, gamma, ..., gamma^{l-1}} of the
     crossed product over R = Z_{p^r}H*omega (gamma twist-trivialized via a
     norm equation so gamma^l = omega), is sent through psi to an l x l
     matrix over the fixed subring S in the normal basis of R over S.

R is identified with an abstract Galois ring GR(p^r, o) through the power
basis of eta = (generator of H/K) * omega, whose minimal polynomial is
basic irreducible of degree o.  The Galois generator attached to gamma is
the conjugation r -> x r x^{-1}, matched to the appropriate Frobenius power
on the abstract side.
"""

from __future__ import annotations

from .galois import (
    GaloisRing,
    GrElem,
    frobenius_iter,
    normal_element,
    solve_matrix_unit_coefficients,
    solve_norm_equation,
)
from .groups import is_cyclic, quotient
from .groupring import GroupRing, GroupRingElem
from .linalg import ElemOps, ZModOps, invert, solve
from .modring import Poly
from .shoda import ShodaData


def _min_lift(proj: dict, target: int) -> int:
    return min(x for x, c in proj.items() if c == target)


class ComponentStructure:
    """Bridge between Z_{p^r}G w and M_{[G:H]}(S) for one ShodaData."""

    def __init__(self, data: ShodaData):
        self.data = data
        g = data.group
        base = data.base
        self.ring_g = GroupRing(g, base)
        self.omega_g = GroupRingElem(self.ring_g, data.omega.coeffs)
        self.w = GroupRingElem(self.ring_g, data.w_full.coeffs)
        self.block_count = g.n // data.centralizer.order
        self.gal_order = data.centralizer.order // data.h.order
        self.size = data.matrix_size  # block_count * gal_order

        # R = Z_{p^r} H omega as GR(p^r, o) on the power basis of eta
        qh, projh = quotient(data.h, data.k)
        _, gen = is_cyclic(qh)
        self._h_pos = {h: i for i, h in enumerate(data.h.elems)}
        eta = self.ring_g.basis(_min_lift(projh, gen)) * self.omega_g
        self.eta_pows = [self.omega_g]
        for _ in range(data.o):
            self.eta_pows.append(self.eta_pows[-1] * eta)
        self._zops = ZModOps(base)
        self._coord_matrix = [
            [self.eta_pows[i].coeffs.get(h, 0) for i in range(data.o)]
            for h in data.h.elems
        ]
        mp = solve(
            self._coord_matrix, self._h_support_vector(self.eta_pows[data.o]), self._zops
        )
        minpoly = Poly([(-c) % base.modulus for c in mp] + [1], base)
        self.r_abs = GaloisRing(base, data.o, minpoly)
        self.sub = self.r_abs.subring(data.ring_degree)
        self.s_ring = self.sub.ring

        # crossed-product basis data
        self._build_crossed()
        self._build_psi_solver()
        self._build_alpha()

    # -- R_conc <-> R_abs -----------------------------------------------

    def _h_support_vector(self, y: GroupRingElem) -> list[int]:
        if any(t not in self._h_pos for t in y.coeffs):
            raise ValueError("element not supported on H")
        vec = [0] * len(self._h_pos)
        for t, c in y.coeffs.items():
            vec[self._h_pos[t]] = c
        return vec

    def to_abs(self, y: GroupRingElem) -> GrElem:
        coords = solve(self._coord_matrix, self._h_support_vector(y), self._zops)
        return self.r_abs.elem(coords)

    def to_conc(self, z: GrElem) -> GroupRingElem:
        out = self.ring_g.zero
        for i, c in enumerate(z.coeffs):
            if c:
                out = out + self.eta_pows[i] * c
        return out

    def s_to_conc(self, s: GrElem) -> GroupRingElem:
        """S-element (over s_ring) into the concrete group ring; lives in
        the (0,0) block (central there, but annihilated by other blocks)."""
        return self.to_conc(self.sub.embed(s))

    def scalar_in_component(self, s: GrElem) -> GroupRingElem:
        """The central element of Z_{p^r}G w acting as the scalar s: the
        block-diagonal sum of transversal conjugates of the S-element."""
        s_conc = self.s_to_conc(s)
        out = self.ring_g.zero
        for t in self.data.transversal.reps:
            out = out + s_conc.conjugate(t)
        return out

    # -- crossed product ---------------------------------------------------

    def _build_crossed(self):
        data = self.data
        g = data.group
        l = self.gal_order
        if l == 1:
            self.x_c = 0
            self.gamma = self.omega_g
            self.gamma_pows = [self.omega_g]
            self.tau_exp = 0
            self._coset_of = {h: 0 for h in data.centralizer.elems}
            self._coset_shift = [0]
            self.u_inv_abs = [self.r_abs.one]
            return
        qc, projc = quotient(data.centralizer, data.h)
        cyc, gen = is_cyclic(qc)
        assert cyc, "C/H must be cyclic"
        x_c = _min_lift(projc, gen)
        self.x_c = x_c
        # coset bookkeeping: every c in C is h * x_c^j
        xpow = [0]
        for _ in range(1, l):
            xpow.append(g.table[xpow[-1]][x_c])
        self._coset_shift = xpow
        self._coset_of = {}
        for j, xp in enumerate(xpow):
            for h in data.h.elems:
                self._coset_of[g.table[h][xp]] = j

        # Galois generator attached to gamma: tau(r) = x_c r x_c^{-1}
        zeta = self.r_abs.teichmuller_generator()
        tz = self.to_abs(self.to_conc(zeta).conjugate(g.inverse[x_c]))
        self.tau_exp = None
        for i in range(l):
            if frobenius_iter(zeta, self.sub, i) == tz:
                self.tau_exp = i
                break
        assert self.tau_exp is not None, "conjugation is not Galois"

        # twist-trivialize: gamma = a * (x_c omega) with N(a) = (x_c^l omega)^{-1}
        gamma0 = self.ring_g.basis(x_c) * self.omega_g
        s_conc = self.ring_g.basis(xpow[-1]) * self.ring_g.basis(x_c) * self.omega_g
        s_abs = self.to_abs(s_conc)  # = Phi(gamma0^l), lies in S
        a_abs = solve_norm_equation(self.r_abs, self.sub, s_abs.inverse())
        self.gamma = self.to_conc(a_abs) * gamma0
        self.gamma_pows = [self.omega_g]
        for _ in range(1, l):
            self.gamma_pows.append(self.gamma_pows[-1] * self.gamma)
        assert self.gamma_pows[-1] * self.gamma == self.omega_g, "gamma^l != omega"
        # u_j with gamma^j = u_j * x_c^j (as elements of the ideal)
        self.u_inv_abs = []
        for j in range(l):
            u_conc = self.gamma_pows[j] * self.ring_g.basis(g.inverse[xpow[j]])
            self.u_inv_abs.append(self.to_abs(u_conc).inverse())

    def tau(self, z: GrElem, times: int = 1) -> GrElem:
        return frobenius_iter(z, self.sub, self.tau_exp * times)

    def crossed_coords(self, y: GroupRingElem) -> list[GrElem]:
        """Coordinates x_j (in R_abs) with y = sum x_j gamma^j, for y in
        Z_{p^r}C omega."""
        g = self.data.group
        l = self.gal_order
        pieces: list[dict] = [{} for _ in range(l)]
        for t, c in y.coeffs.items():
            j = self._coset_of[t]
            h = g.table[t][g.inverse[self._coset_shift[j]]]
            pieces[j][h] = c
        out = []
        for j in range(l):
            zj = GroupRingElem(self.ring_g, pieces[j]) * self.omega_g
            out.append(self.to_abs(zj) * self.u_inv_abs[j])
        return out

    def from_crossed_coords(self, coords) -> GroupRingElem:
        out = self.ring_g.zero
        for xj, gp in zip(coords, self.gamma_pows):
            out = out + self.to_conc(xj) * gp
        return out

    # -- psi ---------------------------------------------------------------

    def _build_psi_solver(self):
        l = self.gal_order
        d = self.data.ring_degree
        if l == 1:
            self.beta = self.r_abs.one
        else:
            self.beta = normal_element(self.r_abs, self.sub)
        self.basis_b = [self.tau(self.beta, i) for i in range(l)]
        # columns indexed (i, j): coordinates of zeta_sub^j * B_i in R_abs
        cols = []
        for i in range(l):
            for j in range(d):
                cols.append(list((self.sub.zeta_sub**j * self.basis_b[i]).coeffs))
        self._psi_matrix = [[cols[c][t] for c in range(l * d)] for t in range(self.data.o)]

    def _b_coords(self, v: GrElem) -> list[GrElem]:
        """Coordinates of v in the normal basis B over S (as s_ring elems)."""
        l, d = self.gal_order, self.data.ring_degree
        flat = solve(self._psi_matrix, list(v.coeffs), self._zops)
        return [self.s_ring.elem(flat[i * d : (i + 1) * d]) for i in range(l)]

    def psi(self, coords) -> list[list[GrElem]]:
        """Matrix over S of sum_i l_{x_i} tau^i in the normal basis."""
        l = self.gal_order
        mat = [[None] * l for _ in range(l)]
        for col in range(l):
            img = self.r_abs.zero
            for i, xi in enumerate(coords):
                img = img + xi * self.basis_b[(i + col) % l]
            for row, s in enumerate(self._b_coords(img)):
                mat[row][col] = s
        return mat

    def psi_inverse(self, mat) -> list[GroupRingElem]:
        """Crossed coordinates realizing a given matrix over S; returns the
        concrete element of Z_{p^r}C omega."""
        l = self.gal_order
        targets = []
        for col in range(l):
            img = self.r_abs.zero
            for row in range(l):
                img = img + self.sub.embed(mat[row][col]) * self.basis_b[row]
            targets.append(img)
        coeff = [[self.basis_b[(i + col) % l] for i in range(l)] for col in range(l)]
        ops = ElemOps(self.r_abs.zero, self.r_abs.one)
        coords = solve(coeff, targets, ops)
        return self.from_crossed_coords(coords)

    # -- the invertible alpha element ----------------------------------------

    def _build_alpha(self):
        l = self.gal_order
        if l == 1:
            self.alphas = [self.r_abs.one]
            self.alpha_conc = self.omega_g
            self.alpha_inv_conc = self.omega_g
            return
        self.alphas = solve_matrix_unit_coefficients(
            self.r_abs, self.sub, self.beta, self.tau_exp
        )
        self.alpha_conc = self.from_crossed_coords(self.alphas)
        bordered = self.psi(self.alphas)
        s_ops = ElemOps(self.s_ring.zero, self.s_ring.one)
        self.alpha_inv_conc = self.psi_inverse(invert(bordered, s_ops))
        assert self.alpha_conc * self.alpha_inv_conc == self.omega_g
        assert self.alpha_inv_conc * self.alpha_conc == self.omega_g

    def expected_bordered(self) -> list[list[GrElem]]:
        """First row and column all 1, then -1 down the diagonal."""
        l = self.gal_order
        one, zero = self.s_ring.one, self.s_ring.zero
        mat = [[zero] * l for _ in range(l)]
        for i in range(l):
            mat[0][i] = one
            mat[i][0] = one
            if i > 0:
                mat[i][i] = -one
        return mat

    # -- block map and full embedding ---------------------------------------

    def block(self, a: GroupRingElem, u: int, v: int) -> GroupRingElem:
        g = self.data.group
        t = self.data.transversal.reps
        return (
            self.omega_g
            * self.ring_g.basis(t[u])
            * a
            * self.ring_g.basis(g.inverse[t[v]])
            * self.omega_g
        )

    def embed(self, a: GroupRingElem) -> list[list[GrElem]]:
        """Matrix over S of a*w under the component isomorphism."""
        if a.ring != self.ring_g:
            raise ValueError("element not in Z_{p^r}G")
        aw = a * self.w
        l = self.gal_order
        n = self.size
        out = [[self.s_ring.zero] * n for _ in range(n)]
        for u in range(self.block_count):
            for v in range(self.block_count):
                piece = self.psi(self.crossed_coords(self.block(aw, u, v)))
                for i in range(l):
                    for j in range(l):
                        out[u * l + i][v * l + j] = piece[i][j]
        return out
