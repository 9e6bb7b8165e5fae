"""Invariant symmetric forms and the degree-2 decomposition.

An invariant symmetric bilinear form B satisfies B([z,x],y) = -B(x,[z,y]).
Composing with the bracket gives the alternating 3-form
(x,y,z) -> B([x,y],z), a linear map from invariant forms into 3-forms
whose kernel and image control the symmetric and coupled blocks of
degree-2 Leibniz cohomology: for a Lie algebra the degree-2 classes
split into the antisymmetric classes, center (x) kernel forms, and a
coupled block of classes whose symmetric part maps to an exact 3-form.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebras import AlgebraSpec, validate
from .cochains import (
    CochainScheme,
    CohomologySpace,
    leibniz_cohomology,
    lie_cohomology,
    lie_delta_matrix,
    sym2_basis,
    sym2_inclusion,
    symmetric_cocycle_space,
    wedge_basis,
    wedge_inclusion,
)
from .linalg import Matrix, Solver, Subspace, image, kernel, quotient_reps
from .scalars import Scalar

__all__ = [
    "KoszulData",
    "Degree2Decomposition",
    "UncouplingReport",
    "invariant_forms",
    "koszul_matrix",
    "koszul_data",
    "decompose_degree2",
    "uncoupling_report",
]


def invariant_forms(spec: AlgebraSpec) -> Subspace:
    """Invariant symmetric bilinear forms, in weakly-increasing-pair
    coordinates."""
    d = spec.dim
    pairs = sym2_basis(d)
    pos = {p: i for i, p in enumerate(pairs)}
    rows = []
    for z in range(d):
        for x in range(d):
            for y in range(x, d):
                row = {}
                for m, c in spec.table[z][x].items():
                    key = pos[(m, y) if m <= y else (y, m)]
                    w = row.get(key)
                    w = c if w is None else w + c
                    if w:
                        row[key] = w
                    elif key in row:
                        del row[key]
                for m, c in spec.table[z][y].items():
                    key = pos[(x, m) if x <= m else (m, x)]
                    w = row.get(key)
                    w = c if w is None else w + c
                    if w:
                        row[key] = w
                    elif key in row:
                        del row[key]
                if row:
                    rows.append(row)
    m = Matrix.zero(len(rows), len(pairs))
    m.rows = rows
    return kernel(m)


def koszul_matrix(spec: AlgebraSpec) -> Matrix:
    """Matrix of B -> B([.,.],.) from pair coordinates to increasing-triple
    coordinates.  Rows are meaningful on invariant forms, where the
    resulting 3-form is alternating.
    """
    d = spec.dim
    pairs = sym2_basis(d)
    pos = {p: i for i, p in enumerate(pairs)}
    combs = wedge_basis(d, 3)
    rows = []
    for a, b, c in combs:
        row = {}
        for m, coeff in spec.table[a][b].items():
            key = pos[(m, c) if m <= c else (c, m)]
            w = row.get(key)
            w = coeff if w is None else w + coeff
            if w:
                row[key] = w
            elif key in row:
                del row[key]
        rows.append(row)
    m = Matrix.zero(len(combs), len(pairs))
    m.rows = rows
    return m


@dataclass
class KoszulData:
    """Invariant forms with the kernel and image of the cubic map."""

    forms: Subspace
    matrix: Matrix
    kernel: Subspace
    image: Subspace
    center: Subspace
    p: int

    @property
    def is_null(self) -> bool:
        return self.image.dim == 0


def koszul_data(spec: AlgebraSpec, report=None) -> KoszulData:
    report = report if report is not None else validate(spec)
    forms = invariant_forms(spec)
    kmat = koszul_matrix(spec)
    basis = forms.basis()
    images = [kmat.matvec(b) for b in basis]
    ambient3 = len(wedge_basis(spec.dim, 3))
    im = Subspace(ambient3, images)
    combos = kernel(Matrix.from_columns(ambient3, images))
    npairs = len(sym2_basis(spec.dim))
    kern_vecs = []
    for lam in combos.basis():
        vec = {}
        for i, coeff in lam.items():
            for key, v in basis[i].items():
                w = vec.get(key)
                w = coeff * v if w is None else w + coeff * v
                if w:
                    vec[key] = w
                else:
                    del vec[key]
        kern_vecs.append(vec)
    kern = Subspace(npairs, kern_vecs)
    return KoszulData(
        forms=forms,
        matrix=kmat,
        kernel=kern,
        image=im,
        center=report.center_basis,
        p=report.p,
    )


def _tensor_head(z, data: dict, base: int) -> dict:
    """Tensor a sparse vector z with a trivial-coefficient block; z=None
    passes the block through unchanged."""
    if z is None:
        return dict(data)
    out = {}
    for k, zv in z.items():
        for t, v in data.items():
            out[k * base + t] = zv * v
    return out


@dataclass
class Degree2Decomposition:
    """Degree-2 classes split into the three blocks.

    Representatives live in tensor coordinates: h2_reps are the
    antisymmetric classes, symmetric_basis spans the symmetric-cocycle
    block, coupled_reps are cocycles made of a kernel-complement
    symmetric part plus the antisymmetric corrector that closes it.
    """

    coefficients: str
    scheme: CochainScheme
    full: CohomologySpace
    lie: CohomologySpace
    koszul: KoszulData
    h2_reps: list
    symmetric_basis: list
    coupled_reps: list

    @property
    def hl2_dim(self):
        return self.full.h_dim

    @property
    def h2_dim(self):
        return len(self.h2_reps)

    @property
    def symmetric_dim(self):
        return len(self.symmetric_basis)

    @property
    def coupled_dim(self):
        return len(self.coupled_reps)

    def all_reps(self):
        return self.h2_reps + self.symmetric_basis + self.coupled_reps


def decompose_degree2(spec: AlgebraSpec, coefficients="adjoint",
                      report=None) -> Degree2Decomposition:
    """Split degree-2 Leibniz cohomology of a Lie algebra into the
    antisymmetric, central-symmetric, and coupled blocks."""
    report = report if report is not None else validate(spec)
    if not (report.is_antisymmetric and report.is_jacobi):
        raise ValueError("the degree-2 decomposition requires a Lie algebra")
    scheme = CochainScheme(spec, coefficients)
    adjoint = scheme.adjoint
    triv = CochainScheme(spec, "trivial") if adjoint else scheme
    kos = koszul_data(spec, report)
    full = leibniz_cohomology(scheme, 2)
    lie = lie_cohomology(scheme, 2)

    sym_incl = sym2_inclusion(triv)
    heads = kos.center.basis() if adjoint else [None]
    tensor_base = spec.dim ** 2

    kernel_blocks = [sym_incl.matvec(q) for q in kos.kernel.basis()]
    symmetric_basis = [
        _tensor_head(z, blk, tensor_base) for z in heads for blk in kernel_blocks
    ]

    # Coupled block: symmetric parts from a complement of the kernel
    # whose image 3-forms are exact, each closed up by an antisymmetric
    # corrector solved on the antisymmetric complex.
    w_reps = quotient_reps(kos.forms, kos.kernel)
    ncombs3 = len(wedge_basis(spec.dim, 3))
    wedge_base3 = ncombs3
    images3 = [kos.matrix.matvec(w) for w in w_reps]
    g_cols = [
        _tensor_head(z, iw, wedge_base3) for z in heads for iw in images3
    ]
    s_cols = [
        _tensor_head(z, sym_incl.matvec(w), tensor_base)
        for z in heads
        for w in w_reps
    ]
    lie_d2 = lie_delta_matrix(scheme, 2)
    b3_wedge = image(lie_d2)
    coupled_reps = []
    if g_cols and b3_wedge.ambient_dim >= 0:
        stacked = Matrix.from_columns(
            b3_wedge.ambient_dim, g_cols + b3_wedge.basis()
        )
        ncand = len(g_cols)
        coeff_vecs = []
        for vec in kernel(stacked).basis():
            head = {i: v for i, v in vec.items() if i < ncand}
            if head:
                coeff_vecs.append(head)
        coeff_space = Subspace(ncand, coeff_vecs)
        solver = Solver(lie_d2)
        incl2 = wedge_inclusion(scheme, 2)
        for u in coeff_space.basis():
            s_part = {}
            v_wedge = {}
            for i, coeff in u.items():
                for key, v in s_cols[i].items():
                    w = s_part.get(key)
                    w = coeff * v if w is None else w + coeff * v
                    if w:
                        s_part[key] = w
                    else:
                        del s_part[key]
                for key, v in g_cols[i].items():
                    w = v_wedge.get(key)
                    w = coeff * v if w is None else w + coeff * v
                    if w:
                        v_wedge[key] = w
                    else:
                        del v_wedge[key]
            omega = solver.solve(v_wedge)
            if omega is None:
                raise AssertionError("exactness certificate failed to solve")
            rep = dict(s_part)
            for key, v in incl2.matvec(omega).items():
                w = rep.get(key)
                w = v if w is None else w + v
                if w:
                    rep[key] = w
                else:
                    del rep[key]
            if not scheme.is_cocycle(2, rep):
                raise AssertionError("coupled representative is not a cocycle")
            coupled_reps.append(rep)

    return Degree2Decomposition(
        coefficients=coefficients,
        scheme=scheme,
        full=full,
        lie=lie,
        koszul=kos,
        h2_reps=[dict(r) for r in lie.reps],
        symmetric_basis=symmetric_basis,
        coupled_reps=coupled_reps,
    )


@dataclass
class UncouplingReport:
    center_dim: int
    adjoint_coupled_dim: int
    trivial_coupled_dim: int

    @property
    def adjoint_uncoupled(self) -> bool:
        return self.adjoint_coupled_dim == 0

    @property
    def trivial_uncoupled(self) -> bool:
        return self.trivial_coupled_dim == 0


def uncoupling_report(spec: AlgebraSpec, report=None) -> UncouplingReport:
    report = report if report is not None else validate(spec)
    adj = decompose_degree2(spec, "adjoint", report)
    triv = decompose_degree2(spec, "trivial", report)
    return UncouplingReport(
        center_dim=report.c,
        adjoint_coupled_dim=adj.coupled_dim,
        trivial_coupled_dim=triv.coupled_dim,
    )
