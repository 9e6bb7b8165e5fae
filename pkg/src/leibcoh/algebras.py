"""Algebra specifications, structural validation, and the built-in catalog.

An AlgebraSpec is a dimension plus the structure-constant tensor of a
bilinear bracket, [e_i, e_j] = sum_k c_ijk e_k, together with the kind it
claims to be (lie or leibniz).  Claims are validated, never assumed: the
same code path handles antisymmetric and genuinely one-sided brackets.
The convention throughout is the right Leibniz identity
[[x,y],z] = [[x,z],y] + [x,[y,z]], whose antisymmetric case is Jacobi.
"""

from __future__ import annotations

from dataclasses import dataclass

from .linalg import LinalgError, Matrix, Solver, Subspace, kernel
from .scalars import ONE, Scalar, scalar

__all__ = [
    "AlgebraSpec",
    "StructureReport",
    "validate",
    "catalog",
    "catalog_names",
    "change_basis",
]


class AlgebraSpec:
    """A finite-dimensional algebra given by structure constants.

    `table[i][j]` is the sparse vector of [e_i, e_j]; indices are
    0-based internally, while basis names carry the 1-based labels used
    in input files and reports.
    """

    __slots__ = ("dim", "name", "kind", "basis_names", "table")

    def __init__(self, dim, brackets, kind="lie", name="", basis_names=None):
        if kind not in ("lie", "leibniz"):
            raise ValueError(f"unknown algebra kind {kind!r}")
        self.dim = dim
        self.name = name
        self.kind = kind
        if basis_names is None:
            basis_names = [f"x{i+1}" for i in range(dim)]
        if len(basis_names) != dim or len(set(basis_names)) != dim:
            raise ValueError("basis names must be distinct, one per dimension")
        self.basis_names = list(basis_names)
        table = [[{} for _ in range(dim)] for _ in range(dim)]
        for (i, j), value in brackets.items():
            if not (0 <= i < dim and 0 <= j < dim):
                raise ValueError(f"bracket index ({i},{j}) out of range")
            cleaned = {}
            for k, coeff in value.items():
                if not 0 <= k < dim:
                    raise ValueError(f"bracket value index {k} out of range")
                coeff = scalar(coeff)
                if coeff:
                    cleaned[k] = coeff
            table[i][j] = cleaned
        self.table = table

    def bracket(self, i: int, j: int) -> dict:
        """[e_i, e_j] as a sparse vector (do not mutate)."""
        return self.table[i][j]

    def bracket_vec(self, x: dict, y: dict) -> dict:
        """Bilinear extension of the bracket to sparse vectors."""
        out = {}
        for i, a in x.items():
            if not a:
                continue
            row = self.table[i]
            for j, b in y.items():
                cell = row[j]
                if not cell or not b:
                    continue
                ab = a * b
                for k, c in cell.items():
                    w = out.get(k)
                    w = ab * c if w is None else w + ab * c
                    if w:
                        out[k] = w
                    else:
                        del out[k]
        return out

    def nonzero_brackets(self):
        """Iterate (i, j, value) over nonzero structure entries."""
        for i in range(self.dim):
            for j in range(self.dim):
                if self.table[i][j]:
                    yield i, j, self.table[i][j]

    def __repr__(self):
        label = self.name or "algebra"
        return f"AlgebraSpec({label}, dim {self.dim}, {self.kind})"


@dataclass
class StructureReport:
    is_antisymmetric: bool
    is_jacobi: bool
    is_leibniz: bool
    center_basis: Subspace
    derived_basis: Subspace
    p: int
    c: int

    @property
    def kind_verdict(self) -> str:
        if self.is_antisymmetric and self.is_jacobi:
            return "lie"
        if self.is_leibniz:
            return "leibniz"
        return "invalid"


def validate(spec: AlgebraSpec) -> StructureReport:
    """Check antisymmetry, Jacobi, and the right Leibniz identity, and
    compute the center and derived subalgebra.

    Failed identities are reported in the result, not raised.
    """
    d = spec.dim
    anti = True
    for i in range(d):
        for j in range(i, d):
            lhs = spec.table[i][j]
            rhs = spec.table[j][i]
            if any(lhs.get(k, Scalar(0)) != -v for k, v in rhs.items()) or any(
                k not in rhs and v for k, v in lhs.items()
            ):
                anti = False
                break
        if not anti:
            break

    jacobi = True
    leibniz = True
    for i in range(d):
        ei = {i: ONE}
        for j in range(d):
            ej = {j: ONE}
            bij = spec.table[i][j]
            for k in range(d):
                ek = {k: ONE}
                xy_z = spec.bracket_vec(bij, ek)
                xz_y = spec.bracket_vec(spec.table[i][k], ej)
                x_yz = spec.bracket_vec(ei, spec.table[j][k])
                # Right Leibniz: [[x,y],z] - [[x,z],y] - [x,[y,z]] = 0.
                defect = dict(xy_z)
                for vec in (xz_y, x_yz):
                    for m, v in vec.items():
                        w = defect.get(m)
                        w = -v if w is None else w - v
                        if w:
                            defect[m] = w
                        else:
                            del defect[m]
                if defect:
                    leibniz = False
                if jacobi:
                    yz_x = spec.bracket_vec(spec.table[j][k], ei)
                    zx_y = spec.bracket_vec(spec.table[k][i], ej)
                    cyc = dict(xy_z)
                    for vec in (yz_x, zx_y):
                        for m, v in vec.items():
                            w = cyc.get(m)
                            w = v if w is None else w + v
                            if w:
                                cyc[m] = w
                            else:
                                del cyc[m]
                    if cyc:
                        jacobi = False

    # Center: x with [x, e_j] = [e_j, x] = 0 for all j.  Columns of the
    # constraint matrix are indexed by basis vectors, rows by the pair
    # (side, j, output coordinate).
    cols = []
    for i in range(d):
        col = {}
        for j in range(d):
            for k, v in spec.table[i][j].items():
                col[j * d + k] = v
            for k, v in spec.table[j][i].items():
                col[d * d + j * d + k] = v
        cols.append(col)
    center = kernel(Matrix.from_columns(2 * d * d, cols))

    derived = Subspace(d)
    for _, _, value in spec.nonzero_brackets():
        derived.insert(value)

    return StructureReport(
        is_antisymmetric=anti,
        is_jacobi=jacobi,
        is_leibniz=leibniz,
        center_basis=center,
        derived_basis=derived,
        p=d - derived.dim,
        c=center.dim,
    )


def change_basis(spec: AlgebraSpec, t: Matrix, name="", basis_names=None) -> AlgebraSpec:
    """Transport structure constants to the basis y_j = sum_i t[i][j] e_i.

    Columns of t are the new basis vectors in old coordinates; t must be
    invertible.
    """
    d = spec.dim
    if t.nrows != d or t.ncols != d:
        raise LinalgError("basis-change matrix has wrong shape")
    solver = Solver(t)
    inv_cols = []
    for j in range(d):
        col = solver.solve({j: ONE})
        if col is None:
            raise LinalgError("basis-change matrix is singular")
        inv_cols.append(col)
    if solver.rank < d:
        raise LinalgError("basis-change matrix is singular")

    def to_new(vec):
        out = {}
        for i, v in vec.items():
            for k, w in inv_cols[i].items():
                s = out.get(k)
                s = v * w if s is None else s + v * w
                if s:
                    out[k] = s
                else:
                    del out[k]
        return out

    cols = t.columns()
    brackets = {}
    for a in range(d):
        for b in range(d):
            val = to_new(spec.bracket_vec(cols[a], cols[b]))
            if val:
                brackets[(a, b)] = val
    return AlgebraSpec(d, brackets, kind=spec.kind, name=name or spec.name,
                       basis_names=basis_names)


def _anticommutative(pairs):
    """Expand one-sided relations [i,j] = value with [j,i] = -value."""
    brackets = {}
    for i, j, value in pairs:
        brackets[(i, j)] = dict(value)
        brackets[(j, i)] = {k: -scalar(v) for k, v in value.items()}
    return brackets


def _abelian(n: int) -> AlgebraSpec:
    if n < 0:
        raise ValueError("abelian dimension must be nonnegative")
    return AlgebraSpec(n, {}, kind="lie", name=f"abelian({n})")


def _heisenberg(n: int) -> AlgebraSpec:
    """(2N+1)-dimensional two-step nilpotent algebra [x_i, x_{N+i}] = x_{2N+1}."""
    if n < 1:
        raise ValueError("heisenberg parameter must be at least 1")
    d = 2 * n + 1
    pairs = [(i, n + i, {d - 1: ONE}) for i in range(n)]
    return AlgebraSpec(d, _anticommutative(pairs), kind="lie", name=f"heisenberg({n})")


def _diamond_x() -> AlgebraSpec:
    pairs = [
        (0, 1, {2: ONE}),
        (0, 2, {1: -ONE}),
        (1, 2, {3: ONE}),
    ]
    return AlgebraSpec(4, _anticommutative(pairs), kind="lie", name="diamond_x")


def _diamond_e() -> AlgebraSpec:
    brackets = {
        (1, 2): {0: ONE},
        (2, 1): {0: -ONE},
        (1, 3): {1: ONE},
        (3, 1): {1: -ONE},
        (2, 3): {1: ONE, 2: -ONE},
        (3, 2): {2: ONE, 1: -ONE},
    }
    return AlgebraSpec(4, brackets, kind="lie", name="diamond_e",
                       basis_names=["e1", "e2", "e3", "e4"])


def _g54() -> AlgebraSpec:
    pairs = [
        (0, 1, {2: ONE}),
        (0, 2, {3: ONE}),
        (1, 2, {4: ONE}),
    ]
    return AlgebraSpec(5, _anticommutative(pairs), kind="lie", name="g54")


def _sl2_brackets(offset=0):
    # x1, x2 nilpotent raising/lowering, x3 the semisimple element:
    # [x1,x2] = x3, [x3,x1] = 2 x1, [x3,x2] = -2 x2.
    two = Scalar(2)
    return [
        (offset + 0, offset + 1, {offset + 2: ONE}),
        (offset + 2, offset + 0, {offset + 0: two}),
        (offset + 2, offset + 1, {offset + 1: -two}),
    ]


def _sl2() -> AlgebraSpec:
    return AlgebraSpec(3, _anticommutative(_sl2_brackets()), kind="lie", name="sl2")


def _sl2_plus_abelian(k: int) -> AlgebraSpec:
    if k < 0:
        raise ValueError("abelian summand dimension must be nonnegative")
    return AlgebraSpec(
        3 + k,
        _anticommutative(_sl2_brackets()),
        kind="lie",
        name=f"sl2_plus_abelian({k})",
    )


def _gl(n: int) -> AlgebraSpec:
    """gl(n) from matrix-unit commutators.

    Basis order: the off-diagonal units E_ij (row-major), the traceless
    differences E_ii - E_(i+1)(i+1), and the identity matrix last.
    """
    if n < 1:
        raise ValueError("gl parameter must be at least 1")
    units = [(i, j) for i in range(n) for j in range(n) if i != j]

    def unit_matrix(i, j):
        return {(i, j): ONE}

    basis = [unit_matrix(i, j) for (i, j) in units]
    for i in range(n - 1):
        basis.append({(i, i): ONE, (i + 1, i + 1): -ONE})
    basis.append({(i, i): ONE for i in range(n)})
    d = n * n

    def mat_mul(a, b):
        out = {}
        for (i, k), u in a.items():
            for (k2, j), v in b.items():
                if k != k2:
                    continue
                w = out.get((i, j))
                w = u * v if w is None else w + u * v
                if w:
                    out[(i, j)] = w
                else:
                    del out[(i, j)]
        return out

    def to_coords(m):
        """Expand a matrix over the chosen basis."""
        m = dict(m)
        out = {}
        for idx, (i, j) in enumerate(units):
            v = m.pop((i, j), None)
            if v:
                out[idx] = v
        # Remaining part is diagonal: trace/n on the identity, the rest
        # on the traceless differences via partial sums.
        diag = [m.get((i, i), Scalar(0)) for i in range(n)]
        trace = diag[0]
        for v in diag[1:]:
            trace = trace + v
        tpart = trace / n
        if tpart:
            out[d - 1] = tpart
        run = Scalar(0)
        for i in range(n - 1):
            run = run + (diag[i] - tpart)
            if run:
                out[len(units) + i] = run
        return out

    brackets = {}
    for a in range(d):
        for b in range(d):
            comm = mat_mul(basis[a], basis[b])
            for (i, j), v in mat_mul(basis[b], basis[a]).items():
                w = comm.get((i, j))
                w = -v if w is None else w - v
                if w:
                    comm[(i, j)] = w
                else:
                    del comm[(i, j)]
            val = to_coords(comm)
            if val:
                brackets[(a, b)] = val
    return AlgebraSpec(d, brackets, kind="lie", name=f"gl({n})")


_CATALOG = {
    "abelian": (_abelian, 1),
    "heisenberg": (_heisenberg, 1),
    "diamond_x": (_diamond_x, 0),
    "diamond_e": (_diamond_e, 0),
    "g54": (_g54, 0),
    "gl": (_gl, 1),
    "sl2": (_sl2, 0),
    "sl2_plus_abelian": (_sl2_plus_abelian, 1),
}


def catalog_names():
    return sorted(_CATALOG)


def catalog(name: str, *params: int) -> AlgebraSpec:
    """Construct a built-in algebra by name.

    Parameterized entries (abelian, heisenberg, gl, sl2_plus_abelian)
    take one integer.
    """
    if name not in _CATALOG:
        options = ", ".join(catalog_names())
        raise KeyError(f"unknown catalog algebra {name!r}; options: {options}")
    builder, arity = _CATALOG[name]
    if len(params) != arity:
        raise ValueError(
            f"catalog algebra {name!r} takes {arity} parameter(s), got {len(params)}"
        )
    return builder(*params)
