"""Exact linear algebra over the Gaussian rationals.

Vectors are sparse maps {coordinate: Scalar} with no zero values stored.
Matrices are logically dense rows x cols grids but keep their rows sparse,
since the coboundary operators that dominate the workload are very sparse
and dense elimination on a few thousand rows of Python objects would be
hopeless.  All ranks, kernels, and canonical bases are exact.

The canonical form used everywhere is the reduced row echelon form: a
Subspace is identified with the unique RREF basis of its span, so two
subspaces are equal exactly when their bases are identical.  Every
"choose a representative" step higher up is made deterministic by this.
"""

from __future__ import annotations

from .scalars import ONE, Scalar

__all__ = [
    "LinalgError",
    "Matrix",
    "Echelon",
    "Subspace",
    "Solver",
    "rref",
    "kernel",
    "image",
    "intersect",
    "subspace_sum",
    "quotient_dim",
    "quotient_reps",
    "solve_particular",
]


class LinalgError(ValueError):
    pass


def vec_clean(vec) -> dict:
    """Drop explicit zeros; coerce values to Scalar."""
    out = {}
    for c, v in vec.items():
        if not isinstance(v, Scalar):
            v = Scalar(v)
        if v:
            out[c] = v
    return out


def vec_add_scaled(acc: dict, vec: dict, factor: Scalar) -> None:
    """In place: acc += factor * vec."""
    if not factor:
        return
    for c, v in vec.items():
        w = acc.get(c)
        w = factor * v if w is None else w + factor * v
        if w:
            acc[c] = w
        else:
            del acc[c]


def vec_scaled(vec: dict, factor: Scalar) -> dict:
    if not factor:
        return {}
    return {c: factor * v for c, v in vec.items()}


def vec_dot(a: dict, b: dict):
    """Sparse dot product; returns a Scalar (zero Scalar when disjoint)."""
    if len(b) < len(a):
        a, b = b, a
    total = None
    for c, v in a.items():
        w = b.get(c)
        if w is not None:
            total = v * w if total is None else total + v * w
    return total if total is not None else Scalar(0)


class Matrix:
    """An exact rows x cols matrix with sparse row storage.

    Rows and columns are 0-indexed.  The matrix acts on column vectors:
    (m @ v)[i] = sum_j m[i][j] v[j], with v a sparse map over columns.
    """

    __slots__ = ("nrows", "ncols", "rows")

    def __init__(self, nrows: int, ncols: int, rows=None):
        if nrows < 0 or ncols < 0:
            raise LinalgError("negative matrix dimension")
        self.nrows = nrows
        self.ncols = ncols
        if rows is None:
            self.rows = [{} for _ in range(nrows)]
        else:
            if len(rows) != nrows:
                raise LinalgError("row count mismatch")
            self.rows = [vec_clean(r) for r in rows]

    @classmethod
    def zero(cls, nrows: int, ncols: int) -> "Matrix":
        return cls(nrows, ncols)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, [{i: ONE} for i in range(n)])

    @classmethod
    def from_dense(cls, grid) -> "Matrix":
        nrows = len(grid)
        ncols = len(grid[0]) if nrows else 0
        rows = []
        for r in grid:
            if len(r) != ncols:
                raise LinalgError("ragged dense grid")
            rows.append({j: v for j, v in enumerate(r)})
        return cls(nrows, ncols, rows)

    @classmethod
    def from_columns(cls, nrows: int, columns) -> "Matrix":
        """Build from a list of sparse columns (maps over row indices)."""
        rows = [{} for _ in range(nrows)]
        for j, col in enumerate(columns):
            for i, v in col.items():
                if not isinstance(v, Scalar):
                    v = Scalar(v)
                if v:
                    if not 0 <= i < nrows:
                        raise LinalgError(f"row index {i} out of range")
                    rows[i][j] = v
        m = cls.__new__(cls)
        m.nrows = nrows
        m.ncols = len(columns)
        m.rows = rows
        return m

    def entry(self, i: int, j: int) -> Scalar:
        return self.rows[i].get(j, Scalar(0))

    def column(self, j: int) -> dict:
        return {i: r[j] for i, r in enumerate(self.rows) if j in r}

    def columns(self):
        cols = [{} for _ in range(self.ncols)]
        for i, r in enumerate(self.rows):
            for j, v in r.items():
                cols[j][i] = v
        return cols

    def transpose(self) -> "Matrix":
        return Matrix(self.ncols, self.nrows, self.columns())

    def matvec(self, vec: dict) -> dict:
        """self @ vec for a sparse column vector."""
        out = {}
        for i, r in enumerate(self.rows):
            if not r:
                continue
            val = vec_dot(r, vec)
            if val:
                out[i] = val
        return out

    def to_dense(self):
        zero = Scalar(0)
        return [[r.get(j, zero) for j in range(self.ncols)] for r in self.rows]

    def is_zero(self) -> bool:
        return all(not r for r in self.rows)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self.nrows == other.nrows
            and self.ncols == other.ncols
            and self.rows == other.rows
        )

    def __repr__(self):
        return f"Matrix({self.nrows}x{self.ncols})"


def _matvec_columns(columns, vec: dict) -> dict:
    out = {}
    for j, x in vec.items():
        col = columns[j]
        for i, v in col.items():
            w = out.get(i)
            w = x * v if w is None else w + x * v
            if w:
                out[i] = w
            else:
                del out[i]
    return out


class Echelon:
    """Incremental reduced row echelon accumulator.

    Rows live in a space of `ncols` coordinates.  The invariant after
    every insert: stored rows have distinct pivot columns, pivot entries
    are 1, and every stored row is zero at every other stored pivot.
    `pivot_limit` restricts which columns may serve as pivots; rows that
    reduce to zero on the pivotable range are collected in `remainders`
    (used by Solver for consistency checks).
    """

    __slots__ = ("ncols", "pivot_limit", "pivot_rows", "remainders")

    def __init__(self, ncols: int, pivot_limit: int | None = None):
        self.ncols = ncols
        self.pivot_limit = ncols if pivot_limit is None else pivot_limit
        self.pivot_rows = {}  # pivot column -> row dict
        self.remainders = []

    @property
    def rank(self) -> int:
        return len(self.pivot_rows)

    def reduce(self, vec: dict) -> dict:
        """Residue of vec after eliminating all current pivots (copy)."""
        row = {c: v for c, v in vec.items() if v}
        # Pivot rows are zero at every other pivot column, so eliminating
        # one never reintroduces another: one pass over the original keys
        # suffices (new keys appear only at non-pivot columns).
        for c in list(row):
            if c not in self.pivot_rows:
                continue
            factor = row.pop(c)
            prow = self.pivot_rows[c]
            for c2, v in prow.items():
                if c2 == c:
                    continue
                w = row.get(c2)
                w = -(factor * v) if w is None else w - factor * v
                if w:
                    row[c2] = w
                else:
                    del row[c2]
        return row

    def insert(self, vec: dict) -> bool:
        """Reduce vec and add it as a new pivot row if independent.

        Returns True when the rank grew.
        """
        row = self.reduce(vec)
        if not row:
            return False
        p = None
        for c in row:
            if c < self.pivot_limit and (p is None or c < p):
                p = c
        if p is None:
            self.remainders.append(row)
            return False
        lead = row[p]
        if lead != 1:
            inv = ONE / lead
            row = {c: inv * v for c, v in row.items()}
        # Back-substitute to keep full reduction.
        for prow in self.pivot_rows.values():
            factor = prow.get(p)
            if factor is None:
                continue
            del prow[p]
            for c2, v in row.items():
                if c2 == p:
                    continue
                w = prow.get(c2)
                w = -(factor * v) if w is None else w - factor * v
                if w:
                    prow[c2] = w
                else:
                    del prow[c2]
        self.pivot_rows[p] = row
        return True

    def sorted_pivots(self):
        return sorted(self.pivot_rows)

    def sorted_rows(self):
        return [self.pivot_rows[p] for p in self.sorted_pivots()]


class Subspace:
    """A linear subspace in canonical (RREF basis) form."""

    __slots__ = ("ambient_dim", "_ech")

    def __init__(self, ambient_dim: int, vectors=()):
        self.ambient_dim = ambient_dim
        self._ech = Echelon(ambient_dim)
        for v in vectors:
            if not isinstance(v, dict):
                v = {i: x for i, x in enumerate(v)}
            self._ech.insert(v)

    @classmethod
    def _from_echelon(cls, ambient_dim: int, ech: Echelon) -> "Subspace":
        s = cls.__new__(cls)
        s.ambient_dim = ambient_dim
        s._ech = ech
        return s

    @property
    def dim(self) -> int:
        return self._ech.rank

    @property
    def pivots(self):
        return self._ech.sorted_pivots()

    def basis(self):
        """RREF basis vectors, ordered by pivot column."""
        return [dict(r) for r in self._ech.sorted_rows()]

    def basis_matrix(self) -> Matrix:
        return Matrix(self.dim, self.ambient_dim, self.basis())

    def contains(self, vec: dict) -> bool:
        return not self._ech.reduce(vec)

    def reduce(self, vec: dict) -> dict:
        """Canonical residue of vec modulo this subspace."""
        return self._ech.reduce(vec)

    def contains_subspace(self, other: "Subspace") -> bool:
        if other.ambient_dim != self.ambient_dim:
            raise LinalgError("ambient dimension mismatch")
        return all(self.contains(r) for r in other._ech.pivot_rows.values())

    def insert(self, vec: dict) -> bool:
        """Grow the span; used by incremental constructions."""
        return self._ech.insert(vec)

    def is_zero(self) -> bool:
        return self.dim == 0

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (
            self.ambient_dim == other.ambient_dim
            and self._ech.sorted_pivots() == other._ech.sorted_pivots()
            and self.basis() == other.basis()
        )

    def __repr__(self):
        return f"Subspace(dim {self.dim} of {self.ambient_dim})"


class RrefResult:
    __slots__ = ("matrix", "pivots", "rank")

    def __init__(self, matrix, pivots, rank):
        self.matrix = matrix
        self.pivots = pivots
        self.rank = rank


def rref(m: Matrix) -> RrefResult:
    """Unique reduced row echelon form, with pivot columns and rank."""
    ech = Echelon(m.ncols)
    for r in m.rows:
        ech.insert(r)
    rows = ech.sorted_rows()
    rows = [dict(r) for r in rows]
    rows.extend({} for _ in range(m.nrows - len(rows)))
    return RrefResult(Matrix(m.nrows, m.ncols, rows), ech.sorted_pivots(), ech.rank)


def kernel(m: Matrix) -> Subspace:
    """{v : m v = 0} as a canonical Subspace of the column space."""
    ech = Echelon(m.ncols)
    for r in m.rows:
        ech.insert(r)
    pivset = ech.pivot_rows
    out = Echelon(m.ncols)
    for f in range(m.ncols):
        if f in pivset:
            continue
        v = {f: ONE}
        for p, prow in pivset.items():
            coeff = prow.get(f)
            if coeff is not None:
                v[p] = -coeff
        out.insert(v)
    return Subspace._from_echelon(m.ncols, out)


def image(m: Matrix) -> Subspace:
    """Column space as a canonical Subspace of the row-index space."""
    ech = Echelon(m.nrows)
    for col in m.columns():
        ech.insert(col)
    return Subspace._from_echelon(m.nrows, ech)


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    if a.ambient_dim != b.ambient_dim:
        raise LinalgError("ambient dimension mismatch")
    ech = Echelon(a.ambient_dim)
    for r in a.basis():
        ech.insert(r)
    for r in b.basis():
        ech.insert(r)
    return Subspace._from_echelon(a.ambient_dim, ech)


def intersect(a: Subspace, b: Subspace) -> Subspace:
    """a ∩ b via the kernel of the stacked-bases coefficient map."""
    if a.ambient_dim != b.ambient_dim:
        raise LinalgError("ambient dimension mismatch")
    abasis = a.basis()
    bbasis = b.basis()
    cols = abasis + bbasis
    stacked = Matrix.from_columns(a.ambient_dim, cols)
    coeffs = kernel(stacked)
    ech = Echelon(a.ambient_dim)
    na = len(abasis)
    for lam in coeffs.basis():
        v = {}
        for j, c in lam.items():
            if j < na:
                vec_add_scaled(v, abasis[j], c)
        ech.insert(v)
    return Subspace._from_echelon(a.ambient_dim, ech)


def quotient_dim(a: Subspace, b: Subspace) -> int:
    """dim a/b, requiring b ⊆ a."""
    if not a.contains_subspace(b):
        raise LinalgError("not a subspace: quotient denominator not contained")
    return a.dim - b.dim


def quotient_reps(a: Subspace, b: Subspace):
    """Vectors of a whose classes form a basis of a/b.

    Deterministic choice: the RREF basis rows of a whose pivot columns
    are not pivot columns of b (non-pivot completion).  Containment of b
    in a is checked.
    """
    if not a.contains_subspace(b):
        raise LinalgError("not a subspace: quotient denominator not contained")
    bpiv = set(b.pivots)
    return [r for p, r in zip(a.pivots, a.basis()) if p not in bpiv]


class Solver:
    """Repeated-solve helper: RREF of m with row operations tracked.

    Solving m x = b for many right-hand sides b is the hot path in the
    obstruction calculus.  The elimination is done once on rows of
    [m | identity]; each solve is then a handful of sparse dot products.
    The returned solution is the particular solution with zeros in all
    free coordinates (exactly what per-call RREF of [m | b] would give).
    """

    __slots__ = ("nrows", "ncols", "rank", "_pivot_tracks", "_checks")

    def __init__(self, m: Matrix):
        self.nrows = m.nrows
        self.ncols = m.ncols
        ech = Echelon(m.ncols + m.nrows, pivot_limit=m.ncols)
        for i, r in enumerate(m.rows):
            row = dict(r)
            row[m.ncols + i] = ONE
            ech.insert(row)
        self.rank = ech.rank

        def track_part(row):
            return {c - m.ncols: v for c, v in row.items() if c >= m.ncols}

        self._pivot_tracks = [
            (p, track_part(ech.pivot_rows[p])) for p in ech.sorted_pivots()
        ]
        self._checks = [track_part(rem) for rem in ech.remainders]

    def solve(self, b: dict):
        """A particular solution of m x = b, or None if inconsistent."""
        for track in self._checks:
            if vec_dot(track, b):
                return None
        x = {}
        for p, track in self._pivot_tracks:
            val = vec_dot(track, b)
            if val:
                x[p] = val
        return x


def solve_particular(m: Matrix, rhs: dict):
    """One-shot m x = rhs; see Solver for the repeated-solve variant."""
    return Solver(m).solve(rhs)
