"""Cochain complexes of a Leibniz or Lie algebra with exact coboundaries.

A degree-n cochain with adjoint coefficients is a multilinear map
g^n -> g, stored sparsely over the tensor basis e_k (x) dual(t_1..t_n)
at the flat index k*d^n + sum t_m d^(n-m).  Trivial coefficients drop
the k part.  The coboundary sends the basis cochain at (k, t) to a
short combination of basis cochains one degree up, so both the matrix
of the coboundary and its matrix-free application come from the same
push-forward enumeration.

The antisymmetric subcomplex (for Lie algebras) is reached through
explicit inclusion and projection matrices over the basis of increasing
index tuples, and the symmetric degree-2 subspace over the basis of
weakly increasing pairs.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations, product

from .linalg import Matrix, Solver, Subspace, image, kernel, quotient_reps
from .scalars import ONE, Scalar

__all__ = [
    "ClassCoordinates",
    "CochainScheme",
    "CohomologySpace",
    "evaluate_cochain",
    "leibniz_cohomology",
    "lie_cohomology",
    "lie_delta_matrix",
    "symmetric_cocycle_space",
    "split_degree2",
    "wedge_basis",
    "wedge_inclusion",
    "wedge_projection",
    "sym2_basis",
    "sym2_inclusion",
]


class CochainScheme:
    """An algebra together with a coefficient choice, adjoint or trivial.

    Holds the flat-index conventions and caches coboundary matrices.
    """

    __slots__ = ("spec", "coefficients", "dim", "adjoint", "_by_target", "_mats")

    def __init__(self, spec, coefficients="adjoint"):
        if coefficients not in ("adjoint", "trivial"):
            raise ValueError(f"unknown coefficient choice {coefficients!r}")
        self.spec = spec
        self.coefficients = coefficients
        self.dim = spec.dim
        self.adjoint = coefficients == "adjoint"
        by_target = [[] for _ in range(spec.dim)]
        for a, b, value in spec.nonzero_brackets():
            for m, c in value.items():
                by_target[m].append((a, b, c))
        self._by_target = by_target
        self._mats = {}

    def cochain_dim(self, n: int) -> int:
        base = self.dim ** n
        return self.dim * base if self.adjoint else base

    def flat_index(self, k, t) -> int:
        idx = 0
        for v in t:
            idx = idx * self.dim + v
        if self.adjoint:
            return k * self.dim ** len(t) + idx
        return idx

    def unflatten(self, n: int, idx: int):
        d = self.dim
        t = [0] * n
        for m in range(n - 1, -1, -1):
            idx, t[m] = divmod(idx, d)
        k = idx if self.adjoint else None
        return k, tuple(t)

    def basis_iter(self, n: int):
        """Yield (k, t) in flat-index order; k is None for trivial coefficients."""
        heads = range(self.dim) if self.adjoint else (None,)
        for k in heads:
            for t in product(range(self.dim), repeat=n):
                yield k, t

    def _delta_entries(self, k, t):
        """Push-forward of the basis cochain at (k, t) under the coboundary.

        Yields (flat index, coefficient) pairs one degree up, possibly
        with repeated indices.
        """
        n = len(t)
        d = self.dim
        table = self.spec.table
        if self.adjoint:
            # [X_1, psi(X_2 .. X_{n+1})]
            for j in range(d):
                cell = table[j][k]
                if cell:
                    u = (j,) + t
                    for m, c in cell.items():
                        yield self.flat_index(m, u), c
            # (-1)^i [psi(.. hat X_i ..), X_i] for i = 2 .. n+1
            row = table[k]
            for pos in range(1, n + 1):
                positive = pos % 2 == 1
                for j in range(d):
                    cell = row[j]
                    if not cell:
                        continue
                    u = t[:pos] + (j,) + t[pos:]
                    for m, c in cell.items():
                        yield self.flat_index(m, u), (c if positive else -c)
        # (-1)^(j+1) psi(.., [X_i, X_j] in slot i, .., hat X_j, ..)
        for i in range(1, n + 1):
            hits = self._by_target[t[i - 1]]
            if not hits:
                continue
            w = list(t)
            for a, b, c in hits:
                w[i - 1] = a
                for j in range(i + 1, n + 2):
                    u = tuple(w[: j - 1]) + (b,) + tuple(w[j - 1 :])
                    yield self.flat_index(k, u), (c if j % 2 == 1 else -c)

    def delta_apply(self, n: int, data: dict) -> dict:
        """Coboundary of a degree-n cochain, matrix-free."""
        out = {}
        for idx, coeff in data.items():
            if not coeff:
                continue
            k, t = self.unflatten(n, idx)
            for fi, c in self._delta_entries(k, t):
                w = out.get(fi)
                w = coeff * c if w is None else w + coeff * c
                if w:
                    out[fi] = w
                else:
                    del out[fi]
        return out

    def delta_matrix(self, n: int) -> Matrix:
        """Matrix of the coboundary CL^n -> CL^(n+1), cached."""
        mat = self._mats.get(n)
        if mat is not None:
            return mat
        cols = []
        for k, t in self.basis_iter(n):
            col = {}
            for fi, c in self._delta_entries(k, t):
                w = col.get(fi)
                w = c if w is None else w + c
                if w:
                    col[fi] = w
                else:
                    del col[fi]
            cols.append(col)
        mat = Matrix.from_columns(self.cochain_dim(n + 1), cols)
        self._mats[n] = mat
        return mat

    def is_cocycle(self, n: int, data: dict) -> bool:
        return not self.delta_apply(n, data)

    def __repr__(self):
        return f"CochainScheme({self.spec!r}, {self.coefficients})"


def evaluate_cochain(scheme: CochainScheme, data: dict, vectors):
    """Evaluate a sparse cochain on a tuple of sparse vectors.

    Returns a sparse vector for adjoint coefficients, a Scalar for
    trivial ones.  The degree is the number of vectors.
    """
    n = len(vectors)
    out = {}
    total = Scalar(0)
    for idx, coeff in data.items():
        k, t = scheme.unflatten(n, idx)
        prod = coeff
        for vec, a in zip(vectors, t):
            v = vec.get(a)
            if not v:
                prod = None
                break
            prod = prod * v
        if prod is None or not prod:
            continue
        if scheme.adjoint:
            w = out.get(k)
            w = prod if w is None else w + prod
            if w:
                out[k] = w
            else:
                del out[k]
        else:
            total = total + prod
    return out if scheme.adjoint else total


def _perm_sign(perm) -> int:
    sign = 1
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                sign = -sign
    return sign


def wedge_basis(dim: int, n: int):
    return list(combinations(range(dim), n))


def _heads(scheme):
    return range(scheme.dim) if scheme.adjoint else (None,)


def wedge_inclusion(scheme: CochainScheme, n: int) -> Matrix:
    """Antisymmetric cochains into tensor coordinates.

    The column for (k, i_1 < .. < i_n) is the signed sum over all
    arrangements, with coefficient +1 on the increasing one.
    """
    combs = wedge_basis(scheme.dim, n)
    cols = []
    for k in _heads(scheme):
        for comb in combs:
            col = {}
            for perm in permutations(range(n)):
                u = tuple(comb[p] for p in perm)
                col[scheme.flat_index(k, u)] = Scalar(_perm_sign(perm))
            cols.append(col)
    return Matrix.from_columns(scheme.cochain_dim(n), cols)


def wedge_projection(scheme: CochainScheme, n: int) -> Matrix:
    """Left inverse of wedge_inclusion: read the increasing-tuple coordinates."""
    combs = wedge_basis(scheme.dim, n)
    m = Matrix.zero(len(combs) * (scheme.dim if scheme.adjoint else 1),
                    scheme.cochain_dim(n))
    r = 0
    for k in _heads(scheme):
        for comb in combs:
            m.rows[r] = {scheme.flat_index(k, comb): ONE}
            r += 1
    return m


def sym2_basis(dim: int):
    return [(i, j) for i in range(dim) for j in range(i, dim)]


def sym2_inclusion(scheme: CochainScheme) -> Matrix:
    """Symmetric 2-cochains into tensor coordinates.

    The column for i < j is the symmetrized pair with both coefficients
    1; the diagonal column is the plain square term.
    """
    pairs = sym2_basis(scheme.dim)
    cols = []
    for k in _heads(scheme):
        for i, j in pairs:
            col = {scheme.flat_index(k, (i, j)): ONE}
            if i != j:
                col[scheme.flat_index(k, (j, i))] = ONE
            cols.append(col)
    return Matrix.from_columns(scheme.cochain_dim(2), cols)


def split_degree2(scheme: CochainScheme, data: dict):
    """Split a 2-cochain into its antisymmetric and symmetric parts."""
    half = Scalar(1) / 2
    anti = {}
    sym = {}
    for idx, v in data.items():
        k, (i, j) = scheme.unflatten(2, idx)
        hv = half * v
        for target, flip in ((anti, True), (sym, False)):
            for key, w in (
                (scheme.flat_index(k, (i, j)), hv),
                (scheme.flat_index(k, (j, i)), -hv if flip else hv),
            ):
                s = target.get(key)
                s = w if s is None else s + w
                if s:
                    target[key] = s
                elif key in target:
                    del target[key]
    return anti, sym


def _wedge_flat(scheme, ncombs, k, pos):
    return pos if k is None else k * ncombs + pos


def lie_delta_matrix(scheme: CochainScheme, n: int) -> Matrix:
    """Coboundary on antisymmetric cochains, in increasing-tuple coordinates.

    Meaningful when the algebra is Lie, where the coboundary preserves
    antisymmetry; columns are computed by including, applying the full
    coboundary, and reading the increasing coordinates back.
    """
    combs = wedge_basis(scheme.dim, n)
    out_combs = wedge_basis(scheme.dim, n + 1)
    out_pos = {c: i for i, c in enumerate(out_combs)}
    nout = len(out_combs)
    cols = []
    for k in _heads(scheme):
        for comb in combs:
            vec = {}
            for perm in permutations(range(n)):
                u = tuple(comb[p] for p in perm)
                vec[scheme.flat_index(k, u)] = Scalar(_perm_sign(perm))
            col = {}
            for idx, v in scheme.delta_apply(n, vec).items():
                k2, t = scheme.unflatten(n + 1, idx)
                pos = out_pos.get(t)
                if pos is not None:
                    col[_wedge_flat(scheme, nout, k2, pos)] = v
            cols.append(col)
    nrows = nout * (scheme.dim if scheme.adjoint else 1)
    return Matrix.from_columns(nrows, cols)


@dataclass
class CohomologySpace:
    """Cocycles, coboundaries, and chosen representatives in one degree.

    All three live in tensor coordinates of the ambient cochain space,
    also for the antisymmetric subcomplex.
    """

    degree: int
    cocycles: Subspace
    coboundaries: Subspace
    reps: list

    @property
    def z_dim(self):
        return self.cocycles.dim

    @property
    def b_dim(self):
        return self.coboundaries.dim

    @property
    def h_dim(self):
        return self.cocycles.dim - self.coboundaries.dim


def leibniz_cohomology(scheme: CochainScheme, n: int) -> CohomologySpace:
    """Cocycles mod coboundaries of the full complex in degree n >= 1."""
    if n < 1:
        raise ValueError("degree must be at least 1")
    z = kernel(scheme.delta_matrix(n))
    b = image(scheme.delta_matrix(n - 1))
    return CohomologySpace(n, z, b, quotient_reps(z, b))


def _embed(mat: Matrix, space: Subspace, ambient: int) -> Subspace:
    return Subspace(ambient, [mat.matvec(v) for v in space.basis()])


def lie_cohomology(scheme: CochainScheme, n: int) -> CohomologySpace:
    """Cohomology of the antisymmetric subcomplex, embedded in tensor
    coordinates so the result is directly comparable with the full
    complex.  Requires a Lie algebra.
    """
    if n < 1:
        raise ValueError("degree must be at least 1")
    ambient = scheme.cochain_dim(n)
    incl = wedge_inclusion(scheme, n)
    z = _embed(incl, kernel(lie_delta_matrix(scheme, n)), ambient)
    incl_prev = wedge_inclusion(scheme, n - 1)
    b = Subspace(ambient,
                 [scheme.delta_apply(n - 1, col) for col in incl_prev.columns()])
    return CohomologySpace(n, z, b, quotient_reps(z, b))


def symmetric_cocycle_space(scheme: CochainScheme) -> Subspace:
    """Symmetric Leibniz 2-cocycles, embedded in tensor coordinates."""
    incl = sym2_inclusion(scheme)
    cols = [scheme.delta_apply(2, col) for col in incl.columns()]
    composed = Matrix.from_columns(scheme.cochain_dim(3), cols)
    return _embed(incl, kernel(composed), scheme.cochain_dim(2))


class ClassCoordinates:
    """Coordinates of cohomology classes over chosen representatives.

    Cocycles are expanded over the coboundary basis followed by the
    representatives; the representative block is the class coordinate
    vector, which is unique because representatives are independent
    modulo coboundaries.
    """

    __slots__ = ("space", "_solver", "_offset")

    def __init__(self, space: CohomologySpace):
        cols = space.coboundaries.basis() + [dict(r) for r in space.reps]
        ambient = space.cocycles.ambient_dim
        self.space = space
        self._solver = Solver(Matrix.from_columns(ambient, cols))
        self._offset = space.coboundaries.dim

    def coords(self, vec: dict):
        """Class coordinates of a cocycle, or None if vec is not one."""
        sol = self._solver.solve(vec)
        if sol is None:
            return None
        zero = Scalar(0)
        return [sol.get(self._offset + i, zero) for i in range(len(self.space.reps))]

    def is_coboundary(self, vec: dict) -> bool:
        coords = self.coords(vec)
        return coords is not None and not any(coords)
