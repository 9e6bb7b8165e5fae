"""Formal deformations of a Leibniz bracket and their obstructions.

A deformed bracket mu_0 + sum_m x^m T_m (monomials m over named
parameters, T_m sparse 2-cochains) fails the right Leibniz identity by
the defect mu(mu(x,y),z) - mu(mu(x,z),y) - mu(x,mu(y,z)), collected
here exactly, monomial by monomial.  The quadratic part of the defect
is driven by the composition product comp(phi,psi) and the symmetric
bracket comp(phi,psi) + comp(psi,phi), whose classes in degree 3 are
the obstructions to extending a deformation one order further.

Higher products are computed operationally: witnesses are solved order
by order from a single defining system (zero witnesses where the
obstruction vanishes on the nose), a monomial whose obstruction class
is nonzero blocks, and later monomials that need a blocked witness
against a nonzero partner are reported as undefined rather than
guessed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as iter_product

from .algebras import AlgebraSpec
from .cochains import ClassCoordinates, CochainScheme, leibniz_cohomology
from .linalg import Solver, Subspace, kernel, vec_add_scaled
from .scalars import ONE, Scalar

__all__ = [
    "comp2",
    "bracket2",
    "defect",
    "mu0_cochain",
    "Deformation",
    "family_deformation",
    "ObstructionContext",
    "ObstructionClass",
    "classify3",
    "extend_order",
    "ProductRecord",
    "MasseyReport",
    "massey_products",
    "VersalReport",
    "verify_versal",
]


def comp2(scheme: CochainScheme, phi: dict, psi: dict) -> dict:
    """The composition 3-cochain phi(psi(x,y),z) - phi(psi(x,z),y)
    - phi(x,psi(y,z)) of two adjoint 2-cochains."""
    if not scheme.adjoint:
        raise ValueError("composition products need adjoint coefficients")
    out = {}
    psi_items = [(scheme.unflatten(2, i), v) for i, v in psi.items()]
    flat = scheme.flat_index

    def acc(key, value):
        w = out.get(key)
        w = value if w is None else w + value
        if w:
            out[key] = w
        else:
            out.pop(key, None)

    for i, u in phi.items():
        kphi, (a, b) = scheme.unflatten(2, i)
        for (kpsi, (c, e)), v in psi_items:
            w = u * v
            if a == kpsi:
                acc(flat(kphi, (c, e, b)), w)
                acc(flat(kphi, (c, b, e)), -w)
            if b == kpsi:
                acc(flat(kphi, (a, c, e)), -w)
    return out


def bracket2(scheme: CochainScheme, phi: dict, psi: dict) -> dict:
    """Symmetrized composition product; equals minus the coboundary when
    one argument is the bracket itself."""
    out = comp2(scheme, phi, psi)
    for k, v in comp2(scheme, psi, phi).items():
        w = out.get(k)
        w = v if w is None else w + v
        if w:
            out[k] = w
        else:
            out.pop(k, None)
    return out


def defect(scheme: CochainScheme, mu: dict) -> dict:
    """Failure of the right Leibniz identity for a candidate bracket,
    as a 3-cochain; zero exactly when mu is a Leibniz bracket."""
    return comp2(scheme, mu, mu)


def mu0_cochain(scheme: CochainScheme) -> dict:
    """The undeformed bracket as an adjoint 2-cochain."""
    out = {}
    for i, j, value in scheme.spec.nonzero_brackets():
        for m, c in value.items():
            out[scheme.flat_index(m, (i, j))] = c
    return out


def _monomials(nparams: int, degree: int):
    """Exponent tuples of the given total degree, in lexicographic order."""
    out = []
    for combo in iter_product(range(degree + 1), repeat=nparams):
        if sum(combo) == degree:
            out.append(combo)
    return out


def _partitions(monomial):
    """Ordered pairs (m1, m2) of nonzero monomials with m1 + m2 = monomial."""
    ranges = [range(e + 1) for e in monomial]
    for m1 in iter_product(*ranges):
        if not any(m1):
            continue
        m2 = tuple(e - f for e, f in zip(monomial, m1))
        if not any(m2):
            continue
        yield m1, m2


class Deformation:
    """A bracket mu_0 + sum x^m T_m with named parameters.

    Terms are sparse adjoint 2-cochains keyed by exponent tuples of
    degree at least 1.
    """

    __slots__ = ("scheme", "params", "terms")

    def __init__(self, scheme: CochainScheme, params, terms=None):
        if not scheme.adjoint:
            raise ValueError("deformations use adjoint coefficients")
        self.scheme = scheme
        self.params = tuple(params)
        self.terms = {}
        for m, data in (terms or {}).items():
            self.set_term(m, data)

    def set_term(self, monomial, data: dict) -> None:
        monomial = tuple(monomial)
        if len(monomial) != len(self.params):
            raise ValueError("monomial length does not match the parameters")
        if sum(monomial) < 1 or any(e < 0 for e in monomial):
            raise ValueError("terms must have total degree at least 1")
        self.terms[monomial] = dict(data)

    def term(self, monomial) -> dict:
        return self.terms.get(tuple(monomial), {})

    @property
    def max_order(self) -> int:
        """Highest total degree among installed terms (zero terms count:
        installing an explicit zero witness at an order closes it)."""
        return max((sum(m) for m in self.terms), default=0)

    def defect_series(self) -> dict:
        """All nonzero defect coefficients, keyed by exponent tuple.

        The degree-0 key is the defect of the base bracket itself and is
        nonzero only if the base algebra fails the Leibniz identity.
        """
        zero = (0,) * len(self.params)
        table = {zero: mu0_cochain(self.scheme)}
        table.update(self.terms)
        out = {}
        for m1, t1 in table.items():
            if not t1:
                continue
            for m2, t2 in table.items():
                if not t2:
                    continue
                m = tuple(a + b for a, b in zip(m1, m2))
                part = comp2(self.scheme, t1, t2)
                if not part:
                    continue
                acc = out.setdefault(m, {})
                vec_add_scaled(acc, part, ONE)
        return {m: v for m, v in out.items() if v}


def family_deformation(pa) -> Deformation:
    """Split a parameterized bracket table into a Deformation.

    The constant part of every coefficient polynomial forms the base
    algebra; each higher parameter monomial collects its coefficients
    into one adjoint 2-cochain term.
    """
    nparams = len(pa.params)
    zero = (0,) * nparams
    base = {}
    higher = {}
    for (i, j), cell in pa.table.items():
        for k, poly in cell.items():
            for m, coeff in poly.coeffs.items():
                if m == zero:
                    base.setdefault((i, j), {})[k] = coeff
                else:
                    higher.setdefault(m, []).append((k, (i, j), coeff))
    spec = AlgebraSpec(pa.dim, base, kind=pa.kind, name=pa.name,
                       basis_names=pa.basis_names)
    scheme = CochainScheme(spec, "adjoint")
    deformation = Deformation(scheme, pa.params)
    for m in sorted(higher):
        data = {}
        for k, pair, coeff in higher[m]:
            data[scheme.flat_index(k, pair)] = coeff
        deformation.set_term(m, data)
    return deformation


class ObstructionContext:
    """Degree-3 class data shared by repeated obstruction checks.

    Building the cohomology of degree 3 is the expensive step, so
    callers that classify many cochains against the same scheme reuse
    one context.
    """

    __slots__ = ("scheme", "space3", "classes", "solver2")

    def __init__(self, scheme: CochainScheme):
        self.scheme = scheme
        self.space3 = leibniz_cohomology(scheme, 3)
        self.classes = ClassCoordinates(self.space3)
        self.solver2 = Solver(scheme.delta_matrix(2))


@dataclass
class ObstructionClass:
    """A classified degree-3 obstruction cochain.

    The verdict is None when the cochain is not closed (then it cannot
    be an obstruction of a consistent lower order and the caller has a
    bookkeeping bug to find).  The witness solves delta(witness) =
    cochain and is present exactly for the coboundary verdict.
    """

    cochain: dict
    closed: bool
    verdict: str | None            # "zero" | "coboundary" | "nontrivial"
    witness: dict | None = None
    class_coords: list | None = None
    indeterminacy: Subspace | None = None


def classify3(scheme: CochainScheme, chi: dict,
              context: ObstructionContext | None = None) -> ObstructionClass:
    """Classify a 3-cochain as zero, a coboundary (with a deterministic
    witness), or a nontrivial class; non-cocycles are flagged instead of
    raising."""
    if context is None:
        context = ObstructionContext(scheme)
    chi = {k: v for k, v in chi.items() if v}
    if not scheme.is_cocycle(3, chi):
        return ObstructionClass(chi, closed=False, verdict=None)
    coords = context.classes.coords(chi)
    if not chi:
        return ObstructionClass(chi, True, "zero", witness={},
                                class_coords=coords)
    if any(coords):
        return ObstructionClass(chi, True, "nontrivial", class_coords=coords)
    witness = context.solver2.solve(chi)
    if witness is None:
        raise AssertionError("class coordinates vanished but no witness found")
    return ObstructionClass(chi, True, "coboundary", witness=witness,
                            class_coords=coords)


def extend_order(deformation: Deformation,
                 context: ObstructionContext | None = None):
    """One step of order-by-order extension.

    Classifies the defect coefficient of every parameter monomial of
    total degree max_order + 1.  If each one is zero or a coboundary,
    installs the deterministic witnesses as new terms and returns the
    updated deformation; otherwise leaves it untouched and returns the
    map monomial -> ObstructionClass so the caller can see what blocked.
    The deformation must satisfy the identity through its current
    max_order.
    """
    scheme = deformation.scheme
    if context is None:
        context = ObstructionContext(scheme)
    target = deformation.max_order + 1
    series = deformation.defect_series()
    low = [m for m in series if sum(m) <= deformation.max_order]
    if low:
        raise ValueError(f"identity already fails at {sorted(low)}")
    outcomes = {}
    for monomial in _monomials(len(deformation.params), target):
        outcomes[monomial] = classify3(scheme, series.get(monomial, {}),
                                       context)
    if all(oc.verdict in ("zero", "coboundary") for oc in outcomes.values()):
        for monomial, oc in outcomes.items():
            deformation.set_term(monomial, oc.witness)
        return deformation
    return outcomes


@dataclass
class ProductRecord:
    """Outcome for one monomial of the order-by-order extension."""

    monomial: tuple
    status: str                    # "defined" or "undefined"
    verdict: str | None = None     # "zero" | "coboundary" | "nontrivial"
    class_coords: list | None = None
    nontrivial_mod_indeterminacy: bool | None = None
    blocking: list = field(default_factory=list)
    witness: dict | None = None
    indeterminacy_dim: int | None = None

    @property
    def degree(self) -> int:
        return sum(self.monomial)


@dataclass
class MasseyReport:
    params: tuple
    records: list
    hl3_dim: int
    witnesses: dict

    def record(self, monomial) -> ProductRecord:
        monomial = tuple(monomial)
        for rec in self.records:
            if rec.monomial == monomial:
                return rec
        raise KeyError(f"no record for monomial {monomial}")

    def defined(self, degree=None):
        return [r for r in self.records
                if r.status == "defined" and (degree is None or r.degree == degree)]


def massey_products(scheme: CochainScheme, generators, order: int,
                    params=None) -> MasseyReport:
    """Extend mu_0 + sum x_a phi_a order by order up to the given total
    degree, recording the obstruction verdict for every monomial.

    Generators must be 2-cocycles.  A monomial with a coboundary
    obstruction gets the deterministic witness; a nontrivial one blocks.
    Monomials whose obstruction needs a blocked witness with a nonzero
    partner are undefined.  From degree 3 on, nontrivial classes are
    also judged against the indeterminacy spanned by brackets of the
    involved generators with all 2-cocycles.
    """
    generators = [dict(g) for g in generators]
    nparams = len(generators)
    if params is None:
        params = tuple(f"x{i+1}" for i in range(nparams))
    params = tuple(params)
    if len(params) != nparams:
        raise ValueError("one parameter name per generator is required")
    if order < 2:
        raise ValueError("order must be at least 2")
    for g in generators:
        if not scheme.is_cocycle(2, g):
            raise ValueError("every generator must be a 2-cocycle")

    context = ObstructionContext(scheme)
    classes = context.classes
    zl2_basis = kernel(scheme.delta_matrix(2)).basis()

    witnesses = {}
    for a, g in enumerate(generators):
        unit = tuple(1 if i == a else 0 for i in range(nparams))
        witnesses[unit] = g

    # Classes of generator brackets against all 2-cocycles, by generator.
    indet_cache = {}

    def indeterminacy(monomial) -> Subspace:
        span = Subspace(len(context.space3.reps))
        for a, e in enumerate(monomial):
            if not e:
                continue
            rows = indet_cache.get(a)
            if rows is None:
                rows = []
                for eta in zl2_basis:
                    coords = classes.coords(bracket2(scheme, generators[a], eta))
                    rows.append({i: v for i, v in enumerate(coords) if v})
                indet_cache[a] = rows
            for row in rows:
                span.insert(row)
        return span

    records = []
    for degree in range(2, order + 1):
        for monomial in _monomials(nparams, degree):
            obstruction = {}
            blocking = []
            for m1, m2 in _partitions(monomial):
                t1 = witnesses.get(m1)
                t2 = witnesses.get(m2)
                if t1 is None or t2 is None:
                    # A missing witness is harmless only against a zero
                    # partner.
                    partner_zero = (t1 == {} or t2 == {})
                    if not partner_zero:
                        blocking.append((m1, m2))
                    continue
                if t1 and t2:
                    vec_add_scaled(obstruction, comp2(scheme, t1, t2), ONE)
            if blocking:
                records.append(ProductRecord(monomial, "undefined",
                                             blocking=blocking))
                continue
            oc = classify3(scheme, obstruction, context)
            if not oc.closed:
                records.append(ProductRecord(monomial, "undefined",
                                             blocking=[("defect", "not closed")]))
                continue
            if oc.verdict == "nontrivial":
                flag = None
                span_dim = None
                if degree >= 3:
                    span = indeterminacy(monomial)
                    span_dim = span.dim
                    coord_vec = {i: v for i, v in enumerate(oc.class_coords) if v}
                    flag = not span.contains(coord_vec)
                records.append(ProductRecord(monomial, "defined", "nontrivial",
                                             oc.class_coords, flag,
                                             indeterminacy_dim=span_dim))
            else:
                witnesses[monomial] = oc.witness
                records.append(ProductRecord(monomial, "defined", oc.verdict,
                                             oc.class_coords, witness=oc.witness))
    return MasseyReport(params=params, records=records,
                        hl3_dim=context.space3.h_dim, witnesses=dict(witnesses))


@dataclass
class VersalReport:
    """Defect monomials of a parameterized bracket against a monomial ideal."""

    params: tuple
    defect: dict
    ideal: list
    violations: list

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_versal(deformation: Deformation, ideal_monomials) -> VersalReport:
    """Check that every nonzero defect coefficient is divisible by some
    ideal generator; undivided monomials are reported with their
    cochains."""
    nparams = len(deformation.params)
    ideal = []
    for g in ideal_monomials:
        g = tuple(g)
        if len(g) != nparams or any(e < 0 for e in g):
            raise ValueError(f"bad ideal monomial {g}")
        ideal.append(g)
    defect = deformation.defect_series()
    violations = []
    for m in sorted(defect):
        covered = any(all(ge <= me for ge, me in zip(g, m)) for g in ideal)
        if not covered:
            violations.append((m, defect[m]))
    return VersalReport(params=deformation.params, defect=defect,
                        ideal=ideal, violations=violations)
