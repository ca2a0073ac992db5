"""Logarithmic 1-forms, the foliations they induce, and Gauss-map degrees.

A foliation of P^n is stored through the coefficients of a homogeneous
1-form sum(a_i dx_i) with radial contraction zero and unit coefficient gcd;
its degree is the common coefficient degree minus one.  The e-invariants are
degrees of the Gauss map of the foliation restricted to a generic linear
subspace, with the restriction realized by a random full-rank substitution
over a prime field.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import DegenerateInputError, FieldMismatchError, GenericityError
from .fields import PrimeField, RationalField
from .groebner import DEGREVLEX, Ideal, groebner, ideal_dimension
from .linalg import rank
from .poly import (HomogeneousForm, MultiPoly, euler_contraction, exact_divide,
                   gcd_many)
from .polar import (DEFAULT_TRIALS, DegreeReport, RationalMapRep,
                    WeightedFunction, map_degree, weighted_gradient)
from .rand import SeedStream, random_scalar

_RESTRICT_BUDGET = 5


def integrability_defect(coeffs) -> list:
    """Coefficients of the wedge of the form with its differential.

    For w = sum(a_i dx_i) returns, for every i<j<k, the coefficient of
    dx_i^dx_j^dx_k in w^dw; the form is integrable iff all vanish.
    """
    polys = [c.poly if isinstance(c, HomogeneousForm) else c for c in coeffs]
    n = len(polys)
    d = [[polys[j].diff(i) for j in range(n)] for i in range(n)]
    out = []
    for i, j, k in combinations(range(n), 3):
        c = (polys[i] * (d[j][k] - d[k][j])
             - polys[j] * (d[i][k] - d[k][i])
             + polys[k] * (d[i][j] - d[j][i]))
        out.append(c)
    return out


@dataclass(frozen=True)
class LogFoliation:
    """A projective foliation: unit-gcd 1-form coefficients plus its degree."""

    coeffs: tuple
    degree: int

    @property
    def field(self):
        return self.coeffs[0].poly.field

    @property
    def nvars(self) -> int:
        return self.coeffs[0].poly.nvars

    @property
    def ambient_dim(self) -> int:
        return self.nvars - 1

    def polys(self):
        return [c.poly for c in self.coeffs]

    def to_field(self, field) -> "LogFoliation":
        if field == self.field:
            return self
        coeffs = tuple(HomogeneousForm(c.poly.to_field(field), c.degree)
                       for c in self.coeffs)
        if not gcd_many([c.poly for c in coeffs]).is_constant():
            raise DegenerateInputError(
                "bad reduction: coefficients gained a common factor modulo the prime")
        return LogFoliation(coeffs, self.degree)


def logarithmic_form(W: WeightedFunction) -> tuple:
    """Coefficients of the product of the factors times the log derivative.

    Entry a is sum_j mu_j * Fhat_j * dF_j/dx_a with integer-scaled weights;
    the radial contraction equals the scaled total degree times the product
    of the factors.
    """
    comps = weighted_gradient(W)
    if all(c.is_zero() for c in comps):
        raise DegenerateInputError("weights annihilate the differential")
    return tuple(HomogeneousForm.of(c) for c in comps)


def foliation_from_form(coeffs, max_pairs: int | None = None) -> LogFoliation:
    """Clear the coefficient gcd and validate the foliation axioms.

    Requires zero radial contraction, a singular set of codimension at least
    two, and exact integrability of the cleared form.
    """
    polys = [c.poly if isinstance(c, HomogeneousForm) else c for c in coeffs]
    if all(p.is_zero() for p in polys):
        raise DegenerateInputError("zero 1-form")
    field, nv = polys[0].field, polys[0].nvars
    if len(polys) != nv:
        raise FieldMismatchError(
            f"need {nv} coefficients for {nv} variables, got {len(polys)}")
    if not euler_contraction(polys).is_zero():
        raise DegenerateInputError(
            "radial contraction is nonzero: the form does not descend to projective space")
    g = gcd_many(polys)
    if not g.is_constant():
        polys = [p if p.is_zero() else exact_divide(p, g) for p in polys]
    first = next(p for p in polys if not p.is_zero())
    _, lead = first.leading()
    if lead != field.one():
        inv = field.inv(lead)
        polys = [p.scale(inv) for p in polys]
    degs = {p.total_degree() for p in polys if not p.is_zero()}
    if len(degs) != 1:
        raise DegenerateInputError("coefficient degrees differ after clearing")
    coeff_deg = degs.pop()
    if any(not d.is_zero() for d in integrability_defect(polys)):
        raise DegenerateInputError("1-form is not integrable")
    G = groebner(Ideal.of([p for p in polys if not p.is_zero()]), DEGREVLEX,
                 max_pairs=max_pairs)
    if ideal_dimension(G) > nv - 2:
        raise DegenerateInputError(
            "singular set has codimension one: not a foliation after clearing")
    return LogFoliation(tuple(HomogeneousForm(p, coeff_deg if not p.is_zero() else -1)
                              for p in polys),
                        coeff_deg - 1)


def extended_weights(W: WeightedFunction) -> tuple:
    """The weight vector with the negative total degree appended.

    This is the weight datum of the foliation one dimension up: the new
    hyperplane factor carries weight minus the weighted degree sum, which
    must be nonzero.
    """
    total = W.total_degree
    if total == 0:
        raise DegenerateInputError("zero total weighted degree has no extension")
    return tuple(W.weights) + (-total,)


def associated_foliation(W: WeightedFunction, max_pairs: int | None = None) -> LogFoliation:
    """The foliation on P^{n+1} attached to a weighted product on P^n.

    Coefficients are the weighted gradient times the new variable, with last
    entry minus the scaled total degree times the product of the factors.
    """
    if W.total_degree == 0:
        raise DegenerateInputError(
            "zero total weighted degree: the log derivative already lives on P^n")
    field, nv = W.field, W.nvars
    comps = weighted_gradient(W)
    mu = W.integer_weights()
    total = sum(m * f.degree for m, f in zip(mu, W.factors))
    lifted = [MultiPoly(field, nv + 1,
                        {exp + (1,): c for exp, c in p.terms.items()})
              for p in comps]
    prod = W.product()
    last = MultiPoly(field, nv + 1,
                     {exp + (0,): c for exp, c in prod.terms.items()})
    last = last.scale(field.neg(field.from_int(total)))
    return foliation_from_form(lifted + [last], max_pairs=max_pairs)


def gauss_map(fol: LogFoliation) -> RationalMapRep:
    """The coefficients read as a rational map to the dual projective space."""
    return RationalMapRep.of(fol.coeffs)


def restrict_to_generic_subspace(fol: LogFoliation, k: int, seed: int,
                                 max_pairs: int | None = None) -> LogFoliation:
    """Pull the foliation back along a random linear embedding of P^k.

    For k >= 2 the degree is preserved for generic embeddings and this is
    asserted, with re-randomization on failure; for k = 1 the result is the
    unique foliation of the projective line.
    """
    n = fol.ambient_dim
    if not 1 <= k < n:
        raise ValueError(f"need 1 <= k < {n}, got {k}")
    field = fol.field
    if not isinstance(field, PrimeField):
        raise DegenerateInputError("generic restriction runs over a prime field")
    stream = SeedStream(seed)
    polys = fol.polys()
    failure = "no draw accepted"
    for _ in range(_RESTRICT_BUDGET):
        matrix = [[random_scalar(field, stream) for _ in range(k + 1)]
                  for _ in range(n + 1)]
        cols = [[matrix[r][c] for r in range(n + 1)] for c in range(k + 1)]
        if rank(cols, field) != k + 1:
            failure = "rank-deficient embedding matrix"
            continue
        images = [MultiPoly.from_terms(
            field, k + 1,
            ((tuple(1 if t == c else 0 for t in range(k + 1)), matrix[r][c])
             for c in range(k + 1) if matrix[r][c] != field.zero()))
            for r in range(n + 1)]
        pulled_coeffs = [p.substitute(images) for p in polys]
        restricted = []
        for j in range(k + 1):
            acc = MultiPoly.zero(field, k + 1)
            for r in range(n + 1):
                if matrix[r][j] != field.zero():
                    acc = acc + pulled_coeffs[r].scale(matrix[r][j])
            restricted.append(acc)
        if all(p.is_zero() for p in restricted):
            failure = "subspace is invariant"
            continue
        try:
            out = foliation_from_form(restricted, max_pairs=max_pairs)
        except DegenerateInputError as exc:
            failure = str(exc)
            continue
        if k >= 2 and out.degree != fol.degree:
            failure = f"degree dropped from {fol.degree} to {out.degree}"
            continue
        return out
    raise GenericityError(
        f"generic restriction failed after {_RESTRICT_BUDGET} draws: {failure}")


def e_degree(fol: LogFoliation, k: int, i: int, trials: int = DEFAULT_TRIALS,
             seed: int = 0, field=None, max_pairs: int | None = None) -> DegreeReport:
    """deg_i of the Gauss map of the foliation restricted to a generic P^k."""
    n = fol.ambient_dim
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= {n}, got {k}")
    if not 0 <= i <= k - 1:
        raise ValueError(f"need 0 <= i <= {k - 1}, got {i}")
    if field is None:
        field = fol.field
    if isinstance(fol.field, RationalField):
        fol = fol.to_field(field)
    elif fol.field != field:
        raise FieldMismatchError("foliation is over a different prime field")
    master = SeedStream(seed)
    restrict_seed = master.child_seed()
    degree_seed = master.child_seed()
    if k < n:
        fol = restrict_to_generic_subspace(fol, k, restrict_seed, max_pairs=max_pairs)
    return map_degree(gauss_map(fol), i, trials=trials, seed=degree_seed,
                      field=field, max_pairs=max_pairs)


def singular_scheme_degree_p2(fol: LogFoliation, max_pairs: int | None = None) -> int:
    """Degree of the singular scheme of a plane foliation.

    The three coefficients must cut a zero-dimensional projective scheme;
    the value is the stabilized Hilbert function of the coefficient ideal,
    detected by three equal consecutive values.
    """
    if fol.ambient_dim != 2:
        raise DegenerateInputError("singular scheme degree is computed on the plane only")
    polys = [p for p in fol.polys() if not p.is_zero()]
    G = groebner(Ideal.of(polys), DEGREVLEX, max_pairs=max_pairs)
    if ideal_dimension(G) > 1:
        raise DegenerateInputError("singular scheme has positive dimension")
    lead = G.lead_exps
    values = []
    for t in range(0, 400):
        count = 0
        for a in range(t + 1):
            for b in range(t - a + 1):
                m = (a, b, t - a - b)
                if not any(all(l <= e for l, e in zip(lm, m)) for lm in lead):
                    count += 1
        values.append(count)
        if len(values) >= 3 and values[-1] == values[-2] == values[-3]:
            return values[-1]
    raise DegenerateInputError("Hilbert function failed to stabilize")


def expected_plane_singular_degree(degree: int) -> int:
    """Chern-number total d^2 + d + 1 for a degree-d plane foliation."""
    return degree * degree + degree + 1
