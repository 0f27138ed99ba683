"""The quadratic family and its certificates.

Everything here revolves around two displays:

    gamma(Y, T) = Y*T / (Y^2 + T)        f(X, Z) = X^2 + X - Z^2

For a simultaneous uniformizer t of a place set S, ``lemma1_certify``
checks v(gamma(y, t)) > 0 case by case, ``lemma2_certify`` certifies
that f(X, gamma(Y, t)) is irreducible over the rational function field
(discriminant square test away from characteristic 2, valuation parity
of an Artin-Schreier obstruction in characteristic 2), and
``splits_at_place`` certifies that a specialized quadratic splits in the
completion or real closure at one place.  ``is_totally_S_adic`` combines
the per-place checks into a membership test for an algebraic element
given by its minimal polynomial.

Certificates carry enough data to be re-verified without re-deriving
them; the JSON-facing ``evidence`` dicts are built from the exact typed
results and contain only strings, ints, bools and nested dicts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .algebra import (Poly, RatFunc, poly_derivative, poly_gcd,
                      poly_square_root_check)
from .artin_schreier import artin_schreier_preimage, artin_schreier_root_in_f2u
from .errors import InputError, PreconditionError
from .fields import (F2U, QQ, F2uElement, f2_irreducibles, f2_str,
                     f2_valuation)
from .padic import (DEFAULT_PRECISION, ResidueField, hensel_lift_simple_root,
                    is_square_local)
from .parsing import format_element, format_poly, format_ratfunc
from .places import (Place, PlaceSet, rational_is_square, val_at_place)
from .realroots import count_real_roots

POS_INF = math.inf


def _check_t(t, base, allow_boundary: bool):
    if t == base.zero or t == -base.one:
        if not allow_boundary:
            raise InputError(
                "t must avoid 0 and -1 (the reducible boundary);"
                " pass allow_boundary to inspect it")
        return True
    return False


# ---------------------------------------------------------------------------
# gamma
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GammaValue:
    """gamma(y, t) = y*t/(y^2 + t), with degeneracy flags.

    ``value`` is None exactly when y^2 + t = 0; y = 0 gives the value 0
    with the ``y_zero`` flag (the specialization degenerates to X(X+1)).
    """

    y: object
    t: object
    value: object
    degenerate: str      # "none" | "y_zero" | "denominator_zero"

    @property
    def is_defined(self) -> bool:
        return self.value is not None

    def to_json(self, base) -> dict:
        return {
            "y": format_element(base, self.y),
            "t": format_element(base, self.t),
            "value": (None if self.value is None
                      else format_element(base, self.value)),
            "degenerate": self.degenerate,
        }


def gamma_eval(y, t, base=None) -> GammaValue:
    """Evaluate gamma(y, t); rejects t in {0, -1}."""
    base = base or (F2U if isinstance(t, F2uElement) else QQ)
    _check_t(t, base, allow_boundary=False)
    den = y * y + t
    if not den:
        return GammaValue(y, t, None, "denominator_zero")
    value = y * t / den
    return GammaValue(y, t, value, "y_zero" if not y else "none")


def gamma_symmetry_check(y, t) -> bool:
    """Verify gamma(y, t) = gamma(t/y, t) exactly (y != 0, y^2 + t != 0)."""
    if not y:
        raise InputError("y must be nonzero")
    lhs = gamma_eval(y, t)
    rhs = gamma_eval(t / y, t)
    if not (lhs.is_defined and rhs.is_defined):
        raise InputError("gamma undefined at these arguments")
    return lhs.value == rhs.value


def gamma_ratfunc(t, base) -> RatFunc:
    """gamma(Y, t) as a rational function in Y over the base field."""
    one, zero = base.one, base.zero
    num = Poly(base, [zero, t], "Y")            # t*Y
    den = Poly(base, [t, zero, one], "Y")       # Y^2 + t
    return RatFunc(num, den)


# ---------------------------------------------------------------------------
# Lemma 1: positivity of v(gamma(y, t)) when t uniformizes v.
# ---------------------------------------------------------------------------

CASE_Y_UNIT = "v(y)=0"
CASE_Y_NEG = "v(y)<0"
CASE_Y_POS = "v(y)>0"
CASE_Y_ZERO = "y=0"


@dataclass(frozen=True)
class Lemma1Certificate:
    """v(gamma(y, t)) at one place, classified by the valuation of y."""

    place: Place
    case: str
    v_of_gamma: object      # int or +inf
    holds: bool

    def to_json(self) -> dict:
        return {
            "place": str(self.place),
            "case": self.case,
            "v_of_gamma": ("+inf" if self.v_of_gamma == POS_INF
                           else self.v_of_gamma),
            "holds": self.holds,
        }


def lemma1_certify(y, t, v: Place) -> Lemma1Certificate:
    """Certify v(gamma(y, t)) > 0 for a uniformizer t of v.

    The case tag records which branch of the valuation trichotomy of y
    applies; y = 0 gets v(gamma) = +inf by the v(0) convention.
    """
    if not v.is_ultrametric:
        raise InputError("Lemma 1 concerns ultrametric places")
    if val_at_place(t, v) != 1:
        raise PreconditionError(f"t = {t} is not a uniformizer at {v}")
    vy = val_at_place(y, v)
    if vy == POS_INF:
        return Lemma1Certificate(v, CASE_Y_ZERO, POS_INF, True)
    case = CASE_Y_UNIT if vy == 0 else (CASE_Y_NEG if vy < 0 else CASE_Y_POS)
    value = y * t / (y * y + t)
    vg = val_at_place(value, v)
    return Lemma1Certificate(v, case, vg, vg >= 1)


# ---------------------------------------------------------------------------
# Lemma 2: generic irreducibility of f(X, gamma(Y, t)).
# ---------------------------------------------------------------------------

VERDICT_IRREDUCIBLE = "irreducible"
VERDICT_BOUNDARY = "reducible_boundary"
VERDICT_DEGENERATE = "degenerate"


@dataclass(frozen=True)
class Lemma2Certificate:
    """Generic-irreducibility certificate for f(X, gamma(Y, t)).

    Away from characteristic 2 the evidence is the square-root transcript
    of (Y^2+t)^2 + 4(tY)^2; in characteristic 2 it is the pair
    (non-square certificate for t, v_{Y^2+t}(gamma) = -1).  Everything in
    the evidence re-verifies with the algebra operations alone.
    """

    t: object
    characteristic: str     # "!=2" | "=2"
    verdict: str
    evidence: dict

    @property
    def irreducible(self) -> bool:
        return self.verdict == VERDICT_IRREDUCIBLE

    def to_json(self, base) -> dict:
        return {
            "t": format_element(base, self.t),
            "characteristic": self.characteristic,
            "verdict": self.verdict,
            "evidence": self.evidence,
        }


def _f2u_odd_valuation_witness(t: F2uElement):
    """First monic irreducible of GF(2)[u] at which t has odd valuation.

    Returns (mask, valuation) or None; None certifies t is a square,
    since even multiplicities everywhere force square numerator and
    denominator over GF(2).
    """
    max_deg = max(t.num.bit_length(), t.den.bit_length())
    for mask in f2_irreducibles(max_deg):
        w = f2_valuation(t.num, mask) - f2_valuation(t.den, mask)
        if w % 2:
            return mask, w
    return None


def lemma2_certify(t, base, allow_boundary: bool = False) -> Lemma2Certificate:
    """Certify f(X, gamma(Y, t)) irreducible over the function field.

    Characteristic != 2: reducibility is equivalent to
    (Y^2+t)^2 + 4(tY)^2 being a square, which happens exactly at the
    boundary t in {0, -1} (guarded; relax with allow_boundary).
    Characteristic 2: t must be a non-square, Y^2+t is then irreducible,
    and v_{Y^2+t}(gamma(Y, t)) = -1 is odd, so a root of
    X^2 + X + gamma(Y, t) would need half-integral valuation.
    """
    if base.characteristic == 0:
        boundary = _check_t(t, base, allow_boundary)
        one = base.one
        ysq_t = Poly(base, [t, base.zero, one], "Y")
        ty = Poly(base, [base.zero, t], "Y")
        h = ysq_t * ysq_t + base.from_int(4) * (ty * ty)
        check = poly_square_root_check(h)
        evidence = {
            "polynomial": format_poly(h),
            "candidate": None if check.candidate is None
            else format_poly(check.candidate),
            "residual": None if check.residual is None
            else format_poly(check.residual),
            "reason": check.reason,
        }
        if check.is_square:
            assert boundary, "square discriminant away from t in {0,-1}"
            evidence["square_root"] = format_poly(check.root)
            return Lemma2Certificate(t, "!=2", VERDICT_BOUNDARY, evidence)
        return Lemma2Certificate(t, "!=2", VERDICT_IRREDUCIBLE, evidence)

    # characteristic 2
    if not isinstance(t, F2uElement):
        raise InputError("characteristic-2 certification expects F2(u)")
    _check_t(t, base, allow_boundary)
    witness = _f2u_odd_valuation_witness(t)
    if witness is None:
        root = t.sqrt()
        if not allow_boundary:
            raise PreconditionError(
                f"t = {t} is a square in F2(u) (= ({root})^2);"
                " Lemma 2 requires a non-square")
        return Lemma2Certificate(t, "=2", VERDICT_DEGENERATE, {
            "reason": "t is a square in F2(u)",
            "square_root": str(root),
        })
    mask, w = witness
    gamma_t = gamma_ratfunc(t, base)
    ysq_t = Poly(base, [t, base.zero, base.one], "Y")
    from .algebra import ratfunc_valuation

    vg = ratfunc_valuation(gamma_t, ysq_t)
    assert vg == -1
    return Lemma2Certificate(t, "=2", VERDICT_IRREDUCIBLE, {
        "nonsquare_witness": {"place_polynomial": f2_str(mask),
                              "valuation": w},
        "modulus": format_poly(ysq_t),
        "gamma": format_ratfunc(gamma_t),
        "gamma_valuation": vg,
        "conclusion": "a root of X^2+X+gamma would need valuation -1/2",
    })


# ---------------------------------------------------------------------------
# Specialization and per-place splitting.
# ---------------------------------------------------------------------------

def specialize_f(y, t, base=None) -> Poly:
    """The specialized quadratic X^2 + X - gamma(y, t)^2 over the base."""
    base = base or (F2U if isinstance(t, F2uElement) else QQ)
    gv = gamma_eval(y, t, base)
    if not gv.is_defined:
        raise InputError(f"gamma({y}, {t}) is undefined (y^2 + t = 0)")
    c = gv.value
    return Poly(base, [-(c * c), base.one, base.one], "X")


@dataclass(frozen=True)
class SplitEvidence:
    """Per-place splitting verdict with re-checkable evidence.

    ``splits`` is True/False when certified, None when the place check is
    outside the decisive cases (only reachable in characteristic 2 with a
    negative even-valuation Artin-Schreier constant, which the theorem
    pipeline never produces).
    """

    place: Place
    method: str
    splits: bool | None
    evidence: dict

    def to_json(self) -> dict:
        return {
            "place": str(self.place),
            "method": self.method,
            "splits": self.splits,
            "evidence": self.evidence,
        }


def _reduction_is_x_x_plus_1(q: Poly, v: Place) -> bool:
    rf = ResidueField(v)
    try:
        reduced = rf.poly_reduce(q)
    except PreconditionError:
        return False
    if len(reduced) != 3:
        return False
    want = [0, rf.reduce(q.field.one), rf.reduce(q.field.one)]
    return reduced == want


def _split_real(q: Poly) -> SplitEvidence:
    place = Place.real()
    b, c = q.coefficient(1), q.coefficient(0)
    disc = b * b - 4 * c
    if disc == 0:
        root = -b / 2
        return SplitEvidence(place, "rational_double_root", True, {
            "discriminant": "0",
            "double_root": str(root),
        })
    count = count_real_roots(q)
    return SplitEvidence(place, "sturm_count", count == 2, {
        "discriminant": str(disc),
        "real_roots": count,
    })


def _split_padic(q: Poly, v: Place, precision: int) -> SplitEvidence:
    b, c = q.coefficient(1), q.coefficient(0)
    disc = b * b - 4 * c
    if disc == 0:
        return SplitEvidence(v, "rational_double_root", True, {
            "discriminant": "0",
            "double_root": str(-b / 2),
        })
    check = is_square_local(disc, v, precision)
    evidence = {"discriminant": str(disc), "square_check": check.to_json()}
    if _reduction_is_x_x_plus_1(q, v):
        assert check.is_square, "X(X+1) reduction must split"
        lifts = [hensel_lift_simple_root(q, 0, v, precision),
                 hensel_lift_simple_root(q, v.p - 1, v, precision)]
        evidence["reduction"] = "X(X+1)"
        evidence["lifts"] = [lift.to_json() for lift in lifts]
    return SplitEvidence(v, "discriminant_square", check.is_square, evidence)


def _split_char2(q: Poly, v: Place, precision: int,
                 artin_schreier_shift=None) -> SplitEvidence:
    rf = ResidueField(v)
    b, c = q.coefficient(1), q.coefficient(0)
    if not b:
        raise PreconditionError(
            "X^2 + c is inseparable in characteristic 2; require b != 0")
    if artin_schreier_shift is not None:
        s = artin_schreier_shift
        shifted = q.compose(Poly(q.field, [s, q.field.one], "X"))
        if shifted.coefficient(1) != q.field.one:
            raise InputError("shift does not produce an Artin-Schreier form")
        alpha = shifted.coefficient(0)
        transform = {"kind": "shift", "shift": str(s),
                     "note": "roots of q are shift + roots of X^2+X+alpha"}
        g = shifted
    else:
        alpha = c / (b * b)
        transform = {"kind": "scale", "factor": str(b),
                     "note": "roots of q are factor * roots of X^2+X+alpha"}
        g = Poly(q.field, [alpha, q.field.one, q.field.one], "X")
    w = val_at_place(alpha, v)
    evidence = {"artin_schreier_constant": str(alpha),
                "constant_valuation": "+inf" if w == POS_INF else w,
                "transform": transform}
    if w == POS_INF or w > 0:
        lifts = [hensel_lift_simple_root(g, 0, v, precision),
                 hensel_lift_simple_root(g, 1, v, precision)]
        evidence["reduction"] = "X(X+1)"
        evidence["lifts"] = [lift.to_json() for lift in lifts]
        return SplitEvidence(v, "artin_schreier_lift", True, evidence)
    if w == 0:
        reduced = rf.poly_reduce(g)
        roots = [r for r in rf.elements()
                 if rf.poly_eval(reduced, r) == 0]
        evidence["residue_roots"] = roots
        if roots:
            lifts = [hensel_lift_simple_root(g, r, v, precision)
                     for r in roots]
            evidence["lifts"] = [lift.to_json() for lift in lifts]
            return SplitEvidence(v, "artin_schreier_lift", True, evidence)
        evidence["reason"] = ("reduction is irreducible over the"
                              " residue field")
        return SplitEvidence(v, "artin_schreier_lift", False, evidence)
    if w % 2:
        evidence["reason"] = ("a root would need valuation"
                              f" {w}/2, impossible")
        return SplitEvidence(v, "valuation_parity", False, evidence)
    evidence["reason"] = ("negative even valuation: outside the decisive"
                          " cases of this engine")
    return SplitEvidence(v, "undecided", None, evidence)


def splits_at_place(q: Poly, v: Place,
                    precision: int = DEFAULT_PRECISION,
                    artin_schreier_shift=None) -> SplitEvidence:
    """Certify whether a monic quadratic splits at one place.

    Real place: exact Sturm count (a rational double root also counts as
    split).  p-adic: the discriminant-square criterion, with Hensel lift
    witnesses attached whenever the reduction is X(X+1).  F2(u) places:
    Hensel lifting on the Artin-Schreier normal form; when the pipeline
    passes the gamma value as ``artin_schreier_shift``, the lifted form
    is X^2 + X + gamma itself and its digit expansions go into the
    evidence.
    """
    if q.degree != 2:
        raise InputError(f"expected a quadratic, got degree {q.degree}")
    if not q.is_monic():
        raise InputError("expected a monic quadratic")
    if v.base_field is not q.field:
        raise InputError(f"place {v} and polynomial field {q.field.name}"
                         " do not match")
    if v.kind == "real":
        return _split_real(q)
    if v.kind == "padic":
        return _split_padic(q, v, precision)
    return _split_char2(q, v, precision, artin_schreier_shift)


# ---------------------------------------------------------------------------
# Irreducibility of the specialization over the base field K.
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class IrreducibilityOverK:
    """Whether X^2 + X - c^2 stays irreducible over the base field."""

    irreducible: bool
    evidence: dict

    def to_json(self) -> dict:
        return {"irreducible": self.irreducible, "evidence": self.evidence}


def specialization_irreducible_over_k(c, base) -> IrreducibilityOverK:
    """Decide irreducibility of X^2 + X - c^2 over Q or F2(u), exactly.

    Over Q: the discriminant 1 + 4c^2 is a square iff the polynomial is
    reducible.  Over F2(u): reducible iff c^2 = b^2 + b for some rational
    function b, decided by the complete Artin-Schreier solver.
    """
    if base.characteristic == 0:
        disc = 1 + 4 * c * c
        square = rational_is_square(disc)
        n, d = disc.numerator, disc.denominator
        return IrreducibilityOverK(not square, {
            "discriminant": str(disc),
            "is_rational_square": square,
            "isqrt_check": f"isqrt({n})^2 == {n}: {math.isqrt(n)**2 == n},"
                           f" isqrt({d})^2 == {d}: {math.isqrt(d)**2 == d}",
        })
    root = artin_schreier_root_in_f2u(c * c)
    if root is None:
        return IrreducibilityOverK(True, {
            "artin_schreier_equation": f"b^2+b = ({c})^2",
            "solvable_in_F2u": False,
        })
    return IrreducibilityOverK(False, {
        "artin_schreier_equation": f"b^2+b = ({c})^2",
        "solvable_in_F2u": True,
        "root": str(root),
    })


# ---------------------------------------------------------------------------
# Membership: the minimal polynomial splits at every place of S.
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MembershipResult:
    """Per-place splitting evidence for one minimal polynomial.

    ``member`` is True when every place certifies a full split, False as
    soon as one place certifies a failure, and None when no place fails
    but some check is undecided.
    """

    member: bool | None
    evidence: tuple     # of SplitEvidence

    def to_json(self) -> dict:
        return {
            "member": self.member,
            "evidence": [e.to_json() for e in self.evidence],
        }


def _residue_poly_derivative(rf: ResidueField, coeffs: list) -> list:
    out = []
    for i in range(1, len(coeffs)):
        acc = 0
        for _ in range(i):
            acc = rf.add(acc, coeffs[i])
        out.append(acc)
    while out and out[-1] == 0:
        out.pop()
    return out


def _residue_poly_mod(rf: ResidueField, a: list, b: list) -> list:
    a = list(a)
    inv_lead = None
    while len(a) >= len(b) > 0:
        if inv_lead is None:
            if rf.place.kind == "padic":
                inv_lead = pow(b[-1], -1, rf.place.p)
            else:
                from .fields import f2_inv_mod
                inv_lead = f2_inv_mod(b[-1], rf.place.poly_mask)
        factor = rf.mul(a[-1], inv_lead)
        shift = len(a) - len(b)
        for i, bc in enumerate(b):
            a[shift + i] = rf.add(a[shift + i],
                                  rf.mul(_residue_neg(rf, factor), bc))
        while a and a[-1] == 0:
            a.pop()
    return a


def _residue_neg(rf: ResidueField, x: int) -> int:
    if rf.place.kind == "padic":
        return (-x) % rf.place.p
    return x


def _residue_squarefree(rf: ResidueField, coeffs: list) -> bool:
    d = _residue_poly_derivative(rf, coeffs)
    if not d:
        return False
    a, b = list(coeffs), d
    while b:
        a, b = b, _residue_poly_mod(rf, a, b)
    return len(a) == 1


def _split_deep(m: Poly, v: Place, precision: int) -> SplitEvidence:
    """Splitting for degree > 2: simple residue roots must cover the degree.

    After a monic integrality-normalizing substitution X -> X/pi^k the
    polynomial reduces mod v; a squarefree reduction mirrors the
    factorization over the completion, so d distinct residue roots
    certify a full split and fewer certify a failure.  A non-squarefree
    reduction stays undecided rather than guessing.
    """
    d = int(m.degree)
    pi = v.uniformizer()
    k = 0
    for i in range(d):
        w = val_at_place(m.coefficient(i), v)
        if w != POS_INF and w < 0:
            k = max(k, -(int(w) // (d - i)))   # ceil(-w / (d-i))
    scaled = Poly(m.field,
                  [m.coefficient(i) * pi ** (k * (d - i)) for i in range(d)]
                  + [m.field.one], "X")
    rf = ResidueField(v)
    reduced = rf.poly_reduce(scaled)
    evidence = {"normalization_power": k,
                "normalized": format_poly(scaled)}
    if not _residue_squarefree(rf, reduced):
        evidence["reason"] = "reduction is not squarefree; undecided"
        return SplitEvidence(v, "simple_root_count", None, evidence)
    roots = [r for r in rf.elements() if rf.poly_eval(reduced, r) == 0]
    evidence["residue_roots"] = roots
    if len(roots) == d:
        lifts = [hensel_lift_simple_root(scaled, r, v, precision)
                 for r in roots]
        evidence["lifts"] = [lift.to_json() for lift in lifts]
        return SplitEvidence(v, "simple_root_count", True, evidence)
    evidence["reason"] = (f"only {len(roots)} of {d} roots in the residue"
                          " field; the squarefree reduction mirrors the"
                          " factorization over the completion")
    return SplitEvidence(v, "simple_root_count", False, evidence)


def is_totally_S_adic(m: Poly, S: PlaceSet,
                      precision: int = DEFAULT_PRECISION) -> MembershipResult:
    """Does the minimal polynomial split completely at every place of S?

    Degree 1 is trivially split; real places count real roots; quadratics
    go through ``splits_at_place``; higher degrees are decided by simple
    residue-root counting and may return an undecided verdict (never a
    silent False).
    """
    if m.field is not S.base:
        raise InputError("polynomial and place set over different fields")
    if m.degree < 1:
        raise InputError("minimal polynomial must have degree >= 1")
    if poly_gcd(m, poly_derivative(m)).degree > 0:
        raise InputError("minimal polynomial must be squarefree")
    mc = m.monic()
    d = int(m.degree)
    evidence = []
    for v in S:
        if v.kind == "real":
            if d == 1:
                evidence.append(SplitEvidence(v, "linear", True,
                                              {"reason": "degree 1"}))
                continue
            count = count_real_roots(mc)
            evidence.append(SplitEvidence(v, "sturm_count", count == d, {
                "real_roots": count, "degree": d}))
        elif d == 1:
            evidence.append(SplitEvidence(v, "linear", True,
                                          {"reason": "degree 1"}))
        elif d == 2:
            evidence.append(splits_at_place(mc, v, precision))
        else:
            evidence.append(_split_deep(mc, v, precision))
    verdicts = [e.splits for e in evidence]
    if any(s is False for s in verdicts):
        member = False
    elif any(s is None for s in verdicts):
        member = None
    else:
        member = True
    return MembershipResult(member, tuple(evidence))
