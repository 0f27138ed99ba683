"""Exact-arithmetic splitting certificates over Q and F2(u).

The package certifies, place by place, that the quadratic family
X^2 + X - gamma(y, t)^2 with gamma(Y, T) = YT/(Y^2 + T) splits in every
completion and real closure attached to a finite set S of places, while
staying irreducible over the base field -- machine-checkable instances
of the construction showing fields of totally S-adic numbers are not
Hilbertian.
"""

from .algebra import (Poly, RatFunc, poly_derivative, poly_gcd,
                      poly_square_root, poly_square_root_check,
                      ratfunc_valuation)
from .artin_schreier import (artin_schreier_preimage,
                             artin_schreier_root_in_f2u)
from .core import (GammaValue, IrreducibilityOverK, Lemma1Certificate,
                   Lemma2Certificate, MembershipResult, SplitEvidence,
                   gamma_eval, gamma_ratfunc, gamma_symmetry_check,
                   is_totally_S_adic, lemma1_certify, lemma2_certify,
                   specialization_irreducible_over_k, specialize_f,
                   splits_at_place)
from .errors import (CertificateFailure, InputError, PreconditionError,
                     TotSadicError)
from .fields import (F2U, GF, GF2, QQ, F2uElement, FFElement, Rational)
from .padic import (DEFAULT_PRECISION, LiftResult, LocalApprox,
                    LocalSquareCheck, count_roots_local_oracle, embed,
                    hensel_lift_simple_root, is_square_local)
from .places import (Place, PlaceSet, find_uniformizer,
                     is_nonsquare_in_base, parse_place, parse_place_set,
                     sign_at_real_place, val_at_place)
from .realroots import (SturmChain, count_real_roots, quadratic_splits_real,
                        sturm_chain)
from .witness import (SampleSpec, SampleRecord, WitnessReport,
                      build_samples, report_from_json, theorem_witness)

__version__ = "0.1.0"
