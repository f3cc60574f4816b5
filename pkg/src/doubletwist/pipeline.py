"""Classification of double twist knots plus computational evidence.

``classify`` is the closed-form rational-concordance verdict for
K(m, n): unknot iff mn = 0, slice iff |m + n| = 1, rationally slice but
not slice iff n = -m != 0, infinite order otherwise.  ``obstruct``
assembles the supporting computation for one (m, n, p, N) instance:
the intersection form of the definite filling, its determinant against
the branched-cover homology order, the lattice-embedding search (or the
explicit witness for the embeddable families), and signature data.
Evidence never changes the classification; a mismatch is surfaced via
``consistent_with_theorem_a``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from . import embed, forms, knotalg

UNKNOT = "Unknot"
SLICE = "Slice"
RATIONALLY_SLICE_NOT_SLICE = "RationallySliceNotSlice"
INFINITE_ORDER = "InfiniteOrder"

LT_SAMPLE_ANGLES = (Fraction(1, 3), Fraction(1, 2), Fraction(2, 7))


def classify(m, n):
    """Rational concordance class of K(m, n) from the twist parameters."""
    if m * n == 0:
        return UNKNOT
    if abs(m + n) == 1:
        return SLICE
    if m + n == 0:
        return RATIONALLY_SLICE_NOT_SLICE
    return INFINITE_ORDER


def normalize(m, n):
    """Reduce a mixed-sign pair by K(m,n) = K(n,m) and mirroring so that
    m' < 0 < n' and n' >= -m'.  Returns (m', n', mirrored, swapped)."""
    if m * n >= 0:
        raise ValueError("normalize applies to mixed-sign (m, n) only")
    mirrored = swapped = False
    if m > 0:
        m, n = n, m
        swapped = True
    if n < -m:
        m, n = -n, -m
        mirrored = True
        swapped = True
    return m, n, mirrored, swapped


def is_odd_prime_power(p):
    if p < 3 or p % 2 == 0:
        return False
    for q in range(3, p + 1, 2):
        if p % q == 0:
            pk = q
            while pk < p:
                pk *= q
            return pk == p
    return False


def _direct_sum_witness(witness, n_copies):
    d = witness.dim
    total = d * n_copies
    cols = []
    for s in range(n_copies):
        for col in witness.columns:
            big = [0] * total
            for i, x in enumerate(col):
                big[s * d + i] = x
            cols.append(tuple(big))
    return embed.EmbeddingWitness.from_columns(cols)


def _explicit_witness(m, n, p):
    """Closed-form witness for the embeddable families, or None."""
    if n == -m + 1:
        return embed.example_embedding_slice(m, p)
    if n == -m and n >= 2 and p % 2 == 1:
        return embed.example_embedding_rational(m, p)
    return None


@dataclass(frozen=True)
class ObstructionReport:
    params: tuple  # (m, n, p, N)
    classification: str
    signature: int
    lt_signatures: dict  # Fraction angle -> value
    normalized_params: Optional[tuple] = None  # (m', n') when mn < 0
    mirrored: bool = False
    swapped: bool = False
    form_dim: Optional[int] = None
    negative_definite: Optional[bool] = None
    determinant: Optional[int] = None
    homology_order: Optional[int] = None
    det_matches_homology: Optional[bool] = None
    embedding: Optional[embed.SearchOutcome] = None
    algebraic: Optional[dict] = None
    consistent_with_theorem_a: bool = True
    warnings: tuple = field(default_factory=tuple)

    def to_json(self):
        m, n, p, n_copies = self.params
        out = {
            "schema": 1,
            "params": {"m": str(m), "n": str(n), "p": str(p), "N": str(n_copies)},
            "classification": self.classification,
            "signature": str(self.signature),
            "lt_signatures": {str(s): str(v) for s, v in self.lt_signatures.items()},
            "mirrored": self.mirrored,
            "swapped": self.swapped,
            "consistent_with_theorem_A": self.consistent_with_theorem_a,
            "warnings": list(self.warnings),
        }
        if self.normalized_params is not None:
            out["normalized_params"] = [str(x) for x in self.normalized_params]
        if self.form_dim is not None:
            out["form_dim"] = str(self.form_dim)
            out["negative_definite"] = self.negative_definite
            out["determinant"] = str(self.determinant)
            out["homology_order"] = str(self.homology_order)
            out["det_matches_homology"] = self.det_matches_homology
        if self.embedding is not None:
            out["embedding"] = self.embedding.to_json()
        if self.algebraic is not None:
            out["algebraic"] = self.algebraic
        return out


def _signature_evidence(m, n):
    k = knotalg.DoubleTwist(m, n)
    sigma = knotalg.signature(k)
    lt = {s: knotalg.lt_signature(k, s) for s in LT_SAMPLE_ANGLES}
    return sigma, lt


def _algebraic_evidence(m_norm, n_norm):
    if m_norm == -1:
        return {"kind": "twist_knot",
                "classification": knotalg.algebraic_classify(n_norm)}
    delta = knotalg.alexander(knotalg.DoubleTwist(m_norm, n_norm))
    return {"kind": "fox_milnor_probe",
            "c1_factors": knotalg.fox_milnor(delta, 1) is not None,
            "c2_factors": knotalg.fox_milnor(delta, 2) is not None}


def obstruct(m, n, p, N=1, budget=embed.DEFAULT_NODE_BUDGET,
             confirm_with_search=False):
    """Full evidence report for one mixed-sign instance.

    Embeddable targets (n' <= -m' + 1) use the explicit witness
    constructors when they apply; ``confirm_with_search`` additionally
    runs the independent search.  Non-embeddable targets always run the
    exhaustive search under ``budget``.
    """
    if p < 3:
        raise ValueError("p must be >= 3")
    if N < 1:
        raise ValueError("N must be >= 1")
    if m * n >= 0:
        raise ValueError("obstruct applies to mixed-sign (m, n); "
                         "use survey for the signature-only path")
    mp_, np_, mirrored, swapped = normalize(m, n)
    classification = classify(m, n)
    warnings = []
    if not is_odd_prime_power(p):
        warnings.append(
            f"p={p} is not an odd prime power: the matrix is well defined "
            "but the branched-cover obstruction theory requires one")

    base = forms.intersection_form(mp_, np_, p)
    g = forms.direct_sum([base] * N) if N > 1 else base
    neg_def = forms.is_negative_definite(g)
    det = forms.determinant(g)
    delta = knotalg.alexander(knotalg.DoubleTwist(mp_, np_))
    order = knotalg.branched_homology_order(delta, p) ** N
    det_matches = abs(det) == order

    witness = _explicit_witness(mp_, np_, p)
    if witness is not None:
        if N > 1:
            witness = _direct_sum_witness(witness, N)
        assert embed.verify_witness(g, witness)
        outcome = embed.SearchOutcome(embed.FOUND, witness, 0, False)
        if confirm_with_search:
            searched = embed.search_embedding(g, node_budget=budget)
            if searched.status != embed.FOUND:
                warnings.append("independent search disagrees with the "
                                "explicit witness")
            outcome = searched if searched.status == embed.FOUND else outcome
    else:
        outcome = embed.search_embedding(g, node_budget=budget)

    sigma, lt = _signature_evidence(m, n)

    if outcome.status == embed.UNKNOWN:
        embedding_consistent = True
    elif np_ <= -mp_ + 1:
        embedding_consistent = outcome.status == embed.FOUND
    else:
        embedding_consistent = outcome.status == embed.NONE_EXISTS
    consistent = embedding_consistent and sigma == 0 and neg_def

    return ObstructionReport(
        params=(m, n, p, N),
        classification=classification,
        signature=sigma,
        lt_signatures=lt,
        normalized_params=(mp_, np_),
        mirrored=mirrored,
        swapped=swapped,
        form_dim=g.dim,
        negative_definite=neg_def,
        determinant=det,
        homology_order=order,
        det_matches_homology=det_matches,
        embedding=outcome,
        algebraic=_algebraic_evidence(mp_, np_),
        consistent_with_theorem_a=consistent,
        warnings=tuple(warnings),
    )


def _signature_only_report(m, n, p, N):
    classification = classify(m, n)
    sigma, lt = _signature_evidence(m, n)
    if m * n == 0:
        consistent = sigma == 0
    else:
        # like signs: nonvanishing signature certifies infinite order
        consistent = sigma != 0 and classification == INFINITE_ORDER
    return ObstructionReport(
        params=(m, n, p, N),
        classification=classification,
        signature=sigma,
        lt_signatures=lt,
        consistent_with_theorem_a=consistent,
    )


def survey(m_range, n_range, p_list, budget=embed.DEFAULT_NODE_BUDGET, N=1):
    """One report per (m, n, p), in ascending parameter order."""
    reports = []
    for m in sorted(m_range):
        for n in sorted(n_range):
            for p in sorted(p_list):
                if m * n < 0:
                    reports.append(obstruct(m, n, p, N=N, budget=budget))
                else:
                    reports.append(_signature_only_report(m, n, p, N))
    return reports
