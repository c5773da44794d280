"""Known discrepancies between the published formulas and what the code computes.

The CLI attaches these notes to any report that touches an affected case.
"""

from __future__ import annotations

from typing import Optional

from .specmat import Family, FamilySpec

EXAMPLE_N3_PREFACTOR = (
    "Published worked example (A, n=3, a=1, b=3, r=3) prints A^3 as "
    "(1/4)*[[55,234,54],[117,109,117],[54,234,55]]; the 1/4 prefactor is "
    "inconsistent with direct multiplication. The printed integer entries are "
    "exactly A^3 without it."
)
EXAMPLE_N5_PREFACTOR = (
    "Published worked example (A, n=5, a=1, b=3, r=4) prints A^4 with a 1/8 "
    "prefactor; the prefactor is inconsistent with direct multiplication. "
    "The printed integer entries are exactly A^4 without it."
)
MODAL_INVERSE_WEIGHTS = (
    "The published inverse modal matrix (column weights 2,1,1,2,... and "
    "4,2,2,4,... over 2n-2) does not invert the modal matrix. Used instead: "
    "Pinv[k,j] = 2/(n-1) * c_k * w_j * s_j * T_{j-1}(m_k) with endpoint "
    "weights c, w = 1/2, checked against a numeric inverse."
)
EXAMPLE_EIGENVALUE_ORDER = (
    "The worked examples list eigenvalues as diag(1,7,-5,...), a different "
    "order from lambda_k = a + 2b cos((k-1)pi/(n-1)); compare as sets."
)
EVEN_N_EIGENVECTOR_SIGN = (
    "The published eigenvector sign rule (+ for j in {1,2,n-1,n}, (-1)^j "
    "otherwise) only holds for odd n. For even n the components j = n-1, n "
    "carry sign (-1)^(n-1) = -1; the corrected rule is used for every n."
)
DAGGER_VARIANT_HYPOTHESIS = (
    "The published determinant result for A_DAGGER fixes a=1, b=i in its "
    "hypothesis but states cases a=1 (Fibonacci) and a=2 (Pell); both are "
    "exposed as explicit variants."
)

_FIXTURES = {
    (3, 1, 3, 3): EXAMPLE_N3_PREFACTOR,
    (5, 1, 3, 4): EXAMPLE_N5_PREFACTOR,
}


def fixture_note(spec: FamilySpec, r: Optional[int] = None) -> list[str]:
    """Notes for the published worked examples, if ``spec`` (and ``r``) match one."""
    if spec.family is not Family.A or spec.a != 1 or spec.b != 3:
        return []
    notes = []
    if spec.n in (3, 5):
        notes.append(EXAMPLE_EIGENVALUE_ORDER)
    if r is not None and (spec.n, 1, 3, r) in _FIXTURES:
        notes.append(_FIXTURES[(spec.n, 1, 3, r)])
    return notes
