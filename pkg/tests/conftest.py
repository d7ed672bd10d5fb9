from __future__ import annotations

import pytest

from nilclean.catalog import CatalogEntry, survey_set
from nilclean.rings import make_matrix_ring, make_zn


@pytest.fixture(scope="session")
def survey30():
    return survey_set(30)


@pytest.fixture(scope="session")
def full_corpus(survey30):
    """survey_set(30) plus the named fields and 2x2 matrix rings that the
    equivalence suite must cover; only M2(Z/3) is not already in the survey."""
    entries = list(survey30)
    present = {entry.name for entry in entries}
    for wanted in ("GF(2^2)", "GF(2^3)", "GF(3^2)", "GF(5^2)", "M2(Z/2)"):
        assert wanted in present, f"survey_set(30) should already contain {wanted}"
    if "M2(Z/3)" not in present:
        ring = make_matrix_ring(make_zn(3), 2)
        entries.append(CatalogEntry(ring.label, ring, "M2(Z/3)"))
    return entries


@pytest.fixture(scope="session")
def small_corpus(full_corpus):
    """Corpus rings of order <= 9, where fully naive cross-products stay cheap."""
    return [entry for entry in full_corpus if entry.ring.order <= 9]
