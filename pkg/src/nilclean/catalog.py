"""Built-in rings and the survey corpus.

The named rings live as JSON files (ring serialization format) next to a
manifest recording their provenance and expected predicate outcomes; they
are loaded once at first use.  Set ``NILCLEAN_CATALOG_DIR`` to load the
catalog from a different directory.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .rings import (
    RingError,
    RingTable,
    make_gf,
    make_matrix_ring,
    make_product,
    make_zn,
    ring_from_json,
)

ENV_CATALOG_DIR = "NILCLEAN_CATALOG_DIR"

# Fields and matrix rings the survey draws from, in the order they appear.
SURVEY_FIELDS = ((2, 2), (2, 3), (3, 2), (5, 2))
SURVEY_MATRIX_BASES = (2, 3)


class UnknownNameError(RingError):
    pass


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    ring: RingTable
    provenance: str
    expected: dict[str, bool] = field(default_factory=dict)


def build_example35() -> RingTable:
    """The 4-element ring given by explicit Cayley tables.

    The letters a, b, c, d map to indices 0..3; the addition table forces
    a = 0 (identity row) and the multiplication table forces b = 1.
    """
    add = [
        [0, 1, 2, 3],
        [1, 0, 3, 2],
        [2, 3, 0, 1],
        [3, 2, 1, 0],
    ]
    mul = [
        [0, 0, 0, 0],
        [0, 1, 2, 3],
        [0, 2, 3, 1],
        [0, 3, 1, 2],
    ]
    return RingTable(4, add, mul, 0, 1, "example3.5")


def build_example36() -> RingTable:
    """The 9-element field of matrices [[x, y], [y, x+y]] over Z/3.

    The pair (x, y) has index x + 3*y, so 0 and 1 land at indices 0 and 1
    and the distinguished element c = [[0, 1], [1, 1]] at index 3.
    """
    def idx(x, y):
        return (x % 3) + 3 * (y % 3)

    def unpack(i):
        return i % 3, i // 3

    rng = range(9)
    pairs = [unpack(i) for i in rng]
    add = [
        [idx(x1 + x2, y1 + y2) for (x2, y2) in pairs] for (x1, y1) in pairs
    ]
    mul = [
        [idx(x1 * x2 + y1 * y2, x1 * y2 + y1 * x2 + y1 * y2) for (x2, y2) in pairs]
        for (x1, y1) in pairs
    ]
    neg = [idx(-x, -y) for (x, y) in pairs]
    return RingTable(9, add, mul, 0, 1, "example3.6", neg)


def build_z5() -> RingTable:
    return make_zn(5, label="Z5")


BUILDERS = {
    "example3.5": build_example35,
    "example3.6": build_example36,
    "Z5": build_z5,
}


def catalog_dir() -> Path | None:
    override = os.environ.get(ENV_CATALOG_DIR)
    return Path(override) if override else None


def _load_catalog(directory: Path | None) -> dict[str, CatalogEntry]:
    if directory is not None:
        manifest = json.loads((directory / "manifest.json").read_text())
        read = lambda name: json.loads((directory / name).read_text())
    else:
        data = resources.files(__package__) / "_data"
        manifest = json.loads((data / "manifest.json").read_text())
        read = lambda name: json.loads((data / name).read_text())
    entries = {}
    for item in manifest["entries"]:
        ring = ring_from_json(read(item["file"]))
        entries[item["name"]] = CatalogEntry(
            name=item["name"],
            ring=ring,
            provenance=item["provenance"],
            expected=dict(item.get("expected", {})),
        )
    return entries


_catalog_cache: dict[Path | None, dict[str, CatalogEntry]] = {}


def _catalog() -> dict[str, CatalogEntry]:
    directory = catalog_dir()
    if directory not in _catalog_cache:
        _catalog_cache[directory] = _load_catalog(directory)
    return _catalog_cache[directory]


def catalog_names() -> list[str]:
    return sorted(_catalog())


def get_ring(name: str) -> CatalogEntry:
    catalog = _catalog()
    if name not in catalog:
        known = ", ".join(sorted(catalog))
        raise UnknownNameError(f"unknown ring {name!r}; known names: {known}")
    return catalog[name]


def survey_set(max_order: int) -> list[CatalogEntry]:
    """Deterministic test corpus: Z/n for 2 <= n <= max_order, the survey
    fields and 2x2 matrix rings of order <= max_order, all products
    Z/a x Z/b with a <= b and a*b <= max_order, and the named catalog
    rings (always)."""
    if max_order < 2:
        raise ValueError("max_order must be >= 2")
    entries = []

    def generated(ring: RingTable, provenance: str):
        entries.append(CatalogEntry(ring.label, ring, provenance))

    for n in range(2, max_order + 1):
        generated(make_zn(n), f"Z/{n}")
    for p, k in SURVEY_FIELDS:
        if p**k <= max_order:
            generated(make_gf(p, k), f"GF({p}^{k})")
    for a in range(2, max_order + 1):
        if a * a > max_order:
            break
        for b in range(a, max_order // a + 1):
            generated(make_product(make_zn(a), make_zn(b)), f"Z/{a} x Z/{b}")
    for p in SURVEY_MATRIX_BASES:
        if p**4 <= max_order:
            generated(make_matrix_ring(make_zn(p), 2), f"M2(Z/{p})")
    for name in ("example3.5", "example3.6", "Z5"):
        entries.append(get_ring(name))
    return entries
