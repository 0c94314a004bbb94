from __future__ import annotations

import gzip
from functools import lru_cache
from pathlib import Path

import pytest

from pdpoly.graphs import Graph, from_graph6

CATALOG_DIR = Path(__file__).parent / "data" / "catalogs"

# published numbers of graphs up to isomorphism, by order
CATALOG_SIZES = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346, 9: 274668}


@lru_cache(maxsize=None)
def catalog_keys(n: int) -> tuple[str, ...]:
    plain = CATALOG_DIR / f"graph{n}.g6"
    packed = CATALOG_DIR / f"graph{n}.g6.gz"
    if plain.exists():
        text = plain.read_text()
    elif packed.exists():
        text = gzip.decompress(packed.read_bytes()).decode()
    else:
        pytest.skip(f"catalog file for n={n} not present; run tools/build_catalogs.py")
    return tuple(ln for ln in text.split() if ln)


@lru_cache(maxsize=None)
def catalog_graphs(n: int) -> tuple[tuple[str, Graph], ...]:
    return tuple((key, from_graph6(key)) for key in catalog_keys(n))


@pytest.fixture(scope="session")
def catalogs():
    return catalog_graphs
