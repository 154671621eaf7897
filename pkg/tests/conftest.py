# tests/conftest.py
"""
Shared pytest fixtures for the homfly-bounds test suite.

Design principles:
- ALL data is real: diagrams are parsed from PD codes or braid words and every
  polynomial comes out of the engine, never from a stub
- Expected values are hand-derived or taken from the bundled corpus
- The memo cache is cleared around every test so cache statistics are local
- Full-corpus sweeps are tagged @pytest.mark.slow
"""
import os
import sys

import pytest

# ── Path setup ────────────────────────────────────────────────────────────────
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))


# ══════════════════════════════════════════════════════════════════════════════
# PD CONSTANTS  (X(a,b,c,d), slot 0 the incoming under-strand)
# ══════════════════════════════════════════════════════════════════════════════

TREFOIL_PD = "X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)"
MIRROR_TREFOIL_PD = "X(4,2,5,1),X(6,4,1,3),X(2,6,3,5)"
FIGURE_EIGHT_PD = "X(4,2,5,1),X(8,6,1,5),X(6,3,7,4),X(2,7,3,8)"
HOPF_POSITIVE_PD = "X(4,1,3,2),X(2,3,1,4)"
HOPF_NEGATIVE_PD = "X(1,3,2,4),X(3,1,4,2)"
SIX_ONE_PD = "X(1,4,2,5),X(7,10,8,11),X(3,9,4,8),X(9,3,10,2),X(5,12,6,1),X(11,6,12,7)"
KINK_PD = "X(2,1,1,2)"

TREFOIL_HOMFLY = "2*v^2 - v^4 + v^2*z^2"
FIGURE_EIGHT_HOMFLY = "v^-2 - 1 + v^2 - z^2"
HOPF_POSITIVE_HOMFLY = "v*z^-1 - v^3*z^-1 + v*z"
HOPF_NEGATIVE_HOMFLY = "v^-3*z^-1 - v^-1*z^-1 - v^-1*z"


# ══════════════════════════════════════════════════════════════════════════════
# CACHE ISOLATION
# ══════════════════════════════════════════════════════════════════════════════

@pytest.fixture(autouse=True)
def clear_memo_cache():
    from src.memory import clear_cache
    clear_cache()
    yield
    clear_cache()


# ══════════════════════════════════════════════════════════════════════════════
# DIAGRAM FIXTURES
# ══════════════════════════════════════════════════════════════════════════════

@pytest.fixture
def trefoil():
    """Positive (right-handed) trefoil, writhe +3."""
    from src.diagram import parse_pd
    return parse_pd(TREFOIL_PD, name="3_1")


@pytest.fixture
def mirror_trefoil():
    from src.diagram import parse_pd
    return parse_pd(MIRROR_TREFOIL_PD, name="3_1m")


@pytest.fixture
def figure_eight():
    from src.diagram import parse_pd
    return parse_pd(FIGURE_EIGHT_PD, name="4_1")


@pytest.fixture
def hopf_positive():
    from src.diagram import parse_pd
    return parse_pd(HOPF_POSITIVE_PD, name="Hopf+")


@pytest.fixture
def hopf_negative():
    from src.diagram import parse_pd
    return parse_pd(HOPF_NEGATIVE_PD, name="Hopf-")


@pytest.fixture
def six_one():
    """Slice, alternating, homogeneous but not positive."""
    from src.diagram import parse_pd
    return parse_pd(SIX_ONE_PD, name="6_1")


@pytest.fixture
def kink():
    """One-crossing unknot diagram (a positive Reidemeister I loop)."""
    from src.diagram import parse_pd
    return parse_pd(KINK_PD, name="0_1_kink")


@pytest.fixture
def unknot():
    from src.diagram import parse_pd
    return parse_pd("U(1)", name="0_1")


@pytest.fixture
def unlink2():
    from src.diagram import parse_pd
    return parse_pd("U(2)", name="U2")


@pytest.fixture
def cancelling_pair():
    """Two-component unlink drawn as the closure of s1 s1^-1 (not homogeneous)."""
    from src.diagram import parse_braid
    return parse_braid("1 -1", name="unlink2_braid")


# ══════════════════════════════════════════════════════════════════════════════
# CORPUS FIXTURES
# ══════════════════════════════════════════════════════════════════════════════

@pytest.fixture(scope="session")
def corpus():
    """The bundled corpus, loaded and validated once per run."""
    from src.config import DEFAULT_CORPUS_PATH
    from src.harness import load_corpus
    return load_corpus(DEFAULT_CORPUS_PATH)


@pytest.fixture(scope="session")
def corpus_by_name(corpus):
    return {record.name: record for record in corpus}


# ══════════════════════════════════════════════════════════════════════════════
# COLLECTION-TIME CORPUS (for parametrize)
# ══════════════════════════════════════════════════════════════════════════════

def _bundled_records():
    from src.config import DEFAULT_CORPUS_PATH
    from src.harness import load_corpus
    return load_corpus(DEFAULT_CORPUS_PATH, validate=False)


BUNDLED_RECORDS = _bundled_records()


def bundled(predicate=None) -> list:
    """One pytest.param per bundled record accepted by `predicate`, named after the record."""
    return [
        pytest.param(record, id=record.name)
        for record in BUNDLED_RECORDS
        if predicate is None or predicate(record.diagram())
    ]
