from collections import Counter

import pytest

from glring.config import RunConfig
from glring.corpus import (NON_GLR_TABLES, analyze, full_corpus, glr_positive_family, monic_moduli,
                           poly_specs, small_corpus)
from glring.dsl import parse_spec
from glring.errors import SizeCapExceeded
from glring.ring import predicted_size


def test_monic_moduli():
    assert list(monic_moduli(2, 1)) == [(0, 1), (1, 1)]
    assert len(list(monic_moduli(3, 2))) == 9
    assert all(m[-1] == 1 for m in monic_moduli(5, 3, (0, 1)))


def test_poly_family_size():
    specs = poly_specs()
    # p=2: 2+4+8+16, p=3: 3+9+27+81, p=5: 5+25 plus 8+16 binary-coefficient moduli
    assert len(specs) == 30 + 120 + 30 + 24
    assert len(set(specs)) == len(specs)


def test_full_corpus_shape():
    corpus = full_corpus()
    names = [e.name for e in corpus]
    assert len(names) == len(set(names))
    families = Counter(e.family for e in corpus)
    assert families["cyclic"] == 64
    assert families["table"] == len(NON_GLR_TABLES)
    assert families["matrix"] >= 10
    for required in ("Z6", "Z12", "Z8", "Z4 x Z9", "M2(GF(2))", "M2(GF(2)[x]/(x^2))"):
        assert required in names
    assert all((predicted_size(e.spec) or 0) <= 4096 for e in corpus)


def test_corpus_respects_element_cap():
    small = full_corpus(max_elements=64)
    assert all(predicted_size(e.spec) <= 64 for e in small if e.family in ("matrix", "product"))


def test_positive_family_contents():
    names = {str(s) for s in glr_positive_family()}
    assert len(glr_positive_family()) == len(names)
    assert len(small_corpus()) == 11


@pytest.mark.parametrize("text", ["Z12", "Z4 x Z9", "GF(2)[x]/(x^3)", "M2(GF(2))"])
def test_analyze_glr(text):
    out = analyze(parse_spec(text))
    assert out["is_glr"]
    assert all(out["checks"].values()), out["checks"]
    assert {"decomposition", "duality", "galois", "distributivity"} <= set(out["checks"])


@pytest.mark.parametrize("text", NON_GLR_TABLES)
def test_analyze_non_glr_has_witness(text):
    out = analyze(parse_spec(text))
    assert not out["is_glr"]
    assert out["checks"]["has_witness"]
    assert all(out["checks"].values())


def test_analyze_respects_config_caps():
    with pytest.raises(SizeCapExceeded):
        analyze(parse_spec("Z64"), RunConfig(max_elements=32))
