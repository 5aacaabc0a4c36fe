import dataclasses
import json

import pytest

from permgraph.analysis import INF, contains_p2
from permgraph.group import build_group, groups_isomorphic
from permgraph.harness import (
    VERIFIERS,
    HarnessConfig,
    abelian_invariant_factors,
    build_corpus,
    classify_types,
    partitions,
    reports_to_json,
    run_all,
    verify_corollary_equivalences,
    verify_main_theorem,
    verify_totally_disconnected,
)
from permgraph.isomorphism import is_isomorphic
from permgraph.named import make_named

import oracles


@pytest.fixture(scope="module")
def small():
    return build_corpus(48)


def record(corpus, spec):
    for r in corpus.records:
        if r.spec == spec:
            return r
    raise KeyError(spec)


def test_partitions():
    assert list(partitions(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    for k in range(10):
        assert len(list(partitions(k))) == oracles.partition_count(k)


def test_invariant_factors():
    assert abelian_invariant_factors(8) == [(8,), (4, 2), (2, 2, 2)]
    assert abelian_invariant_factors(12) == [(12,), (6, 2)]
    assert sorted(abelian_invariant_factors(36)) == [(6, 6), (12, 3), (18, 2), (36,)]
    for n in range(2, 200):
        facs = abelian_invariant_factors(n)
        assert len(facs) == oracles.abelian_class_count(n)
        for f in facs:
            assert all(f[i + 1] and f[i] % f[i + 1] == 0 for i in range(len(f) - 1))


def test_abelian_count_up_to_16():
    corpus = build_corpus(16)
    abelian = [e for e in corpus if e.family == "abelian"]
    expected = sum(oracles.abelian_class_count(n) for n in range(2, 17))
    assert len(abelian) == expected == 24


def test_abelian_corpus_is_complete_and_distinct():
    corpus = build_corpus(200, HarnessConfig(200, ("abelian",)))
    by_order = {}
    for e in corpus:
        assert e.group.is_abelian
        by_order.setdefault(e.order, []).append(e)
    for n in range(2, 201):
        assert len(by_order.get(n, [])) == oracles.abelian_class_count(n)
    for n in range(2, 33):
        es = by_order[n]
        for i, a in enumerate(es):
            for b in es[i + 1 :]:
                assert not groups_isomorphic(a.group, b.group)


def test_corpus_contents():
    c8 = {str(e.spec) for e in build_corpus(8)}
    assert {"Q 8", "D 8", "M 2 3", "Z 4 x Z 2", "Z 2 x Z 2 x Z 2"} <= c8
    assert "A 4" in {str(e.spec) for e in build_corpus(12)}
    assert all(e.order <= 8 for e in build_corpus(8))


def test_corpus_tags(small):
    e = small.by_spec("D 12")
    assert e.tags == {"family": "dihedral", "is_abelian": False, "is_cyclic": False, "factorization": {"2": 2, "3": 1}}
    assert small.by_spec("Z 12").tags["is_cyclic"]


def test_corpus_deterministic():
    a = [str(e.spec) for e in build_corpus(60)]
    b = [str(e.spec) for e in build_corpus(60)]
    assert a == b and len(a) == len(set(a))


def test_config_validation():
    with pytest.raises(ValueError):
        HarnessConfig(families=("nope",))
    with pytest.raises(ValueError):
        HarnessConfig(max_order=0)


def test_scope_notes():
    c = build_corpus(4096, HarnessConfig(4096, ("modular",)))
    assert any("capped at order 256" in n for n in c.scope_notes)
    assert all(e.order <= 256 for e in c)


@pytest.mark.parametrize(
    "spec,types",
    [
        ("Z 4", {"Z_p^2"}),
        ("Z 27", {"Z_p^3"}),
        ("Z 16", {"Z_p^4"}),
        ("Z 32", {"Z_p^5"}),
        ("Z 15", {"Z_pq"}),
        ("Z 12", {"Z_p^2q"}),
        ("Z 2 x Z 2", {"Z_2xZ_2"}),
        ("Z 3 x Z 3", {"Z_3xZ_3"}),
        ("Z 5 x Z 5", set()),
        ("SD 7 3 1 1", {"Z_q:Z_p"}),
        ("S 3", {"Z_q:Z_p", "S_3"}),
        ("D 6", {"Z_q:Z_p", "S_3"}),
        ("Q 8", {"Q_8"}),
        ("A 4", {"A_4"}),
        ("D 8", set()),
        ("Z 36", set()),
        ("Q 12", set()),
    ],
)
def test_classify_types(spec, types):
    assert classify_types(build_group(spec)) == frozenset(types)


def test_cyclic_complete_examples(small):
    assert is_isomorphic(record(small, "Z 12").graph, make_named("K4"))
    assert is_isomorphic(record(small, "Z 32").graph, make_named("K4"))
    r = record(small, "Z 9")
    assert r.report.vertices == 1 and r.report.edges == 0


def test_main_theorem_examples(small):
    assert record(small, "Z 2 x Z 2").report.recognized_name == "K3"
    assert record(small, "Q 8").report.recognized_name == "K4"
    a4 = record(small, "A 4")
    assert not a4.report.contains_claw and a4.report.claw_free


def test_corollary_examples(small):
    s3 = record(small, "S 3").report
    assert s3.triangle_free and s3.bipartite and s3.complete_bipartite and s3.tree and s3.star
    z8 = record(small, "Z 8")
    assert z8.report.recognized_name == "K2" and not contains_p2(z8.graph.graph)
    assert record(small, "M 3 3").report.girth == 3


def test_totally_disconnected_examples(small):
    assert record(small, "Z 4").report.totally_disconnected
    assert record(small, "Z 25").report.totally_disconnected
    assert not record(small, "D 8").report.totally_disconnected


def test_section4_examples(small):
    z33 = record(small, "Z 3 x Z 3").report
    assert z33.planar and z33.recognized_name == "K4"
    assert not record(small, "Z 4 x Z 2").report.planar
    assert record(small, "M 2 4").report.complete


def test_nonabelian_examples(small):
    d8 = record(small, "D 8").report
    assert not d8.triangle_free and d8.contains_claw and d8.vertices >= 5
    assert record(small, "SD 7 2 1 1").report.recognized_name == "K1,7"
    s4 = record(small, "S 4").report
    assert not s4.triangle_free and s4.contains_claw and s4.vertices >= 5


def test_characterization_findings(small):
    rep = [v for v in VERIFIERS if v.__name__ == "verify_characterizations"][0](small)
    found = {f["item"]: f["groups"] for f in rep.findings}
    assert found["Q_8"] == ["Q 8"]
    assert set(found["S_3"]) == {"D 6", "SD 3 2 1 1", "S 3"}
    assert found["A_4"] == ["A 4"]


def test_all_verifiers_pass_small(small):
    for rep in run_all(small):
        assert rep.passed, (rep.theorem, rep.counterexamples[:5])
        assert rep.checked > 0
        assert all(v["pass"] for v in rep.verdicts)


def test_unicyclic_finding_is_informational(small):
    rep = [v for v in VERIFIERS if v.__name__ == "verify_abelian_proposition"][0](small)
    assert rep.passed
    assert any(f["group"] == "A 4" for f in rep.findings)


def test_verifier_detects_planted_counterexample():
    corpus = build_corpus(20)
    recs = corpus.records
    i = next(k for k, r in enumerate(recs) if r.spec == "Z 16")
    recs[i] = dataclasses.replace(recs[i], types=frozenset())
    rep = verify_main_theorem(corpus)
    assert not rep.passed
    assert {c["group"] for c in rep.counterexamples} == {"Z 16"}
    j = next(k for k, r in enumerate(recs) if r.spec == "Z 9")
    recs[j] = dataclasses.replace(recs[j], report=dataclasses.replace(recs[j].report, totally_disconnected=False))
    assert not verify_totally_disconnected(corpus).passed
    k = next(k for k, r in enumerate(recs) if r.spec == "S 3")
    recs[k] = dataclasses.replace(recs[k], report=dataclasses.replace(recs[k].report, star=False, girth=4))
    rep = verify_corollary_equivalences(corpus)
    assert {c["item"] for c in rep.counterexamples} == {"equivalences", "girth"}


def test_report_json_deterministic_and_threaded():
    a = build_corpus(40)
    b = build_corpus(40, HarnessConfig(40, threads=2))
    ja = reports_to_json(a, run_all(a))
    jb = reports_to_json(b, run_all(b))
    assert ja == jb
    assert ja == reports_to_json(a, run_all(a))
    doc = json.loads(ja)
    assert doc["header"]["max_order"] == 40
    assert [t["theorem"] for t in doc["theorems"]] == [
        "cyclic-complete",
        "main-theorem",
        "corollary-equivalences",
        "totally-disconnected",
        "universal-planar-complete",
        "characterizations",
        "nonabelian-structure",
        "abelian-classification",
        "isomorphism-invariance",
    ]
    assert "duration_s" not in doc["theorems"][0]
    assert "duration_s" in json.loads(reports_to_json(a, run_all(a), timings=True))["theorems"][0]


def test_girth_values_over_corpus(corpus200):
    for r in corpus200.defined():
        assert r.report.girth in (3, INF)
