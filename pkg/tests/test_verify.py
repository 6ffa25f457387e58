from pathcover_lab.verify import SUITES, Check, run_suite


def test_suites_pass_with_small_counts():
    for suite in SUITES:
        checks = run_suite(suite, seed=2, count=40)
        assert checks and all(isinstance(c, Check) for c in checks)
        failed = [c for c in checks if not c.ok]
        assert not failed, failed


def test_lemmas_suite_names_h_family_values():
    names = [c.name for c in run_suite("lemmas", seed=0, count=20)]
    assert any(n.startswith("pc(H1(4,3))") for n in names)


def test_pool_gives_same_report(monkeypatch):
    monkeypatch.setenv("PATHCOVER_LAB_THREADS", "1")
    serial = run_suite("random", seed=5, count=60)
    monkeypatch.setenv("PATHCOVER_LAB_THREADS", "3")
    pooled = run_suite("random", seed=5, count=60)
    assert serial == pooled


def test_failure_detail_names_graph():
    from pathcover_lab.graph import Graph
    from pathcover_lab.verify import _summarize

    c = _summarize("demo", [Graph(2), Graph(3)], [None, "broken"], "graphs")
    assert not c.ok and "B?" in c.detail and "broken" in c.detail
