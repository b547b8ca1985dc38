import json

from stablepd.corpus import load_fixtures, run_fixture_corpus


def test_bundled_corpus_passes():
    report = run_fixture_corpus()
    assert report.checks
    assert report.ok, "\n".join(c.line() for c in report.failures)


def test_one_perturbed_expectation_gives_one_failure(tmp_path):
    lines = []
    for fx in load_fixtures():
        obj = {"name": fx.name, "ring": list(fx.ring.names), "expr": fx.expr, "expect": fx.expect}
        if fx.name == "generalized_cm_disjoint_primes":
            obj["expect"] = dict(obj["expect"], pd=2)
        lines.append(json.dumps(obj))
    path = tmp_path / "perturbed.jsonl"
    path.write_text("\n".join(lines) + "\n")
    report = run_fixture_corpus(path)
    assert [(c.fixture, c.key) for c in report.failures] == [("generalized_cm_disjoint_primes", "pd")]


def test_empty_corpus(tmp_path):
    (tmp_path / "empty.jsonl").write_text("")
    report = run_fixture_corpus(tmp_path)
    assert report.checks == [] and report.ok


def test_report_is_ordered_by_fixture_name():
    names = [c.fixture for c in run_fixture_corpus().checks]
    assert names == sorted(names)


def test_unknown_key_fails(tmp_path):
    path = tmp_path / "odd.jsonl"
    path.write_text('{"name": "a", "ring": "x", "expr": "(x)", "expect": {"colour": "red"}}\n')
    report = run_fixture_corpus(path)
    assert not report.ok and "unsupported" in report.checks[0].actual
