"""Fixture corpus: JSON-lines files of ideals with expected invariants."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Any, Callable, Optional

from .decomposition import (
    MonomialPrime,
    ass_equals_min,
    associated_primes,
    irreducible_decomposition,
    is_equidimensional,
    minimal_primes,
)
from .homology import betti_table
from .ideal import MonomialIdeal
from .localization import localize
from .parser import Transversal, Veronese, parse, to_ideal, transversal_spec
from .polymatroidal import VeroneseParams, transversal_pd, transversal_stability, veronese_pd
from .ring import Ring
from .stability import classify, localized_pd


@dataclass
class Fixture:
    name: str
    ring: Ring
    expr: str
    expect: dict[str, Any] = field(default_factory=dict)

    @classmethod
    def from_json(cls, obj: dict) -> Fixture:
        missing = {"name", "ring", "expr"} - obj.keys()
        if missing:
            raise ValueError(f"fixture is missing {sorted(missing)}")
        ring = obj["ring"]
        ring = Ring(tuple(ring)) if isinstance(ring, list) else Ring.parse(ring)
        return cls(obj["name"], ring, obj["expr"], dict(obj.get("expect", {})))


@dataclass
class Check:
    fixture: str
    key: str
    expected: Any
    actual: Any
    passed: bool

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.fixture}: {self.key} expected={self.expected!r} actual={self.actual!r}"


@dataclass
class CorpusReport:
    checks: list[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "checks": [vars(c) for c in self.checks],
        }


class _Context:
    """Lazily computed facts about one fixture's ideal."""

    def __init__(self, fx: Fixture):
        self.fx = fx
        self.ast = parse(fx.expr, fx.ring)
        self.ideal = to_ideal(self.ast, fx.ring)
        self._report = None

    @property
    def report(self):
        if self._report is None:
            self._report = classify(self.ideal)
        return self._report

    def ideal_of(self, text: str) -> MonomialIdeal:
        return to_ideal(parse(text, self.fx.ring), self.fx.ring)

    def prime_of(self, names: str) -> MonomialPrime:
        return MonomialPrime.from_names(self.fx.ring, names.strip("() ").split(","))


def _same_ideals(ctx: _Context, expected: list[str], actual) -> tuple[bool, list[str]]:
    want = {ctx.ideal_of(s) for s in expected}
    got = {x.as_ideal() for x in actual}
    return want == got, sorted(str(x) for x in actual)


def _includes_ideals(ctx: _Context, expected: list[str], actual) -> tuple[bool, list[str]]:
    want = {ctx.ideal_of(s) for s in expected}
    got = {x.as_ideal() for x in actual}
    return want <= got, sorted(str(x) for x in actual)


def _closed_form_pd(ctx: _Context) -> Optional[int]:
    if isinstance(ctx.ast, Veronese):
        return veronese_pd(VeroneseParams(ctx.ast.d, ctx.ast.bounds))
    if isinstance(ctx.ast, Transversal):
        return transversal_pd(transversal_spec(ctx.ast, ctx.fx.ring)) + 1
    return None


def _closed_form_stable(ctx: _Context):
    if isinstance(ctx.ast, Transversal):
        verdict, reason = transversal_stability(transversal_spec(ctx.ast, ctx.fx.ring))
        return [verdict, reason]
    return None


def _evaluate(ctx: _Context, key: str, expected: Any) -> tuple[bool, Any]:
    scalar: dict[str, Callable[[], Any]] = {
        "pd": lambda: betti_table(ctx.ideal).pd_quotient,
        "depth": lambda: betti_table(ctx.ideal).depth_quotient,
        "dim": lambda: betti_table(ctx.ideal).dim_quotient,
        "stable": lambda: ctx.report.stable,
        "cm": lambda: ctx.report.cm,
        "gcm": lambda: ctx.report.gcm,
        "unmixed": lambda: ctx.report.unmixed,
        "equidimensional": lambda: is_equidimensional(ctx.ideal),
        "ass_eq_min": lambda: ass_equals_min(ctx.ideal),
        "witness": lambda: str(ctx.report.witness) if ctx.report.witness else None,
        "closed_form_pd": lambda: _closed_form_pd(ctx),
        "closed_form_stable": lambda: _closed_form_stable(ctx),
        "ideal": lambda: str(ctx.ideal),
    }
    if key in scalar:
        actual = scalar[key]()
        if key == "witness" and expected is not None and actual is not None:
            return ctx.prime_of(expected) == ctx.report.witness, actual
        if key == "ideal":
            return ctx.ideal_of(expected) == ctx.ideal, actual
        return actual == expected, actual
    if key == "witness_pd":
        w = ctx.report.witness
        actual = localized_pd(ctx.ideal, w) if w is not None else None
        return actual == expected, actual
    if key == "components":
        return _same_ideals(ctx, expected, irreducible_decomposition(ctx.ideal))
    if key == "ass":
        return _same_ideals(ctx, expected, associated_primes(ctx.ideal))
    if key == "ass_includes":
        return _includes_ideals(ctx, expected, associated_primes(ctx.ideal))
    if key == "min":
        return _same_ideals(ctx, expected, minimal_primes(ctx.ideal))
    if key == "localized_pd":
        actual = {at: localized_pd(ctx.ideal, ctx.prime_of(at)) for at in expected}
        return actual == expected, actual
    if key == "localized_ideal":
        ok, actual = True, {}
        for at, text in expected.items():
            loc = localize(ctx.ideal, ctx.prime_of(at))
            actual[at] = str(loc.ideal)
            ok &= to_ideal(parse(text, loc.ring), loc.ring) == loc.ideal
        return ok, actual
    return False, f"unsupported expectation key {key!r}"


def evaluate_fixture(fx: Fixture) -> list[Check]:
    ctx = _Context(fx)
    out = []
    for key in sorted(fx.expect):
        expected = fx.expect[key]
        passed, actual = _evaluate(ctx, key, expected)
        out.append(Check(fx.name, key, expected, actual, bool(passed)))
    return out


def load_fixtures(path: Optional[Path | str] = None) -> list[Fixture]:
    """Read fixtures from a .jsonl file or every .jsonl file in a directory.

    With no path, the bundled example corpus is used.
    """
    if path is None:
        texts = [resources.files("stablepd").joinpath("data/examples.jsonl").read_text()]
    else:
        path = Path(path)
        files = sorted(path.glob("*.jsonl")) if path.is_dir() else [path]
        texts = [f.read_text() for f in files]
    fixtures = []
    for text in texts:
        for lineno, line in enumerate(text.splitlines(), 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            try:
                fixtures.append(Fixture.from_json(json.loads(line)))
            except (json.JSONDecodeError, ValueError) as exc:
                raise ValueError(f"fixture line {lineno}: {exc}") from exc
    return fixtures


def run_fixture_corpus(path: Optional[Path | str] = None) -> CorpusReport:
    fixtures = sorted(load_fixtures(path), key=lambda f: f.name)
    report = CorpusReport()
    for fx in fixtures:
        report.checks.extend(evaluate_fixture(fx))
    return report
