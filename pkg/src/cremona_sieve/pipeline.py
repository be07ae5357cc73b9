"""Staged enumeration over candidate tuples with full exclusion bookkeeping.

A pipeline starts from a finite integer domain of pairs (lambda, g) or
triples (lambda, g, nu), applies exact filters stage by stage, and records
for every excluded tuple *all* the filters it violates, so each stage report
is an auditable ledger.  Survivors and ledgers are always emitted in
lexicographic order, which makes reports byte-deterministic; tuple evaluation
is pure, so any parallel schedule must reproduce the sequential report.

Two pipelines are built in:

* ``cubic-p6``: classification of cubo-quintic transformations of P^6 with a
  threefold base locus.  Stages: pair domain, surface-section inequalities,
  multidegree inequalities, reduction existence, the log-general branch over
  (lambda, g, nu), the special adjunction branch, the 4-secant bound, and
  finalist labeling.
* ``cubo-cubic-p7``: classification of transformations of P^7 (necessarily
  cubo-cubic with a fourfold base locus), run through the general hyperplane
  section.

Custom runs are configured by a JSON or TOML spec naming the built-in
configuration, domain bounds, threshold choices, and the stage list.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import floor
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from .config import TransformationConfig
from .exactq import Poly
from .filters import (
    Filter,
    adjunction_case_system,
    castelnuovo_bound,
    cremona_degree_filters,
    lebarz_nu_bound,
    livorni_sommese_filters,
    log_general_filters,
)
from .invariants import (
    multidegree_of,
    pluridegrees,
    reduction_table,
    solve_invariants,
)
from .multidegree import admissible_types, multidegree_admissible

IntTuple = tuple[int, ...]


@dataclass(frozen=True)
class CandidateTuple:
    """A candidate (lambda, g[, nu]) with its accumulated exclusion records."""

    lam: int
    g: int
    nu: int | None = None
    status: str = "alive"
    exclusions: tuple[tuple[str, str], ...] = ()

    def __post_init__(self):
        if self.lam < 3 or self.g < 0 or (self.nu is not None and self.nu < 0):
            raise ValueError(f"candidate out of domain: {self.key()}")
        if self.status == "excluded" and not self.exclusions:
            raise ValueError("excluded candidates must carry an exclusion record")

    def key(self) -> IntTuple:
        if self.nu is None:
            return (self.lam, self.g)
        return (self.lam, self.g, self.nu)

    def point(self) -> dict[str, int]:
        p = {"lambda": self.lam, "g": self.g}
        if self.nu is not None:
            p["nu"] = self.nu
        return p


@dataclass(frozen=True)
class StageReport:
    """One sieve stage: inputs, filters, sorted survivors, exclusion ledger."""

    name: str
    mode: str  # "domain" | "filter" | "match" | "check" | "solve"
    filters: tuple[str, ...]
    input_count: int
    survivors: tuple[IntTuple, ...]
    exclusions: tuple[tuple[IntTuple, tuple[str, ...]], ...] = ()
    note: str = ""

    @property
    def output_count(self) -> int:
        return len(self.survivors)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "mode": self.mode,
            "filters": list(self.filters),
            "in": self.input_count,
            "out": self.output_count,
            "survivors": [list(t) for t in self.survivors],
            "exclusions": [
                {"tuple": list(t), "violated": list(names)}
                for t, names in self.exclusions
            ],
            "note": self.note,
        }


@dataclass
class ClassificationReport:
    """Ordered stage reports plus branch outcomes and labeled finalists."""

    pipeline: str
    config: dict
    stages: list[StageReport] = field(default_factory=list)
    branches: dict[str, tuple[IntTuple, ...]] = field(default_factory=dict)
    finalists: list[dict] = field(default_factory=list)

    def stage(self, name: str) -> StageReport:
        for s in self.stages:
            if s.name == name:
                return s
        raise KeyError(f"no stage named {name!r}")

    def to_dict(self) -> dict:
        return {
            "pipeline": self.pipeline,
            "config": self.config,
            "stages": [s.to_dict() for s in self.stages],
            "branches": {k: [list(t) for t in v] for k, v in self.branches.items()},
            "finalists": self.finalists,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def enumerate_candidates(
    name: str,
    domain: Iterable[IntTuple],
    filters: Sequence[Filter],
    mode: str = "filter",
    note: str = "",
    workers: int = 1,
) -> StageReport:
    """Evaluate every filter on every tuple of a finite domain.

    Every violated filter is recorded per excluded tuple (no first-kill
    shortcut), survivors come out sorted, and the result is independent of
    the evaluation schedule; ``workers`` > 1 splits the domain into chunks
    evaluated independently and merged back in canonical order.
    """
    tuples = sorted(set(tuple(t) for t in domain))

    def judge(t: IntTuple) -> CandidateTuple:
        point = {"lambda": t[0], "g": t[1]}
        if len(t) > 2:
            point["nu"] = t[2]
        violated = tuple((name, f.name) for f in filters if not f.passes(point))
        return CandidateTuple(
            lam=t[0],
            g=t[1],
            nu=t[2] if len(t) > 2 else None,
            status="excluded" if violated else "alive",
            exclusions=violated,
        )

    if workers > 1 and len(tuples) > 1:
        from concurrent.futures import ThreadPoolExecutor

        chunk = max(1, len(tuples) // workers)
        batches = [tuples[i : i + chunk] for i in range(0, len(tuples), chunk)]
        with ThreadPoolExecutor(max_workers=workers) as pool:
            records = [
                r
                for batch in pool.map(lambda b: [judge(t) for t in b], batches)
                for r in batch
            ]
        records.sort(key=lambda c: c.key())
    else:
        records = [judge(t) for t in tuples]

    survivors = tuple(c.key() for c in records if c.status == "alive")
    exclusions = tuple(
        (c.key(), tuple(fname for _, fname in c.exclusions))
        for c in records
        if c.status == "excluded"
    )
    return StageReport(
        name=name,
        mode=mode,
        filters=tuple(f.name for f in filters),
        input_count=len(tuples),
        survivors=survivors,
        exclusions=exclusions,
        note=note,
    )


def _domain_report(name: str, tuples: Sequence[IntTuple], rule: str, note: str = "") -> StageReport:
    ordered = tuple(sorted(set(tuple(t) for t in tuples)))
    return StageReport(
        name=name,
        mode="domain",
        filters=(rule,),
        input_count=len(ordered),
        survivors=ordered,
        note=note,
    )


def _nu_root(expression: Poly, lam: int, g: int) -> Fraction | None:
    """Root in nu of an expression linear in nu, at a fixed pair."""
    if expression.degree_in("nu") > 1:
        raise ValueError("equality is not linear in nu")
    a = expression.subs({"lambda": lam, "g": g, "nu": 1}).constant_value() - \
        expression.subs({"lambda": lam, "g": g, "nu": 0}).constant_value()
    b = expression.eval_at({"lambda": lam, "g": g, "nu": 0})
    if a == 0:
        return None
    return -b / a


def _match_nu_system(
    name: str,
    pairs: Sequence[IntTuple],
    system: Sequence[Filter],
    note: str,
) -> StageReport:
    """Tuples (lambda, g, nu >= 0) solving every equality of the system."""
    matches = []
    for lam, g in pairs:
        roots = [_nu_root(f.expression, lam, g) for f in system]
        if any(r is None for r in roots):
            continue
        first = roots[0]
        if all(r == first for r in roots) and first.denominator == 1 and first >= 0:
            matches.append((lam, g, int(first)))
    return StageReport(
        name=name,
        mode="match",
        filters=tuple(f.name for f in system),
        input_count=len(pairs),
        survivors=tuple(sorted(matches)),
        note=note,
    )


def _match_pair_system(
    name: str,
    pairs: Sequence[IntTuple],
    system: Sequence[Filter],
    note: str,
) -> StageReport:
    matches = []
    for lam, g in pairs:
        point = {"lambda": lam, "g": g}
        if all(f.expression.eval_at(point) == 0 for f in system):
            matches.append((lam, g))
    return StageReport(
        name=name,
        mode="match",
        filters=tuple(f.name for f in system),
        input_count=len(pairs),
        survivors=tuple(sorted(matches)),
        note=note,
    )


PIPELINE_CUBIC_P6 = "cubic-p6"
PIPELINE_CUBO_CUBIC_P7 = "cubo-cubic-p7"

BUILTIN_STAGES = {
    PIPELINE_CUBIC_P6: (
        "pairs-domain",
        "surface-inequalities",
        "multidegree-inequalities",
        "reduction-existence",
        "log-general-branch",
        "special-cases-branch",
        "finalists",
    ),
    PIPELINE_CUBO_CUBIC_P7: (
        "admissible-types",
        "pairs-domain",
        "surface-inequalities",
        "multidegree-inequalities",
        "reduction-existence",
        "lebarz-triples",
        "log-general-branch",
        "d3-branch",
        "finalists",
    ),
}

#: Stages that need the surviving pair set of an earlier domain stage.
_NEEDS_PAIRS = {
    "surface-inequalities",
    "multidegree-inequalities",
    "reduction-existence",
    "log-general-branch",
    "special-cases-branch",
    "lebarz-triples",
    "d3-branch",
    "finalists",
}


@dataclass(frozen=True)
class PipelineSpec:
    """A runnable pipeline description: built-in name plus overrides."""

    pipeline: str
    lambda_min: int | None = None
    lambda_max: int | None = None
    d2_threshold: int = 3
    delta_bound: int = 32
    stages: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.pipeline not in BUILTIN_STAGES:
            raise ValueError(
                f"unknown pipeline {self.pipeline!r}; "
                f"known: {tuple(BUILTIN_STAGES)}"
            )
        if self.d2_threshold not in (1, 3):
            raise ValueError("d2 threshold must be 1 or 3")
        if self.lambda_min is not None and self.lambda_min < 3:
            raise ValueError("lambda_min must be at least 3")
        known = BUILTIN_STAGES[self.pipeline]
        for s in self.resolved_stages():
            if s not in known:
                raise ValueError(f"stage {s!r} is not available in {self.pipeline!r}")
        seen: set[str] = set()
        for s in self.resolved_stages():
            if s in _NEEDS_PAIRS and "pairs-domain" not in seen:
                raise ValueError(f"stage {s!r} requires 'pairs-domain' to run first")
            if (
                self.pipeline == PIPELINE_CUBO_CUBIC_P7
                and s == "log-general-branch"
                and "lebarz-triples" not in seen
            ):
                raise ValueError(f"stage {s!r} requires 'lebarz-triples' to run first")
            seen.add(s)

    def resolved_stages(self) -> tuple[str, ...]:
        return self.stages if self.stages is not None else BUILTIN_STAGES[self.pipeline]

    @classmethod
    def from_dict(cls, data: Mapping) -> "PipelineSpec":
        known = {"pipeline", "lambda_min", "lambda_max", "d2_threshold", "delta_bound", "stages"}
        unknown = set(data) - known
        if unknown:
            raise ValueError(f"unknown pipeline-spec keys: {sorted(unknown)}")
        if "pipeline" not in data:
            raise ValueError("pipeline spec must name a built-in pipeline")
        stages = data.get("stages")
        return cls(
            pipeline=data["pipeline"],
            lambda_min=data.get("lambda_min"),
            lambda_max=data.get("lambda_max"),
            d2_threshold=data.get("d2_threshold", 3),
            delta_bound=data.get("delta_bound", 32),
            stages=tuple(stages) if stages is not None else None,
        )

    @classmethod
    def from_file(cls, path: str | Path) -> "PipelineSpec":
        path = Path(path)
        raw = path.read_bytes()
        if path.suffix.lower() == ".toml":
            try:
                import tomllib  # Python >= 3.11
            except ModuleNotFoundError:
                import tomli as tomllib
            data = tomllib.loads(raw.decode("utf-8"))
        else:
            data = json.loads(raw.decode("utf-8"))
        return cls.from_dict(data)


def builtin_pipeline(name: str) -> PipelineSpec:
    """The hard-wired stage list of a built-in pipeline."""
    if name not in BUILTIN_STAGES:
        raise ValueError(f"unknown pipeline {name!r}; known: {tuple(BUILTIN_STAGES)}")
    return PipelineSpec(pipeline=name)


class _Runner:
    """Shared machinery for the two built-in pipelines."""

    def __init__(self, spec: PipelineSpec, workers: int = 1):
        self.spec = spec
        self.workers = workers
        self.cfg = self._make_config()
        self.table = solve_invariants(self.cfg)
        # Threefold-level data: the base locus itself in P^6 mode, its general
        # hyperplane section in P^7 mode.
        self.threefold = self.table if self.table.section is None else self.table.section
        self.reduction = reduction_table(self.threefold)
        self.md = multidegree_of(self.cfg, self.table)
        self.lebarz = lebarz_nu_bound(self.threefold)
        self.pairs: tuple[IntTuple, ...] | None = None
        self.report = ClassificationReport(
            pipeline=spec.pipeline,
            config={
                "n": self.cfg.n,
                "delta1": self.cfg.delta1,
                "delta2": self.cfg.delta2,
                "r": self.cfg.r,
                "mode": self.cfg.mode,
                "lambda_min": self.lambda_min,
                "lambda_max": self.lambda_max,
                "d2_threshold": spec.d2_threshold,
            },
        )

    def _make_config(self) -> TransformationConfig:
        if self.spec.pipeline == PIPELINE_CUBIC_P6:
            return TransformationConfig.cubic_p6()
        return TransformationConfig.cubo_cubic_p7()

    @property
    def lambda_min(self) -> int:
        return self.spec.lambda_min if self.spec.lambda_min is not None else 3

    @property
    def lambda_max(self) -> int:
        cfg = self._make_config()
        return self.spec.lambda_max if self.spec.lambda_max is not None else cfg.lambda_max

    def run(self) -> ClassificationReport:
        for stage in self.spec.resolved_stages():
            getattr(self, "stage_" + stage.replace("-", "_"))()
        return self.report

    def _add(self, report: StageReport) -> StageReport:
        self.report.stages.append(report)
        return report

    # -- stages shared by both pipelines -------------------------------------

    def stage_pairs_domain(self) -> None:
        s = self.cfg.n - self.cfg.r + 1  # ambient dimension of curve sections
        pairs = [
            (lam, g)
            for lam in range(self.lambda_min, self.lambda_max + 1)
            for g in range(0, castelnuovo_bound(lam, s) + 1)
        ]
        self.pairs = self._add(
            _domain_report(
                "pairs-domain",
                pairs,
                rule=f"3<=lambda<={self.lambda_max}, 0<=g<=castelnuovo(lambda,{s})",
                note="finite search domain for (degree, sectional genus)",
            )
        ).survivors

    def stage_surface_inequalities(self) -> None:
        report = enumerate_candidates(
            "surface-inequalities",
            self.pairs,
            livorni_sommese_filters(self.threefold),
            workers=self.workers,
        )
        self.pairs = self._add(report).survivors

    def stage_multidegree_inequalities(self) -> None:
        report = enumerate_candidates(
            "multidegree-inequalities",
            self.pairs,
            cremona_degree_filters(self.md),
            workers=self.workers,
        )
        self.pairs = self._add(report).survivors

    def stage_reduction_existence(self) -> None:
        for case in ("scroll-over-curve", "pre-reduction"):
            self._add(
                _match_pair_system(
                    f"reduction-existence:{case}",
                    self.pairs,
                    adjunction_case_system(case, self.threefold),
                    note="pairs satisfying the equality would have no minimal "
                    "reduction; the list must be empty",
                )
            )

    # -- finalist helpers -----------------------------------------------------

    def _finalist(self, t: IntTuple, branch: str, label: str, checks: dict) -> dict:
        lam, g, nu = t
        point = {"lambda": lam, "g": g, "nu": nu}
        d = [int(p.eval_at(point)) for p in pluridegrees(self.reduction)]
        md = self.md.at(lam, g)
        violations = multidegree_admissible(md)
        return {
            "tuple": list(t),
            "branch": branch,
            "label": label,
            "pluridegrees": d,
            "multidegree": [int(x) for x in md.entries],
            "multidegree_admissible": not violations,
            "invariants": {
                name: int(v) for name, v in self.threefold.at(lam, g).items()
            },
            "checks": checks,
        }


class _CubicP6Runner(_Runner):
    def stage_log_general_branch(self) -> None:
        triples = []
        for lam, g in self.pairs:
            upper = -lam + 2 * g - 3  # equivalent to d1 >= 1
            for nu in range(0, upper + 1):
                triples.append((lam, g, nu))
        current = self._add(
            _domain_report(
                "log-general:triples",
                triples,
                rule="0<=nu<=-lambda+2g-3",
                note="triple domain over surviving pairs; the bound restates d1>=1",
            )
        ).survivors

        lg = log_general_filters(self.reduction, self.spec.d2_threshold)
        hodge = [f for f in lg if f.name == "d1^2>=d2*d0"]
        rest = [f for f in lg if f.name != "d1^2>=d2*d0"]
        current = self._add(
            enumerate_candidates(
                "log-general:hodge", current, hodge, workers=self.workers
            )
        ).survivors
        current = self._add(
            enumerate_candidates(
                "log-general:inequalities", current, rest, workers=self.workers
            )
        ).survivors
        current = self._add(
            enumerate_candidates(
                "log-general:lebarz",
                current,
                [self.lebarz],
                note="4-secant bound on the number of blown-up points",
            )
        ).survivors
        self.report.branches["log-general"] = current

    def stage_special_cases_branch(self) -> None:
        for case in ("veronese-fibration", "mukai", "del-pezzo-fibration"):
            self._add(
                _match_nu_system(
                    f"special:{case}",
                    self.pairs,
                    adjunction_case_system(case, self.reduction),
                    note="integer solutions with nu>=0 in the pair domain; "
                    "the list must be empty",
                )
            )
        solve = _match_nu_system(
            "conic-bundle:solve",
            self.pairs,
            adjunction_case_system("conic-bundle", self.reduction),
            note="the conic-bundle equality d3=0 determines nu",
        )
        solve = StageReport(
            name=solve.name,
            mode="solve",
            filters=solve.filters,
            input_count=solve.input_count,
            survivors=solve.survivors,
            note=solve.note,
        )
        current = self._add(solve).survivors
        current = self._add(
            enumerate_candidates(
                "conic-bundle:lebarz",
                current,
                [self.lebarz],
                note="4-secant bound on the number of blown-up points",
            )
        ).survivors
        self.report.branches["conic-bundle"] = current

    def stage_finalists(self) -> None:
        point_checks = []
        for t in self.report.branches.get("log-general", ()):
            lam, g, nu = t
            point = {"lambda": lam, "g": g, "nu": nu}
            d = [int(p.eval_at(point)) for p in pluridegrees(self.reduction)]
            checks = {"pluridegrees_all_equal_degree": len(set(d)) == 1}
            point_checks.append(
                self._finalist(t, "log-general", "log-general / trivial canonical", checks)
            )
        for t in self.report.branches.get("conic-bundle", ()):
            lam, g, nu = t
            point = {"lambda": lam, "g": g, "nu": nu}
            checks = {
                # h^0 of the adjoint bundle K+H equals -chi(O(-H)) here
                "adjoint_bundle_sections": -int(
                    self.reduction["chi_mH"].eval_at(point)
                ),
                "d2": int(pluridegrees(self.reduction)[2].eval_at(point)),
            }
            point_checks.append(
                self._finalist(t, "conic-bundle", "conic bundle over the plane", checks)
            )
        self.report.finalists = sorted(point_checks, key=lambda f: f["tuple"])


class _CuboCubicP7Runner(_Runner):
    def __init__(self, spec: PipelineSpec, workers: int = 1):
        super().__init__(spec, workers)
        self.triples: tuple[IntTuple, ...] | None = None

    def stage_admissible_types(self) -> None:
        types = admissible_types(n=self.cfg.n, delta_bound=self.spec.delta_bound)
        self._add(
            StageReport(
                name="admissible-types",
                mode="check",
                filters=("dimension-relation",),
                input_count=len(types),
                survivors=tuple(
                    (t.n, t.delta1, t.delta2, t.dim_b, t.dim_b_prime) for t in types
                ),
                note="integer solutions (n, delta1, delta2, dimB, dimB') of the "
                "dimension relation; must force the cubo-cubic fourfold type",
            )
        )

    def stage_lebarz_triples(self) -> None:
        triples = []
        bound = self.lebarz.expression  # bound(lambda, g) - nu
        for lam, g in self.pairs:
            top = bound.eval_at({"lambda": lam, "g": g, "nu": 0})
            for nu in range(0, floor(top) + 1):
                triples.append((lam, g, nu))
        self.triples = self._add(
            _domain_report(
                "lebarz-triples",
                triples,
                rule="0<=nu<=four-secant bound",
                note="triple domain over surviving pairs under the 4-secant bound",
            )
        ).survivors

    def stage_log_general_branch(self) -> None:
        lg = log_general_filters(self.reduction, self.spec.d2_threshold)
        current = self._add(
            enumerate_candidates(
                "log-general:filters", self.triples, lg, workers=self.workers
            )
        ).survivors

        # Equality in the first Hodge inequality forces equality in the second.
        d0, d1, d2, d3 = pluridegrees(self.reduction)
        hodge1, hodge2 = d1**2 - d2 * d0, d2**2 - d3 * d1
        survivors, excluded = [], []
        for t in current:
            point = {"lambda": t[0], "g": t[1], "nu": t[2]}
            if hodge1.eval_at(point) == 0 and hodge2.eval_at(point) != 0:
                excluded.append((t, ("pluridegree-proportionality",)))
            else:
                survivors.append(t)
        current = self._add(
            StageReport(
                name="log-general:consistency",
                mode="filter",
                filters=("pluridegree-proportionality",),
                input_count=len(current),
                survivors=tuple(survivors),
                exclusions=tuple(excluded),
                note="d1^2-d2*d0=0 must imply d2^2-d3*d1=0",
            )
        ).survivors
        self.report.branches["log-general"] = current

    def stage_d3_branch(self) -> None:
        for case in ("veronese-fibration", "mukai"):
            self._add(
                _match_nu_system(
                    f"special:{case}",
                    self.pairs,
                    adjunction_case_system(case, self.reduction),
                    note="integer solutions with nu>=0 in the pair domain; "
                    "the list must be empty",
                )
            )
        solve = _match_nu_system(
            "d3-branch:solve",
            self.pairs,
            adjunction_case_system("conic-bundle", self.reduction),
            note="d3=0 (del Pezzo fibration or conic bundle) determines nu",
        )
        solve = StageReport(
            name=solve.name,
            mode="solve",
            filters=solve.filters,
            input_count=solve.input_count,
            survivors=solve.survivors,
            note=solve.note,
        )
        current = self._add(solve).survivors
        current = self._add(
            enumerate_candidates(
                "d3-branch:lebarz",
                current,
                [self.lebarz],
                note="4-secant bound on the number of blown-up points",
            )
        ).survivors

        # A conic bundle over a surface would have d2 >= 1; d2 = 0 forces a
        # del Pezzo fibration over a curve.
        d2 = pluridegrees(self.reduction)[2]
        conic = tuple(
            t
            for t in current
            if d2.eval_at({"lambda": t[0], "g": t[1], "nu": t[2]}) >= 1
        )
        self._add(
            StageReport(
                name="d3-branch:conic-bundle",
                mode="match",
                filters=("d2>=1",),
                input_count=len(current),
                survivors=conic,
                note="survivors that could still be conic bundles; must be empty",
            )
        )
        self.report.branches["del-pezzo-fibration"] = tuple(
            t for t in current if t not in conic
        )

    def stage_finalists(self) -> None:
        finalists = []
        d1 = pluridegrees(self.reduction)[1]
        for t in self.report.branches.get("del-pezzo-fibration", ()):
            lam, g, nu = t
            point = {"lambda": lam, "g": g, "nu": nu}
            chi_o = int(self.reduction["chi_O"].eval_at(point))
            chi_mh = int(self.reduction["chi_mH"].eval_at(point))
            genus_base = 1 - chi_o
            deg_hc = -chi_o - chi_mh
            d1_val = int(d1.eval_at(point))
            if deg_hc <= 0 or d1_val % deg_hc:
                raise ValueError(f"fibration invariants inconsistent at {t}")
            deg_fibre = d1_val // deg_hc
            checks = {
                "genus_base_curve": genus_base,
                "deg_HC": deg_hc,
                "deg_fibre": deg_fibre,
                "d2": int(pluridegrees(self.reduction)[2].eval_at(point)),
            }
            label = f"del Pezzo fibration over P^1, fibre degree {deg_fibre}"
            finalists.append(self._finalist(t, "del-pezzo-fibration", label, checks))
        for t in self.report.branches.get("log-general", ()):
            finalists.append(
                self._finalist(t, "log-general", "log-general / trivial canonical", {})
            )
        self.report.finalists = sorted(finalists, key=lambda f: f["tuple"])


def run_pipeline(spec: PipelineSpec, workers: int = 1) -> ClassificationReport:
    """Execute a pipeline spec and return its full classification report."""
    if spec.pipeline == PIPELINE_CUBIC_P6:
        return _CubicP6Runner(spec, workers).run()
    if spec.pipeline == PIPELINE_CUBO_CUBIC_P7:
        return _CuboCubicP7Runner(spec, workers).run()
    raise ValueError(f"unknown pipeline {spec.pipeline!r}")
