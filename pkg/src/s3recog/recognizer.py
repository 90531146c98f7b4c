"""The recognition pipeline: abelianize, Groebner basis, dimension, decide.

A 3-manifold group with trivial abelianization is trivial exactly when its
SL(2,C) representation variety is zero-dimensional; otherwise an irreducible
representation exists and its conjugation orbit already has dimension 3.
"""

from __future__ import annotations

import enum
import json
import time
from dataclasses import dataclass, field

from .abelian import AbelianizationResult, abelianization
from .dimension import InternalInconsistencyError, cross_check
from .groebner import (
    DEFAULT_MAX_PAIRS,
    DEFAULT_MAX_SECONDS,
    BudgetExhausted,
    GroebnerBasis,
    buchberger,
)
from .polycore import GREVLEX, MonomialOrder
from .presentation import GroupPresentation, HeegaardDiagram, presentation_from_heegaard
from .repvar import representation_ideal

__all__ = [
    "Decision",
    "Stage",
    "RecognizerConfig",
    "Verdict",
    "PipelineAnomalyError",
    "recognize",
    "recognize_heegaard",
    "SCHEMA_VERSION",
]

SCHEMA_VERSION = 1


class Decision(str, enum.Enum):
    TRIVIAL_GROUP = "TRIVIAL_GROUP"
    NONTRIVIAL_GROUP = "NONTRIVIAL_GROUP"
    INCONCLUSIVE_BUDGET = "INCONCLUSIVE_BUDGET"


class Stage(str, enum.Enum):
    ABELIANIZATION = "abelianization"
    GROEBNER = "groebner"
    DIMENSION = "dimension"
    DONE = "done"


@dataclass(frozen=True)
class RecognizerConfig:
    order: MonomialOrder = GREVLEX
    max_pairs: int | None = DEFAULT_MAX_PAIRS
    max_seconds: float | None = DEFAULT_MAX_SECONDS
    strategy: str = "normal"
    # compute the dimension even after the abelianization gate has decided
    force_dimension: bool = False

    def __post_init__(self):
        object.__setattr__(self, "order", MonomialOrder.parse(self.order))


@dataclass
class Verdict:
    input: str
    abelianization: AbelianizationResult
    stage: Stage
    decision: Decision
    order: str = "grevlex"
    equation_count: int | None = None
    basis_size: int | None = None
    dimension: int | None = None
    hilbert_degree: int | None = None
    witness: list[str] | None = None
    anomalies: list[str] = field(default_factory=list)
    diagnostics: list[str] = field(default_factory=list)
    timings: dict[str, float] = field(default_factory=dict)
    groebner_stats: dict | None = None

    @property
    def is_decided(self) -> bool:
        return self.decision is not Decision.INCONCLUSIVE_BUDGET

    def to_dict(self) -> dict:
        return {
            "schema": SCHEMA_VERSION,
            "input": self.input,
            "abelianization": {
                "free_rank": self.abelianization.free_rank,
                "torsion": list(self.abelianization.torsion),
                "is_trivial": self.abelianization.is_trivial,
            },
            "stage": self.stage.value,
            "decision": self.decision.value,
            "order": self.order,
            "equation_count": self.equation_count,
            "basis_size": self.basis_size,
            "dimension": self.dimension,
            "hilbert_degree": self.hilbert_degree,
            "witness": self.witness,
            "anomalies": list(self.anomalies),
            "diagnostics": list(self.diagnostics),
            "timings": dict(self.timings),
            "groebner_stats": self.groebner_stats,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_dict(cls, data: dict) -> Verdict:
        if data.get("schema") != SCHEMA_VERSION:
            raise ValueError(f"unsupported verdict schema {data.get('schema')!r}")
        ab = data["abelianization"]
        result = AbelianizationResult(ab["free_rank"], tuple(ab["torsion"]))
        if result.is_trivial != ab["is_trivial"]:
            raise ValueError("inconsistent abelianization record")
        return cls(
            input=data["input"],
            abelianization=result,
            stage=Stage(data["stage"]),
            decision=Decision(data["decision"]),
            order=data["order"],
            equation_count=data["equation_count"],
            basis_size=data["basis_size"],
            dimension=data["dimension"],
            hilbert_degree=data["hilbert_degree"],
            witness=data["witness"],
            anomalies=list(data["anomalies"]),
            diagnostics=list(data["diagnostics"]),
            timings=dict(data["timings"]),
            groebner_stats=data["groebner_stats"],
        )

    @classmethod
    def from_json(cls, text: str) -> Verdict:
        return cls.from_dict(json.loads(text))

    def summary(self) -> str:
        """Human-readable multi-line report."""
        lines = [
            f"input:          {self.input}",
            f"abelianization: {self.abelianization}",
        ]
        if self.equation_count is not None:
            lines.append(f"equations:      {self.equation_count} (order {self.order})")
        if self.basis_size is not None:
            lines.append(f"basis size:     {self.basis_size}")
        if self.dimension is not None:
            lines.append(f"dimension:      {self.dimension} (Hilbert degree {self.hilbert_degree})")
        lines.append(f"stage reached:  {self.stage.value}")
        lines.append(f"decision:       {self.decision.value}{_gloss(self.decision)}")
        for a in self.anomalies:
            lines.append(f"ANOMALY:        {a}")
        for d in self.diagnostics:
            lines.append(f"note:           {d}")
        if self.timings:
            lines.append(
                "timings:        "
                + ", ".join(f"{k} {v:.3f}s" for k, v in self.timings.items())
            )
        return "\n".join(lines)


def _gloss(decision: Decision) -> str:
    return {
        Decision.TRIVIAL_GROUP: " (the manifold is S^3)",
        Decision.NONTRIVIAL_GROUP: " (not S^3)",
        Decision.INCONCLUSIVE_BUDGET: " (budget exhausted; no decision)",
    }[decision]


class PipelineAnomalyError(InternalInconsistencyError):
    """The representation variety came out empty, which is impossible."""

    def __init__(self, message: str, verdict: Verdict):
        super().__init__(message)
        self.verdict = verdict


def recognize(
    p: GroupPresentation,
    config: RecognizerConfig | None = None,
    description: str | None = None,
) -> Verdict:
    """Decide whether ``p`` (assumed to present a 3-manifold group) is trivial."""
    config = config or RecognizerConfig()
    timings: dict[str, float] = {}

    t0 = time.perf_counter()
    ab = abelianization(p)
    timings["abelianization"] = time.perf_counter() - t0
    verdict = Verdict(
        input=description or str(p),
        abelianization=ab,
        stage=Stage.ABELIANIZATION,
        decision=Decision.NONTRIVIAL_GROUP,
        order=config.order.value,
        timings=timings,
    )
    if not ab.is_trivial and not config.force_dimension:
        return verdict

    t0 = time.perf_counter()
    rep = representation_ideal(p, config.order)
    verdict.equation_count = rep.equation_count
    if rep.purged:
        verdict.diagnostics.append(
            f"{len(rep.purged)} tautological equation(s) purged: "
            + ", ".join(e.tag for e in rep.purged)
        )
    verdict.stage = Stage.GROEBNER
    try:
        basis: GroebnerBasis = buchberger(
            rep.working,
            strategy=config.strategy,
            max_pairs=config.max_pairs,
            max_seconds=config.max_seconds,
        )
    except BudgetExhausted as exc:
        timings["groebner"] = time.perf_counter() - t0
        if ab.is_trivial:
            verdict.decision = Decision.INCONCLUSIVE_BUDGET
        verdict.groebner_stats = exc.stats.as_dict()
        verdict.diagnostics.append(
            f"{exc}; raise --max-seconds / --max-pairs to continue"
        )
        return verdict
    missed = [e.tag for e in rep.equations if not basis.contains(e.polynomial)]
    if missed:
        raise InternalInconsistencyError(
            "basis of the split system misses emitted equations " + ", ".join(missed)
        )
    timings["groebner"] = time.perf_counter() - t0
    verdict.basis_size = len(basis)
    verdict.groebner_stats = basis.stats.as_dict()

    t0 = time.perf_counter()
    verdict.stage = Stage.DIMENSION
    report = cross_check(basis)
    timings["dimension"] = time.perf_counter() - t0
    names = rep.names
    verdict.dimension = report.dimension
    verdict.hilbert_degree = report.hilbert_degree
    verdict.witness = [names[i] for i in report.witness]
    verdict.stage = Stage.DONE

    if not ab.is_trivial:
        return verdict
    if report.dimension == -1:
        verdict.anomalies.append(
            "representation variety is empty, but it always contains the trivial representation"
        )
        raise PipelineAnomalyError(verdict.anomalies[-1], verdict)
    if report.dimension in (1, 2):
        verdict.anomalies.append(
            f"trivial abelianization with dimension {report.dimension}: an irreducible "
            "representation would force dimension >= 3 (is this a 3-manifold group?)"
        )
    verdict.decision = Decision.TRIVIAL_GROUP if report.dimension == 0 else Decision.NONTRIVIAL_GROUP
    return verdict


def recognize_heegaard(
    diagram: HeegaardDiagram,
    config: RecognizerConfig | None = None,
    description: str | None = None,
) -> Verdict:
    p = presentation_from_heegaard(diagram)
    notes = []
    if len(diagram.curves) != diagram.genus:
        notes.append(
            f"diagram has {len(diagram.curves)} curve(s) for genus {diagram.genus}; "
            "a closed 3-manifold needs exactly one curve per handle"
        )
    try:
        verdict = recognize(p, config, description or diagram.to_text())
    except PipelineAnomalyError as exc:
        exc.verdict.diagnostics[:0] = notes
        raise
    verdict.diagnostics[:0] = notes
    return verdict
