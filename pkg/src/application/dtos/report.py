from fractions import Fraction
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field

from src.domain.entities.generator_system import GeneratorSystem
from src.domain.entities.verdict import (
    ChainStep,
    ClassAnalysis,
    Consequences,
    DirectionCertificate,
    PositivityWitness,
    StabilityVerdict,
    TermOrderCertificate,
    VerdictScope,
    VerdictStatus,
)
from src.domain.gradings import TermOrder, TermOrderKind, ZVector

REPORT_SCHEMA = 1


class WitnessModel(BaseModel):
    point: List[str] = Field(..., description="Coordenadas racionales como 'p/q'")
    values: List[str] = Field(..., description="Valores de las partes de mayor grado en el punto")
    indices: List[int] = Field(..., description="Índices de generador (0 = f_0 = 1)")


class DirectionModel(BaseModel):
    z: List[int]
    witnesses: List[WitnessModel]


class ClassAnalysisModel(BaseModel):
    label: str
    residue: List[int]
    indices: List[int]
    leading_exponents: List[List[int]]
    leading_coefficients: List[str]


class TermOrderModel(BaseModel):
    order: str = Field(..., description="Forma legible, p. ej. 'deglex:x,y'")
    kind: str
    priority: List[int]
    classes: List[ClassAnalysisModel]


class ConsequencesModel(BaseModel):
    closed: bool = False
    fails_smp: bool = False


class VerdictModel(BaseModel):
    status: str
    scope: str
    n: int
    generator_count: int
    chain: List[str] = Field(default_factory=list)
    consequences: ConsequencesModel = Field(default_factory=ConsequencesModel)
    directions: List[DirectionModel] = Field(default_factory=list)
    multipliers: Optional[List[int]] = None
    term_order: Optional[TermOrderModel] = None
    unknown_directions: List[List[int]] = Field(default_factory=list)
    obstruction: Optional[List[int]] = None
    violation: Optional[ClassAnalysisModel] = None
    note: str = ""


class SystemModel(BaseModel):
    name: Optional[str] = None
    variables: List[str]
    generators: List[str]
    mode: str


class BoundedModel(BaseModel):
    outcome: str = Field(..., description="'OnlyConstants' o 'Witness'")
    multipliers: Optional[List[int]] = None
    delta: Optional[List[int]] = None
    monomial: Optional[str] = None


class CoveringModel(BaseModel):
    status: str
    r: Optional[List[int]] = None
    t: Optional[List[int]] = None


class TentacleViolationModel(BaseModel):
    generator_index: int
    lam: str
    base_point: List[str]
    value: str


class TentacleModel(BaseModel):
    z: List[int]
    box: List[List[str]]
    points_checked: int
    violations: List[TentacleViolationModel]


class ExampleRunModel(BaseModel):
    name: str
    command: str
    expected: str
    status: str
    matches: bool
    verified: bool


class Report(BaseModel):
    """Informe JSON de un comando; `schema` versiona los nombres de campo"""
    model_config = ConfigDict(populate_by_name=True)

    schema_version: int = Field(REPORT_SCHEMA, alias="schema")
    command: str
    arguments: Dict[str, Any] = Field(default_factory=dict)
    config: Optional[Dict[str, Any]] = None
    system: Optional[SystemModel] = None
    verdict: Optional[VerdictModel] = None
    bounded: Optional[BoundedModel] = None
    covering: Optional[CoveringModel] = None
    tentacle: Optional[TentacleModel] = None
    suggestions: Optional[List[List[int]]] = None
    examples: Optional[List[ExampleRunModel]] = None
    verification: Optional[bool] = None
    exit_code: int = 0
    elapsed_seconds: Optional[float] = None

    def to_json(self) -> str:
        return self.model_dump_json(by_alias=True, exclude_none=True, indent=2)


def _fractions(values) -> List[str]:
    return [str(value) for value in values]


def _parse_fractions(values) -> tuple:
    return tuple(Fraction(value) for value in values)


class ReportMapper:
    """Conversión entre el veredicto de dominio y su forma serializable"""

    @staticmethod
    def system_to_model(system: GeneratorSystem) -> SystemModel:
        return SystemModel(
            name=system.name,
            variables=list(system.ctx.names),
            generators=list(system.labels),
            mode=system.mode.value,
        )

    @staticmethod
    def class_to_model(analysis: ClassAnalysis) -> ClassAnalysisModel:
        return ClassAnalysisModel(
            label=analysis.label,
            residue=list(analysis.residue),
            indices=list(analysis.indices),
            leading_exponents=[list(e) for e in analysis.leading_exponents],
            leading_coefficients=_fractions(analysis.leading_coefficients),
        )

    @staticmethod
    def class_from_model(model: ClassAnalysisModel) -> ClassAnalysis:
        return ClassAnalysis(
            label=model.label,
            residue=tuple(model.residue),
            indices=tuple(model.indices),
            leading_exponents=tuple(tuple(e) for e in model.leading_exponents),
            leading_coefficients=_parse_fractions(model.leading_coefficients),
        )

    @staticmethod
    def verdict_to_model(verdict: StabilityVerdict, system: GeneratorSystem) -> VerdictModel:
        term_order = None
        if verdict.term_order is not None:
            order = verdict.term_order.order
            term_order = TermOrderModel(
                order=order.to_string(system.ctx),
                kind=order.kind.value,
                priority=list(order.priority),
                classes=[ReportMapper.class_to_model(a) for a in verdict.term_order.classes],
            )
        return VerdictModel(
            status=verdict.status.value,
            scope=verdict.scope.value,
            n=verdict.n,
            generator_count=verdict.generator_count,
            chain=[step.value for step in verdict.chain],
            consequences=ConsequencesModel(
                closed=verdict.consequences.closed,
                fails_smp=verdict.consequences.fails_smp,
            ),
            directions=[
                DirectionModel(
                    z=list(direction.z.entries),
                    witnesses=[
                        WitnessModel(
                            point=_fractions(w.point),
                            values=_fractions(w.values),
                            indices=list(w.indices),
                        )
                        for w in direction.witnesses
                    ],
                )
                for direction in verdict.directions
            ],
            multipliers=list(verdict.multipliers) if verdict.multipliers is not None else None,
            term_order=term_order,
            unknown_directions=[list(z.entries) for z in verdict.unknown_directions],
            obstruction=list(verdict.obstruction) if verdict.obstruction is not None else None,
            violation=ReportMapper.class_to_model(verdict.violation) if verdict.violation else None,
            note=verdict.note,
        )

    @staticmethod
    def verdict_from_model(model: VerdictModel) -> StabilityVerdict:
        """Reconstruye el veredicto de dominio para volver a verificarlo"""
        term_order = None
        if model.term_order is not None:
            term_order = TermOrderCertificate(
                TermOrder(TermOrderKind(model.term_order.kind), tuple(model.term_order.priority)),
                tuple(ReportMapper.class_from_model(c) for c in model.term_order.classes),
            )
        return StabilityVerdict(
            status=VerdictStatus(model.status),
            n=model.n,
            generator_count=model.generator_count,
            chain=tuple(ChainStep(step) for step in model.chain),
            scope=VerdictScope(model.scope),
            consequences=Consequences(model.consequences.closed, model.consequences.fails_smp),
            directions=tuple(
                DirectionCertificate(
                    ZVector(tuple(d.z)),
                    tuple(
                        PositivityWitness(
                            _parse_fractions(w.point), _parse_fractions(w.values), tuple(w.indices)
                        )
                        for w in d.witnesses
                    ),
                )
                for d in model.directions
            ),
            multipliers=tuple(model.multipliers) if model.multipliers is not None else None,
            term_order=term_order,
            unknown_directions=tuple(ZVector(tuple(z)) for z in model.unknown_directions),
            obstruction=tuple(model.obstruction) if model.obstruction is not None else None,
            violation=ReportMapper.class_from_model(model.violation) if model.violation else None,
            note=model.note,
        )

    @staticmethod
    def verdict_from_payload(payload: str) -> StabilityVerdict:
        """Lee un informe JSON emitido y devuelve su veredicto"""
        report = Report.model_validate_json(payload)
        if report.verdict is None:
            raise ValueError(f"El informe del comando '{report.command}' no contiene veredicto")
        return ReportMapper.verdict_from_model(report.verdict)
