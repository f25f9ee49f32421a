import pytest

from src.application.dtos.report import Report, ReportMapper
from src.application.services.certificate_service import CertificateService
from src.application.services.stability_service import StabilityService
from src.domain.gradings import TermOrder, TermOrderKind, ZVector


def _report(system, verdict) -> Report:
    return Report(
        command="check",
        system=ReportMapper.system_to_model(system),
        verdict=ReportMapper.verdict_to_model(verdict, system),
    )


def test_stable_verdict_survives_json(load_example, cfg):
    system = load_example("ex3_cylinder_and_hyperbola.qm")
    verdict = StabilityService.stability_verdict(system, [ZVector.of(0, 1), ZVector.of(1, -1)], cfg)
    payload = _report(system, verdict).to_json()
    restored = ReportMapper.verdict_from_payload(payload)
    assert restored == verdict
    assert CertificateService.verify_certificate(restored, system)


def test_term_order_verdict_survives_json(load_example):
    system = load_example("m2_compact_hyperbola.qm")
    verdict = StabilityService.term_order_total_stability(system, TermOrder(TermOrderKind.DEGREE_THEN_LEX, (0, 1)))
    restored = ReportMapper.verdict_from_payload(_report(system, verdict).to_json())
    assert restored == verdict
    assert CertificateService.verify_certificate(restored, system)


def test_schema_field_and_fraction_strings(load_example, cfg):
    system = load_example("ex1_parabola_wedge.qm")
    verdict = StabilityService.stability_verdict(system, [ZVector.of(1, 2)], cfg)
    report = _report(system, verdict)
    data = report.model_dump(by_alias=True, exclude_none=True)
    assert data["schema"] == 1
    assert "elapsed_seconds" not in data
    assert all(isinstance(x, str) for x in data["verdict"]["directions"][0]["witnesses"][0]["point"])
    assert data["verdict"]["chain"][-1] == "positive-combination"


def test_report_without_verdict_cannot_be_reread():
    with pytest.raises(ValueError):
        ReportMapper.verdict_from_payload(Report(command="bounded").to_json())
