import pytest

from audit import SUITES, AuditReport, AuditRunner, AuditSettings, CheckResult, run_audit

SMALL = AuditSettings(max_norm=2, triples=200, prover_depth=2, prover_component_norm=1)


@pytest.fixture(scope='module')
def reports():
    return {name: run_audit(name, SMALL) for name in SUITES}


@pytest.mark.parametrize('suite', SUITES)
def test_suite_passes(reports, suite):
    report = reports[suite]
    assert report.checks
    assert all(check.suite == suite for check in report.checks)
    assert report.passed, [check.summary() for check in report.failed_checks()]


def test_order_suite_checks(reports):
    names = [check.name for check in reports['order'].checks]
    assert names == ['canonical-forms', 'round-trip', 'trichotomy', 'transitivity', 'addition', 'collapse-laws']
    assert reports['order'].checks[3].checked == 200


def test_hierarchy_checks_enough_instances(reports):
    checks = {check.name: check for check in reports['hierarchy'].checks}
    assert checks['finite-closed-form'].checked == 121
    coverage = checks['corollary-instances']
    assert coverage.minimum == 200
    assert coverage.checked >= 200
    assert coverage.violations == 0


def test_prover_defaults_cover_depth_three():
    settings = AuditSettings()
    assert (settings.prover_depth, settings.prover_component_norm) == (3, 3)
    assert settings.prover_sample == 3_000


def test_shift_lemmas_meet_minimum(reports):
    for check in reports['lemmas'].checks:
        if check.name.startswith('shift-'):
            assert check.checked >= 150


def test_unknown_suite():
    with pytest.raises(ValueError):
        run_audit('nonsense', SMALL)


def test_echo_reports_numbered_steps():
    output = []
    AuditRunner(SMALL, output.append).run('order')
    assert '\n1. Каноничность и идемпотентность normalize...' in output
    assert any(line.startswith('✅') for line in output)


def test_settings_from_config_ignores_none():
    settings = AuditSettings.from_config(max_norm=1, seed=None)
    assert settings.max_norm == 1
    assert isinstance(settings.seed, int)


def test_check_result_builds_detail_lazily():
    calls = []

    def detail():
        calls.append(1)
        return 'пример'

    check = CheckResult('order', 'demo')
    check.record(True, detail)
    assert calls == []
    check.record(False, detail)
    assert check.examples == ['пример']
    assert not check.passed


def test_check_result_minimum():
    check = CheckResult('lemmas', 'demo', minimum=2)
    check.record(True)
    check.skip(5)
    assert not check.passed
    assert 'требуется не менее 2' in check.summary()
    check.record(True)
    assert check.passed
    assert check.to_dict()['skipped'] == 5


def test_report_to_dict():
    report = AuditReport(suite='order', max_norm=2, seed=0)
    report.checks.append(CheckResult('order', 'a', checked=3))
    report.checks.append(CheckResult('order', 'b', checked=1, violations=1, examples=['x']))
    data = report.to_dict()
    assert data['passed'] is False
    assert [c['passed'] for c in data['checks']] == [True, False]
    assert report.violations == 1
    assert [c.name for c in report.failed_checks()] == ['b']
