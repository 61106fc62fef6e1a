"""
Наборы проверок свойств системы обозначений, иерархии и вывода
"""
from .report import AuditReport, CheckResult
from .suites import SUITES, AuditRunner, AuditSettings, run_audit

__all__ = ['AuditReport', 'CheckResult', 'SUITES', 'AuditRunner', 'AuditSettings', 'run_audit']
