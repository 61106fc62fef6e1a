"""
Командная строка: разбор и печать термов, сравнение, перечисление, иерархия,
вывод неравенств, перевод и аудит свойств.

Коды выхода: 0 - успех, 1 - ошибка использования или разбора, 2 - превышен бюджет,
3 - нарушено проверяемое свойство, 4 - вывод вернул UNKNOWN.
"""
import json
import logging
import sys
import warnings

import click

from audit import SUITES, AuditSettings, run_audit
from config import Config
from hierarchy import (
    BudgetExceeded, ContractWarning, EvalBudget, HierarchyEvaluator, check_base_contract, get_base, shift_base,
)
from ordinals import (
    EnumerationBudget, MalformedTerm, Zero, Sum, classify, coefficients, compare, norm, terms_up_to_norm,
)
from prover import (
    TranslationError, dominant_oto, ext_coefficients, ext_norm, prove_le, reduce_exact,
)
from storage import LocalStorage
from syntax import ParseError, dumps, loads, parse, parse_canonical, term_doc, to_surface

# Значения иерархии печатаются целиком
if hasattr(sys, 'set_int_max_str_digits'):
    sys.set_int_max_str_digits(0)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_BUDGET = 2
EXIT_VIOLATION = 3
EXIT_UNKNOWN = 4


def _fail(ctx, code, exc):
    click.echo(f"Ошибка: {exc}", err=True)
    ctx.exit(code)


class OrdinalsGroup(click.Group):
    """Группа команд с кодами выхода приложения и разбором доменных ошибок"""

    def main(self, args=None, prog_name=None, complete_var=None, standalone_mode=True, **extra):
        if not standalone_mode:
            return super().main(args, prog_name, complete_var, standalone_mode=False, **extra)
        try:
            rv = super().main(args, prog_name, complete_var, standalone_mode=False, **extra)
        except click.UsageError as exc:
            exc.show()
            sys.exit(EXIT_USAGE)
        except click.ClickException as exc:
            exc.show()
            sys.exit(EXIT_USAGE)
        except click.Abort:
            click.echo("Прервано", err=True)
            sys.exit(EXIT_USAGE)
        sys.exit(rv if isinstance(rv, int) else EXIT_OK)

    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except (BudgetExceeded, EnumerationBudget) as exc:
            _fail(ctx, EXIT_BUDGET, exc)
        except MemoryError:
            _fail(ctx, EXIT_BUDGET, "не хватило памяти, уменьшите входные данные или пределы")
        except TranslationError as exc:
            _fail(ctx, EXIT_UNKNOWN, exc)
        except ValueError as exc:
            # ParseError, MalformedTerm, VeblenPresent и прочие ошибки входных данных
            _fail(ctx, EXIT_USAGE, exc)


def read_term(text):
    """Терм из текста: JSON-документ, если начинается с '{', иначе текстовый синтаксис"""
    if text.lstrip().startswith('{'):
        return loads(text)
    return parse(text)


def read_canonical(text):
    term = read_term(text)
    if not isinstance(term, (Zero, Sum)):
        raise ParseError("Ожидался терм канонического слоя", 1, 1)
    return term


def _emit(term, as_json):
    click.echo(dumps(term) if as_json else to_surface(term))


def _norm_overrides(values):
    overrides = {}
    for item in values:
        text, sep, number = item.rpartition('=')
        if not sep:
            raise click.BadParameter(f"ожидалось TERM=N, получено {item!r}", param_hint='--norm-override')
        try:
            overrides[parse_canonical(text)] = int(number)
        except (ParseError, MalformedTerm, ValueError) as exc:
            raise click.BadParameter(str(exc), param_hint='--norm-override') from None
    return overrides


@click.group(cls=OrdinalsGroup)
@click.option('--verbose', is_flag=True, help='Отладочный журнал в stderr')
def cli(verbose):
    """Система ординальных обозначений, иерархия f^α и вывод неравенств."""
    logging.basicConfig(
        level=logging.DEBUG if verbose else getattr(logging, Config.LOG_LEVEL, logging.WARNING),
        stream=sys.stderr,
        format='%(levelname)s %(name)s: %(message)s',
        force=True,
    )


@cli.command('normalize')
@click.argument('term')
@click.option('--json', 'as_json', is_flag=True, help='Вывод JSON-документом')
def normalize_command(term, as_json):
    """Каноническая форма терма."""
    value = read_term(term)
    if not isinstance(value, (Zero, Sum)):
        value = reduce_exact(value) or value
    _emit(value, as_json)


@cli.command('cmp')
@click.argument('left')
@click.argument('right')
def cmp_command(left, right):
    """Сравнение двух канонических термов: <, = или >."""
    click.echo(compare(read_canonical(left), read_canonical(right)).value)


@cli.command('norm')
@click.argument('term')
def norm_command(term):
    """Норма N терма."""
    click.echo(ext_norm(read_term(term)))


@cli.command('coeffs')
@click.argument('term')
def coeffs_command(term):
    """Множество коэффициентов K_Ω."""
    value = read_term(term)
    members = coefficients(value) if isinstance(value, (Zero, Sum)) else ext_coefficients(value)
    click.echo('{' + ', '.join(to_surface(k) for k in members) + '}')


@cli.command('classify')
@click.argument('term')
def classify_command(term):
    """Класс терма: zero, additively-indecomposable, strongly-critical, composite-sum."""
    click.echo(classify(read_canonical(term)).value)


@cli.command('enumerate')
@click.option('--norm-max', type=click.IntRange(min=0), required=True, help='Граница нормы')
@click.option('--below', help='Только термы меньше данного')
@click.option('--max-terms', type=click.IntRange(min=1), default=None, help='Предел числа термов')
@click.option('--json', 'as_json', is_flag=True, help='Вывод JSON-документом')
@click.option('--xlsx', type=click.Path(dir_okay=False), help='Сохранить таблицу в Excel')
def enumerate_command(norm_max, below, max_terms, as_json, xlsx):
    """Канонические термы с нормой не больше --norm-max."""
    bound = read_canonical(below) if below else None
    terms = terms_up_to_norm(norm_max, bound, cap=max_terms or Config.MAX_ENUMERATED_TERMS)
    if as_json:
        click.echo(json.dumps({'v': 1, 'terms': [term_doc(t) for t in terms]}, ensure_ascii=False))
    else:
        for t in terms:
            click.echo(to_surface(t))
    if xlsx:
        from excel_utils import create_exporter

        rows = [{'term': to_surface(t), 'norm': norm(t), 'class': classify(t).value,
                 'json': json.dumps(term_doc(t), ensure_ascii=False)} for t in terms]
        if create_exporter().export_terms(rows, xlsx) is None:
            click.echo(f"Не удалось сохранить {xlsx}", err=True)
            sys.exit(EXIT_USAGE)


@cli.command('count')
@click.option('--norm-max', type=click.IntRange(min=0), required=True, help='Граница нормы')
@click.option('--below', help='Только термы меньше данного')
@click.option('--max-terms', type=click.IntRange(min=1), default=None, help='Предел числа термов')
def count_command(norm_max, below, max_terms):
    """Число канонических термов с нормой не больше --norm-max."""
    bound = read_canonical(below) if below else None
    click.echo(len(terms_up_to_norm(norm_max, bound, cap=max_terms or Config.MAX_ENUMERATED_TERMS)))


@cli.command('eval')
@click.option('--alpha', required=True, help='Индекс α')
@click.option('--arg', 'm', type=click.IntRange(min=0), required=True, help='Аргумент m')
@click.option('--base', type=click.Choice(Config.BASE_NAMES), default='suc', show_default=True)
@click.option('--shift', type=click.IntRange(min=0), default=0, help='Вычислять для f[n](m) = f(n + m)')
@click.option('--norm-override', multiple=True, help='Подстановка нормы TERM=N (можно повторять)')
@click.option('--max-terms', type=click.IntRange(min=1), default=None)
@click.option('--max-value-bits', type=click.IntRange(min=1), default=None)
@click.option('--max-nodes', type=click.IntRange(min=1), default=None)
def eval_command(alpha, m, base, shift, norm_override, max_terms, max_value_bits, max_nodes):
    """Значение f^α(m)."""
    overrides = _norm_overrides(norm_override)
    budget = EvalBudget.from_config(
        max_enumerated_terms=max_terms, max_value_bits=max_value_bits, max_recursion_nodes=max_nodes)
    f = shift_base(get_base(base), shift)
    if not f.satisfies_f1_f2:
        logger.info("Базовая функция %s не заявляет (f.1)/(f.2)", f.name)
    with warnings.catch_warnings():
        warnings.simplefilter('ignore', ContractWarning)
        value = HierarchyEvaluator(f, budget, overrides).evaluate(read_canonical(alpha), m)
    click.echo(value)


@cli.command('prove-le')
@click.argument('left')
@click.argument('right')
@click.option('--trace', 'show_trace', is_flag=True, help='Печать шагов вывода')
@click.pass_context
def prove_le_command(ctx, left, right, show_trace):
    """Попытка доказать LEFT ≤ RIGHT: LE (код 0) или UNKNOWN (код 4)."""
    result = prove_le(read_term(left), read_term(right))
    if not result.proved:
        click.echo('UNKNOWN')
        ctx.exit(EXIT_UNKNOWN)
    if show_trace:
        for index, step in enumerate(result.trace.steps, start=1):
            before, after = step.conclusion
            if step.side == 'close':
                before, after = step.premise
            click.echo(f"{index}. [{step.rule}] {step.side}: {to_surface(before)} {step.relation} {to_surface(after)}")
    click.echo('LE')


@cli.command('to-oto')
@click.argument('term')
@click.option('--json', 'as_json', is_flag=True, help='Вывод JSON-документом')
def to_oto_command(term, as_json):
    """Доминирующий канонический терм для выражения без phi."""
    _emit(dominant_oto(read_term(term)), as_json)


@cli.command('audit')
@click.option('--suite', type=click.Choice(SUITES + ('all',)), default='all', show_default=True)
@click.option('--max-norm', type=click.IntRange(min=0), default=None, help='Граница нормы перечисления')
@click.option('--seed', type=int, default=None, help='Зерно выборок')
@click.option('--triples', type=click.IntRange(min=1), default=None, help='Размер выборки троек')
@click.option('--prover-depth', type=click.IntRange(min=1, max=3), default=None)
@click.option('--report', 'report_path', type=click.Path(dir_okay=False), help='Дописать отчёт в JSON-хранилище')
@click.option('--save', is_flag=True, help='Дописать отчёт в хранилище из конфигурации')
@click.option('--xlsx', type=click.Path(dir_okay=False), help='Сохранить отчёт в Excel')
@click.option('--quiet', is_flag=True, help='Без пошагового вывода')
@click.pass_context
def audit_command(ctx, suite, max_norm, seed, triples, prover_depth, report_path, save, xlsx, quiet):
    """Прогон наборов проверок свойств."""
    settings = AuditSettings.from_config(max_norm=max_norm, seed=seed, triples=triples, prover_depth=prover_depth)
    echo = None if quiet else (lambda text: click.echo(text, err=True))
    report = run_audit(suite, settings, echo)
    data = report.to_dict()
    if report_path or save:
        data['id'] = LocalStorage(report_path or Config.REPORT_FILE).append_report(data)
    if xlsx:
        from excel_utils import create_exporter

        create_exporter().export_audit(data, xlsx)
    for check in report.checks:
        click.echo(f"{'OK  ' if check.passed else 'FAIL'} {check.suite}/{check.summary()}")
    if not report.passed:
        click.echo(f"Нарушено проверок: {len(report.failed_checks())}")
        ctx.exit(EXIT_VIOLATION)
    click.echo(f"Все проверки пройдены: {len(report.checks)}")


@cli.command('check-base')
@click.option('--base', type=click.Choice(Config.BASE_NAMES), required=True)
@click.option('--up-to', type=click.IntRange(min=1), default=100, show_default=True)
@click.pass_context
def check_base_command(ctx, base, up_to):
    """Проверка строгой монотонности и условий (f.1)/(f.2)."""
    f = get_base(base)
    report = check_base_contract(f, up_to, Config.MAX_VALUE_BITS)
    for condition in report.conditions:
        if condition.counterexample is not None:
            status = f"нарушено при m = {condition.counterexample}"
        elif condition.undecided:
            status = f"не решено для {len(condition.undecided)} значений"
        else:
            status = 'OK'
        click.echo(f"{condition.name}: {status}")
    if f.satisfies_f1_f2 and not report.passed:
        ctx.exit(EXIT_VIOLATION)


@cli.command('show-config')
def show_config_command():
    """Вывод текущей конфигурации."""
    Config.print_config()


if __name__ == '__main__':
    cli()
