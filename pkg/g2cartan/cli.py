"""Command-line interface for G2Cartan."""

import json
import time
from fractions import Fraction
from itertools import combinations, combinations_with_replacement
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional

import click
from rich.console import Console
from rich.table import Table

from .algebra.scalar_tower import Scalar, parse_scalar
from .config import get_config
from .core.g2 import BASIS, LABELS, eigenvalue_failures, jacobi_failures, killing_closed_form, killing_form
from .core.g2 import root_datum, root_decomposition
from .core.parabolic import filtration_failures, grading_failures
from .core.rep7 import apply, rational_matrix, verify_rep7
from .errors import UnknownLabel
from .homology.complexes import cohomology_dims
from .homology.curvature_module import NAMES, curvature_module, quartic_covariants
from .models.catalog import AlgebraicModel, build_model, curvature_coefficients, parse_label
from .models.dictionary import ROWS, verify_dictionary
from .models.holonomy import holonomy, invariant_vectors
from .models.iii6 import replicate_iii6_obstruction
from .models.verify import verify_model
from .prolongation.quartics import BinaryQuartic, rigidity_sweep, tanaka_prolong
from .real_forms.fixed import classify_real_models, fixed_point_algebra, real_holonomy, verify_anti_involution
from .real_forms.fixed import verify_real_tables
from .real_forms.so13 import verify_so13
from .rolling.embedding import invariant_monotonicity_check, verify_rolling
from .types import ModelLabel, Report

console = Console(stderr=True)
out = Console()


def _extension(ext: Optional[str]) -> Optional[Fraction]:
    """--ext accepts ``r`` or ``s^2=r``/``r=<rational>`` for the adjoined root s."""
    if not ext:
        return None
    value = ext.split("=", 1)[-1]
    try:
        return Fraction(value.strip())
    except ValueError:
        raise click.BadParameter(f"expected a rational, got {ext!r}", param_hint="--ext")


def _scalar(text: str, option: str, ext: Optional[Fraction] = None) -> Scalar:
    try:
        return parse_scalar(text, ext)
    except ValueError as e:
        raise click.BadParameter(str(e), param_hint=option)


def _rational(text: str, option: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except ValueError:
        raise click.BadParameter(f"expected a rational, got {text!r}", param_hint=option)


def _model(label: str, a: Optional[str], c: Optional[str], ext: Optional[str]) -> AlgebraicModel:
    try:
        model_label = parse_label(label)
    except UnknownLabel as e:
        raise click.BadParameter(str(e), param_hint="--label")
    r = _extension(ext)
    params: Dict[str, Scalar] = {}
    if model_label == ModelLabel.N7:
        params["c"] = _scalar(c or "0", "--c", r)
    elif model_label in (ModelLabel.D6, ModelLabel.B0):
        params["a"] = _scalar(a or "0", "--a", r)
    return build_model(model_label, params)


def _param(model: AlgebraicModel) -> Any:
    return model.params.get("c", model.params.get("a", 0))


def _render(value: Any) -> str:
    if isinstance(value, (dict, list)):
        return json.dumps(value, sort_keys=True, ensure_ascii=False)
    return str(value)


def _save(report: Report, text: str) -> None:
    """Copy of the JSON report under G2CARTAN_REPORT_DIR, when set."""
    try:
        report_dir = get_config().report_dir
    except ValueError as e:
        raise click.ClickException(str(e))
    if not report_dir:
        return
    output_path = Path(report_dir)
    output_path.mkdir(parents=True, exist_ok=True)
    target = output_path / f"{report.command.replace(' ', '_')}.json"
    target.write_text(text + "\n", encoding="utf-8")
    console.print(f"📁 Report saved: [blue]{target}[/blue]")


def _emit(report: Report, as_json: bool) -> None:
    if as_json:
        payload = report.model_dump(mode="json", by_alias=True, exclude={"timing"})
        text = json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False)
        click.echo(text)
        _save(report, text)
        return

    table = Table(title=report.command)
    table.add_column("Check", style="cyan")
    table.add_column("Result")
    table.add_column("Count", justify="right")
    table.add_column("Witness", style="dim")
    for check in report.checks:
        result = "[green]✅ pass[/green]" if check.passed else "[red]❌ fail[/red]"
        count = "" if check.count is None else str(check.count)
        table.add_row(check.name, result, count, check.witness or "")
    out.print(table)
    for key in sorted(report.data):
        out.print(f"[bold]{key}[/bold]: {_render(report.data[key])}", highlight=False)
    if report.ext:
        out.print(f"[bold]ext[/bold]: {report.ext}", highlight=False)
    if report.passed:
        out.print(f"🎉 All {len(report.checks)} checks passed in {report.timing:.2f}s")
    else:
        out.print(f"[red]❌ {len(report.failures())} of {len(report.checks)} checks failed[/red]")


def _run(ctx: click.Context, as_json: bool, build: Callable[[], Report], ext: Optional[str] = None) -> None:
    """Build the report, print it and exit 1 when a check failed."""
    started = time.perf_counter()
    try:
        report = build()
    except click.UsageError:
        raise
    except UnknownLabel as e:
        raise click.UsageError(str(e), ctx=ctx)
    except Exception as e:
        console.print(f"[red]❌ Error during {ctx.command_path}: {e}[/red]")
        raise click.ClickException(str(e))
    report.timing = time.perf_counter() - started
    r = _extension(ext)
    if r is not None and report.ext is None:
        report.ext = f"s^2={r}"
    _emit(report, as_json)
    if not report.passed:
        ctx.exit(1)


def _json_option(f: Callable[..., Any]) -> Callable[..., Any]:
    return click.option("--json", "as_json", is_flag=True, help="Print the report as JSON")(f)


def _model_options(f: Callable[..., Any]) -> Callable[..., Any]:
    f = click.option("--ext", help="Adjoined root s, given as r with s^2 = r")(f)
    f = click.option("--c", "c", help="Parameter c of N.7")(f)
    f = click.option("--a", "a", help="Parameter a of D.6 or b=0")(f)
    f = click.option("--label", "--model", "label", default="flat", show_default=True, help="Model label")(f)
    return _json_option(f)


@click.group()
@click.version_option(version="1.0.0")
def main() -> None:
    """G2Cartan - Exact Cartan-geometric computations for (2,3,5)-distributions."""
    pass


@main.command("verify-core")
@_json_option
@click.pass_context
def verify_core(ctx: click.Context, as_json: bool) -> None:
    """Jacobi, Killing form, 7-dimensional representation, roots and the grading."""

    def build() -> Report:
        console.print("🧮 Checking the structure constants of g...")
        report = Report(command="verify-core")
        triples = list(combinations(LABELS, 3))
        jacobi = jacobi_failures()
        report.add("core.jacobi", not jacobi, witness=str(jacobi[0]) if jacobi else None, count=len(triples))
        pairs = list(combinations_with_replacement(LABELS, 2))
        killing = [(a, b) for a, b in pairs if killing_form(BASIS[a], BASIS[b]) != killing_closed_form(BASIS[a], BASIS[b])]
        report.add("core.killing", not killing, witness=str(killing[0]) if killing else None, count=len(pairs))
        verify_rep7(report)
        eigen = eigenvalue_failures()
        report.add("core.root_eigenvalues", not eigen, witness=str(eigen[0]) if eigen else None)
        roots = root_decomposition()
        report.add("core.root_decomposition", len(roots) == 12, count=len(roots))
        grading = grading_failures()
        report.add("core.grading", not grading, witness=str(grading[0]) if grading else None, count=len(LABELS) ** 2)
        filtration = filtration_failures()
        report.add("core.filtration", not filtration, witness=str(filtration[0]) if filtration else None)
        report.data["root_datum"] = root_datum().model_dump(mode="json")
        return report

    _run(ctx, as_json, build)


@main.command("curvature-module")
@_json_option
@click.pass_context
def curvature_module_command(ctx: click.Context, as_json: bool) -> None:
    """The 24-dimensional curvature module E and its component table."""

    def build() -> Report:
        module = curvature_module()
        report = Report(command="curvature-module")
        report.add("curvature.dim", module.dim == 24, witness=str(module.dim))
        unmatched = module.unmatched_chains()
        report.add("curvature.printed_chains", not unmatched, witness=", ".join(unmatched) or None, count=len(NAMES))
        report.add("curvature.printed_rank", module.printed_rank() == 24, witness=str(module.printed_rank()))
        mismatched = module.homogeneity_mismatches()
        report.add("curvature.homogeneity", not mismatched, witness=", ".join(mismatched) or None)
        report.add("curvature.normal", not module.non_normal())
        unstable = module.unstable_images()
        report.add("curvature.p_stable", not unstable, witness=str(unstable[0]) if unstable else None)
        h2 = cohomology_dims(2)
        report.add("curvature.h2", h2["cohomology"] == 5, witness=str(h2))
        report.data.update(
            components=module.component_dims(),
            chains={name: str(module.chains[name]) for name in NAMES},
            cohomology=h2,
        )
        return report

    _run(ctx, as_json, build)


@main.command()
@click.option("--quartic", required=True, help="Five scalars c0..c4 of sum c_k x^k y^(4-k), comma separated")
@click.option("--ext", help="Adjoined root s, given as r with s^2 = r")
@click.option("--sweep", is_flag=True, help="Also prolong G2CARTAN_RANDOM_QUARTICS random quartics")
@_json_option
@click.pass_context
def prolong(ctx: click.Context, quartic: str, ext: Optional[str], sweep: bool, as_json: bool) -> None:
    """Tanaka prolongation of the annihilator of a binary quartic."""
    r = _extension(ext)
    coeffs = [_scalar(t, "--quartic", r) for t in quartic.replace(";", ",").split(",") if t.strip()]
    if len(coeffs) != 5:
        raise click.BadParameter(f"expected 5 scalars, got {len(coeffs)}", param_hint="--quartic")

    def build() -> Report:
        report = Report(command="prolong")
        prolongation = tanaka_prolong(BinaryQuartic(coeffs))
        dims = prolongation.dims()
        report.add("prolong.rigid", prolongation.rigid, witness=str(dims))
        report.add("prolong.dimension", prolongation.dim == 5 + dims[0] + prolongation.positive_dim, count=prolongation.dim)
        if sweep:
            config = get_config()
            console.print(f"🚀 Prolonging {config.random_quartics} random quartics (seed {config.seed})...")
            failures = rigidity_sweep(config.random_quartics, seed=config.seed)
            report.add(
                "prolong.random_rigidity",
                not failures,
                witness=str([str(c) for c in failures[0].coeffs]) if failures else None,
                count=config.random_quartics,
            )
        report.data.update(
            quartic=[str(c) for c in coeffs],
            annihilator=[str(x) for x in prolongation.components[0]],
            dims={str(k): v for k, v in dims.items()},
            dim=prolongation.dim,
            rigid=prolongation.rigid,
        )
        return report

    _run(ctx, as_json, build, ext)


@main.command()
@_model_options
@click.pass_context
def covariants(ctx: click.Context, label: str, a: Optional[str], c: Optional[str], ext: Optional[str], as_json: bool) -> None:
    """Binary quartic F and ternary quartic G of a model's curvature."""
    model = _model(label, a, c, ext)

    def build() -> Report:
        report = Report(command="covariants")
        report.add("covariants.in_module", curvature_module().contains(model.curvature))
        binary, ternary = quartic_covariants(model.curvature)
        report.data.update(
            model=model.label.value,
            params={k: str(v) for k, v in model.params.items()},
            F=[str(v) for v in binary],
            G={f"x^{i} y^{j} z^{k}": str(v) for (i, j, k), v in sorted(ternary.items())},
        )
        return report

    _run(ctx, as_json, build, ext)


@main.group()
def model() -> None:
    """Multiply-transitive algebraic models."""
    pass


def _holonomy_data(m: AlgebraicModel) -> Dict[str, Any]:
    hol = holonomy(m)
    return {"dim": hol.dim, "type": hol.tag()}


@model.command("verify")
@_model_options
@click.option("--formal", is_flag=True, help="Keep c or a as a polynomial variable")
@click.pass_context
def model_verify(
    ctx: click.Context, label: str, a: Optional[str], c: Optional[str], ext: Optional[str], formal: bool, as_json: bool
) -> None:
    """Every structural check of a catalog model."""
    if formal:
        if a is not None or c is not None:
            raise click.UsageError("--formal takes no parameter value")
        try:
            m = build_model(label, formal=True)
        except UnknownLabel as e:
            raise click.BadParameter(str(e), param_hint="--label")
    else:
        m = _model(label, a, c, ext)

    def build() -> Report:
        console.print(f"🧮 Verifying {m!r}...")
        report = verify_model(m)
        coefficients = curvature_coefficients(m) or {}
        report.data.update(
            curvature_coefficients={k: str(v) for k, v in coefficients.items() if v},
        )
        if not m.formal:
            hol = holonomy(m)
            report.data.update(
                holonomy={"dim": hol.dim, "type": hol.tag()},
                einstein_dim=len(invariant_vectors(hol)),
            )
        return report

    _run(ctx, as_json, build, ext)


@model.command("holonomy")
@_model_options
@click.option("--psi", help="Anti-involution whose fixed points give the real holonomy")
@click.pass_context
def model_holonomy(
    ctx: click.Context, label: str, a: Optional[str], c: Optional[str], ext: Optional[str], as_json: bool, psi: Optional[str]
) -> None:
    """Infinitesimal holonomy, complex and optionally real."""
    m = _model(label, a, c, ext)

    def build() -> Report:
        report = Report(command="model holonomy")
        hol = holonomy(m)
        hol.structure()
        report.add("holonomy.closed", True, count=hol.dim)
        report.data.update(model=m.label.value, params={k: str(v) for k, v in m.params.items()})
        report.data["holonomy"] = {"dim": hol.dim, "type": hol.tag()}
        if psi:
            real = real_holonomy(psi, m)
            report.add("holonomy.real_dim", real.dim == hol.dim, count=real.dim)
            report.data["real_holonomy"] = {"psi": psi, "signature": list(real.signature), "type": real.type}
        return report

    _run(ctx, as_json, build, ext)


@model.command("einstein")
@_model_options
@click.pass_context
def model_einstein(ctx: click.Context, label: str, a: Optional[str], c: Optional[str], ext: Optional[str], as_json: bool) -> None:
    """Dimension of the space of almost-Einstein scales."""
    m = _model(label, a, c, ext)

    def build() -> Report:
        report = Report(command="model einstein")
        hol = holonomy(m)
        vectors = invariant_vectors(hol)
        moved = [k for k, v in enumerate(vectors) for h in hol.basis if any(apply(rational_matrix(h), v).values())]
        report.add("einstein.parallel", not moved, witness=str(moved[0]) if moved else None, count=len(vectors))
        report.data.update(
            model=m.label.value,
            params={k: str(v) for k, v in m.params.items()},
            holonomy={"dim": hol.dim, "type": hol.tag()},
            einstein_dim=len(vectors),
        )
        return report

    _run(ctx, as_json, build, ext)


@model.command("iii6")
@_json_option
@click.pass_context
def model_iii6(ctx: click.Context, as_json: bool) -> None:
    """The obstruction ruling out a 6-dimensional type III model."""
    _run(ctx, as_json, replicate_iii6_obstruction)


@model.command("dictionary")
@click.option("--row", type=click.Choice(sorted(ROWS)), required=True, help="Dictionary row")
@click.option("--lam", help="Parameter of the generic D.6 row")
@_json_option
@click.pass_context
def model_dictionary(ctx: click.Context, row: str, lam: Optional[str], as_json: bool) -> None:
    """Abstract Lie algebra of a model, matched against its table."""
    value = _scalar(lam, "--lam") if lam else None
    _run(ctx, as_json, lambda: verify_dictionary(row, value))


@main.group(invoke_without_command=True)
@_model_options
@click.option("--psi", help="Anti-involution label, e.g. psi_1 or tilde_-i")
@click.pass_context
def realform(
    ctx: click.Context, label: str, a: Optional[str], c: Optional[str], ext: Optional[str], as_json: bool, psi: Optional[str]
) -> None:
    """Real forms of a model: fixed points of an anti-involution."""
    if ctx.invoked_subcommand is not None:
        return
    if not psi:
        raise click.UsageError("--psi is required unless a subcommand is given")
    m = _model(label, a, c, ext)

    def build() -> Report:
        report = verify_anti_involution(psi, m)
        if report.passed:
            fixed = fixed_point_algebra(psi, m)
            report.add("realform.fixed_dim", fixed.dim == m.dim, count=fixed.dim)
            report.data.update(fixed.describe())
        report.data["model"] = m.label.value
        report.data["param"] = str(_param(m))
        return report

    _run(ctx, as_json, build, ext)


@realform.command("classify")
@_model_options
@click.pass_context
def realform_classify(ctx: click.Context, label: str, a: Optional[str], c: Optional[str], ext: Optional[str], as_json: bool) -> None:
    """Every inequivalent real form of N.6, N.7_c or D.6_a."""
    m = _model(label, a, c, ext)
    _run(ctx, as_json, lambda: classify_real_models(m.label, _param(m)), ext)


@realform.command("tables")
@_json_option
@click.pass_context
def realform_tables(ctx: click.Context, as_json: bool) -> None:
    """The anti-involutions of g, the automorphisms and their redundancy."""
    _run(ctx, as_json, verify_real_tables)


@realform.command("so13")
@click.option("--case", "case", type=click.Choice(["H", "C"]), required=True, help="Isotropy case")
@click.option("--alpha", required=True, help="Nonzero rational alpha")
@_json_option
@click.pass_context
def realform_so13(ctx: click.Context, case: str, alpha: str, as_json: bool) -> None:
    """so(1,3)-invariant models inside D.6."""
    value = _rational(alpha, "--alpha")
    _run(ctx, as_json, lambda: verify_so13(case, value))


def _monotonicity_samples(count: int) -> List[Fraction]:
    """count points in (1, 3) and count points in (3, 3 + count]."""
    low = [1 + Fraction(2 * k, count + 1) for k in range(1, count + 1)]
    high = [3 + Fraction(k, 2) for k in range(1, count + 1)]
    return low + high


@main.command()
@click.option("--rho", help="Ratio of radii, a rational > 1")
@click.option("--samples", help="Comma separated ratios for the monotonicity check of I(rho)")
@click.option("--monotonic", is_flag=True, help="Check monotonicity on G2CARTAN_MONOTONICITY_SAMPLES ratios")
@_json_option
@click.pass_context
def rolling(ctx: click.Context, rho: Optional[str], samples: Optional[str], monotonic: bool, as_json: bool) -> None:
    """Rolling distribution of two spheres with radius ratio rho."""
    if samples:
        points = [_rational(t, "--samples") for t in samples.split(",") if t.strip()]
        _run(ctx, as_json, lambda: invariant_monotonicity_check(points))
        return
    if monotonic:
        points = _monotonicity_samples(get_config().monotonicity_samples)
        _run(ctx, as_json, lambda: invariant_monotonicity_check(points))
        return
    if not rho:
        raise click.UsageError("give --rho, --samples or --monotonic")
    value = _rational(rho, "--rho")
    if value <= 1:
        raise click.BadParameter(f"rho must exceed 1, got {value}", param_hint="--rho")

    def build() -> Report:
        console.print(f"🚀 Embedding the rolling algebra for rho = {value}...")
        return verify_rolling(value)

    _run(ctx, as_json, build)


if __name__ == "__main__":
    main()
