"""
Command-line interface for Θ / Θ̄ computations on graphs.

Exit status: 0 on success, 1 when a claim fails or the distance-free path
disagrees with the closure, 2 on usage, parse or IO errors.
"""

import logging
import sys
from pathlib import Path
from typing import Any, Dict, NoReturn, Tuple

import click
import yaml

from .formatters import DotFormatter, FormatterError, formatter_registry
from .ingestion.graph6_parser import emit_graph6
from .models import CorpusSource, CorpusSpec, Graph
from .processing.claims import CLAIMS
from .processor import (
    RELATION_NAMES, FastPathMismatchError, ProcessingError, ThetaGraphProcessor,
)

# Configure logging
logging.basicConfig(
    level=logging.INFO,
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
)

logger = logging.getLogger(__name__)

EXIT_CLAIM_FAILURE = 1
EXIT_USAGE = 2
DEFAULT_MAX_N = 6
# largest vertex count graph6 encodes with a four-byte size prefix
CORPUS_MAX_N = 258047

which_option = click.option(
    '--which', '-w', type=click.Choice(sorted(RELATION_NAMES)), default='theta',
    show_default=True, help='Relation: theta (Θ) or thetabar (Θ̄)'
)


def _fail(message: str, code: int = EXIT_USAGE) -> NoReturn:
    click.echo(f"❌ Error: {message}", err=True)
    sys.exit(code)


def _processor(ctx: click.Context, **overrides: Any) -> ThetaGraphProcessor:
    config: Dict[str, Any] = dict(ctx.obj.get('config') or {})
    config.update({k: v for k, v in overrides.items() if v is not None})
    return ThetaGraphProcessor(config=config)


def _load_graph(processor: ThetaGraphProcessor, text: str) -> Graph:
    try:
        return processor.load_graph(text)
    except ProcessingError as e:
        _fail(str(e))


def _echo_json(obj: Any) -> None:
    click.echo(formatter_registry.get_formatter('json').render(obj), nl=False)


@click.group()
@click.option('--verbose', '-v', is_flag=True, help='Enable verbose logging')
@click.option('--config', '-c', type=click.Path(exists=True, dir_okay=False), help='YAML configuration file')
@click.pass_context
def main(ctx, verbose, config):
    """
    Θ / Θ̄ toolkit

    Djoković-Winkler relation, its complement, their closures, recognition
    through distance sets and realizability of Θ̄ relation graphs.
    """
    if verbose:
        logging.getLogger().setLevel(logging.DEBUG)
        logger.debug("Verbose logging enabled")

    config_data: Dict[str, Any] = {}
    if config:
        try:
            with open(config, 'r') as f:
                config_data = yaml.safe_load(f) or {}
        except (OSError, yaml.YAMLError) as e:
            logger.error(f"Failed to load configuration: {e}")
            _fail(f"Cannot load configuration {config}: {e}")
        if not isinstance(config_data, dict):
            _fail(f"Configuration {config} must be a mapping")
        logger.info(f"Loaded configuration from {config}")

    ctx.ensure_object(dict)
    ctx.obj['config'] = config_data


@main.command()
@click.argument('graph6')
@which_option
@click.option('--dot', is_flag=True, help='Print the relation graph as DOT')
@click.pass_context
def relation(ctx, graph6, which, dot):
    """
    Print the relation graph of Θ or Θ̄.

    GRAPH6: Host graph in graph6 format
    """
    processor = _processor(ctx)
    g = _load_graph(processor, graph6)
    try:
        r = processor.relation(g, RELATION_NAMES[which])
    except ProcessingError as e:
        _fail(str(e))
    if dot:
        click.echo(DotFormatter(host=g).render(r), nl=False)
    else:
        _echo_json(processor.describe_relation(g, r))


@main.command()
@click.argument('graph6')
@which_option
@click.option('--fast', is_flag=True, help='Distance-free Θ̄ classes')
@click.option('--verify/--no-verify', default=None, help='Cross-check --fast against the closure')
@click.pass_context
def classes(ctx, graph6, which, fast, verify):
    """
    Print the closure classes of Θ or Θ̄.

    GRAPH6: Host graph in graph6 format
    """
    processor = _processor(ctx)
    g = _load_graph(processor, graph6)
    try:
        report = processor.classes(g, RELATION_NAMES[which], fast=fast, verify=verify)
    except FastPathMismatchError as e:
        _echo_json(e.report)
        _fail(str(e), EXIT_CLAIM_FAILURE)
    except ProcessingError as e:
        _fail(str(e))
    _echo_json(report)


@main.command()
@click.argument('graph6')
@click.pass_context
def classify(ctx, graph6):
    """
    Print the recognition report of a graph.

    GRAPH6: Graph in graph6 format
    """
    processor = _processor(ctx)
    g = _load_graph(processor, graph6)
    try:
        report = processor.classify(g)
    except ProcessingError as e:
        _fail(str(e), EXIT_CLAIM_FAILURE)
    _echo_json(report)


@main.command()
@click.argument('graph6', required=False)
@click.option('--pairs', '-p', type=click.Path(exists=True, dir_okay=False),
              help='Relation graph file: graph6 or a JSON pair list')
@click.pass_context
def realize(ctx, graph6, pairs):
    """
    Find a complete multipartite graph whose Θ̄ relation graph is the input.

    GRAPH6: Relation graph in graph6 format (or use --pairs)
    """
    if (graph6 is None) == (pairs is None):
        _fail("Give exactly one of GRAPH6 or --pairs")
    processor = _processor(ctx)
    try:
        text = graph6 if graph6 is not None else Path(pairs).read_text(encoding='utf-8')
        r = processor.load_relation(text)
    except (OSError, ProcessingError) as e:
        _fail(str(e))
    _echo_json(processor.realize(r))


@main.command()
@click.option('--max-n', type=click.IntRange(min=0), default=None,
              help=f'Largest vertex count (built-in default {DEFAULT_MAX_N})')
@click.option('--min-n', type=click.IntRange(min=0), default=1, show_default=True,
              help='Smallest vertex count')
@click.option('--corpus', type=click.Path(exists=True, dir_okay=False),
              help='graph6 corpus file instead of the built-in enumerator')
@click.option('--connected/--all', 'connected', default=None,
              help='Restrict to connected graphs (default from configuration)')
@click.option('--workers', type=click.IntRange(min=1), default=None, help='Worker processes')
@click.option('--claim', 'claim_ids', multiple=True, help='Run only these claims')
@click.option('--format', '-f', 'output_format', type=click.Choice(['json', 'markdown']),
              default='json', show_default=True, help='Report format')
@click.option('--output', '-o', type=click.Path(dir_okay=False), help='Write the report to a file')
@click.option('--csv', 'csv_path', type=click.Path(dir_okay=False), help='Also write a CSV table')
@click.option('--fail-fast', is_flag=True, help='Stop at the first failing graph')
@click.option('--progress/--no-progress', default=None, help='Show a progress bar')
@click.pass_context
def verify(ctx, max_n, min_n, corpus, connected, workers, claim_ids, output_format,
           output, csv_path, fail_fast, progress):
    """
    Run the property suite over a corpus of graphs.
    """
    processor = _processor(ctx, max_workers=workers, show_progress=progress)
    if connected is None:
        connected = bool(processor.config['connected_only'])
    if max_n is None:
        max_n = CORPUS_MAX_N if corpus else DEFAULT_MAX_N
    try:
        spec = CorpusSpec(
            n_max=max_n,
            n_min=min_n,
            connected_only=connected,
            source=CorpusSource.FILE if corpus else CorpusSource.BUILTIN,
            path=corpus,
        )
    except ValueError as e:
        _fail(str(e))

    try:
        report = processor.verify(spec, list(claim_ids) or None, fail_fast=fail_fast)
    except ProcessingError as e:
        _fail(str(e))

    formatter = formatter_registry.get_formatter(output_format)
    try:
        if output:
            formatter.write(report, output)
        else:
            click.echo(formatter.render(report), nl=False)
        if csv_path:
            formatter_registry.get_formatter('csv').write(report, csv_path)
    except FormatterError as e:
        _fail(str(e))

    if not report.passed:
        click.echo(f"❌ Failed claims: {', '.join(report.failed_claims)}", err=True)
        sys.exit(EXIT_CLAIM_FAILURE)


@main.command('claims')
def list_claims():
    """List the registered claims."""
    for claim_id, item in CLAIMS.items():
        click.echo(f"{claim_id}\t{item.description}")


@main.group()
def generate():
    """Print generated graphs in graph6 format."""
    pass


def _emit(build, *args: Any) -> None:
    try:
        g = build(*args)
    except ProcessingError as e:
        _fail(str(e))
    click.echo(emit_graph6(g))


def _sizes(text: str) -> Tuple[int, ...]:
    try:
        return tuple(int(s) for s in text.split(','))
    except ValueError:
        _fail(f"Part sizes must be comma-separated integers: {text!r}")


@generate.command('multipartite')
@click.argument('sizes')
@click.pass_context
def generate_multipartite(ctx, sizes):
    """Complete multipartite graph, e.g. 1,2,4."""
    processor = _processor(ctx)
    _emit(processor.generate_multipartite, list(_sizes(sizes)))


@generate.command('product')
@click.argument('left')
@click.argument('right')
@click.pass_context
def generate_product(ctx, left, right):
    """Cartesian product of two graph tokens, e.g. K3 K2."""
    _emit(_processor(ctx).generate_product, left, right)


@generate.command('join')
@click.argument('left')
@click.argument('right')
@click.pass_context
def generate_join(ctx, left, right):
    """Join of two graph tokens, e.g. K1 C4."""
    _emit(_processor(ctx).generate_join, left, right)


@generate.command('named')
@click.argument('token')
@click.pass_context
def generate_named(ctx, token):
    """Single graph from a token: K5, P4, C6, S3, E2, K1,2,4, paw, gem, ..."""
    _emit(_processor(ctx).generate_named, token)


if __name__ == '__main__':
    main()
