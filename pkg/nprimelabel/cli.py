"""
Command-line entry point for building, labeling, verifying and searching graphs.

Family specs are written NAME:ARGS with comma-separated integer arguments:

    path:N            cycle:N           gear:N            mobius:N
    snake:K,N         stargon:K,N       book:K,N          banana:N,K
    firecracker:N,K   completebinary:N  random:N,SEED
    caterpillar:C1,...,Cs   pendant counts of the interior spine vertices (may be empty)
    spider:L1,L2,L3,...     leg lengths, at least three legs
    fullkary:K,SHAPE  cayley:K,SHAPE    fullbinary:SHAPE

SHAPE is a string of 0/1 decisions (1 = internal node) for the nodes in level order;
missing trailing decisions mean leaves.
"""

import functools
import logging
import sys

import click

from nprimelabel.errors import (
    InvalidSpec,
    NeighborhoodPrimeError,
    UnsupportedParameters,
    UnsupportedStructure,
)
from nprimelabel.families import Family, FamilySpec, generate
from nprimelabel.file_io import (
    parse_edge_list,
    parse_labels,
    read_file,
    save_file,
    write_dot,
    write_edge_list,
    write_labels,
)
from nprimelabel.graph_core import verify
from nprimelabel.labelers import label_family
from nprimelabel.number_theory import coprime_matching
from nprimelabel.search import (
    DEFAULT_NODE_BUDGET,
    SearchConfig,
    SearchStatus,
    VertexOrder,
    find_labeling,
)
from nprimelabel.trees_enum import MAX_TREE_ORDER, scan_conjecture

logging.basicConfig(format="%(message)s")
logging.getLogger().setLevel(logging.INFO)

EXIT_CODES = {
    SearchStatus.FOUND: 0,
    SearchStatus.EXHAUSTED: 2,
    SearchStatus.INCONCLUSIVE: 3,
}

_SHAPED = (Family.FULL_KARY, Family.CAYLEY, Family.FULL_BINARY)


def parse_family_spec(text):
    """Parse NAME:ARGS (see the module docstring) into a FamilySpec."""
    name, _, args = text.strip().partition(":")
    try:
        family = Family(name.lower())
    except ValueError:
        known = ", ".join(f.value for f in Family)
        raise InvalidSpec(f"unknown family {name!r}; expected one of {known}") from None

    fields = [a.strip() for a in args.split(",")] if args.strip() else []
    shape = ()
    if family in _SHAPED:
        if not fields or set(fields[-1]) - {"0", "1"}:
            raise InvalidSpec(f"{family.value} needs a trailing 0/1 shape string, got {text!r}")
        shape = tuple(c == "1" for c in fields.pop())
    try:
        params = tuple(int(a) for a in fields)
    except ValueError:
        raise InvalidSpec(f"non-integer parameter in {text!r}") from None
    return FamilySpec(family, params, shape)


def _diagnose(command):
    """Turn toolkit errors into a one-line diagnostic and exit code 1."""

    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except (UnsupportedParameters, UnsupportedStructure) as e:
            logging.error(f"{type(e).__name__}: {e} (try `nplabel search` instead)")
        except NeighborhoodPrimeError as e:
            logging.error(f"{type(e).__name__}: {e}")
        except OSError as e:
            logging.error(f"Error: {e}")
        sys.exit(1)

    return wrapper


@click.group(help="Neighborhood-prime labelings: generate, label, verify, search, scan.")
@click.option("--debug", "-d", is_flag=True, show_default=True, help="Enable debug mode.")
def main_cli(debug):
    if debug:
        logging.getLogger().setLevel(logging.DEBUG)


@main_cli.command(help="Write the canonical graph of a family as an edge list.")
@click.option("--family", "-f", "family_text", required=True, help="Family spec, e.g. gear:7")
@click.option("--out", "-o", help="Edge-list output file (stdout if omitted).")
@click.option("--dot", help="Also write Graphviz DOT to this file.")
@_diagnose
def gen(family_text, out, dot):
    g = generate(parse_family_spec(family_text))
    text = write_edge_list(g)
    if out:
        save_file(out, text)
        logging.info(f"Wrote {g.vertex_count} vertices and {g.edge_count} edges to {out}")
    else:
        click.echo(text, nl=False)
    if dot:
        save_file(dot, write_dot(g))


@main_cli.command(help="Label a family with its constructive labeling (always verified).")
@click.option("--family", "-f", "family_text", required=True, help="Family spec, e.g. gear:4")
@click.option("--out", "-o", help="Labels output file (stdout if omitted).")
@click.option("--graph-out", help="Also write the labeled graph as an edge list.")
@click.option("--dot", help="Also write Graphviz DOT with labels to this file.")
@_diagnose
def label(family_text, out, graph_out, dot):
    g, f = label_family(parse_family_spec(family_text))
    report = verify(g, f)
    if not report.ok:
        logging.error(
            f"Labeling for {family_text} failed verification at "
            f"{len(report.violations)} vertices; nothing written"
        )
        sys.exit(1)

    if out:
        save_file(out, write_labels(f))
    else:
        click.echo(write_labels(f), nl=False)
    if graph_out:
        save_file(graph_out, write_edge_list(g))
    if dot:
        save_file(dot, write_dot(g, f, report))
    click.echo("VERIFIED")


@main_cli.command("verify", help="Check a labeling against the neighborhood-gcd condition.")
@click.option("--graph", "-g", "graph_file", required=True, help="Edge-list file.")
@click.option("--labels", "-l", "labels_file", required=True, help="Labels file.")
@click.option("--dot", help="Write Graphviz DOT with violating vertices filled red.")
@_diagnose
def verify_command(graph_file, labels_file, dot):
    g = parse_edge_list(read_file(graph_file))
    f = parse_labels(read_file(labels_file))
    report = verify(g, f)
    if dot:
        save_file(dot, write_dot(g, f, report))

    if report.ok:
        click.echo(f"OK: {report.checked_count} vertices checked")
        return
    click.echo(f"VIOLATIONS: {len(report.violations)} of {report.checked_count} vertices checked")
    for violation in report.violations:
        labels = " ".join(map(str, violation.neighbor_labels))
        click.echo(f"vertex {violation.vertex}: neighbor labels {labels} gcd {violation.gcd_value}")
    sys.exit(1)


@main_cli.command(help="Exact backtracking search for a labeling of any graph.")
@click.option("--graph", "-g", "graph_file", required=True, help="Edge-list file.")
@click.option(
    "--budget",
    "-b",
    type=int,
    default=DEFAULT_NODE_BUDGET,
    show_default=True,
    help="Maximum number of decision nodes.",
)
@click.option("--all", "find_all", is_flag=True, help="Enumerate every labeling.")
@click.option(
    "--order",
    type=click.Choice([o.value for o in VertexOrder]),
    default=VertexOrder.DEGREE_DESCENDING.value,
    show_default=True,
    help="Vertex order: deg (most constrained first) or nat (1..n).",
)
@_diagnose
def search(graph_file, budget, find_all, order):
    g = parse_edge_list(read_file(graph_file))
    cfg = SearchConfig(node_budget=budget, order=VertexOrder(order), find_all=find_all)
    outcome = find_labeling(g, cfg)

    click.echo(outcome.status.value)
    click.echo(f"nodes: {outcome.nodes_explored}")
    if find_all and outcome.all_solutions is not None:
        click.echo(f"solutions: {len(outcome.all_solutions)}")
        for f in outcome.all_solutions:
            click.echo(" ".join(map(str, f.labels)))
    elif outcome.labeling is not None:
        click.echo(" ".join(map(str, outcome.labeling.labels)))
    sys.exit(EXIT_CODES[outcome.status])


@main_cli.command("scan-trees", help="Search every free tree up to a size for a labeling.")
@click.option(
    "--max-n",
    "-n",
    type=click.IntRange(1, MAX_TREE_ORDER),
    required=True,
    help="Largest tree order to scan.",
)
@click.option("--jobs", "-j", type=click.IntRange(1), default=1, show_default=True)
@click.option("--fail-dir", help="Directory for edge lists of any tree without a labeling.")
@click.option(
    "--budget",
    "-b",
    type=int,
    default=DEFAULT_NODE_BUDGET,
    show_default=True,
    help="Maximum number of decision nodes per tree.",
)
@_diagnose
def scan_trees(max_n, jobs, fail_dir, budget):
    report = scan_conjecture(max_n, SearchConfig(node_budget=budget), jobs=jobs, fail_dir=fail_dir)
    click.echo(report.format_table(), nl=False)
    if not report.holds:
        sys.exit(EXIT_CODES[SearchStatus.EXHAUSTED])
    if report.inconclusive_count:
        sys.exit(EXIT_CODES[SearchStatus.INCONCLUSIVE])


@main_cli.command("match-coprime", help="Print a coprime matching of 1..n with 2n+1..3n.")
@click.option("--n", "n", type=click.IntRange(1), required=True)
@_diagnose
def match_coprime(n):
    for x, y in coprime_matching(n).pairs():
        click.echo(f"{x} {y}")


if __name__ == "__main__":  # pragma: no cover
    main_cli()
