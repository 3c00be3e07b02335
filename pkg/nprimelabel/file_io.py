from os import makedirs
from os.path import dirname

from nprimelabel.errors import ParseError
from nprimelabel.graph_core import Graph, Labeling


def save_file(output_filename, text):
    if dirname(output_filename):
        makedirs(dirname(output_filename), exist_ok=True)
    with open(output_filename, "w") as f:
        f.write(text)


def read_file(filename):
    with open(filename) as f:
        return f.read()


def _content_lines(text):
    """Yield (line_number, stripped line), skipping blank lines and # comments."""
    for number, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if line and not line.startswith("#"):
            yield number, line


def _ints(number, line, count):
    parts = line.split()
    if len(parts) != count:
        raise ParseError(number, f"expected {count} integers, got {line!r}")
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise ParseError(number, f"not an integer in {line!r}") from None


def parse_edge_list(text):
    """Parse `n m` followed by m lines `u v` with 1 <= u < v <= n."""
    lines = _content_lines(text)
    header = next(lines, None)
    if header is None:
        raise ParseError(1, "missing `n m` header")
    number, line = header
    n, m = _ints(number, line, 2)
    if n < 1 or m < 0:
        raise ParseError(number, f"bad header {line!r}")

    edges = set()
    last = number
    for number, line in lines:
        u, v = _ints(number, line, 2)
        if not 1 <= u < v <= n:
            raise ParseError(number, f"edge {u} {v} is not 1 <= u < v <= {n}")
        if (u, v) in edges:
            raise ParseError(number, f"duplicate edge {u} {v}")
        edges.add((u, v))
        last = number
    if len(edges) != m:
        raise ParseError(last, f"header announces {m} edges, found {len(edges)}")
    return Graph(n, frozenset(edges))


def write_edge_list(g):
    lines = [f"{g.vertex_count} {g.edge_count}"]
    lines += [f"{u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def parse_labels(text):
    """One decimal label per line; line v holds the label of vertex v."""
    labels = []
    for number, line in _content_lines(text):
        (label,) = _ints(number, line, 1)
        labels.append(label)
    return Labeling(labels)


def write_labels(f):
    return "".join(f"{label}\n" for label in f.labels)


def write_dot(g, labeling=None, report=None):
    """Graphviz DOT text; vertices failing the verifier are filled red."""
    bad = {violation.vertex for violation in report.violations} if report else set()
    lines = ["graph G {"]
    for v in range(1, g.vertex_count + 1):
        attributes = [f'label="{v}: {labeling[v]}"' if labeling else f'label="{v}"']
        if v in bad:
            attributes += ["style=filled", "fillcolor=red"]
        lines.append(f"  {v} [{', '.join(attributes)}];")
    lines += [f"  {u} -- {v};" for u, v in g.sorted_edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"
