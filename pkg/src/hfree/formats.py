"""Line-based text formats for instances and constraint systems.

Both formats are diff-friendly: one record per line, fixed section order,
pairs written smaller endpoint first, records sorted. Lines starting with
"c " (or a bare "c") and blank lines are comments and are skipped, so
files survive hand annotation; writers never emit them, keeping output
byte-identical across runs.

Instance files ("hfi") start with `hfi 1`, then `mode`, an optional
`pattern` naming line, `vertices`, the edge section, an optional `budget`,
and optional `label` lines. Deletable edges carry a trailing `free` token
and fillable pairs appear as `nonedge ... free`; a non-edge never listed
is not fillable. Constraint files start with `minones 1` and `nvars`,
followed by one constraint per line in instance order: `f1 a b c`,
`f2 a`, `fn <n> v...`, or `gn <n> v...`.
"""

from dataclasses import dataclass, field

from .graphs import Graph, edge_key
from .minones import MinOnesInstance, constraint_arity
from .patterns import named_pattern
from .solver import COMPLETION, DELETION, SandwichInstance


class FormatError(ValueError):
    """Unparseable or internally inconsistent instance text."""


@dataclass(frozen=True)
class InstanceFile:
    """Everything one hfi file carries: the instance, an optional budget,
    and labeled pairs in sorted order."""

    instance: SandwichInstance
    budget: int = None
    labels: tuple = field(default_factory=tuple)


def render_instance(instance: SandwichInstance, budget=None, labels=()) -> str:
    """Serialize an instance to hfi text.

    The pattern line is written only when the pattern has a name; nameless
    patterns round-trip only if the parser is handed the pattern back.
    Labels may repeat a name across several pairs but not an entire entry.
    """
    lines = ["hfi 1", f"mode {instance.mode}"]
    if instance.pattern.name:
        lines.append(f"pattern {instance.pattern.name}")
    lines.append(f"vertices {instance.graph.vertex_count}")
    for pair in sorted(instance.graph.edges):
        suffix = " free" if instance.mode == DELETION and pair in instance.free else ""
        lines.append(f"edge {pair[0]} {pair[1]}{suffix}")
    if instance.mode == COMPLETION:
        for pair in sorted(instance.free):
            lines.append(f"nonedge {pair[0]} {pair[1]} free")
    if budget is not None:
        if budget < 0:
            raise FormatError("budget must be nonnegative")
        lines.append(f"budget {budget}")
    entries = sorted((str(name), edge_key(u, v)) for name, (u, v) in labels)
    if len(set(entries)) != len(entries):
        raise FormatError("duplicate label entry")
    for name, pair in entries:
        if not name or any(ch.isspace() for ch in name):
            raise FormatError(f"label name {name!r} must be a single token")
        lines.append(f"label {name} {pair[0]} {pair[1]}")
    return "\n".join(lines) + "\n"


def _meaningful_lines(text):
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line == "c" or line.startswith("c "):
            continue
        yield number, line.split()


def _parse_pair(words, number, vertex_count):
    try:
        u, v = int(words[0]), int(words[1])
    except ValueError:
        raise FormatError(f"line {number}: endpoints must be integers") from None
    if u == v:
        raise FormatError(f"line {number}: pair endpoints must differ")
    if not (0 <= u < vertex_count and 0 <= v < vertex_count):
        raise FormatError(f"line {number}: endpoint out of range")
    return edge_key(u, v)


def parse_instance(text: str, default_pattern=None) -> InstanceFile:
    """Parse hfi text back into an InstanceFile.

    default_pattern fills in for files without a pattern line; a file that
    names none and gets none is an error, because the instance cannot be
    interpreted without its pattern.
    """
    lines = _meaningful_lines(text)
    try:
        number, words = next(lines)
    except StopIteration:
        raise FormatError("empty instance file") from None
    if words != ["hfi", "1"]:
        raise FormatError(f"line {number}: expected 'hfi 1' header")

    mode = None
    pattern = default_pattern
    vertex_count = None
    edges = set()
    free = set()
    budget = None
    labels = []
    for number, words in lines:
        key, rest = words[0], words[1:]
        if key == "mode":
            if rest not in ([DELETION], [COMPLETION]):
                raise FormatError(f"line {number}: mode must be {DELETION} or {COMPLETION}")
            mode = rest[0]
        elif key == "pattern":
            if len(rest) != 1:
                raise FormatError(f"line {number}: pattern takes one name")
            pattern = named_pattern(rest[0])
        elif key == "vertices":
            if len(rest) != 1 or not rest[0].isdigit():
                raise FormatError(f"line {number}: vertices takes one count")
            vertex_count = int(rest[0])
        elif key in ("edge", "nonedge"):
            if mode is None or vertex_count is None:
                raise FormatError(f"line {number}: {key} before mode and vertices")
            if len(rest) not in (2, 3) or (len(rest) == 3 and rest[2] != "free"):
                raise FormatError(f"line {number}: expected '{key} u v [free]'")
            pair = _parse_pair(rest, number, vertex_count)
            if key == "edge":
                if pair in edges:
                    raise FormatError(f"line {number}: duplicate edge {pair}")
                edges.add(pair)
                if len(rest) == 3:
                    if mode != DELETION:
                        raise FormatError(f"line {number}: free edges belong to deletion instances")
                    free.add(pair)
            else:
                if len(rest) != 3:
                    raise FormatError(f"line {number}: a nonedge line must be marked free")
                if mode != COMPLETION:
                    raise FormatError(f"line {number}: fillable pairs belong to completion instances")
                free.add(pair)
        elif key == "budget":
            if budget is not None:
                raise FormatError(f"line {number}: budget given twice")
            if len(rest) != 1 or not rest[0].isdigit():
                raise FormatError(f"line {number}: budget takes one nonnegative integer")
            budget = int(rest[0])
        elif key == "label":
            if len(rest) != 3 or vertex_count is None:
                raise FormatError(f"line {number}: expected 'label name u v' after vertices")
            labels.append((rest[0], _parse_pair(rest[1:], number, vertex_count)))
        else:
            raise FormatError(f"line {number}: unknown directive {key!r}")

    if mode is None or vertex_count is None:
        raise FormatError("instance file needs mode and vertices lines")
    if pattern is None:
        raise FormatError("instance file names no pattern and no default was given")
    entries = tuple(sorted(labels))
    if len(set(entries)) != len(entries):
        raise FormatError("duplicate label entry")
    try:
        instance = SandwichInstance(Graph(vertex_count, edges), pattern, mode, frozenset(free))
    except ValueError as error:
        raise FormatError(str(error)) from None
    return InstanceFile(instance, budget, entries)


def render_minones(inst: MinOnesInstance) -> str:
    lines = ["minones 1", f"nvars {inst.variable_count}"]
    for kind, args in inst.constraints:
        body = " ".join(str(x) for x in args)
        if kind in ("f1", "f2"):
            lines.append(f"{kind} {body}".rstrip())
        else:
            lines.append(f"{kind[:2]} {kind[2:]} {body}")
    return "\n".join(lines) + "\n"


def parse_minones(text: str) -> MinOnesInstance:
    lines = _meaningful_lines(text)
    try:
        number, words = next(lines)
    except StopIteration:
        raise FormatError("empty constraint file") from None
    if words != ["minones", "1"]:
        raise FormatError(f"line {number}: expected 'minones 1' header")
    variable_count = None
    constraints = []
    for number, words in lines:
        key, rest = words[0], words[1:]
        if key == "nvars":
            if variable_count is not None:
                raise FormatError(f"line {number}: nvars given twice")
            if len(rest) != 1 or not rest[0].isdigit():
                raise FormatError(f"line {number}: nvars takes one count")
            variable_count = int(rest[0])
            continue
        if variable_count is None:
            raise FormatError(f"line {number}: constraints before nvars")
        if key in ("f1", "f2"):
            kind = key
        elif key in ("fn", "gn"):
            if not rest or not rest[0].isdigit():
                raise FormatError(f"line {number}: {key} needs its clique order first")
            kind, rest = key + rest[0], rest[1:]
        else:
            raise FormatError(f"line {number}: unknown constraint {key!r}")
        try:
            constraint_arity(kind)
        except ValueError:
            raise FormatError(f"line {number}: unsupported constraint kind {kind!r}") from None
        try:
            args = tuple(int(x) for x in rest)
        except ValueError:
            raise FormatError(f"line {number}: arguments must be integers") from None
        constraints.append((kind, args))
    if variable_count is None:
        raise FormatError("constraint file needs an nvars line")
    try:
        return MinOnesInstance(variable_count, tuple(constraints))
    except ValueError as error:
        raise FormatError(str(error)) from None
