"""Hand-built gadget reductions for the square, the pentagon, and the house.

The general chain reduction needs a 3-connected pattern, which C4 and C5
are not, so these constructions replace chains with direct wiring: every
clause-to-variable link is a single induced copy of the pattern whose only
free elements are the clause literal pair and the variable output pair.
The gadget libraries are small enough to certify outright. Each one comes
with an exhaustive contract (its exact solution set over all subsets of
its free pairs, plus structural facts) that is machine-checked the first
time a process uses it; a failed check raises GadgetContractError rather
than emitting a wrong instance.

Variable gadgets for deletion pair two mirrored all-or-nothing chains, one
per truth value, coupled so that at least one chain fires and at most one
can. For completion, the variable gadget is a ladder of squares whose
missing diagonals admit exactly two fillings, one per orientation.

The house constructions piggyback on the square ones: an apex vertex on
an edge turns every induced square through that edge into a house, and a
pendant square-with-roof bundle protects what must not be touched.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .cnf import CnfFormula, occurrence_counts
from .graphs import Graph, edge_key, is_h_free
from .patterns import cycle_graph, house_graph, named_pattern
from .reductions import Polynomial, _GraphBuilder, lift_sandwich_comp, lift_sandwich_del
from .solver import BudgetedInstance, COMPLETION, DELETION, SandwichInstance


class GadgetContractError(RuntimeError):
    """A gadget failed its exhaustive solution-set or structural check."""


@dataclass(frozen=True)
class GadgetContract:
    """Outcome of one gadget's exhaustive certification."""

    name: str
    vertex_count: int
    free_count: int
    checked_subsets: int
    facts: tuple


def has_c4_subgraph(graph: Graph) -> bool:
    """True when some four-cycle exists as a subgraph, induced or not.

    Equivalent to two vertices sharing two common neighbours. The specific
    reductions keep their free pairs C4-subgraph-free so that every induced
    square in any reachable graph still contains a fixed element.
    """
    for u in range(graph.vertex_count):
        nu = graph.neighbors(u)
        for v in range(u + 1, graph.vertex_count):
            if len(nu & graph.neighbors(v)) >= 2:
                return True
    return False


def _spanned(pairs, vertex_count: int) -> Graph:
    return Graph(vertex_count, pairs)


def _all_solutions(vertex_count, edges, free, pattern, mode):
    """Every subset of free whose application leaves the graph pattern-free.

    Exhaustive over 2**len(free); callers keep free small.
    """
    free = sorted(edge_key(u, v) for u, v in free)
    edges = set(edges)
    out = []
    for r in range(len(free) + 1):
        for subset in itertools.combinations(free, r):
            if mode == DELETION:
                modified = edges - set(subset)
            else:
                modified = edges | set(subset)
            if is_h_free(Graph(vertex_count, modified), pattern):
                out.append(frozenset(subset))
    return out


# ---------------------------------------------------------------------------
# square (C4) deletion


def _c4del_variable(builder: _GraphBuilder) -> dict:
    """Two mirrored chains a-b-g-v-u of deletable edges, each welded rigid.

    Three diamonds per side force the chain to fire front to back and back
    to front, so each side deletes all four of its edges or none. A square
    across the two (a, b) ends makes at least one side fire; a clique
    across the two (v, u) ends kills any deletion plan that fires both.
    """
    sides = {}
    for truth in (True, False):
        a, b, g, v, u, x1, x2, x3 = (builder.fresh() for _ in range(8))
        chain = (
            builder.add_edge(a, b, free=True),
            builder.add_edge(b, g, free=True),
            builder.add_edge(g, v, free=True),
            builder.add_edge(v, u, free=True),
        )
        for p, q, x, r in ((a, b, x1, g), (b, g, x2, v), (g, v, x3, u)):
            builder.add_edge(p, x)
            builder.add_edge(q, x)
            builder.add_edge(p, r)
        sides[truth] = {"a": a, "b": b, "v": v, "u": u, "chain": chain}
    builder.add_edge(sides[True]["b"], sides[False]["a"])
    builder.add_edge(sides[False]["b"], sides[True]["a"])
    for p in (sides[True]["v"], sides[True]["u"]):
        for q in (sides[False]["v"], sides[False]["u"]):
            builder.add_edge(p, q)
    return sides


def _c4del_clause(builder: _GraphBuilder) -> dict:
    """K6 whose hexagon s1-t1-s2-t2-s3-t3 is deletable.

    Alone it is square-free, so nothing is forced; the wiring adds one
    induced square per literal that forces (s_i, t_i) out unless the
    variable side fired. Deleting all three literal edges leaves an
    octahedron whose squares no deletion can clear.
    """
    s1, t1, s2, t2, s3, t3 = (builder.fresh() for _ in range(6))
    order = (s1, t1, s2, t2, s3, t3)
    for u, v in itertools.combinations(order, 2):
        builder.add_edge(u, v)
    for i in range(6):
        builder.mark_free(order[i], order[(i + 1) % 6])
    return {
        "vertices": order,
        "literals": tuple((order[2 * i], order[2 * i + 1]) for i in range(3)),
        "spacers": tuple(edge_key(order[2 * i + 1], order[(2 * i + 2) % 6]) for i in range(3)),
    }


@lru_cache(maxsize=None)
def check_c4_deletion_gadgets() -> tuple:
    """Certify both C4-deletion gadgets; raises GadgetContractError."""
    square = cycle_graph(4)

    builder = _GraphBuilder()
    sides = _c4del_variable(builder)
    fire_true = frozenset(sides[True]["chain"])
    fire_false = frozenset(sides[False]["chain"])
    sols = _all_solutions(builder.vertex_count, builder.edges, builder.free, square, DELETION)
    if sorted(sols, key=sorted) != sorted((fire_true, fire_false), key=sorted):
        raise GadgetContractError("square deletion variable gadget: solutions are not the two chains")
    if has_c4_subgraph(_spanned(builder.free, builder.vertex_count)):
        raise GadgetContractError("square deletion variable gadget: free pairs span a square")
    variable = GadgetContract(
        "c4-deletion variable", builder.vertex_count, len(builder.free), 2 ** len(builder.free),
        ("exactly two solutions, one full chain per truth value",
         "free pairs span no square subgraph"),
    )

    builder = _GraphBuilder()
    labels = _c4del_clause(builder)
    sols = set(_all_solutions(builder.vertex_count, builder.edges, builder.free, square, DELETION))
    literals = frozenset(labels["literals"])
    lits = labels["literals"]
    spaced = {(0, 1): 0, (1, 2): 1, (0, 2): 2}
    facts = (
        frozenset() in sols,
        all(frozenset((lit,)) in sols for lit in literals),
        not any(sol >= literals for sol in sols),
        frozenset(lits[1:]) not in sols,
        all(frozenset((lits[i], lits[k], labels["spacers"][s])) in sols
            for (i, k), s in spaced.items()),
        all(any(sol & literals == frozenset((lit,)) for sol in sols) for lit in literals),
        all(any(sol & literals == literals - {lit} for sol in sols) for lit in literals),
    )
    if not all(facts):
        raise GadgetContractError("square deletion clause gadget: solution-set facts failed")
    if has_c4_subgraph(_spanned(builder.free, builder.vertex_count)):
        raise GadgetContractError("square deletion clause gadget: free pairs span a square")
    clause = GadgetContract(
        "c4-deletion clause", builder.vertex_count, len(builder.free), 2 ** len(builder.free),
        ("the empty set and every single literal pair are solutions",
         "no solution removes all three literal pairs",
         "removing two literal pairs forces the spacer between them",
         "free pairs span no square subgraph"),
    )
    return variable, clause


# ---------------------------------------------------------------------------
# pentagon (C5) deletion


def _c5del_variable(builder: _GraphBuilder) -> dict:
    """Pentagon analogue of the mirrored chain pair.

    Each side is a path A0..A4 of deletable edges; pentagons through fresh
    P_i and D_i vertices force the chain both ways. A pentagon across the
    (A0, A1) ends plays the or-role and one across the (A3, A4) ends the
    not-both role.
    """
    sides = {}
    for truth in (True, False):
        A = [builder.fresh() for _ in range(5)]
        chain = tuple(builder.add_edge(A[i], A[i + 1], free=True) for i in range(4))
        for i in (1, 2, 3):
            p = builder.fresh()
            d = builder.fresh()
            builder.add_edge(A[i - 1], p)
            builder.add_edge(p, A[i])
            builder.add_edge(A[i + 1], d)
            builder.add_edge(d, A[i - 1])
        sides[truth] = {"A": tuple(A), "v": A[3], "u": A[4], "chain": chain}
    w = builder.fresh()
    builder.add_edge(sides[True]["A"][1], sides[False]["A"][0])
    builder.add_edge(sides[False]["A"][1], w)
    builder.add_edge(w, sides[True]["A"][0])
    z = builder.fresh()
    builder.add_edge(sides[True]["A"][3], sides[False]["A"][3])
    builder.add_edge(sides[False]["A"][3], sides[True]["A"][4])
    builder.add_edge(sides[True]["A"][4], sides[False]["A"][4])
    builder.add_edge(sides[False]["A"][4], z)
    builder.add_edge(z, sides[True]["A"][3])
    return sides


def _c5del_clause(builder: _GraphBuilder) -> dict:
    """Five vertices, a rigid 5-cycle, and three deletable chords.

    The chords are the literal pairs; vertex s12 serves literals 1 and 2.
    Any proper subset of the chords may go, but deleting all three bares
    the rigid pentagon.
    """
    s12, t1, t2, s3, t3 = (builder.fresh() for _ in range(5))
    for u, v in ((s12, s3), (s3, t1), (t1, t2), (t2, t3), (t3, s12)):
        builder.add_edge(u, v)
    literals = (
        builder.add_edge(s12, t1, free=True),
        builder.add_edge(s12, t2, free=True),
        builder.add_edge(s3, t3, free=True),
    )
    return {
        "vertices": (s12, t1, t2, s3, t3),
        "ends": ((s12, t1), (s12, t2), (s3, t3)),
        "literals": literals,
    }


@lru_cache(maxsize=None)
def check_c5_deletion_gadgets() -> tuple:
    """Certify both C5-deletion gadgets; raises GadgetContractError."""
    pentagon = cycle_graph(5)

    builder = _GraphBuilder()
    sides = _c5del_variable(builder)
    want = sorted((frozenset(sides[True]["chain"]), frozenset(sides[False]["chain"])), key=sorted)
    sols = _all_solutions(builder.vertex_count, builder.edges, builder.free, pentagon, DELETION)
    if sorted(sols, key=sorted) != want:
        raise GadgetContractError("pentagon deletion variable gadget: solutions are not the two chains")
    variable = GadgetContract(
        "c5-deletion variable", builder.vertex_count, len(builder.free), 2 ** len(builder.free),
        ("exactly two solutions, one full chain per truth value",),
    )

    builder = _GraphBuilder()
    labels = _c5del_clause(builder)
    sols = set(_all_solutions(builder.vertex_count, builder.edges, builder.free, pentagon, DELETION))
    literals = set(labels["literals"])
    proper = set()
    for r in range(3):
        proper.update(frozenset(s) for s in itertools.combinations(sorted(literals), r))
    if sols != proper:
        raise GadgetContractError("pentagon deletion clause gadget: solutions are not the proper chord subsets")
    clause = GadgetContract(
        "c5-deletion clause", builder.vertex_count, len(builder.free), 2 ** len(builder.free),
        ("solutions are exactly the proper subsets of the three chords",),
    )
    return variable, clause


# ---------------------------------------------------------------------------
# square (C4) completion


def _c4comp_ladder(builder: _GraphBuilder, width: int) -> dict:
    """Ring ladder of 4*width squares whose diagonals are fillable.

    Top and bottom rails are cycles t_0..t_{L-1} and b_0..b_{L-1} joined by
    rungs; each square must gain a diagonal, and satellite vertices veto
    mixed orientations on neighbouring squares, so the only two fillings
    are the all-clockwise and all-counterclockwise ones. Occurrence j of
    the variable plugs into rail positions 4j and 4j+1, leaving two spare
    squares between consecutive taps.
    """
    length = 4 * width
    t = [builder.fresh() for _ in range(length)]
    b = [builder.fresh() for _ in range(length)]
    for i in range(length):
        j = (i + 1) % length
        builder.add_edge(t[i], t[j])
        builder.add_edge(b[i], b[j])
        builder.add_edge(t[i], b[i])
    for i in range(length):
        j = (i + 1) % length
        u = builder.fresh()
        d = builder.fresh()
        for rail, sat in ((t, u), (b, d)):
            builder.add_edge(sat, rail[(i - 1) % length])
            builder.add_edge(sat, rail[i])
            builder.add_edge(sat, rail[j])
    fills_true = tuple(builder.mark_free(t[i], b[(i + 1) % length]) for i in range(length))
    fills_false = tuple(builder.mark_free(t[(i + 1) % length], b[i]) for i in range(length))
    return {"top": tuple(t), "bottom": tuple(b), "true": fills_true, "false": fills_false}


def _c4comp_clause(builder: _GraphBuilder) -> dict:
    """Eight vertices and five fillable pairs realizing a three-way or.

    The outer square forces (v1, v2) or (v3, v4); each of those spawns a
    square forcing a literal pair, (u1, v1) or (u2, v2) on one side and
    (u3, v3) alone on the other since (u4, v4) stays forbidden. Filling a
    literal pair is in turn only survivable when the wired rail diagonal
    has the right orientation.
    """
    v1, v2, v3, v4, u1, u2, u3, u4 = (builder.fresh() for _ in range(8))
    for p, q in ((v1, v4), (v4, v2), (v2, v3), (v3, v1), (v1, u2),
                 (u2, u1), (u1, v2), (v3, u4), (u4, u3), (u3, v4)):
        builder.add_edge(p, q)
    gates = (builder.mark_free(v1, v2), builder.mark_free(v3, v4))
    literals = (
        builder.mark_free(u1, v1),
        builder.mark_free(u2, v2),
        builder.mark_free(u3, v3),
    )
    return {
        "vertices": (v1, v2, v3, v4, u1, u2, u3, u4),
        "taps": ((v1, u1), (v2, u2), (v3, u3)),
        "gates": gates,
        "literals": literals,
    }


@lru_cache(maxsize=None)
def check_c4_completion_gadgets() -> tuple:
    """Certify the completion ladder and clause gadget.

    The ladder check enumerates one diagonal choice per square (a square
    left without either diagonal stays an induced C4, so nothing outside
    that refinement can be a solution) and expects the two orientations.
    """
    square = cycle_graph(4)

    builder = _GraphBuilder()
    labels = _c4comp_ladder(builder, 2)
    graph = Graph(builder.vertex_count, builder.edges)
    sols = []
    checked = 0
    for choice in itertools.product((0, 1, 2), repeat=8):
        fills = set()
        for i, pick in enumerate(choice):
            if pick != 1:
                fills.add(labels["true"][i])
            if pick != 0:
                fills.add(labels["false"][i])
        checked += 1
        if is_h_free(Graph(graph.vertex_count, set(graph.edges) | fills), square):
            sols.append(frozenset(fills))
    want = sorted((frozenset(labels["true"]), frozenset(labels["false"])), key=sorted)
    if sorted(sols, key=sorted) != want:
        raise GadgetContractError("square completion ladder: solutions are not the two orientations")
    if has_c4_subgraph(_spanned(builder.free, builder.vertex_count)):
        raise GadgetContractError("square completion ladder: fillable pairs span a square")
    ladder = GadgetContract(
        "c4-completion ladder", builder.vertex_count, len(builder.free), checked,
        ("exactly two solutions, one orientation per truth value",
         "fillable pairs span no square subgraph"),
    )

    builder = _GraphBuilder()
    labels = _c4comp_clause(builder)
    sols = set(_all_solutions(builder.vertex_count, builder.edges, builder.free, square, COMPLETION))
    gate12, gate34 = labels["gates"]
    lit1, lit2, lit3 = labels["literals"]
    predicted = set()
    for r in range(6):
        for subset in itertools.combinations(sorted(builder.free), r):
            subset = frozenset(subset)
            ok = (gate12 in subset or gate34 in subset)
            ok = ok and (gate12 not in subset or (lit1 in subset or lit2 in subset))
            ok = ok and (gate34 not in subset or lit3 in subset)
            ok = ok and (lit1 not in subset or gate12 in subset)
            ok = ok and (lit2 not in subset or gate12 in subset)
            ok = ok and (lit3 not in subset or gate34 in subset)
            if ok:
                predicted.add(subset)
    if sols != predicted:
        raise GadgetContractError("square completion clause gadget: solution-set facts failed")
    if not all(any(lit in sol for lit in labels["literals"]) for sol in sols):
        raise GadgetContractError("square completion clause gadget: a solution asserts no literal")
    if has_c4_subgraph(_spanned(builder.free, builder.vertex_count)):
        raise GadgetContractError("square completion clause gadget: fillable pairs span a square")
    clause = GadgetContract(
        "c4-completion clause", builder.vertex_count, len(builder.free), 2 ** len(builder.free),
        ("every solution fills a gate pair and each gate drags in a literal pair",
         "literal fills require their gate, and (u4, v4) is never needed",
         "fillable pairs span no square subgraph"),
    )
    return ladder, clause


# ---------------------------------------------------------------------------
# formula reductions


@dataclass(frozen=True)
class SpecificTrace:
    """Labels tying a wired-gadget instance back to its formula.

    true_markers[i] is a single free pair whose membership in a solution
    means variable i+1 is true; false_markers[i] is the mirror. Extents
    list each gadget's vertices, and connector_extents the vertex sets of
    the wiring copies, which the locality checks sweep.
    """

    mode: str
    variable_count: int
    clause_count: int
    true_markers: tuple
    false_markers: tuple
    variable_solutions: tuple
    clause_literal_pairs: tuple
    variable_extents: tuple
    clause_extents: tuple
    connector_extents: tuple


def specific_assignment(trace: SpecificTrace, pairs) -> tuple:
    """Read a truth assignment off a solution of a wired-gadget instance."""
    chosen = {edge_key(u, v) for u, v in pairs}
    return tuple(marker in chosen for marker in trace.true_markers)


def _require_exact_3cnf(formula: CnfFormula):
    if any(len(clause) != 3 for clause in formula.clauses):
        raise ValueError("formula must be exact-3CNF; normalize it first")
    # Two taps from one clause into the same variable gadget close a rigid
    # square through the clause internals, so direct wiring cannot host
    # clauses that repeat a variable.
    for j, clause in enumerate(formula.clauses):
        if len({abs(lit) for lit in clause}) != 3:
            raise ValueError(f"clause {j} repeats a variable; wired reductions need three distinct variables per clause")


def reduce_3sat_to_c4del(formula: CnfFormula):
    """Exact-3CNF to induced-square deletion with direct wiring.

    Satisfiable if and only if some subset of the free edges can be deleted
    leaving no induced C4. Each literal occurrence is wired by two rigid
    edges forming an induced square with the clause literal edge and the
    variable output edge, so keeping the literal edge forces the variable
    side to fire.
    """
    _require_exact_3cnf(formula)
    check_c4_deletion_gadgets()
    builder = _GraphBuilder()
    variables = []
    var_extents = []
    for _ in range(formula.variable_count):
        start = builder.vertex_count
        variables.append(_c4del_variable(builder))
        var_extents.append(tuple(range(start, builder.vertex_count)))
    clauses = []
    clause_extents = []
    for _ in formula.clauses:
        start = builder.vertex_count
        clauses.append(_c4del_clause(builder))
        clause_extents.append(tuple(range(start, builder.vertex_count)))
    connectors = []
    for j, clause in enumerate(formula.clauses):
        for pos, lit in enumerate(clause):
            side = variables[abs(lit) - 1][lit > 0]
            s, t = clauses[j]["literals"][pos]
            v, u = side["v"], side["u"]
            builder.add_edge(min(s, t), min(v, u))
            builder.add_edge(max(s, t), max(v, u))
            connectors.append(tuple(sorted((s, t, v, u))))
    graph = Graph(builder.vertex_count, builder.edges)
    instance = SandwichInstance(graph, named_pattern("c4"), DELETION, frozenset(builder.free))
    trace = SpecificTrace(
        mode=DELETION,
        variable_count=formula.variable_count,
        clause_count=len(formula.clauses),
        true_markers=tuple(v[True]["chain"][3] for v in variables),
        false_markers=tuple(v[False]["chain"][3] for v in variables),
        variable_solutions=tuple((v[True]["chain"], v[False]["chain"]) for v in variables),
        clause_literal_pairs=tuple(tuple(edge_key(*p) for p in c["literals"]) for c in clauses),
        variable_extents=tuple(var_extents),
        clause_extents=tuple(clause_extents),
        connector_extents=tuple(connectors),
    )
    return instance, trace


def reduce_3sat_to_c5del(formula: CnfFormula):
    """Exact-3CNF to induced-pentagon deletion with direct wiring.

    Same shape as the square version, but each wiring copy routes through
    a fresh vertex: the pentagon is the clause chord, one rigid edge to the
    variable side, the variable output edge, and a two-edge rigid path
    back.
    """
    _require_exact_3cnf(formula)
    check_c5_deletion_gadgets()
    builder = _GraphBuilder()
    variables = []
    var_extents = []
    for _ in range(formula.variable_count):
        start = builder.vertex_count
        variables.append(_c5del_variable(builder))
        var_extents.append(tuple(range(start, builder.vertex_count)))
    clauses = []
    clause_extents = []
    for _ in formula.clauses:
        start = builder.vertex_count
        clauses.append(_c5del_clause(builder))
        clause_extents.append(tuple(range(start, builder.vertex_count)))
    connectors = []
    for j, clause in enumerate(formula.clauses):
        for pos, lit in enumerate(clause):
            side = variables[abs(lit) - 1][lit > 0]
            s, t = clauses[j]["ends"][pos]
            v, u = side["v"], side["u"]
            w = builder.fresh()
            builder.add_edge(t, v)
            builder.add_edge(u, w)
            builder.add_edge(w, s)
            connectors.append(tuple(sorted((s, t, v, u, w))))
    graph = Graph(builder.vertex_count, builder.edges)
    instance = SandwichInstance(graph, named_pattern("c5"), DELETION, frozenset(builder.free))
    trace = SpecificTrace(
        mode=DELETION,
        variable_count=formula.variable_count,
        clause_count=len(formula.clauses),
        true_markers=tuple(v[True]["chain"][3] for v in variables),
        false_markers=tuple(v[False]["chain"][3] for v in variables),
        variable_solutions=tuple((v[True]["chain"], v[False]["chain"]) for v in variables),
        clause_literal_pairs=tuple(c["literals"] for c in clauses),
        variable_extents=tuple(var_extents),
        clause_extents=tuple(clause_extents),
        connector_extents=tuple(connectors),
    )
    return instance, trace


def reduce_3sat_to_c4comp(formula: CnfFormula):
    """Exact-3CNF to induced-square completion via ring ladders.

    Every variable must occur at least twice (pad the formula with
    duplicate clauses first); occurrence j of a variable taps rail
    positions 4j and 4j+1 of its ladder. A negative literal wires the
    clause tap across a true-orientation diagonal and a positive literal
    across a false-orientation one, so the literal pair can only be filled
    when the ladder disagrees with that diagonal.
    """
    _require_exact_3cnf(formula)
    check_c4_completion_gadgets()
    counts = occurrence_counts(formula)
    if min(counts.values()) < 2:
        raise ValueError("every variable must occur at least twice; duplicate clauses first")
    builder = _GraphBuilder()
    ladders = []
    var_extents = []
    for x in range(1, formula.variable_count + 1):
        start = builder.vertex_count
        ladders.append(_c4comp_ladder(builder, counts[x]))
        var_extents.append(tuple(range(start, builder.vertex_count)))
    clauses = []
    clause_extents = []
    for _ in formula.clauses:
        start = builder.vertex_count
        clauses.append(_c4comp_clause(builder))
        clause_extents.append(tuple(range(start, builder.vertex_count)))
    cursor = [0] * (formula.variable_count + 1)
    connectors = []
    for j, clause in enumerate(formula.clauses):
        for pos, lit in enumerate(clause):
            x = abs(lit)
            ladder = ladders[x - 1]
            slot = 4 * cursor[x]
            cursor[x] += 1
            v_i, u_i = clauses[j]["taps"][pos]
            if lit > 0:
                top, bottom = ladder["top"][slot + 1], ladder["bottom"][slot]
            else:
                top, bottom = ladder["top"][slot], ladder["bottom"][slot + 1]
            builder.add_edge(top, v_i)
            builder.add_edge(bottom, u_i)
            connectors.append(tuple(sorted((top, bottom, v_i, u_i))))
    graph = Graph(builder.vertex_count, builder.edges)
    instance = SandwichInstance(graph, named_pattern("c4"), COMPLETION, frozenset(builder.free))
    trace = SpecificTrace(
        mode=COMPLETION,
        variable_count=formula.variable_count,
        clause_count=len(formula.clauses),
        true_markers=tuple(lad["true"][0] for lad in ladders),
        false_markers=tuple(lad["false"][0] for lad in ladders),
        variable_solutions=tuple((lad["true"], lad["false"]) for lad in ladders),
        clause_literal_pairs=tuple(c["literals"] for c in clauses),
        variable_extents=tuple(var_extents),
        clause_extents=tuple(clause_extents),
        connector_extents=tuple(connectors),
    )
    return instance, trace


def solution_from_specific(trace: SpecificTrace, assignment, formula: CnfFormula) -> frozenset:
    """Canonical solution realizing a satisfying assignment.

    Fires the matching chain or orientation per variable. Deletion clauses
    drop the literal pairs of false literals plus, in the K6 gadget, the
    hexagon spacer between two dropped pairs; completion clauses fill one
    true literal's pair and its gate.
    """
    chosen = set()
    for i, value in enumerate(assignment):
        chosen.update(trace.variable_solutions[i][0 if value else 1])
    for j, clause in enumerate(formula.clauses):
        values = [(assignment[abs(lit) - 1]) == (lit > 0) for lit in clause]
        if not any(values):
            raise ValueError(f"assignment does not satisfy clause {j}")
        vs = trace.clause_extents[j]
        if trace.mode == DELETION:
            dead = [pos for pos, value in enumerate(values) if not value]
            for pos in dead:
                chosen.add(trace.clause_literal_pairs[j][pos])
            if len(dead) == 2 and len(vs) == 6:
                spacer = {(0, 1): 1, (1, 2): 3, (0, 2): 5}[tuple(dead)]
                chosen.add(edge_key(vs[spacer], vs[(spacer + 1) % 6]))
        else:
            pos = values.index(True)
            chosen.add(trace.clause_literal_pairs[j][pos])
            if pos in (0, 1):
                chosen.add(edge_key(vs[0], vs[1]))
            else:
                chosen.add(edge_key(vs[2], vs[3]))
    return frozenset(chosen)


# ---------------------------------------------------------------------------
# house translations


def _require_square_instance(instance: SandwichInstance, mode: str):
    if instance.mode != mode or instance.pattern.graph != cycle_graph(4):
        raise ValueError(f"expected a square {mode} instance")
    if has_c4_subgraph(_spanned(instance.free, instance.graph.vertex_count)):
        raise ValueError("free pairs span a square; the house translation would be unsound")


def reduce_c4comp_to_house_comp(instance: SandwichInstance) -> SandwichInstance:
    """Square completion to house completion by putting an apex on every edge.

    Each original edge gains a degree-two roof vertex, so an induced square
    through that edge becomes an induced house and houses arise no other
    way: a square through an apex would need the roofed edge as a chord,
    and the free pairs span no square of their own.
    """
    _require_square_instance(instance, COMPLETION)
    builder = _GraphBuilder()
    builder.plant(instance.graph)
    for u, v in sorted(instance.graph.edges):
        apex = builder.fresh()
        builder.add_edge(u, apex)
        builder.add_edge(v, apex)
    graph = Graph(builder.vertex_count, builder.edges)
    return SandwichInstance(graph, named_pattern("house"), COMPLETION, instance.free)


def reduce_c4del_to_house_del(instance: SandwichInstance, polynomial: Polynomial) -> BudgetedInstance:
    """Square deletion to budgeted house deletion.

    Every rigid edge (u, v) is guarded by p(k)+2 pendant squares-with-roof
    sharing it: gadget i adds a_i adjacent to u and b_i adjacent to u, v,
    a_i. Any two intact gadgets yield an induced house the moment (u, v)
    is deleted, so a p(k) budget cannot afford to touch a guarded edge,
    while an untouched guard contributes no house. All edges of the output
    are deletable within budget k.
    """
    _require_square_instance(instance, DELETION)
    k = len(instance.free)
    guards = polynomial(k) + 2
    builder = _GraphBuilder()
    builder.plant(instance.graph)
    for u, v in sorted(instance.graph.edges - instance.free):
        for _ in range(guards):
            a = builder.fresh()
            b = builder.fresh()
            builder.add_edge(u, a)
            builder.add_edge(u, b)
            builder.add_edge(v, b)
            builder.add_edge(a, b)
    graph = Graph(builder.vertex_count, builder.edges)
    lifted = SandwichInstance(graph, named_pattern("house"), DELETION, graph.edges)
    return BudgetedInstance(lifted, k)


# ---------------------------------------------------------------------------
# per-family protection lifts


def _lift_c4del(instance: SandwichInstance, polynomial: Polynomial) -> BudgetedInstance:
    """Guard every rigid edge with p(k)+2 pendant vertices seeing both ends.

    Two intact pendants form an induced square once the edge is deleted,
    so clearing the swarm costs more than the whole budget.
    """
    k = len(instance.free)
    builder = _GraphBuilder()
    builder.plant(instance.graph)
    for u, v in sorted(instance.graph.edges - instance.free):
        for _ in range(polynomial(k) + 2):
            w = builder.fresh()
            builder.add_edge(u, w)
            builder.add_edge(v, w)
    graph = Graph(builder.vertex_count, builder.edges)
    return BudgetedInstance(SandwichInstance(graph, instance.pattern, DELETION, graph.edges), k)


def _lift_c5del(instance: SandwichInstance, polynomial: Polynomial) -> BudgetedInstance:
    """Guard every rigid edge with pendant two-paths and three-paths.

    Deleting the edge closes each (three-path, two-path) pair into an
    induced pentagon; with p(k)+1 of each, no budget-p(k) solution can
    break them all.
    """
    k = len(instance.free)
    builder = _GraphBuilder()
    builder.plant(instance.graph)
    for u, v in sorted(instance.graph.edges - instance.free):
        for _ in range(polynomial(k) + 1):
            x1 = builder.fresh()
            x2 = builder.fresh()
            builder.add_edge(u, x1)
            builder.add_edge(x1, x2)
            builder.add_edge(x2, v)
            y = builder.fresh()
            builder.add_edge(u, y)
            builder.add_edge(y, v)
    graph = Graph(builder.vertex_count, builder.edges)
    return BudgetedInstance(SandwichInstance(graph, instance.pattern, DELETION, graph.edges), k)


def _lift_c4comp(instance: SandwichInstance, polynomial: Polynomial) -> BudgetedInstance:
    """Guard every forbidden pair with p(k)+1 pendant three-paths.

    Filling the pair closes each path into an induced square whose only
    repairs are its own private pairs.
    """
    k = len(instance.free)
    builder = _GraphBuilder()
    builder.plant(instance.graph)
    for u, v in sorted(set(instance.graph.non_edges()) - instance.free):
        for _ in range(polynomial(k) + 1):
            x1 = builder.fresh()
            x2 = builder.fresh()
            builder.add_edge(u, x1)
            builder.add_edge(x1, x2)
            builder.add_edge(x2, v)
    graph = Graph(builder.vertex_count, builder.edges)
    free = frozenset(graph.non_edges())
    return BudgetedInstance(SandwichInstance(graph, instance.pattern, COMPLETION, free), k)


def _lift_housecomp(instance: SandwichInstance, polynomial: Polynomial) -> BudgetedInstance:
    """Guard every forbidden pair with p(k)+1 roofed three-paths.

    The pendant path closes into a square when the pair is filled and the
    roof on the path's middle edge makes it a house.
    """
    k = len(instance.free)
    builder = _GraphBuilder()
    builder.plant(instance.graph)
    for u, v in sorted(set(instance.graph.non_edges()) - instance.free):
        for _ in range(polynomial(k) + 1):
            x1 = builder.fresh()
            x2 = builder.fresh()
            roof = builder.fresh()
            builder.add_edge(u, x1)
            builder.add_edge(x1, x2)
            builder.add_edge(x2, v)
            builder.add_edge(roof, x1)
            builder.add_edge(roof, x2)
    graph = Graph(builder.vertex_count, builder.edges)
    free = frozenset(graph.non_edges())
    return BudgetedInstance(SandwichInstance(graph, instance.pattern, COMPLETION, free), k)


LIFT_FAMILIES = (
    "general-del", "general-comp", "c4-del", "c5-del", "c4-comp", "house-comp", "house-del",
)


def lift_specific(instance: SandwichInstance, family: str, polynomial: Polynomial) -> BudgetedInstance:
    """Dispatch a protection lift by family name.

    The general families accept any 3-connected pattern; the named ones
    check that the instance carries the matching pattern and mode. The
    house-del family is the square-to-house translation, so it expects a
    square deletion instance and emits a house one.
    """
    if family == "general-del":
        return lift_sandwich_del(instance, polynomial)
    if family == "general-comp":
        return lift_sandwich_comp(instance, polynomial)
    if family == "house-del":
        return reduce_c4del_to_house_del(instance, polynomial)
    checks = {
        "c4-del": (cycle_graph(4), DELETION, _lift_c4del),
        "c5-del": (cycle_graph(5), DELETION, _lift_c5del),
        "c4-comp": (cycle_graph(4), COMPLETION, _lift_c4comp),
        "house-comp": (house_graph(), COMPLETION, _lift_housecomp),
    }
    if family not in checks:
        raise ValueError(f"unknown lift family {family!r}")
    want_graph, want_mode, lift = checks[family]
    if instance.mode != want_mode or instance.pattern.graph != want_graph:
        raise ValueError(f"family {family!r} needs a matching pattern and mode")
    return lift(instance, polynomial)
