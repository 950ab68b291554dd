"""Certificates of equivalence: rewrite sequences between formal graph expressions.

An expression is a sum of terms, each a rational coefficient times a product
of graphs; a graph stands for its Tutte or chromatic polynomial depending on
the context. A certificate is a list of expressions where each one follows
from the previous by a single rule application:

=======  ==================================  =========================
rule     tutte                               chromatic
=======  ==================================  =========================
DC       G -> G\\e + G/e (e ordinary)        G -> G\\e - G/e
AI       G -> (G+uv) - G/uv (u ~ v)          G -> (G+uv) + G/uv
BLOCKS   G -> product of its blocks          not allowed
GLUE     product of blocks -> H, same blocks not allowed
ISO      G -> H isomorphic to G              same
ALG      merge terms with isomorphic factors same
=======  ==================================  =========================

(u ~ v: same component.) DC and AI also run backwards (``params["inverse"] = True``): two terms that
differ only in one factor are folded back into one. Inverse DC turns
c[A] -/+ c[B] into c[A+uv] when B is isomorphic to A/uv; inverse AI turns
c[A] +/- c[B] into c[A\\e] when B is isomorphic to A/e (signs for
chromatic/tutte).

Expressions are compared up to reordering of terms and factors and
isomorphism of factors.
"""

from __future__ import annotations

import json
from collections import Counter, deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from itertools import combinations
from typing import Optional

from .graph import EdgeKind, Multigraph
from .graphio import GraphFormatError, format_edge_list, parse_edge_list
from .limits import LIMITS
from .poly import MultiPoly, as_fraction
from .tutte import chromatic_poly, tutte_poly

CONTEXTS = ("tutte", "chromatic")
RULES = ("DC", "AI", "BLOCKS", "GLUE", "ISO", "ALG")


class RuleError(ValueError):
    """A rule that does not apply at the given place."""


class CertificateFormatError(ValueError):
    pass


def _cf(g: Multigraph) -> bytes:
    if g.n > LIMITS.canon_n:
        g.canonical_form()  # raises the size-limit error
    return _cached_form(g)


@lru_cache(maxsize=100_000)
def _cached_form(g: Multigraph) -> bytes:
    return g.canonical_form()


@dataclass(frozen=True)
class Term:
    coef: Fraction
    factors: tuple

    def __post_init__(self):
        object.__setattr__(self, "coef", as_fraction(self.coef))
        object.__setattr__(self, "factors", tuple(self.factors))
        if not self.factors:
            raise ValueError("a term needs at least one factor")

    def factor_key(self) -> tuple:
        return tuple(sorted(_cf(g) for g in self.factors))


@dataclass(frozen=True)
class Expression:
    terms: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(self.terms))

    @classmethod
    def single(cls, g: Multigraph) -> "Expression":
        return cls((Term(Fraction(1), (g,)),))

    def key(self) -> tuple:
        return tuple(sorted((t.factor_key(), t.coef) for t in self.terms))

    def is_single_graph(self) -> bool:
        return (len(self.terms) == 1 and self.terms[0].coef == 1
                and len(self.terms[0].factors) == 1)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for t in self.terms:
            prod = " * ".join(f"[{format_edge_list(g).strip().replace(chr(10), '; ')}]"
                              for g in t.factors)
            parts.append(f"{t.coef} {prod}")
        return " + ".join(parts)


@dataclass
class Step:
    rule: str
    locus: tuple = (0, 0)
    params: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        params = {}
        for k, v in self.params.items():
            params[k] = format_edge_list(v) if isinstance(v, Multigraph) else v
        return {"rule": self.rule, "locus": list(self.locus), "params": params}

    @classmethod
    def from_json(cls, data: dict) -> "Step":
        params = dict(data.get("params", {}))
        if "graph" in params:
            params["graph"] = parse_edge_list(params["graph"]).graph
        return cls(data["rule"], tuple(data.get("locus", (0, 0))), params)


@dataclass
class Certificate:
    context: str
    expressions: list
    steps: list

    def to_json(self) -> dict:
        return {
            "context": self.context,
            "expressions": [
                {"terms": [{"coef": str(t.coef),
                            "factors": [format_edge_list(g) for g in t.factors]}
                           for t in e.terms]}
                for e in self.expressions],
            "steps": [s.to_json() for s in self.steps],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)

    @classmethod
    def from_json(cls, data) -> "Certificate":
        try:
            if isinstance(data, str):
                data = json.loads(data)
            exprs = [Expression(tuple(
                Term(Fraction(t["coef"]), tuple(parse_edge_list(b).graph for b in t["factors"]))
                for t in e["terms"])) for e in data["expressions"]]
            steps = [Step.from_json(s) for s in data["steps"]]
            return cls(data["context"], exprs, steps)
        except (KeyError, TypeError, ValueError, GraphFormatError) as exc:
            raise CertificateFormatError(f"malformed certificate: {exc}") from None


def load_certificate(path) -> Certificate:
    with open(path) as fh:
        return Certificate.from_json(fh.read())


def example_certificate() -> Certificate:
    """The shipped P_4 to K_{1,3} chromatic certificate."""
    text = resources.files("graphpoly").joinpath("data/p4_k13_chromatic.json").read_text()
    return Certificate.from_json(text)


# values -----------------------------------------------------------------

def graph_value(g: Multigraph, context: str) -> MultiPoly:
    if context == "tutte":
        return tutte_poly(g)
    if context == "chromatic":
        return chromatic_poly(g)
    raise ValueError(f"unknown context {context!r}")


def expression_value(expr: Expression, context: str) -> MultiPoly:
    total = MultiPoly.const(0)
    for t in expr.terms:
        prod = MultiPoly.const(t.coef)
        for g in t.factors:
            prod = prod * graph_value(g, context)
        total = total + prod
    var = ("x", "y") if context == "tutte" else ("q",)
    return MultiPoly(total.terms, var)


# rules ------------------------------------------------------------------

def _sign_dc(context: str) -> int:
    return 1 if context == "tutte" else -1


def _sign_ai(context: str) -> int:
    return -1 if context == "tutte" else 1


def _same_component(g: Multigraph, u: int, v: int) -> bool:
    return any(u in c and v in c for c in g.components())


def _check_pair(g: Multigraph, u, v, context: str) -> None:
    if not (isinstance(u, int) and isinstance(v, int)) or u == v:
        raise RuleError("needs two distinct vertices u, v")
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise RuleError("vertex out of range")
    if g.has_edge(u, v):
        raise RuleError(f"vertices {u} and {v} are adjacent")
    if context == "tutte" and not _same_component(g, u, v):
        raise RuleError("tutte addition needs u and v in the same component")


def _check_edge(g: Multigraph, e, context: str) -> None:
    if not isinstance(e, int) or not 0 <= e < g.m:
        raise RuleError(f"no edge {e!r}")
    if context == "tutte" and g.classify_edge(e) != EdgeKind.ORDINARY:
        raise RuleError("tutte deletion-contraction needs an ordinary edge")


def _replace(term: Term, f: int, graphs, coef=None) -> Term:
    factors = term.factors[:f] + tuple(graphs) + term.factors[f + 1:]
    return Term(term.coef if coef is None else coef, factors)


def _splice(expr: Expression, t: int, new_terms, drop=()) -> Expression:
    out = []
    for i, term in enumerate(expr.terms):
        if i == t:
            out.extend(new_terms)
        elif i not in drop:
            out.append(term)
    return Expression(tuple(out))


def _block_key(graphs) -> Counter:
    out: Counter = Counter()
    for g in graphs:
        out.update(_cf(b) for b in g.blocks())
    return out


def _partner(expr: Expression, t: int, f: int, params: dict, coef) -> Multigraph:
    t2 = params.get("partner")
    if not isinstance(t2, int) or not 0 <= t2 < len(expr.terms) or t2 == t:
        raise RuleError("needs a partner term distinct from the located one")
    term, other = expr.terms[t], expr.terms[t2]
    if other.coef != coef:
        raise RuleError(f"partner coefficient must be {coef}")
    if len(other.factors) != len(term.factors):
        raise RuleError("partner term has a different number of factors")
    for i, (a, b) in enumerate(zip(term.factors, other.factors)):
        if i != f and _cf(a) != _cf(b):
            raise RuleError("partner term differs outside the located factor")
    return other.factors[f]


def apply_rule(expr: Expression, step: Step, context: str) -> Expression:
    """The expression obtained by applying ``step``; raises RuleError if it does not apply."""
    if context not in CONTEXTS:
        raise RuleError(f"unknown context {context!r}")
    if step.rule not in RULES:
        raise RuleError(f"unknown rule {step.rule!r}")
    if step.rule in ("BLOCKS", "GLUE") and context != "tutte":
        raise RuleError(f"{step.rule} is only available for the tutte polynomial")
    try:
        t, f = (int(x) for x in step.locus)
    except (TypeError, ValueError):
        raise RuleError("locus must be a pair of integers") from None
    if not 0 <= t < len(expr.terms):
        raise RuleError(f"no term {t}")
    term = expr.terms[t]
    if not 0 <= f < len(term.factors):
        raise RuleError(f"term {t} has no factor {f}")
    g = term.factors[f]
    p = step.params
    inverse = bool(p.get("inverse", False))

    if step.rule == "DC" and not inverse:
        e = p.get("edge")
        _check_edge(g, e, context)
        return _splice(expr, t, [
            _replace(term, f, [g.delete_edge(e)]),
            _replace(term, f, [g.contract_edge(e)], _sign_dc(context) * term.coef)])

    if step.rule == "DC":
        u, v = p.get("u"), p.get("v")
        _check_pair(g, u, v, context)
        b = _partner(expr, t, f, p, _sign_dc(context) * term.coef)
        if _cf(b) != _cf(g.identify_vertices(u, v)):
            raise RuleError("partner factor is not the identification A/uv")
        return _splice(expr, t, [_replace(term, f, [g.add_edge(u, v)])], drop={p["partner"]})

    if step.rule == "AI" and not inverse:
        u, v = p.get("u"), p.get("v")
        _check_pair(g, u, v, context)
        return _splice(expr, t, [
            _replace(term, f, [g.add_edge(u, v)]),
            _replace(term, f, [g.identify_vertices(u, v)], _sign_ai(context) * term.coef)])

    if step.rule == "AI":
        e = p.get("edge")
        _check_edge(g, e, context)
        if g.edges[e][0] == g.edges[e][1]:
            raise RuleError("cannot remove a loop by addition-identification")
        b = _partner(expr, t, f, p, _sign_ai(context) * term.coef)
        if _cf(b) != _cf(g.contract_edge(e)):
            raise RuleError("partner factor is not the contraction A/e")
        return _splice(expr, t, [_replace(term, f, [g.delete_edge(e)])], drop={p["partner"]})

    if step.rule == "BLOCKS":
        blocks = g.blocks() or [Multigraph(0)]
        return _splice(expr, t, [_replace(term, f, blocks)])

    if step.rule == "GLUE":
        h = p.get("graph")
        idx = p.get("factors", [f])
        if not isinstance(h, Multigraph):
            raise RuleError("GLUE needs a replacement graph")
        if (not isinstance(idx, (list, tuple)) or f not in idx or len(set(idx)) != len(idx)
                or any(not isinstance(i, int) or not 0 <= i < len(term.factors) for i in idx)):
            raise RuleError("GLUE factor list must name distinct factors including the locus")
        if any(len(term.factors[i].blocks()) > 1 for i in idx):
            raise RuleError("GLUE joins blocks; every glued factor must be a single block")
        if _block_key(term.factors[i] for i in idx) != _block_key([h]):
            raise RuleError("block multisets differ")
        keep = [x for i, x in enumerate(term.factors) if i not in idx]
        at = min(idx)
        factors = keep[:at] + [h] + keep[at:]
        return _splice(expr, t, [Term(term.coef, tuple(factors))])

    if step.rule == "ISO":
        h = p.get("graph")
        if not isinstance(h, Multigraph) or _cf(h) != _cf(g):
            raise RuleError("ISO replacement is not isomorphic to the factor")
        return _splice(expr, t, [_replace(term, f, [h])])

    # ALG
    key = term.factor_key()
    same = [i for i, x in enumerate(expr.terms) if x.factor_key() == key]
    if len(same) == 1 and term.coef != 0:
        raise RuleError("no isomorphic terms to merge")
    coef = sum((expr.terms[i].coef for i in same), Fraction(0))
    merged = [Term(coef, term.factors)] if coef else []
    return _splice(expr, same[0], merged, drop=set(same[1:]))


def admissible_steps(expr: Expression, context: str, targets=()) -> list:
    """Every rule application available at ``expr``.

    GLUE and ISO need a graph to produce; they are offered only for the
    graphs in ``targets``.
    """
    steps = []
    keys = [t.factor_key() for t in expr.terms]
    for t, term in enumerate(expr.terms):
        if keys.index(keys[t]) == t and (keys.count(keys[t]) > 1 or term.coef == 0):
            steps.append(Step("ALG", (t, 0)))
        if context == "tutte":
            for h in targets:
                if (all(len(x.blocks()) <= 1 for x in term.factors)
                        and _block_key(term.factors) == _block_key([h])):
                    steps.append(Step("GLUE", (t, 0),
                                      {"graph": h, "factors": list(range(len(term.factors)))}))
        for f, g in enumerate(term.factors):
            if context == "tutte":
                blocks = g.blocks()
                if len(blocks) != 1 or blocks[0].n != g.n:
                    steps.append(Step("BLOCKS", (t, f)))
            for e in range(g.m):
                if context == "chromatic" or g.classify_edge(e) == EdgeKind.ORDINARY:
                    steps.append(Step("DC", (t, f), {"edge": e}))
            pairs = [(u, v) for u, v in combinations(range(g.n), 2) if not g.has_edge(u, v)
                     and (context == "chromatic" or _same_component(g, u, v))]
            for u, v in pairs:
                steps.append(Step("AI", (t, f), {"u": u, "v": v}))
            for h in targets:
                if h != g and _cf(h) == _cf(g):
                    steps.append(Step("ISO", (t, f), {"graph": h}))
            for t2, other in enumerate(expr.terms):
                if t2 == t or len(other.factors) != len(term.factors):
                    continue
                if any(i != f and _cf(a) != _cf(b)
                       for i, (a, b) in enumerate(zip(term.factors, other.factors))):
                    continue
                b = _cf(other.factors[f])
                if other.coef == _sign_dc(context) * term.coef:
                    for u, v in pairs:
                        if _cf(g.identify_vertices(u, v)) == b:
                            steps.append(Step("DC", (t, f),
                                              {"inverse": True, "partner": t2, "u": u, "v": v}))
                if other.coef == _sign_ai(context) * term.coef:
                    for e, (a, c) in enumerate(g.edges):
                        if a == c:
                            continue
                        if context == "tutte" and g.classify_edge(e) != EdgeKind.ORDINARY:
                            continue
                        if _cf(g.contract_edge(e)) == b:
                            steps.append(Step("AI", (t, f),
                                              {"inverse": True, "partner": t2, "edge": e}))
    return steps


# verification and search -------------------------------------------------

@dataclass
class VerifyResult:
    valid: bool
    step: Optional[int] = None  # 1-based index of the first failing step
    reason: str = ""

    def __bool__(self):
        return self.valid

    def __str__(self):
        if self.valid:
            return "VALID"
        where = f" at step {self.step}" if self.step is not None else ""
        return f"INVALID{where}: {self.reason}"


def verify(cert: Certificate, equivalence: bool = True) -> VerifyResult:
    """Check every step syntactically and every expression by value."""
    if cert.context not in CONTEXTS:
        return VerifyResult(False, None, f"unknown context {cert.context!r}")
    exprs, steps = cert.expressions, cert.steps
    if not exprs:
        return VerifyResult(False, None, "no expressions")
    if len(steps) != len(exprs) - 1:
        return VerifyResult(False, None, "need exactly one step between consecutive expressions")
    if equivalence and not (exprs[0].is_single_graph() and exprs[-1].is_single_graph()):
        return VerifyResult(False, None, "first and last expressions must be single graphs")
    value = expression_value(exprs[0], cert.context)
    for i, step in enumerate(steps):
        try:
            produced = apply_rule(exprs[i], step, cert.context)
        except RuleError as exc:
            return VerifyResult(False, i + 1, str(exc))
        if produced.key() != exprs[i + 1].key():
            return VerifyResult(False, i + 1, "rule does not produce the next expression")
        if expression_value(exprs[i + 1], cert.context) != value:
            return VerifyResult(False, i + 1, "polynomial value changed")
    return VerifyResult(True)


@dataclass
class SearchResult:
    found: bool
    certificate: Optional[Certificate] = None
    reason: str = ""
    nodes: int = 0


def search(g: Multigraph, h: Multigraph, context: str, max_depth: int = 3,
           max_nodes: Optional[int] = None) -> SearchResult:
    """Breadth-first search for a shortest certificate from g to h.

    Not finding one within the bounds says nothing about whether one exists.
    """
    if context not in CONTEXTS:
        raise ValueError(f"unknown context {context!r}")
    if graph_value(g, context) != graph_value(h, context):
        return SearchResult(False, reason="not equivalent")
    if max_depth > LIMITS.search_depth:
        return SearchResult(False, reason=f"limit: depth {max_depth} exceeds {LIMITS.search_depth}")
    max_nodes = LIMITS.search_nodes if max_nodes is None else max_nodes
    start = Expression.single(g)
    goal = Expression.single(h).key()
    if start.key() == goal:
        return SearchResult(True, Certificate(context, [start], []), nodes=1)
    seen = {start.key()}
    queue = deque([(start, [start], [])])
    nodes = 1
    while queue:
        expr, path, steps = queue.popleft()
        if len(steps) >= max_depth:
            continue
        for step in admissible_steps(expr, context, targets=(h,)):
            nxt = apply_rule(expr, step, context)
            key = nxt.key()
            if key in seen:
                continue
            seen.add(key)
            nodes += 1
            if key == goal:
                return SearchResult(True, Certificate(context, path + [nxt], steps + [step]),
                                    nodes=nodes)
            if nodes >= max_nodes:
                return SearchResult(False, reason=f"limit: {max_nodes} expressions explored",
                                    nodes=nodes)
            queue.append((nxt, path + [nxt], steps + [step]))
    return SearchResult(False, reason=f"no certificate of length <= {max_depth}", nodes=nodes)
