"""Brute-force point counting of projective schemes over finite fields.

Projective points are enumerated by normalized representatives: the first
nonzero coordinate is 1, so each point is visited exactly once and the
representative space partitions cleanly across workers.
"""

import itertools
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from .errors import BudgetExceeded, NoSignWorks, SchemaError
from .finitefield import FieldTower, FiniteField
from .series import TruncatedSeries, pade_reconstruct
from .zeta import scheme_functional_equation, zeta_from_traces

DEFAULT_BUDGET = 10**8


# --- polynomial expression parsing -------------------------------------

class _Tokenizer:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def peek(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1
        if self.pos >= len(self.text):
            return None
        ch = self.text[self.pos]
        if ch.isdigit():
            j = self.pos
            while j < len(self.text) and self.text[j].isdigit():
                j += 1
            return ("int", self.text[self.pos : j])
        if ch.isalpha() or ch == "_":
            j = self.pos
            while j < len(self.text) and (self.text[j].isalnum() or self.text[j] == "_"):
                j += 1
            return ("name", self.text[self.pos : j])
        if ch in "+-*^()":
            return (ch, ch)
        raise SchemaError(f"unexpected character {ch!r} in equation")

    def next(self):
        tok = self.peek()
        if tok is not None:
            self.pos += len(tok[1])
        return tok


def parse_equation(text, variables):
    """Parse an integer-coefficient polynomial expression into a monomial
    dict {exponent tuple: coefficient}.  Grammar: +, -, *, ^, parentheses,
    integer literals, and the declared variable names."""
    var_index = {v: i for i, v in enumerate(variables)}
    nvars = len(variables)
    tz = _Tokenizer(text)

    def mono_mul(a, b):
        out = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                key = tuple(x + y for x, y in zip(ea, eb))
                out[key] = out.get(key, 0) + ca * cb
        return {k: v for k, v in out.items() if v}

    def mono_add(a, b, s=1):
        out = dict(a)
        for k, v in b.items():
            out[k] = out.get(k, 0) + s * v
        return {k: v for k, v in out.items() if v}

    zero_exp = (0,) * nvars

    def parse_atom():
        tok = tz.next()
        if tok is None:
            raise SchemaError("unexpected end of equation")
        kind, val = tok
        if kind == "int":
            return {zero_exp: int(val)}
        if kind == "name":
            if val not in var_index:
                raise SchemaError(f"unknown variable {val!r} in equation")
            exp = [0] * nvars
            exp[var_index[val]] = 1
            return {tuple(exp): 1}
        if kind == "(":
            inner = parse_expr()
            closing = tz.next()
            if closing is None or closing[0] != ")":
                raise SchemaError("missing closing parenthesis in equation")
            return inner
        if kind == "-":
            return mono_add({}, parse_factor(), -1)
        raise SchemaError(f"unexpected token {val!r} in equation")

    def parse_factor():
        base = parse_atom()
        tok = tz.peek()
        if tok is not None and tok[0] == "^":
            tz.next()
            etok = tz.next()
            if etok is None or etok[0] != "int":
                raise SchemaError("exponent must be an integer literal")
            e = int(etok[1])
            result = {zero_exp: 1}
            for _ in range(e):
                result = mono_mul(result, base)
            return result
        return base

    def parse_term():
        acc = parse_factor()
        while True:
            tok = tz.peek()
            if tok is not None and tok[0] == "*":
                tz.next()
                acc = mono_mul(acc, parse_factor())
            else:
                return acc

    def parse_expr():
        tok = tz.peek()
        sign = 1
        if tok is not None and tok[0] in "+-":
            tz.next()
            sign = -1 if tok[0] == "-" else 1
        acc = mono_add({}, parse_term(), sign)
        while True:
            tok = tz.peek()
            if tok is not None and tok[0] in "+-":
                tz.next()
                acc = mono_add(acc, parse_term(), -1 if tok[0] == "-" else 1)
            else:
                return acc

    result = parse_expr()
    if tz.peek() is not None:
        raise SchemaError(f"trailing input in equation: {text!r}")
    return result


def _check_homogeneous(monomials, source):
    degrees = {sum(exp) for exp in monomials}
    if len(degrees) > 1:
        raise SchemaError(f"equation {source!r} is not homogeneous: degrees {sorted(degrees)}")


@dataclass(frozen=True)
class ProjectiveScheme:
    variables: tuple
    equations: tuple  # of monomial dicts
    p: int
    r: int = 1
    dim_hint: Optional[int] = None
    label: str = ""

    @property
    def num_vars(self):
        return len(self.variables)

    @property
    def base_q(self):
        return self.p**self.r

    @classmethod
    def from_dict(cls, data):
        try:
            p = int(data["p"])
            variables = tuple(data["vars"])
        except (KeyError, TypeError, ValueError) as exc:
            raise SchemaError(f"scheme JSON missing or malformed field: {exc}") from exc
        if not variables:
            raise SchemaError("scheme needs at least one variable")
        r = int(data.get("r", 1))
        eq_texts = data.get("equations", [])
        equations = []
        for text in eq_texts:
            mono = parse_equation(text, variables)
            _check_homogeneous(mono, text)
            equations.append(tuple(sorted(mono.items())))
        return cls(
            variables=variables,
            equations=tuple(equations),
            p=p,
            r=r,
            dim_hint=data.get("dim"),
            label=data.get("label", ""),
        )


@dataclass(frozen=True)
class CountVector:
    counts: tuple
    q: int


def representative_count(q, num_vars):
    """Number of normalized projective representatives = (q^v - 1)/(q - 1)."""
    return (q**num_vars - 1) // (q - 1)


def _compile_equations(scheme: ProjectiveScheme, field: FiniteField):
    """Reduce each equation's coefficients into the field; drop equations
    that vanish identically mod p."""
    compiled = []
    for eq in scheme.equations:
        terms = []
        for exp, coeff in eq:
            c = coeff % field.p
            if c:
                terms.append((c, exp))
        compiled.append(tuple(terms))
    return tuple(compiled)


def _count_chunk(field: FiniteField, compiled, prefix, free_count, first_values):
    """Count solutions among representatives prefix + (v, *free) with the
    first free coordinate restricted to first_values."""
    mul = field.mul
    pw = field.pow
    add = field.add
    p = field.p
    count = 0
    rest = free_count - 1
    iterator = (
        ((v,) + tail)
        for v in first_values
        for tail in itertools.product(field.elements(), repeat=rest)
    ) if free_count > 0 else iter([()])
    for tail in iterator:
        point = prefix + tail
        ok = True
        for terms in compiled:
            acc = 0
            for coeff, exp in terms:
                term = coeff % p
                for x, e in zip(point, exp):
                    if e:
                        if x == 0:
                            term = 0
                            break
                        term = mul(term, pw(x, e))
                if term:
                    acc = add(acc, term)
            if acc != 0:
                ok = False
                break
        if ok:
            count += 1
    return count


def _worker_count(args):
    p, m, compiled, prefix, free_count, first_values = args
    field = FiniteField(p, m)
    return _count_chunk(field, compiled, prefix, free_count, list(first_values))


def count_points(
    scheme: ProjectiveScheme,
    tower: FieldTower,
    n: int,
    budget: int = DEFAULT_BUDGET,
    workers: int = 1,
):
    """|X(F_{q^n})|: exact projective point count by enumeration."""
    if scheme.base_q != tower.q:
        raise ValueError("scheme base field does not match tower")
    field = tower.build_extension(n)
    q = field.q
    v = scheme.num_vars
    total = representative_count(q, v)
    if total > budget:
        raise BudgetExceeded(
            f"{total} representatives over F_{{{tower.q}^{n}}} exceeds budget {budget}"
        )
    compiled = _compile_equations(scheme, field)
    count = 0
    jobs = []
    for lead in range(v):
        prefix = (0,) * lead + (1,)
        free_count = v - lead - 1
        if workers > 1 and free_count > 0 and q >= workers:
            elems = list(field.elements())
            chunk = (q + workers - 1) // workers
            for s in range(0, q, chunk):
                jobs.append(
                    (field.p, field.m, compiled, prefix, free_count, tuple(elems[s : s + chunk]))
                )
        else:
            count += _count_chunk(field, compiled, prefix, free_count, list(field.elements()))
    if jobs:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for sub in pool.map(_worker_count, jobs):
                count += sub
    return count


def count_vector(scheme, tower, m, budget=DEFAULT_BUDGET, workers=1) -> CountVector:
    counts = tuple(
        count_points(scheme, tower, n, budget=budget, workers=workers)
        for n in range(1, m + 1)
    )
    return CountVector(counts=counts, q=tower.q)


@dataclass(frozen=True)
class SchemeZetaReport:
    counts: CountVector
    series: TruncatedSeries
    rational: object
    euler_characteristic: int
    dimension: int
    sign: Optional[int]
    # irreducibility of the input scheme is assumed, never certified
    caveats: Tuple[str, ...] = ()


def _infer_dimension(counts: CountVector):
    """Least d with N_n = O(q^{dn}): read off from the last count."""
    n = len(counts.counts)
    last = counts.counts[-1]
    if last == 0:
        return 0
    d = 0
    while counts.q ** (d * n) * 2 < last:
        d += 1
    return d


def hasse_weil_zeta(
    scheme: ProjectiveScheme,
    m: int,
    budget: int = DEFAULT_BUDGET,
    workers: int = 1,
) -> SchemeZetaReport:
    """Count N_1..N_m, assemble exp(sum N_n t^n / n), reconstruct the
    rational form, and check the functional equation.

    The degree gap of the reduced rational function is reported as the
    Euler characteristic E.  Raises NotRational when m is too small (or
    the input is not of the expected shape).
    """
    if m < 2:
        raise ValueError("need at least 2 terms")
    tower = FieldTower(scheme.p, scheme.r)
    counts = count_vector(scheme, tower, m, budget=budget, workers=workers)
    series = zeta_from_traces([Fraction(c) for c in counts.counts], m)
    rational = pade_reconstruct(series, m // 2)
    e = rational.degree_gap
    d = scheme.dim_hint if scheme.dim_hint is not None else _infer_dimension(counts)
    try:
        sign = scheme_functional_equation(rational, tower.q, d, e)
    except NoSignWorks:
        sign = None
    return SchemeZetaReport(
        counts=counts,
        series=series,
        rational=rational,
        euler_characteristic=e,
        dimension=d,
        sign=sign,
        caveats=("irreducibility of the scheme not verified",),
    )


def default_workers():
    return max(1, os.cpu_count() or 1)
