"""Command-line front end.

Exit codes: 0 success, 2 malformed input, 3 failed verification.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass

from . import expand as ex
from .evaluate import METHODS, NotStaircaseError, leading_monomial_formula, phi, phi_inverse, schubert_word
from .poly import (
    Monomial,
    Polynomial,
    PolynomialError,
    display_key,
    format_monomial,
    format_polynomial,
    in_staircase,
    leading_term,
    minimal_rank,
    parse_monomial,
    parse_polynomial,
)
from .verify import SUITES, max_rank_cap, run_suite
from .words import (
    CanonicalForm,
    WordError,
    from_one_line,
    parse_canonical,
    parse_one_line,
    parse_word,
    rewrite_to_canonical,
    to_one_line,
)

EXIT_OK, EXIT_INPUT, EXIT_VERIFY = 0, 2, 3
INDEX_KINDS = ("auto", "word", "perm", "lead")


class InputError(Exception):
    pass


class VerificationError(Exception):
    pass


@dataclass(frozen=True)
class Index:
    """A Schubert index resolved to the operator word ``u`` in S_rank."""

    u: CanonicalForm

    @property
    def rank(self) -> int:
        return self.u.rank

    @property
    def permutation(self) -> CanonicalForm:
        return ex.index_convert(self.u)

    @property
    def lead(self) -> Monomial:
        return phi(self.u)


def _parse_element(text: str, rank: int | None) -> tuple[str, CanonicalForm]:
    """Parse a word, canonical form or one-line permutation.

    Returns the syntactic kind and the element in S_n for the smallest
    admissible n (at least ``rank`` when given).
    """
    s = text.strip()
    if s.startswith("i"):
        cf = parse_canonical(s)
        kind = "word"
    elif s.startswith("["):
        cf = from_one_line(parse_one_line(s))
        kind = "perm"
    else:
        gw = parse_word(s, rank)
        cf = rewrite_to_canonical(gw)
        kind = "word"
    if rank is not None:
        cf = cf.embed(rank)
    return kind, cf


def _looks_like_monomial(text: str) -> bool:
    return bool(re.fullmatch(r"\s*(1|x\d+(\^\d+)?(\s*\*\s*x\d+(\^\d+)?)*)\s*", text))


def resolve_index(text: str, index_by: str = "auto", rank: int | None = None) -> Index:
    """Turn user text into an operator word ``u``.

    ``word``: the text names ``u`` itself (rank taken from the text unless
    ``rank`` is given).  ``perm``: the text names the permutation ``w`` and
    ``u = [w^{-1} w0^n]`` for the smallest sufficient ``n``.  ``lead``: the
    text is the leading monomial.  ``auto`` picks ``lead`` for monomials,
    ``perm`` for one-line notation and ``word`` otherwise.
    """
    if index_by not in INDEX_KINDS:
        raise InputError(f"unknown index kind {index_by!r}")
    if index_by == "lead" or (index_by == "auto" and _looks_like_monomial(text)):
        w = parse_monomial(text)
        n = minimal_rank(w) if rank is None else rank
        if not in_staircase(w, n):
            raise InputError(f"{format_monomial(w)} is not a staircase monomial for S_{n}")
        return Index(phi_inverse(w, n))
    kind, cf = _parse_element(text, rank)
    if index_by != "auto":
        kind = index_by
    if kind == "perm":
        n = cf.trimmed().rank if rank is None else rank
        return Index(ex.index_convert(cf, max(n, 1), to="word"))
    return Index(cf)


# --- output helpers -------------------------------------------------------------------


def _emit(args, header: str, lines: list[str], payload: dict) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=False))
        return
    print(f"# {header}")
    for line in lines:
        print(line)


def _poly_terms_json(f: Polynomial) -> list[dict]:
    return [
        {"index_word": None, "index_oneline": None, "monomial": format_monomial(m), "coefficient": c}
        for m, c in sorted(f.items(), key=lambda t: display_key(t[0]))
    ]


def format_expansion(e: ex.SchubertExpansion) -> list[str]:
    """One line per term: coefficient, index monomial, word, permutation."""
    return [
        f"{c}\t{format_monomial(w)}\t{e.word(w)}\t{e.permutation(w)}"
        for w, c in e.sorted_terms()
    ]


def parse_expansion(lines: list[str]) -> ex.SchubertExpansion:
    terms = {}
    for line in lines:
        if not line.strip() or line.startswith("#"):
            continue
        coeff, mono, *_ = line.split("\t")
        terms[parse_monomial(mono)] = int(coeff)
    return ex.SchubertExpansion(terms)


def _expansion_json(e: ex.SchubertExpansion) -> list[dict]:
    return [
        {
            "index_word": str(e.word(w)),
            "index_oneline": str(e.permutation(w)),
            "monomial": format_monomial(w),
            "coefficient": c,
        }
        for w, c in e.sorted_terms()
    ]


# --- commands ---------------------------------------------------------------------------


def cmd_normal_form(args) -> int:
    word = parse_word(args.word, args.n)
    cf = rewrite_to_canonical(word)
    _emit(
        args,
        f"normal-form rank={cf.rank} length={cf.length()}",
        [str(cf)],
        {"input": args.word, "method": "rewrite", "rank": cf.rank, "result": str(cf), "length": cf.length()},
    )
    return EXIT_OK


def cmd_schubert(args) -> int:
    idx = resolve_index(args.index, args.index_by, args.n)
    methods = METHODS if args.verify else (args.method,)
    results = {m: schubert_word(idx.u, m) for m in methods}
    f = results[methods[0]]
    if len(set(results.values())) != 1:
        detail = "; ".join(f"{m}: {format_polynomial(p)}" for m, p in results.items())
        raise VerificationError(f"methods disagree for {idx.u}: {detail}")
    method = "+".join(methods)
    _emit(
        args,
        f"schubert u={idx.u} w={to_one_line(idx.permutation)} rank={idx.rank} method={method}",
        [format_polynomial(f)],
        {"input": args.index, "method": method, "rank": idx.rank, "terms": _poly_terms_json(f)},
    )
    return EXIT_OK


def cmd_leading_monomial(args) -> int:
    f = parse_polynomial(args.polynomial)
    m, c = leading_term(f)
    text = format_polynomial(Polynomial({m: c}))
    _emit(
        args,
        "leading-monomial",
        [text],
        {"input": args.polynomial, "method": "term-order", "rank": minimal_rank(m),
         "terms": [{"index_word": None, "index_oneline": None, "monomial": format_monomial(m), "coefficient": c}]},
    )
    return EXIT_OK


def cmd_phi(args) -> int:
    idx = resolve_index(args.index, args.index_by, args.n)
    lead = leading_monomial_formula(idx.u)
    if args.verify:
        got = leading_term(schubert_word(idx.u, "direct"))
        if got != (lead, 1):
            raise VerificationError(f"closed form {format_monomial(lead)} but polynomial leads with {got}")
    _emit(
        args,
        f"phi u={idx.u} rank={idx.rank}",
        [format_monomial(lead)],
        {"input": args.index, "method": "closed-form", "rank": idx.rank,
         "terms": [{"index_word": str(idx.u), "index_oneline": str(to_one_line(idx.permutation)),
                    "monomial": format_monomial(lead), "coefficient": 1}]},
    )
    return EXIT_OK


def cmd_phi_inverse(args) -> int:
    w = parse_monomial(args.monomial)
    n = minimal_rank(w) if args.n is None else args.n
    u = phi_inverse(w, n)
    if args.verify and phi(u) != w:
        raise VerificationError(f"phi(phi_inverse({format_monomial(w)})) = {format_monomial(phi(u))}")
    perm = to_one_line(ex.index_convert(u))
    _emit(
        args,
        f"phi-inverse rank={n} w={perm}",
        [str(u)],
        {"input": args.monomial, "method": "constructive", "rank": n,
         "terms": [{"index_word": str(u), "index_oneline": str(perm), "monomial": format_monomial(w), "coefficient": 1}]},
    )
    return EXIT_OK


def _emit_expansion(args, name: str, method: str, e: ex.SchubertExpansion) -> None:
    _emit(
        args,
        f"{name} rank={e.rank} method={method} terms={len(e)}",
        format_expansion(e),
        {"input": args.input_text, "method": method, "rank": e.rank, "terms": _expansion_json(e)},
    )


def cmd_monk(args) -> int:
    if args.k < 1:
        raise InputError(f"Monk index must be >= 1, got {args.k}")
    idx = resolve_index(args.index, args.index_by, args.n)
    image = to_one_line(idx.permutation).image
    e = ex.monk(args.k, image)
    if args.verify:
        f = Polynomial({(0,) * j + (1,): 1 for j in range(args.k)}) * ex.schubert_of_lead(idx.lead, "direct")
        if e.to_polynomial("direct") != f:
            raise VerificationError("Monk expansion does not reconstruct the product")
    args.input_text = f"{args.k} {args.index}"
    _emit_expansion(args, "monk", "monk", e)
    return EXIT_OK


def cmd_multiply(args) -> int:
    a = resolve_index(args.u, args.index_by, args.n)
    b = resolve_index(args.v, args.index_by, args.n)
    e = ex.multiply(a.lead, b.lead, args.method)
    if args.verify:
        other = ex.multiply(a.lead, b.lead, "2" if args.method == "1" else "1")
        if other != e:
            raise VerificationError("Algorithm 1 and Algorithm 2 disagree")
        if e.to_polynomial("direct") != ex.schubert_product(a.lead, b.lead, "direct"):
            raise VerificationError("expansion does not reconstruct the product")
    args.input_text = f"{args.u} {args.v}"
    _emit_expansion(args, "multiply", f"alg{args.method}", e)
    return EXIT_OK


def cmd_expand(args) -> int:
    f = parse_polynomial(args.polynomial)
    e = ex.expand_in_schubert_basis(f, args.method)
    if args.verify and e.to_polynomial("direct") != f:
        raise VerificationError("expansion does not reconstruct the input")
    args.input_text = args.polynomial
    _emit_expansion(args, "expand", args.method, e)
    return EXIT_OK


def cmd_verify(args) -> int:
    suites = args.suite or list(SUITES)
    n = max_rank_cap() if args.n is None else args.n
    ok = True
    report = []
    for name in suites:
        checks = run_suite(name, n, count=args.count)
        for c in checks:
            ok &= c.passed
            report.append({"suite": name, "property": c.name, "passed": c.passed,
                           "cases": c.cases, "counterexample": c.counterexample})
            if not args.json:
                print(f"[{name}] {c.line()}")
    if args.json:
        print(json.dumps({"input": suites, "method": "verify", "rank": n, "checks": report}))
    else:
        print("all checks passed" if ok else "some checks FAILED")
    return EXIT_OK if ok else EXIT_VERIFY


# --- argument parsing -----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="schubert", description="Schubert polynomials and their structure constants.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, index=True):
        sp.add_argument("-n", type=int, default=None, help="ambient rank (default: smallest sufficient)")
        sp.add_argument("--json", action="store_true", help="emit one JSON object")
        sp.add_argument("--verify", action="store_true", help="cross-check with an independent method")
        if index:
            sp.add_argument("--index-by", choices=INDEX_KINDS, default="auto",
                            help="how to read indices: operator word, permutation or leading monomial")

    sp = sub.add_parser("normal-form", help="rewrite a word like 's3 s2 s3' to i=(...)")
    sp.add_argument("word")
    common(sp, index=False)
    sp.set_defaults(func=cmd_normal_form)

    sp = sub.add_parser("schubert", help="the Schubert polynomial d_u S_{w0}")
    sp.add_argument("index")
    sp.add_argument("--method", choices=METHODS, default="Q")
    common(sp)
    sp.set_defaults(func=cmd_schubert)

    sp = sub.add_parser("leading-monomial", help="leading term of a polynomial")
    sp.add_argument("polynomial")
    common(sp, index=False)
    sp.set_defaults(func=cmd_leading_monomial)

    sp = sub.add_parser("phi", help="closed-form leading monomial of an index")
    sp.add_argument("index")
    common(sp)
    sp.set_defaults(func=cmd_phi)

    sp = sub.add_parser("phi-inverse", help="operator word with a given leading monomial")
    sp.add_argument("monomial")
    common(sp, index=False)
    sp.set_defaults(func=cmd_phi_inverse)

    sp = sub.add_parser("monk", help="S_{s_k} * S_w by Monk's rule")
    sp.add_argument("k", type=int)
    sp.add_argument("index")
    common(sp)
    sp.set_defaults(func=cmd_monk)

    sp = sub.add_parser("multiply", help="expand S_u * S_v in the Schubert basis")
    sp.add_argument("u")
    sp.add_argument("v")
    sp.add_argument("--method", choices=("1", "2"), default="1")
    common(sp)
    sp.set_defaults(func=cmd_multiply)

    sp = sub.add_parser("expand", help="expand a polynomial in the Schubert basis")
    sp.add_argument("polynomial")
    sp.add_argument("--method", choices=METHODS, default="Q", help="evaluator for the subtracted polynomials")
    common(sp, index=False)
    sp.set_defaults(func=cmd_expand)

    sp = sub.add_parser("verify", help="run invariant sweeps")
    sp.add_argument("--suite", action="append", choices=SUITES)
    sp.add_argument("--count", type=int, default=1000, help="random instances for the nilcoxeter suite")
    sp.add_argument("-n", type=int, default=None, help="largest rank (capped by SCHUBERT_MAX_RANK)")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except VerificationError as err:
        print(f"verification failed: {err}", file=sys.stderr)
        return EXIT_VERIFY
    except (InputError, WordError, PolynomialError, NotStaircaseError, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
