"""Command-line interface: ``modknot analyze|torus|enumerate|table|hz``.

Exit status is 0 on success, 2 for malformed input and 3 when the input
is well formed but fails a mathematical precondition.
"""

from __future__ import annotations

import argparse
import json
import sys

from .alexander import alexander_of_word, genus
from .braid import (LorenzSpec, components, spec_from_word, tbraid_from_spec,
                    trip_number, word_from_spec, braid_index)
from .enumeration import cached_report, full_table
from .errors import ModknotError, NotAKnot, ParseError, PrecondViolated
from .invariants import hz_class_number, linking_with_trefoil
from .quad import (QuadraticForm, cf_expand, discriminant, form_from_period,
                   principal_root, surd_from_period)
from .words import (bernoulli_rational, christoffel_lower, compress, expand_powers,
                    lyndon_canonical, period_from_word, substitute, word_from_period)

EXIT_OK, EXIT_PARSE, EXIT_MATH = 0, 2, 3


def _surd_json(w) -> dict:
    P, D, Q = w.reduced()
    return {"P": P, "D": D, "Q": Q, "text": str(w)}


def _spec_part(spec: LorenzSpec, report: dict):
    report["spec"] = spec.to_json()
    report["spec_text"] = str(spec)
    try:
        report["tbraid"] = [list(x) for x in tbraid_from_spec(spec)]
    except PrecondViolated:
        report["tbraid"] = None
    report["components"] = components(spec)
    report["trip_number"] = trip_number(spec)


def _word_part(word: str, report: dict):
    """Fields that need a knot word."""
    period = period_from_word(word)
    report["word"] = word
    report["word_compressed"] = compress(word)
    report["period"] = period
    report["bernoulli"] = str(bernoulli_rational(word))
    report["braid_index"] = braid_index(word)
    report["rademacher"] = linking_with_trefoil(word)
    delta = alexander_of_word(word)
    report["alexander"] = delta.to_json()
    report["alexander_text"] = str(delta)
    report["degree"] = delta.degree
    report["genus"] = genus(delta)


def analyze(form=None, word=None, spec=None) -> dict:
    if sum(x is not None for x in (form, word, spec)) != 1:
        raise ParseError("give exactly one of --form, --word, --spec")
    report: dict = {}
    if form is not None:
        q = QuadraticForm.parse(form)
        w = principal_root(q)
        cf = cf_expand(w)
        word = lyndon_canonical(word_from_period(cf.period))
        report["input"] = {"form": list(q)}
        report["form"] = list(q)
        report["discriminant"] = discriminant(q)
        report["surd"] = _surd_json(w)
        report["continued_fraction"] = {"preperiod": list(cf.preperiod), "period": list(cf.period)}
    elif word is not None:
        report["input"] = {"word": word}
        word = lyndon_canonical(expand_powers(word))
    else:
        s = LorenzSpec.parse(spec)
        report["input"] = {"spec": str(s)}
        try:
            word = word_from_spec(s)
        except NotAKnot as e:
            _spec_part(s, report)
            report["note"] = f"not a knot: {e}"
            return report
    if "form" not in report:
        period = period_from_word(word)
        q = form_from_period(period)
        w = surd_from_period(period)
        report["form"] = list(q)
        report["discriminant"] = discriminant(q)
        report["surd"] = _surd_json(w)
        report["continued_fraction"] = {"preperiod": [], "period": period}
    _spec_part(spec_from_word(word), report)
    _word_part(word, report)
    return report


def torus(p: int, q: int) -> dict:
    ch = christoffel_lower(p, q)
    word = substitute(ch, "L", "LR")
    period = period_from_word(word)
    spec = spec_from_word(word)
    delta = alexander_of_word(word)
    return {
        "p": p,
        "q": q,
        "christoffel": ch,
        "word": word,
        "lyndon_word": lyndon_canonical(word),
        "form": list(form_from_period(period)),
        "form_text": str(form_from_period(period)),
        "spec": spec.to_json(),
        "spec_matches": spec.pairs == ((p, q),),
        "alexander": delta.to_json(),
        "alexander_text": str(delta),
    }


_TEXT_ORDER = [
    "form", "discriminant", "surd", "continued_fraction", "word", "word_compressed",
    "period", "bernoulli", "spec_text", "tbraid", "components", "trip_number",
    "braid_index", "rademacher", "alexander_text", "degree", "genus", "note",
]


def _text_value(key, value) -> str:
    if key == "form":
        return str(QuadraticForm(*value))
    if key == "surd":
        return value["text"]
    if key == "continued_fraction":
        return f"preperiod {value['preperiod']} period {value['period']}"
    if key == "tbraid":
        return "n/a" if value is None else " ".join(f"({r},{s})" for r, s in value)
    return str(value)


def _print_report(report: dict, order, out):
    for key in order:
        if key in report:
            label = key.replace("_text", "")
            print(f"{label}: {_text_value(key, report[key])}", file=out)


def _cmd_analyze(args, out):
    report = analyze(args.form, args.word, args.spec)
    if args.json:
        json.dump(report, out, indent=2)
        print(file=out)
    else:
        _print_report(report, _TEXT_ORDER, out)


def _cmd_torus(args, out):
    report = torus(args.p, args.q)
    if args.json:
        json.dump(report, out, indent=2)
        print(file=out)
    else:
        print(f"christoffel: {report['christoffel']}", file=out)
        print(f"word: {report['word']}", file=out)
        print(f"form: {report['form_text']}", file=out)
        print(f"spec: {LorenzSpec.from_json(report['spec'])}", file=out)
        print(f"spec_matches: {report['spec_matches']}", file=out)
        print(f"alexander: {report['alexander_text']}", file=out)


def _cmd_enumerate(args, out):
    rep = cached_report(args.n, args.jobs, args.cache_dir)
    if args.json:
        json.dump(rep.to_json(), out)
        print(file=out)
        return
    print(f"n: {rep.n}", file=out)
    print(f"p(n): {rep.p_n}", file=out)
    print(f"k(n): {rep.k_n}", file=out)
    print(f"#A_n: {rep.a_n}", file=out)
    for p in rep.polynomials:
        print(f"  {p}", file=out)


def _cmd_table(args, out):
    rows = full_table(args.max, args.jobs, args.cache_dir)
    if args.json:
        json.dump([dict(zip(("n", "a_n", "k_n", "p_n"), r)) for r in rows], out)
        print(file=out)
        return
    print(f"{'n':>4} {'#A_n':>6} {'k(n)':>6} {'p(n)':>6}", file=out)
    for n, a, k, p in rows:
        print(f"{n:>4} {a:>6} {k:>6} {p:>6}", file=out)


def _cmd_hz(args, out):
    print(hz_class_number(args.p), file=out)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="modknot", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="invariants of a form, word or Lorenz spec")
    g = a.add_mutually_exclusive_group(required=True)
    g.add_argument("--form", help='coefficients "a,b,c" of an indefinite form')
    g.add_argument("--word", help='primitive L/R word, powers allowed ("L4R3LR2")')
    g.add_argument("--spec", help='Lorenz spec "p1,q1:p2,q2:..."')
    a.add_argument("--json", action="store_true")
    a.set_defaults(func=_cmd_analyze)

    t = sub.add_parser("torus", help="torus knot T(p,q) as a modular knot")
    t.add_argument("p", type=int)
    t.add_argument("q", type=int)
    t.add_argument("--json", action="store_true")
    t.set_defaults(func=_cmd_torus)

    e = sub.add_parser("enumerate", help="Alexander polynomials of degree n")
    e.add_argument("n", type=int)
    e.add_argument("--json", action="store_true")
    e.add_argument("--jobs", type=int, default=1)
    e.add_argument("--cache-dir", default=None)
    e.set_defaults(func=_cmd_enumerate)

    tb = sub.add_parser("table", help="counts #A_n, k(n), p(n) for n = 2..max")
    tb.add_argument("--max", type=int, default=16)
    tb.add_argument("--jobs", type=int, default=1)
    tb.add_argument("--cache-dir", default=None)
    tb.add_argument("--json", action="store_true")
    tb.set_defaults(func=_cmd_table)

    h = sub.add_parser("hz", help="h(-p) from the continued fraction of sqrt(p)")
    h.add_argument("p", type=int)
    h.set_defaults(func=_cmd_hz)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return EXIT_PARSE if e.code else EXIT_OK
    try:
        args.func(args, out)
    except ParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except ModknotError as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_MATH
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
