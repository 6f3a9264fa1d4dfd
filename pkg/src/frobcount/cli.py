"""Command-line front end.

Usage::

    frobcount count "AbelianP(3,[2,1,1])" --p 3 --a 2 [--json]
    frobcount count "GL2(4)" --p 2 --sylow
    frobcount verify --theorem frobenius|kulakoff-hall|cyclic|hall-oracle|multiplicativity \\
        [--corpus FILE]
    frobcount classify --p 3 --n 46 [--corpus FILE] [--json]
    frobcount classify --p 3 --scan 46

Group spec grammar (whitespace ignored)::

    spec   := Cyclic(n) | Dihedral(order) | Symmetric(n) | Alternating(n)
            | GL2(q) | ElemAbelian(p,k) | FrobeniusAffine(q,p)
            | AbelianP(p,[l1,l2,...]) | Product(spec,spec,...)

Corpus files list one spec per line; ``#`` starts a comment.

Exit codes: 0 success, 1 a congruence check failed, 2 unparsable spec or
corpus, 3 a size cap was hit, 4 a precondition failed (e.g. ``p**a`` does
not divide the group order).  Diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys

from ._arith import factorize, p_part_exponent
from .corpus import default_corpus, read_corpus
from .counting import PreconditionError, count_profile, count_subgroups_of_order
from .groups import AbelianP, Cyclic, DirectProduct, ElemAbelian, SpecError, parse_spec
from .hallpoly import hall_count_order
from .perm import TooLargeError
from .verify import (classify_number, corpus_group, frobenius_table, kulakoff_hall_table,
                     scan_range, verify_cyclic_criterion, verify_sylow_multiplicativity)

EXIT_OK, EXIT_VIOLATION, EXIT_PARSE, EXIT_CAP, EXIT_PRECONDITION = 0, 1, 2, 3, 4


def _corpus(path):
    return read_corpus(path) if path else default_corpus()


def cmd_count(args) -> int:
    spec = parse_spec(args.spec)
    G = corpus_group(spec.text)
    a = p_part_exponent(G.order(), args.p) if args.sylow else args.a
    report = count_subgroups_of_order(G, args.p, a)
    if args.json:
        print(report.to_json())
    else:
        print(f"{spec.text}: {report.count} subgroups of order {args.p}^{a}")
        print(f"  mod {args.p} = {report.mod_p}, mod {args.p ** 2} = {report.mod_p2}, "
              f"Sylow order {report.sylow_order}")
        for o in report.orbits:
            print(f"  orbit of length {o.length} (representative order {o.rep_size})")
    return EXIT_OK


def _abelian_type(spec):
    """``(p, partition)`` for the abelian p-group specs, else ``None``."""
    if isinstance(spec, AbelianP):
        return spec.p, spec.parts
    if isinstance(spec, ElemAbelian):
        return spec.p, (1,) * spec.k
    if isinstance(spec, Cyclic) and spec.n > 1 and len(factorize(spec.n)) == 1:
        (p, k), = factorize(spec.n).items()
        return p, (k,)
    return None


def _verify_rows(theorem, spec):
    """Yield ``(p, a, detail, ok)`` rows for one group."""
    G = corpus_group(spec.text)
    if theorem == "frobenius":
        for r in frobenius_table(G):
            yield r.p, r.a, f"count={r.count} mod p={r.residue}", r.p == 1 or r.residue == 1
    elif theorem == "kulakoff-hall":
        for r in kulakoff_hall_table(G):
            yield (r.p, r.a, f"count={r.count} mod p^2={r.residue}",
                   r.residue in (1, 1 + r.p))
    elif theorem == "cyclic":
        for p in factorize(G.order()):
            if p > 2 and p_part_exponent(G.order(), p) >= 2:
                yield p, "*", "cyclic criterion", verify_cyclic_criterion(G, p)
    elif theorem == "hall-oracle":
        typ = _abelian_type(spec)
        if typ is not None:
            p, lam = typ
            for a, n in enumerate(count_profile(G, p)):
                h = hall_count_order(lam, a, p)
                yield p, a, f"engine={n} hall={h}", n == h
    elif theorem == "multiplicativity":
        if isinstance(spec, DirectProduct) and len(spec.factors) == 2:
            for p in factorize(G.order()):
                yield (p, "sylow", "n_p(product) = n_p(A) n_p(B)",
                       verify_sylow_multiplicativity(*spec.factors, p))


def cmd_verify(args) -> int:
    failures = 0
    checked = 0
    for spec in _corpus(args.corpus):
        for p, a, detail, ok in _verify_rows(args.theorem, spec):
            checked += 1
            if not ok:
                failures += 1
                print(f"VIOLATION {spec.text} p={p} a={a} {detail}", file=sys.stderr)
            if args.verbose or not ok:
                print(f"{'ok  ' if ok else 'FAIL'} {spec.text} p={p} a={a} {detail}")
    print(f"{args.theorem}: {checked} checks, {failures} violations")
    return EXIT_VIOLATION if failures else EXIT_OK


def cmd_classify(args) -> int:
    corpus = _corpus(args.corpus)
    if args.scan is not None:
        verdicts = scan_range(args.p, args.scan, corpus)
    else:
        verdicts = [classify_number(args.p, args.n, corpus)]
    if args.json:
        payload = [v.to_dict() for v in verdicts] if args.scan is not None else verdicts[0].to_dict()
        print(json.dumps(payload, sort_keys=True))
        return EXIT_OK
    for v in verdicts:
        wit = f"{v.witness[0]} a={v.witness[1]}" if v.witness else "none"
        print(f"n={v.n:<5} {v.status.value:<22} witness: {wit}")
        if args.scan is None:
            for note in v.notes:
                print(f"  - {note}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="frobcount", description=__doc__.split("\n\n")[0])
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("count", help="count subgroups of order p^a")
    c.add_argument("spec")
    c.add_argument("--p", type=int, required=True)
    g = c.add_mutually_exclusive_group(required=True)
    g.add_argument("--a", type=int)
    g.add_argument("--sylow", action="store_true")
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_count)

    v = sub.add_parser("verify", help="check a congruence over a corpus")
    v.add_argument("--theorem", required=True,
                   choices=["frobenius", "kulakoff-hall", "cyclic", "hall-oracle",
                            "multiplicativity"])
    v.add_argument("--corpus")
    v.add_argument("--verbose", action="store_true")
    v.set_defaults(func=cmd_verify)

    k = sub.add_parser("classify", help="classify n as a Frobenius p-number")
    k.add_argument("--p", type=int, required=True)
    g = k.add_mutually_exclusive_group(required=True)
    g.add_argument("--n", type=int)
    g.add_argument("--scan", type=int, metavar="N_MAX")
    k.add_argument("--corpus")
    k.add_argument("--json", action="store_true")
    k.set_defaults(func=cmd_classify)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SpecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except TooLargeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
