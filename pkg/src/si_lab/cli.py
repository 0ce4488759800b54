"""si-lab command line.

    python -m si_lab classify "0,1;0,0" --oracle-max-len 8
    python -m si_lab classify --corpus rns-3-4-5 --json
    python -m si_lab oracle "i,0;0,0" --dump closure.json
    python -m si_lab reduce TtT "0,1;0,0"
    python -m si_lab trace-norm 4/5 25/16
    python -m si_lab corpus --run-all
    python -m si_lab crosscheck --seed 0

Exit codes: 0 ok, 2 bad input, 3 classifier and oracle disagree on an exact
answer, 4 word reduction does not match direct evaluation.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import time
from fractions import Fraction

from . import corpus as corpus_mod
from .classifier import UNKNOWN, YES, NO, Verdict, classify
from .exact_arith import DimensionError, ExactMatrix
from .matrix_io import (EntryParseError, closure_dump, load_matrix_file, matrix_to_rows,
                        parse_entry, parse_inline)
from .oracle import check_si, check_simple, default_max_elems, generate_closure
from .rankone import NotRankOne, profile
from .scalar_solver import explain_trace_norm, verify_witness
from .transforms import conjugate, exact_unitary
from .word_engine import (WordSyntaxError, evaluate_word, monomial_value, parse_word,
                          reduce_rank_one, soundness_mismatches)

EXIT_OK, EXIT_INPUT, EXIT_DISAGREE, EXIT_UNSOUND = 0, 2, 3, 4


class InputError(Exception):
    pass


# -- input ------------------------------------------------------------------------

def resolve_matrix(source: str | None, corpus_name: str | None) -> tuple[str | None, ExactMatrix]:
    if corpus_name:
        try:
            entry = corpus_mod.get(corpus_name)
        except KeyError as exc:
            raise InputError(str(exc.args[0]))
        return entry.name, entry.matrix()
    if not source:
        raise InputError("give a matrix (file or inline like '0,1;0,0') or --corpus NAME")
    try:
        if os.path.exists(source):
            name, M = load_matrix_file(source)
        else:
            name, M = None, parse_inline(source)
    except (EntryParseError, DimensionError, ValueError, json.JSONDecodeError) as exc:
        raise InputError(str(exc))
    if not M.is_square():
        raise InputError(f"matrix must be square, got {M.rows}x{M.cols}")
    return name, M


def _max_elems(args) -> int:
    if getattr(args, "max_elems", None):
        return args.max_elems
    return default_max_elems()


# -- reports ----------------------------------------------------------------------

def compare(classifier_value: str, oracle_answer) -> str:
    if classifier_value == UNKNOWN:
        return "classifier-unknown"
    if oracle_answer.value not in (YES, NO) or not oracle_answer.exact:
        return "oracle-inconclusive"
    return "agree" if oracle_answer.value == classifier_value else "disagree"


def overall_agreement(parts: dict[str, str]) -> str:
    vals = [v for v in parts.values() if v != "classifier-unknown"]
    if "disagree" in vals:
        return "disagree"
    if vals and all(v == "agree" for v in vals):
        return "agree"
    return "oracle-inconclusive"


def run_oracle(T: ExactMatrix, verdict: Verdict, max_len: int, max_elems: int, workers: int = 1) -> dict:
    S = generate_closure([T], include_adjoints=True, max_len=max_len,
                         max_elems=max_elems, workers=workers)
    si = check_si(S)
    simple = check_simple(S)
    parts = {"si": compare(verdict.si, si), "simple": compare(verdict.simple, simple)}
    return {
        "used": True,
        "max_len": max_len,
        "max_len_reached": S.max_len_reached,
        "saturated": S.saturated,
        "element_count": len(S),
        "si": si.to_json(),
        "simple": simple.to_json(),
        "agreement_by_component": parts,
        "agreement": overall_agreement(parts),
    }


def build_report(name, T: ExactMatrix, oracle_max_len: int, max_elems: int, workers: int = 1) -> dict:
    v = classify(T)
    report = {
        "input": {"name": name, "rows": matrix_to_rows(T)},
        "invariants": dict(v.invariants),
        "verdict": v.to_json(with_invariants=False),
    }
    if oracle_max_len > 0:
        report["oracle"] = run_oracle(T, v, oracle_max_len, max_elems, workers)
    else:
        report["oracle"] = {"used": False, "agreement": "not-run"}
    return report


def render_report(rep: dict) -> str:
    lines = []
    name = rep["input"]["name"] or "<inline>"
    rows = "; ".join(", ".join(r) for r in rep["input"]["rows"])
    lines.append(f"matrix   {name}: [{rows}]")
    inv = rep["invariants"]
    lines.append("invariants " + " ".join(f"{k}={v}" for k, v in inv.items()))
    v = rep["verdict"]
    lines.append(f"si       {v['si']}")
    lines.append(f"simple   {v['simple']}")
    lines.append(f"basis    {', '.join(v['basis']) or '-'}")
    if "witness" in v:
        w = v["witness"]
        lines.append(f"witness  m={w['m']} n={w['n']} l={w['l']}")
    if "certificate" in v:
        c = v["certificate"]
        lines.append(f"T* = ({c['left'] or 'I'}) T ({c['right'] or 'I'})")
    if "note" in v:
        lines.append(f"note     {v['note']}")
    o = rep["oracle"]
    if o.get("used"):
        sat = "saturated" if o["saturated"] else f"not saturated (len {o['max_len_reached']})"
        lines.append(f"oracle   {o['element_count']} elements, {sat}; "
                     f"si={o['si']['value']} simple={o['simple']['value']} -> {o['agreement']}")
    else:
        lines.append("oracle   not run")
    if "timing_s" in rep:
        lines.append(f"time     {rep['timing_s']:.3f}s")
    return "\n".join(lines)


def emit(obj, as_json: bool, text: str | None = None):
    if as_json:
        print(json.dumps(obj, indent=2))
    else:
        print(text if text is not None else obj)


# -- commands ---------------------------------------------------------------------

def cmd_classify(args) -> int:
    name, T = resolve_matrix(args.matrix, args.corpus)
    t0 = time.perf_counter()
    rep = build_report(name, T, args.oracle_max_len, _max_elems(args), args.workers)
    if args.timing:
        rep["timing_s"] = round(time.perf_counter() - t0, 4)
    emit(rep, args.json, render_report(rep))
    return EXIT_DISAGREE if rep["oracle"]["agreement"] == "disagree" else EXIT_OK


def cmd_oracle(args) -> int:
    _, T = resolve_matrix(args.matrix, args.corpus)
    S = generate_closure([T], include_adjoints=not args.no_adjoints, max_len=args.max_len,
                         max_elems=_max_elems(args), workers=args.workers)
    si, simple = check_si(S), check_simple(S)
    out = {"element_count": len(S), "saturated": S.saturated,
           "max_len_reached": S.max_len_reached, "si": si.to_json(), "simple": simple.to_json()}
    if args.dump:
        with open(args.dump, "w") as fh:
            json.dump(closure_dump(S), fh, indent=2)
    text = (f"{len(S)} elements, saturated={S.saturated}, max_len_reached={S.max_len_reached}\n"
            f"si: {si.value}  {si.note}\nsimple: {simple.value}  {simple.note}")
    if args.list:
        text += "\n" + "\n".join(f"  {S.word_text(i):>12}  {matrix_to_rows(e)}"
                                 for i, e in enumerate(S.elements))
    emit(out, args.json, text)
    return EXIT_OK


def cmd_reduce(args) -> int:
    try:
        w = parse_word(args.word)
    except WordSyntaxError as exc:
        raise InputError(str(exc))
    _, T = resolve_matrix(args.matrix, args.corpus)
    try:
        prof = profile(T)
    except NotRankOne as exc:
        raise InputError(str(exc))
    sm = reduce_rank_one(w, prof)
    direct = evaluate_word(w, T)
    via = monomial_value(sm, T, prof)
    ok = direct == via
    out = {"word": args.word, "monomial": str(sm), "normal_form": sm.to_json(),
           "value": matrix_to_rows(direct), "matches_direct_evaluation": ok}
    emit(out, args.json, f"{sm}\n{matrix_to_rows(direct)}\nmatches direct evaluation: {ok}")
    return EXIT_OK if ok else EXIT_UNSOUND


def cmd_trace_norm(args) -> int:
    try:
        a = parse_entry(args.a)
        s = Fraction(args.s)
    except (EntryParseError, ValueError, ZeroDivisionError) as exc:
        raise InputError(str(exc))
    if a.is_zero() or s <= 0:
        raise InputError("need a nonzero trace and a positive norm square")
    d = explain_trace_norm(a, s)
    out = {"a": str(a), "s": str(s), **d.to_json()}
    if d.witness:
        out["verified"] = verify_witness(a, s, d.witness)
        w = d.witness
        text = f"witness m={w.m} n={w.n} l={w.l} (verified: {out['verified']})"
    else:
        text = f"none (fails at {d.failed_stage} stage; modulus {d.modulus}, progression {d.progression})"
    emit(out, args.json, text)
    return EXIT_OK


def corpus_rows(oracle_max_len: int, max_elems: int, names=None) -> list[dict]:
    rows = []
    for e in corpus_mod.CORPUS:
        if names and e.name not in names:
            continue
        rep = build_report(e.name, e.matrix(), oracle_max_len, max_elems)
        v, o = rep["verdict"], rep["oracle"]
        rows.append({
            "name": e.name, "family": e.family, "si": v["si"], "simple": v["simple"],
            "basis": v["basis"], "expected": [e.si, e.simple],
            "matches_expected": [v["si"], v["simple"]] == [e.si, e.simple],
            "oracle_elements": o.get("element_count"), "oracle_saturated": o.get("saturated"),
            "oracle_si": o["si"]["value"] if o.get("used") else None,
            "oracle_simple": o["simple"]["value"] if o.get("used") else None,
            "agreement": o["agreement"],
        })
    return rows


def cmd_corpus(args) -> int:
    if not args.run_all:
        listing = [{"name": e.name, "family": e.family, "rows": [list(map(str, r)) for r in e.rows],
                    "source": e.source} for e in corpus_mod.CORPUS]
        text = "\n".join(f"{e['name']:<28} {e['family']:<12} {e['source']}" for e in listing)
        emit(listing, args.json, text)
        return EXIT_OK
    rows = corpus_rows(args.oracle_max_len, _max_elems(args))
    hdr = f"{'name':<28} {'si':<8} {'simple':<8} {'oracle':<26} {'agreement':<20} basis"
    lines = [hdr]
    for r in rows:
        if r["oracle_si"] is None:
            o = "-"
        else:
            sat = "sat" if r["oracle_saturated"] else "unsat"
            o = f"{r['oracle_si']}/{r['oracle_simple']} {r['oracle_elements']} {sat}"
        lines.append(f"{r['name']:<28} {r['si']:<8} {r['simple']:<8} {o:<26} {r['agreement']:<20} "
                     + ", ".join(r["basis"]))
    emit(rows, args.json, "\n".join(lines))
    return EXIT_DISAGREE if any(r["agreement"] == "disagree" for r in rows) else EXIT_OK


def cmd_crosscheck(args) -> int:
    """Corpus vs oracle, unitary conjugates vs originals, word reduction vs evaluation."""
    problems = []
    rows = corpus_rows(args.oracle_max_len, _max_elems(args))
    disagreements = [r["name"] for r in rows if r["agreement"] == "disagree"]
    invariance = []
    for e in corpus_mod.CORPUS:
        T = e.matrix()
        base = classify(T).pair()
        for k in range(args.unitaries):
            U = exact_unitary(T.rows, args.seed + k)
            if classify(conjugate(T, U)).pair() != base:
                invariance.append(f"{e.name}@seed{args.seed + k}")
    unsound = {}
    for name in corpus_mod.WORD_ENGINE_SET:
        bad = soundness_mismatches(corpus_mod.get(name).matrix(), args.word_len)
        if bad:
            unsound[name] = len(bad)
    out = {"corpus_disagreements": disagreements, "unitary_mismatches": invariance,
           "word_engine_mismatches": unsound, "corpus_size": len(rows)}
    text = "\n".join([
        f"classifier vs oracle disagreements: {len(disagreements)} {disagreements or ''}",
        f"unitary invariance failures: {len(invariance)} {invariance or ''}",
        f"word-engine mismatches: {sum(unsound.values())} {unsound or ''}",
    ])
    emit(out, args.json, text)
    if unsound:
        return EXIT_UNSOUND
    if disagreements or invariance:
        return EXIT_DISAGREE
    return EXIT_OK


# -- argparse ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="si-lab", description=__doc__.split("\n")[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--max-elems", type=int, default=None,
                        help="closure size cap (env SI_LAB_MAX_ELEMS)")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--workers", type=int, default=1, help="threads for closure expansion")

    sub = p.add_subparsers(dest="command", required=True)

    def matrix_args(sp):
        sp.add_argument("matrix", nargs="?", help="JSON file or inline rows '0,1;0,0'")
        sp.add_argument("--corpus", metavar="NAME", help="use a built-in corpus matrix")

    c = sub.add_parser("classify", parents=[common], help="classify S(T,T*)")
    matrix_args(c)
    c.add_argument("--oracle-max-len", type=int, default=0)
    c.add_argument("--timing", action="store_true", help="add wall time (breaks byte-identical output)")
    c.set_defaults(func=cmd_classify)

    o = sub.add_parser("oracle", parents=[common], help="enumerate the closure and check ideals")
    matrix_args(o)
    o.add_argument("--max-len", type=int, default=12)
    o.add_argument("--no-adjoints", action="store_true")
    o.add_argument("--dump", metavar="FILE")
    o.add_argument("--list", action="store_true", help="print every element")
    o.set_defaults(func=cmd_oracle)

    r = sub.add_parser("reduce", parents=[common], help="reduce a word in T, t for rank-one T")
    r.add_argument("word")
    matrix_args(r)
    r.set_defaults(func=cmd_reduce)

    t = sub.add_parser("trace-norm", parents=[common], help="solve a^m conj(a)^n s^l = 1")
    t.add_argument("a")
    t.add_argument("s")
    t.set_defaults(func=cmd_trace_norm)

    k = sub.add_parser("corpus", parents=[common], help="list or run the built-in corpus")
    k.add_argument("--run-all", action="store_true")
    k.add_argument("--oracle-max-len", type=int, default=10)
    k.set_defaults(func=cmd_corpus)

    x = sub.add_parser("crosscheck", parents=[common], help="all consistency checks over the corpus")
    x.add_argument("--oracle-max-len", type=int, default=10)
    x.add_argument("--unitaries", type=int, default=5)
    x.add_argument("--word-len", type=int, default=10)
    x.set_defaults(func=cmd_crosscheck)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
