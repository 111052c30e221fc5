"""Command-line front end.

Subcommands: params, normalize, check, pump, profile. Exit codes are part
of the interface: 0 success/accepted, 1 not accepted or pumping
verification failed, 2 usage/parse/validation, 3 search limits exceeded,
4 no witness found (best-effort extraction came up empty).
"""

from __future__ import annotations

import argparse
import json
import sys

from .charts import ascii_chart, decomposition_annotations, svg_chart
from .corpus import BUILTINS
from .errors import (
    FormatError,
    NotAcceptedError,
    NoWitnessError,
    PumpingLengthOverflowError,
    SearchLimitError,
    StrictPreconditionError,
)
from .extract import Case1Witness, ExtractionMode, extract
from .normalize import normalize, pumping_params
from .pda import validate
from .run import (
    Accepted,
    LimitExceeded,
    NotAccepted,
    SearchLimits,
    accepts,
    default_limits,
    minimal_accepting_path,
)
from .serialize import PdaDocument, dumps, load_path
from .verify import DEFAULT_N_SET, verify

EXIT_OK = 0
EXIT_REJECTED = 1
EXIT_USAGE = 2
EXIT_LIMITS = 3
EXIT_NO_WITNESS = 4


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _load(path) -> PdaDocument:
    if path in BUILTINS:
        entry = BUILTINS[path]
        return PdaDocument(pda=entry.pda, name=entry.name, description=entry.description)
    try:
        doc = load_path(path)
    except FileNotFoundError:
        raise CliError(EXIT_USAGE, f"no such file: {path}") from None
    except FormatError as exc:
        raise CliError(EXIT_USAGE, f"{path}: {exc}") from None
    report = validate(doc.pda)
    if not report.ok:
        details = "; ".join(f"{i.code}: {i.message}" for i in report.errors)
        raise CliError(EXIT_USAGE, f"{path}: invalid machine ({details})")
    return doc


def _check_word(pda, word: str) -> None:
    bad = sorted(set(word) - set(pda.input_alphabet))
    if bad:
        raise CliError(EXIT_USAGE, f"word contains symbols outside the input alphabet: {bad}")


def _limits(pda, word, args) -> SearchLimits | None:
    if args.max_steps is None and args.max_stack_height is None:
        return None
    base = default_limits(pda, word)
    return SearchLimits(
        max_steps=args.max_steps if args.max_steps is not None else base.max_steps,
        max_stack_height=args.max_stack_height if args.max_stack_height is not None else base.max_stack_height,
    )


def _write_out(args, text: str) -> None:
    if getattr(args, "output", None) and args.output != "-":
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------- commands


def cmd_params(args) -> int:
    doc = _load(args.pda)
    npda = normalize(doc.pda)
    try:
        params = pumping_params(npda)
    except PumpingLengthOverflowError as exc:
        raise CliError(EXIT_LIMITS, str(exc)) from None
    changed = len(npda.states) != len(doc.pda.states) or len(npda.transitions) != len(
        doc.pda.transitions
    )
    print(f"p'={params.p_prime} p={params.p}")
    print(f"states={params.state_count} stack_symbols={params.stack_symbol_count}")
    print(f"normalization: {'expanded the machine' if changed else 'unchanged'}")
    return EXIT_OK


def cmd_normalize(args) -> int:
    doc = _load(args.input)
    npda = normalize(doc.pda)
    text = dumps(PdaDocument(pda=npda, name=doc.name, description=doc.description))
    if args.output == "-":
        sys.stdout.write(text)
    else:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    return EXIT_OK


_VERDICT_RANK = {EXIT_OK: 0, EXIT_REJECTED: 1, EXIT_LIMITS: 2, EXIT_USAGE: 3}


def cmd_check(args) -> int:
    doc = _load(args.pda)
    if args.word_file is not None:
        with open(args.word_file, encoding="utf-8") as fh:
            words = fh.read().splitlines()
    else:
        words = [args.word]

    worst = EXIT_OK
    for word in words:
        bad = sorted(set(word) - set(doc.pda.input_alphabet))
        if bad:
            verdict, code = "invalid-symbols", EXIT_USAGE
        else:
            outcome = accepts(doc.pda, word, _limits(doc.pda, word, args))
            if isinstance(outcome, Accepted):
                verdict, code = "accepted", EXIT_OK
            elif isinstance(outcome, NotAccepted):
                verdict, code = "not-accepted", EXIT_REJECTED
            else:
                verdict, code = "limit-exceeded", EXIT_LIMITS
        print(f"{verdict}\t{word}")
        if _VERDICT_RANK[code] > _VERDICT_RANK[worst]:
            worst = code
    return worst


def _segment_json(word_part: str) -> str:
    return word_part


def _witnesses_json(result) -> dict:
    d = result.decomposition
    diag = result.diagnostics
    out: dict = {}
    if diag.level_witness is not None:
        t = diag.level_witness
        out["levelTriple"] = {"i": t.i, "j": t.j, "k": t.k, "n": t.n}
    else:
        out["levelTriple"] = None
    w = d.witness
    if isinstance(w, Case1Witness):
        out["case1"] = {"i": w.i, "j": w.j, "depth": w.depth}
    else:
        out["case2"] = {
            "triple": {"i": w.triple.i, "j": w.triple.j, "k": w.triple.k, "n": w.triple.n},
            "g": w.g,
            "h": w.h,
            "lpG": w.lp_g,
            "lpH": w.lp_h,
            "fpH": w.fp_h,
            "fpG": w.fp_g,
        }
    return out


def _report_json(result, report, params) -> dict:
    d = result.decomposition
    diag = result.diagnostics
    return {
        "word": report.word,
        "u": _segment_json(d.u),
        "v": _segment_json(d.v),
        "x": _segment_json(d.x),
        "y": _segment_json(d.y),
        "z": _segment_json(d.z),
        "caseTag": d.case,
        "witnesses": _witnesses_json(result),
        "params": {
            "pPrime": params.p_prime,
            "p": params.p,
            "states": params.state_count,
            "stackSymbols": params.stack_symbol_count,
        },
        "checks": {
            "concatenation": report.constraints.concatenation_ok,
            "lengthBound": {
                "ok": report.constraints.length_bound_ok,
                "limit": report.constraints.bound,
                "actual": report.constraints.vxy_length,
            },
            "nonTrivial": report.constraints.nontrivial_ok,
        },
        "perN": [
            {"n": v.n, "replay": v.replay_ok, "search": v.search} for v in report.verdicts
        ],
        "verdict": {
            "pumpingOk": report.pumping_ok,
            "overall": report.overall,
            "consistent": report.consistent,
        },
        "diagnostics": {
            "mode": diag.mode,
            "pathLength": diag.path_length,
            "level": diag.level,
            "windowEnd": diag.window_end,
            "wholePathLevel": diag.whole_path_level,
            "pPrime": diag.p_prime,
            "candidatesTried": diag.candidates_tried,
            "configPairsAvailable": diag.config_pairs_available,
            "fullStatePairsAvailable": diag.full_state_pairs_available,
            "fallbacks": [
                {"case": f.case, "candidate": list(f.candidate), "reason": f.reason}
                for f in diag.fallbacks
            ],
            "profile": list(diag.profile),
        },
    }


def _preview(s: str, keep: int = 17) -> str:
    if len(s) <= 2 * keep + 6:
        return repr(s)
    return f"{s[:keep]!r}...{s[-keep:]!r} (len {len(s)})"


def _report_text(result, report, params) -> str:
    d = result.decomposition
    c = report.constraints
    lines = [
        f"word of length {len(report.word)}: {d.case}",
        f"  u = {_preview(d.u)}",
        f"  v = {_preview(d.v)}",
        f"  x = {_preview(d.x)}",
        f"  y = {_preview(d.y)}",
        f"  z = {_preview(d.z)}",
        f"  params: p'={params.p_prime} p={params.p}",
        f"  checks: concatenation={'ok' if c.concatenation_ok else 'FAIL'}"
        f" |vxy|={c.vxy_length} (bound {c.bound}, {'ok' if c.length_bound_ok else 'exceeded'})"
        f" |vy|>=1={'ok' if c.nontrivial_ok else 'FAIL'}",
    ]
    for v in report.verdicts:
        lines.append(f"  n={v.n}: replay={'ok' if v.replay_ok else 'FAIL'} search={v.search}")
    lines.append(f"  verdict: {'PASS' if report.pumping_ok else 'FAIL'}")
    return "\n".join(lines) + "\n"


def _parse_n_set(text: str) -> tuple[int, ...]:
    try:
        values = tuple(int(part) for part in text.split(",") if part != "")
    except ValueError:
        raise CliError(EXIT_USAGE, f"--n expects comma-separated integers, got {text!r}") from None
    if not values or any(n < 0 for n in values):
        raise CliError(EXIT_USAGE, "--n needs at least one nonnegative integer")
    return values


def cmd_pump(args) -> int:
    doc = _load(args.pda)
    _check_word(doc.pda, args.word)
    npda = normalize(doc.pda)
    mode = ExtractionMode.STRICT if args.mode == "strict" else ExtractionMode.BEST_EFFORT
    n_set = _parse_n_set(args.n) if args.n else DEFAULT_N_SET
    limits = _limits(npda, args.word, args)
    try:
        params = pumping_params(npda)
        result = extract(npda, args.word, mode=mode, limits=limits)
    except PumpingLengthOverflowError as exc:
        raise CliError(EXIT_LIMITS, str(exc)) from None
    except NotAcceptedError as exc:
        raise CliError(EXIT_REJECTED, str(exc)) from None
    except SearchLimitError as exc:
        raise CliError(EXIT_LIMITS, str(exc)) from None
    except StrictPreconditionError as exc:
        raise CliError(
            EXIT_USAGE,
            f"strict mode needs |word| > p: {exc.word_length} <= {exc.p}",
        ) from None
    except NoWitnessError as exc:
        diag = exc.diagnostics
        detail = ""
        if diag is not None:
            detail = (
                f" (config pairs: {diag.config_pairs_available},"
                f" full-state pairs: {diag.full_state_pairs_available},"
                f" candidates tried: {diag.candidates_tried})"
            )
        raise CliError(EXIT_NO_WITNESS, f"{exc}{detail}") from None

    report = verify(npda, result.path, result.decomposition, params, args.word, n_set)
    if args.report == "json":
        payload = _report_json(result, report, params)
        _write_out(args, json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False) + "\n")
    else:
        _write_out(args, _report_text(result, report, params))
    if not report.consistent:
        return EXIT_REJECTED
    return EXIT_OK if report.pumping_ok else EXIT_REJECTED


def cmd_profile(args) -> int:
    doc = _load(args.pda)
    _check_word(doc.pda, args.word)
    npda = normalize(doc.pda)
    limits = _limits(npda, args.word, args)

    markers: tuple = ()
    spans: tuple = ()
    if args.annotate:
        mode = ExtractionMode.STRICT if args.mode == "strict" else ExtractionMode.BEST_EFFORT
        try:
            result = extract(npda, args.word, mode=mode, limits=limits)
        except NotAcceptedError as exc:
            raise CliError(EXIT_REJECTED, str(exc)) from None
        except SearchLimitError as exc:
            raise CliError(EXIT_LIMITS, str(exc)) from None
        except StrictPreconditionError as exc:
            raise CliError(
                EXIT_USAGE,
                f"strict mode needs |word| > p: {exc.word_length} <= {exc.p}",
            ) from None
        except NoWitnessError as exc:
            raise CliError(EXIT_NO_WITNESS, str(exc)) from None
        path = result.path
        markers, spans = decomposition_annotations(result.decomposition, path)
    else:
        outcome = minimal_accepting_path(npda, args.word, limits)
        if isinstance(outcome, NotAccepted):
            raise CliError(EXIT_REJECTED, "word is not accepted")
        if isinstance(outcome, LimitExceeded):
            raise CliError(EXIT_LIMITS, "search limits exceeded before a verdict")
        path = outcome

    if args.render == "svg":
        title = f"stack profile: {doc.name or args.pda}, |w|={len(args.word)}"
        _write_out(args, svg_chart(path.profile, markers, spans, title=title))
    else:
        _write_out(args, ascii_chart(path.profile, markers, spans))
    return EXIT_OK


# ---------------------------------------------------------------- parser


def _add_limit_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--max-steps", type=int, default=None, help="search step budget")
    p.add_argument("--max-stack-height", type=int, default=None, help="search stack-height budget")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pumpkit",
        description="Pushdown machine toolkit: simulate, normalize, and pump accepted words.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("params", help="print pumping sizes for a machine")
    p.add_argument("pda", help="machine file (pumpkit/1 JSON) or builtin name")
    p.set_defaults(func=cmd_params)

    p = sub.add_parser("normalize", help="rewrite a machine into pop-or-push-one form")
    p.add_argument("input", help="machine file or builtin name")
    p.add_argument("output", help="destination file, or - for stdout")
    p.set_defaults(func=cmd_normalize)

    p = sub.add_parser("check", help="membership check for words")
    p.add_argument("pda", help="machine file or builtin name")
    p.add_argument("word", nargs="?", default=None, help="word to check")
    p.add_argument("--word-file", default=None, help="file with one word per line")
    _add_limit_flags(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("pump", help="decompose an accepted word and verify pumping")
    p.add_argument("pda", help="machine file or builtin name")
    p.add_argument("word", help="accepted word to decompose")
    p.add_argument("--mode", choices=["strict", "best-effort"], default="strict")
    p.add_argument("--n", default=None, help="comma-separated pump counts (default 0,1,2,3,4)")
    p.add_argument("--report", choices=["json", "text"], default="text")
    p.add_argument("-o", "--output", default=None, help="write the report here instead of stdout")
    _add_limit_flags(p)
    p.set_defaults(func=cmd_pump)

    p = sub.add_parser("profile", help="render the stack profile of an accepting run")
    p.add_argument("pda", help="machine file or builtin name")
    p.add_argument("word", help="accepted word to run")
    p.add_argument("--render", choices=["ascii", "svg"], default="ascii")
    p.add_argument("--annotate", action="store_true", help="mark the pumping decomposition")
    p.add_argument("--mode", choices=["strict", "best-effort"], default="best-effort")
    p.add_argument("-o", "--output", default=None, help="write the chart here instead of stdout")
    _add_limit_flags(p)
    p.set_defaults(func=cmd_profile)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors already; normalize other codes.
        return EXIT_USAGE if exc.code not in (0,) else 0
    if args.func is cmd_check and args.word is None and args.word_file is None:
        print("check: give a word or --word-file", file=sys.stderr)
        return EXIT_USAGE
    if args.func is cmd_check and args.word is not None and args.word_file is not None:
        print("check: give a word or --word-file, not both", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except CliError as exc:
        print(f"pumpkit: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
