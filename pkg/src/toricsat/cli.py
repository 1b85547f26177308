"""Command-line front end.

Exit codes: 0 success (saturated / all normal / certificate valid),
1 a definite negative finding, 2 bad input, 3 resource limit.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from .classifier import DEFAULT_SUBSET_CAP, check_all_subsets, classify, negative_certificate, verify_main_theorem
from .errors import InputError, ResourceLimitError, SaturatedCase, ToricSatError
from .forge import example_enss, verify_enss
from .forge.fundamental import fundamental_enss
from .lattice.saturation import is_saturated
from .textio import emit_certificate, format_vector, load_certificate, read_vectors, write_certificate
from .theorem import is_fundamental, positive_reason
from .weights import parse_highest, weight_system

EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT, EXIT_LIMIT = 0, 1, 2, 3
COMMANDS = ("weights", "saturated", "classify", "scan", "forge", "verify", "main-theorem")
PROGRESS_EVERY = 10_000


@dataclass(frozen=True)
class RunConfig:
    command: str
    n: int | None = None
    highest: str | None = None
    input_path: str | None = None
    output_path: str | None = None
    format: str = "text"
    threads: int = 1
    subset_cap: int = DEFAULT_SUBSET_CAP
    seed: int = 0
    max_n: int = 6
    example: int | None = None
    k: int | None = None
    exhaustive: bool = False
    prune: bool = True
    timings: bool = False
    quiet: bool = False


def _positive_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {v}")
    return v


def _default_cap() -> int:
    env = os.environ.get("TORICSAT_SUBSET_CAP")
    if env is None:
        return DEFAULT_SUBSET_CAP
    try:
        return _positive_int(env)
    except argparse.ArgumentTypeError as exc:
        raise InputError(f"TORICSAT_SUBSET_CAP: {exc}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-n", type=int, help="rank parameter of SL(n)")
    common.add_argument("--highest", help="highest weight: piK or quoted quasi-coordinates, e.g. \"2 0 0\"")
    common.add_argument("--file", dest="input_path", help="input file")
    common.add_argument("-o", "--output", dest="output_path", help="write the certificate or report here")
    common.add_argument("--format", choices=("text", "structured"), default="text")
    common.add_argument("--threads", type=_positive_int, default=1, help="worker processes")
    common.add_argument("--subset-cap", type=_positive_int, default=None,
                        help=f"max subsets per scan (default {DEFAULT_SUBSET_CAP}, or $TORICSAT_SUBSET_CAP)")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized runs")
    common.add_argument("-q", "--quiet", action="store_true", help="no progress on stderr")

    parser = argparse.ArgumentParser(prog="toricsat", description="Normality of torus orbit closures in SL(n)-modules.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")
    sub.add_parser("weights", parents=[common], help="list the weight system M(λ)")
    sub.add_parser("saturated", parents=[common], help="saturation test for a vector file")
    p = sub.add_parser("classify", parents=[common], help="are all orbit closures in V(λ) normal?")
    p.add_argument("--exhaustive", action="store_true", help="confirm positive answers by a subset scan")
    p = sub.add_parser("scan", parents=[common], help="test every subset of M(λ) for saturation")
    p.add_argument("--no-prune", dest="prune", action="store_false", help="enumerate the full power set")
    p = sub.add_parser("forge", parents=[common], help="build a non-saturation certificate")
    p.add_argument("--example", type=int, help="certificate of a numbered example (1-9)")
    p.add_argument("-k", type=int, help="parameter k for examples 3 and 4")
    sub.add_parser("verify", parents=[common], help="check a certificate file")
    p = sub.add_parser("main-theorem", parents=[common], help="audit the classification up to max n")
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--timings", action="store_true", help="include wall_time_ms in records")
    return parser


def parse_config(argv: list[str] | None = None) -> RunConfig:
    args = build_parser().parse_args(argv)
    cap = args.subset_cap if args.subset_cap is not None else _default_cap()
    return RunConfig(
        command=args.command,
        n=args.n,
        highest=args.highest,
        input_path=args.input_path,
        output_path=args.output_path,
        format=args.format,
        threads=args.threads,
        subset_cap=cap,
        seed=args.seed,
        max_n=getattr(args, "max_n", 6),
        example=getattr(args, "example", None),
        k=getattr(args, "k", None),
        exhaustive=getattr(args, "exhaustive", False),
        prune=getattr(args, "prune", True),
        timings=getattr(args, "timings", False),
        quiet=args.quiet,
    )


class Runner:
    def __init__(self, cfg: RunConfig, out=None, err=None):
        self.cfg = cfg
        self.out = out or sys.stdout
        self.err = err or sys.stderr

    # -- helpers ----------------------------------------------------------

    @property
    def structured(self) -> bool:
        return self.cfg.format == "structured"

    def say(self, text: str = "") -> None:
        print(text, file=self.out)

    def record(self, obj: dict) -> None:
        print(json.dumps(obj, ensure_ascii=False), file=self.out)

    def status(self, text: str) -> None:
        if not self.cfg.quiet:
            print(text, file=self.err, flush=True)

    def highest(self):
        if self.cfg.n is None or self.cfg.highest is None:
            raise InputError(f"{self.cfg.command} needs -n and --highest")
        if self.cfg.n < 2:
            raise InputError("n must be at least 2")
        return parse_highest(self.cfg.highest, self.cfg.n)

    def need_file(self) -> str:
        if not self.cfg.input_path:
            raise InputError(f"{self.cfg.command} needs --file")
        return self.cfg.input_path

    def certificate_out(self, cert, record: dict) -> None:
        """Write to -o if given, else inline (a field in structured mode)."""
        if self.cfg.output_path:
            write_certificate(cert, self.cfg.output_path)
            record["certificate_file"] = self.cfg.output_path
            if not self.structured:
                self.say(f"certificate written to {self.cfg.output_path}")
        elif self.structured:
            record["certificate"] = emit_certificate(cert)
        else:
            self.say(emit_certificate(cert).rstrip("\n"))

    def progress(self):
        last = [0]

        def report(done: int, total: int) -> None:
            if done // PROGRESS_EVERY > last[0] // PROGRESS_EVERY or done == total:
                self.status(f"scanned {done}/{total} orbit representatives")
            last[0] = done

        return report

    # -- commands -------------------------------------------------------------

    def run(self) -> int:
        handler = getattr(self, "cmd_" + self.cfg.command.replace("-", "_"))
        return handler()

    def cmd_weights(self) -> int:
        lam = self.highest()
        M = weight_system(lam)
        if self.structured:
            self.record({"n": lam.n, "highest": list(lam.coords), "weights": [list(w.coords) for w in M]})
        else:
            self.say(f"# M({lam}) in SL({lam.n}): {len(M)} weights, quasi-coordinates")
            for w in M:
                self.say(format_vector(w.coords))
        return EXIT_OK

    def cmd_saturated(self) -> int:
        vectors = read_vectors(self.need_file())
        verdict = is_saturated(vectors)
        rec = {"vectors": len(vectors), "saturated": verdict.saturated}
        if self.structured:
            if verdict.witness is not None:
                self.certificate_out(verdict.witness, rec)
            self.record(rec)
        else:
            self.say("saturated" if verdict.saturated else "not saturated")
            if verdict.witness is not None:
                self.say(f"witness: {format_vector(verdict.witness.witness)}")
                self.certificate_out(verdict.witness, rec)
        return EXIT_OK if verdict.saturated else EXIT_NEGATIVE

    def cmd_classify(self) -> int:
        lam = self.highest()
        v = classify(lam, exhaustive=self.cfg.exhaustive, subset_cap=self.cfg.subset_cap, workers=self.cfg.threads)
        rec = {"n": lam.n, "lambda": list(lam.coords), "all_normal": v.all_normal}
        if v.all_normal:
            rec["positive_reason"] = v.positive_reason
            if v.exhaustive_proof is not None:
                rec["exhaustive_proof"] = v.exhaustive_proof.as_dict()
        if self.structured:
            if not v.all_normal:
                self.certificate_out(v.negative_certificate, rec)
            self.record(rec)
        else:
            if v.all_normal:
                self.say(f"all orbit closures in V({lam}) are normal: {v.positive_reason}")
                if v.exhaustive_proof is not None:
                    s = v.exhaustive_proof
                    self.say(f"confirmed by scan: {s.subsets_enumerated} subsets, {s.orbits} orbits, {s.saturation_tests} tests")
            else:
                self.say(f"V({lam}) has a non-normal orbit closure")
                self.say(f"route: {v.negative_certificate.provenance}")
                self.certificate_out(v.negative_certificate, rec)
        return EXIT_OK if v.all_normal else EXIT_NEGATIVE

    def cmd_scan(self) -> int:
        lam = self.highest()
        verdict = check_all_subsets(
            weight_system(lam), subset_cap=self.cfg.subset_cap, workers=self.cfg.threads,
            prune=self.cfg.prune, progress=self.progress(),
        )
        rec = {"n": lam.n, "lambda": list(lam.coords), "saturated": verdict.saturated, **verdict.summary.as_dict()}
        if self.structured:
            if verdict.witness is not None:
                self.certificate_out(verdict.witness, rec)
            self.record(rec)
        else:
            s = verdict.summary
            self.say(f"every subset of M({lam}) saturated: {'yes' if verdict.saturated else 'no'}")
            self.say(f"{s.subsets_enumerated} of {s.subsets_total} subsets enumerated, {s.orbits} orbits, "
                     f"{s.independent} independent, {s.saturation_tests} saturation tests")
            if verdict.witness is not None:
                self.certificate_out(verdict.witness, rec)
        return EXIT_OK if verdict.saturated else EXIT_NEGATIVE

    def cmd_forge(self) -> int:
        if self.cfg.example is not None:
            cert = example_enss(self.cfg.example, self.cfg.k, self.cfg.n)
        else:
            lam = self.highest()
            reason = positive_reason(lam)
            if reason is not None:
                msg = f"every orbit closure in V({lam}) is normal ({reason}); no certificate exists"
                if self.structured:
                    self.record({"n": lam.n, "lambda": list(lam.coords), "positive_reason": reason})
                else:
                    self.say(msg)
                return EXIT_OK
            k = is_fundamental(lam)
            cert = fundamental_enss(lam.n, k) if k is not None else negative_certificate(lam)
        result = verify_enss(cert)
        if not result:
            raise ToricSatError(f"forged certificate failed verification: {result}")
        # the certificate document is the structured output in both modes
        if self.cfg.output_path:
            write_certificate(cert, self.cfg.output_path)
            self.status(f"certificate written to {self.cfg.output_path}")
        else:
            self.out.write(emit_certificate(cert))
        return EXIT_NEGATIVE

    def cmd_verify(self) -> int:
        cert = load_certificate(self.need_file())
        context = self.highest() if self.cfg.highest is not None else None
        result = verify_enss(cert, context)
        rec = {"verified": result.ok, "clause": result.clause, "message": result.message,
               "disc_fn": result.disc_fn}
        if self.structured:
            self.record(rec)
        else:
            self.say(str(result))
            if result.ok and cert.disc_fn is not None:
                vals, fv = cert.f_values()
                self.say(f"f on generators: {' '.join(map(str, vals))}; f(witness) = {fv}")
        return EXIT_OK if result.ok else EXIT_NEGATIVE

    def cmd_main_theorem(self) -> int:
        report = verify_main_theorem(
            self.cfg.max_n, workers=self.cfg.threads, subset_cap=self.cfg.subset_cap,
            timings=self.cfg.timings, progress=self.status,
        )
        if self.structured:
            text = report.to_jsonl()
        else:
            lines = []
            for r in report.records:
                mark = "ok  " if r["agrees"] else "FAIL"
                lines.append(f"{mark} n={r['n']} λ=({r['lambda']}) {r['case']}: {r['verdict']}"
                             + (f", {r['subsets_tested']} subsets" if r["subsets_tested"] else ""))
            lines.append(f"{len(report.records)} cases, {len(report.disagreements)} disagreements")
            text = "\n".join(lines) + "\n"
        if self.cfg.output_path:
            with open(self.cfg.output_path, "w") as fh:
                fh.write(text)
        else:
            self.out.write(text)
        return EXIT_OK if report.ok else EXIT_NEGATIVE


def run(cfg: RunConfig, out=None, err=None) -> int:
    runner = Runner(cfg, out, err)
    try:
        return runner.run()
    except ResourceLimitError as exc:
        runner.status(f"resource limit: {exc}")
        return EXIT_LIMIT
    except (InputError, SaturatedCase, OSError, ValueError) as exc:
        runner.status(f"error: {exc}")
        return EXIT_INPUT


def main(argv: list[str] | None = None) -> int:
    try:
        cfg = parse_config(argv)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
