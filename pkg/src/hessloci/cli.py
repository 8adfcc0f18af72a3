"""Command-line reproduction harness.

Each subcommand evaluates a list of claims and emits a report: a JSON document
(``--json PATH``) holding only deterministic content, and a human summary on
stdout that also shows the runtime. The exit code is 0 iff every claim passes.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence

from . import bott, chern, hilbert, strata
from .hessian import (SamplingBudgetExceeded, check_magic_identities, euler_identity_check,
                      hessian_data, hessian_matrix, klein6_hessian_reference, named_cubic,
                      random_cubic, random_smooth_cubic)
from .polycore import GF, PolyMatrix, Polynomial, poly_parse

IDENTITY_PRIMES = (31, 32003)
IDENTITY_INSTANCES = 1000
IDENTITY_DIMS = (2, 3, 4, 5)
STRATA_PRIME = 11
SAMPLING_PRIME = 11
# enumerations larger than this need --slow
FAST_POINT_LIMIT = 2_000_000
HILBERT_TARGETS = ("klein-surface", "adler-curve", "cubic-surface-points")


@dataclass
class Claim:
    id: str
    anchor: str
    expected: Any
    computed: Any
    rule: str = "exact"
    passed: Optional[bool] = None

    def __post_init__(self):
        if self.passed is None:
            self.passed = bool(self.expected == self.computed)


@dataclass
class Report:
    command: str
    inputs: Dict[str, Any]
    claims: List[Claim] = field(default_factory=list)
    runtime: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.claims)

    def add(self, *args, **kwargs) -> Claim:
        c = Claim(*args, **kwargs)
        self.claims.append(c)
        return c

    def to_dict(self) -> Dict[str, Any]:
        # runtime is left out so that reports are byte-identical across runs
        return {
            "command": self.command,
            "inputs": encode(self.inputs),
            "claims": [{"id": c.id, "anchor": c.anchor, "rule": c.rule,
                        "expected": encode(c.expected), "computed": encode(c.computed),
                        "pass": c.passed} for c in self.claims],
            "pass": self.passed,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False) + "\n"

    def summary(self) -> str:
        lines = [f"{self.command}: {sum(c.passed for c in self.claims)}/{len(self.claims)} claims pass"]
        for c in self.claims:
            tag = "PASS" if c.passed else "FAIL"
            lines.append(f"  [{tag}] {c.id}: computed {_show(c.computed)}"
                         + ("" if c.passed else f", expected {_show(c.expected)}"))
        lines.append(f"  runtime {self.runtime:.1f}s")
        return "\n".join(lines)


def encode(value: Any) -> Any:
    """JSON-ready form: exact rationals as ``{num, den}``, never floats."""
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, Fraction):
        return {"num": value.numerator, "den": value.denominator}
    if isinstance(value, float):
        raise TypeError("floats are not allowed in reports")
    if isinstance(value, dict):
        return {str(k): encode(v) for k, v in value.items()}
    if isinstance(value, (set, frozenset)):
        return [encode(v) for v in sorted(value)]
    if isinstance(value, (list, tuple)):
        return [encode(v) for v in value]
    return str(value)


def _show(value: Any) -> str:
    if isinstance(value, (set, frozenset)):
        value = sorted(value)
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(_show(v) for v in value) + "]"
    return str(value)


def _corrupt(H: PolyMatrix) -> PolyMatrix:
    """Hessian with a symmetric perturbation of the (0, 1) entry."""
    rows = [[H[i, j] for j in range(H.size)] for i in range(H.size)]
    bump = Polynomial.var(0, H.nvars, H.field)
    rows[0][1] = rows[0][1] + bump
    rows[1][0] = rows[1][0] + bump
    return PolyMatrix(rows, symmetric=True)


def cmd_identities(seed: int = 0, primes: Sequence[int] = IDENTITY_PRIMES,
                   instances: int = IDENTITY_INSTANCES, corrupt: bool = False) -> Report:
    rng = random.Random(f"identities:{seed}")
    report = Report("identities", {"seed": seed, "primes": list(primes), "instances": instances,
                                   "dims": list(IDENTITY_DIMS), "corrupt_hessian": corrupt})
    tally = {"euler": 0, "a": 0, "b": 0, "c": 0}
    for t in range(instances):
        n = IDENTITY_DIMS[t % len(IDENTITY_DIMS)]
        p = primes[(t // len(IDENTITY_DIMS)) % len(primes)]
        F = GF(p)
        f = random_cubic(n, F, rng)
        v = [rng.randrange(p) for _ in range(n + 1)]
        w = [rng.randrange(p) for _ in range(n + 1)]
        H = hessian_matrix(f.poly)
        res = check_magic_identities(f, v, w, matrix=_corrupt(H) if corrupt else H)
        for k in "abc":
            tally[k] += res[k]
        tally["euler"] += euler_identity_check(f.poly, v)
    report.add("euler", "v^m(G) = m! G(v)", instances, tally["euler"])
    report.add("identity-a", "H_f(v)·w = ∇(vw(f))", instances, tally["a"])
    report.add("identity-b", "2∇f(v) = H_f(v)·v", instances, tally["b"])
    report.add("identity-c", "w^T H_f(v) w = 2 v(f)(w)", instances, tally["c"])
    return report


def _strata_cubic(name: Optional[str], n: Optional[int], seed: int, p: int):
    if name:
        default_n = {"klein6": 5, "cuspidal3": 2}.get(name, 3)
        return named_cubic(name, default_n if n is None else n).over(GF(p))
    return random_smooth_cubic(3 if n is None else n, p, seed)


def cmd_strata(cubic: Optional[str] = None, n: Optional[int] = None, seed: int = 0,
               prime: int = STRATA_PRIME, slow: bool = False) -> Report:
    f = _strata_cubic(cubic, n, seed, prime)
    n = f.n
    npts = strata.count_points(n, prime)
    if npts > FAST_POINT_LIMIT and not slow:
        raise strata.BudgetExceeded(f"P^{n}(F_{prime}) has {npts} points; rerun with --slow")
    report = Report("strata", {"cubic": cubic or "random-smooth", "n": n, "prime": prime,
                               "seed": None if cubic else seed, "cubic_form": str(f)})
    census = strata.stratify(f, prime)
    cert = strata.verify_theorem_A(f, prime)
    triangles = strata.find_triangles(f, prime)
    singular = strata.gamma_singular_pairs(f, prime)
    report.inputs["rank_counts"] = census.counts
    report.inputs["caveat"] = cert.caveat

    if cubic == "cuspidal3":
        h = hessian_data(f).hess
        target = poly_parse("x0^2*x1", 3, f.field)
        scalar = h.proportionality_scalar(target)
        report.add("hessian-shape", "h_f = x0²x1 up to a scalar", True, scalar is not None, rule="up-to-scalar")
        report.inputs["hessian_scalar"] = None if scalar is None else f.field.signed(scalar)
        d1 = {str(x) for x in census.points.get(1, [])} if census.counts[1] else set()
        report.add("D1-points", "D_1(f) = {(0:0:1), (0:1:0)}", {"(0:0:1)", "(0:1:0)"}, d1, rule="set")
        report.add("theorem-A-fails", "D_1(f) ⊊ Sing(H_f)", False, cert.passed)
        reason = cert.counterexample["reason"] if cert.counterexample else None
        report.add("counterexample-kind", "D_1(f) ⊊ Sing(H_f)", "singular on H_f but rank n", reason)
    else:
        report.add("theorem-A", "Sing(H_f) = D_{n−1}(f)", True, cert.passed)
        if cert.counterexample:
            report.inputs["counterexample"] = cert.counterexample
    if cubic == "klein6":
        ref = klein6_hessian_reference(f.field)
        scalar = hessian_data(f).hess.proportionality_scalar(ref)
        report.add("klein-hessian", "hess(f_0) = sum x_i^3x_{i+3}^3 − x_0x_1x_2x_3x_4x_5 + ...",
                   True, scalar is not None, rule="up-to-scalar")
        report.inputs["hessian_scalar"] = None if scalar is None else f.field.signed(scalar)
        report.add("klein-rank3", "D_3 nonempty for the Klein cubic", True, census.at_most(3) > 0)
    report.add("gamma-triangles", "Γ_f is singular exactly at triangles",
               bool(triangles), bool(singular))
    report.inputs["triangles"] = len(triangles)
    report.inputs["gamma_singular_pairs"] = len(singular)
    return report


def _hilbert_cubic(target: str, seed: int):
    if target == "klein-surface":
        return named_cubic("klein6", 5), 4
    if target == "adler-curve":
        return random_smooth_cubic(4, SAMPLING_PRIME, seed), 3
    return random_smooth_cubic(3, SAMPLING_PRIME, seed), 2


def cmd_hilbert(target: str = "klein-surface", primes: Sequence[int] = (hilbert.DEFAULT_PRIME,),
                seed: int = 0, slow: bool = False) -> Report:
    if target not in HILBERT_TARGETS:
        raise ValueError(f"unknown target {target!r}")
    f, rank = _hilbert_cubic(target, seed)
    p = primes[0]
    report = Report("hilbert", {"target": target, "primes": list(primes),
                                "seed": None if target == "klein-surface" else seed,
                                "cubic_form": str(f)})
    I = hilbert.minor_ideal(f.over(GF(p)), rank, p)
    report.inputs["generators"] = len(I)

    if target == "klein-surface":
        w0 = hilbert.hf_window(I, 0, 5, p)
        report.add("hf-prefix", "1+6t+21t^2+56t^3+126t^4+231t^5 mod t^6", [1, 6, 21, 56, 126, 231], w0.values)
        windows = [w0]
        if slow:
            d0, d1 = hilbert.FIT_WINDOWS[5]
            w = hilbert.hf_window(I, d0, d1, p)
            windows.append(w)
            hp = hilbert.fit_hilbert_polynomial(w, 2)
            inv = hilbert.extract_invariants(hp)
            report.add("hilbert-polynomial", "(35/2)d² − (105/2)d + 56",
                       [Fraction(56), Fraction(-105, 2), Fraction(35, 2)], list(hp.coeffs))
            report.add("degree", "Y has degree 35", 35, inv.degree)
            report.add("chi", "χ(O_Y) = 56", Fraction(56), inv.chi)
            report.inputs["fit_valid_from"] = hp.valid_from
    else:
        dim = 1 if target == "adler-curve" else 0
        d0, d1 = hilbert.FIT_WINDOWS[4 if dim else 3]
        w = hilbert.hf_window(I, d0, d1, p)
        windows = [w]
        hp = hilbert.fit_hilbert_polynomial(w, dim)
        inv = hilbert.extract_invariants(hp)
        report.inputs["fit_valid_from"] = hp.valid_from
        if dim:
            report.add("hilbert-polynomial", "degree 20 and genus 26",
                       [Fraction(-25), Fraction(20)], list(hp.coeffs))
            report.add("genus", "degree 20 and genus 26", Fraction(26), inv.genus)
        else:
            report.add("hilbert-polynomial", "singular in exactly 10 isolated points",
                       [Fraction(10)], list(hp.coeffs))
    for w in windows:
        report.inputs[f"window_{w.d0}_{w.d1}"] = w.values
    for q in primes[1:]:
        Iq = hilbert.minor_ideal(f.over(GF(q)), rank, q)
        other = [hilbert.hf_window(Iq, w.d0, w.d1, q).values for w in windows]
        report.add(f"prime-independence-{q}", "HF is independent of the prime",
                   [w.values for w in windows], other)
    return report


def cmd_chern() -> Report:
    report = Report("chern", {})
    for (n, k), deg in {(3, 2): 10, (4, 3): 20, (5, 4): 35}.items():
        report.add(f"degree-Q({n},{k})", "degree 20 and genus 26" if n == 4 else
                   ("Y has degree 35" if n == 5 else "10 isolated points"), deg, chern.degree_Qk(n, k))
    report.add("expected-codim(5,4)", "singular locus of dimension at least n−3", 3, chern.expected_codim(5, 4))
    report.add("canonical-double(5,4)", "2K_Y = 6H|_Y", 6, chern.canonical_double(5, 4))
    report.add("genus-from-canonical(4,3)", "degree 20 and genus 26", 26,
               chern.curve_genus(chern.canonical_double(4, 3), chern.degree_Qk(4, 3)))
    for (a, b), val in chern.PAPER_Q_TABLE.items():
        report.add(f"Q({a},{b})", f"Q_{{{a},{b}}} = {val}H^{a + b}", val,
                   chern.q_schur_tworow(a, b).coefficient(a + b))
    report.add("pratt-euler", "e(Y) = 357", 357, chern.pratt_euler())
    report.add("pratt-euler-tabulated-Q", "e(Y) = 357", 357, chern.pratt_euler("paper"))
    s = chern.surface_invariants()
    report.add("chi", "χ(O_Y) = (e(Y)+K_Y²)/12 = (357+315)/12 = 56", 56, s.chi)
    report.add("pg", "p_g(Y) = 55", 55, s.pg)
    report.add("q", "q = 0", 0, s.q)
    report.add("h11", "h^{1,1}(Y) = 245", 245, s.h11)
    report.add("chi-O(5)", "231 t^5", Fraction(231), s.chi_twist(5))
    report.add("eta-certificate", "Hence η is a non-trivial 2-torsion element", True, chern.eta_certificate())
    for sval, (deg, g) in {1: (3, 1), 2: (20, 26), 3: (672, 2689)}.items():
        c = chern.smallest_locus_curve(sval)
        report.add(f"smallest-curve-s{sval}", "2K_{C_s} = (C(s+1,2)+2)(s−1)H",
                   [deg, g], [c.degree, c.genus])
    report.inputs["coefficient_table"] = {f"(({a},{b}))": v for (a, b), v in chern.PRATT_COEFFS.items()}
    report.inputs["coefficient_table_source"] = "tabulated input"
    return report


def cmd_bott() -> Report:
    report = Report("bott", {"grassmannian": "Gr(4,6)"})
    expected = {(2, 2), (2, 3), (2, 4), (4, 5), (4, 6), (4, 7), (6, 9)}
    report.add("vanishing-table", "(2,2), (2,3), (2,4), (4,5), (4,6), (4,7), (6,9)",
               expected, bott.vanishing_table(), rule="set")
    for k, d, anchor in [(1, 0, "then Z is connected"), (2, 0, "h¹(O_Z) = 0"),
                         (0, 1, "h⁰(I_{Z/G} ⊗ π₂*O_{P^5}(d)) = 0"),
                         (0, 2, "h⁰(I_{Z/G} ⊗ π₂*O_{P^5}(2)) = 0")]:
        report.add(f"koszul(k={k},d={d})", anchor, True, bott.koszul_certificate(k, d))
    prof = bott.double_cover_profile(6, 4)
    report.add("double-cover-profile", "Z is a threefold",
               {"h": 2, "families": 2, "family_dim": 1, "edim_Z": 3},
               {"h": prof.h, "families": prof.families, "family_dim": prof.family_dim,
                "edim_Z": prof.edim_Z})
    report.add("projective-normality", "is projectively normal", True,
               hilbert.proj_normality_series_check())
    return report


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hessloci", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", metavar="PATH", help="write the report as JSON")
    common.add_argument("--slow", action="store_true", help="include long computations")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("identities", parents=[common], help="Hessian identity batteries")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--prime", type=int, action="append",
                   help=f"repeatable; default {' and '.join(map(str, IDENTITY_PRIMES))}")
    p.add_argument("--instances", type=int, default=IDENTITY_INSTANCES)
    p.add_argument("--corrupt-hessian", action="store_true",
                   help="perturb the Hessian to check that failures are detected")

    p = sub.add_parser("strata", parents=[common], help="rank census and Theorem A check")
    p.add_argument("--cubic", choices=["fermat", "klein6", "cuspidal3"])
    p.add_argument("--n", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--prime", type=int, default=STRATA_PRIME)

    p = sub.add_parser("hilbert", parents=[common], help="Hilbert windows of rank loci")
    p.add_argument("target", nargs="?", default="klein-surface", choices=HILBERT_TARGETS)
    p.add_argument("--prime", type=int, action="append",
                   help=f"repeatable; extra primes check prime independence (default {hilbert.DEFAULT_PRIME})")
    p.add_argument("--seed", type=int, default=0)

    sub.add_parser("chern", parents=[common], help="closed-form intersection numbers")
    sub.add_parser("bott", parents=[common], help="Bott table and Koszul certificates")
    return parser


def run(args: argparse.Namespace) -> Report:
    if args.command == "identities":
        return cmd_identities(args.seed, args.prime or IDENTITY_PRIMES, args.instances, args.corrupt_hessian)
    if args.command == "strata":
        return cmd_strata(args.cubic, args.n, args.seed, args.prime, args.slow)
    if args.command == "hilbert":
        return cmd_hilbert(args.target, args.prime or (hilbert.DEFAULT_PRIME,), args.seed, args.slow)
    if args.command == "chern":
        return cmd_chern()
    return cmd_bott()


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    start = time.perf_counter()
    try:
        report = run(args)
    except (ValueError, strata.BudgetExceeded, SamplingBudgetExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    report.runtime = time.perf_counter() - start
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(report.to_json())
    print(report.summary())
    return 0 if report.passed else 1


if __name__ == "__main__":
    sys.exit(main())
