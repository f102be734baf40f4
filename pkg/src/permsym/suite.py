"""Verification suite: every exit criterion of the build, runnable from the
CLI (`permsym suite`) and mirrored one-to-one by tests/test_acceptance.py.

Each criterion returns a list of named sub-checks; a criterion passes when
all of its sub-checks do.  Stdout output contains no timings so that two runs
with the same seed are byte-identical; the stated runtime bounds are still
enforced as sub-checks.
"""

import time
from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .analysis import run_analysis
from .catalog import build_instance, build_sym_on_pairs
from .coherent import (
    adjacency_product_check,
    intersection_tensor,
    two_orbits,
    verify_cc_axioms,
)
from .endo import (
    centralizer_algebra,
    centralizer_oracle,
    hecke_check,
    nilpotent_free_check,
)
from .exactlin import prime_field
from .perm import classify_action, group_theoretic_checks

AXIOM_SUITE_SPECS = [
    "sym:5",
    "alt:5",
    "altpairs:7",
    "signtwist:3",
    "signtwist:4",
    "signtwist:5",
    "frobenius:7,3",
    "frobenius:7,6",
    "frobenius:5,2",
    "example3_2",
    "psl2line:4",
    "psl2line:8",
    "psl2line:32",
    "psl2cosets:8",
]

TWO_TRANSITIVE_SWEEP = ["sym:5", "alt:6", "psl2line:4", "psl2line:8", "frobenius:7,6"]

SWEEP_PRIMES = [2, 3, 5, 7, 11, 13]


@dataclass
class CriterionResult:
    key: str
    passed: bool
    details: list[str] = field(default_factory=list)

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'}  {self.key}"


class _Checker:
    def __init__(self, key):
        self.key = key
        self.checks: list[tuple[bool, str]] = []

    def expect(self, ok: bool, what: str):
        self.checks.append((bool(ok), what))

    def expect_eq(self, got, want, what: str):
        self.expect(got == want, f"{what}: got {got!r}, want {want!r}")

    def result(self) -> CriterionResult:
        details = [f"{'ok' if ok else 'FAIL'}: {what}" for ok, what in self.checks]
        return CriterionResult(self.key, all(ok for ok, _ in self.checks), details)


class SuiteContext:
    """Shared instance/analysis cache for one suite run."""

    def __init__(self, seed: int = 0, corrupt: bool = False):
        self.seed = seed
        self.corrupt = corrupt
        self._analyses = {}
        self._instances = {}

    def instance(self, spec: str):
        if spec not in self._instances:
            actual = spec
            if self.corrupt and spec == "frobenius:7,3":
                actual = "frobenius:7,6"  # negative control: wrong multiplier group
            self._instances[spec] = build_instance(actual)
        return self._instances[spec]

    def analyze(self, spec: str, p: int, oracle: bool = False):
        key = (spec, p, oracle)
        if key not in self._analyses:
            self._analyses[key] = run_analysis(
                spec, p, seed=self.seed, oracle=oracle, instance=self.instance(spec)
            )
        return self._analyses[key]


def _timed(fn):
    t0 = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t0


def crit_alt7_pairs(ctx: SuiteContext) -> CriterionResult:
    c = _Checker("alt7-pairs")
    for p in (2, 3, 5, 7):
        rep, dt = _timed(lambda: ctx.analyze("altpairs:7", p))
        c.expect_eq(rep.degree, 21, f"degree at p={p}")
        c.expect_eq(rep.classification.rank, 3, f"rank at p={p}")
        c.expect_eq(sorted(rep.classification.subdegrees), [1, 10, 10], f"subdegrees at p={p}")
        c.expect(rep.verdict.is_positive(), f"symmetric verdict at p={p} ({rep.verdict.status})")
        c.expect(dt < 1.0, f"runtime {dt:.3f}s < 1s at p={p}")
    return c.result()


def crit_affine_shear(ctx: SuiteContext) -> CriterionResult:
    c = _Checker("affine-shear")
    rep, dt = _timed(lambda: ctx.analyze("example3_2", 3))
    c.expect_eq(sorted(rep.classification.subdegrees), [1, 1, 1, 3, 3], "subdegrees")
    c.expect_eq(rep.algebra_dim, 5, "algebra dimension")
    c.expect_eq(
        rep.schur["basic_set_sums"],
        ["1", "a", "a2", "b+ab+a2b", "b2+ab2+a2b2"],
        "basic-set sums",
    )
    c.expect_eq(rep.verdict.status, "not_symmetric", "verdict")
    cert = rep.verdict.certificate or {}
    c.expect_eq(
        cert.get("exhausted_search", {}).get("search_space"), 243,
        "exhausted search over all functionals",
    )
    c.expect("local_socle_obstruction" in cert, "local socle obstruction recorded")
    c.expect(dt < 1.0, f"runtime {dt:.3f}s < 1s")
    # source-stated radical series; see the companion independent computation
    # in the test suite, which verifies the actual nilpotency structure
    c.expect_eq(list(rep.radical_dims), [5, 4, 2, 0], "radical power dimensions as stated")
    return c.result()


def crit_sign_twist_family(ctx: SuiteContext) -> CriterionResult:
    c = _Checker("sign-twist-family")
    for n in (3, 4, 5):
        def one():
            inst = ctx.instance(f"signtwist:{n}")
            cls = classify_action(inst.group)
            return inst, cls

        (inst, cls), dt = _timed(one)
        c.expect_eq(inst.group.degree, (n + 1) * (n + 2) // 2, f"degree at n={n}")
        c.expect_eq(
            sorted(cls.subdegrees), sorted([1, 2 * n, n * (n - 1) // 2]),
            f"subdegrees at n={n}",
        )
        c.expect(inst.faithful, f"faithful at n={n}")
        c.expect(dt < 2.0, f"runtime {dt:.3f}s < 2s at n={n}")
    rep, dt = _timed(lambda: ctx.analyze("signtwist:5", 5))
    c.expect(rep.verdict.is_positive(), f"symmetric verdict at (n,p)=(5,5) ({rep.verdict.status})")
    c.expect(dt < 2.0, f"runtime {dt:.3f}s < 2s for the (5,5) analysis")
    return c.result()


def crit_psl2_dihedral(ctx: SuiteContext) -> CriterionResult:
    c = _Checker("psl2-dihedral")

    def q8():
        rep = ctx.analyze("psl2cosets:8", 3)
        checks = group_theoretic_checks(ctx.instance("psl2cosets:8").group, 0, 3)
        return rep, checks

    (rep, checks), dt = _timed(q8)
    c.expect_eq(rep.degree, 28, "degree of psl2cosets:8")
    c.expect(rep.classification.three_halves_transitive, "3/2-transitivity of psl2cosets:8")
    nontrivial = [d for d in rep.classification.subdegrees if d != 1]
    c.expect(all(d == 9 for d in nontrivial) and nontrivial, "nontrivial subdegrees all 9")
    c.expect_eq(rep.group_order, 504, "group order 504")
    c.expect(rep.verdict.is_positive(), f"symmetric verdict over F_3 ({rep.verdict.status})")
    c.expect_eq(checks.max_conjugate_intersection, 2, "max conjugate intersection")
    c.expect(checks.normalizer_in_stabilizer, "Sylow normalizer contained in the stabilizer")
    c.expect(dt < 5.0, f"runtime {dt:.3f}s < 5s for psl2cosets:8")

    ctx.instance("psl2cosets:32")  # group construction excluded from the pipeline bound
    rep3, dt3 = _timed(lambda: ctx.analyze("psl2cosets:32", 3))
    rep11, dt11 = _timed(lambda: ctx.analyze("psl2cosets:32", 11))
    c.expect_eq(rep3.degree, 496, "degree of psl2cosets:32")
    c.expect(rep3.verdict.is_positive(), f"symmetric verdict over F_3 ({rep3.verdict.status})")
    c.expect(rep11.verdict.is_positive(), f"symmetric verdict over F_11 ({rep11.verdict.status})")
    c.expect(dt3 + dt11 < 60.0, f"pipeline runtime {dt3 + dt11:.1f}s < 60s for psl2cosets:32")
    return c.result()


def crit_frobenius(ctx: SuiteContext) -> CriterionResult:
    c = _Checker("frobenius")

    def run():
        rep3 = ctx.analyze("frobenius:7,3", 3)
        rep7 = ctx.analyze("frobenius:7,3", 7)
        hk = hecke_check(ctx.instance("frobenius:7,3").group, 0, prime_field(7))
        return rep3, rep7, hk

    (rep3, rep7, hk), dt = _timed(run)
    c.expect_eq(sorted(rep3.classification.subdegrees), [1, 3, 3], "subdegrees")
    c.expect(rep3.verdict.is_positive(), f"symmetric verdict over F_3 ({rep3.verdict.status})")
    c.expect(rep7.verdict.is_positive(), f"symmetric verdict over F_7 ({rep7.verdict.status})")
    c.expect_eq(hk.hecke_dim, 3, "double-coset span dimension over F_7")
    c.expect(hk.matches_rank, "double-coset dimension equals the rank")
    c.expect(dt < 1.0, f"runtime {dt:.3f}s < 1s")
    return c.result()


def crit_config_axioms(ctx: SuiteContext) -> CriterionResult:
    c = _Checker("config-axioms")
    for spec in AXIOM_SUITE_SPECS:
        G = ctx.instance(spec).group
        cc = two_orbits(G)
        tensor = intersection_tensor(cc)
        rep = verify_cc_axioms(cc, tensor, seed=ctx.seed)
        c.expect(rep.passed, f"axioms and triangle identity for {spec}")
        checked, passed, detail = adjacency_product_check(cc, tensor)
        c.expect(checked and passed, f"integer adjacency product identity for {spec} ({detail})")
    return c.result()


def crit_oracle_equivalence(ctx: SuiteContext) -> CriterionResult:
    c = _Checker("oracle-equivalence")
    for spec in AXIOM_SUITE_SPECS:
        G = ctx.instance(spec).group
        if G.degree > 40:
            continue
        cc = two_orbits(G)
        for p in (2, 3, 5, 7):
            dim = centralizer_oracle(G, prime_field(p))
            c.expect_eq(dim, cc.m, f"oracle dimension for {spec} at p={p}")
    return c.result()


def crit_schur_correspondence(ctx: SuiteContext) -> CriterionResult:
    c = _Checker("schur-correspondence")
    rep_a = ctx.analyze("example3_2", 3)
    c.expect(rep_a.schur is not None and rep_a.schur["iso_pass"],
             "Schur correspondence for example3_2 over F_3")
    rep_b = ctx.analyze("frobenius:7,3", 3)
    c.expect(rep_b.schur is not None and rep_b.schur["iso_pass"],
             "Schur correspondence for frobenius:7,3 over F_3")
    rep5 = ctx.analyze("frobenius:7,3", 5)
    c.expect(rep5.schur is not None and rep5.schur["iso_pass"],
             "Schur correspondence for frobenius:7,3 over F_5")
    c.expect_eq(list(rep5.radical_dims), [3, 0], "semisimple radical series over F_5")
    G = ctx.instance("frobenius:7,3").group
    cc = two_orbits(G)
    alg = centralizer_algebra(cc, intersection_tensor(cc), prime_field(5))
    c.expect(nilpotent_free_check(alg), "no nonzero nilpotents over F_5")
    return c.result()


def crit_overgroup_equal_rank(ctx: SuiteContext) -> CriterionResult:
    c = _Checker("overgroup-equal-rank")
    alt = ctx.instance("altpairs:7")
    sym = build_sym_on_pairs(7)
    cc_a = two_orbits(alt.group)
    cc_s = two_orbits(sym.group)
    c.expect(np.array_equal(cc_a.orbital_of, cc_s.orbital_of), "identical orbital tables")
    t_a = intersection_tensor(cc_a)
    t_s = intersection_tensor(cc_s)
    c.expect(np.array_equal(t_a, t_s), "identical intersection tensors")
    for p in (2, 5):
        rep_a = ctx.analyze("altpairs:7", p)
        rep_s = run_analysis("sympairs:7", p, seed=ctx.seed, instance=sym)
        same = (
            rep_a.verdict.status == rep_s.verdict.status
            and rep_a.verdict.method == rep_s.verdict.method
            and (rep_a.verdict.witness is None) == (rep_s.verdict.witness is None)
            and (rep_a.verdict.witness is None
                 or np.array_equal(rep_a.verdict.witness, rep_s.verdict.witness))
        )
        c.expect(same, f"identical verdicts at p={p}")
    return c.result()


def crit_three_halves_sweep(ctx: SuiteContext) -> CriterionResult:
    c = _Checker("three-halves-sweep")
    t0 = time.perf_counter()
    specs = ["altpairs:7", "psl2cosets:8", "frobenius:7,3", "frobenius:5,2"] + TWO_TRANSITIVE_SWEEP
    for spec in specs:
        cls = classify_action(ctx.instance(spec).group)
        c.expect(cls.three_halves_transitive, f"{spec} is 3/2-transitive")
        for p in SWEEP_PRIMES:
            rep = ctx.analyze(spec, p)
            c.expect(
                rep.verdict.status != "not_symmetric",
                f"no negative verdict for {spec} at p={p}",
            )
            c.expect(
                rep.verdict.is_positive(),
                f"certified positive for {spec} at p={p} ({rep.verdict.status})",
            )
    sym = build_sym_on_pairs(7)
    for p in SWEEP_PRIMES:
        rep = run_analysis("sympairs:7", p, seed=ctx.seed, instance=sym)
        c.expect(rep.verdict.is_positive(), f"certified positive for sympairs:7 at p={p}")
    dt = time.perf_counter() - t0
    c.expect(dt < 300.0, f"sweep runtime {dt:.1f}s < 300s")
    return c.result()


def crit_invertible_valency_form(ctx: SuiteContext) -> CriterionResult:
    c = _Checker("invertible-valency-form")
    for spec in AXIOM_SUITE_SPECS:
        for p in SWEEP_PRIMES:
            rep = ctx.analyze(spec, p)
            if any(d % p == 0 for d in rep.classification.subdegrees):
                continue
            c.expect(
                rep.natural_form_symmetric and rep.natural_form_nondegenerate,
                f"form symmetric and nondegenerate for {spec} at p={p}",
            )
            c.expect_eq(rep.verdict.method, "natural_form", f"short-circuit for {spec} at p={p}")
    return c.result()


CRITERIA = [
    ("alt7-pairs", crit_alt7_pairs),
    ("affine-shear", crit_affine_shear),
    ("sign-twist-family", crit_sign_twist_family),
    ("psl2-dihedral", crit_psl2_dihedral),
    ("frobenius", crit_frobenius),
    ("config-axioms", crit_config_axioms),
    ("oracle-equivalence", crit_oracle_equivalence),
    ("schur-correspondence", crit_schur_correspondence),
    ("overgroup-equal-rank", crit_overgroup_equal_rank),
    ("three-halves-sweep", crit_three_halves_sweep),
    ("invertible-valency-form", crit_invertible_valency_form),
]


def run_all(seed: int = 0, corrupt: bool = False, only: list[str] | None = None):
    if only:
        known = {key for key, _ in CRITERIA}
        unknown = sorted(set(only) - known)
        if unknown:
            from .errors import InputError

            raise InputError(f"unknown criteria {unknown}; known: {sorted(known)}")
    _kernels.warmup()
    ctx = SuiteContext(seed=seed, corrupt=corrupt)
    results = []
    for key, fn in CRITERIA:
        if only and key not in only:
            continue
        try:
            results.append(fn(ctx))
        except Exception as exc:  # a crash is a failing criterion, not a crashed suite
            results.append(CriterionResult(key, False, [f"FAIL: raised {exc!r}"]))
    return results


def render(results, verbose: bool = False) -> str:
    lines = []
    for r in results:
        lines.append(r.line())
        shown = r.details if verbose else [d for d in r.details if d.startswith("FAIL")]
        lines.extend(f"    {d}" for d in shown)
    n_pass = sum(1 for r in results if r.passed)
    lines.append(f"{n_pass}/{len(results)} criteria passed")
    return "\n".join(lines) + "\n"
