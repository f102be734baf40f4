"""The full analysis pipeline behind the CLI: build a group from a spec
string, classify the action, compute the orbital configuration and the
centralizer algebra over F_p, decide symmetry, and bundle everything into a
deterministic report.
"""

import json
import time
from dataclasses import dataclass, field

from .catalog import CatalogInstance, build_instance
from .coherent import (
    adjacency_product_check,
    intersection_tensor,
    two_orbits,
    verify_cc_axioms,
)
from .endo import (
    StructureReport,
    SymmetricVerdict,
    centralizer_algebra,
    centralizer_oracle,
    hecke_check,
    is_symmetric,
    natural_form,
    radical_chain,
    schur_vs_centralizer,
    structure_report,
    HECKE_ORDER_CAP,
    ORACLE_DEGREE_CAP,
)
from .errors import InputError, VerificationError
from .exactlin import is_prime, prime_field
from .perm import ActionClassification, classify_action


@dataclass
class AnalysisReport:
    group_spec: str
    degree: int
    group_order: int
    classification: ActionClassification
    orbital_count: int
    valencies: tuple[int, ...]
    characteristic: int
    algebra_dim: int
    natural_form_symmetric: bool
    natural_form_nondegenerate: bool
    radical_dims: tuple[int, ...]
    structure: StructureReport
    verdict: SymmetricVerdict
    schur: dict | None
    checks: dict
    seed: int
    timings_ms: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "group_spec": self.group_spec,
            "degree": self.degree,
            "group_order": self.group_order,
            "classification": {
                "transitive": self.classification.transitive,
                "orbit_sizes": sorted(self.classification.orbit_sizes),
                "subdegrees": sorted(self.classification.subdegrees or ()),
                "rank": self.classification.rank,
                "half_transitive": self.classification.half_transitive,
                "three_halves_transitive": self.classification.three_halves_transitive,
                "primitive": self.classification.primitive,
                "faithful": self.classification.faithful,
            },
            "orbital_count": self.orbital_count,
            "valencies": sorted(self.valencies),
            "characteristic": self.characteristic,
            "algebra_dim": self.algebra_dim,
            "natural_form": {
                "gram_symmetric": self.natural_form_symmetric,
                "gram_nondegenerate": self.natural_form_nondegenerate,
            },
            "radical_dims": list(self.radical_dims),
            "structure": {
                "top_dim": self.structure.top_dim,
                "left_socle_dim": self.structure.left_socle_dim,
                "right_socle_dim": self.structure.right_socle_dim,
                "is_local": self.structure.is_local,
                "commutative": self.structure.commutative,
            },
            "symmetric_verdict": {
                "status": self.verdict.status,
                "method": self.verdict.method,
                "witness": None
                if self.verdict.witness is None
                else [int(v) for v in self.verdict.witness],
                "certificate": self.verdict.certificate,
                "notes": self.verdict.notes,
            },
            "schur": self.schur,
            "checks": self.checks,
            "seed": self.seed,
            "timings_ms": self.timings_ms,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"

    def to_text(self) -> str:
        d = self.to_dict()
        cls = d["classification"]
        lines = [
            f"group      : {self.group_spec} (degree {self.degree}, order {self.group_order})",
            f"action     : transitive={cls['transitive']} rank={cls['rank']} "
            f"subdegrees={cls['subdegrees']} primitive={cls['primitive']} "
            f"3/2-transitive={cls['three_halves_transitive']} faithful={cls['faithful']}",
            f"orbitals   : {self.orbital_count} with valencies {d['valencies']}",
            f"algebra    : dim {self.algebra_dim} over F_{self.characteristic}; "
            f"radical dims {list(self.radical_dims)}",
            f"structure  : top {self.structure.top_dim}, socle (l/r) "
            f"{self.structure.left_socle_dim}/{self.structure.right_socle_dim}, "
            f"local={self.structure.is_local}, commutative={self.structure.commutative}",
            f"pairing    : gram symmetric={self.natural_form_symmetric} "
            f"nondegenerate={self.natural_form_nondegenerate}",
            f"verdict    : {self.verdict.status} (method {self.verdict.method})",
            f"             {self.verdict.notes}",
        ]
        if self.schur is not None:
            lines.append(
                f"schur ring : match={self.schur['iso_pass']} "
                f"basic sums {self.schur['basic_set_sums']}"
            )
        if "oracle_dim" in self.checks:
            lines.append(
                f"oracle     : centralizer dimension {self.checks['oracle_dim']} "
                f"(matches={self.checks['oracle_matches']})"
            )
        if "hecke" in self.checks:
            h = self.checks["hecke"]
            lines.append(
                f"hecke      : dim {h['hecke_dim']} vs rank {h['rank']} "
                f"(matches={h['matches_rank']})"
            )
        return "\n".join(lines) + "\n"


def run_analysis(spec: str, p: int, seed: int = 0, oracle: bool = False,
                 instance: CatalogInstance | None = None) -> AnalysisReport:
    """Run the whole pipeline on a group spec and characteristic.  Raises
    InputError on bad input (intransitive action, composite characteristic)
    and VerificationError when an internal consistency check fails."""
    if not is_prime(p):
        raise InputError(f"characteristic {p} is not prime")
    timings = {}

    def clock(name, fn):
        t0 = time.perf_counter()
        out = fn()
        timings[name] = round((time.perf_counter() - t0) * 1000.0, 3)
        return out

    if instance is None:
        instance = clock("build", lambda: build_instance(spec))
    G = instance.group
    order = clock("order", G.order)
    source_order = order if instance.faithful else None
    classification = clock("classify", lambda: classify_action(G))
    classification = ActionClassification(
        transitive=classification.transitive,
        orbit_sizes=classification.orbit_sizes,
        subdegrees=classification.subdegrees,
        rank=classification.rank,
        half_transitive=classification.half_transitive,
        three_halves_transitive=classification.three_halves_transitive,
        primitive=classification.primitive,
        faithful=instance.faithful,
    )
    if not classification.transitive:
        raise InputError("analysis requires a transitive action")

    cc = clock("two_orbits", lambda: two_orbits(G))
    tensor = clock("tensor", lambda: intersection_tensor(cc))
    axioms = clock("axioms", lambda: verify_cc_axioms(cc, tensor, seed=seed))
    if not axioms.passed:
        raise VerificationError(f"configuration axioms failed: {axioms.failures[0]}")
    adj_checked, adj_passed, adj_detail = clock(
        "adjacency_identity", lambda: adjacency_product_check(cc, tensor)
    )
    if adj_checked and not adj_passed:
        raise VerificationError(f"adjacency product identity failed: {adj_detail}")

    fieldp = prime_field(p)
    alg = clock("algebra", lambda: centralizer_algebra(cc, tensor, fieldp))
    form = clock("natural_form", lambda: natural_form(alg, cc))
    series = clock("radical", lambda: radical_chain(alg))
    structure = clock("structure", lambda: structure_report(alg, series))
    verdict = clock("verdict", lambda: is_symmetric(alg, hint=form, series=series, seed=seed))

    schur_summary = None
    if instance.regular is not None:
        from .perm import PermutationGroup

        T = PermutationGroup(G.degree, instance.regular.gens)
        names = [instance.regular.point_names[t.images[instance.base_point]]
                 for t in _regular_elements(instance)]
        iso = clock(
            "schur",
            lambda: schur_vs_centralizer(G, T, fieldp, alpha=instance.base_point,
                                         element_names=names),
        )
        if not iso.passed:
            raise VerificationError(f"Schur ring correspondence failed: {iso.detail}")
        schur_summary = {
            "iso_pass": iso.passed,
            "orbital_count": iso.orbital_count,
            "basic_set_count": iso.basic_set_count,
            "basic_set_sums": list(iso.basic_sums),
        }

    checks = {
        "cc_axioms": axioms.passed,
        "adjacency_product_identity": adj_passed if adj_checked else None,
        "associativity": True,  # enforced by the algebra constructor
    }
    if oracle:
        if G.degree <= ORACLE_DEGREE_CAP:
            dim = clock("oracle", lambda: centralizer_oracle(G, fieldp))
            checks["oracle_dim"] = dim
            checks["oracle_matches"] = dim == alg.dim
            if dim != alg.dim:
                raise VerificationError(
                    f"centralizer oracle dimension {dim} != orbital count {alg.dim}"
                )
        if order <= HECKE_ORDER_CAP:
            H = G.point_stabilizer(instance.base_point)
            if H.order() % p != 0:
                h = clock("hecke", lambda: hecke_check(G, instance.base_point, fieldp))
                checks["hecke"] = {
                    "hecke_dim": h.hecke_dim,
                    "rank": h.rank,
                    "matches_rank": h.matches_rank,
                }

    return AnalysisReport(
        group_spec=instance.spec,
        degree=G.degree,
        group_order=order,
        classification=classification,
        orbital_count=cc.m,
        valencies=tuple(int(v) for v in cc.valency),
        characteristic=p,
        algebra_dim=alg.dim,
        natural_form_symmetric=form.symmetric,
        natural_form_nondegenerate=form.nondegenerate,
        radical_dims=series.dims,
        structure=structure,
        verdict=verdict,
        schur=schur_summary,
        checks=checks,
        seed=seed,
        timings_ms=timings,
    )


def _regular_elements(instance: CatalogInstance):
    from .endo import enumerate_regular_subgroup

    return enumerate_regular_subgroup(instance.regular.gens, instance.group.degree)
