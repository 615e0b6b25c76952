"""Decision procedures for the existence of a Kostant representative of middle length.

Given cuspidal weights ``lam`` of GL_n and ``lam'`` of GL_n' (n even, n' odd)
the question is whether there is a dominant ``mu~`` of GL_N and ``w`` in
``W^P`` with ``l(w) = n n'/2`` and ``w . mu~ = (lam, lam')``.  Two answers are
computed: an exhaustive search over ``W^P`` and the closed-form inequality on
``a(mu) = d - d'``.  Disagreement is reported, never raised.
"""

from __future__ import annotations

import enum
import itertools
import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence

from .halfint import HalfInt
from .hodge import HodgeSet, hodge_set_of, middle_hodge_number, p_of_mu, tensor_hodge
from .lvalues import (
    CriticalData,
    admissible_a_interval,
    admissible_a_values,
    automorphic_center,
    critical_set_automorphic,
    critical_set_coh,
    nu_zero,
    pair_coverage,
    ratio_statements,
    successive_pairs,
)
from .weights import CuspidalParams, Weight, format_vector, twist_by_det, validate
from .weyl import (
    BlockPair,
    Perm,
    concat_levi_weight,
    dot_action,
    dot_preimage,
    is_dominant,
    is_kostant_rep,
    kostant_reps_of_length,
)

__all__ = [
    "Verdict",
    "LemmaInstance",
    "Witness",
    "LemmaReport",
    "SweepConfig",
    "InvalidConfig",
    "bottom_degree",
    "degree_identity",
    "brute_force_witnesses",
    "brute_force_lemma",
    "closed_form_lemma",
    "check_witness",
    "verify_instance",
    "canonical_weights",
    "sweep",
]

log = logging.getLogger(__name__)


class Verdict(str, enum.Enum):
    AGREE_TRUE = "AGREE_TRUE"
    AGREE_FALSE = "AGREE_FALSE"
    DISCREPANCY = "DISCREPANCY"
    HYPOTHESIS_FAIL = "HYPOTHESIS_FAIL"


def bottom_degree(n: int) -> int:
    """Lowest degree of cuspidal cohomology of GL_n."""
    if n < 1:
        raise ValueError("n must be positive")
    return n * n // 4 if n % 2 == 0 else (n * n - 1) // 4


def degree_identity(block: BlockPair) -> bool:
    """``b_N == b_n + b_n' + dim(U_P)/2``."""
    return 4 * bottom_degree(block.N) == 4 * (
        bottom_degree(block.n) + bottom_degree(block.n_prime)
    ) + 2 * block.dim_unipotent


@dataclass(frozen=True)
class LemmaInstance:
    lam: Weight
    lam_prime: Weight
    block: BlockPair
    params: CuspidalParams = field(compare=False, repr=False)
    params_prime: CuspidalParams = field(compare=False, repr=False)

    @classmethod
    def create(cls, lam: Weight, lam_prime: Weight) -> "LemmaInstance":
        """Validate both weights and the block parity; raises on failure."""
        block = BlockPair(lam.n, lam_prime.n).require_standard()
        return cls(lam, lam_prime, block, validate(lam), validate(lam_prime))

    @property
    def mu(self) -> tuple[int, ...]:
        return concat_levi_weight(self.lam.entries, self.lam_prime.entries)

    @property
    def a_mu(self) -> HalfInt:
        return self.params.d - self.params_prime.d

    def hodge(self) -> HodgeSet:
        return tensor_hodge(hodge_set_of(self.params), hodge_set_of(self.params_prime))


@dataclass(frozen=True)
class Witness:
    w: Perm
    mu_tilde: tuple[int, ...]

    def to_json(self) -> dict:
        return {"w": str(self.w), "length": self.w.length, "mu_tilde": format_vector(self.mu_tilde)}


def brute_force_witnesses(inst: LemmaInstance) -> list[Witness]:
    """Every middle-length ``w`` in ``W^P`` whose dot preimage of ``mu`` is dominant."""
    target = inst.block.dim_unipotent // 2
    mu = inst.mu
    found = []
    for w in kostant_reps_of_length(inst.block, target):
        mu_tilde = dot_preimage(w, mu)
        if is_dominant(mu_tilde):
            found.append(Witness(w, mu_tilde))
    return found


def brute_force_lemma(inst: LemmaInstance) -> Optional[Witness]:
    found = brute_force_witnesses(inst)
    return found[0] if found else None


def closed_form_lemma(inst: LemmaInstance) -> bool:
    """Membership of ``a(mu)`` in the admissible interval; raises ``MiddleNonzero``."""
    p = p_of_mu(inst.hodge())
    total = inst.params.motivic_weight + inst.params_prime.motivic_weight
    lower, upper = admissible_a_interval(total, p, inst.block.N)
    return lower <= inst.a_mu <= upper


def check_witness(inst: LemmaInstance, witness: Witness) -> bool:
    """Re-check a witness without the search: W^P membership, length, dominance, equation."""
    w = witness.w
    return (
        is_kostant_rep(w, inst.block)
        and 2 * w.length == inst.block.dim_unipotent
        and is_dominant(witness.mu_tilde)
        and dot_action(w, witness.mu_tilde) == inst.mu
    )


@dataclass
class LemmaReport:
    instance: LemmaInstance
    closed_form: Optional[bool]
    brute_force: bool
    witness: Optional[Witness]
    witness_count: int
    middle_hodge_ok: bool
    verdict: Verdict
    derived: dict

    @property
    def witness_ok(self) -> bool:
        return self.witness is None or check_witness(self.instance, self.witness)

    def to_json(self) -> dict:
        inst = self.instance
        return {
            "block": str(inst.block),
            "lambda": str(inst.lam),
            "lambda_prime": str(inst.lam_prime),
            "verdict": self.verdict.value,
            "closed_form": self.closed_form,
            "brute_force": self.brute_force,
            "middle_hodge_ok": self.middle_hodge_ok,
            "witness": self.witness.to_json() if self.witness else None,
            "witness_count": self.witness_count,
            "derived": self.derived,
        }


def _derived_quantities(inst: LemmaInstance, hodge: HodgeSet) -> dict:
    p, pp = inst.params, inst.params_prime
    total = p.motivic_weight + pp.motivic_weight
    out = {
        "a": format_vector(p.a),
        "d": str(p.d),
        "a_prime": format_vector(pp.a),
        "d_prime": str(pp.d),
        "w": p.motivic_weight,
        "w_prime": pp.motivic_weight,
        "a_mu": str(inst.a_mu),
        "hodge": hodge.to_json(),
        "middle_hodge_number": middle_hodge_number(hodge),
    }
    if out["middle_hodge_number"]:
        return out
    p_mu = p_of_mu(hodge)
    cd = CriticalData(p_mu, total, inst.a_mu, inst.block.N)
    lower, upper = admissible_a_interval(total, p_mu, inst.block.N)
    coh = critical_set_coh(cd)
    aut = critical_set_automorphic(cd)
    nu = nu_zero(cd)
    center = automorphic_center(cd)
    out.update(
        {
            "p_mu": p_mu,
            "a_interval": [str(lower), str(upper)],
            "admissible_count": len(admissible_a_values(total, p_mu, inst.block.N)),
            "critical_coh": coh,
            "critical_automorphic": [str(s) for s in aut],
            "automorphic_center": str(center),
            "automorphic_symmetric": center == HalfInt(1),
            "nu0": str(nu),
            "nu0_integral": nu.is_integer(),
            "ratio_statements": [r.to_json() for r in ratio_statements(cd)],
        }
    )
    return out


def verify_instance(inst: LemmaInstance) -> LemmaReport:
    hodge = inst.hodge()
    middle_ok = middle_hodge_number(hodge) == 0
    witnesses = brute_force_witnesses(inst)
    brute = bool(witnesses)
    derived = _derived_quantities(inst, hodge)
    if not middle_ok:
        closed = None
        verdict = Verdict.HYPOTHESIS_FAIL
    else:
        closed = closed_form_lemma(inst)
        if closed != brute:
            verdict = Verdict.DISCREPANCY
        else:
            verdict = Verdict.AGREE_TRUE if closed else Verdict.AGREE_FALSE
        p_mu, total = derived["p_mu"], inst.params.motivic_weight + inst.params_prime.motivic_weight
        derived["count_checks_ok"] = (
            len(derived["critical_coh"]) == 2 * p_mu - total
            and derived["admissible_count"] == max(0, 2 * p_mu - total - 1)
        )
        if closed:
            nu = HalfInt.parse(derived["nu0"])
            pair_ok = nu.is_integer() and (nu.to_int(), nu.to_int() + 1) in successive_pairs(
                derived["critical_coh"]
            )
            derived["coverage_ok"] = pair_ok and pair_coverage(total, p_mu, inst.block.N)
    report = LemmaReport(
        instance=inst,
        closed_form=closed,
        brute_force=brute,
        witness=witnesses[0] if witnesses else None,
        witness_count=len(witnesses),
        middle_hodge_ok=middle_ok,
        verdict=verdict,
        derived=derived,
    )
    derived["witness_ok"] = all(check_witness(inst, wit) for wit in witnesses)
    return report


# ---------------------------------------------------------------------------
# sweeps


class InvalidConfig(ValueError):
    pass


@dataclass(frozen=True)
class SweepConfig:
    """Sweep campaign parameters.

    ``twist_range`` is either an explicit inclusive ``(lo, hi)`` range of det
    twists applied to the GL_n weight, or ``None`` for an automatic range per
    orbit that covers the admissible ``a(mu)`` interval widened by
    ``twist_margin`` on each side.
    """

    block_pairs: tuple[BlockPair, ...]
    entry_bound: int
    twist_range: Optional[tuple[int, int]] = None
    twist_margin: int = 2
    output_path: Optional[str] = None
    format: str = "json"
    verbosity: str = "summary"

    def __post_init__(self) -> None:
        if not self.block_pairs:
            raise InvalidConfig("no block pairs given")
        for b in self.block_pairs:
            if not b.standard:
                raise InvalidConfig(f"block pair {b} needs n even and n' odd")
        if self.entry_bound < 1:
            raise InvalidConfig(f"entry bound must be at least 1, got {self.entry_bound}")
        if self.twist_range is not None and self.twist_range[0] > self.twist_range[1]:
            raise InvalidConfig(f"empty twist range {self.twist_range}")
        if self.twist_margin < 0:
            raise InvalidConfig("twist margin must be nonnegative")
        if self.format not in ("json", "csv", "text"):
            raise InvalidConfig(f"unknown format {self.format!r}")
        if self.verbosity not in ("summary", "full"):
            raise InvalidConfig(f"unknown verbosity {self.verbosity!r}")

    def to_json(self) -> dict:
        return {
            "block_pairs": [str(b) for b in self.block_pairs],
            "entry_bound": self.entry_bound,
            "twist_range": "auto" if self.twist_range is None else list(self.twist_range),
            "twist_margin": self.twist_margin,
            "verbosity": self.verbosity,
        }


def canonical_weights(n: int, bound: int) -> list[Weight]:
    """Valid GL_n weights with last entry 0 and all entries at most ``bound``.

    Ordered by gap vector, lexicographically.
    """
    found = []
    for head in itertools.combinations(range(bound, 0, -1), n - 1):
        lam = Weight(head + (0,))
        try:
            validate(lam)
        except ValueError:
            continue
        found.append(lam)
    found.sort(key=lambda lam: validate(lam).a)
    return found


def _auto_twists(lam: Weight, lam_prime: Weight, N: int, margin: int) -> tuple[int, int]:
    inst = LemmaInstance.create(lam, lam_prime)
    a0 = inst.a_mu
    hodge = inst.hodge()
    if middle_hodge_number(hodge):
        # whole orbit is outside the hypotheses; a small window around a = -N/2
        centre = (a0 + HalfInt(N)).twice // 2
        return centre - margin, centre + margin
    total = inst.params.motivic_weight + inst.params_prime.motivic_weight
    lower, upper = admissible_a_interval(total, p_of_mu(hodge), N)
    # a(mu) after twisting lam by l is a0 - l
    return (a0 - upper).to_int() - margin, (a0 - lower).to_int() + margin


@dataclass(frozen=True)
class _Orbit:
    lam: Weight
    lam_prime: Weight
    twists: tuple[int, int]
    covers_interval: bool


def _orbits(block: BlockPair, config: SweepConfig) -> Iterator[_Orbit]:
    for lam in canonical_weights(block.n, config.entry_bound):
        for lam_prime in canonical_weights(block.n_prime, config.entry_bound):
            auto = _auto_twists(lam, lam_prime, block.N, 0)
            if config.twist_range is None:
                lo, hi = auto[0] - config.twist_margin, auto[1] + config.twist_margin
                yield _Orbit(lam, lam_prime, (lo, hi), True)
            else:
                lo, hi = config.twist_range
                yield _Orbit(lam, lam_prime, (lo, hi), lo <= auto[0] and auto[1] <= hi)


def _verify_pair(args: tuple[tuple[int, ...], tuple[int, ...]]) -> dict:
    lam, lam_prime = args
    return verify_instance(LemmaInstance.create(Weight(lam), Weight(lam_prime))).to_json()


def _orbit_check(records: Sequence[dict], twists: Sequence[int], orbit: _Orbit) -> dict:
    """Twists giving AGREE_TRUE must form one run of the predicted length."""
    true_twists = [l for l, r in zip(twists, records) if r["verdict"] == Verdict.AGREE_TRUE.value]
    first = records[0]
    out = {
        "lambda": str(orbit.lam),
        "lambda_prime": str(orbit.lam_prime),
        "twists": list(orbit.twists),
        "true_twists": [true_twists[0], true_twists[-1]] if true_twists else None,
        "true_count": len(true_twists),
    }
    if "p_mu" not in first["derived"]:
        out["expected_count"] = None
        out["ok"] = None
        return out
    expected = first["derived"]["admissible_count"]
    out["expected_count"] = expected
    if not orbit.covers_interval or any(
        r["verdict"] == Verdict.DISCREPANCY.value for r in records
    ):
        out["ok"] = None
        return out
    run = bool(true_twists) and true_twists == list(range(true_twists[0], true_twists[-1] + 1))
    out["ok"] = len(true_twists) == expected and (run or expected == 0)
    return out


def sweep(config: SweepConfig, jobs: int = 1) -> dict:
    """Run the campaign; the returned report does not depend on ``jobs``."""
    plan = []
    for block in config.block_pairs:
        for orbit in _orbits(block, config):
            lo, hi = orbit.twists
            twists = list(range(lo, hi + 1))
            jobs_for_orbit = [
                (twist_by_det(orbit.lam, l).entries, orbit.lam_prime.entries) for l in twists
            ]
            plan.append((block, orbit, twists, jobs_for_orbit))

    flat = [job for *_, js in plan for job in js]
    if not flat:
        raise InvalidConfig("the configuration selects no instances")
    log.info("sweep: %d instances over %d orbits", len(flat), len(plan))
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_verify_pair, flat, chunksize=max(1, len(flat) // (4 * jobs))))
    else:
        results = [_verify_pair(job) for job in flat]

    counts = Counter()
    per_block = []
    discrepancies = []
    instances = []
    pos = 0
    for block in config.block_pairs:
        block_counts = Counter()
        orbit_checks = []
        anomalies = []
        for b, orbit, twists, js in plan:
            if b != block:
                continue
            records = results[pos : pos + len(js)]
            pos += len(js)
            for rec in records:
                block_counts[rec["verdict"]] += 1
                if rec["verdict"] == Verdict.DISCREPANCY.value:
                    discrepancies.append(rec)
                d = rec["derived"]
                if (
                    not d.get("witness_ok", True)
                    or d.get("count_checks_ok") is False
                    or d.get("coverage_ok") is False
                ):
                    anomalies.append(rec)
                instances.append(rec)
            orbit_checks.append(_orbit_check(records, twists, orbit))
        counts.update(block_counts)
        per_block.append(
            {
                "block": str(block),
                "instances": sum(block_counts.values()),
                "counts": _count_dict(block_counts),
                "orbits": len(orbit_checks),
                "orbit_checks_failed": [o for o in orbit_checks if o["ok"] is False],
                "orbit_checks_passed": sum(1 for o in orbit_checks if o["ok"]),
                "anomalies": anomalies,
                "orbit_checks": orbit_checks if config.verbosity == "full" else None,
            }
        )

    report = {
        "config": config.to_json(),
        "counts": _count_dict(counts),
        "discrepancies": discrepancies,
        "per_block": per_block,
    }
    if config.verbosity == "full":
        report["instances"] = instances
    return report


def _count_dict(c: Counter) -> dict:
    return {
        "agree_true": c[Verdict.AGREE_TRUE.value],
        "agree_false": c[Verdict.AGREE_FALSE.value],
        "discrepancy": c[Verdict.DISCREPANCY.value],
        "hypothesis_fail": c[Verdict.HYPOTHESIS_FAIL.value],
    }
