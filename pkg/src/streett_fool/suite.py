"""End-to-end fooling-set campaign over one ``(n, k)`` instance.

For every Q-ranking f the campaign builds the Q-word, checks the four
path properties, and checks that ``(G_f)^omega`` is Streett-rejected and
Rabin-accepted. For selected ordered pairs ``f != f'`` it checks that
``(G_f^a G_f'^b)^omega`` is Streett-accepted with a replayable witness.
Mixed periods are sampled over a finite set of exponents ``(a, b)``;
this is evidence, not a proof of the infinite inclusion.
"""

from __future__ import annotations

import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from typing import Optional

from . import __version__
from .builder import build_q_word
from .core import FiniteWord, LassoWord, build_full_streett, empty_word
from .lasso import check_witness, rabin_accepts, streett_accepts
from .rankings import QRanking, count_q_rankings, enumerate_q_rankings, parse_ranking
from .verifier import default_path_cap, verify_q_word

DEFAULT_EXPONENTS = ((1, 1), (1, 2), (2, 1), (2, 2))


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class CampaignConfig:
    n: int
    k: int
    pair_policy: str = "all_pairs"
    sample_count: Optional[int] = None
    seed: Optional[int] = None
    repetition_exponents: tuple = DEFAULT_EXPONENTS
    path_cap: int = field(default_factory=default_path_cap)
    enumeration_budget: int = 10**5
    workers: int = 1

    def __post_init__(self):
        object.__setattr__(self, "repetition_exponents",
                           tuple(tuple(e) for e in self.repetition_exponents))
        if self.pair_policy not in ("all_pairs", "sample"):
            raise ValueError(f"unknown pair policy {self.pair_policy!r}")
        sampling = self.pair_policy == "sample"
        if sampling != (self.seed is not None) or sampling != (self.sample_count is not None):
            raise ValueError("seed and sample_count are required for, and only for, sampling")
        for a, b in self.repetition_exponents:
            if a < 1 or b < 1:
                raise ValueError("both words must repeat at least once per period")

    def to_dict(self) -> dict:
        d = asdict(self)
        d["repetition_exponents"] = [list(e) for e in self.repetition_exponents]
        d.pop("workers")
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "CampaignConfig":
        return cls(**d)


@dataclass
class StructuralVerdict:
    ranking: str
    properties: dict

    @property
    def passed(self) -> bool:
        return all(self.properties.values())


@dataclass
class RejectionVerdict:
    """Whether ``(G_f)^omega`` falls outside L(S)."""

    ranking: str
    streett_rejected: bool
    rabin_accepted: bool
    rabin_witness_ok: bool

    @property
    def passed(self) -> bool:
        return self.streett_rejected and self.rabin_accepted and self.rabin_witness_ok


@dataclass
class MixedVerdict:
    """Whether ``(G_f^a G_f'^b)^omega`` lands inside L(S)."""

    first: str
    second: str
    a: int
    b: int
    accepted: bool
    witness_ok: bool

    @property
    def passed(self) -> bool:
        return self.accepted and self.witness_ok


@dataclass
class CampaignReport:
    config: CampaignConfig
    ranking_count: int
    structural: list = field(default_factory=list)
    rejection: list = field(default_factory=list)
    mixed: list = field(default_factory=list)
    timing: dict = field(default_factory=dict, compare=False)

    @property
    def overall(self) -> bool:
        return all(v.passed for v in self.structural + self.rejection + self.mixed)

    @property
    def lower_bound_states(self) -> int:
        return self.ranking_count

    def statement(self) -> str:
        return (
            f"Every union-closed automaton complementing the full Streett automaton "
            f"(n={self.config.n}, k={self.config.k}) needs at least {self.ranking_count} states. "
            f"This is the arithmetic consequence of the fooling-set conditions checked here; "
            f"mixed periods were sampled for exponents "
            f"{[list(e) for e in self.config.repetition_exponents]} only."
        )

    def to_dict(self, with_timing: bool = True) -> dict:
        d = {
            "tool_version": __version__,
            "config": self.config.to_dict(),
            "ranking_count": self.ranking_count,
            "lower_bound_states": self.lower_bound_states,
            "statement": self.statement(),
            "overall": "pass" if self.overall else "fail",
            "summary": {
                "structural": _tally(self.structural),
                "rejection": _tally(self.rejection),
                "mixed": _tally(self.mixed),
            },
            "structural": [asdict(v) for v in self.structural],
            "rejection": [asdict(v) for v in self.rejection],
            "mixed": [asdict(v) for v in self.mixed],
        }
        if with_timing:
            d["timing"] = self.timing
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "CampaignReport":
        return cls(
            config=CampaignConfig.from_dict(d["config"]),
            ranking_count=d["ranking_count"],
            structural=[StructuralVerdict(**v) for v in d["structural"]],
            rejection=[RejectionVerdict(**v) for v in d["rejection"]],
            mixed=[MixedVerdict(**v) for v in d["mixed"]],
            timing=d.get("timing", {}),
        )


def _tally(verdicts: list) -> dict:
    passed = sum(v.passed for v in verdicts)
    return {"total": len(verdicts), "passed": passed, "failed": len(verdicts) - passed}


@lru_cache(maxsize=4096)
def _q_word(n: int, k: int, ranking: str) -> FiniteWord:
    return build_q_word(build_full_streett(n, k), parse_ranking(ranking))


def check_ranking(n: int, k: int, ranking: str, path_cap: int) -> tuple[StructuralVerdict, RejectionVerdict]:
    aut = build_full_streett(n, k)
    w = _q_word(n, k, ranking)
    reports = verify_q_word(w, parse_ranking(ranking), path_cap)
    structural = StructuralVerdict(ranking, {r.property: r.holds for r in reports})
    lasso = LassoWord(empty_word(n, k), w)
    streett = streett_accepts(aut, lasso)
    rabin = rabin_accepts(aut, lasso)
    rejection = RejectionVerdict(
        ranking,
        streett_rejected=not streett.accepted,
        rabin_accepted=rabin.accepted,
        rabin_witness_ok=rabin.accepted and check_witness(aut, lasso, rabin),
    )
    return structural, rejection


def check_pair(n: int, k: int, first: str, second: str, exponents) -> list[MixedVerdict]:
    aut = build_full_streett(n, k)
    w1, w2 = _q_word(n, k, first), _q_word(n, k, second)
    out = []
    for a, b in exponents:
        lasso = LassoWord(empty_word(n, k), w1 * a + w2 * b)
        verdict = streett_accepts(aut, lasso)
        ok = verdict.accepted and check_witness(aut, lasso, verdict)
        out.append(MixedVerdict(first, second, a, b, verdict.accepted, ok))
    return out


def select_pairs(cfg: CampaignConfig, count: int) -> list[tuple[int, int]]:
    total = count * (count - 1)
    if cfg.pair_policy == "all_pairs":
        codes = range(total)
    else:
        rng = random.Random(cfg.seed)
        codes = sorted(rng.sample(range(total), min(cfg.sample_count, total)))
    pairs = []
    for code in codes:
        i, j = divmod(code, count - 1)
        pairs.append((i, j + 1 if j >= i else j))
    return pairs


def _ranking_task(args):
    return check_ranking(*args)


def _pair_task(args):
    return check_pair(*args)


def run_campaign(cfg: CampaignConfig) -> CampaignReport:
    count = count_q_rankings(cfg.n, cfg.k)
    if count > cfg.enumeration_budget:
        raise BudgetExceeded(
            f"{count} Q-rankings at (n={cfg.n}, k={cfg.k}) exceed the enumeration budget "
            f"{cfg.enumeration_budget}"
        )
    rankings = [f.serialize() for f in enumerate_q_rankings(cfg.n, cfg.k)]
    report = CampaignReport(cfg, count)
    pairs = select_pairs(cfg, count)
    ranking_jobs = [(cfg.n, cfg.k, r, cfg.path_cap) for r in rankings]
    pair_jobs = [(cfg.n, cfg.k, rankings[i], rankings[j], cfg.repetition_exponents) for i, j in pairs]

    started = time.perf_counter()
    if cfg.workers > 1:
        with ProcessPoolExecutor(cfg.workers) as pool:
            ranking_results = list(pool.map(_ranking_task, ranking_jobs, chunksize=8))
            mid = time.perf_counter()
            pair_results = list(pool.map(_pair_task, pair_jobs, chunksize=32))
    else:
        ranking_results = [_ranking_task(job) for job in ranking_jobs]
        mid = time.perf_counter()
        pair_results = [_pair_task(job) for job in pair_jobs]
    done = time.perf_counter()

    for structural, rejection in ranking_results:
        report.structural.append(structural)
        report.rejection.append(rejection)
    for verdicts in pair_results:
        report.mixed.extend(verdicts)
    report.timing = {
        "rankings_seconds": round(mid - started, 3),
        "pairs_seconds": round(done - mid, 3),
        "total_seconds": round(done - started, 3),
    }
    return report


def emit_report(rep: CampaignReport, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(rep.to_dict(), fh, indent=1, sort_keys=True)
        fh.write("\n")


def load_report(path) -> CampaignReport:
    with open(path, encoding="utf-8") as fh:
        return CampaignReport.from_dict(json.load(fh))
