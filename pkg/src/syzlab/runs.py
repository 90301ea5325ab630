"""Model/verifier runs with embedded checks and replayable JSON reports.

Every run produces a report dict that embeds the full model data
(prime, seed, parameters, coefficient vectors), so any published number
can be re-derived from the report alone.  Rerunning a config yields a
byte-identical report except for the timing fields (``ms`` inside
strand entries, ``total_ms`` at top level).
"""

from __future__ import annotations

import json
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from .classverify import verify_class_range
from .errors import DegenerateInstance, SyzlabError
from .fieldmath import DEFAULT_PRIME
from .koszul import (
    MulTable,
    StrandResult,
    delta1_matrix,
    delta2_matrix,
    eagon_northcott_strand,
    linear_strand,
)
from .linalg import dvr_degeneracy_check, random_dvr_instance
from .models import (
    CheckReport,
    ScrollModel,
    fit_max_clifford_plane,
    fit_nodal_bideg,
    make_ci_fixture,
    model_selfcheck,
)
from .rng import RNG_NAME, XorShift64Star, derive_seed
from .series import big_binom

SCHEMA = "syzlab-report/1"

THREADS_ENV = "SYZLAB_THREADS"


def thread_cap() -> int:
    raw = os.environ.get(THREADS_ENV, "")
    if raw.strip():
        try:
            return max(1, int(raw))
        except ValueError:
            pass
    return os.cpu_count() or 1


@dataclass
class RunOutcome:
    report: dict
    ok: bool
    degenerate: bool = False

    @property
    def exit_code(self) -> int:
        if self.degenerate:
            return 2
        return 0 if self.ok else 1


def write_json(doc: dict, path) -> None:
    Path(path).write_text(
        json.dumps(doc, indent=2, ensure_ascii=False) + "\n", encoding="utf-8"
    )


def _base_report(command: str, params: dict) -> dict:
    return {"schema": SCHEMA, "rng": RNG_NAME, "command": command, "params": params}


def _dump_strand_matrices(table: MulTable, route: str, dump_dir) -> None:
    directory = Path(dump_dir)
    directory.mkdir(parents=True, exist_ok=True)
    n = table.h0L
    for p in range(1, n - 1):
        delta1_matrix(n, p, table.p).write_matrixmarket(
            directory / f"{route}_p{p}_delta1.mtx"
        )
        delta2_matrix(table, p).write_matrixmarket(
            directory / f"{route}_p{p}_delta2.mtx"
        )


def _strand_with_checks(
    table: MulTable,
    genus: int | None,
    checks: CheckReport,
    label: str,
) -> StrandResult:
    strand = linear_strand(table)
    if genus is not None:
        expected_k11 = (genus - 2) * (genus - 3) // 2
        checks.add(
            f"{label}_k11_formula",
            strand.dims[0] == expected_k11,
            f"K_1,1 = {strand.dims[0]}, expected {expected_k11}",
        )
    checks.add(
        f"{label}_vanishing_propagates",
        strand.vanishing_propagates(),
        str(strand.dims),
    )
    return strand


def run_scroll(k: int, prime: int = DEFAULT_PRIME, dump_dir=None) -> RunOutcome:
    start = time.perf_counter()
    model = ScrollModel(k, prime)
    checks = model_selfcheck(model)
    table = model.mul_table()
    strand = linear_strand(table)
    en = eagon_northcott_strand(k, table.h0L - 2)
    checks.add("strand_matches_eagon_northcott", strand.dims == en, f"{strand.dims} vs {en}")
    checks.add(
        "extra_syzygies_at_k",
        strand.dim_at(k - 1) == k - 1,
        f"j={k} gives {strand.dim_at(k - 1)}, expected {k - 1}",
    )
    checks.add("vanishing_propagates", strand.vanishing_propagates(), str(strand.dims))
    if dump_dir:
        _dump_strand_matrices(table, "scroll", dump_dir)
    report = _base_report("scroll", {"k": k, "prime": prime})
    report.update(
        {
            "model": model.to_dict(),
            "strand": strand.to_dict(),
            "extra_syzygies_at_k": strand.dim_at(k - 1),
            "checks": checks.to_list(),
            "pass": checks.all_ok,
            "total_ms": round((time.perf_counter() - start) * 1000, 3),
        }
    )
    return RunOutcome(report, checks.all_ok)


def _gonal_strand_checks(strand: StrandResult, k: int, checks: CheckReport, label: str) -> None:
    g = 2 * k - 1
    extra = strand.dim_at(k - 1)
    checks.add(
        f"{label}_extra_equals_k_minus_1",
        extra == k - 1,
        f"j={k} gives {extra}, expected {k - 1}",
    )
    bound = big_binom(g, k - 1) + (k - 1)
    nullity = strand.nullity_at(k - 1)
    checks.add(
        f"{label}_kernel_lower_bound",
        nullity >= bound,
        f"nullity {nullity} >= C({g},{k - 1})+{k - 1} = {bound}",
    )
    en = eagon_northcott_strand(k, strand.h0L - 2)
    dominated = all(c >= s for c, s in zip(strand.dims, en))
    checks.add(
        f"{label}_dominates_scroll_strand",
        dominated,
        f"{strand.dims} >= {en} entrywise",
    )


def run_gonal(
    k: int,
    prime: int = DEFAULT_PRIME,
    seed: int = 0,
    route: str = "both",
    dump_dir=None,
) -> RunOutcome:
    if route not in ("quotient", "points", "both"):
        raise ValueError(f"unknown route {route!r}")
    start = time.perf_counter()
    report = _base_report(
        "gonal", {"k": k, "prime": prime, "seed": seed, "route": route}
    )
    try:
        model = fit_nodal_bideg(k, prime, seed)
    except DegenerateInstance as exc:
        report.update({"error": str(exc), "pass": False})
        return RunOutcome(report, False, degenerate=True)
    checks = model_selfcheck(model)
    routes: dict[str, dict] = {}
    strands: dict[str, StrandResult] = {}
    g = model.genus
    if route in ("quotient", "both"):
        table = model.mul_table_quotient()
        strands["quotient"] = _strand_with_checks(table, g, checks, "quotient")
        _gonal_strand_checks(strands["quotient"], k, checks, "quotient")
        routes["quotient"] = strands["quotient"].to_dict()
        if dump_dir:
            _dump_strand_matrices(table, "quotient", dump_dir)
    if route in ("points", "both"):
        table = model.mul_table_eval()
        strands["points"] = _strand_with_checks(table, g, checks, "points")
        _gonal_strand_checks(strands["points"], k, checks, "points")
        routes["points"] = strands["points"].to_dict()
        if dump_dir:
            _dump_strand_matrices(table, "points", dump_dir)
    if route == "both":
        checks.add(
            "route_agreement",
            strands["quotient"].dims == strands["points"].dims,
            f"{strands['quotient'].dims} vs {strands['points'].dims}",
        )
    any_strand = next(iter(strands.values()))
    report.update(
        {
            "model": model.to_dict(),
            "genus": g,
            "routes": routes,
            "extra_syzygies_at_k": any_strand.dim_at(k - 1),
            "checks": checks.to_list(),
            "pass": checks.all_ok,
            "total_ms": round((time.perf_counter() - start) * 1000, 3),
        }
    )
    return RunOutcome(report, checks.all_ok)


def run_maxcliff(
    k: int, prime: int = DEFAULT_PRIME, seed: int = 0, dump_dir=None
) -> RunOutcome:
    start = time.perf_counter()
    report = _base_report("maxcliff", {"k": k, "prime": prime, "seed": seed})
    try:
        model = fit_max_clifford_plane(k, prime, seed)
    except DegenerateInstance as exc:
        report.update({"error": str(exc), "pass": False})
        return RunOutcome(report, False, degenerate=True)
    checks = model_selfcheck(model)
    table = model.mul_table_quotient()
    strand = _strand_with_checks(table, model.genus, checks, "quotient")
    extra = strand.dim_at(model.genus - k)
    checks.add(
        "extra_syzygies_vanish",
        extra == 0,
        f"j={k} gives {extra}, expected 0 for maximal Clifford index",
    )
    if dump_dir:
        _dump_strand_matrices(table, "quotient", dump_dir)
    report.update(
        {
            "model": model.to_dict(),
            "genus": model.genus,
            "strand": strand.to_dict(),
            "extra_syzygies_at_k": extra,
            "checks": checks.to_list(),
            "pass": checks.all_ok,
            "total_ms": round((time.perf_counter() - start) * 1000, 3),
        }
    )
    return RunOutcome(report, checks.all_ok)


def run_ci(genus: int, prime: int = DEFAULT_PRIME, seed: int = 0, dump_dir=None) -> RunOutcome:
    start = time.perf_counter()
    report = _base_report("ci", {"genus": genus, "prime": prime, "seed": seed})
    try:
        fixture = make_ci_fixture(genus, prime, seed)
        checks = model_selfcheck(fixture)
        table = fixture.mul_table()
    except DegenerateInstance as exc:
        report.update({"error": str(exc), "pass": False})
        return RunOutcome(report, False, degenerate=True)
    strand = _strand_with_checks(table, genus, checks, "quotient")
    extra_j = 3 if genus == 5 else 2
    extra = strand.dim_at(genus - extra_j)
    checks.add(
        "extra_syzygies_vanish",
        extra == 0,
        f"j={extra_j} gives {extra}, expected 0",
    )
    if dump_dir:
        _dump_strand_matrices(table, "quotient", dump_dir)
    report.update(
        {
            "model": fixture.to_dict(),
            "strand": strand.to_dict(),
            "checks": checks.to_list(),
            "pass": checks.all_ok,
            "total_ms": round((time.perf_counter() - start) * 1000, 3),
        }
    )
    return RunOutcome(report, checks.all_ok)


def run_verify_class(kmax: int) -> RunOutcome:
    start = time.perf_counter()
    results, elapsed = verify_class_range(kmax)
    ok = all(r.all_ok for r in results)
    report = _base_report("verify-class", {"kmax": kmax})
    report.update(
        {
            "entries": [r.to_dict() for r in results],
            "pass": ok,
            "total_ms": round((time.perf_counter() - start) * 1000, 3),
        }
    )
    return RunOutcome(report, ok)


def run_dvr_demo(size: int, seed: int = 0, count: int = 1, prime: int = DEFAULT_PRIME) -> RunOutcome:
    """Random local degeneracy instances U diag(t^a) V with known answers."""
    if size < 1:
        raise ValueError("size must be >= 1")
    start = time.perf_counter()
    rng = XorShift64Star(derive_seed(seed, 0xD78))
    entries = []
    ok = True
    for _ in range(count):
        exponents = [rng.randrange(4) for _ in range(size)]
        inst = random_dvr_instance(size, exponents, rng, prime)
        corank0, detval, flag = dvr_degeneracy_check(inst)
        expect_corank = sum(1 for a in exponents if a > 0)
        expect_val = sum(exponents)
        entry_ok = (
            flag
            and corank0 == expect_corank
            and detval == expect_val
            and ((detval == corank0) == all(a <= 1 for a in exponents))
        )
        ok = ok and entry_ok
        entries.append(
            {
                "exponents": exponents,
                "corank_at_0": corank0,
                "det_valuation": detval,
                "bound_holds": flag,
                "ok": entry_ok,
            }
        )
    report = _base_report("dvr-demo", {"size": size, "seed": seed, "count": count, "prime": prime})
    report.update(
        {
            "entries": entries,
            "pass": ok,
            "total_ms": round((time.perf_counter() - start) * 1000, 3),
        }
    )
    return RunOutcome(report, ok)


# -- suite orchestration -----------------------------------------------------

_SUITE_RUNNERS = {
    "scroll": lambda e: run_scroll(e["k"], e.get("prime", DEFAULT_PRIME)),
    "gonal": lambda e: run_gonal(
        e["k"], e.get("prime", DEFAULT_PRIME), e.get("seed", 0), e.get("route", "both")
    ),
    "maxcliff": lambda e: run_maxcliff(
        e["k"], e.get("prime", DEFAULT_PRIME), e.get("seed", 0)
    ),
    "ci": lambda e: run_ci(e["genus"], e.get("prime", DEFAULT_PRIME), e.get("seed", 0)),
    "verify-class": lambda e: run_verify_class(e["kmax"]),
    "dvr-demo": lambda e: run_dvr_demo(
        e["size"], e.get("seed", 0), e.get("count", 1), e.get("prime", DEFAULT_PRIME)
    ),
}


class SuiteConfigError(SyzlabError):
    """Malformed suite configuration."""


def validate_suite_config(entries) -> list[dict]:
    if not isinstance(entries, list):
        raise SuiteConfigError("suite config must be a JSON list")
    required = {
        "scroll": ["k"],
        "gonal": ["k"],
        "maxcliff": ["k"],
        "ci": ["genus"],
        "verify-class": ["kmax"],
        "dvr-demo": ["size"],
    }
    for i, entry in enumerate(entries):
        if not isinstance(entry, dict):
            raise SuiteConfigError(f"entry {i} is not an object")
        cmd = entry.get("command")
        if cmd not in _SUITE_RUNNERS:
            raise SuiteConfigError(f"entry {i}: unknown command {cmd!r}")
        for key in required[cmd]:
            if key not in entry:
                raise SuiteConfigError(f"entry {i} ({cmd}): missing {key!r}")
    return entries


def run_suite(entries: list[dict], threads: int | None = None) -> RunOutcome:
    """Run entries concurrently (up to the thread cap), aggregate verdicts.

    Aggregation happens in input order, so the summary is deterministic
    regardless of the worker count.
    """
    validate_suite_config(entries)
    start = time.perf_counter()
    cap = threads if threads else thread_cap()

    def one(entry: dict) -> RunOutcome:
        try:
            return _SUITE_RUNNERS[entry["command"]](entry)
        except SyzlabError as exc:
            return RunOutcome({"error": str(exc), "pass": False}, False)

    if len(entries) <= 1 or cap == 1:
        outcomes = [one(e) for e in entries]
    else:
        with ThreadPoolExecutor(max_workers=min(cap, len(entries))) as pool:
            outcomes = list(pool.map(one, entries))
    ok = all(o.ok for o in outcomes)
    report = _base_report("suite", {"entries": len(entries), "threads": cap})
    report.update(
        {
            "results": [
                {"config": e, "pass": o.ok, "report": o.report}
                for e, o in zip(entries, outcomes)
            ],
            "pass": ok,
            "total_ms": round((time.perf_counter() - start) * 1000, 3),
        }
    )
    return RunOutcome(report, ok)
