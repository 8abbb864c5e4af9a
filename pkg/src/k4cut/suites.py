"""Seeded, reproducible property suites over fixture and random graphs.

Suite names are part of the CLI surface: "lemmas" replays the per-cut
inequality contracts, "theorem" the end-to-end n^2/9 guarantee.

Each suite replays the inequality and identity contracts of the other
modules on a deterministic instance pool and reports one record per
check.  Reports are plain dicts of JSON-safe values built in a fixed
order, so serializing them with sorted keys is byte-reproducible for a
given (suite, seed, trials) triple.  Failures carry the instance's edge
list so any counterexample can be replayed directly.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from k4cut.cuts import (
    best_codegree_triangle,
    bipartize,
    build_four_partition,
    combined_lower_bound,
    four_partite_cut,
    k4free_cut,
    neighborhood_cut,
    technical_f,
    technical_g,
    technical_h,
    triangle_4partite_cut,
)
from k4cut.errors import InputError
from k4cut.generators import (
    SplitMix64,
    blowup,
    complete_graph,
    complete_multipartite,
    cycle_graph,
    empty_graph,
    petersen_graph,
    random_gnp,
    random_k4free_process,
    random_regular,
    random_tripartite,
)
from k4cut.graph import Graph, format_edge_list, mask_of
from k4cut.oracle import canonical_edge_mask, edge_order, exact_max_cut, exhaustive_theorem_sweep
from k4cut.regularity import Partition, density, hfree_bipartize, is_epsilon_regular, reduced_graph

SUITE_NAMES = (
    "lemmas",
    "theorem",
    "oracle_equivalence",
    "exhaustive",
    "technical",
    "regularity",
    "regular_split",
)


@dataclass(frozen=True)
class SuiteConfig:
    suite: str
    trials: int = 200
    seed: int = 0
    n_min: int = 5
    n_max: int = 40
    oracle_limit: int = 20
    sweep_max_n: int = 6
    samples: int = 1000

    def __post_init__(self):
        if self.suite not in SUITE_NAMES:
            raise InputError(f"unknown suite {self.suite!r}; choose from {SUITE_NAMES}")
        if self.trials < 1:
            raise InputError("trials must be >= 1")
        if not (1 <= self.n_min <= self.n_max):
            raise InputError("need 1 <= n_min <= n_max")


class _Recorder:
    def __init__(self):
        self.checks: list[dict] = []
        self.failures: list[dict] = []

    def record(self, check: str, instance: str, ok: bool, detail: str = "",
               graph: Graph | None = None, seed: int | None = None):
        entry = {"check": check, "instance": instance, "ok": bool(ok)}
        if detail:
            entry["detail"] = detail
        self.checks.append(entry)
        if not ok:
            failure = dict(entry)
            if graph is not None:
                failure["edge_list"] = format_edge_list(graph)
            if seed is not None:
                failure["seed"] = seed
            self.failures.append(failure)


def fixture_graphs() -> list[tuple[str, Graph]]:
    """The deterministic K4-free fixture families every suite reuses."""
    return [
        ("empty_4", empty_graph(4)),
        ("single_edge", Graph.from_edge_list(2, [(0, 1)])),
        ("K3", complete_graph(3)),
        ("star_K1_5", complete_multipartite([1, 5])),
        ("C5", cycle_graph(5)),
        ("C7", cycle_graph(7)),
        ("K1_1_2", complete_multipartite([1, 1, 2])),
        ("K222", complete_multipartite([2, 2, 2])),
        ("K3_2_2", complete_multipartite([3, 2, 2])),
        ("K333", complete_multipartite([3, 3, 3])),
        ("K444", complete_multipartite([4, 4, 4])),
        ("K555", complete_multipartite([5, 5, 5])),
        ("K666", complete_multipartite([6, 6, 6])),
        ("petersen", petersen_graph()),
        ("blowup_C5_2", blowup(cycle_graph(5), 2)),
        ("blowup_C5_3", blowup(cycle_graph(5), 3)),
        ("blowup_K3_4", blowup(complete_graph(3), 4)),
    ]


def random_pool(trials: int, seed: int, n_min: int, n_max: int) -> list[tuple[str, Graph, int]]:
    """trials seeded K4-free instances, alternating families."""
    master = SplitMix64(seed)
    pool = []
    for i in range(trials):
        sub = master.next_u64()
        rng = SplitMix64(sub)
        n = n_min + rng.below(n_max - n_min + 1)
        if i % 2 == 0:
            p = (200 + rng.below(800)) / 1000.0
            g = random_tripartite(n, p, sub ^ 1)
            name = f"random_tripartite[trial={i},n={n},p={p}]"
        else:
            max_e = max(1, n * n // 3)
            target = 1 + rng.below(max_e)
            g = random_k4free_process(n, sub ^ 2, target_edges=target)
            name = f"random_k4free_process[trial={i},n={n},target={target}]"
        pool.append((name, g, sub))
    return pool


# -- individual checks ----------------------------------------------------


def _check_identities(rec: _Recorder, name: str, g: Graph, seed=None):
    degs = g.degrees()
    m = g.triangle_count()
    rec.record("sum_degrees_equals_2e", name, sum(degs) == 2 * g.e, graph=g, seed=seed)
    rec.record("sum_ev_equals_3m", name,
               sum(g.neighborhood_edge_counts()) == 3 * m, graph=g, seed=seed)
    codeg = sum(g.codegree(u, v) for u, v in g.edges())
    rec.record("sum_codegree_equals_3m", name, codeg == 3 * m, graph=g, seed=seed)


def _check_lemma_bounds(rec: _Recorder, name: str, g: Graph, seed=None):
    n, e, m = g.n, g.e, g.triangle_count()
    if m >= 1:
        _, s = best_codegree_triangle(g)
        rec.record("codegree_sum_vs_9m", name, e * s >= 9 * m,
                   detail=f"e*s={e*s} 9m={9*m}", graph=g, seed=seed)
    if n >= 1:
        nb = neighborhood_cut(g)
        ok = n * n * nb.cut_value >= 4 * e * e - 6 * m * n
        rec.record("neighborhood_cut_bound", name, ok,
                   detail=f"n^2*cut={n*n*nb.cut_value} 4e^2-6mn={4*e*e-6*m*n}",
                   graph=g, seed=seed)
    if g.is_k4_free() and n >= 1:
        rec.record("turan_3e_at_most_n2", name, g.turan_check(),
                   detail=f"3e={3*e} n^2={n*n}", graph=g, seed=seed)
        kc = k4free_cut(g)
        ok = 7 * n * n * kc.cut_value >= 2 * e * n * n + 8 * e * e
        rec.record("k4free_cut_bound", name, ok,
                   detail=f"7n^2*cut={7*n*n*kc.cut_value} rhs={2*e*n*n+8*e*e}",
                   graph=g, seed=seed)
        if m >= 1:
            part = build_four_partition(g)
            t4 = four_partite_cut(g, part)
            e_x = g.edges_inside(part.x)
            rec.record("four_partite_cut_bound", name,
                       3 * t4.cut_value >= 2 * (e - e_x),
                       detail=f"3cut={3*t4.cut_value} 2(e-eX)={2*(e-e_x)}",
                       graph=g, seed=seed)


def _check_theorem(rec: _Recorder, name: str, g: Graph, seed=None):
    cert, report = bipartize(g)
    n = g.n
    rec.record("deletions_at_most_n2_over_9", name,
               9 * report.deletions <= n * n,
               detail=f"9|D|={9*report.deletions} n^2={n*n}", graph=g, seed=seed)
    rec.record("certificate_bipartite", name, cert.verify(g), graph=g, seed=seed)
    for method, cut in report.cuts.items():
        if cut is None:
            continue
        key = {"neighborhood": "neighborhood",
               "k4free_refine": "k4free",
               "triangle_4partite": "four_partite"}[method]
        bound = report.bounds.get(key)
        if bound is not None:
            rec.record(f"achieved_{method}_meets_bound", name, cut >= bound,
                       detail=f"cut={cut} bound={bound}", graph=g, seed=seed)


def _check_oracle(rec: _Recorder, name: str, g: Graph, cfg: SuiteConfig, seed=None):
    res = exact_max_cut(g, limit=cfg.oracle_limit)
    engine_cuts = [neighborhood_cut(g).cut_value]
    if g.is_k4_free():
        engine_cuts.append(k4free_cut(g).cut_value)
        t4 = triangle_4partite_cut(g)
        if t4 is not None:
            engine_cuts.append(t4.cut_value)
        for a in (Fraction(1), Fraction(4, 3), Fraction(69, 50), Fraction(2)):
            rec.record(f"oracle_vs_combined_a={a}", name,
                       res.max_cut >= combined_lower_bound(g, a), graph=g, seed=seed)
        rec.record("oracle_deletions_at_most_n2_over_9", name,
                   9 * res.min_deletions <= g.n * g.n,
                   detail=f"9min={9*res.min_deletions} n^2={g.n*g.n}",
                   graph=g, seed=seed)
        cert, report = bipartize(g)
        rec.record("engine_deletions_at_least_oracle", name,
                   report.deletions >= res.min_deletions, graph=g, seed=seed)
    best_engine = max(engine_cuts)
    rec.record("engine_cut_at_most_oracle", name, best_engine <= res.max_cut,
               detail=f"engine={best_engine} oracle={res.max_cut}", graph=g, seed=seed)


# -- suites ---------------------------------------------------------------


def _suite_lemmas(cfg: SuiteConfig, rec: _Recorder):
    for name, g in fixture_graphs():
        _check_identities(rec, name, g)
        _check_lemma_bounds(rec, name, g)
    for name, g, sub in random_pool(cfg.trials, cfg.seed, cfg.n_min, cfg.n_max):
        _check_identities(rec, name, g, seed=sub)
        _check_lemma_bounds(rec, name, g, seed=sub)
    # general graphs (possibly with K4) exercise the unconditional bounds
    master = SplitMix64(cfg.seed ^ 0xD1CE)
    for i in range(max(1, cfg.trials // 10)):
        sub = master.next_u64()
        rng = SplitMix64(sub)
        n = cfg.n_min + rng.below(cfg.n_max - cfg.n_min + 1)
        p = (100 + rng.below(900)) / 1000.0
        g = random_gnp(n, p, sub ^ 3)
        name = f"random_gnp[trial={i},n={n},p={p}]"
        _check_identities(rec, name, g, seed=sub)
        _check_lemma_bounds(rec, name, g, seed=sub)


def _suite_theorem(cfg: SuiteConfig, rec: _Recorder):
    for name, g in fixture_graphs():
        _check_theorem(rec, name, g)
    for name, g, sub in random_pool(cfg.trials, cfg.seed, cfg.n_min, cfg.n_max):
        _check_theorem(rec, name, g, seed=sub)


def _suite_oracle_equivalence(cfg: SuiteConfig, rec: _Recorder):
    for name, g in fixture_graphs():
        if g.n <= cfg.oracle_limit:
            _check_oracle(rec, name, g, cfg)
    for name, g, sub in random_pool(cfg.trials, cfg.seed, cfg.n_min, cfg.n_max):
        if g.n <= cfg.oracle_limit:
            _check_oracle(rec, name, g, cfg, seed=sub)


def _suite_exhaustive(cfg: SuiteConfig, rec: _Recorder):
    expected_max = {3: 1, 5: 2, 6: 4}
    for n in range(3, cfg.sweep_max_n + 1):
        report = exhaustive_theorem_sweep(n)
        name = f"sweep[n={n}]"
        rec.record("sweep_bound_holds", name, report.bound_holds,
                   detail=f"max_min_deletions={report.max_min_deletions}")
        if n in expected_max:
            rec.record("sweep_known_maximum", name,
                       report.max_min_deletions == expected_max[n],
                       detail=f"max={report.max_min_deletions} expected={expected_max[n]}")
        if n == 6:
            k222 = complete_multipartite([2, 2, 2])
            index = {uv: i for i, uv in enumerate(edge_order(6))}
            mask = 0
            for u, v in k222.edges():
                mask |= 1 << index[(u, v)]
            unique = (
                len(report.extremal_canonical_masks) == 1
                and report.extremal_canonical_masks[0] == canonical_edge_mask(6, mask)
            )
            rec.record("sweep_unique_extremal_is_K222", name, unique,
                       detail=f"classes={len(report.extremal_canonical_masks)}")


def _suite_technical(cfg: SuiteConfig, rec: _Recorder):
    ninth = Fraction(1, 9)
    rec.record("f_at_2", "grid", technical_f(2) == ninth)
    rec.record("g_at_3_2", "grid", technical_g(Fraction(3, 2)) == Fraction(1, 4))
    rec.record("h_at_1_4", "grid", technical_h(Fraction(1, 4)) == Fraction(3, 28))
    ok_bound = ok_eq = ok_ident = ok_incr = True
    prev_g = None
    for k in range(0, 501):
        t = Fraction(3, 2) + Fraction(k, 1000)
        f = technical_f(t)
        gval = technical_g(t)
        if f > ninth:
            ok_bound = False
        if f == ninth and t != 2:
            ok_eq = False
        if f - ninth != (t - 2) * gval / (18 * t * t):
            ok_ident = False
        if prev_g is not None and gval <= prev_g:
            ok_incr = False
        prev_g = gval
    rec.record("f_below_1_9_on_grid", "grid", ok_bound)
    rec.record("f_equality_only_at_2", "grid", ok_eq and technical_f(2) == ninth)
    rec.record("factorization_identity_on_grid", "grid", ok_ident)
    rec.record("g_strictly_increasing_on_grid", "grid", ok_incr)
    ok_h = True
    prev_h = None
    for k in range(0, 251):
        t = Fraction(k, 1000)
        h = technical_h(t)
        if prev_h is not None and h < prev_h:
            ok_h = False
        prev_h = h
    rec.record("h_nondecreasing_on_grid", "grid", ok_h)


def _regularity_fixtures():
    third = Fraction(1, 10), Fraction(1, 2)
    yield ("blowup_K3_4", blowup(complete_graph(3), 4),
           Partition.build([range(0, 4), range(4, 8), range(8, 12)], *third),
           complete_graph(3))
    yield ("blowup_C5_2", blowup(cycle_graph(5), 2),
           Partition.build([range(2 * i, 2 * i + 2) for i in range(5)], *third),
           cycle_graph(5))
    yield ("blowup_C5_3", blowup(cycle_graph(5), 3),
           Partition.build([range(3 * i, 3 * i + 3) for i in range(5)], *third),
           cycle_graph(5))
    yield ("K44_natural", complete_multipartite([4, 4]),
           Partition.build([range(0, 4), range(4, 8)], *third),
           Graph.from_edge_list(2, [(0, 1)]))


def _suite_regularity(cfg: SuiteConfig, rec: _Recorder):
    for name, g, part, expected_reduced in _regularity_fixtures():
        red = reduced_graph(g, part)
        rec.record("reduced_graph_matches_base", name, red == expected_reduced)
        cert, rep = hfree_bipartize(g, part)
        rec.record("pipeline_certificate_bipartite", name, cert.verify(g), graph=g)
        rec.record("pipeline_within_accounting", name, rep.within_accounting,
                   detail=f"deletions={rep.total_deletions} bound={rep.accounting_bound}",
                   graph=g)
    # density symmetry and epsilon monotonicity on seeded small pairs
    master = SplitMix64(cfg.seed ^ 0x5EED)
    for i in range(min(cfg.trials, 25)):
        sub = master.next_u64()
        rng = SplitMix64(sub)
        n = 6 + rng.below(5)
        g = random_gnp(n, (200 + rng.below(700)) / 1000.0, sub ^ 4)
        half = n // 2
        a = list(range(half))
        b = list(range(half, n))
        name = f"pair[trial={i},n={n}]"
        rec.record("density_symmetric", name,
                   density(g, a, b) == density(g, b, a), graph=g, seed=sub)
        eps_lo = Fraction(1 + rng.below(3), 10)
        eps_hi = eps_lo + Fraction(1 + rng.below(3), 10)
        lo = is_epsilon_regular(g, a, b, eps_lo)
        hi = is_epsilon_regular(g, a, b, eps_hi)
        monotone = (not lo.is_regular) or hi.is_regular
        rec.record("regularity_monotone_in_eps", name, monotone,
                   detail=f"eps_lo={eps_lo} eps_hi={eps_hi}", graph=g, seed=sub)


def regular_split_check(g: Graph, s) -> bool:
    """For a d-regular graph on even n and |S| = n/2: e(S) = e(S~) and
    deleting the edges inside S and inside S~ leaves a bipartite graph.

    Both follow from d n / 2 = sum_{v in S} d(v) = 2 e(S) + e(S, S~);
    the function re-verifies them from scratch.
    """
    degs = g.degrees()
    if g.n == 0 or g.n % 2 != 0:
        raise InputError("regular split needs even positive n")
    if len(set(degs)) != 1:
        raise InputError("graph is not regular")
    smask = mask_of(s) if not isinstance(s, int) else s
    if smask >> g.n:
        raise InputError("S mentions vertices >= n")
    if smask.bit_count() != g.n // 2:
        raise InputError("S must contain exactly n/2 vertices")
    d = degs[0]
    comp = g.full_mask & ~smask
    e_s = g.edges_inside(smask)
    e_c = g.edges_inside(comp)
    cross = g.edges_between(smask, comp)
    if e_s != e_c:
        return False
    if d * g.n // 2 != 2 * e_s + cross:
        return False
    internal = [
        (u, v) for u, v in g.edges()
        if ((smask >> u) & 1) == ((smask >> v) & 1)
    ]
    if len(internal) != 2 * e_s:
        return False
    return g.without_edges(internal).is_bipartite()


def _suite_regular_split(cfg: SuiteConfig, rec: _Recorder):
    c6 = cycle_graph(6)
    rec.record("C6_alternating", "C6",
               regular_split_check(c6, [0, 2, 4]) and c6.edges_inside(mask_of([0, 2, 4])) == 0)
    k222 = complete_multipartite([2, 2, 2])
    s = [0, 1, 2]  # one part plus one vertex of another
    rec.record("K222_part_plus_vertex", "K222",
               regular_split_check(k222, s) and k222.edges_inside(mask_of(s)) == 2)
    pet = petersen_graph()
    rec.record("petersen_half", "petersen", regular_split_check(pet, [0, 1, 2, 3, 4]))
    master = SplitMix64(cfg.seed ^ 0x5911)
    for i in range(cfg.trials):
        sub = master.next_u64()
        rng = SplitMix64(sub)
        n = 2 * (2 + rng.below(9))  # even n in [4, 20]
        d = 1 + rng.below(n - 1)
        g = random_regular(n, d, sub ^ 5)
        vertices = list(range(n))
        rng.shuffle(vertices)
        s_set = sorted(vertices[: n // 2])
        name = f"regular[trial={i},n={n},d={d}]"
        rec.record("half_split_identity", name, regular_split_check(g, s_set),
                   graph=g, seed=sub)


_SUITES = {
    "lemmas": _suite_lemmas,
    "theorem": _suite_theorem,
    "oracle_equivalence": _suite_oracle_equivalence,
    "exhaustive": _suite_exhaustive,
    "technical": _suite_technical,
    "regularity": _suite_regularity,
    "regular_split": _suite_regular_split,
}


def run_suite(cfg: SuiteConfig) -> dict:
    """Execute one suite and return its JSON-ready report."""
    rec = _Recorder()
    _SUITES[cfg.suite](cfg, rec)
    return {
        "suite": cfg.suite,
        "seed": cfg.seed,
        "trials": cfg.trials,
        "params": {
            "n_min": cfg.n_min,
            "n_max": cfg.n_max,
            "oracle_limit": cfg.oracle_limit,
            "sweep_max_n": cfg.sweep_max_n,
        },
        "checks_run": len(rec.checks),
        "checks": rec.checks,
        "failures": rec.failures,
        "passed": not rec.failures,
    }
