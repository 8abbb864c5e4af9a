"""Pair densities, epsilon-regularity checking, reduced graphs, and the
partition-based bipartization pipeline.

The partition is always caller-supplied.  A pair (A, B) is epsilon-
regular when every X in A, Y in B with |X| > eps|A| and |Y| > eps|B|
(strict) has |d(X, Y) - d(A, B)| < eps (strict), where d is the exact
rational edge density.  The exact checker never enumerates Y-subsets:
for a fixed X and |Y| = s the extreme densities are reached by the s
columns with the most / fewest edges into X, so scanning subsets of one
side suffices.

hfree_bipartize lifts a reduced-graph deletion certificate back to the
host graph: delete intra-class edges, irregular pairs, sparse pairs,
and the pairs named by bipartizing the reduced graph; what remains is a
blow-up of a bipartite graph, hence bipartite.  Deletions are compared
against the accounting bound (k^2/9) ceil(n/k)^2 + eps n^2 + delta n^2.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import accumulate
from typing import Iterable

from k4cut.cuts import DeletionCertificate, bipartize, frac_json, parse_frac
from k4cut.errors import AssumptionError, CapacityError, InputError
from k4cut.generators import SplitMix64
from k4cut.graph import Graph, bits, mask_of

EXACT_SIDE_CAP = 16
DEFAULT_SAMPLES = 1000


@dataclass(frozen=True)
class Partition:
    """Disjoint vertex classes covering V, plus the (eps, delta) knobs."""

    classes: tuple[tuple[int, ...], ...]
    epsilon: Fraction
    delta: Fraction

    def __post_init__(self):
        if not (0 < self.epsilon < 1) or not (0 <= self.delta <= 1):
            raise InputError("need 0 < epsilon < 1 and 0 <= delta <= 1")
        seen = 0
        for cls in self.classes:
            if not cls:
                raise InputError("empty class in partition")
            m = mask_of(cls)
            if m & seen:
                raise InputError("partition classes overlap")
            seen |= m

    @classmethod
    def build(cls, classes: Iterable[Iterable[int]], epsilon, delta) -> "Partition":
        return cls(
            tuple(tuple(sorted(c)) for c in classes),
            Fraction(epsilon),
            Fraction(delta),
        )

    @property
    def k(self) -> int:
        return len(self.classes)

    def covers(self, g: Graph) -> bool:
        return mask_of(v for cls in self.classes for v in cls) == g.full_mask

    def is_equitable(self) -> bool:
        sizes = [len(c) for c in self.classes]
        return max(sizes) - min(sizes) <= 1

    @classmethod
    def from_json(cls, text: str) -> "Partition":
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"bad partition JSON: {exc}") from exc
        try:
            return cls.build(
                obj["classes"], parse_frac(obj["epsilon"]), parse_frac(obj["delta"])
            )
        except (KeyError, TypeError) as exc:
            raise InputError(f"partition JSON missing field: {exc}") from exc

    def to_dict(self) -> dict:
        return {
            "classes": [list(c) for c in self.classes],
            "epsilon": frac_json(self.epsilon),
            "delta": frac_json(self.delta),
        }


@dataclass(frozen=True)
class PairClassification:
    """Verdict for one pair: exact density and regularity status.

    verdict is "regular" (certified), "irregular" (with a witness), or
    "sampled-regular" (passed sampling only, not certified).
    """

    pair: tuple[int, int] | None
    density: Fraction
    verdict: str
    mode: str
    witness: tuple[tuple[int, ...], tuple[int, ...]] | None = None

    @property
    def is_regular(self) -> bool:
        return self.verdict != "irregular"

    @property
    def certified(self) -> bool:
        return self.mode == "exact"

    def to_dict(self) -> dict:
        return {
            "pair": list(self.pair) if self.pair is not None else None,
            "density": frac_json(self.density),
            "verdict": self.verdict,
            "mode": self.mode,
            "witness": [list(x) for x in self.witness] if self.witness else None,
        }


def density(g: Graph, a: Iterable[int], b: Iterable[int]) -> Fraction:
    """Exact edge density e(A, B) / (|A| |B|) for disjoint non-empty sets."""
    am, bm = mask_of(a), mask_of(b)
    if not am or not bm:
        raise InputError("density needs non-empty sets")
    if am & bm:
        raise InputError("density needs disjoint sets")
    if (am | bm) >> g.n:
        raise InputError("set mentions vertices >= n")
    return Fraction(g.edges_between(am, bm), am.bit_count() * bm.bit_count())


def _qualifying_sizes(total: int, eps: Fraction) -> list[int]:
    """Sizes s with s > eps * total, strictly."""
    return [s for s in range(1, total + 1) if s > eps * total]


def is_epsilon_regular(
    g: Graph,
    a: Iterable[int],
    b: Iterable[int],
    eps,
    mode: str = "exact",
    samples: int = DEFAULT_SAMPLES,
    seed: int = 0,
    pair: tuple[int, int] | None = None,
) -> PairClassification:
    """Decide epsilon-regularity of the pair (A, B).

    Exact mode enumerates subsets of A (capped at 16 on each side) and
    bounds over subsets of B by sorted column counts; it returns
    "regular" or "irregular" with a witness.  Sampled mode draws
    ``samples`` uniform subset pairs from SplitMix64(seed) and can only
    answer "sampled-regular" or "irregular".
    """
    A = sorted(set(a))
    B = sorted(set(b))
    eps = Fraction(eps)
    if not A or not B:
        raise InputError("regularity needs non-empty sets")
    if set(A) & set(B):
        raise InputError("regularity needs disjoint sets")
    d = density(g, A, B)
    if mode == "exact":
        if len(A) > EXACT_SIDE_CAP or len(B) > EXACT_SIDE_CAP:
            raise CapacityError(
                f"exact regularity capped at side size {EXACT_SIDE_CAP}"
            )
        witness = _exact_irregularity_witness(g, A, B, eps, d)
        if witness is None:
            return PairClassification(pair, d, "regular", "exact")
        return PairClassification(pair, d, "irregular", "exact", witness)
    if mode == "sampled":
        witness = _sampled_irregularity_witness(g, A, B, eps, d, samples, seed)
        if witness is None:
            return PairClassification(pair, d, "sampled-regular", "sampled")
        return PairClassification(pair, d, "irregular", "sampled", witness)
    raise InputError(f"unknown mode {mode!r}")


def _exact_irregularity_witness(g, A, B, eps, d):
    """Lowest-X-mask witness (X, Y) with |d(X,Y) - d| >= eps, or None.

    For fixed X, over all Y of size s the density extremes come from
    the s columns with the largest / smallest edge counts into X, so
    the check |d(X,Y) - d| < eps for every qualifying pair reduces to
    one sorted scan per X.  All comparisons are cross-multiplied
    integers.
    """
    la, lb = len(A), len(B)
    colmasks = []
    for bv in B:
        m = 0
        for i, av in enumerate(A):
            if (g.adj[bv] >> av) & 1:
                m |= 1 << i
        colmasks.append(m)
    s_ok = _qualifying_sizes(lb, eps)
    x_ok = set(_qualifying_sizes(la, eps))
    dn, dd = d.numerator, d.denominator
    en, ed = eps.numerator, eps.denominator
    for xmask in range(1, 1 << la):
        sx = xmask.bit_count()
        if sx not in x_ok:
            continue
        counts = sorted(
            ((colmasks[j] & xmask).bit_count(), j) for j in range(lb)
        )
        asc = list(accumulate(c for c, _ in counts))
        desc = list(accumulate(c for c, _ in reversed(counts)))
        for s in s_ok:
            area = sx * s
            # top-s columns: d(X,Y) - d >= eps ?
            if (desc[s - 1] * dd - dn * area) * ed >= en * area * dd:
                xs = tuple(A[i] for i in bits(xmask))
                ys = tuple(sorted(B[counts[lb - 1 - i][1]] for i in range(s)))
                return xs, ys
            # bottom-s columns: d - d(X,Y) >= eps ?
            if (dn * area - asc[s - 1] * dd) * ed >= en * area * dd:
                xs = tuple(A[i] for i in bits(xmask))
                ys = tuple(sorted(B[counts[i][1]] for i in range(s)))
                return xs, ys
    return None


def _sampled_irregularity_witness(g, A, B, eps, d, samples, seed):
    rng = SplitMix64(seed)
    la, lb = len(A), len(B)
    for _ in range(samples):
        xm = rng.sample_mask(la)
        ym = rng.sample_mask(lb)
        sx, sy = xm.bit_count(), ym.bit_count()
        if not (sx > eps * la and sy > eps * lb):
            continue
        xs = [A[i] for i in bits(xm)]
        ys = [B[i] for i in bits(ym)]
        dxy = density(g, xs, ys)
        if abs(dxy - d) >= eps:
            return tuple(xs), tuple(ys)
    return None


def classify_pairs(
    g: Graph,
    p: Partition,
    mode: str = "exact",
    samples: int = DEFAULT_SAMPLES,
    seed: int = 0,
) -> list[PairClassification]:
    """Classification of every class pair (i < j), in pair order."""
    out = []
    for i in range(p.k):
        for j in range(i + 1, p.k):
            out.append(
                is_epsilon_regular(
                    g, p.classes[i], p.classes[j], p.epsilon,
                    mode=mode, samples=samples,
                    seed=SplitMix64(seed + i * p.k + j).next_u64(),
                    pair=(i, j),
                )
            )
    return out


def reduced_graph(
    g: Graph,
    p: Partition,
    mode: str = "exact",
    samples: int = DEFAULT_SAMPLES,
    seed: int = 0,
) -> Graph:
    """Graph on the k classes: (i, j) is an edge iff the pair is
    (epsilon-)regular with density at least delta."""
    if not p.covers(g):
        raise InputError("partition does not cover the vertex set")
    cls = classify_pairs(g, p, mode=mode, samples=samples, seed=seed)
    edges = [
        c.pair for c in cls if c.is_regular and c.density >= p.delta
    ]
    return Graph.from_edge_list(p.k, edges)


@dataclass(frozen=True)
class RegularityReport:
    """Deletion accounting for the partition pipeline."""

    n: int
    k: int
    epsilon: Fraction
    delta: Fraction
    equitable: bool
    certified: bool
    intra_class_deletions: int
    irregular_pair_deletions: int
    low_density_deletions: int
    lifted_deletions: int
    reduced_edge_count: int
    reduced_deletions: int
    total_deletions: int
    accounting_bound: Fraction
    within_accounting: bool
    pair_verdicts: tuple

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "epsilon": frac_json(self.epsilon),
            "delta": frac_json(self.delta),
            "equitable": self.equitable,
            "certified": self.certified,
            "deletions": {
                "intra_class": self.intra_class_deletions,
                "irregular_pairs": self.irregular_pair_deletions,
                "low_density_pairs": self.low_density_deletions,
                "lifted": self.lifted_deletions,
                "total": self.total_deletions,
            },
            "reduced_edge_count": self.reduced_edge_count,
            "reduced_deletions": self.reduced_deletions,
            "accounting_bound": frac_json(self.accounting_bound),
            "within_accounting": self.within_accounting,
            "pair_verdicts": [c.to_dict() for c in self.pair_verdicts],
        }


def hfree_bipartize(
    g: Graph,
    p: Partition,
    mode: str = "exact",
    samples: int = DEFAULT_SAMPLES,
    seed: int = 0,
) -> tuple[DeletionCertificate, RegularityReport]:
    """Bipartize via the reduced graph of a caller-supplied partition.

    Deletes (1) intra-class edges, (2) edges of irregular pairs,
    (3) edges of pairs with density < delta, (4) edges of the pairs a
    reduced-graph bipartization marks for deletion.  The reduced graph
    must be K4-free; if not, the caller's hypothesis failed and an
    AssumptionError is raised.
    """
    if not p.covers(g):
        raise InputError("partition does not cover the vertex set")
    cls = classify_pairs(g, p, mode=mode, samples=samples, seed=seed)
    masks = [mask_of(c) for c in p.classes]

    reduced_edges = [
        c.pair for c in cls if c.is_regular and c.density >= p.delta
    ]
    reduced = Graph.from_edge_list(p.k, reduced_edges)
    k4 = reduced.find_k4()
    if k4 is not None:
        raise AssumptionError(
            f"reduced graph contains K4 on classes {k4}; "
            "the pipeline requires a K4-free reduced graph"
        )
    red_cert, _ = bipartize(reduced)
    deleted_pairs = set(red_cert.edges)

    deletions: set[tuple[int, int]] = set()
    intra = 0
    for cm in masks:
        for v in bits(cm):
            for u in bits(g.adj[v] & cm):
                if u > v:
                    deletions.add((v, u))
                    intra += 1
    irregular = 0
    low_density = 0
    lifted = 0
    for c in cls:
        i, j = c.pair
        pair_edges = _edges_between(g, masks[i], masks[j])
        if not c.is_regular:
            irregular += len(pair_edges)
            deletions.update(pair_edges)
        elif c.density < p.delta:
            low_density += len(pair_edges)
            deletions.update(pair_edges)
        elif (i, j) in deleted_pairs:
            lifted += len(pair_edges)
            deletions.update(pair_edges)

    edges = tuple(sorted(deletions))
    n, k = g.n, p.k
    ceil_nk = -(-n // k)
    bound = (
        Fraction(k * k, 9) * ceil_nk * ceil_nk
        + p.epsilon * n * n
        + p.delta * n * n
    )
    cert = DeletionCertificate(n, edges, "regularity", bound)
    assert cert.verify(g), "regularity remainder must be bipartite"
    report = RegularityReport(
        n=n,
        k=k,
        epsilon=p.epsilon,
        delta=p.delta,
        equitable=p.is_equitable(),
        certified=(mode == "exact"),
        intra_class_deletions=intra,
        irregular_pair_deletions=irregular,
        low_density_deletions=low_density,
        lifted_deletions=lifted,
        reduced_edge_count=reduced.e,
        reduced_deletions=len(red_cert.edges),
        total_deletions=len(edges),
        accounting_bound=bound,
        within_accounting=(len(edges) <= bound),
        pair_verdicts=tuple(cls),
    )
    return cert, report


def _edges_between(g: Graph, am: int, bm: int) -> list[tuple[int, int]]:
    out = []
    for v in bits(am):
        for u in bits(g.adj[v] & bm):
            out.append((v, u) if v < u else (u, v))
    return out
