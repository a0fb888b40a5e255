"""Acceptance criteria: seeded, deterministic end-to-end checks.

Each criterion function returns (ok, detail).  The pytest acceptance
module asserts them one by one; the command line `acceptance` subcommand
prints one line per criterion.  All comparisons are exact.
"""

from __future__ import annotations

import itertools
import random
import time

from . import (
    Graph,
    StaircaseSpec,
    add_simplicial,
    brute_chi,
    brute_max_hyperhole,
    brute_omega,
    chi_bound_gt,
    chi_bound_hyperantihole,
    chi_bound_hyperhole,
    chi_gt,
    chi_ring_class,
    color_alpha_le2,
    color_gt,
    color_ring_or_simplicial,
    compose_clique_cutset,
    consecutive_parts,
    enumerate_holes,
    gen_extremal_hyperantihole,
    gen_extremal_hyperhole,
    gen_hyperantihole,
    gen_hyperhole,
    gen_random_ring,
    hadwiger_minor_hyperantihole,
    hadwiger_minor_hyperhole,
    hadwiger_minor_ring,
    induced_subgraph,
    is_chordal,
    is_proper,
    max_hyperhole,
    omega_ring,
    recognize_ring,
    two_color_components,
    verify_minor,
)
from .generators import (
    extremal_hyperantihole_sizes,
    random_clique,
    random_staircase,
    ring_from_staircase,
)


def _bounded_sizes(rng: random.Random, k: int, n_max: int) -> list[int]:
    """k part sizes, each >= 1, summing to at most n_max."""
    sizes = [1] * k
    budget = n_max - k
    for i in range(k):
        if budget <= 0:
            break
        extra = rng.randint(0, budget)
        sizes[i] += extra
        budget -= extra
    rng.shuffle(sizes)
    return sizes


def _seeded_rings(count, seed, k_choices, n_max, parity=None):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        k = rng.choice(k_choices)
        if parity == "even" and k % 2:
            continue
        if parity == "odd" and k % 2 == 0:
            continue
        sizes = _bounded_sizes(rng, k, n_max)
        out.append(ring_from_staircase(random_staircase(sizes, rng)))
    return out


def criterion_01_oracle_coloring(quick=False):
    """Coloring equals brute-force chromatic number on small rings."""
    count = 60 if quick else 500
    bad = []
    for G, P in _seeded_rings(count, seed=101, k_choices=[4, 5, 6, 7, 8], n_max=16):
        col = color_ring_or_simplicial(G)
        if col is None or not is_proper(G, col):
            bad.append(G)
            continue
        if len(set(col.values())) != brute_chi(G):
            bad.append(G)
    return not bad, f"{count - len(bad)}/{count} rings match brute-force chi"


def criterion_02_chi_consistency(quick=False):
    """Fast chi, coloring size, and the hyperhole formula agree."""
    count = 60 if quick else 500
    bad = 0
    for G, P in _seeded_rings(count, seed=202, k_choices=[4, 5, 6, 7, 8, 9], n_max=60):
        fast = chi_ring_class(G)
        col = color_ring_or_simplicial(G)
        sel = max_hyperhole(G, P)
        formula = max(omega_ring(G, P), -(-sel.size // (P.k // 2)))
        if col is None or fast != len(set(col.values())) or fast != formula:
            bad += 1
    return bad == 0, f"{count - bad}/{count} rings consistent across all three routes"


def criterion_03_even_ring_perfection(quick=False):
    """Even rings use exactly omega colors."""
    count = 40 if quick else 200
    bad = 0
    for G, P in _seeded_rings(
        count, seed=303, k_choices=[4, 6, 8], n_max=40, parity="even"
    ):
        col = color_ring_or_simplicial(G)
        if col is None or len(set(col.values())) != omega_ring(G, P):
            bad += 1
    return bad == 0, f"{count - bad}/{count} even rings colored with omega colors"


def criterion_04_extremal_hyperholes(quick=False):
    """Extremal hyperholes attain (omega, chi) = (n, bound)."""
    bad = []
    ns = range(2, 25)
    for k in (5, 7, 9):
        for n in ns:
            G, P = gen_extremal_hyperhole(k, n)
            if omega_ring(G, P) != n or chi_ring_class(G) != chi_bound_hyperhole(k, n):
                bad.append((k, n))
    return not bad, f"checked k in (5,7,9), n in 2..24; failures: {bad}"


def criterion_05_extremal_hyperantiholes(quick=False):
    """Extremal hyperantiholes attain (omega, chi) = (n, bound)."""
    bad = []
    for k in (5, 7, 9):
        for n in range((k - 1) // 2, 21):
            A = gen_extremal_hyperantihole(k, n)
            col = color_alpha_le2(A)
            if len(set(col.values())) != chi_bound_hyperantihole(k, n):
                bad.append((k, n, "chi"))
            if n <= 14 and brute_omega(A) != n:
                bad.append((k, n, "omega"))
    return not bad, f"checked k in (5,7,9); failures: {bad}"


def criterion_06_bound_functions(quick=False):
    """Closed forms agree with the residue forms; monotonicity holds."""
    ks = (5, 7, 9, 11)
    for k in ks:
        prev_f = prev_g = 0
        for n in range(1, 41):
            f = chi_bound_hyperhole(k, n)  # asserts both forms agree
            g = chi_bound_hyperantihole(k, n)
            if not (chi_bound_gt(n) >= f >= g):
                return False, f"ordering fails at k={k}, n={n}"
            if f < prev_f or g < prev_g:
                return False, f"monotonicity fails at k={k}, n={n}"
            prev_f, prev_g = f, g
    for k in (5, 7, 9):
        for n in range(1, 41):
            if chi_bound_hyperhole(k, n) < chi_bound_hyperhole(k + 2, n):
                return False, f"length monotonicity fails (hyperhole) k={k}, n={n}"
            if chi_bound_hyperantihole(k, n) < chi_bound_hyperantihole(k + 2, n):
                return False, f"length monotonicity fails (hyperantihole) k={k}, n={n}"
    if any(chi_bound_gt(n) != chi_bound_hyperhole(5, n) for n in range(1, 41)):
        return False, "overall bound differs from the length-5 bound"
    return True, "both forms, ordering, and monotonicity hold for k in (5,7,9,11), n in 1..40"


def _random_gt_instance(rng: random.Random, small: bool):
    def piece():
        kind = rng.choice(["ring", "complete", "anti7", "ring_aug"])
        if kind == "ring":
            sizes = _bounded_sizes(rng, rng.choice([4, 5, 6, 7]), 10 if small else 22)
            return ring_from_staircase(random_staircase(sizes, rng))[0]
        if kind == "complete":
            m = rng.randint(2, 5 if small else 9)
            return Graph(m, [(a, b) for a in range(m) for b in range(a + 1, m)])
        if kind == "anti7":
            sizes = [1] * 7 if small else [rng.randint(1, 2) for _ in range(7)]
            return gen_hyperantihole(7, sizes)
        sizes = _bounded_sizes(rng, rng.choice([4, 5]), 8)
        G = ring_from_staircase(random_staircase(sizes, rng))[0]
        for _ in range(rng.randint(1, 3)):
            G = add_simplicial(G, rng)
        return G

    G = piece()
    for _ in range(rng.randint(0, 2)):
        H = piece()
        k1 = random_clique(G, rng)
        k2 = random_clique(H, rng)
        size = min(len(k1), len(k2), rng.randint(1, 3))
        G = compose_clique_cutset(G, H, k1[:size], k2[:size])
    return G


def criterion_07_gt_composites(quick=False):
    """Composite instances: coloring proper, counts agree, brute checks."""
    count = 40 if quick else 200
    rng = random.Random(707)
    bad = 0
    checked_small = 0
    for i in range(count):
        G = _random_gt_instance(rng, small=(i % 2 == 0))
        if G.n > 120:
            bad += 1
            continue
        col = color_gt(G)
        chiv = chi_gt(G)
        if col is None or chiv is None or not is_proper(G, col):
            bad += 1
            continue
        if len(set(col.values())) != chiv:
            bad += 1
            continue
        if G.n <= 16:
            checked_small += 1
            if chiv != brute_chi(G):
                bad += 1
                continue
        if G.n <= 30 and chiv > chi_bound_gt(brute_omega(G)):
            bad += 1
    return (
        bad == 0,
        f"{count - bad}/{count} composites pass ({checked_small} brute-checked)",
    )


def criterion_08_structure_replay(quick=False):
    """Holes have length k and meet each part once; deleting a part leaves
    a chordal graph; two-color components of solver colorings have the
    path-plus-pendants shape (odd rings)."""
    count = 20 if quick else 80
    for G, P in _seeded_rings(count, seed=808, k_choices=[4, 5, 6, 7], n_max=20):
        part_of = P.part_of()
        for hole in enumerate_holes(G):
            if len(hole) != P.k:
                return False, f"hole of length {len(hole)} in a {P.k}-ring"
            if sorted(part_of[v] for v in hole) != list(range(P.k)):
                return False, "hole misses or repeats a part"
        for i in range(P.k):
            keep = [v for v in G.vertices if part_of[v] != i]
            sub, _ = induced_subgraph(G, keep)
            if not is_chordal(sub):
                return False, f"residual after deleting part {i} is not chordal"
        if P.k % 2 == 1:
            col = color_ring_or_simplicial(G)
            palette = sorted(set(col.values()))
            for a, b in itertools.combinations(palette, 2):
                two_color_components(G, P, col, a, b)  # raises on shape failure
    return True, f"{count} rings replayed (holes, chordality, two-color shape)"


def criterion_09_hadwiger(quick=False):
    """Every emitted branch-set family witnesses a chi-sized complete minor."""
    rng = random.Random(909)
    checked = 0
    for _ in range(10 if quick else 60):
        k = rng.randint(4, 9)
        sizes = [rng.randint(1, 4) for _ in range(k)]
        G, P = gen_hyperhole(k, sizes)
        if not verify_minor(G, hadwiger_minor_hyperhole(G, P), chi_ring_class(G)):
            return False, f"hyperhole failure k={k} sizes={sizes}"
        checked += 1
    rings = _seeded_rings(10 if quick else 60, seed=910, k_choices=[4, 5, 6, 7], n_max=30)
    for G, P in rings:
        if not verify_minor(G, hadwiger_minor_ring(G, P), chi_ring_class(G)):
            return False, f"ring failure n={G.n} k={P.k}"
        checked += 1
    for k in (5, 7):
        for n in range((k - 1) // 2, 13):
            sizes = extremal_hyperantihole_sizes(k, n)
            A = gen_hyperantihole(k, sizes)
            parts = consecutive_parts(sizes)
            chi = len(set(color_alpha_le2(A).values()))
            if not verify_minor(A, hadwiger_minor_hyperantihole(A, parts), chi):
                return False, f"hyperantihole failure k={k} n={n}"
            checked += 1
    return True, f"{checked} minor witnesses verified at target chi"


def criterion_10_max_hyperhole(quick=False):
    """Shortest-path hyperhole maximization equals exhaustive search."""
    count = 30 if quick else 150
    rng = random.Random(1010)
    for _ in range(count):
        k = rng.randint(4, 7)
        sizes = [rng.randint(1, 3) for _ in range(k)]
        G, P = ring_from_staircase(random_staircase(sizes, rng))
        sel = max_hyperhole(G, P)  # asserts the size identity per start
        if sel.size != brute_max_hyperhole(G, P):
            return False, f"mismatch at k={k} sizes={sizes}"
    return True, f"{count} rings match the exhaustive optimum"


def criterion_11_performance(quick=False):
    """Smoke check: chi at n=2000 within 10 s, coloring at n=300 within 60 s."""
    rng = random.Random(1111)
    target = 800 if quick else 2000
    sizes = []
    remaining = target
    while remaining:
        s = min(rng.randint(1, 8), remaining)
        sizes.append(s)
        remaining -= s
    G, _ = ring_from_staircase(random_staircase(sizes, rng))
    t0 = time.monotonic()
    chi = chi_ring_class(G)
    chi_elapsed = time.monotonic() - t0
    target2 = 150 if quick else 300
    k = 9
    base, extra = divmod(target2, k)
    sizes2 = [base + (1 if i < extra else 0) for i in range(k)]
    G2, _ = ring_from_staircase(random_staircase(sizes2, rng))
    t0 = time.monotonic()
    col = color_ring_or_simplicial(G2)
    color_elapsed = time.monotonic() - t0
    ok = (
        chi is not None
        and chi_elapsed <= 10.0
        and col is not None
        and is_proper(G2, col)
        and color_elapsed <= 60.0
    )
    return ok, (
        f"chi(n={G.n}) = {chi} in {chi_elapsed:.2f}s; "
        f"coloring(n={G2.n}) in {color_elapsed:.2f}s"
    )


CRITERIA = [
    ("01 oracle equivalence (coloring)", criterion_01_oracle_coloring),
    ("02 chi consistency", criterion_02_chi_consistency),
    ("03 even-ring perfection", criterion_03_even_ring_perfection),
    ("04 extremal hyperholes", criterion_04_extremal_hyperholes),
    ("05 extremal hyperantiholes", criterion_05_extremal_hyperantiholes),
    ("06 bound functions", criterion_06_bound_functions),
    ("07 composite instances", criterion_07_gt_composites),
    ("08 structure replay", criterion_08_structure_replay),
    ("09 complete-minor witnesses", criterion_09_hadwiger),
    ("10 maximum hyperhole exactness", criterion_10_max_hyperhole),
    ("11 performance sanity", criterion_11_performance),
]


def run_all(quick=False, report=print):
    """Run every criterion, reporting one pass/fail line each."""
    results = []
    for name, func in CRITERIA:
        ok, detail = func(quick=quick)
        report(f"{'PASS' if ok else 'FAIL'}  criterion {name}: {detail}")
        results.append((name, ok, detail))
    return results
