"""Verification suites shared by the command line and the test-suite."""
from __future__ import annotations

import random
from fractions import Fraction
from pathlib import Path

from . import gap, positivity
from .cg import CGParams, build_initial_seed, build_quiver_cg, initial_family, label_name, rho, stable_vertices
from .cluster import mutate_seed
from .exact import poly_det, rank_over_Z
from .poisson import (
    bracket_of,
    casimir_failures,
    cg_bracket,
    check_compatibility,
    check_log_canonical,
    exchange_weight_failures,
    jacobi_failures,
    matching_conventions,
    resolved_convention,
    toric_check,
)
from .report import RunReport

# per-suite bounds on n (beyond these the exact computations stop being desk-scale)
BOUNDS = {"logcanonical": (3, 5), "compat": (3, 4), "rank": (3, 8), "toric": (3, 5), "gap": (3, 3),
          "tp": (3, 5), "regularity": (3, 4), "rho": (3, 8)}
SUITES = ("logcanonical", "compat", "rank", "toric", "gap", "tp", "regularity", "rho")


class UsageError(ValueError):
    pass


def check_bounds(suite: str, n: int) -> None:
    lo, hi = BOUNDS[suite]
    if not lo <= n <= hi:
        raise UsageError(f"suite {suite!r} supports n in [{lo}, {hi}], got {n}")


def suite_logcanonical(rep: RunReport, n: int, *, variant: str = "mat", jobs: int = 1, out_dir: Path | None = None):
    check_bounds("logcanonical", n)
    p = CGParams.make(n, variant)
    with rep.timed(f"logcanonical[n={n}]"):
        br = cg_bracket(n)
        fam = {label_name(l): f for l, f in initial_family(p).items()}
        lc = check_log_canonical(fam, br, jobs=jobs)
    skew = lc.ok and all(lc.omega[i][j] == -lc.omega[j][i] for i in range(len(fam)) for j in range(len(fam)))
    rep.check(f"log-canonical initial family n={n}", lc.ok and skew)
    rep.findings[f"omega[n={n}]"] = lc.to_json()
    if out_dir is not None and lc.ok:
        from .plotting import plot_omega

        rep.artifacts.append(plot_omega(lc.omega, list(fam), out_dir / f"omega_n{n}.png"))
    return lc


def suite_compat(rep: RunReport, n: int, *, compat_depth: int = 1, directions: int | None = None, jobs: int = 1,
                 variant: str = "mat", **_):
    check_bounds("compat", n)
    s = build_initial_seed(CGParams.make(n, variant))
    dirs = None
    if directions is not None or n >= 4:
        k = directions or 5
        dirs = list(random.Random(n).sample(list(s.mutable), min(k, len(s.mutable))))
    with rep.timed(f"compat[n={n}]"):
        r = check_compatibility(s, cg_bracket(n), compat_depth, directions=dirs, jobs=jobs)
    rep.check(f"compatibility n={n} depth={compat_depth}", r.ok, seeds=len(r.seeds_checked),
              directions=[list(d) for d in dirs] if dirs else "all", failure=r.failure)
    return r


def suite_rank(rep: RunReport, n: int, **_):
    check_bounds("rank", n)
    with rep.timed(f"rank[n={n}]"):
        s = build_initial_seed(n, functions=False)
        r = rank_over_Z(s.btilde)
    rep.check(f"full rank of extended exchange matrix n={n}", r == s.n_mutable, rank=r, rows=s.n_mutable)
    return r


def suite_rho(rep: RunReport, n: int, **_):
    check_bounds("rho", n)
    p = CGParams.make(n)
    try:
        rho(p)
        ok = True
    except Exception:  # noqa: BLE001 - reported as a failed check
        ok = False
    sv = stable_vertices(p)
    odd = n % 2 == 1
    expected = {("theta", n): (1, 1), ("phi", p.N): (2, 1) if odd else (1, n), ("psi", p.M): (1, n) if odd else (2, 1)}
    rep.check(f"rho bijective n={n}", ok)
    rep.check(f"stable vertices n={n}", sv == expected, stable={f"{k[0]}_{k[1]}": v for k, v in sv.items()})


def suite_toric(rep: RunReport, n: int, **_):
    check_bounds("toric", n)
    p = CGParams.make(n)
    with rep.timed(f"toric[n={n}]"):
        fam = {label_name(l): f for l, f in initial_family(p).items()}
        try:
            w = toric_check(n, fam)
            ok, weights = True, w.weights
        except ValueError as e:
            ok, weights = False, str(e)
        bad = exchange_weight_failures(build_initial_seed(p), n) if ok else []
    rep.check(f"bi-homogeneous initial functions n={n}", ok, weights=weights)
    rep.check(f"exchange relations balanced n={n}", ok and not bad, failures=[list(b) for b in bad])


def suite_regularity(rep: RunReport, n: int, *, depth: int = 1, variant: str = "mat", **_):
    check_bounds("regularity", n)
    s = build_initial_seed(CGParams.make(n, variant))
    frontier, bad, count = [(s, ())], [], 0
    with rep.timed(f"regularity[n={n}]"):
        for _ in range(depth):
            nxt = []
            for seed, path in frontier:
                for v in seed.mutable:
                    if path and path[-1] == v:
                        continue
                    c = mutate_seed(seed, v)
                    count += 1
                    if not c.regular:
                        bad.append(path + (v,))
                    else:
                        nxt.append((c, path + (v,)))
            frontier = nxt
    rep.check(f"regular mutations n={n} depth={depth}", not bad, mutations=count, failures=bad)


def suite_gap(rep: RunReport, n: int = 3, *, depth: int = 6, variant: str = "mat", out_dir: Path | None = None, **_):
    check_bounds("gap", n)
    br = cg_bracket(3)
    with rep.timed("gap.table"):
        bad = gap.cross_validate_chart_brackets()
    rep.check("x12 bracket table", not bad, mismatches=[m.relation for m in bad])
    rep.check("convention unique", len(matching_conventions()) == 1, convention=str(resolved_convention()))
    with rep.timed("gap.identities"):
        try:
            gap.p_decompose()
            signed = True
        except gap.IdentityFailure:
            signed = False
        rep.check("p = -p0 + x12 p1 - x12^2 p2", signed)
        rep.findings["p = p0 + x12 p1 + x12^2 p2 (unsigned form)"] = gap.literal_p_identity()
        rep.check("{x12, p} = 2/3 x12 p", gap.p_log_canonical())
        rep.check("(3/x12) D1(p0) identity", gap.d1_p0_identity())
        monos = gap.chart_monomials(2)
        rep.check("{x12, f} = (D1+D2) f on chart monomials of degree <= 2",
                  all(gap.check_D_identity(m) for m in monos), count=len(monos))
        rng = random.Random(12)
        rep.check("{x12, f} = (D1+D2) f on 50 random chart polynomials",
                  all(gap.check_D_identity(gap.random_chart_polynomial(rng)) for _ in range(50)))
        rep.findings["literal D1 reading satisfies the D identity on x11"] = gap.check_D_identity(
            gap.X(1, 1), reading="literal")
    try:
        gap.weight_vectors()
        distinct = True
    except gap.IdentityFailure:
        distinct = False
    rep.check("weight vectors pairwise distinct", distinct)
    with rep.timed(f"gap.absence[{variant}]"):
        ev = gap.x12_absence(depth, variant)
    rep.check(f"x12 absent to depth {depth} ({variant})", not ev["x12_present"])
    rep.check("fingerprint hits confirmed symbolically", all(ev["symbolically_confirmed"].values()))
    rep.findings[f"x12_absence[{variant}]"] = ev
    if out_dir is not None:
        from .plotting import plot_counts

        rep.artifacts.append(plot_counts(ev["cluster_variable_counts"], out_dir / f"gap_counts_{variant}.png",
                                         f"cluster variables of the {variant} structure, n = 3"))
    return br


def suite_tp(rep: RunReport, n: int, *, out_dir: Path | None = None, **_):
    check_bounds("tp", n)
    x0 = positivity.build_X0(n)
    rep.check(f"psi2(X0) = -1 n={n}", positivity.psi2_value(x0) == -1)
    with rep.timed(f"tp.witness[n={n}]"):
        try:
            w = positivity.separation_witness(n)
        except positivity.NoWitness:
            w = None
    rep.check(f"separation witness n={n}", w is not None,
              t=w and w["t"], psi2=w and w["psi2"], tried=w and w["tried"])
    if w is not None:
        rep.findings[f"witness[n={n}]"] = {"t": w["t"], "X(t)": w["matrix"]}
    if out_dir is not None:
        from .plotting import plot_tp_curve

        ts = [Fraction(1, 2 ** k) for k in range(0, 11)]
        xs = [positivity.build_Xt(n, t) for t in ts]
        curve_psi = [positivity.psi2_value(x) for x in xs]
        curve_min = [min(v for _, v in positivity.all_minors(x)) for x in xs]
        rep.artifacts.append(plot_tp_curve(ts, curve_psi, curve_min, out_dir / f"tp_curve_n{n}.png", n))
    return w


def structural_checks(rep: RunReport, rng: random.Random | None = None):
    """Jacobi on n=3 generators, det Casimir for n=3,4, arrow count of Q_CG(3)."""
    br = cg_bracket(3)
    rep.check("Jacobi identity on all generator triples n=3", not jacobi_failures(br))
    for n in (3, 4):
        from .cg import generic_matrix

        rep.check(f"det X is a Casimir n={n}", not casimir_failures(poly_det(generic_matrix(n)), cg_bracket(n)))
    rep.check("Q_CG(3) has 18 arrows", build_quiver_cg(3).arrow_count() == 18)


SUITE_FUNCS = {
    "logcanonical": suite_logcanonical,
    "compat": suite_compat,
    "rank": suite_rank,
    "toric": suite_toric,
    "gap": suite_gap,
    "tp": suite_tp,
    "regularity": suite_regularity,
    "rho": suite_rho,
}


def run_suite(suite: str, ns, rep: RunReport, **opts) -> RunReport:
    if suite == "all":
        skipped = []
        for s in SUITES:
            lo, hi = BOUNDS[s]
            for n in ns:
                if lo <= n <= hi:
                    SUITE_FUNCS[s](rep, n, **_opts_for(s, opts, combined=True))
                else:
                    skipped.append(f"{s}[n={n}]")
        if skipped:
            rep.findings["skipped (outside suite bounds)"] = skipped
        structural_checks(rep)
        return rep
    if suite not in SUITE_FUNCS:
        raise UsageError(f"unknown suite {suite!r}")
    for n in ns:
        SUITE_FUNCS[suite](rep, n, **_opts_for(suite, opts))
    return rep


def _opts_for(suite: str, opts: dict, combined: bool = False) -> dict:
    """Options relevant to ``suite``; ``--depth`` means the gap depth when running all suites."""
    allowed = {
        "logcanonical": {"variant", "jobs", "out_dir"},
        "compat": {"compat_depth", "directions", "jobs", "variant"},
        "rank": set(),
        "toric": set(),
        "gap": {"depth", "variant", "out_dir"},
        "tp": {"out_dir"},
        "regularity": {"variant"} if combined else {"depth", "variant"},
        "rho": set(),
    }[suite]
    return {k: v for k, v in opts.items() if k in allowed and v is not None}
