"""Verification suites: inequality batteries over seeded random corpora."""

import math
from concurrent.futures import ThreadPoolExecutor
from typing import Any, Callable, Iterable, TypeVar

import numpy as np

from src.core.funcore import t_zero, tau_pair
from src.core.interp import lower_theta_p_norm, theta_p_bracket, theta_p_norm, thm1_identity_norm
from src.core.kfun import (
    build_kcurve,
    ces_lower_bounds,
    k_variational,
    k_variational_converged,
    k_weighted_l1,
    restricted_g,
    theorem3_bounds,
    theorem4_upper_lower,
)
from src.core.norms import (
    ap_constant,
    ap_log_bound,
    ces_log_norm,
    ces_norm,
    cop_norm,
    l1_norm,
    lp_weighted,
    maximal_norm,
    seq_norm,
)
from src.core.operators import cesaro, cesaro_of, copson, copson_of, discrete_cesaro, discrete_copson
from src.settings import custom_logger
from src.structs import (
    CorpusSpec,
    CoupleSpec,
    Decomposition,
    Domain,
    FhFamily,
    FsFamily,
    KCurve,
    KMethod,
    QuadConfig,
    Report,
    Seq,
    SeqSpace,
    SeqSpaceKind,
    StepFunction,
    SuiteConfig,
    SuiteName,
    TGridSpec,
    Weight,
    WeightKind,
)
from src.workflows.corpus import random_sequences, random_step_functions
from src.workflows.families import (
    fh_ces_upper,
    fh_cesaro,
    fh_cesaro_by_quadrature,
    fh_cop_lower,
    fh_lower_bound,
    fh_norms,
    fs_ces_norm,
    fs_sweep,
)
from src.workflows.state import SuiteState

# Create logger
logger = custom_logger("Verification Suites")

T = TypeVar("T")

ONE = Weight()
INV_T = Weight.named(WeightKind.INV_T)
LOG_E = Weight.named(WeightKind.LOG_E)
ONE_MINUS_T = Weight.named(WeightKind.ONE_MINUS_T)

# Half-line corpora live in [0, 4] inside HalfLine(16)
HALFLINE_T = 16.0
HALFLINE_SUPPORT = (0.0, 4.0)
LP_CURVE_GRID = TGridSpec(t_min=1e-4, t_max=1.0, points_per_decade=8)

SuiteRunner = Callable[[SuiteState, SuiteConfig, QuadConfig], None]


def _map(fn: Callable[[Any], T], items: Iterable[Any], workers: int) -> list[T]:
    """Ordered parallel map; results come back in input order."""
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def _variant(spec: CorpusSpec, **update: Any) -> CorpusSpec:
    return CorpusSpec.model_validate({**spec.model_dump(), **update})


def _halfline(spec: CorpusSpec) -> CorpusSpec:
    return _variant(spec, domain=Domain.halfline(HALFLINE_T), support=HALFLINE_SUPPORT)


def _lp(t: float, f: StepFunction, couple: CoupleSpec, config: SuiteConfig) -> Decomposition:
    if config.converge:
        return k_variational_converged(t, f, couple, mesh_start=config.mesh_n, tol=config.tol)
    return k_variational(t, f, couple, config.mesh_n, config.tol)


def _t_grid(config: SuiteConfig) -> list[float]:
    """config.t_count log-spaced t values in [1e-3, 1)."""
    return [float(t) for t in np.geomspace(1e-3, 1.0, config.t_count + 1)[:-1]]


def _dual(p: float) -> float:
    return p / (p - 1.0)


def max_relative_residual(lhs: np.ndarray, rhs: np.ndarray) -> float:
    """Largest pointwise |lhs - rhs| / |rhs|; absolute error where rhs vanishes."""
    lhs, rhs = np.asarray(lhs, dtype=float), np.asarray(rhs, dtype=float)
    scale = np.where(rhs == 0.0, 1.0, np.abs(rhs))
    return float(np.max(np.abs(lhs - rhs) / scale))


def _lp_curves(f: StepFunction, couple: CoupleSpec, grid: TGridSpec, config: SuiteConfig) -> tuple[KCurve, KCurve]:
    """LP K-curves of f at mesh_n and at 2 mesh_n, to expose drift under refinement."""
    coarse, fine = (
        build_kcurve(f, couple, grid, KMethod.LP, mesh_n=mesh, tol=config.tol, workers=config.workers)
        for mesh in (config.mesh_n, 2 * config.mesh_n)
    )
    return coarse, fine


def run_identities(state: SuiteState, config: SuiteConfig, q: QuadConfig) -> None:
    """Composition identities of the Cesaro and Copson operators."""
    # Relative error per point; Cf + C*f > 0 wherever f is not null
    xs = np.geomspace(1e-6, 1.0, 64)
    for i, f in enumerate(random_step_functions(config.corpus)):
        rhs = (cesaro(f) + copson(f))(xs)
        res = max_relative_residual(cesaro_of(copson(f), xs), rhs)
        state.check_le(
            "cesaro_of_copson", "C(C*f) = Cf + C*f on [0, 1]", res, 1e-9,
            ref="composition identity on [0, 1]", f=i,
        )
        res = max_relative_residual(copson_of(cesaro(f), xs) + l1_norm(f), rhs)
        state.check_le(
            "copson_of_cesaro", "C*(Cf) + ||f||_1 = Cf + C*f on [0, 1]", res, 1e-9,
            ref="composition identity with the L1 correction on [0, 1]", f=i,
        )

    xs = np.geomspace(1e-6, 2.0 * HALFLINE_T, 64)
    for i, f in enumerate(random_step_functions(_halfline(config.corpus))):
        rhs = (cesaro(f) + copson(f))(xs)
        res = max_relative_residual(cesaro_of(copson(f), xs), rhs)
        state.check_le(
            "cesaro_of_copson_halfline", "C(C*f) = Cf + C*f on the half-line", res, 1e-9,
            ref="composition identity on the half-line", f=i,
        )
        res = max_relative_residual(copson_of(cesaro(f), xs), rhs)
        state.check_le(
            "copson_of_cesaro_halfline", "C*(Cf) = Cf + C*f on the half-line", res, 1e-9,
            ref="composition identity on the half-line", f=i,
        )

    for i, x in enumerate(random_sequences(config.corpus)):
        M = x.N + 3
        lhs = discrete_cesaro(discrete_copson(x, M), M).a
        rhs = discrete_cesaro(x, M).a + discrete_copson(x, M + 1).a[1:]
        res = float(np.max(np.abs(lhs - rhs)))
        state.check_le(
            "discrete_identity", "C(C*x)(n) = Cx(n) + C*x(n+1)", res, 1e-14 * x.total(),
            ref="discrete composition identity", x=i,
        )


def run_embeddings(state: SuiteState, config: SuiteConfig, q: QuadConfig) -> None:
    """Hardy and Copson inequalities, Cesaro/Copson comparisons and band estimates."""
    t0 = t_zero()
    for i, f in enumerate(random_step_functions(config.corpus)):
        for p in config.p_values:
            fp = lp_weighted(f, p, ONE, q)
            ces, cop, l1 = ces_norm(f, p, q), cop_norm(f, p, q), l1_norm(f)
            slack = 1e-10 * max(fp, ces, cop)
            state.check_le("hardy", "||Cf||_p <= p' ||f||_p", ces, _dual(p) * fp, slack, ref="Hardy inequality", f=i, p=p)
            state.check_le("copson", "||C*f||_p <= p ||f||_p", cop, p * fp, slack, ref="Copson inequality", f=i, p=p)
            state.check_le("ces_by_cop", "||f||_Ces(p) <= p' ||f||_Cop(p)", ces, _dual(p) * cop, slack, ref="Copson embeds into Cesaro on [0, 1]", f=i, p=p)
            state.check_le(
                "cop_by_ces", "||f||_Cop(p) <= (p + 1) max(||f||_Ces(p), ||f||_1)",
                cop, (p + 1.0) * max(ces, l1), slack, ref="Cesaro and L1 embed into Copson on [0, 1]", f=i, p=p,
            )
            g = f.mask([(0.0, 0.5)])
            state.check_le(
                "l1_by_ces_near_zero", "||g||_1 <= 2^(1/p) ||g||_Ces(p) for supp g in [0, 1/2]",
                l1_norm(g), 2.0 ** (1.0 / p) * ces_norm(g, p, q), 1e-10 * l1, ref="L1 control by Ces(p) near zero", f=i, p=p,
            )

        h = f.mask([(0.5, 1.0)])
        weighted = lp_weighted(h, 1.0, ONE_MINUS_T, q)
        ces1, cesinf, h1 = ces_norm(h, 1.0, q), ces_norm(h, math.inf, q), l1_norm(h)
        slack = 1e-12 * max(ces1, cesinf, 1.0)
        state.check_le("ces1_above_weighted", "||h||_L1(1-t) <= ||h||_Ces1 on [1/2, 1]", weighted, ces1, slack, ref="Ces_1 equals L1(1-t) on [1/2, 1]", f=i)
        state.check_le("ces1_below_weighted", "||h||_Ces1 <= 2 ||h||_L1(1-t) on [1/2, 1]", ces1, 2 * weighted, slack, ref="Ces_1 equals L1(1-t) on [1/2, 1]", f=i)
        state.check_le("cesinf_above_l1", "||h||_1 <= ||h||_Ces_inf on [1/2, 1]", h1, cesinf, slack, ref="Ces_inf equals L1 on [1/2, 1]", f=i)
        state.check_le("cesinf_below_l1", "||h||_Ces_inf <= 2 ||h||_1 on [1/2, 1]", cesinf, 2 * h1, slack, ref="Ces_inf equals L1 on [1/2, 1]", f=i)

        for t in _t_grid(config):
            tp = tau_pair(t)
            v = f.mask([(0.0, tp.tau1)])
            lhs, rhs = ces_norm(v, 1.0, q), 3.0 * t * ces_norm(v, math.inf, q)
            state.check_le("head_band", "||v||_Ces1 <= 3t ||v||_Ces_inf on [0, tau1]", lhs, rhs, 1e-12 * rhs, ref="head band estimate for (Ces_1, Ces_inf)", f=i, t=t)
            if t < t0:
                w = f.mask([(tp.tau1, tp.tau2)])
                lhs, rhs = t * ces_norm(w, math.inf, q) / math.e**2, ces_norm(w, 1.0, q)
                state.check_le(
                    "middle_band", "t ||w||_Ces_inf / e^2 <= ||w||_Ces1 on [tau1, tau2]",
                    lhs, rhs, 1e-12 * max(rhs, 1.0), ref="middle band estimate for (Ces_1, Ces_inf)", f=i, t=t,
                )


def run_weighted_l1(state: SuiteState, config: SuiteConfig, q: QuadConfig) -> None:
    """(theta, p)-norms over (L1, L1(1/t)) and (l1, l1(1/k)) against Copson norms and identities."""
    discrete = CoupleSpec.discrete()
    couple = CoupleSpec.weighted_l1(ONE, INV_T)
    for p in config.p_values:
        theta = 1.0 - 1.0 / p
        e1 = theta_p_norm(build_kcurve(Seq.unit_vector(1), discrete), theta, p, q)
        state.check_le("unit_vector", "||e_1||_(1-1/p, p) = (p')^(1/p)", abs(e1 - _dual(p) ** (1.0 / p)), 1e-10, ref="K-method norm of a unit vector", p=p)
        for i, x in enumerate(random_sequences(config.corpus)):
            val = theta_p_norm(build_kcurve(x, discrete), theta, p, q)
            cop = seq_norm(x, SeqSpace(kind=SeqSpaceKind.COP, p=p), x.N, q)
            state.check_ge("discrete_lower", "||x||_cop(p) <= ||x||_(1-1/p, p)", val, cop, 1e-9 * cop, ref="(l1, l1(1/k)) interpolates cop(p)", x=i, p=p)
            state.check_le(
                "discrete_upper", "||x||_(1-1/p, p) <= (p' + 1) ||x||_cop(p)",
                val, (_dual(p) + 1.0) * cop, 1e-9 * cop, ref="(l1, l1(1/k)) interpolates cop(p)", x=i, p=p,
            )

    for i, f in enumerate(random_step_functions(config.corpus)):
        kc = build_kcurve(f, couple)
        for p in config.p_values:
            theta = 1.0 - 1.0 / p
            val = theta_p_norm(kc, theta, p, q)
            ident = thm1_identity_norm(f, p, q)
            state.check_le("identity_unit", "K-method norm equals the identity value on [0, 1]", abs(val - ident), 1e-6 * ident, ref="K-method identity for (L1, L1(1/t)) on [0, 1]", f=i, p=p)
            cop = cop_norm(f, p, q)
            state.check_ge("copson_lower_unit", "||f||_Cop(p) <= ||f||_(1-1/p, p)", val, cop, 1e-9 * cop, ref="(L1, L1(1/t)) interpolates Cop(p) on [0, 1]", f=i, p=p)
            factor = _dual(p) + (p - 1.0) ** (-1.0 / p)
            state.check_le("copson_upper_unit", "||f||_(1-1/p, p) <= (p' + (p-1)^(-1/p)) ||f||_Cop(p)", val, factor * cop, 1e-9 * cop, ref="(L1, L1(1/t)) interpolates Cop(p) on [0, 1]", f=i, p=p)

    for i, f in enumerate(random_step_functions(_halfline(config.corpus))):
        kc = build_kcurve(f, couple)
        for p in config.p_values:
            val = theta_p_norm(kc, 1.0 - 1.0 / p, p, q)
            ident = thm1_identity_norm(f, p, q)
            state.check_le("identity_halfline", "K-method norm equals ||Cf + C*f||_p on the half-line", abs(val - ident), 1e-6 * ident, ref="K-method identity for (L1, L1(1/t)) on the half-line", f=i, p=p)
            ces, cop = ces_norm(f, p, q), cop_norm(f, p, q)
            slack = 1e-9 * ident
            state.check_ge("sum_above_ces", "||f||_Ces(p) <= ||Cf + C*f||_p", ident, ces, slack, ref="Cf + C*f is equivalent to Ces(p) on the half-line", f=i, p=p)
            state.check_le("sum_below_ces", "||Cf + C*f||_p <= p ||f||_Ces(p)", ident, p * ces, slack, ref="Cf + C*f is equivalent to Ces(p) on the half-line", f=i, p=p)
            state.check_ge("sum_above_cop", "||f||_Cop(p) <= ||Cf + C*f||_p", ident, cop, slack, ref="Cf + C*f is equivalent to Cop(p) on the half-line", f=i, p=p)
            state.check_le("sum_below_cop", "||Cf + C*f||_p <= p' ||f||_Cop(p)", ident, _dual(p) * cop, slack, ref="Cf + C*f is equivalent to Cop(p) on the half-line", f=i, p=p)

    for i, f in enumerate(random_step_functions(config.corpus)[: config.lp_functions]):
        for t in (0.01, 0.1, 0.5, 2.0):
            exact = k_weighted_l1(t, f, ONE, INV_T)
            value = k_variational(t, f, couple, config.mesh_n, config.tol).value
            state.check_le("lp_matches_closed_form", "LP optimum equals the weighted-L1 closed form", abs(value - exact), 1e-7 * exact, ref="weighted L1 K-functional", f=i, t=t)


def run_restricted_couple(state: SuiteState, config: SuiteConfig, q: QuadConfig) -> None:
    """K over (L1(1-t), Ces_inf) restricted to [1/2, 1] against G(t, h) = int min(1-s, t) h."""
    couple = CoupleSpec.restricted(CoupleSpec.l1w_cesinf(ONE_MINUS_T), 0.5, 1.0)
    corpus = random_step_functions(_variant(config.corpus, support=(0.5, 1.0)))
    ts = [float(t) for t in np.geomspace(1e-3, 1.0, 10)]

    def solve(item: tuple[int, float]) -> tuple[int, float, float, float]:
        i, t = item
        return i, t, restricted_g(t, corpus[i]), _lp(t, corpus[i], couple, config).value

    for i, t, G, K in _map(solve, [(i, t) for i in range(len(corpus)) for t in ts], config.workers):
        state.check_ge("restricted_lower", "G(t, h) <= K(t, h)", K, G, 1e-7 * G, ref="restricted couple sandwich by G(t, h)", h=i, t=t)
        state.check_le("restricted_upper", "K(t, h) <= 2 G(t, h)", K, 2.0 * G, 1e-6 * G, ref="restricted couple sandwich by G(t, h)", h=i, t=t)

    for i, h in enumerate(corpus[: config.lp_functions]):
        kc = build_kcurve(h, couple, LP_CURVE_GRID, KMethod.LP, mesh_n=config.mesh_n, tol=config.tol, workers=config.workers)
        for p in config.p_values:
            val = theta_p_norm(kc, 1.0 - 1.0 / p, p, q)
            bound = 4.0 * _dual(p) * ces_norm(h, p, q)
            state.check_le("restricted_theta_upper", "||h||_(1-1/p, p) <= 4p' ||h||_Ces(p)", val, bound, ref="restricted couple embeds into Ces(p)", h=i, p=p)

    full = CoupleSpec.l1w_cesinf(ONE_MINUS_T)
    for f in random_step_functions(config.corpus)[: config.lp_functions]:
        coarse, fine = _lp_curves(f, full, LP_CURVE_GRID, config)
        for p in config.p_values:
            ces = ces_norm(f, p, q)
            state.observe(
                f"weighted_cesinf_over_ces_p{p:g}", "(L1(1-t), Ces_inf)_(1-1/p, p) norm over ||f||_Ces(p)",
                theta_p_norm(coarse, 1.0 - 1.0 / p, p, q) / ces, theta_p_norm(fine, 1.0 - 1.0 / p, p, q) / ces,
            )


def _sandwich(
    state: SuiteState,
    config: SuiteConfig,
    corpus: list[StepFunction],
    bounds: Callable[[float, StepFunction], tuple[float, float]],
    prefix: str,
    ref: str,
    q: QuadConfig,
) -> None:
    couple = CoupleSpec.ces_unit()

    def solve(item: tuple[int, float]) -> tuple[int, float, float, float, float, float]:
        i, t = item
        f = corpus[i]
        lower, upper = bounds(t, f)
        certified = ces_lower_bounds(t, f).combined
        return i, t, lower, upper, certified, _lp(t, f, couple, config).value

    items = [(i, t) for i in range(len(corpus)) for t in _t_grid(config)]
    for i, t, lower, upper, certified, K in _map(solve, items, config.workers):
        eps = 1e-6 * upper
        state.check_ge(f"{prefix}_lower", "band lower estimate <= K(t, f; Ces_1, Ces_inf)", K, lower, eps, ref=ref, f=i, t=t)
        state.check_le(f"{prefix}_upper", "K(t, f; Ces_1, Ces_inf) <= band upper estimate", K, upper, eps, ref=ref, f=i, t=t)
        state.check_ge(f"{prefix}_certified", "certified lower bounds <= K(t, f; Ces_1, Ces_inf)", K, certified, eps, ref=ref, f=i, t=t)

    for i, f in enumerate(corpus):
        ces1 = ces_norm(f, 1.0, q)
        K = _lp(1.5, f, couple, config).value
        state.check_le(f"{prefix}_beyond_one", "K(t, f) = ||f||_Ces1 for t >= 1", abs(K - ces1), 1e-6 * ces1, ref=ref, f=i, t=1.5)


def run_ces_sandwich(state: SuiteState, config: SuiteConfig, q: QuadConfig) -> None:
    """Two-band sandwich for K(t, f; Ces_1, Ces_inf)."""
    corpus = random_step_functions(config.corpus) + [StepFunction.constant()]
    _sandwich(state, config, corpus, lambda t, f: theorem3_bounds(t, f, q), "two_band", "two-band estimate for (Ces_1, Ces_inf)", q)
    lower, upper = theorem3_bounds(0.5, StepFunction.constant(), q)
    state.check_le("two_band_constant", "upper estimate for f = 1, t = 1/2", abs(upper - 1.00226), 1e-4, ref="two-band estimate at f = 1, t = 1/2", t=0.5)
    state.check_le("two_band_constant", "lower estimate for f = 1, t = 1/2", abs(lower - 0.06782), 1e-4, ref="two-band estimate at f = 1, t = 1/2", t=0.5)
    K = _lp(0.5, StepFunction.constant(), CoupleSpec.ces_unit(), config).value
    state.check_ge("two_band_constant_lp", "K_LP(1/2, 1) >= lower estimate", K, lower, ref="two-band estimate at f = 1, t = 1/2", t=0.5)
    state.check_le("two_band_constant_lp", "K_LP(1/2, 1) <= upper estimate", K, upper, 1e-6 * upper, ref="two-band estimate at f = 1, t = 1/2", t=0.5)


def run_decreasing_sandwich(state: SuiteState, config: SuiteConfig, q: QuadConfig) -> None:
    """One-band sandwich for non-increasing f."""
    corpus = random_step_functions(_variant(config.corpus, nonincreasing=True))
    _sandwich(state, config, corpus, lambda t, f: theorem4_upper_lower(t, f, q), "one_band", "one-band estimate for non-increasing f", q)


def run_log_weighted(state: SuiteState, config: SuiteConfig, q: QuadConfig) -> None:
    """(1-1/p, p)-norms over (Ces_1, Ces_inf) against the ln(e/t)-weighted Cesaro norm."""
    couple = CoupleSpec.ces_unit()
    corpus = random_step_functions(config.corpus)
    items = [(i, p) for i in range(len(corpus)) for p in config.p_values]
    lowers = dict(zip(items, _map(lambda item: lower_theta_p_norm(corpus[item[0]], item[1], q), items, config.workers)))
    for (i, p), low in lowers.items():
        log_norm = ces_log_norm(corpus[i], p, q)
        state.check_ge("log_lower_constant", "||f||_(1-1/p, p) >= ||f||_Ces(p, ln) / 72", low, log_norm / 72.0, ref="lower constant 1/72 against Ces(p, ln)", f=i, p=p)
    for i, f in enumerate(corpus[: config.lp_functions]):
        coarse, fine = _lp_curves(f, couple, LP_CURVE_GRID, config)
        for p in config.p_values:
            theta = 1.0 - 1.0 / p
            _, upper = theta_p_bracket(coarse, theta, p, q)
            _, refined = theta_p_bracket(fine, theta, p, q)
            ces = ces_norm(f, p, q)
            state.check_ge("cesaro_embedding", "||f||_Ces(p) <= ||f||_(1-1/p, p)", upper, ces, 1e-9 * ces, ref="(Ces_1, Ces_inf) embeds into Ces(p)", f=i, p=p)
            state.check_ge("lower_below_lp", "certified lower norm <= LP norm", upper, lowers[(i, p)], ref="certified lower curve below the LP curve", f=i, p=p)
            log_norm = ces_log_norm(f, p, q)
            state.observe(
                f"interp_over_log_p{p:g}", "(Ces_1, Ces_inf)_(1-1/p, p) norm over ||f||_Ces(p, ln)",
                upper / log_norm, refined / log_norm,
            )


def run_ap(state: SuiteState, config: SuiteConfig, q: QuadConfig) -> None:
    """A_p constants of ln(e/t) and the maximal operator on L_p(ln(e/t))."""
    for p in config.p_values:
        value = ap_constant(LOG_E, p, config.grid_n, q)
        state.check_le("ap_log_weight", "A_p grid maximum for ln(e/t) <= 2", value, 2.0, ref="A_p condition for ln(e/t)", p=p, grid_n=config.grid_n)
        flat = ap_constant(ONE, p, config.grid_n, q)
        state.check_le("ap_constant_weight", "A_p of the constant weight is 1", abs(flat - 1.0), 1e-12, ref="A_p condition for the constant weight", p=p)
    for b in np.geomspace(1e-6, 1.0, 13):
        state.check_le("ap_log_closed_form", "ln(e^2/b) / ln(e/b) <= 2", ap_log_bound(float(b)), 2.0, 1e-12, ref="A_p condition for ln(e/t)", b=float(b))
    for i, f in enumerate(random_step_functions(config.corpus)[: config.lp_functions]):
        for p in config.p_values:
            fp = lp_weighted(f, p, LOG_E, q)
            mp = maximal_norm(f, p, LOG_E, q)
            state.check_ge("maximal_dominates", "||Mf|| >= ||f|| in L_p(ln(e/t))", mp, fp, 1e-8 * fp, ref="maximal operator on L_p(ln(e/t))", f=i, p=p)
            state.observe(f"maximal_ratio_p{p:g}", "||Mf|| / ||f|| in L_p(ln(e/t))", mp / fp)


def run_indicator_divergence(state: SuiteState, config: SuiteConfig, q: QuadConfig) -> None:
    """Interpolation-to-Cesaro ratios of chi_[0, e^-k] grow without bound."""
    s_grid = [math.exp(-k) for k in range(1, 9)]
    for p in config.p_values:
        state.check_le("indicator_closed_form", "||chi_[0,1]||_Ces(p) = 1", abs(fs_ces_norm(FsFamily(s=1.0), p) - 1.0), 1e-14, ref="Cesaro norm of an indicator", p=p)
        rows = fs_sweep(p, s_grid, config.mesh_n, config.tol, workers=config.workers)
        for row in rows:
            state.check_ge("indicator_ratio", "LP ratio >= (1/(6p')) ln(e/s)^(1/p)", row.ratio, row.bound, ref="indicators of [0, s] leave Ces(p)", s=row.s, p=p)
            state.check_ge("indicator_certified", "certified ratio >= (1/(6p')) ln(e/s)^(1/p)", row.certified_ratio, row.bound, ref="indicators of [0, s] leave Ces(p)", s=row.s, p=p)
        for prev, cur in zip(rows[:-1], rows[1:]):
            state.check_ge("indicator_monotone", "the ratio increases as s decreases", cur.ratio, prev.ratio, ref="indicators of [0, s] leave Ces(p)", s=cur.s, p=p)


def run_halfline_l1_cesinf(state: SuiteState, config: SuiteConfig, q: QuadConfig) -> None:
    """(L1, Ces_inf) on HalfLine(16) against Ces(p), observed as a ratio range."""
    couple = CoupleSpec.l1_cesinf_halfline()
    corpus = random_step_functions(_halfline(config.corpus))[: config.lp_functions]
    grid = TGridSpec(t_min=1e-4, t_max=HALFLINE_SUPPORT[1], points_per_decade=8)
    for i, f in enumerate(corpus):
        l1 = l1_norm(f)
        K = k_variational(2.0 * f.support_end(), f, couple, config.mesh_n, config.tol).value
        state.check_le("halfline_constant_tail", "K(t, f) = ||f||_1 beyond the support", abs(K - l1), 1e-7 * l1, ref="K(t, f) = ||f||_1 beyond the support", f=i)
        coarse, fine = _lp_curves(f, couple, grid, config)
        for p in config.p_values:
            ces = ces_norm(f, p, q)
            state.observe(
                f"l1_cesinf_over_ces_p{p:g}", "(L1, Ces_inf)_(1-1/p, p) norm over ||f||_Ces(p) on HalfLine(16)",
                theta_p_norm(coarse, 1.0 - 1.0 / p, p, q) / ces, theta_p_norm(fine, 1.0 - 1.0 / p, p, q) / ces,
            )


def run_copson_counterexample(state: SuiteState, config: SuiteConfig, q: QuadConfig) -> None:
    """f_h = (1 - t)^(-1/2) on [h, 1): Copson norms outgrow Cesaro norms as h -> 1."""
    hs = [1.0 - 2.0**-k for k in range(1, 11)]
    for p in config.p_values:
        bounds = []
        for h in hs:
            family = FhFamily(h=h)
            cop, ces = fh_norms(family, p, q)
            bound = fh_lower_bound(h, p)
            bounds.append(bound)
            state.check_ge("fh_ratio", "(cop/ces)^p >= (p-1) h^p / (1 - h^(p-1))", (cop / ces) ** p, bound, 1e-9 * bound, ref="Copson norms of f_h outgrow Cesaro norms", h=h, p=p)
            state.check_ge("fh_cop_lower", "||f_h||_Cop^p >= 2^p h (1-h)^(p/2)", cop**p, fh_cop_lower(h, p), 1e-9 * cop**p, ref="Copson norm of f_h", h=h, p=p)
            upper = fh_ces_upper(h, p)
            state.check_le("fh_ces_upper", "||f_h||_Ces^p <= 2^p (1-h)^(p/2) (1-h^(p-1)) / ((p-1) h^(p-1))", ces**p, upper, 1e-9 * upper, ref="Cesaro norm of f_h", h=h, p=p)
        for prev, cur, h in zip(bounds[:-1], bounds[1:], hs[1:]):
            state.check_ge("fh_bound_monotone", "the ratio bound grows as h -> 1", cur, prev, ref="Copson norms of f_h outgrow Cesaro norms", h=h, p=p)
        if p == 2.0:
            state.check_ge("fh_bound_large", "the ratio bound exceeds 10^3 at h = 1 - 2^-10", bounds[-1], 1e3, ref="Copson norms of f_h outgrow Cesaro norms", p=p)

    for h in hs:
        family = FhFamily(h=h)
        ts = np.linspace(h, 1.0, 100)
        formula = fh_cesaro(family, ts)
        quad = np.array([fh_cesaro_by_quadrature(family, float(t), q) for t in ts])
        res = float(np.max(np.abs(quad - formula) / np.maximum(1.0, formula)))
        state.check_le("fh_cesaro_formula", "quadrature of C(f_h) matches the closed form", res, 1e-10, ref="Cesaro transform of f_h", h=h)


SUITES: dict[SuiteName, SuiteRunner] = {
    SuiteName.IDENTITIES: run_identities,
    SuiteName.EMBEDDINGS: run_embeddings,
    SuiteName.WEIGHTED_L1: run_weighted_l1,
    SuiteName.RESTRICTED_COUPLE: run_restricted_couple,
    SuiteName.CES_SANDWICH: run_ces_sandwich,
    SuiteName.DECREASING_SANDWICH: run_decreasing_sandwich,
    SuiteName.LOG_WEIGHTED: run_log_weighted,
    SuiteName.AP: run_ap,
    SuiteName.INDICATOR_DIVERGENCE: run_indicator_divergence,
    SuiteName.HALFLINE_L1_CESINF: run_halfline_l1_cesinf,
    SuiteName.COPSON_COUNTEREXAMPLE: run_copson_counterexample,
}


def run_suite(config: SuiteConfig, q: QuadConfig | None = None, state: SuiteState | None = None) -> Report:
    """Run one named suite; deterministic given the corpus seed and config.

    Pass a fresh state to keep the per-check rows for a sweep table.
    """
    q = q or QuadConfig.from_settings()
    logger.info(f"running suite {config.suite.value} (seed {config.corpus.seed})")
    if state is None:
        state = SuiteState(suite=config.suite.value, seed=config.corpus.seed)
    SUITES[config.suite](state, config, q)
    return state.to_report(config)
