#include "xic/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace xic {

namespace {

// 15-point Gauss-Legendre nodes and weights on [-1,1].
constexpr int kGlN = 15;
constexpr double kGlNode[kGlN] = {
    -0.98799251802048538, -0.93727339240070595, -0.84820658341042721,
    -0.72441773136017007, -0.57097217260853883, -0.39415134707756339,
    -0.20119409399743451,  0.0,
     0.20119409399743451,  0.39415134707756339,  0.57097217260853883,
     0.72441773136017007,  0.84820658341042721,  0.93727339240070595,
     0.98799251802048538};
constexpr double kGlWeight[kGlN] = {
    0.030753241996118647, 0.070366047488108069, 0.10715922046717177,
    0.13957067792615391,  0.16626920581699378,  0.18616100001556188,
    0.19843148532711125,  0.20257824192556090,
    0.19843148532711125,  0.18616100001556188,  0.16626920581699378,
    0.13957067792615391,  0.10715922046717177,  0.070366047488108069,
    0.030753241996118647};

struct Engine {
    const Integrand& f;
    long evals = 0;
    long budget;

    Complex gl15(double a, double b) {
        const double h = 0.5 * (b - a);
        const double c = 0.5 * (a + b);
        Complex acc{0.0, 0.0};
        for (int i = 0; i < kGlN; ++i) {
            Complex v = f(c + h * kGlNode[i]);
            if (!is_finite(v)) throw DomainError("integrate: non-finite integrand sample");
            acc += kGlWeight[i] * v;
        }
        evals += kGlN;
        return h * acc;
    }
};

struct Panel {
    double a, b;
    Complex value;    // refined estimate (two half-panels)
    double err;       // |coarse - refined|
    Complex left, right;
};

} // namespace

QuadratureResult integrate_finite(const Integrand& f, double a, double b,
                                  const PrecisionContext& ctx, const QuadOptions& opts) {
    ctx.validate();
    if (!(a < b)) throw ContractError("integrate_finite: need a < b");
    const double rel = opts.rel_tol > 0.0 ? opts.rel_tol : ctx.target_rel_tol;
    const double abs_floor = std::max(opts.abs_tol, 1e-305);
    const double total_len = b - a;

    Engine eng{f, 0, ctx.max_quad_evals};

    auto make_panel = [&](double pa, double pb, Complex coarse) {
        const double m = 0.5 * (pa + pb);
        Panel p;
        p.a = pa;
        p.b = pb;
        p.left = eng.gl15(pa, m);
        p.right = eng.gl15(m, pb);
        p.value = p.left + p.right;
        p.err = std::abs(coarse - p.value);
        return p;
    };

    auto cmp = [](const Panel& x, const Panel& y) { return x.err < y.err; };
    std::priority_queue<Panel, std::vector<Panel>, decltype(cmp)> queue(cmp);

    std::vector<double> edges{a};
    for (double p : opts.breakpoints)
        if (p > a && p < b) edges.push_back(p);
    edges.push_back(b);
    std::sort(edges.begin(), edges.end());

    Complex total{0.0, 0.0};
    double total_err = 0.0;
    for (size_t i = 0; i + 1 < edges.size(); ++i) {
        Panel p = make_panel(edges[i], edges[i + 1], eng.gl15(edges[i], edges[i + 1]));
        total += p.value;
        total_err += p.err;
        queue.push(p);
    }

    auto converged = [&] {
        return total_err <= std::max(abs_floor, rel * std::abs(total));
    };

    while (!converged() && !queue.empty()) {
        if (eng.evals + 4 * kGlN > eng.budget) {
            throw BudgetError("integrate_finite: evaluation budget exceeded", total, total_err);
        }
        Panel p = queue.top();
        queue.pop();
        if (p.err <= 0.0 || (p.b - p.a) < 1e-13 * total_len) {
            // cannot usefully refine further; keep its error contribution
            continue;
        }
        total -= p.value;
        total_err -= p.err;
        const double m = 0.5 * (p.a + p.b);
        Panel l = make_panel(p.a, m, p.left);
        Panel r = make_panel(m, p.b, p.right);
        total += l.value + r.value;
        total_err += l.err + r.err;
        queue.push(l);
        queue.push(r);
    }

    QuadratureResult res;
    res.value = ensure_finite(total, "integrate_finite");
    res.err_estimate = total_err;
    res.evals = eng.evals;
    res.truncation_point = 0.0;
    return res;
}

QuadratureResult integrate_semi_infinite_from(const Integrand& f, double t0, double decay_rate,
                                              const PrecisionContext& ctx,
                                              const SemiInfOptions& opts) {
    ctx.validate();
    if (!(decay_rate > 0.0)) throw ContractError("integrate_semi_infinite: decay_rate must be > 0");

    long sample_evals = 0;
    double T = opts.t_max_override;
    double tail_bound = 0.0;
    double c_est = 0.0;
    {
        // estimate the envelope constant C with |f(t)| <= C e^{-decay t}
        for (double ts : {0.5, 1.0, 2.0, 4.0, 8.0, 12.0, 16.0, 20.0, 24.0}) {
            const double t = t0 + ts;
            Complex v = f(t);
            ++sample_evals;
            if (!is_finite(v)) throw DomainError("integrate_semi_infinite: non-finite integrand sample");
            c_est = std::max(c_est, std::abs(v) * std::exp(decay_rate * t));
        }
        c_est = std::max(c_est, 1e-300);
    }
    if (T <= 0.0) {
        // e^{-decay T} C < identity_tol/10, then a 25% margin for slowly
        // varying prefactors the sampling may have missed
        T = std::log(10.0 * c_est / ctx.identity_tol) / decay_rate;
        T = 1.25 * std::max(T, 1.0) + 5.0;
    }
    T = std::max(T, t0 + 1.0);
    tail_bound = c_est * std::exp(-decay_rate * T) / decay_rate;

    QuadOptions qo;
    qo.rel_tol = opts.rel_tol > 0.0 ? opts.rel_tol : ctx.target_rel_tol;
    qo.abs_tol = std::max(opts.abs_tol, tail_bound);
    const double len = T - t0;
    qo.breakpoints = {t0 + 0.05 * len, t0 + 0.15 * len, t0 + 0.4 * len, t0 + 0.7 * len};

    QuadratureResult res = integrate_finite(f, t0, T, ctx, qo);
    res.evals += sample_evals;
    res.err_estimate += tail_bound;
    res.truncation_point = T;
    return res;
}

QuadratureResult integrate_semi_infinite(const Integrand& f, double decay_rate,
                                         const PrecisionContext& ctx,
                                         const SemiInfOptions& opts) {
    return integrate_semi_infinite_from(f, 0.0, decay_rate, ctx, opts);
}

} // namespace xic
