#include "xic/checks.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <thread>

#include "xic/constants.hpp"
#include "xic/gamma.hpp"
#include "xic/series.hpp"
#include "xic/transforms.hpp"
#include "xic/zeta.hpp"

namespace xic::harness {

namespace {

using series::ModularPair;
using series::Side;
namespace tf = xic::transforms;

struct Sides {
    std::vector<std::pair<std::string, Complex>> values;
    std::vector<std::pair<int, int>> group_bounds; // [first, last) ranges of equal sides
    std::vector<double> truncations;

    void add(const std::string& label, const Complex& v) { values.emplace_back(label, v); }
    void close_group() {
        const int hi = static_cast<int>(values.size());
        const int lo = group_bounds.empty() ? 0 : group_bounds.back().second;
        group_bounds.emplace_back(lo, hi);
    }
    void note_truncation(const QuadratureResult& r) {
        if (r.truncation_point > 0.0) truncations.push_back(r.truncation_point);
    }
};

Complex get_z(const Params& p, const char* re_key, const char* im_key) {
    return Complex{p.at(re_key), p.count(im_key) ? p.at(im_key) : 0.0};
}

tf::KernelOptions kernel_opts(const Params& p) {
    tf::KernelOptions o;
    if (p.count("tmax")) o.t_max = p.at("tmax");
    return o;
}

Sides evaluate_sides(IdentityId id, const Params& p, const PrecisionContext& ctx) {
    Sides out;
    switch (id) {
    case IdentityId::thm31: {
        const Complex z = get_z(p, "z_re", "z_im");
        const double alpha = p.at("alpha");
        const ModularPair pair(alpha);
        out.add("series", series::lhs_theorem31(z, pair, Side::alpha, ctx));
        out.add("mellin", tf::mellin_line_integral(z, alpha, {}, ctx));
        QuadratureResult q = tf::xi_kernel_integral(z, alpha, ctx, kernel_opts(p));
        out.note_truncation(q);
        out.add("integral", q.value);
        out.close_group();
        break;
    }
    case IdentityId::thm41: {
        const Complex z = get_z(p, "z_re", "z_im");
        const double alpha = p.at("alpha");
        const ModularPair pair(alpha);
        out.add("series_alpha", series::lhs_theorem41(z, pair, Side::alpha, ctx));
        out.add("series_beta", series::lhs_theorem41(z, pair, Side::beta, ctx));
        QuadratureResult q = tf::xi_kernel_integral(z, alpha, ctx, kernel_opts(p));
        out.note_truncation(q);
        out.add("integral", q.value);
        out.close_group();
        break;
    }
    case IdentityId::cor32: {
        const Complex z = get_z(p, "z_re", "z_im");
        const ModularPair pair(1.0);
        out.add("series", series::lhs_theorem31(z, pair, Side::alpha, ctx));
        out.add("closed", riemann_zeta(z - 1.0) - riemann_zeta(z));
        QuadratureResult q = tf::xi_kernel_integral(z, 1.0, ctx, kernel_opts(p));
        out.note_truncation(q);
        out.add("integral", q.value);
        out.close_group();
        break;
    }
    case IdentityId::guinand: {
        const int k = static_cast<int>(std::lround(p.at("k")));
        const double x = p.at("x");
        out.add("x_side", series::sum_polygamma(k, x, ctx).value);
        const Complex other = series::sum_polygamma(k, 1.0 / x, ctx).value;
        out.add("recip_side", std::pow(x, -k - 1) * other);
        out.close_group();
        break;
    }
    case IdentityId::ramanujan: {
        const double alpha = p.at("alpha");
        const ModularPair pair(alpha);
        out.add("series_alpha", Complex{series::lhs_ramanujan(pair, Side::alpha, ctx), 0.0});
        out.add("series_beta", Complex{series::lhs_ramanujan(pair, Side::beta, ctx), 0.0});
        out.add("integral", Complex{tf::ramanujan_integral(alpha, ctx, kernel_opts(p)), 0.0});
        out.close_group();
        break;
    }
    case IdentityId::eq19: {
        const Complex s = get_z(p, "s_re", "s_im");
        const double n = p.at("n");
        QuadratureResult l = tf::lhs_eq19(s, n, ctx, kernel_opts(p));
        QuadratureResult r = tf::rhs_eq19(s, n, ctx);
        out.note_truncation(l);
        out.note_truncation(r);
        out.add("lhs", l.value);
        out.add("rhs", r.value);
        out.close_group();
        break;
    }
    case IdentityId::eq20: {
        const Complex s = get_z(p, "s_re", "s_im");
        const double n = p.at("n");
        QuadratureResult l = tf::lhs_eq20(s, n, ctx, kernel_opts(p));
        QuadratureResult r = tf::rhs_eq20(s, n, ctx);
        out.note_truncation(l);
        out.note_truncation(r);
        out.add("lhs", l.value);
        out.add("rhs", r.value);
        out.close_group();
        break;
    }
    case IdentityId::eq15mod: {
        const Complex s = get_z(p, "s_re", "s_im");
        const double alpha = p.at("alpha");
        const double beta = 4.0 * kPi * kPi / alpha;
        QuadratureResult ga = tf::modular_g_reduced(s, alpha, ctx);
        QuadratureResult gb = tf::modular_g_reduced(s, beta, ctx);
        out.note_truncation(ga);
        out.note_truncation(gb);
        out.add("alpha_side", ga.value);
        out.add("beta_side", gb.value);
        out.close_group();
        break;
    }
    case IdentityId::sine: {
        auto [quad, closed] = tf::sine_kernel_check(p.at("alpha"), p.at("x"), ctx);
        out.add("quadrature", Complex{quad, 0.0});
        out.add("closed", Complex{closed, 0.0});
        out.close_group();
        break;
    }
    case IdentityId::int12: {
        tf::Int12Result r = tf::int1_int2_check(p.at("s_re"), ctx);
        out.add("int1_closed", Complex{r.int1.closed, 0.0});
        out.add("int1_quadrature", Complex{r.int1.quadrature, 0.0});
        out.close_group();
        out.add("int2_closed", Complex{r.int2.closed, 0.0});
        out.add("int2_quadrature", Complex{r.int2.quadrature, 0.0});
        out.close_group();
        break;
    }
    case IdentityId::mellin_titchmarsh: {
        const Complex z = get_z(p, "z_re", "z_im");
        out.add("mellin", tf::mellin_line_integral(z, 1.0, {}, ctx));
        out.add("closed", riemann_zeta(z - 1.0) - riemann_zeta(z));
        out.close_group();
        break;
    }
    case IdentityId::beta_series: {
        const Complex z = get_z(p, "z_re", "z_im");
        const double x = p.at("x");
        out.add("mellin", tf::mellin_beta_series(x, z, {}, ctx));
        // sum_{m>=1} (1+xm)^{-z} = x^{-z} zeta(z, 1 + 1/x)
        out.add("series", pow_rc(x, -z) * hurwitz_zeta(z, 1.0 + 1.0 / x));
        out.close_group();
        break;
    }
    case IdentityId::spurious: {
        const double s = p.at("s_re");
        const double n = p.at("n");
        const Complex sc{s, 0.0};
        QuadratureResult l = tf::lhs_eq19(sc, n, ctx, kernel_opts(p));
        QuadratureResult r = tf::rhs_eq19(sc, n, ctx);
        out.note_truncation(l);
        out.note_truncation(r);
        const Complex spur = -0.25 * pow_rc(4.0 * kPi, (s - 3.0) / 2.0) *
                             std::exp(log_gamma(sc)) * riemann_zeta(sc) *
                             std::cosh(n * (1.0 - s));
        out.add("lhs", l.value);
        out.add("rhs_corrected", r.value);
        out.close_group();
        out.add("rhs_with_spurious", r.value + spur);
        out.close_group();
        break;
    }
    }
    return out;
}

const std::map<IdentityId, std::vector<std::string>>& allowed_keys() {
    static const std::map<IdentityId, std::vector<std::string>> keys = {
        {IdentityId::thm31, {"z_re", "z_im", "alpha", "tmax"}},
        {IdentityId::thm41, {"z_re", "z_im", "alpha", "tmax"}},
        {IdentityId::cor32, {"z_re", "z_im", "tmax"}},
        {IdentityId::guinand, {"k", "x"}},
        {IdentityId::ramanujan, {"alpha", "tmax"}},
        {IdentityId::eq19, {"s_re", "s_im", "n", "tmax"}},
        {IdentityId::eq20, {"s_re", "s_im", "n", "tmax"}},
        {IdentityId::eq15mod, {"s_re", "alpha"}},
        {IdentityId::sine, {"alpha", "x"}},
        {IdentityId::int12, {"s_re"}},
        {IdentityId::mellin_titchmarsh, {"z_re", "z_im"}},
        {IdentityId::beta_series, {"x", "z_re", "z_im"}},
        {IdentityId::spurious, {"s_re", "n", "tmax"}},
    };
    return keys;
}

} // namespace

const std::vector<IdentityInfo>& identity_registry() {
    static const std::vector<IdentityInfo> reg = {
        {IdentityId::thm31, "thm31",
         "shifted Hurwitz zeta sums: series = Mellin line integral = Xi-kernel integral (Re z > 2)",
         {{"z_re", 4.0}, {"alpha", 2.0}}},
        {IdentityId::thm41, "thm41",
         "regularized Hurwitz zeta sums: alpha side = beta side = Xi-kernel integral (0 < Re z < 2)",
         {{"z_re", 1.5}, {"alpha", 2.0}}},
        {IdentityId::cor32, "cor32",
         "alpha = 1 closed form: series = zeta(z-1) - zeta(z) = Xi-kernel integral",
         {{"z_re", 4.0}}},
        {IdentityId::guinand, "guinand",
         "polygamma modular relation: sum psi^(k)(1+nx) = x^{-k-1} sum psi^(k)(1+n/x), k >= 2",
         {{"k", 2.0}, {"x", 2.0}}},
        {IdentityId::ramanujan, "ramanujan",
         "transformation formula for sum phi(n alpha): both series sides and the |Xi Gamma|^2 integral",
         {{"alpha", 2.0}}},
        {IdentityId::eq19, "eq19",
         "Gamma-Xi cosine kernel vs Bose-Einstein product moment (corrected; Re s > 1)",
         {{"s_re", 3.0}, {"n", 0.5}}},
        {IdentityId::eq20, "eq20",
         "Gamma-Xi cosine kernel vs regularized Bose-Einstein product moment (-1 < Re s < 1)",
         {{"s_re", 0.5}, {"n", 0.3}}},
        {IdentityId::eq15mod, "eq15mod",
         "reduced modular integral: alpha <-> beta symmetry under alpha beta = 4 pi^2 (Re s > 1)",
         {{"s_re", 2.5}, {"alpha", kPi}}},
        {IdentityId::sine, "sine",
         "sine transform of the Bose-Einstein kernel vs its closed form",
         {{"alpha", 2.0 * kPi}, {"x", 1.0}}},
        {IdentityId::int12, "int12",
         "zeta(1-s)/(4 cos(pi s/2)) and zeta(-s)/(8 sin(pi s/2)) vs their Bose-Einstein moments",
         {{"s_re", 2.5}}},
        {IdentityId::mellin_titchmarsh, "mellin_titchmarsh",
         "Gamma-zeta line integral at alpha = 1 equals zeta(z-1) - zeta(z)",
         {{"z_re", 4.0}}},
        {IdentityId::beta_series, "beta_series",
         "beta-kernel line integral equals sum (1+xm)^{-z}",
         {{"x", 1.0}, {"z_re", 4.0}}},
        {IdentityId::spurious, "spurious",
         "the deleted cosh term breaks eq19 by a wide margin while the corrected form passes",
         {{"s_re", 3.0}, {"n", 0.5}}},
    };
    return reg;
}

const IdentityInfo& identity_info(IdentityId id) {
    for (const auto& info : identity_registry())
        if (info.id == id) return info;
    throw DomainError("identity_info: unregistered id");
}

IdentityId identity_from_name(const std::string& name) {
    for (const auto& info : identity_registry())
        if (info.name == name) return info.id;
    throw DomainError("unknown identity: " + name);
}

CheckReport run_check(IdentityId id, const Params& params, const PrecisionContext& ctx) {
    const auto t0 = std::chrono::steady_clock::now();
    CheckReport rep;
    const IdentityInfo& info = identity_info(id);
    rep.identity = info.name;
    rep.params = info.defaults;
    for (const auto& [k, v] : params) rep.params[k] = v;

    try {
        ctx.validate();
        const auto& allowed = allowed_keys().at(id);
        for (const auto& [k, v] : params) {
            if (std::find(allowed.begin(), allowed.end(), k) == allowed.end())
                throw DomainError("unknown parameter '" + k + "' for identity " + info.name);
        }

        Sides s = evaluate_sides(id, rep.params, ctx);
        rep.sides = s.values;
        rep.truncations = s.truncations;

        double scale = 0.0;
        for (const auto& [label, v] : s.values) scale = std::max(scale, std::abs(v));
        double max_abs = 0.0;
        for (const auto& [lo, hi] : s.group_bounds)
            for (int i = lo; i < hi; ++i)
                for (int j = i + 1; j < hi; ++j)
                    max_abs = std::max(max_abs, std::abs(s.values[i].second - s.values[j].second));
        rep.max_abs_err = max_abs;
        rep.max_rel_err = max_abs / (1.0 + scale);
        rep.pass = rep.max_rel_err < ctx.identity_tol;

        if (id == IdentityId::spurious) {
            // passes only when the corrected form agrees AND the variant with
            // the deleted term misses by a wide margin
            const Complex lhs = s.values[0].second;
            const Complex with_spur = s.values[2].second;
            const double gap = std::abs(lhs - with_spur);
            rep.pass = rep.pass && gap > 100.0 * ctx.identity_tol;
            if (gap <= 100.0 * ctx.identity_tol)
                rep.error = "spurious variant not refuted: gap " + std::to_string(gap);
        }
    } catch (const std::exception& e) {
        rep.pass = false;
        rep.error = e.what();
    }

    const auto t1 = std::chrono::steady_clock::now();
    rep.wall_time_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return rep;
}

std::vector<CheckReport> sweep(IdentityId id, const std::map<std::string, std::vector<double>>& grid,
                               const PrecisionContext& ctx) {
    std::vector<std::string> keys;
    for (const auto& [k, vs] : grid) {
        keys.push_back(k); // std::map iterates sorted
        if (vs.empty()) return {};
    }

    std::vector<Params> points;
    Params cur;
    auto build = [&](auto&& self, size_t depth) -> void {
        if (depth == keys.size()) {
            points.push_back(cur);
            return;
        }
        for (double v : grid.at(keys[depth])) {
            cur[keys[depth]] = v;
            self(self, depth + 1);
        }
    };
    build(build, 0);

    std::vector<CheckReport> reports(points.size());
    const unsigned workers =
        std::min<unsigned>({std::max(1u, std::thread::hardware_concurrency()), 8u,
                            static_cast<unsigned>(points.size())});
    std::atomic<size_t> next{0};
    auto work = [&] {
        for (;;) {
            const size_t i = next.fetch_add(1);
            if (i >= points.size()) return;
            reports[i] = run_check(id, points[i], ctx);
        }
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }
    return reports;
}

} // namespace xic::harness
