#include "cpart/optimize.hpp"

#include "cpart/geom.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace cpart {

namespace {

struct BudgetExhausted {};

class Evaluator {
public:
    Evaluator(const Objective& o, std::size_t budget, OptResult& res) : obj_(o), budget_(budget), res_(res) {}

    std::vector<double> clip(std::vector<double> x) const
    {
        for (std::size_t i = 0; i < x.size(); ++i)
            x[i] = std::clamp(x[i], obj_.bounds[i].first, obj_.bounds[i].second);
        return x;
    }

    double operator()(const std::vector<double>& x)
    {
        if (res_.evaluations >= budget_)
            throw BudgetExhausted{};
        ++res_.evaluations;
        double v = obj_.f(x);
        if (!std::isfinite(v))
            v = infeasible_penalty;
        if (res_.trace.empty() || v < res_.best_gamma) {
            res_.best_gamma = v;
            res_.best_params = x;
            res_.trace.emplace_back(x, v);
        }
        return v;
    }

private:
    const Objective& obj_;
    std::size_t budget_;
    OptResult& res_;
};

void nelder_mead(Evaluator& ev, const Objective& obj, std::vector<double> start, const MinimizeOptions& o)
{
    std::size_t d = obj.dim();
    std::vector<std::vector<double>> s{ev.clip(start)};
    for (std::size_t i = 0; i < d; ++i) {
        auto x = s[0];
        double range = obj.bounds[i].second - obj.bounds[i].first;
        double step = o.initial_step * range;
        x[i] = x[i] + step <= obj.bounds[i].second ? x[i] + step : x[i] - step;
        s.push_back(x);
    }
    std::vector<double> f;
    for (auto& x : s)
        f.push_back(ev(x));

    auto combine = [&](const std::vector<double>& c, const std::vector<double>& w, double t) {
        std::vector<double> r(d);
        for (std::size_t i = 0; i < d; ++i)
            r[i] = c[i] + t * (w[i] - c[i]);
        return ev.clip(r);
    };

    std::vector<std::size_t> idx(d + 1);
    for (;;) {
        std::iota(idx.begin(), idx.end(), 0);
        std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return f[a] < f[b]; });
        std::vector<std::vector<double>> s2;
        std::vector<double> f2;
        for (auto i : idx) {
            s2.push_back(s[i]);
            f2.push_back(f[i]);
        }
        s.swap(s2);
        f.swap(f2);

        double diam = 0;
        for (std::size_t k = 1; k <= d; ++k) {
            double m = 0;
            for (std::size_t i = 0; i < d; ++i)
                m = std::max(m, std::abs(s[k][i] - s[0][i]));
            diam = std::max(diam, m);
        }
        if (diam < o.xtol)
            return;

        std::vector<double> c(d, 0.0);
        for (std::size_t k = 0; k < d; ++k)
            for (std::size_t i = 0; i < d; ++i)
                c[i] += s[k][i] / static_cast<double>(d);

        auto xr = combine(c, s[d], -1.0);
        double fr = ev(xr);
        if (fr < f[0]) {
            auto xe = combine(c, s[d], -2.0);
            double fe = ev(xe);
            if (fe < fr) {
                s[d] = xe;
                f[d] = fe;
            } else {
                s[d] = xr;
                f[d] = fr;
            }
        } else if (fr < f[d - 1]) {
            s[d] = xr;
            f[d] = fr;
        } else {
            bool outside = fr < f[d];
            auto xc = combine(c, outside ? xr : s[d], 0.5);
            double fc = ev(xc);
            if (fc < (outside ? fr : f[d])) {
                s[d] = xc;
                f[d] = fc;
            } else {
                for (std::size_t k = 1; k <= d; ++k) {
                    s[k] = combine(s[0], s[k], 0.5);
                    f[k] = ev(s[k]);
                }
            }
        }
    }
}

}  // namespace

OptResult minimize(const Objective& obj, const std::vector<double>& x0, std::uint64_t seed, std::size_t budget,
                   const MinimizeOptions& opts)
{
    if (x0.size() != obj.dim())
        throw std::invalid_argument("minimize: x0 dimension does not match bounds");
    for (std::size_t i = 0; i < x0.size(); ++i)
        if (x0[i] < obj.bounds[i].first || x0[i] > obj.bounds[i].second)
            throw std::invalid_argument("minimize: x0 outside bounds");
    if (budget < obj.dim() + 1)
        throw std::invalid_argument("minimize: budget too small");

    OptResult res;
    double f0 = obj.f(x0);
    if (!std::isfinite(f0))
        throw SolverError("minimize: objective not finite at x0");
    res.evaluations = 1;
    res.best_params = x0;
    res.best_gamma = f0;
    res.trace.emplace_back(x0, f0);

    // one evaluation is held back for the final re-evaluation
    Evaluator ev(obj, budget - 1, res);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    try {
        nelder_mead(ev, obj, x0, opts);
        for (int r = 0; r < opts.restarts; ++r) {
            auto x = res.best_params;
            for (std::size_t i = 0; i < x.size(); ++i)
                x[i] += opts.jitter * (obj.bounds[i].second - obj.bounds[i].first) * u(rng);
            nelder_mead(ev, obj, ev.clip(x), opts);
        }
    } catch (const BudgetExhausted&) {
    }
    ++res.evaluations;
    res.best_gamma = obj.f(res.best_params);
    if (!std::isfinite(res.best_gamma))
        res.best_gamma = infeasible_penalty;
    return res;
}

}  // namespace cpart
