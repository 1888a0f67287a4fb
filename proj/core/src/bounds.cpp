#include "cpart/bounds.hpp"

#include "cpart/geom.hpp"

#include <cmath>
#include <sstream>

namespace cpart {

namespace {

void check_open(double theta, double lo, double hi, const char* who)
{
    if (!(theta > lo && theta < hi))
        throw std::invalid_argument(std::string(who) + ": theta out of range");
}

double csc(double r) { return 1.0 / std::sin(r); }
double cot(double r) { return 1.0 / std::tan(r); }

}  // namespace

double gamma_one_regular(int k)
{
    if (k < 3)
        throw std::invalid_argument("gamma_one_regular: k < 3");
    return 1.0 / std::cos(pi / k);
}

double gamma_theta(double theta)
{
    check_open(theta, 0, 360, "gamma_theta");
    return (1 + csc(rad(theta) / 2)) / 2;
}

double gamma_corner_A(double theta)
{
    check_open(theta, 0, 180, "gamma_corner_A");
    return (1 + std::tan(rad(theta) / 2)) / std::sqrt(2.0);
}

double gamma_bottleneck_simple(double theta)
{
    check_open(theta, 0, 180, "gamma_bottleneck_simple");
    return gamma_theta(theta);
}

double gamma_bottleneck_three_point(double theta)
{
    check_open(theta, 0, 180, "gamma_bottleneck_three_point");
    double h = rad(theta) / 2;
    // origin at b, unit indisk; the circle passes through both feet and the top of the disk
    double xo = (cot(h) + std::tan(h)) / 2;
    double yo = (4 * xo * xo - 1) / 4;
    return std::sqrt(xo * xo + yo * yo);
}

BalanceSolution solve_balance(const std::function<double(double)>& f, const std::function<double(double)>& g,
                              double lo, double hi)
{
    auto d = [&](double t) { return f(t) - g(t); };
    double dlo = d(lo), dhi = d(hi);
    BalanceSolution s;
    if (dlo == 0 || dhi == 0) {
        s.theta = dlo == 0 ? lo : hi;
        s.gamma = f(s.theta);
        return s;
    }
    if ((dlo > 0) == (dhi > 0)) {
        std::ostringstream os;
        os << "solve_balance: no sign change on [" << lo << ", " << hi << "] (" << dlo << ", " << dhi << ")";
        throw SolverError(os.str());
    }
    double a = lo, b = hi;
    int it = 0;
    for (; it < 200; ++it) {
        double m = 0.5 * (a + b);
        if (m <= a || m >= b)
            break;
        double dm = d(m);
        if (dm == 0) {
            a = b = m;
            break;
        }
        if ((dm > 0) == (dlo > 0)) {
            a = m;
            dlo = dm;
        } else {
            b = m;
        }
    }
    double ra = std::abs(d(a)), rb = std::abs(d(b));
    s.theta = ra <= rb ? a : b;
    s.gamma = f(s.theta);
    s.residual = std::min(ra, rb);
    s.iterations = it;
    return s;
}

double sandwich_gamma(double theta)
{
    check_open(theta, 0, 180, "sandwich_gamma");
    double c = csc(rad(theta));
    return 0.25 + c * c;
}

double touching_radius(double theta)
{
    check_open(theta, 0, 180, "touching_radius");
    double t = std::tan(rad(theta) / 2);
    return t * t;
}

double next_level_angle(double theta, double gamma)
{
    check_open(theta, 0, 180, "next_level_angle");
    double t = rad(theta);
    double g2 = gamma * gamma - csc(t) * csc(t);
    if (g2 < 0)
        throw SolverError("next_level_angle: circumcircle smaller than the sandwich configuration");
    double h = std::sqrt(g2);
    double r = touching_radius(theta);
    // run of the tangent line from the second foot until it leaves either circumcircle
    double u1 = 2 * (h * std::sin(t) - cot(t));
    double u2 = 2 * r * (cot(t) + h * std::sin(t));
    double l = std::min(u1, u2) - std::tan(t / 2);
    if (l < 0)
        throw SolverError("next_level_angle: tangent top below the touching point");
    return deg(2 * std::atan(l) + 2 * std::atan(l / r));
}

double next_level_angle_printed(double theta, double gamma)
{
    check_open(theta, 0, 180, "next_level_angle_printed");
    double t = rad(theta);
    double g2 = gamma * gamma - csc(t) * csc(t);
    if (g2 < 0)
        throw SolverError("next_level_angle_printed: gamma^2 < csc^2 theta");
    double s2 = -1 + cot(t) * cot(t) - 2 * std::cos(t) * std::sqrt(g2) + gamma * gamma * std::sin(t) * std::sin(t);
    if (s2 < 0)
        throw SolverError("next_level_angle_printed: s^2 < 0");
    double s = std::sqrt(s2);
    return deg(2 * (std::atan(cot(t / 2) * s) + std::atan(2 * s)));
}

ChainLevel chain_level(double theta, double gamma)
{
    return {theta, touching_radius(theta), next_level_angle(theta, gamma), gamma};
}

ChainPredicate default_chain_predicate(double target_phi)
{
    return {[target_phi](double theta) { return next_level_angle(theta, gamma_corner_A(theta)) - target_phi; },
            [](double theta) { return gamma_corner_A(theta); }};
}

ChainPredicate fixed_gamma_predicate(double gamma_fixed, double target_phi)
{
    return {[=](double theta) { return next_level_angle(theta, gamma_fixed) - target_phi; },
            [=](double) { return gamma_fixed; }};
}

BalanceSolution tangent_chain_bound(const ChainPredicate& pred, double lo, double hi)
{
    auto safe = [&](double t) {
        try {
            return pred.residual(t);
        } catch (const SolverError&) {
            return std::nan("");
        }
    };
    double flo = safe(lo), fhi = safe(hi);
    if (!std::isfinite(flo) || !std::isfinite(fhi) || (flo > 0) == (fhi > 0)) {
        std::ostringstream os;
        os << "tangent_chain_bound: root not bracketed; phi residual samples:";
        for (int i = 0; i <= 10; ++i) {
            double t = lo + (hi - lo) * i / 10;
            os << " (" << t << ", " << safe(t) << ")";
        }
        throw SolverError(os.str());
    }
    auto s = solve_balance(pred.residual, [](double) { return 0.0; }, lo, hi);
    s.gamma = pred.gamma(s.theta);
    return s;
}

double right_triangle_ratio()
{
    // expanding with r = 1: 5 - 4x = 0; bisection keeps this a numeric solve
    auto f = [](double x) { return (2 - x) * (2 - x) + 1 - x * x; };
    auto s = solve_balance(f, [](double) { return 0.0; }, 1.0, 2.0);
    return s.theta;
}

}  // namespace cpart
