#include "spacelike/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace spacelike::quadrature {

namespace {

using cd = std::complex<double>;

// G7/K15 Gauss-Kronrod pair, nodes in descending order of magnitude.
// Odd indices are the embedded Gauss points, even indices the Kronrod
// extension points; the last entry is the centre node.
constexpr double kGK15Nodes[8] = {
    0.99145537112081263920685469752633,
    0.94910791234275852452618968404785,
    0.86486442335976907278971278864093,
    0.74153118559939443986386477328079,
    0.58608723546769113029414483825873,
    0.40584515137739716690660641207696,
    0.20778495500789846760068940377324,
    0.0,
};

constexpr double kK15Weights[8] = {
    0.02293532201052922496373200805897,
    0.06309209262997855329070066318920,
    0.10479001032225018383987632254152,
    0.14065325971552591874518959051024,
    0.16900472663926790282658342659855,
    0.19035057806478540991325640242101,
    0.20443294007529889241416199923465,
    0.20948214108472782801299917489171,
};

constexpr double kG7Weights[4] = {
    0.12948496616886969327061143267908,
    0.27970539148927666790146777142378,
    0.38183005050511894495036977548898,
    0.41795918367346938775510204081633,
};

struct Panel {
    double a, b;
    cd value;
    double error;
    bool splittable;
};

// One G7/K15 evaluation over [a, b] with a QUADPACK-flavoured error
// estimate based on the scaled deviation of the integrand from its
// Kronrod mean.
Panel gk15_panel(const std::function<cd(double)>& f, double a, double b) {
    const double centre = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    cd samples[15];
    const cd fc = f(centre);
    samples[14] = fc;
    cd res_gauss = kG7Weights[3] * fc;
    cd res_kronrod = kK15Weights[7] * fc;
    for (int j = 0; j < 7; ++j) {
        const cd f_lo = f(centre - half * kGK15Nodes[j]);
        const cd f_hi = f(centre + half * kGK15Nodes[j]);
        samples[2 * j] = f_lo;
        samples[2 * j + 1] = f_hi;
        res_kronrod += kK15Weights[j] * (f_lo + f_hi);
        if (j % 2 == 1) {
            res_gauss += kG7Weights[j / 2] * (f_lo + f_hi);
        }
    }

    const cd mean = 0.5 * res_kronrod;
    double res_asc = kK15Weights[7] * std::abs(fc - mean);
    for (int j = 0; j < 7; ++j) {
        res_asc += kK15Weights[j] *
                   (std::abs(samples[2 * j] - mean) + std::abs(samples[2 * j + 1] - mean));
    }
    res_asc *= std::abs(half);

    const double raw = std::abs(res_kronrod - res_gauss) * std::abs(half);
    double error = raw;
    if (res_asc > 0.0 && raw > 0.0) {
        error = res_asc * std::min(1.0, std::pow(200.0 * raw / res_asc, 1.5));
    }
    const double width_floor = std::numeric_limits<double>::epsilon() *
                               std::max({std::abs(a), std::abs(b), 1.0});
    return Panel{a, b, res_kronrod * half, error, (b - a) > 64.0 * width_floor};
}

} // namespace

GaussLegendreRule gauss_legendre(int n) {
    if (n < 1) {
        throw std::invalid_argument("gauss_legendre: order must be positive");
    }
    GaussLegendreRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Tricomi-style initial guess, then Newton on P_n.
        double x = std::cos(3.14159265358979323846 * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 64; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16 * std::max(1.0, std::abs(x))) {
                break;
            }
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) {
        rule.nodes[n / 2] = 0.0;
    }
    return rule;
}

IntegralEstimate integrate_gk15(const std::function<cd(double)>& f,
                                double a, double b,
                                double abs_tol, double rel_tol,
                                long max_evals) {
    if (!(b > a)) {
        throw std::invalid_argument("integrate_gk15: requires b > a");
    }
    std::vector<Panel> panels;
    panels.push_back(gk15_panel(f, a, b));
    long evals = 15;

    for (;;) {
        cd total{0.0, 0.0};
        double err = 0.0;
        for (const Panel& p : panels) {
            total += p.value;
            err += p.error;
        }
        if (err <= std::max(abs_tol, rel_tol * std::abs(total))) {
            return {total, err, evals};
        }
        std::size_t worst = panels.size();
        double worst_err = -1.0;
        for (std::size_t i = 0; i < panels.size(); ++i) {
            if (panels[i].splittable && panels[i].error > worst_err) {
                worst_err = panels[i].error;
                worst = i;
            }
        }
        if (worst == panels.size() || evals + 30 > max_evals) {
            return {total, err, evals};
        }
        const Panel split = panels[worst];
        const double mid = 0.5 * (split.a + split.b);
        panels[worst] = gk15_panel(f, split.a, mid);
        panels.push_back(gk15_panel(f, mid, split.b));
        evals += 30;
    }
}

AcceleratedSum wynn_epsilon(const std::vector<cd>& partial_sums) {
    const std::size_t n = partial_sums.size();
    if (n == 0) {
        return {cd{0.0, 0.0}, std::numeric_limits<double>::infinity()};
    }
    if (n < 3) {
        return {partial_sums.back(), std::numeric_limits<double>::infinity()};
    }

    cd best = partial_sums.back();
    double best_err = std::abs(partial_sums[n - 1] - partial_sums[n - 2]);

    std::vector<cd> col_before(n, cd{0.0, 0.0});  // column k-1
    std::vector<cd> col = partial_sums;           // column k
    for (int k = 0; col.size() >= 2; ++k) {
        std::vector<cd> next(col.size() - 1);
        for (std::size_t j = 0; j + 1 < col.size(); ++j) {
            const cd denom = col[j + 1] - col[j];
            if (std::abs(denom) < 1e-300) {
                next[j] = cd{std::numeric_limits<double>::infinity(), 0.0};
            } else {
                next[j] = col_before[j + 1] + 1.0 / denom;
            }
        }
        if (k % 2 == 1 && next.size() >= 2) {
            // next is an even-numbered (estimating) column.
            const cd cand = next.back();
            const cd prev = next[next.size() - 2];
            if (std::isfinite(cand.real()) && std::isfinite(cand.imag()) &&
                std::isfinite(prev.real()) && std::isfinite(prev.imag())) {
                const double err = std::abs(cand - prev);
                if (err < best_err) {
                    best_err = err;
                    best = cand;
                }
            }
        }
        col_before = std::move(col);
        col = std::move(next);
    }
    return {best, best_err};
}

} // namespace spacelike::quadrature
