#include "randpoly/geometry.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "randpoly/error.hpp"

namespace randpoly::geometry {

namespace {

constexpr double kPi = std::numbers::pi;

void check_dimension(int n, int min_n) {
    if (n < min_n) {
        fail("validation", "dimension n = " + std::to_string(n) + " is below the minimum " +
                               std::to_string(min_n));
    }
}

void check_unit_interval(double x, const char* name) {
    if (!(x >= 0.0 && x <= 1.0)) {
        fail("validation", std::string(name) + " = " + std::to_string(x) + " outside [0, 1]");
    }
}

// 32-point Gauss-Legendre nodes/weights on [-1, 1], computed once by Newton
// iteration on the Legendre polynomial.
struct GaussRule {
    std::array<double, 32> nodes{};
    std::array<double, 32> weights{};

    GaussRule() {
        constexpr int n = 32;
        for (int i = 0; i < n; ++i) {
            double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
            double pd = 0.0;
            for (int iter = 0; iter < 100; ++iter) {
                double p0 = 1.0, p1 = x;
                for (int k = 2; k <= n; ++k) {
                    const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                pd = n * (x * p1 - p0) / (x * x - 1.0);
                const double dx = p1 / pd;
                x -= dx;
                if (std::abs(dx) < 1e-16) break;
            }
            nodes[i] = x;
            weights[i] = 2.0 / ((1.0 - x * x) * pd * pd);
        }
    }
};

const GaussRule& gauss_rule() {
    static const GaussRule rule;
    return rule;
}

double gauss_sin_power(int power, double a, double b) {
    const GaussRule& rule = gauss_rule();
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double sum = 0.0;
    for (int i = 0; i < 32; ++i) {
        const double t = mid + half * rule.nodes[i];
        sum += rule.weights[i] * std::pow(std::sin(t), power);
    }
    return sum * half;
}

double adaptive_sin_power(int power, double a, double b, double whole, int depth) {
    const double mid = 0.5 * (a + b);
    const double left = gauss_sin_power(power, a, mid);
    const double right = gauss_sin_power(power, mid, b);
    const double refined = left + right;
    if (depth > 40 || std::abs(refined - whole) <= 1e-15 * std::abs(refined) + 1e-300) {
        return refined;
    }
    return adaptive_sin_power(power, a, mid, left, depth + 1) +
           adaptive_sin_power(power, mid, b, right, depth + 1);
}

// integral_0^theta sin^power(t) dt with relative accuracy near machine
// precision; the integrand is analytic so the composite rule converges fast.
double sin_power_integral(int power, double theta) {
    if (theta <= 0.0) return 0.0;
    return adaptive_sin_power(power, 0.0, theta, gauss_sin_power(power, 0.0, theta), 0);
}

}  // namespace

double ball_volume(int n) {
    check_dimension(n, 1);
    // Recurrence from the base cases; even/odd chains are independent.
    double v = (n % 2 == 1) ? 2.0 : kPi;
    for (int k = (n % 2 == 1) ? 1 : 2; k < n; k += 2) {
        v *= 2.0 * kPi / (k + 2);
    }
    return v;
}

double sphere_surface(int n) {
    check_dimension(n, 2);
    return n * ball_volume(n);
}

double cap_volume_quadrature(int n, double h) {
    check_dimension(n, 2);
    check_unit_interval(h, "cap height h");
    // Substituting y = cos(theta) turns the integrand (1-y^2)^{(n-1)/2} into
    // the smooth sin^n(theta), which keeps relative accuracy for tiny h.
    // theta via the half-angle identity: acos(1-h) sheds half its digits as
    // h -> 0, while asin(sqrt(h/2)) stays fully conditioned.
    const double theta = 2.0 * std::asin(std::sqrt(0.5 * h));
    return ball_volume(n - 1) * sin_power_integral(n, theta);
}

double cap_volume(int n, double h) {
    check_dimension(n, 2);
    check_unit_interval(h, "cap height h");
    if (n == 2) {
        // Circular segment: theta - sin(theta)cos(theta). The subtraction
        // cancels three powers of theta, so small segments go through the
        // quadrature, whose positive-term sums carry no cancellation.
        if (h < 0.01) return cap_volume_quadrature(2, h);
        const double s = std::sqrt(h * (2.0 - h));
        return 2.0 * std::asin(std::sqrt(0.5 * h)) - (1.0 - h) * s;
    }
    if (n == 3) {
        return kPi * h * h * (3.0 - h) / 3.0;
    }
    return cap_volume_quadrature(n, h);
}

double cap_surface(int n, double h) {
    check_dimension(n, 2);
    check_unit_interval(h, "cap height h");
    if (n == 2) {
        return 4.0 * std::asin(std::sqrt(0.5 * h));  // arc 2*acos(1-h), conditioned
    }
    if (n == 3) {
        return 2.0 * kPi * h;
    }
    const double vn = ball_volume(n);
    const double vn1 = ball_volume(n - 1);
    const double chord = std::sqrt(h * (2.0 - h));
    return sphere_surface(n) * (std::pow(chord, n - 1) * vn1 / (n * vn) * (1.0 - h) +
                                cap_volume(n, h) / vn);
}

double belt_volume(int n, double r) {
    check_dimension(n, 2);
    check_unit_interval(r, "belt radius r");
    return ball_volume(n) * std::pow(1.0 - r * r, n / 2.0);
}

double belt_surface(int n, double r) {
    check_dimension(n, 2);
    check_unit_interval(r, "belt radius r");
    return sphere_surface(n) * std::pow(1.0 - r * r, (n - 2) / 2.0);
}

double cap_volume_asymptotic(int n, double h) {
    check_dimension(n, 2);
    check_unit_interval(h, "cap height h");
    // Leading term of integral_{1-h}^1 (1-y^2)^{(n-1)/2} v_{n-1} dy: bounding
    // the integrand between y*(...) and y*(...)/(1-h) gives
    // (2h-h^2)^{(n+1)/2} v_{n-1} / (n+1) on both sides as h -> 0.
    const double chord = std::sqrt(h * (2.0 - h));
    return ball_volume(n - 1) * std::pow(chord, n + 1) / (n + 1);
}

double cap_fraction(int n, double h) {
    return cap_surface(n, h) / sphere_surface(n);
}

double solve_cap_fraction(int n, double target) {
    check_dimension(n, 2);
    if (target < 0.0) {
        fail("validation", "cap fraction target must be nonnegative");
    }
    if (target > 0.5 + 1e-12) {
        fail("threshold-unattainable",
             "cap fraction target " + std::to_string(target) +
                 " exceeds 1/2; no cap height in (0, 1] reaches it");
    }
    if (target == 0.0) return 0.0;
    if (target >= 0.5) return 1.0;
    double lo = 0.0, hi = 1.0;
    for (int iter = 0; iter < 200 && hi - lo > 1e-14; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (cap_fraction(n, mid) < target) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

double solve_delta(int n, std::int64_t m, double c) {
    if (m < 2) fail("validation", "solve_delta requires m >= 2");
    if (c <= 0.0) fail("validation", "solve_delta requires c > 0");
    return solve_cap_fraction(n, c * std::log(static_cast<double>(m)) / static_cast<double>(m));
}

}  // namespace randpoly::geometry
