#pragma once

#include <cstdint>

namespace randpoly::geometry {

// Volume v_n of the unit ball in R^n, from v_1 = 2, v_2 = pi and
// v_n = 2*pi*v_{n-2}/n.
double ball_volume(int n);

// Surface area s_n = n * v_n of the unit sphere in R^n, n >= 2.
double sphere_surface(int n);

// Volume of the spherical cap C_n(h) = {x in B_n(1) : x_n >= 1-h}.
// Closed forms for n = 2, 3; numerical quadrature otherwise.
double cap_volume(int n, double h);

// Quadrature evaluation of the cap-volume integral
// integral_{1-h}^{1} (1-y^2)^{(n-1)/2} v_{n-1} dy, valid for all n >= 2.
// cap_volume() uses this for n >= 4; exposed separately so closed forms can
// be cross-checked against it.
double cap_volume_quadrature(int n, double h);

// Surface area SA(C_n(h)) of the cap against the unit sphere.
double cap_surface(int n, double h);

// Volume of the belt L_n(r) = {x in B_n(1) : x_1^2 + x_2^2 >= r^2},
// exactly v_n (1-r^2)^{n/2}.
double belt_volume(int n, double r);

// Surface area of L_n(r), exactly s_n (1-r^2)^{(n-2)/2}.
double belt_surface(int n, double r);

// Small-h asymptotic v_{n-1} sqrt(2h-h^2)^{n+1} / (n+1) of the cap volume.
double cap_volume_asymptotic(int n, double h);

// Fraction cap_surface(n, h) / s_n of the sphere covered by a cap of height h.
double cap_fraction(int n, double h);

// Inverse of cap_fraction in h: the unique h in [0, 1] with
// cap_fraction(n, h) = target, found by bisection. target must lie in
// [0, 1/2]; above 1/2 no cap works and "threshold-unattainable" is raised.
double solve_cap_fraction(int n, double target);

// The threshold height delta with cap_fraction(n, delta) = c * log(m) / m.
double solve_delta(int n, std::int64_t m, double c);

}  // namespace randpoly::geometry
