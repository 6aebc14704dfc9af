#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "dgff/monomials.hpp"

using namespace dgff;

TEST_CASE("orders zero and one") {
    auto& M = monomials();
    for (GridPoint p : {GridPoint{0, 0}, {2, 0}, {2, 2}, {-6, 4}, {8, -2}}) {
        CHECK(M.value(0, p) == ExactScalar(1));
        CHECK(M.value(1, p) == p.to_exact());
    }
}

TEST_CASE("property 5: prescribed failure of holomorphicity of u^[-1]") {
    auto& M = monomials();
    // (1/2pi) deebar u^[-1] = 1/2 at 0, 1/4 at |v|=1/2, 1/8 at (+-1+-i)/2
    auto norm = [&](GridPoint p) {
        return ExactScalar::pi_pow(-1, Gaussian(Rational(1, 2))) * M.deebar_value(-1, p);
    };
    CHECK(norm({0, 0}) == ExactScalar(Rational(1, 2)));
    for (GridPoint p : {GridPoint{2, 0}, {-2, 0}, {0, 2}, {0, -2}})
        CHECK(norm(p) == ExactScalar(Rational(1, 4)));
    for (GridPoint p : {GridPoint{2, 2}, {-2, 2}, {2, -2}, {-2, -2}})
        CHECK(norm(p) == ExactScalar(Rational(1, 8)));
    // zero elsewhere in B(3)
    for (int x = -12; x <= 12; x += 2)
        for (int y = -12; y <= 12; y += 2) {
            GridPoint p{x, y};
            if (p.norm1_quarters() > 12 || p.norm1_quarters() <= 4) continue;
            CHECK(M.deebar_value(-1, p).is_zero());
        }
}

TEST_CASE("derivative property at random points") {
    auto& M = monomials();
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> d(-8, 8);
    for (int n : {-4, -2, -1, 1, 2, 3, 5}) {
        for (int it = 0; it < 200; ++it) {
            GridPoint p{2 * d(rng), 2 * d(rng)};
            ExactScalar dv = ExactScalar(Rational(1, 2)) *
                                 (M.value(n, p + kHalfRight) - M.value(n, p + kHalfLeft)) -
                             ExactScalar(Gaussian(0, Rational(1, 2))) *
                                 (M.value(n, p + kHalfUp) - M.value(n, p + kHalfDown));
            CHECK(dv == ExactScalar(n) * M.value(n - 1, p));
        }
    }
}

TEST_CASE("holomorphicity of nonnegative orders") {
    auto& M = monomials();
    for (int n : {0, 1, 2, 3, 4, 6}) {
        for (int x = -10; x <= 10; x += 2)
            for (int y = -10; y <= 10; y += 2)
                CHECK(M.deebar_value(n, {x, y}).is_zero());
    }
}

TEST_CASE("pole sets: containment and rotation invariance") {
    auto& M = monomials();
    for (int k = 1; k <= 8; ++k) {
        auto ps = M.pole_set(k);
        CHECK(!ps.empty());
        for (GridPoint p : ps) {
            CHECK(p.norm1_quarters() <= 2 * (k + 1));
            CHECK(ps.count(p.rot90()) == 1);
        }
        for (GridPoint p : M.pole_set_medial(k))
            CHECK(p.norm1_quarters() <= 4 * (k / 2) + 2);
    }
}

TEST_CASE("pole values are Gaussian rational multiples of 2 pi") {
    auto& M = monomials();
    for (int k = 1; k <= 6; ++k)
        for (GridPoint p : M.pole_set(k)) {
            ExactScalar v = M.deebar_value(-k, p);
            for (const auto& [e, g] : v.terms()) CHECK(e == 1);  // pure pi^1 terms
        }
}

TEST_CASE("residue identity matrix") {
    auto& M = monomials();
    for (int n = -4; n <= 4; ++n)
        for (int m = -4; m <= 4; ++m) {
            ExactScalar r = M.residue_pairing(n, m);
            if (n + m + 1 == 0)
                CHECK(r == ExactScalar(1));
            else
                CHECK(r.is_zero());
        }
}

TEST_CASE("epsilon-weighted integrals vanish") {
    auto& M = monomials();
    // oint conj(u_diamond^[l]) eps(u_m) u_m^[k] dubar = 0
    for (int k = -5; k <= 5; ++k)
        for (int l = -5; l <= 5; ++l) {
            int reach = std::max(std::abs(k), std::abs(l)) + 3;
            int d = 2 * reach + 1;
            auto gamma = CornerContour::rectangle(-d, -d, d, d);
            auto f = LatticeFunction([&](GridPoint p) { return M.value(l, p).conj(); },
                                     Validity::diamond);
            auto g = LatticeFunction(
                [&](GridPoint p) {
                    return ExactScalar(epsilon_sign(p)) * M.value(k, p);
                },
                Validity::medial);
            CHECK(contour_integral(gamma, f, g, true).is_zero());
        }
}

TEST_CASE("integration by parts for discrete-holomorphic integrands") {
    auto& M = monomials();
    // oint f dee(h) du = - oint h dee(f) du for positive-order monomials
    for (auto [a, b] : std::vector<std::pair<int, int>>{{1, 2}, {2, 3}, {0, 4}}) {
        auto gamma = CornerContour::rectangle(-9, -9, 9, 9);
        auto f = M.as_function(a, 4);
        auto h = M.as_function(b, 4);
        auto dee_h = LatticeFunction([&, b = b](GridPoint p) { return ExactScalar(b) * M.value(b - 1, p); },
                                     Validity::medial);
        auto dee_f = LatticeFunction([&, a = a](GridPoint p) { return ExactScalar(a) * M.value(a - 1, p); },
                                     Validity::medial);
        ExactScalar lhs = contour_integral(gamma, f, dee_h, false);
        ExactScalar rhs = -contour_integral(gamma, h, dee_f, false);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("contour deformation invariance") {
    auto& M = monomials();
    // integrals of u^[-2]-weighted holomorphic pairs agree across nested
    // contours whose symmetric difference avoids the poles
    auto f = LatticeFunction([&](GridPoint p) { return M.value(-2, p); }, Validity::diamond);
    auto g = LatticeFunction([&](GridPoint p) { return M.value(1, p); }, Validity::medial);
    auto g1 = CornerContour::rectangle(-9, -9, 9, 9);
    auto g2 = CornerContour::rectangle(-13, -11, 15, 13);
    CHECK(contour_integral(g1, f, g) == contour_integral(g2, f, g));
}

TEST_CASE("validation reports") {
    auto& M = monomials();
    for (int n : {-2, -1, 3}) {
        auto rep = M.validate(n, 6);
        for (const auto& v : rep.violations) MESSAGE(v);
        CHECK(rep.ok);
    }
}

TEST_CASE("positive monomials vanish near the origin") {
    auto& M = monomials();
    // u^[3] vanishes in a finite neighborhood of 0
    int zeros = 0;
    for (int x = -4; x <= 4; x += 2)
        for (int y = -4; y <= 4; y += 2)
            if (M.value(3, {x, y}).is_zero()) ++zeros;
    CHECK(zeros >= 9);
}

TEST_CASE("negative monomial asymptotics in float") {
    auto& M = monomials();
    // |u^[-2](u) - u^-2| <= 0.02 |u|^-2 at |u| = 20
    GridPoint p = GridPoint::primal(20, 0);
    std::complex<double> v = M.value(-2, p).to_float();
    std::complex<double> t = 1.0 / std::complex<double>(400.0, 0.0);
    CHECK(std::abs(v - t) <= 0.02 * std::abs(t));
    // error decreases with distance (property 8, o(|u|^n))
    GridPoint q = GridPoint::primal(10, 0);
    std::complex<double> vq = M.value(-2, q).to_float();
    double rel_near = std::abs(vq - 0.01) / 0.01;
    double rel_far = std::abs(v - t) / std::abs(t);
    CHECK(rel_far < rel_near);
}
