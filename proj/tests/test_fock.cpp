#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>

#include "dgff/fock.hpp"

using namespace dgff;

namespace {
// All basis vectors with |lambda| + |lambda_bar| <= total_grade.
std::vector<FockVector> basis_up_to(int total_grade) {
    std::vector<Partition> parts;
    std::function<void(int, int, Partition&)> gen = [&](int remaining, int max_part, Partition& cur) {
        parts.push_back(cur);
        for (int k = std::min(remaining, max_part); k >= 1; --k) {
            cur.push_back(k);
            gen(remaining - k, k, cur);
            cur.pop_back();
        }
    };
    Partition tmp;
    gen(total_grade, total_grade, tmp);
    std::vector<FockVector> out;
    for (const auto& h : parts)
        for (const auto& a : parts)
            if (partition_grade(h) + partition_grade(a) <= total_grade)
                out.push_back(FockVector::basis(h, a));
    return out;
}
}  // namespace

TEST_CASE("heisenberg basics") {
    FockVector vac = FockVector::vacuum();
    CHECK(heisenberg_apply(0, Chirality::holo, FockVector::basis({3, 1}, {2})).is_zero());
    // a_1 a_{-1} vac = vac
    CHECK(heisenberg_apply(1, Chirality::holo,
                           heisenberg_apply(-1, Chirality::holo, vac)) == vac);
    // a_2 a_{-1} a_{-1} vac = 0 ; a_1 a_{-1}a_{-1} vac = 2 a_{-1} vac
    FockVector two = FockVector::basis({1, 1}, {});
    CHECK(heisenberg_apply(2, Chirality::holo, two).is_zero());
    CHECK(heisenberg_apply(1, Chirality::holo, two) ==
          FockVector::basis({1}, {}) * ExactScalar(2));
}

TEST_CASE("heisenberg commutators on a grade-bounded basis") {
    auto basis = basis_up_to(6);
    for (int k = -6; k <= 6; ++k)
        for (int l = -6; l <= 6; ++l) {
            if (std::abs(k) + std::abs(l) > 8) continue;  // keep runtime modest
            for (const auto& v : basis) {
                auto ak = [&](const FockVector& x) { return heisenberg_apply(k, Chirality::holo, x); };
                auto al = [&](const FockVector& x) { return heisenberg_apply(l, Chirality::holo, x); };
                FockVector lhs = ak(al(v)) - al(ak(v));
                FockVector rhs = (k + l == 0) ? v * ExactScalar(k) : FockVector();
                CHECK(lhs == rhs);
                // cross-chirality commutation
                auto abar_l = heisenberg_apply(l, Chirality::anti, v);
                FockVector cross = heisenberg_apply(k, Chirality::holo, abar_l) -
                                   heisenberg_apply(l, Chirality::anti,
                                                    heisenberg_apply(k, Chirality::holo, v));
                CHECK(cross.is_zero());
            }
        }
}

TEST_CASE("sugawara L0 grading and vacuum annihilation") {
    FockVector v = FockVector::basis({4, 2, 1}, {});
    CHECK(sugawara_L(0, Chirality::holo, v) == v * ExactScalar(7));
    CHECK(sugawara_L(0, Chirality::anti, v).is_zero());
    CHECK(sugawara_L(1, Chirality::holo, FockVector::vacuum()).is_zero());
}

TEST_CASE("virasoro bracket with central charge one") {
    auto basis = basis_up_to(6);
    for (int n = -4; n <= 4; ++n)
        for (int m = -4; m <= 4; ++m)
            for (const auto& v : basis) {
                FockVector lhs = sugawara_L(n, Chirality::holo, sugawara_L(m, Chirality::holo, v)) -
                                 sugawara_L(m, Chirality::holo, sugawara_L(n, Chirality::holo, v));
                FockVector rhs = sugawara_L(n + m, Chirality::holo, v) * ExactScalar(n - m);
                if (n + m == 0) {
                    long nn = n;
                    ExactScalar c(Rational(nn * nn * nn - nn, 12));
                    rhs += v * c;
                }
                CHECK(lhs == rhs);
            }
}

TEST_CASE("[L2, L-2] = 4 L0 + 1/2 on grade <= 6") {
    for (const auto& v : basis_up_to(6)) {
        FockVector lhs = sugawara_L(2, Chirality::holo, sugawara_L(-2, Chirality::holo, v)) -
                         sugawara_L(-2, Chirality::holo, sugawara_L(2, Chirality::holo, v));
        FockVector rhs = sugawara_L(0, Chirality::holo, v) * ExactScalar(4) +
                         v * ExactScalar(Rational(1, 2));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("listed primary states") {
    CHECK(is_primary(FockVector::vacuum()).primary);
    CHECK(is_primary(FockVector::basis({1}, {})).primary);
    CHECK(is_primary(FockVector::basis({}, {1})).primary);

    auto q = is_primary(FockVector::basis({1}, {1}));
    CHECK(q.primary);
    CHECK(q.weights == std::pair<int, int>{1, 1});

    // a_{-1} (abar_{-1}^4 + 3/2 abar_{-2}^2 - 2 abar_{-3} abar_{-1}) vac
    FockVector v14 = FockVector::basis({1}, {1, 1, 1, 1}) +
                     FockVector::basis({1}, {2, 2}) * ExactScalar(Rational(3, 2)) +
                     FockVector::basis({1}, {3, 1}) * ExactScalar(-2);
    auto r14 = is_primary(v14);
    CHECK(r14.primary);
    CHECK(r14.weights == std::pair<int, int>{1, 4});

    // negative control: a_{-2} vac is not primary (L_1 a_{-2} vac = a_{-1} vac)
    auto neg = is_primary(FockVector::basis({2}, {}));
    CHECK(!neg.primary);
    CHECK(sugawara_L(1, Chirality::holo, FockVector::basis({2}, {})) ==
          FockVector::basis({1}, {}));
}

TEST_CASE("the grade-nine primary") {
    auto B = [](Partition p, Rational c) {
        return FockVector::basis(std::move(p), {}, ExactScalar(c));
    };
    FockVector v = B({1, 1, 1, 1, 1, 1, 1, 1, 1}, 1) + B({2, 2, 1, 1, 1, 1, 1}, 9) +
                   B({2, 2, 2, 2, 1}, Rational(-135, 4)) + B({3, 1, 1, 1, 1, 1, 1}, -12) +
                   B({3, 2, 2, 1, 1}, 90) + B({3, 3, 3}, 40) + B({4, 2, 1, 1, 1}, -90) +
                   B({4, 3, 2}, -90) + B({4, 4, 1}, Rational(135, 2)) +
                   B({5, 1, 1, 1, 1}, 36) + B({5, 2, 2}, 54) + B({5, 3, 1}, -72);
    auto r = is_primary(v, 9);
    CHECK(r.primary);
    CHECK(r.weights == std::pair<int, int>{9, 0});
}

TEST_CASE("bigrade decomposition") {
    FockVector v = FockVector::basis({2, 1}, {1}) + FockVector::basis({1}, {});
    auto comps = v.bigrade_components();
    CHECK(comps.size() == 2);
    CHECK(comps.count({3, 1}) == 1);
    CHECK(comps.count({1, 0}) == 1);
    CHECK(v.max_grade() == 4);
}
