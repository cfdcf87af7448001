#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "wittforge/witt.hpp"

using namespace wittforge;
using wittforge::testing::Rng;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

std::vector<Rat> R(std::initializer_list<long> xs) {
    std::vector<Rat> out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

WittVector random_witt(Rng& rng, int n) {
    std::vector<Rat> g;
    for (int i = 0; i < n; ++i) g.push_back(rng.rat());
    return WittVector::from_ghost(std::move(g));
}

// polynomial product of 1 + sum a_i t^i truncated, as an oracle for the
// sigma homomorphism
std::vector<Rat> series_product(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    size_t n = a.size();
    std::vector<Rat> out(n, Rat(0));
    for (size_t i = 0; i < n; ++i) {
        out[i] += a[i] + b[i];
        for (size_t j = 0; j + i + 1 < n; ++j) out[i + j + 1] += a[i] * b[j];
    }
    return out;
}

}  // namespace

TEST_CASE("ghost coordinates and lifts") {
    CHECK(teichmuller(2, 4).ghost() == R({2, 4, 8, 16}));
    CHECK(anti_teichmuller(1, 4).ghost() == R({1, -1, 1, -1}));
    CHECK(WittVector(4).ghost() == R({0, 0, 0, 0}));
    CHECK(xi(3).ghost() == R({1, 0, 0}));
    CHECK(WittVector::from_ghost(R({1, 2})).ghost() == R({1, 2}));
    CHECK_THROWS_AS(WittVector(0), std::invalid_argument);
}

TEST_CASE("value_at") {
    WittVector t3 = teichmuller(3, 4);
    for (int w = 1; w <= 4; ++w)
        for (const auto& lambda : partitions_of(w)) {
            Rat expected = lambda.length() == 1 ? rat_pow(Rat(3), static_cast<unsigned long>(w))
                                                : Rat(0);
            CHECK(value_at(t3, from_basis(BasisTag::m, lambda, 4)) == expected);
        }
    WittVector a3 = anti_teichmuller(3, 4);
    for (int w = 1; w <= 4; ++w)
        for (const auto& lambda : partitions_of(w)) {
            Rat expected = lambda.max_part() == 1
                               ? rat_pow(Rat(3), static_cast<unsigned long>(w))
                               : Rat(0);
            CHECK(value_at(a3, from_basis(BasisTag::s, lambda, 4)) == expected);
        }
    WittVector x = WittVector::from_ghost(R({7, 2, 5}));
    CHECK(value_at(x, SymFunc::psi(1, 3)) == 7);
    CHECK_THROWS_AS(value_at(x, SymFunc::psi(4, 4)), capacity_error);
    CHECK_THROWS_AS(value_at(x, power(SymFunc::psi(2, 4), 2)), capacity_error);
}

TEST_CASE("series coordinates") {
    Rng rng(41);
    // sigma^+_+ of a Teichmueller lift is 1 + a t
    for (int i = 0; i < 5; ++i) {
        Rat a = rng.rat();
        auto s = to_series(teichmuller(a, 5), SeriesNorm::PlusPlus);
        CHECK(s[0] == a);
        for (size_t j = 1; j < s.size(); ++j) CHECK(s[j] == 0);
    }
    // sigma(xi) = e^t
    auto sxi = to_series(xi(6), SeriesNorm::MinusMinus);
    for (int i = 1; i <= 6; ++i)
        CHECK(sxi[static_cast<size_t>(i - 1)] ==
              Rat(1) / Rat(factorial(static_cast<unsigned long>(i))));
    // pin the (eps1, eps2) semantics on a Teichmueller lift:
    // ++ gives 1+2t, +- its inverse, -+ the alternating e-series
    WittVector t2 = teichmuller(2, 3);
    CHECK(to_series(t2, SeriesNorm::PlusPlus) == R({2, 0, 0}));
    CHECK(to_series(t2, SeriesNorm::PlusMinus) == R({-2, 4, -8}));
    CHECK(to_series(t2, SeriesNorm::MinusPlus) == R({-2, 0, 0}));
    CHECK(to_series(t2, SeriesNorm::MinusMinus) == R({2, 4, 8}));
    // the canonical normalization lists h-values
    for (int i = 0; i < 5; ++i) {
        WittVector x = random_witt(rng, 5);
        auto s = to_series(x, SeriesNorm::MinusMinus);
        for (int m = 1; m <= 5; ++m)
            CHECK(s[static_cast<size_t>(m - 1)] ==
                  value_at(x, from_basis(BasisTag::h, Partition::single(m), 5)));
    }
    // round trips in all four normalizations, both directions
    for (int i = 0; i < 10; ++i) {
        WittVector x = random_witt(rng, 6);
        std::vector<Rat> coeffs;
        for (int j = 0; j < 6; ++j) coeffs.push_back(rng.rat());
        for (SeriesNorm norm : {SeriesNorm::MinusMinus, SeriesNorm::PlusPlus,
                                SeriesNorm::PlusMinus, SeriesNorm::MinusPlus}) {
            CHECK(from_series(to_series(x, norm), norm) == x);
            CHECK(to_series(from_series(coeffs, norm), norm) == coeffs);
        }
    }
}

TEST_CASE("Witt coordinates") {
    Rng rng(43);
    for (int i = 0; i < 5; ++i) {
        Rat a = rng.rat();
        auto ts = witt_coords(teichmuller(a, 5));
        CHECK(ts[0] == a);
        for (size_t j = 1; j < ts.size(); ++j) CHECK(ts[j] == 0);
    }
    // single nonzero Witt coordinate t_d: ghost g_m = d t_d^{m/d} when d | m
    for (int d = 1; d <= 4; ++d) {
        std::vector<Rat> ts(6, Rat(0));
        Rat td(3, 2);
        ts[static_cast<size_t>(d - 1)] = td;
        WittVector x = from_witt_coords(ts);
        for (int m = 1; m <= 6; ++m) {
            Rat expected = (m % d == 0)
                               ? Rat(d) * rat_pow(td, static_cast<unsigned long>(m / d))
                               : Rat(0);
            CHECK(x.ghost_at(m) == expected);
        }
    }
    CHECK(witt_coords(WittVector(5)) == std::vector<Rat>(5, Rat(0)));
    for (int i = 0; i < 10; ++i) {
        WittVector x = random_witt(rng, 6);
        CHECK(from_witt_coords(witt_coords(x)) == x);
    }
}

TEST_CASE("arithmetic and the sigma homomorphism") {
    Rng rng(47);
    for (int i = 0; i < 20; ++i) {
        WittVector x = random_witt(rng, 6), y = random_witt(rng, 6);
        CHECK(to_series(add(x, y)) == series_product(to_series(x), to_series(y)));
    }
    for (int i = 0; i < 5; ++i) {
        Rat a = rng.rat(), b = rng.rat();
        CHECK(mul(teichmuller(a, 6), teichmuller(b, 6)) == teichmuller(a * b, 6));
    }
    WittVector x = random_witt(rng, 4);
    CHECK(add(x, WittVector(4)) == x);
    CHECK(mul(x, teichmuller(1, 4)) == x);
    CHECK_THROWS_AS(add(x, WittVector(5)), std::invalid_argument);
}

TEST_CASE("Witt ring laws") {
    Rng rng(53);
    for (int i = 0; i < 25; ++i) {
        WittVector x = random_witt(rng, 5), y = random_witt(rng, 5), z = random_witt(rng, 5);
        CHECK(add(x, y) == add(y, x));
        CHECK(mul(x, y) == mul(y, x));
        CHECK(add(add(x, y), z) == add(x, add(y, z)));
        CHECK(mul(mul(x, y), z) == mul(x, mul(y, z)));
        CHECK(mul(x, add(y, z)) == add(mul(x, y), mul(x, z)));
    }
}

TEST_CASE("anti-Teichmueller identities") {
    Rng rng(59);
    for (int i = 0; i < 10; ++i) {
        Rat a = rng.rat(), b = rng.rat();
        CHECK(mul(anti_teichmuller(a, 6), anti_teichmuller(b, 6)) ==
              teichmuller(a * b, 6));
        CHECK(mul(teichmuller(a, 6), anti_teichmuller(b, 6)) ==
              anti_teichmuller(a * b, 6));
        CHECK(anti_teichmuller(a, 6) ==
              mul(anti_teichmuller(1, 6), teichmuller(a, 6)));
    }
}

TEST_CASE("frobenius") {
    WittVector x = WittVector::from_ghost(R({1, 2, 3, 4}));
    CHECK(frobenius(2, x).ghost() == R({2, 4}));
    CHECK(frobenius(1, x) == x);
    Rng rng(61);
    WittVector y = random_witt(rng, 12);
    CHECK(frobenius(2, frobenius(3, y)) == frobenius(6, y));
    CHECK(frobenius(3, frobenius(2, y)) == frobenius(6, y));
    CHECK_THROWS_AS(frobenius(5, x), capacity_error);
}

TEST_CASE("lambda action") {
    Rng rng(67);
    WittVector x = random_witt(rng, 6);
    CHECK(apply_symfunc(SymFunc::psi(1, 1), x) == x);
    for (int m = 1; m <= 3; ++m)
        CHECK(apply_symfunc(SymFunc::psi(m, m), x) == frobenius(m, x));
    // d_2 kills Teichmueller lifts
    WittVector t = teichmuller(Rat(5, 2), 8);
    WittVector dt = apply_symfunc(d_op(2, 2), t);
    for (const Rat& g : dt.ghost()) CHECK(g == 0);
    // (fg)(x) = f(x) g(x) on ghost components
    SymFunc f = from_basis(BasisTag::h, P({2}), 4);
    SymFunc g = from_basis(BasisTag::e, P({2}), 4);
    WittVector via_product = apply_symfunc(multiply(f, g), x);
    WittVector separately = mul(apply_symfunc(f, x), apply_symfunc(g, x));
    CHECK(via_product == separately);
}

TEST_CASE("co-addition computes the action on sums") {
    Rng rng(71);
    for (int trial = 0; trial < 5; ++trial) {
        WittVector x = random_witt(rng, 4), y = random_witt(rng, 4);
        for (int w = 1; w <= 4; ++w)
            for (const auto& lambda : partitions_of(w)) {
                for (BasisTag tag : {BasisTag::m, BasisTag::s}) {
                    SymFunc f = from_basis(tag, lambda, 4);
                    Rat direct = value_at(add(x, y), f);
                    Rat via = 0;
                    TensorSymFunc split = coproduct_add(f);
                    for (const auto& [key, c] : split.terms())
                        via += c *
                               value_at(x, SymFunc::psi_term(key.first, 1, 4)) *
                               value_at(y, SymFunc::psi_term(key.second, 1, 4));
                    CHECK(direct == via);
                }
            }
    }
}

TEST_CASE("values at zero and one are the counits") {
    WittVector zero(4);
    WittVector one = teichmuller(1, 4);
    for (int w = 1; w <= 4; ++w)
        for (const auto& lambda : partitions_of(w))
            for (BasisTag tag : {BasisTag::m, BasisTag::s, BasisTag::h, BasisTag::e}) {
                SymFunc f = from_basis(tag, lambda, 4);
                CHECK(value_at(zero, f) == counit_add(f));
                CHECK(value_at(one, f) == counit_mul(f));
            }
}

TEST_CASE("Frobenius lift identity") {
    // psi_p(x) + p d_p(x) = x^p as operators on Witt vectors
    Rng rng(89);
    for (int p : {2, 3}) {
        WittVector x = random_witt(rng, 6);
        WittVector frob = apply_symfunc(SymFunc::psi(p, p), x);
        WittVector der = apply_symfunc(d_op(p, p), x);
        WittVector pth = x;
        for (int i = 1; i < p; ++i) pth = mul(pth, x);
        int k = frob.truncation();
        for (int m = 1; m <= k; ++m)
            CHECK(frob.ghost_at(m) + Rat(p) * der.ghost_at(m) == pth.ghost_at(m));
    }
}

TEST_CASE("omega twist is multiplication by anti-Teichmueller one") {
    Rng rng(73);
    for (int i = 0; i < 10; ++i) {
        WittVector x = random_witt(rng, 6);
        CHECK(omega_twist(x) == mul(anti_teichmuller(1, 6), x));
        SymFunc f = rng.symfunc(4);
        SymFunc f6(6);
        for (const auto& [l, c] : f.terms()) f6.add_term(l, c);
        CHECK(value_at(omega_twist(x), f6) == value_at(x, omega(f6)));
    }
}

TEST_CASE("membership") {
    WittVector two = WittVector::from_ghost(R({2, 2, 2, 2}));
    auto repW = member_W(two, Domain::Nat);
    CHECK(repW.member);
    // the eleven weight <= 4 monomial values, in the table's printed order
    std::vector<Partition> order = {P({1}),       P({2}),    P({3}),    P({4}),
                                    P({1, 1}),    P({2, 1}), P({1, 1, 1}),
                                    P({3, 1}),    P({2, 2}), P({2, 1, 1}),
                                    P({1, 1, 1, 1})};
    std::vector<Rat> values;
    for (const auto& lambda : order)
        values.push_back(value_at(two, from_basis(BasisTag::m, lambda, 4)));
    CHECK(values == R({2, 2, 2, 2, 1, 2, 0, 2, 1, 0, 0}));

    WittVector anti1 = anti_teichmuller(1, 4);
    CHECK(member_WSch(anti1, Domain::Nat).member);
    auto w = member_W(anti1, Domain::Nat);
    CHECK_FALSE(w.member);
    CHECK(w.witness.has_value());

    for (int a = 0; a <= 3; ++a) {
        CHECK(member_W(teichmuller(a, 4), Domain::Nat).member);
        CHECK(member_WSch(teichmuller(a, 4), Domain::Nat).member);
    }

    // membership in W implies membership in WSch (Kostka positivity)
    Rng rng(79);
    int checked = 0;
    for (int i = 0; i < 40; ++i) {
        WittVector x = random_witt(rng, 4);
        if (member_W(x, Domain::Nat).member) {
            CHECK(member_WSch(x, Domain::Nat).member);
            ++checked;
        }
    }
    // random sums of Teichmueller lifts are always members
    for (int i = 0; i < 10; ++i) {
        WittVector x(4);
        int terms = rng.integer(1, 3);
        for (int t = 0; t < terms; ++t)
            x = add(x, teichmuller(rng.integer(0, 3), 4));
        CHECK(member_W(x, Domain::Nat).member);
        CHECK(member_WSch(x, Domain::Nat).member);
        ++checked;
    }
    CHECK(checked > 0);
}

TEST_CASE("membership closure under sum and product") {
    Rng rng(83);
    for (int i = 0; i < 10; ++i) {
        WittVector x(4), y(4);
        for (int t = 0; t < 2; ++t) {
            x = add(x, teichmuller(rng.integer(0, 3), 4));
            y = add(y, teichmuller(rng.integer(0, 3), 4));
        }
        CHECK(member_W(add(x, y), Domain::Nat).member);
        CHECK(member_W(mul(x, y), Domain::Nat).member);
    }
}

TEST_CASE("membership witnesses") {
    // ghost <0,1,0,0> is not effective: m_{1,1} value is -1/2
    WittVector x = WittVector::from_ghost(R({0, 1, 0, 0}));
    auto rep = member_W(x, Domain::Nat);
    CHECK_FALSE(rep.member);
    REQUIRE(rep.witness.has_value());
    CHECK(*rep.witness == P({1, 1}));
    CHECK(rep.value == Rat(-1, 2));
}

TEST_CASE("effectivity expressions") {
    auto m2 = effectivity_expressions(BasisTag::m, 2);
    REQUIRE(m2.size() == 3);
    CHECK(m2[0].first == P({1}));
    CHECK(m2[0].second == SymFunc::psi(1, 2));
    CHECK(m2[1].first == P({2}));
    CHECK(m2[1].second == SymFunc::psi(2, 2));
    CHECK(m2[2].first == P({1, 1}));
    CHECK(m2[2].second == from_basis(BasisTag::e, P({2}), 2));

    auto s2 = effectivity_expressions(BasisTag::s, 2);
    REQUIRE(s2.size() == 3);
    CHECK(s2[1].second == from_basis(BasisTag::h, P({2}), 2));
    CHECK(s2[2].second == from_basis(BasisTag::e, P({2}), 2));

    auto s1 = effectivity_expressions(BasisTag::s, 1);
    REQUIRE(s1.size() == 1);
    CHECK(s1[0].second == SymFunc::psi(1, 1));

    CHECK_THROWS_AS(effectivity_expressions(BasisTag::h, 2), std::invalid_argument);
}

TEST_CASE("membership over the other domains") {
    // [-2] has integral but sign-alternating monomial values
    WittVector neg = teichmuller(-2, 4);
    CHECK(member_W(neg, Domain::Integer).member);
    CHECK_FALSE(member_W(neg, Domain::Nat).member);
    CHECK_FALSE(member_W(neg, Domain::NonnegRat).member);
    CHECK(member_W(neg, Domain::Rational).member);
    // [1/2] is nonnegative but not integral
    WittVector half = teichmuller(Rat(1, 2), 4);
    CHECK(member_W(half, Domain::NonnegRat).member);
    CHECK_FALSE(member_W(half, Domain::Integer).member);
    CHECK(member_WSch(half, Domain::NonnegRat).member);
}

TEST_CASE("domains") {
    CHECK(domain_contains(Domain::Nat, Rat(3)));
    CHECK_FALSE(domain_contains(Domain::Nat, Rat(-3)));
    CHECK_FALSE(domain_contains(Domain::Nat, Rat(1, 2)));
    CHECK(domain_contains(Domain::Integer, Rat(-3)));
    CHECK_FALSE(domain_contains(Domain::Integer, Rat(1, 2)));
    CHECK(domain_contains(Domain::NonnegRat, Rat(1, 2)));
    CHECK_FALSE(domain_contains(Domain::NonnegRat, Rat(-1, 2)));
    CHECK(domain_contains(Domain::Rational, Rat(-1, 2)));
    CHECK(domain_parse("nat") == Domain::Nat);
    CHECK(domain_parse("qplus") == Domain::NonnegRat);
    CHECK_THROWS_AS(domain_parse("bogus"), parse_error);
}
