#include "wittforge/verify.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>

#include <json.hpp>

#include "wittforge/fixtures.hpp"
#include "wittforge/ptypical.hpp"
#include "wittforge/textio.hpp"

namespace wittforge {

namespace {

using Clock = std::chrono::steady_clock;

struct Checker {
    VerificationReport rep;
    Clock::time_point start = Clock::now();

    explicit Checker(std::string name) {
        rep.name = std::move(name);
        rep.pass = true;
    }
    void expect(bool ok, const std::string& what) {
        rep.details.push_back(std::string(ok ? "ok: " : "FAIL: ") + what);
        rep.pass = rep.pass && ok;
    }
    void note(const std::string& what) { rep.details.push_back("-- " + what); }
    VerificationReport finish() {
        rep.ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
        return rep;
    }
};

int bound_for(const VerifyOptions& opts, int needed) {
    if (opts.max_degree == 0) return needed;
    if (opts.max_degree < needed)
        throw capacity_error("check needs degree bound " + std::to_string(needed) +
                             ", got " + std::to_string(opts.max_degree));
    return opts.max_degree;
}

std::string rep_positivity(const PositivityReport& r) {
    std::ostringstream os;
    if (r.nonnegative) os << "nonnegative";
    else
        os << "negative at " << r.negative_witness->str() << " = "
           << rat_str(r.negative_value);
    os << (r.integral ? ", integral" : ", non-integral");
    return os.str();
}

Rat random_rat(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
    Rat q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

}  // namespace

VerificationReport verify_theta_table(const VerifyOptions& opts) {
    Checker ck("theta-table");
    int bound = bound_for(opts, 6);
    for (const auto& row : fixtures::theta_table()) {
        SymFunc th = theta(row.n, bound);
        SymFunc expected_psi =
            scale(Rat(1, row.psi_denominator), parse_symfunc(row.psi_numerator, bound));
        ck.expect(th == expected_psi, "theta_" + std::to_string(row.n) + " psi expansion");
        ck.expect(th == parse_symfunc(row.m, bound),
                  "theta_" + std::to_string(row.n) + " m expansion");
        ck.expect(th == parse_symfunc(row.e, bound),
                  "theta_" + std::to_string(row.n) + " e expansion");
        ck.expect(th == parse_symfunc(row.h, bound),
                  "theta_" + std::to_string(row.n) + " h expansion");
        ck.expect(th == parse_symfunc(row.s, bound),
                  "theta_" + std::to_string(row.n) + " s expansion");
    }
    return ck.finish();
}

VerificationReport verify_generating_identity(const VerifyOptions& opts) {
    Checker ck("generating-identity");
    int d = bound_for(opts, 10);
    using Series = std::vector<SymFunc>;  // coefficient of t^i at index i
    auto mul = [&](const Series& a, const Series& b) {
        Series out(static_cast<size_t>(d) + 1, SymFunc::zero(d));
        for (size_t i = 0; i < a.size() && i <= static_cast<size_t>(d); ++i)
            for (size_t j = 0; i + j <= static_cast<size_t>(d) && j < b.size(); ++j)
                out[i + j] = add(out[i + j], multiply(a[i], b[j]));
        return out;
    };
    auto invert = [&](const Series& a) {
        Series out(static_cast<size_t>(d) + 1, SymFunc::zero(d));
        out[0] = SymFunc::one(d);
        for (int k = 1; k <= d; ++k) {
            SymFunc s = SymFunc::zero(d);
            for (int i = 1; i <= k; ++i)
                s = add(s, multiply(a[static_cast<size_t>(i)],
                                    out[static_cast<size_t>(k - i)]));
            out[static_cast<size_t>(k)] = negate(s);
        }
        return out;
    };

    Series h_series(static_cast<size_t>(d) + 1, SymFunc::zero(d));
    for (int i = 0; i <= d; ++i)
        h_series[static_cast<size_t>(i)] =
            i == 0 ? SymFunc::one(d) : from_basis(BasisTag::h, Partition::single(i), d);

    Series theta_product(static_cast<size_t>(d) + 1, SymFunc::zero(d));
    theta_product[0] = SymFunc::one(d);
    for (int dd = 1; dd <= d; ++dd) {
        // geometric series for (1 - theta_dd t^dd)^{-1}
        Series geo(static_cast<size_t>(d) + 1, SymFunc::zero(d));
        SymFunc pw = SymFunc::one(d);
        for (int j = 0; j * dd <= d; ++j) {
            geo[static_cast<size_t>(j * dd)] = pw;
            if ((j + 1) * dd <= d) pw = multiply(pw, theta(dd, d));
        }
        theta_product = mul(theta_product, geo);
    }
    bool theta_ok = true;
    for (int i = 0; i <= d; ++i)
        theta_ok = theta_ok && (theta_product[static_cast<size_t>(i)] ==
                                h_series[static_cast<size_t>(i)]);
    ck.expect(theta_ok, "prod (1 - theta_d t^d)^{-1} = sum h_i t^i mod t^" +
                            std::to_string(d + 1));

    Series e_alt(static_cast<size_t>(d) + 1, SymFunc::zero(d));
    for (int i = 0; i <= d; ++i) {
        SymFunc e = i == 0 ? SymFunc::one(d) : from_basis(BasisTag::e, Partition::single(i), d);
        e_alt[static_cast<size_t>(i)] = (i % 2 == 0) ? e : negate(e);
    }
    Series e_inv = invert(e_alt);
    bool e_ok = true;
    for (int i = 0; i <= d; ++i)
        e_ok = e_ok && (e_inv[static_cast<size_t>(i)] == h_series[static_cast<size_t>(i)]);
    ck.expect(e_ok, "(sum e_i (-t)^i)^{-1} = sum h_i t^i mod t^" + std::to_string(d + 1));

    for (int n = 1; n <= d; ++n) {
        SymFunc rhs = SymFunc::zero(d);
        for (int dd = 1; dd <= n; ++dd) {
            if (n % dd != 0) continue;
            rhs = add(rhs, scale(dd, power(theta(dd, d), n / dd)));
        }
        ck.expect(SymFunc::psi(n, d) == rhs,
                  "psi_" + std::to_string(n) + " = sum_{d|n} d theta_d^{n/d}");
    }
    return ck.finish();
}

VerificationReport verify_non_models(const VerifyOptions& opts) {
    Checker ck("non-models");
    int bound = bound_for(opts, 5);
    auto T = [](const SymFunc& a, const SymFunc& b) { return TensorSymFunc::tensor(a, b); };
    auto elt = [&](BasisTag t, std::vector<int> parts) {
        return from_basis(t, Partition(std::move(parts)), bound);
    };

    {
        SymFunc e1 = elt(BasisTag::e, {1}), e2 = elt(BasisTag::e, {2});
        TensorSymFunc expected =
            T(e2, e1 * e1) + T(e1 * e1, e2) - scale(2, T(e2, e2));
        ck.expect(coproduct_mul(e2) == expected,
                  "Delta_x(e_2) = e_2(x)e_1^2 + e_1^2(x)e_2 - 2 e_2(x)e_2");
        auto coeffs = tensor_to_basis_coeffs(coproduct_mul(e2), BasisTag::e);
        Partition two({2});
        ck.expect(coeffs.at({two, two}) == -2, "e-coefficient at e_2(x)e_2 is -2");
    }
    {
        SymFunc h1 = elt(BasisTag::h, {1}), h2 = elt(BasisTag::h, {2});
        SymFunc h11 = h1 * h1;
        TensorSymFunc expected =
            T(h11, h11) - T(h11, h2) - T(h2, h11) + scale(2, T(h2, h2));
        ck.expect(coproduct_mul(h2) == expected,
                  "Delta_x(h_2) = h_1^2(x)h_1^2 - h_1^2(x)h_2 - h_2(x)h_1^2 + 2 h_2(x)h_2");
        auto coeffs = tensor_to_basis_coeffs(coproduct_mul(h2), BasisTag::h);
        Partition two({2}), oneone({1, 1});
        ck.expect(coeffs.at({two, two}) == 2, "h-coefficient at h_2(x)h_2 is +2");
        ck.expect(coeffs.at({two, oneone}) == -1, "h-coefficient at h_2(x)h_1^2 is -1");
        // Co-addition stays h-positive even though co-multiplication does not.
        for (int n = 1; n <= 5; ++n) {
            auto plus = tensor_to_basis_coeffs(
                coproduct_add(elt(BasisTag::h, {n})), BasisTag::h);
            bool ok = std::all_of(plus.begin(), plus.end(),
                                  [](const auto& kv) { return kv.second >= 0; });
            ck.expect(ok, "Delta_+(h_" + std::to_string(n) + ") is h-positive");
        }
    }
    for (int p : {2, 3, 5}) {
        SymFunc th = theta(p, bound);
        SymFunc th1 = theta(1, bound);
        SymFunc one = SymFunc::one(bound);
        TensorSymFunc expected_add = T(th, one) + T(one, th);
        for (int i = 1; i <= p - 1; ++i) {
            Rat c = Rat(binomial(static_cast<unsigned long>(p),
                                 static_cast<unsigned long>(i))) /
                    Rat(p);
            expected_add = expected_add - scale(c, T(power(th1, i), power(th1, p - i)));
        }
        ck.expect(coproduct_add(th) == expected_add,
                  "Delta_+(theta_" + std::to_string(p) + ") matches the displayed formula");
        TensorSymFunc expected_mul =
            T(th, power(th1, p)) + T(power(th1, p), th) + scale(p, T(th, th));
        ck.expect(coproduct_mul(th) == expected_mul,
                  "Delta_x(theta_" + std::to_string(p) + ") matches the displayed formula");
    }
    return ck.finish();
}

VerificationReport verify_schur_shadow(const VerifyOptions& opts) {
    Checker ck("schur-shadow");
    int bound = bound_for(opts, 5);
    for (int n = 1; n <= 5; ++n) {
        for (const auto& lambda : partitions_of(n)) {
            SymFunc s = from_basis(BasisTag::s, lambda, bound);
            auto check_tensor = [&](const TensorSymFunc& t, const std::string& which) {
                auto coeffs = tensor_to_basis_coeffs(t, BasisTag::s);
                bool nonneg = true, integral = true;
                for (const auto& [key, c] : coeffs) {
                    nonneg = nonneg && c >= 0;
                    integral = integral && is_integer(c);
                }
                ck.expect(nonneg && integral,
                          which + "(s_" + lambda.str() + ") has nonnegative integral s(x)s coefficients");
            };
            check_tensor(coproduct_add(s), "Delta_+");
            check_tensor(coproduct_mul(s), "Delta_x");
            auto rep = is_monomial_positive(s);
            ck.expect(rep.nonnegative && rep.integral,
                      "s_" + lambda.str() + " is monomial-positive (Kostka)");
        }
    }
    return ck.finish();
}

VerificationReport verify_reutenauer(const VerifyOptions& opts) {
    Checker ck("reutenauer");
    int n_max = opts.max_degree == 0 ? 12 : bound_for(opts, 12);
    ck.expect(is_schur_positive(theta(1, n_max)).nonnegative, "theta_1 is Schur-positive");
    for (int n = 2; n <= n_max; ++n) {
        auto rep = is_schur_positive(negate(theta(n, n_max)));
        ck.expect(rep.nonnegative && rep.integral,
                  "-theta_" + std::to_string(n) + ": " + rep_positivity(rep));
    }
    auto inverted = is_schur_positive(theta(2, n_max));
    ck.expect(!inverted.nonnegative, "sanity inversion: theta_2 itself is not Schur-positive");
    return ck.finish();
}

namespace {

SymFunc d_iterate(int p, int times, int bound) {
    SymFunc f = SymFunc::psi(1, bound);
    for (int i = 0; i < times; ++i) f = plethysm(d_op(p, bound), f);
    return f;
}

}  // namespace

VerificationReport verify_dp_iterates(const VerifyOptions& opts) {
    Checker ck("dp-iterates");
    struct Case {
        int p, m, n;
    };
    const std::vector<Case> cases = {{2, 1, 1}, {2, 1, 2}, {2, 2, 1}, {3, 1, 1}};
    auto ipow = [](int b, int e) {
        int r = 1;
        while (e-- > 0) r *= b;
        return r;
    };
    for (const auto& c : cases) {
        int degree = ipow(c.p, c.m + c.n);
        int bound = bound_for(opts, degree);
        SymFunc lhs = d_op(degree, bound);
        SymFunc rhs =
            plethysm(d_op(ipow(c.p, c.m), bound), d_op(ipow(c.p, c.n), bound));
        auto rep = is_schur_positive(sub(lhs, rhs));
        std::ostringstream os;
        os << "d_" << degree << " - d_" << ipow(c.p, c.m) << " o d_" << ipow(c.p, c.n)
           << " (p=" << c.p << "): " << rep_positivity(rep);
        ck.expect(rep.nonnegative && rep.integral, os.str());
    }
    {
        // d_8 - d_2 composed three times
        int bound = bound_for(opts, 8);
        auto rep = is_schur_positive(sub(d_op(8, bound), d_iterate(2, 3, bound)));
        ck.expect(rep.nonnegative && rep.integral,
                  "d_8 - d_2 o d_2 o d_2: " + rep_positivity(rep));
    }
    if (opts.slow) {
        int bound = bound_for(opts, 25);
        auto rep = is_schur_positive(sub(d_op(25, bound), d_iterate(5, 2, bound)));
        ck.expect(rep.nonnegative && rep.integral,
                  "d_25 - d_5 o d_5 (p=5): " + rep_positivity(rep));
    } else {
        ck.note("d_25 - d_5 o d_5 skipped; enable with --slow");
    }
    return ck.finish();
}

VerificationReport verify_drs(const VerifyOptions& opts) {
    Checker ck("drs");
    struct Case {
        int r, s;
        bool positive;
    };
    const std::vector<Case> cases = {{2, 3, true}, {2, 5, true},  {3, 5, true},
                                     {5, 3, true}, {3, 2, false}, {5, 2, false}};
    for (const auto& c : cases) {
        int bound = bound_for(opts, c.r * c.s);
        SymFunc diff = sub(d_op(c.r * c.s, bound),
                           plethysm(d_op(c.r, bound), d_op(c.s, bound)));
        auto rep = is_schur_positive(diff);
        std::ostringstream os;
        os << "d_" << c.r * c.s << " - d_" << c.r << " o d_" << c.s << ": "
           << rep_positivity(rep) << " (expected "
           << (c.positive ? "positive" : "not positive") << ")";
        ck.expect(rep.nonnegative == c.positive, os.str());
        if (!c.positive)
            ck.expect(rep.negative_witness.has_value(), "negative witness recorded");
    }
    return ck.finish();
}

VerificationReport verify_effectivity_lists(const VerifyOptions& opts) {
    Checker ck("effectivity-lists");
    int bound = bound_for(opts, 4);
    auto run = [&](BasisTag tag, const std::vector<fixtures::GhostPolyEntry>& fixture,
                   const std::string& label) {
        auto exprs = effectivity_expressions(tag, bound > 4 ? 4 : bound);
        ck.expect(exprs.size() == fixture.size(),
                  label + " list has " + std::to_string(fixture.size()) + " expressions");
        for (const auto& fx : fixture) {
            Partition lambda = Partition::parse(fx.lambda);
            auto it = std::find_if(exprs.begin(), exprs.end(),
                                   [&](const auto& pr) { return pr.first == lambda; });
            if (it == exprs.end()) {
                ck.expect(false, label + " expression for " + lambda.str() + " missing");
                continue;
            }
            std::string rendered = render_ghost_poly(it->second, Int(fx.denominator));
            ck.expect(rendered == fx.printed,
                      label + " " + lambda.str() + ": " + rendered + " == " + fx.printed);
        }
    };
    run(BasisTag::m, fixtures::effectivity_monomial(), "monomial");
    run(BasisTag::s, fixtures::effectivity_schur(), "Schur");
    for (const char* grouped : fixtures::effectivity_schur_grouped())
        ck.note(std::string("printed form: ") + grouped);
    return ck.finish();
}

VerificationReport verify_kschur_counterexample(const VerifyOptions& opts) {
    Checker ck("kschur-counterexample");
    int bound = bound_for(opts, 4);
    const auto& data = fixtures::kschur_data();
    SymFunc twelve = parse_symfunc(data.twelve_s22_psi, bound);

    // Order of psi monomials matching the expansion rows.
    const std::vector<Partition> psi_monomials = {
        Partition({1, 1, 1, 1}), Partition({2, 2}), Partition({3, 1})};
    const std::vector<Rat> comb = {Rat(data.combination[0]), Rat(data.combination[1]),
                                   Rat(data.combination[2])};

    // Sanity: the printed combination reconstructs 12 s22 in the s3 basis,
    // i.e. sum_r comb_r * expansions[r] = (0, 0, 12, 0).
    {
        std::vector<Rat> v(4, Rat(0));
        for (size_t r = 0; r < 3; ++r)
            for (size_t cidx = 0; cidx < 4; ++cidx)
                v[cidx] += comb[r] * Rat(data.expansions[r][cidx]);
        bool ok = v[0] == 0 && v[1] == 0 && v[2] == 12 && v[3] == 0;
        ck.expect(ok, "the four printed equalities are mutually consistent");
        // And the psi side matches termwise.
        SymFunc rebuilt(bound);
        for (size_t r = 0; r < 3; ++r)
            rebuilt = add(rebuilt, SymFunc::psi_term(psi_monomials[r], comb[r], bound));
        ck.expect(rebuilt == twelve, "12 s3_22 reconstructs psi_1^4 + 3 psi_2^2 - 4 psi_1 psi_3");
    }

    // Data matrix must have full row rank (3) over the four s3 coordinates.
    {
        std::vector<std::vector<Rat>> m;
        for (const auto& row : data.expansions) {
            std::vector<Rat> r;
            for (long v : row) r.emplace_back(v);
            m.push_back(std::move(r));
        }
        int rank = 0;
        size_t lead = 0;
        for (size_t r = 0; r < m.size() && lead < 4; ++r) {
            size_t piv = r;
            while (piv < m.size() && m[piv][lead] == 0) {
                ++piv;
                if (piv == m.size()) {
                    piv = r;
                    ++lead;
                    if (lead == 4) break;
                }
            }
            if (lead == 4) break;
            std::swap(m[piv], m[r]);
            Rat d = m[r][lead];
            for (auto& x : m[r]) x /= d;
            for (size_t rr = 0; rr < m.size(); ++rr) {
                if (rr == r || m[rr][lead] == 0) continue;
                Rat f = m[rr][lead];
                for (size_t cc = 0; cc < 4; ++cc) m[rr][cc] -= f * m[r][cc];
            }
            ++rank;
            ++lead;
        }
        if (rank != 3) throw std::runtime_error("data-entry error: singular expansion matrix");
        ck.expect(true, "expansion data has full rank");
    }

    // Delta_x(s3_22) in s3 (x) s3 coordinates:
    // (1/12) sum_r comb_r (row_r (x) row_r).
    std::vector<std::vector<Rat>> tensor(4, std::vector<Rat>(4, Rat(0)));
    for (size_t r = 0; r < 3; ++r)
        for (size_t i = 0; i < 4; ++i)
            for (size_t j = 0; j < 4; ++j)
                tensor[i][j] += comb[r] * Rat(data.expansions[r][i]) *
                                Rat(data.expansions[r][j]) / Rat(12);
    const char* names[4] = {"[1,1,1,1]", "[2,1,1]", "[2,2]", "[3,1]"};
    bool has_negative = false;
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j)
            if (tensor[i][j] < 0) {
                if (!has_negative)
                    ck.note(std::string("negative coefficient at s3_") + names[i] +
                            " (x) s3_" + names[j] + " = " + rat_str(tensor[i][j]));
                has_negative = true;
            }
    ck.expect(has_negative, "Delta_x(s3_22) has a negative s3 (x) s3 coefficient");
    ck.expect(tensor[1][2] == -1, "coefficient at s3_[2,1,1] (x) s3_[2,2] equals -1");

    // The same tensor expands nonnegatively in ordinary Schur coordinates.
    TensorSymFunc t = scale(Rat(1, 12), coproduct_mul(twelve));
    auto coeffs = tensor_to_basis_coeffs(t, BasisTag::s);
    bool nonneg = true, integral = true;
    for (const auto& [key, c] : coeffs) {
        nonneg = nonneg && c >= 0;
        integral = integral && is_integer(c);
    }
    ck.expect(nonneg && integral, "the s (x) s expansion is nonnegative and integral");
    return ck.finish();
}

VerificationReport verify_intro_ring_laws(const VerifyOptions& opts) {
    Checker ck("intro-ring-laws");
    std::mt19937 rng(opts.seed);
    for (int p : {2, 3, 5}) {
        // 0 and 1 in Witt coordinates.
        auto to_theta = [](const PTypWitt& w) {
            return std::array<Rat, 2>{w.at(0, 0), -w.at(0, 1)};
        };
        auto zero_theta = to_theta(ptyp_zero(p, 1));
        auto one_theta = to_theta(ptyp_one(p, 1));
        ck.expect(zero_theta[0] == 0 && zero_theta[1] == 0,
                  "p=" + std::to_string(p) + ": 0 = (0,0)");
        ck.expect(one_theta[0] == 1 && one_theta[1] == 0,
                  "p=" + std::to_string(p) + ": 1 = (1,0)");

        auto grid_from_theta = [&](const Rat& t0, const Rat& t1) {
            std::map<PTypWitt::Cell, Rat> g;
            g[{0, 0}] = t0;
            g[{0, 1}] = -t1;
            g[{1, 0}] = rat_pow(t0, static_cast<unsigned long>(p)) + Rat(p) * t1;
            return PTypWitt(p, 1, std::move(g));
        };
        bool add_ok = true, mul_ok = true;
        for (int trial = 0; trial < 25; ++trial) {
            std::array<Rat, 2> a{random_rat(rng), random_rat(rng)};
            std::array<Rat, 2> b{random_rat(rng), random_rat(rng)};
            PTypWitt wa = grid_from_theta(a[0], a[1]);
            PTypWitt wb = grid_from_theta(b[0], b[1]);
            auto sum = to_theta(ptyp_add(wa, wb));
            auto prod = to_theta(ptyp_mul(wa, wb));
            auto expected_sum = k1_add_theta(p, a, b);
            auto expected_prod = k1_mul_theta(p, a, b);
            add_ok = add_ok && sum == expected_sum;
            mul_ok = mul_ok && prod == expected_prod;
        }
        ck.expect(add_ok, "p=" + std::to_string(p) +
                              ": ghost addition agrees with the Witt-coordinate sum law");
        ck.expect(mul_ok, "p=" + std::to_string(p) +
                              ": ghost product agrees with the Witt-coordinate product law");
    }
    return ck.finish();
}

// --- registry ---------------------------------------------------------------------

namespace {

using CheckFn = VerificationReport (*)(const VerifyOptions&);

const std::vector<std::pair<std::string, CheckFn>>& registry() {
    static const std::vector<std::pair<std::string, CheckFn>> checks = {
        {"dp-iterates", verify_dp_iterates},
        {"drs", verify_drs},
        {"effectivity-lists", verify_effectivity_lists},
        {"generating-identity", verify_generating_identity},
        {"intro-ring-laws", verify_intro_ring_laws},
        {"kschur-counterexample", verify_kschur_counterexample},
        {"non-models", verify_non_models},
        {"reutenauer", verify_reutenauer},
        {"schur-shadow", verify_schur_shadow},
        {"theta-table", verify_theta_table},
    };
    return checks;
}

}  // namespace

std::vector<std::string> verify_check_names() {
    std::vector<std::string> names;
    for (const auto& [name, fn] : registry()) names.push_back(name);
    return names;
}

std::vector<VerificationReport> run_paper_suite(std::vector<std::string> names,
                                                const VerifyOptions& opts) {
    if (names.empty()) names = verify_check_names();
    std::sort(names.begin(), names.end());
    std::vector<VerificationReport> out;
    for (const auto& name : names) {
        auto it = std::find_if(registry().begin(), registry().end(),
                               [&](const auto& pr) { return pr.first == name; });
        if (it == registry().end())
            throw std::invalid_argument("unknown check '" + name + "'");
        out.push_back(it->second(opts));
    }
    return out;
}

// --- cache file --------------------------------------------------------------------

bool cache_load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) return false;
    json j;
    try {
        in >> j;
        if (!j.contains("schema") || j.at("schema").get<int>() != 1) return false;
        CacheSnapshot snap;
        if (j.contains("characters"))
            snap.characters =
                j.at("characters").get<std::map<std::string, std::string>>();
        if (j.contains("m_rows"))
            snap.monomial_rows =
                j.at("m_rows")
                    .get<std::map<std::string, std::map<std::string, std::string>>>();
        cache_import(snap);
        return true;
    } catch (const std::exception&) {
        return false;
    }
}

bool cache_save_file(const std::string& path) {
    CacheSnapshot snap = cache_export();
    int max_weight = 0;
    for (const auto& [key, value] : snap.monomial_rows) {
        try {
            max_weight = std::max(max_weight, Partition::parse(key).weight());
        } catch (const std::exception&) {
        }
    }
    json j;
    j["schema"] = 1;
    j["degree_bound"] = max_weight;
    j["characters"] = snap.characters;
    j["m_rows"] = snap.monomial_rows;
    std::ofstream out(path);
    if (!out) return false;
    out << j.dump(1) << "\n";
    return out.good();
}

}  // namespace wittforge
