#include "wittforge/totalpos.hpp"

#include <algorithm>

namespace wittforge {

TruncSeries::TruncSeries(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("series needs order >= 1");
}

Rat TruncSeries::at(int m) const {
    if (m == 0) return 1;
    if (m < 0 || m > order()) return 0;
    return coeffs_[static_cast<size_t>(m - 1)];
}

bool TruncSeries::integral() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Rat& c) { return is_integer(c); });
}

int TruncSeries::poly_degree() const {
    for (int m = order(); m >= 1; --m)
        if (at(m) != 0) return m;
    return 0;
}

namespace {

Rat det(const std::vector<std::vector<Rat>>& m) {
    size_t n = m.size();
    std::vector<std::vector<Rat>> a = m;
    Rat result = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != col) {
            std::swap(a[piv], a[col]);
            result = -result;
        }
        result *= a[col][col];
        for (size_t r = col + 1; r < n; ++r) {
            if (a[r][col] == 0) continue;
            Rat f = a[r][col] / a[col][col];
            for (size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
        }
    }
    return result;
}

Rat toeplitz_minor(const TruncSeries& s, const std::vector<int>& rows,
                   const std::vector<int>& cols) {
    size_t q = rows.size();
    std::vector<std::vector<Rat>> m(q, std::vector<Rat>(q));
    for (size_t r = 0; r < q; ++r)
        for (size_t c = 0; c < q; ++c) m[r][c] = s.at(rows[r] - cols[c]);
    return det(m);
}

// Lexicographic enumeration of size-q subsets of 0..n.
bool next_subset(std::vector<int>& sel, int n) {
    int q = static_cast<int>(sel.size());
    for (int i = q - 1; i >= 0; --i) {
        if (sel[static_cast<size_t>(i)] < n - (q - 1 - i)) {
            ++sel[static_cast<size_t>(i)];
            for (int j = i + 1; j < q; ++j)
                sel[static_cast<size_t>(j)] = sel[static_cast<size_t>(j - 1)] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

ToeplitzReport toeplitz_minors_nonneg(const TruncSeries& s, int max_order,
                                      SeriesView view) {
    if (max_order < 1) throw std::invalid_argument("minor order must be >= 1");
    if (max_order > 6) throw capacity_error("minor order capped at 6");
    // In the polynomial view indices may run past n; the window 0..n+q
    // covers every minor that is not already zero from the band structure.
    int n = s.order();
    ToeplitzReport rep;
    for (int q = 1; q <= max_order; ++q) {
        int window = view == SeriesView::Polynomial ? n + q : n;
        std::vector<int> rows(static_cast<size_t>(q));
        for (int i = 0; i < q; ++i) rows[static_cast<size_t>(i)] = i;
        do {
            std::vector<int> cols(static_cast<size_t>(q));
            for (int i = 0; i < q; ++i) cols[static_cast<size_t>(i)] = i;
            do {
                // If j_s > i_s anywhere the matrix carries a zero block too
                // large to avoid, so the minor vanishes.
                bool dominated = true;
                for (int i = 0; i < q && dominated; ++i)
                    dominated = cols[static_cast<size_t>(i)] <= rows[static_cast<size_t>(i)];
                if (!dominated) continue;
                Rat v = toeplitz_minor(s, rows, cols);
                if (v < 0) {
                    rep.nonnegative = false;
                    rep.witness = MinorWitness{rows, cols, v};
                    return rep;
                }
            } while (next_subset(cols, window));
        } while (next_subset(rows, window));
    }
    return rep;
}

Rat skew_schur_witness(const TruncSeries& s, const Partition& lambda,
                       const Partition& mu) {
    if (mu.length() > lambda.length())
        throw std::invalid_argument("inner shape longer than outer shape");
    for (int i = 0; i < mu.length(); ++i)
        if (mu.part(i) > lambda.part(i))
            throw std::invalid_argument("inner shape not contained in outer shape");
    if (lambda.max_part() > s.order())
        throw std::invalid_argument("shape exceeds series order");
    int q = lambda.length();
    if (q == 0) return 1;
    std::vector<std::vector<Rat>> m(static_cast<size_t>(q),
                                    std::vector<Rat>(static_cast<size_t>(q)));
    for (int i = 1; i <= q; ++i)
        for (int j = 1; j <= q; ++j) {
            int mu_j = j <= mu.length() ? mu.part(j - 1) : 0;
            m[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] =
                s.at(lambda.part(i - 1) - mu_j - i + j);
        }
    return det(m);
}

// --- exact univariate polynomials over Q -------------------------------------

namespace {

using Poly = std::vector<Rat>;  // coefficients, constant term first

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Poly derivative(const Poly& p) {
    Poly d;
    for (size_t i = 1; i < p.size(); ++i) d.push_back(Rat(static_cast<long>(i)) * p[i]);
    trim(d);
    return d;
}

Poly monic(Poly p) {
    trim(p);
    if (p.empty()) return p;
    Rat lead = p.back();
    for (auto& c : p) c /= lead;
    return p;
}

// Euclidean remainder.
Poly rem(Poly a, const Poly& b) {
    trim(a);
    while (degree(a) >= degree(b) && !a.empty()) {
        Rat f = a.back() / b.back();
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        trim(a);
    }
    return a;
}

Poly quot(Poly a, const Poly& b) {
    trim(a);
    if (degree(a) < degree(b)) return {};
    Poly q(a.size() - b.size() + 1, Rat(0));
    while (degree(a) >= degree(b) && !a.empty()) {
        Rat f = a.back() / b.back();
        size_t shift = a.size() - b.size();
        q[shift] = f;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        trim(a);
    }
    return q;
}

Poly gcd(Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = rem(a, b);
        a = std::move(b);
        b = monic(std::move(r));
    }
    return monic(std::move(a));
}

// Yun: f = prod_i out[i].first ^ out[i].second with square-free factors.
std::vector<std::pair<Poly, int>> squarefree_decomposition(Poly f) {
    std::vector<std::pair<Poly, int>> out;
    f = monic(std::move(f));
    if (degree(f) < 1) return out;
    Poly c = gcd(f, derivative(f));
    Poly w = quot(f, c);
    int i = 1;
    while (degree(w) > 0) {
        Poly y = gcd(w, c);
        Poly z = quot(w, y);
        if (degree(z) > 0) out.emplace_back(monic(std::move(z)), i);
        w = y;
        c = quot(c, w);
        ++i;
    }
    return out;
}

int sign_of(const Rat& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

// Sign variations in a sequence, zeros skipped.
int variations(const std::vector<int>& signs) {
    int count = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

// Number of real roots of a square-free polynomial in the open interval
// (-inf, 0), by Sturm's theorem.
int sturm_roots_negative(const Poly& f) {
    if (degree(f) < 1) return 0;
    std::vector<Poly> chain{f, derivative(f)};
    while (degree(chain.back()) > 0) {
        Poly r = rem(chain[chain.size() - 2], chain.back());
        trim(r);
        if (r.empty()) break;
        for (auto& c : r) c = -c;
        chain.push_back(std::move(r));
    }
    std::vector<int> at_minus_inf, at_zero;
    for (const Poly& p : chain) {
        if (p.empty()) {
            at_minus_inf.push_back(0);
            at_zero.push_back(0);
            continue;
        }
        int lead = sign_of(p.back());
        at_minus_inf.push_back(degree(p) % 2 == 0 ? lead : -lead);
        at_zero.push_back(sign_of(p.front()));
    }
    return variations(at_minus_inf) - variations(at_zero);
}

}  // namespace

bool nonpositive_real_roots(const TruncSeries& s) {
    if (!s.integral())
        throw std::invalid_argument("root criterion requires integer coefficients");
    int d = s.poly_degree();
    if (d == 0) return true;
    Poly f;
    for (int m = 0; m <= d; ++m) f.push_back(s.at(m));
    // f(0) = 1, so all nonpositive roots lie in (-inf, 0).
    int count = 0;
    for (const auto& [g, mult] : squarefree_decomposition(f))
        count += mult * sturm_roots_negative(g);
    return count == d;
}

TruncSeries edrei_thoma_truncation(const Rat& gamma, const std::vector<Rat>& alphas,
                                   const std::vector<Rat>& betas, int n) {
    if (n < 1) throw std::invalid_argument("truncation order must be >= 1");
    if (gamma < 0) throw std::invalid_argument("gamma must be nonnegative");
    for (const Rat& a : alphas)
        if (a < 0) throw std::invalid_argument("alpha parameters must be nonnegative");
    for (const Rat& b : betas)
        if (b < 0) throw std::invalid_argument("beta parameters must be nonnegative");

    std::vector<Rat> acc(static_cast<size_t>(n) + 1, Rat(0));
    acc[0] = 1;
    // e^{gamma t}
    Rat pw = 1;
    for (int m = 1; m <= n; ++m) {
        pw *= gamma;
        acc[static_cast<size_t>(m)] = pw / Rat(factorial(static_cast<unsigned long>(m)));
    }
    auto mul_by = [&](const std::vector<Rat>& g) {
        std::vector<Rat> out(static_cast<size_t>(n) + 1, Rat(0));
        for (int i = 0; i <= n; ++i) {
            if (acc[static_cast<size_t>(i)] == 0) continue;
            for (int j = 0; i + j <= n; ++j)
                out[static_cast<size_t>(i + j)] +=
                    acc[static_cast<size_t>(i)] * g[static_cast<size_t>(j)];
        }
        acc = std::move(out);
    };
    for (const Rat& a : alphas) {
        std::vector<Rat> lin(static_cast<size_t>(n) + 1, Rat(0));
        lin[0] = 1;
        if (n >= 1) lin[1] = a;
        mul_by(lin);
    }
    for (const Rat& b : betas) {
        std::vector<Rat> geo(static_cast<size_t>(n) + 1, Rat(0));
        Rat bp = 1;
        for (int m = 0; m <= n; ++m) {
            geo[static_cast<size_t>(m)] = bp;
            bp *= b;
        }
        mul_by(geo);
    }
    return TruncSeries(std::vector<Rat>(acc.begin() + 1, acc.end()));
}

FactorialBoundReport factorial_bound_check(const TruncSeries& s) {
    FactorialBoundReport rep;
    Rat a1 = s.at(1);
    for (int m = 2; m <= s.order(); ++m) {
        Rat bound = rat_pow(a1, static_cast<unsigned long>(m)) /
                    Rat(factorial(static_cast<unsigned long>(m)));
        if (s.at(m) > bound) {
            rep.ok = false;
            rep.witness_index = m;
            rep.value = s.at(m);
            rep.bound = bound;
            return rep;
        }
    }
    return rep;
}

}  // namespace wittforge
