#include <algorithm>
#include <functional>
#include <mutex>
#include <set>

#include "wittforge/symfunc.hpp"

namespace wittforge {

namespace {

using Row = std::map<Partition, Rat>;  // psi-expansion without a bound attached

struct Caches {
    std::mutex mu;
    std::map<int, Row> h_rows;                       // h_n
    std::map<int, Row> theta_rows;                   // theta_n
    std::map<Partition, Row> h_product_rows;         // h_lambda
    std::map<Partition, Row> monomial_rows;          // m_lambda
    std::set<int> monomial_degrees_done;
    std::map<std::pair<Partition, Partition>, Int> characters;
};

Caches& caches() {
    static Caches c;
    return c;
}

SymFunc materialize(const Row& row, int degree_bound) {
    SymFunc f(degree_bound);
    for (const auto& [l, c] : row) f.add_term(l, c);
    return f;
}

Row to_row(const SymFunc& f) { return f.terms(); }

// h_n = sum_{|mu|=n} psi_mu / z_mu
const Row& h_row(int n) {
    auto& c = caches();
    std::lock_guard<std::mutex> lock(c.mu);
    auto it = c.h_rows.find(n);
    if (it == c.h_rows.end()) {
        Row row;
        for (const auto& mu : partitions_of(n)) row[mu] = Rat(1) / Rat(mu.z_factor());
        it = c.h_rows.emplace(n, std::move(row)).first;
    }
    return it->second;
}

// theta_1 = psi_1; n*theta_n = psi_n - sum_{d|n, d<n} d theta_d^{n/d}
const Row& theta_row(int n) {
    auto& c = caches();
    {
        std::lock_guard<std::mutex> lock(c.mu);
        auto it = c.theta_rows.find(n);
        if (it != c.theta_rows.end()) return it->second;
    }
    SymFunc acc = SymFunc::psi(n, n);
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        SymFunc th = materialize(theta_row(d), n);
        acc = sub(acc, scale(d, power(th, n / d)));
    }
    acc = scale(Rat(1, n), acc);
    std::lock_guard<std::mutex> lock(c.mu);
    return c.theta_rows.emplace(n, to_row(acc)).first->second;
}

const Row& h_product_row(const Partition& lambda) {
    auto& c = caches();
    {
        std::lock_guard<std::mutex> lock(c.mu);
        auto it = c.h_product_rows.find(lambda);
        if (it != c.h_product_rows.end()) return it->second;
    }
    SymFunc prod = SymFunc::one(lambda.weight());
    for (int part : lambda.parts())
        prod = multiply(prod, materialize(h_row(part), lambda.weight()));
    std::lock_guard<std::mutex> lock(c.mu);
    return c.h_product_rows.emplace(lambda, to_row(prod)).first->second;
}

// Coefficient of m_lambda in f, via the Hall pairing <f, h_lambda> with
// <psi_mu, psi_nu> = delta z_mu.
Rat monomial_coeff(const SymFunc& f, const Partition& lambda) {
    const Row& h = h_product_row(lambda);
    Rat total = 0;
    for (const auto& [mu, c] : f.terms()) {
        if (mu.weight() != lambda.weight()) continue;
        auto it = h.find(mu);
        if (it != h.end()) total += c * it->second * Rat(mu.z_factor());
    }
    return total;
}

// Exact Gauss-Jordan inverse of the per-degree matrix (psi_mu in m-coords),
// filling monomial_rows for every partition of degree n.
void ensure_monomial_rows(int n) {
    {
        auto& c = caches();
        std::lock_guard<std::mutex> lock(c.mu);
        if (c.monomial_degrees_done.count(n)) return;
    }
    auto parts = partitions_of(n);
    size_t k = parts.size();
    // A[i][j] = coefficient of m_{parts[j]} in psi_{parts[i]}
    std::vector<std::vector<Rat>> a(k, std::vector<Rat>(2 * k, Rat(0)));
    for (size_t i = 0; i < k; ++i) {
        SymFunc psi = SymFunc::psi_term(parts[i], 1, n);
        for (size_t j = 0; j < k; ++j) a[i][j] = monomial_coeff(psi, parts[j]);
        a[i][k + i] = 1;
    }
    for (size_t col = 0; col < k; ++col) {
        size_t piv = col;
        while (piv < k && a[piv][col] == 0) ++piv;
        if (piv == k) throw std::logic_error("singular psi-to-m transition matrix");
        std::swap(a[piv], a[col]);
        Rat d = a[col][col];
        for (auto& x : a[col]) x /= d;
        for (size_t r = 0; r < k; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rat factor = a[r][col];
            for (size_t cc = col; cc < 2 * k; ++cc) a[r][cc] -= factor * a[col][cc];
        }
    }
    auto& c = caches();
    std::lock_guard<std::mutex> lock(c.mu);
    for (size_t j = 0; j < k; ++j) {
        Row row;
        // m_{parts[j]} = sum_i (A^{-1})[j][i] psi_{parts[i]}: row j of the
        // inverse sits in the augmented half of row j.
        for (size_t i = 0; i < k; ++i)
            if (a[j][k + i] != 0) row[parts[i]] = a[j][k + i];
        c.monomial_rows.emplace(parts[j], std::move(row));
    }
    c.monomial_degrees_done.insert(n);
}

const Row& monomial_row(const Partition& lambda) {
    ensure_monomial_rows(lambda.weight());
    auto& c = caches();
    std::lock_guard<std::mutex> lock(c.mu);
    return c.monomial_rows.at(lambda);
}

Row e_row_of(int n) {
    Row row = h_row(n);
    for (auto& [mu, c] : row)
        if ((n - mu.length()) % 2 != 0) c = -c;
    return row;
}

SymFunc multiplicative_from_basis(const Partition& lambda, int degree_bound,
                                  const std::function<Row(int)>& gen) {
    SymFunc out = SymFunc::one(degree_bound);
    for (int part : lambda.parts()) out = multiply(out, materialize(gen(part), degree_bound));
    return out;
}

// Jacobi-Trudi: s_lambda = det(h_{lambda_i - i + j}).
SymFunc schur_from_basis(const Partition& lambda, int degree_bound) {
    int l = lambda.length();
    if (l == 0) return SymFunc::one(degree_bound);
    std::vector<int> cols(static_cast<size_t>(l));
    for (int i = 0; i < l; ++i) cols[static_cast<size_t>(i)] = i;
    SymFunc out(degree_bound);
    do {
        int inversions = 0;
        std::vector<int> indices;
        bool ok = true;
        for (int i = 0; i < l && ok; ++i) {
            for (int j = i + 1; j < l; ++j)
                if (cols[static_cast<size_t>(i)] > cols[static_cast<size_t>(j)]) ++inversions;
            int idx = lambda.part(i) - i + cols[static_cast<size_t>(i)];
            if (idx < 0) ok = false;
            else if (idx > 0) indices.push_back(idx);
        }
        if (!ok) continue;
        SymFunc term = multiplicative_from_basis(Partition(std::move(indices)),
                                                 degree_bound, h_row);
        out = (inversions % 2 == 0) ? add(out, term) : sub(out, term);
    } while (std::next_permutation(cols.begin(), cols.end()));
    return out;
}

// Triangular elimination against a multiplicative family whose generator
// expansions have leading term psi_n with nonzero coefficient: within each
// degree, every psi_mu occurring in g_lambda refines lambda, so processing
// partitions in reverse-lex order isolates one new coefficient at a time.
std::map<Partition, Rat> to_mult_basis_coeffs(const SymFunc& f,
                                              const std::function<Row(int)>& gen) {
    std::map<Partition, Rat> out;
    std::set<int> weights;
    for (const auto& [l, c] : f.terms()) weights.insert(l.weight());
    for (int n : weights) {
        if (n == 0) {
            Rat c0 = f.coeff(Partition());
            if (c0 != 0) out[Partition()] = c0;
            continue;
        }
        std::map<Partition, Rat> residual;
        for (const auto& [l, c] : f.terms())
            if (l.weight() == n) residual[l] = c;
        for (const auto& lambda : partitions_of(n)) {
            auto it = residual.find(lambda);
            if (it == residual.end() || it->second == 0) continue;
            SymFunc g = multiplicative_from_basis(lambda, n, gen);
            Rat diag = g.coeff(lambda);
            Rat c = it->second / diag;
            out[lambda] = c;
            for (const auto& [mu, gc] : g.terms()) {
                auto rit = residual.emplace(mu, Rat(0)).first;
                rit->second -= c * gc;
                if (rit->second == 0) residual.erase(rit);
            }
        }
        if (!residual.empty())
            throw std::logic_error("basis elimination left a nonzero residual");
    }
    return out;
}

void prune_zeros(std::map<Partition, Rat>& m) {
    for (auto it = m.begin(); it != m.end();)
        it = (it->second == 0) ? m.erase(it) : std::next(it);
}

}  // namespace

SymFunc theta(int d, int degree_bound) {
    if (d < 1) throw std::invalid_argument("theta index must be positive");
    if (d > degree_bound) throw capacity_error("theta_" + std::to_string(d) +
                                               " exceeds degree bound");
    return materialize(theta_row(d), degree_bound);
}

SymFunc d_op(int n, int degree_bound) {
    if (n < 2) throw std::invalid_argument("d_n is defined for n >= 2");
    return negate(theta(n, degree_bound));
}

SymFunc from_basis(BasisTag tag, const Partition& lambda, int degree_bound) {
    if (lambda.weight() > degree_bound)
        throw capacity_error("basis element " + lambda.str() + " exceeds degree bound " +
                             std::to_string(degree_bound));
    switch (tag) {
        case BasisTag::p:
            return SymFunc::psi_term(lambda, 1, degree_bound);
        case BasisTag::h:
            return multiplicative_from_basis(lambda, degree_bound, h_row);
        case BasisTag::e:
            return multiplicative_from_basis(lambda, degree_bound, e_row_of);
        case BasisTag::w:
            return multiplicative_from_basis(
                lambda, degree_bound, [](int n) { return theta_row(n); });
        case BasisTag::s:
            return schur_from_basis(lambda, degree_bound);
        case BasisTag::m:
            return materialize(monomial_row(lambda), degree_bound);
    }
    throw std::logic_error("unreachable basis tag");
}

std::map<Partition, Rat> to_basis_coeffs(BasisTag tag, const SymFunc& f) {
    std::map<Partition, Rat> out;
    switch (tag) {
        case BasisTag::p:
            return f.terms();
        case BasisTag::m: {
            std::set<int> weights;
            for (const auto& [l, c] : f.terms()) weights.insert(l.weight());
            for (int n : weights)
                for (const auto& lambda : partitions_of(n)) {
                    Rat c = monomial_coeff(f, lambda);
                    if (c != 0) out[lambda] = c;
                }
            return out;
        }
        case BasisTag::s: {
            std::set<int> weights;
            for (const auto& [l, c] : f.terms()) weights.insert(l.weight());
            for (int n : weights)
                for (const auto& lambda : partitions_of(n)) {
                    Rat c = 0;
                    for (const auto& [mu, fc] : f.terms())
                        if (mu.weight() == n) c += fc * Rat(character(lambda, mu));
                    if (c != 0) out[lambda] = c;
                }
            return out;
        }
        case BasisTag::h:
            out = to_mult_basis_coeffs(f, h_row);
            break;
        case BasisTag::e:
            out = to_mult_basis_coeffs(f, e_row_of);
            break;
        case BasisTag::w:
            out = to_mult_basis_coeffs(f, [](int n) { return theta_row(n); });
            break;
    }
    prune_zeros(out);
    return out;
}

std::map<TensorSymFunc::Key, Rat> tensor_to_basis_coeffs(const TensorSymFunc& t,
                                                         BasisTag tag) {
    // Per-leg conversion rows for each distinct psi-partition occurring.
    std::map<Partition, std::map<Partition, Rat>> rows;
    auto row_for = [&](const Partition& mu) -> const std::map<Partition, Rat>& {
        auto it = rows.find(mu);
        if (it == rows.end()) {
            SymFunc psi = SymFunc::psi_term(mu, 1, mu.weight());
            it = rows.emplace(mu, to_basis_coeffs(tag, psi)).first;
        }
        return it->second;
    };
    std::map<TensorSymFunc::Key, Rat> out;
    for (const auto& [key, c] : t.terms()) {
        for (const auto& [alpha, ca] : row_for(key.first)) {
            for (const auto& [beta, cb] : row_for(key.second)) {
                Rat v = c * ca * cb;
                if (v == 0) continue;
                auto [it, inserted] = out.emplace(TensorSymFunc::Key{alpha, beta}, v);
                if (!inserted) {
                    it->second += v;
                    if (it->second == 0) out.erase(it);
                }
            }
        }
    }
    return out;
}

// --- Murnaghan-Nakayama -------------------------------------------------------

namespace {

Partition drop_first_part(const Partition& mu) {
    std::vector<int> rest(mu.parts().begin() + 1, mu.parts().end());
    return Partition(std::move(rest));
}

Int mn_recurse(const Partition& lambda, const Partition& mu) {
    if (lambda.empty()) return 1;
    auto& c = caches();
    std::pair<Partition, Partition> key{lambda, mu};
    {
        std::lock_guard<std::mutex> lock(c.mu);
        auto it = c.characters.find(key);
        if (it != c.characters.end()) return it->second;
    }
    int k = mu.max_part();
    Partition rest = drop_first_part(mu);
    // Beta-set formulation: remove a border strip of size k by lowering one
    // beta number; the sign is the parity of the beta numbers jumped over.
    int len = lambda.length();
    std::vector<int> beta(static_cast<size_t>(len));
    for (int i = 0; i < len; ++i)
        beta[static_cast<size_t>(i)] = lambda.part(i) + (len - 1 - i);
    Int total = 0;
    for (size_t bi = 0; bi < beta.size(); ++bi) {
        int b = beta[bi];
        if (b < k) continue;
        int target = b - k;
        bool occupied = false;
        int jumped = 0;
        for (size_t bj = 0; bj < beta.size(); ++bj) {
            if (beta[bj] == target) occupied = true;
            if (beta[bj] > target && beta[bj] < b) ++jumped;
        }
        if (occupied) continue;
        std::vector<int> nb = beta;
        nb[bi] = target;
        std::sort(nb.begin(), nb.end(), std::greater<int>());
        std::vector<int> parts;
        for (int i = 0; i < len; ++i) {
            int part = nb[static_cast<size_t>(i)] - (len - 1 - i);
            if (part > 0) parts.push_back(part);
        }
        Int sub = mn_recurse(Partition(std::move(parts)), rest);
        total += (jumped % 2 == 0) ? sub : -sub;
    }
    std::lock_guard<std::mutex> lock(c.mu);
    c.characters.emplace(std::move(key), total);
    return total;
}

}  // namespace

Int character(const Partition& lambda, const Partition& mu) {
    if (lambda.weight() != mu.weight())
        throw std::invalid_argument("character arguments must have equal weight");
    return mn_recurse(lambda, mu);
}

// --- positivity -----------------------------------------------------------------

namespace {

PositivityReport positivity_report(const std::map<Partition, Rat>& coeffs) {
    PositivityReport rep;
    for (const auto& [lambda, c] : coeffs) {
        if (rep.nonnegative && c < 0) {
            rep.nonnegative = false;
            rep.negative_witness = lambda;
            rep.negative_value = c;
        }
        if (rep.integral && !is_integer(c)) {
            rep.integral = false;
            rep.nonintegral_witness = lambda;
            rep.nonintegral_value = c;
        }
        if (!rep.nonnegative && !rep.integral) break;
    }
    return rep;
}

}  // namespace

PositivityReport is_monomial_positive(const SymFunc& f) {
    return positivity_report(to_basis_coeffs(BasisTag::m, f));
}

PositivityReport is_schur_positive(const SymFunc& f) {
    return positivity_report(to_basis_coeffs(BasisTag::s, f));
}

// --- cache persistence -----------------------------------------------------------

CacheSnapshot cache_export() {
    auto& c = caches();
    std::lock_guard<std::mutex> lock(c.mu);
    CacheSnapshot snap;
    for (const auto& [key, value] : c.characters)
        snap.characters[key.first.str() + "|" + key.second.str()] = value.get_str();
    for (const auto& [lambda, row] : c.monomial_rows) {
        auto& dst = snap.monomial_rows[lambda.str()];
        for (const auto& [mu, coef] : row) dst[mu.str()] = rat_str(coef);
    }
    return snap;
}

void cache_import(const CacheSnapshot& snap) {
    auto& c = caches();
    std::lock_guard<std::mutex> lock(c.mu);
    for (const auto& [key, value] : snap.characters) {
        auto bar = key.find('|');
        if (bar == std::string::npos) continue;
        try {
            Partition lambda = Partition::parse(key.substr(0, bar));
            Partition mu = Partition::parse(key.substr(bar + 1));
            c.characters.emplace(std::make_pair(std::move(lambda), std::move(mu)),
                                 Int(value));
        } catch (const std::exception&) {
            // Unreadable cache entries are skipped; the cache is derived data.
        }
    }
    for (const auto& [lstr, rowstr] : snap.monomial_rows) {
        try {
            Partition lambda = Partition::parse(lstr);
            Row row;
            for (const auto& [mstr, cstr] : rowstr)
                row[Partition::parse(mstr)] = rat_parse(cstr);
            c.monomial_rows.emplace(std::move(lambda), std::move(row));
        } catch (const std::exception&) {
        }
    }
}

void cache_clear() {
    auto& c = caches();
    std::lock_guard<std::mutex> lock(c.mu);
    c.h_rows.clear();
    c.theta_rows.clear();
    c.h_product_rows.clear();
    c.monomial_rows.clear();
    c.monomial_degrees_done.clear();
    c.characters.clear();
}

}  // namespace wittforge
