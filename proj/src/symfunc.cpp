#include "wittforge/symfunc.hpp"

#include <algorithm>

namespace wittforge {

BasisTag basis_tag_from_char(char c) {
    switch (c) {
        case 'm': return BasisTag::m;
        case 'e': return BasisTag::e;
        case 'h': return BasisTag::h;
        case 'p': return BasisTag::p;
        case 's': return BasisTag::s;
        case 'w': return BasisTag::w;
        default: throw parse_error(std::string("unknown basis tag '") + c + "'");
    }
}

SymFunc::SymFunc(int degree_bound) : degree_bound_(degree_bound) {
    if (degree_bound < 0) throw std::invalid_argument("degree bound must be nonnegative");
}

SymFunc SymFunc::zero(int degree_bound) { return SymFunc(degree_bound); }

SymFunc SymFunc::one(int degree_bound) { return constant(1, degree_bound); }

SymFunc SymFunc::constant(const Rat& c, int degree_bound) {
    SymFunc f(degree_bound);
    f.add_term(Partition(), c);
    return f;
}

SymFunc SymFunc::psi_term(const Partition& lambda, const Rat& c, int degree_bound) {
    SymFunc f(degree_bound);
    f.add_term(lambda, c);
    return f;
}

SymFunc SymFunc::psi(int n, int degree_bound) {
    if (n < 1) throw std::invalid_argument("psi index must be positive");
    return psi_term(Partition::single(n), 1, degree_bound);
}

Rat SymFunc::coeff(const Partition& lambda) const {
    auto it = terms_.find(lambda);
    return it == terms_.end() ? Rat(0) : it->second;
}

int SymFunc::degree() const {
    int d = 0;
    for (const auto& [lambda, c] : terms_) d = std::max(d, lambda.weight());
    return d;
}

int SymFunc::max_psi_index() const {
    int m = 0;
    for (const auto& [lambda, c] : terms_) m = std::max(m, lambda.max_part());
    return m;
}

void SymFunc::add_term(const Partition& lambda, const Rat& c) {
    if (c == 0) return;
    if (lambda.weight() > degree_bound_)
        throw capacity_error("term of weight " + std::to_string(lambda.weight()) +
                             " exceeds degree bound " + std::to_string(degree_bound_));
    auto [it, inserted] = terms_.emplace(lambda, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

TensorSymFunc::TensorSymFunc(int degree_bound) : degree_bound_(degree_bound) {
    if (degree_bound < 0) throw std::invalid_argument("degree bound must be nonnegative");
}

TensorSymFunc TensorSymFunc::zero(int degree_bound) { return TensorSymFunc(degree_bound); }

TensorSymFunc TensorSymFunc::tensor(const SymFunc& f, const SymFunc& g) {
    TensorSymFunc t(std::max(f.degree_bound(), g.degree_bound()));
    for (const auto& [lf, cf] : f.terms())
        for (const auto& [lg, cg] : g.terms()) t.add_term(lf, lg, cf * cg);
    return t;
}

Rat TensorSymFunc::coeff(const Partition& left, const Partition& right) const {
    auto it = terms_.find({left, right});
    return it == terms_.end() ? Rat(0) : it->second;
}

void TensorSymFunc::add_term(const Partition& left, const Partition& right, const Rat& c) {
    if (c == 0) return;
    if (left.weight() > degree_bound_ || right.weight() > degree_bound_)
        throw capacity_error("tensor term exceeds degree bound " +
                             std::to_string(degree_bound_));
    auto [it, inserted] = terms_.emplace(Key{left, right}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

// --- ring operations ---------------------------------------------------------

SymFunc add(const SymFunc& f, const SymFunc& g) {
    SymFunc out(std::max(f.degree_bound(), g.degree_bound()));
    for (const auto& [l, c] : f.terms()) out.add_term(l, c);
    for (const auto& [l, c] : g.terms()) out.add_term(l, c);
    return out;
}

SymFunc sub(const SymFunc& f, const SymFunc& g) { return add(f, negate(g)); }

SymFunc negate(const SymFunc& f) {
    SymFunc out(f.degree_bound());
    for (const auto& [l, c] : f.terms()) out.add_term(l, -c);
    return out;
}

SymFunc scale(const Rat& c, const SymFunc& f) {
    SymFunc out(f.degree_bound());
    if (c == 0) return out;
    for (const auto& [l, k] : f.terms()) out.add_term(l, c * k);
    return out;
}

SymFunc multiply(const SymFunc& f, const SymFunc& g, Overflow mode) {
    SymFunc out(std::max(f.degree_bound(), g.degree_bound()));
    for (const auto& [lf, cf] : f.terms()) {
        for (const auto& [lg, cg] : g.terms()) {
            if (lf.weight() + lg.weight() > out.degree_bound()) {
                if (mode == Overflow::Truncate) continue;
                throw capacity_error("product term of weight " +
                                     std::to_string(lf.weight() + lg.weight()) +
                                     " exceeds degree bound " +
                                     std::to_string(out.degree_bound()));
            }
            out.add_term(lf.concat(lg), cf * cg);
        }
    }
    return out;
}

SymFunc power(const SymFunc& f, int n, Overflow mode) {
    if (n < 0) throw std::invalid_argument("negative power of a symmetric function");
    SymFunc out = SymFunc::one(f.degree_bound());
    for (int i = 0; i < n; ++i) out = multiply(out, f, mode);
    return out;
}

TensorSymFunc add(const TensorSymFunc& a, const TensorSymFunc& b) {
    TensorSymFunc out(std::max(a.degree_bound(), b.degree_bound()));
    for (const auto& [k, c] : a.terms()) out.add_term(k.first, k.second, c);
    for (const auto& [k, c] : b.terms()) out.add_term(k.first, k.second, c);
    return out;
}

TensorSymFunc sub(const TensorSymFunc& a, const TensorSymFunc& b) {
    return add(a, scale(-1, b));
}

TensorSymFunc scale(const Rat& c, const TensorSymFunc& a) {
    TensorSymFunc out(a.degree_bound());
    if (c == 0) return out;
    for (const auto& [k, v] : a.terms()) out.add_term(k.first, k.second, c * v);
    return out;
}

TensorSymFunc multiply(const TensorSymFunc& a, const TensorSymFunc& b, Overflow mode) {
    TensorSymFunc out(std::max(a.degree_bound(), b.degree_bound()));
    for (const auto& [ka, ca] : a.terms()) {
        for (const auto& [kb, cb] : b.terms()) {
            if (ka.first.weight() + kb.first.weight() > out.degree_bound() ||
                ka.second.weight() + kb.second.weight() > out.degree_bound()) {
                if (mode == Overflow::Truncate) continue;
                throw capacity_error("tensor product exceeds degree bound");
            }
            out.add_term(ka.first.concat(kb.first), ka.second.concat(kb.second), ca * cb);
        }
    }
    return out;
}

// --- composition structure ---------------------------------------------------

SymFunc scale_psi_indices(const SymFunc& f, int n) {
    if (n < 1) throw std::invalid_argument("psi index scale must be positive");
    SymFunc out(f.degree_bound());
    for (const auto& [l, c] : f.terms()) {
        if (l.weight() * n > out.degree_bound())
            throw capacity_error("index scaling by " + std::to_string(n) +
                                 " exceeds degree bound");
        out.add_term(l.empty() ? l : l.scaled(n), c);
    }
    return out;
}

SymFunc plethysm(const SymFunc& f, const SymFunc& g) {
    int bound = std::max(f.degree_bound(), g.degree_bound());
    SymFunc out(bound);
    for (const auto& [lambda, c] : f.terms()) {
        SymFunc term = SymFunc::constant(c, bound);
        for (int part : lambda.parts()) term = multiply(term, scale_psi_indices(g, part));
        out = add(out, term);
    }
    return out;
}

TensorSymFunc coproduct_add(const SymFunc& f) {
    TensorSymFunc out(f.degree_bound());
    for (const auto& [lambda, c] : f.terms()) {
        // Expand prod_i (psi_{v_i} (x) 1 + 1 (x) psi_{v_i}) over the multiset of
        // parts: choose j of the m copies of each distinct value for the left leg.
        std::vector<std::pair<int, int>> groups;  // (value, multiplicity)
        const auto& parts = lambda.parts();
        for (size_t i = 0; i < parts.size();) {
            size_t j = i;
            while (j < parts.size() && parts[j] == parts[i]) ++j;
            groups.emplace_back(parts[i], static_cast<int>(j - i));
            i = j;
        }
        std::vector<int> take(groups.size(), 0);
        while (true) {
            Rat coef = c;
            std::vector<int> left, right;
            for (size_t gi = 0; gi < groups.size(); ++gi) {
                auto [v, m] = groups[gi];
                coef *= Rat(binomial(static_cast<unsigned long>(m),
                                     static_cast<unsigned long>(take[gi])));
                left.insert(left.end(), static_cast<size_t>(take[gi]), v);
                right.insert(right.end(), static_cast<size_t>(m - take[gi]), v);
            }
            out.add_term(Partition(std::move(left)), Partition(std::move(right)), coef);
            size_t gi = 0;
            while (gi < groups.size() && take[gi] == groups[gi].second) {
                take[gi] = 0;
                ++gi;
            }
            if (gi == groups.size()) break;
            ++take[gi];
        }
    }
    return out;
}

TensorSymFunc coproduct_mul(const SymFunc& f) {
    TensorSymFunc out(f.degree_bound());
    for (const auto& [lambda, c] : f.terms()) out.add_term(lambda, lambda, c);
    return out;
}

Rat counit_add(const SymFunc& f) { return f.coeff(Partition()); }

Rat counit_mul(const SymFunc& f) {
    Rat total = 0;
    for (const auto& [l, c] : f.terms()) total += c;
    return total;
}

SymFunc omega(const SymFunc& f) {
    SymFunc out(f.degree_bound());
    for (const auto& [l, c] : f.terms()) {
        // omega(psi_n) = (-1)^(n+1) psi_n, so psi_lambda picks up
        // (-1)^(weight + length).
        bool flip = ((l.weight() + l.length()) % 2) != 0;
        out.add_term(l, flip ? -c : c);
    }
    return out;
}

Rat evaluate_at_scalar(const SymFunc& f, const Rat& a) {
    Rat total = 0;
    for (const auto& [l, c] : f.terms())
        total += c * rat_pow(a, static_cast<unsigned long>(l.length()));
    return total;
}

Rat evaluate_finite(const SymFunc& f, const std::vector<Rat>& values) {
    std::map<int, Rat> power_sums;
    auto psum = [&](int n) -> const Rat& {
        auto it = power_sums.find(n);
        if (it == power_sums.end()) {
            Rat s = 0;
            for (const Rat& v : values) s += rat_pow(v, static_cast<unsigned long>(n));
            it = power_sums.emplace(n, s).first;
        }
        return it->second;
    };
    Rat total = 0;
    for (const auto& [l, c] : f.terms()) {
        Rat term = c;
        for (int part : l.parts()) term *= psum(part);
        total += term;
    }
    return total;
}

}  // namespace wittforge
