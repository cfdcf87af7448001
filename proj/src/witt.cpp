#include "wittforge/witt.hpp"

#include <algorithm>

namespace wittforge {

bool domain_contains(Domain d, const Rat& x) {
    switch (d) {
        case Domain::Nat: return is_integer(x) && x >= 0;
        case Domain::Integer: return is_integer(x);
        case Domain::NonnegRat: return x >= 0;
        case Domain::Rational: return true;
    }
    return false;
}

const char* domain_name(Domain d) {
    switch (d) {
        case Domain::Nat: return "nat";
        case Domain::Integer: return "int";
        case Domain::NonnegRat: return "qplus";
        case Domain::Rational: return "q";
    }
    return "?";
}

Domain domain_parse(const std::string& name) {
    if (name == "nat") return Domain::Nat;
    if (name == "int") return Domain::Integer;
    if (name == "qplus") return Domain::NonnegRat;
    if (name == "q") return Domain::Rational;
    throw parse_error("unknown domain '" + name + "' (expected nat|int|qplus|q)");
}

int series_norm_eps1(SeriesNorm n) {
    return (n == SeriesNorm::PlusPlus || n == SeriesNorm::PlusMinus) ? 1 : -1;
}

int series_norm_eps2(SeriesNorm n) {
    return (n == SeriesNorm::PlusPlus || n == SeriesNorm::MinusPlus) ? 1 : -1;
}

const char* series_norm_code(SeriesNorm n) {
    switch (n) {
        case SeriesNorm::MinusMinus: return "--";
        case SeriesNorm::PlusPlus: return "++";
        case SeriesNorm::PlusMinus: return "+-";
        case SeriesNorm::MinusPlus: return "-+";
    }
    return "?";
}

SeriesNorm series_norm_parse(const std::string& code) {
    if (code == "--") return SeriesNorm::MinusMinus;
    if (code == "++") return SeriesNorm::PlusPlus;
    if (code == "+-") return SeriesNorm::PlusMinus;
    if (code == "-+") return SeriesNorm::MinusPlus;
    throw parse_error("unknown series normalization '" + code + "'");
}

WittVector::WittVector(int truncation) {
    if (truncation < 1) throw std::invalid_argument("truncation weight must be >= 1");
    ghost_.assign(static_cast<size_t>(truncation), Rat(0));
}

WittVector WittVector::from_ghost(std::vector<Rat> ghost) {
    if (ghost.empty()) throw std::invalid_argument("ghost vector must be nonempty");
    WittVector x(static_cast<int>(ghost.size()));
    x.ghost_ = std::move(ghost);
    return x;
}

namespace {

// Substitutes ghost components for the psi variables. Only requires that
// every psi index occurring is <= truncation.
Rat ghost_substitute(const WittVector& x, const SymFunc& f) {
    Rat total = 0;
    for (const auto& [lambda, c] : f.terms()) {
        Rat term = c;
        for (int part : lambda.parts()) {
            if (part > x.truncation())
                throw capacity_error("psi index " + std::to_string(part) +
                                     " exceeds truncation " +
                                     std::to_string(x.truncation()));
            term *= x.ghost_at(part);
        }
        total += term;
    }
    return total;
}

// Power series helpers on coefficient vectors a[0..n] with a[0] = 1.
std::vector<Rat> series_inverse(const std::vector<Rat>& a) {
    std::vector<Rat> b(a.size(), Rat(0));
    b[0] = 1;
    for (size_t k = 1; k < a.size(); ++k) {
        Rat s = 0;
        for (size_t i = 1; i <= k; ++i) s += a[i] * b[k - i];
        b[k] = -s;
    }
    return b;
}

}  // namespace

Rat value_at(const WittVector& x, const SymFunc& f) {
    if (f.degree() > x.truncation())
        throw capacity_error("symmetric function of degree " +
                             std::to_string(f.degree()) + " exceeds truncation " +
                             std::to_string(x.truncation()));
    return ghost_substitute(x, f);
}

std::vector<Rat> to_series(const WittVector& x, SeriesNorm norm) {
    int n = x.truncation();
    std::vector<Rat> a(static_cast<size_t>(n) + 1, Rat(0));
    a[0] = 1;
    int eps1 = series_norm_eps1(norm);
    for (int i = 1; i <= n; ++i) {
        Rat v = value_at(x, from_basis(BasisTag::e, Partition::single(i), n));
        a[static_cast<size_t>(i)] = (eps1 == 1 || i % 2 == 0) ? v : -v;
    }
    if (series_norm_eps2(norm) == -1) a = series_inverse(a);
    return std::vector<Rat>(a.begin() + 1, a.end());
}

WittVector from_series(const std::vector<Rat>& coeffs, SeriesNorm norm) {
    if (coeffs.empty()) throw std::invalid_argument("series must have length >= 1");
    int n = static_cast<int>(coeffs.size());
    std::vector<Rat> a(static_cast<size_t>(n) + 1, Rat(0));
    a[0] = 1;
    std::copy(coeffs.begin(), coeffs.end(), a.begin() + 1);
    if (series_norm_eps2(norm) == -1) a = series_inverse(a);
    int eps1 = series_norm_eps1(norm);
    // e-values from the normalized series, then ghost via Newton's identity
    // n e_n = sum_{i=1}^{n} (-1)^{i-1} e_{n-i} g_i.
    std::vector<Rat> e(static_cast<size_t>(n) + 1, Rat(0));
    e[0] = 1;
    for (int i = 1; i <= n; ++i)
        e[static_cast<size_t>(i)] =
            (eps1 == 1 || i % 2 == 0) ? a[static_cast<size_t>(i)] : -a[static_cast<size_t>(i)];
    std::vector<Rat> g(static_cast<size_t>(n) + 1, Rat(0));
    for (int m = 1; m <= n; ++m) {
        Rat s = Rat(m) * e[static_cast<size_t>(m)];
        for (int i = 1; i < m; ++i) {
            Rat term = e[static_cast<size_t>(m - i)] * g[static_cast<size_t>(i)];
            s -= (i % 2 == 1) ? term : -term;
        }
        g[static_cast<size_t>(m)] = (m % 2 == 1) ? s : -s;
    }
    return WittVector::from_ghost(std::vector<Rat>(g.begin() + 1, g.end()));
}

std::vector<Rat> witt_coords(const WittVector& x) {
    int n = x.truncation();
    std::vector<Rat> out;
    out.reserve(static_cast<size_t>(n));
    for (int d = 1; d <= n; ++d) out.push_back(value_at(x, theta(d, n)));
    return out;
}

WittVector from_witt_coords(const std::vector<Rat>& ts) {
    if (ts.empty()) throw std::invalid_argument("coordinate vector must be nonempty");
    int n = static_cast<int>(ts.size());
    std::vector<Rat> g(static_cast<size_t>(n), Rat(0));
    for (int m = 1; m <= n; ++m) {
        Rat s = 0;
        for (int d = 1; d <= m; ++d) {
            if (m % d != 0) continue;
            s += Rat(d) * rat_pow(ts[static_cast<size_t>(d - 1)],
                                  static_cast<unsigned long>(m / d));
        }
        g[static_cast<size_t>(m - 1)] = s;
    }
    return WittVector::from_ghost(std::move(g));
}

namespace {

WittVector componentwise(const WittVector& x, const WittVector& y, bool product) {
    if (x.truncation() != y.truncation())
        throw std::invalid_argument("mismatched truncation weights");
    std::vector<Rat> g;
    g.reserve(x.ghost().size());
    for (size_t i = 0; i < x.ghost().size(); ++i) {
        if (product) g.push_back(x.ghost()[i] * y.ghost()[i]);
        else g.push_back(x.ghost()[i] + y.ghost()[i]);
    }
    return WittVector::from_ghost(std::move(g));
}

}  // namespace

WittVector add(const WittVector& x, const WittVector& y) {
    return componentwise(x, y, false);
}

WittVector mul(const WittVector& x, const WittVector& y) {
    return componentwise(x, y, true);
}

WittVector teichmuller(const Rat& a, int truncation) {
    std::vector<Rat> g;
    Rat pw = 1;
    for (int i = 1; i <= truncation; ++i) {
        pw *= a;
        g.push_back(pw);
    }
    return WittVector::from_ghost(std::move(g));
}

WittVector anti_teichmuller(const Rat& a, int truncation) {
    std::vector<Rat> g;
    Rat pw = 1;
    for (int i = 1; i <= truncation; ++i) {
        pw *= a;
        g.push_back(i % 2 == 1 ? pw : -pw);
    }
    return WittVector::from_ghost(std::move(g));
}

WittVector xi(int truncation) {
    if (truncation < 1) throw std::invalid_argument("truncation weight must be >= 1");
    std::vector<Rat> g(static_cast<size_t>(truncation), Rat(0));
    g[0] = 1;
    return WittVector::from_ghost(std::move(g));
}

WittVector frobenius(int m, const WittVector& x) {
    if (m < 1) throw std::invalid_argument("frobenius index must be positive");
    int k = x.truncation() / m;
    if (k < 1)
        throw capacity_error("frobenius_" + std::to_string(m) +
                             " needs truncation >= " + std::to_string(m));
    std::vector<Rat> g;
    for (int i = 1; i <= k; ++i) g.push_back(x.ghost_at(m * i));
    return WittVector::from_ghost(std::move(g));
}

WittVector apply_symfunc(const SymFunc& f, const WittVector& x) {
    int r = std::max(1, f.max_psi_index());
    int k = x.truncation() / r;
    if (k < 1)
        throw capacity_error("action needs truncation >= max psi index " +
                             std::to_string(r));
    std::vector<Rat> g;
    for (int m = 1; m <= k; ++m) {
        // x(psi_m o f), evaluated directly on ghost components.
        SymFunc scaled(m * std::max(1, f.degree()));
        for (const auto& [lambda, c] : f.terms())
            scaled.add_term(lambda.empty() ? lambda : lambda.scaled(m), c);
        g.push_back(ghost_substitute(x, scaled));
    }
    return WittVector::from_ghost(std::move(g));
}

WittVector omega_twist(const WittVector& x) {
    std::vector<Rat> g = x.ghost();
    for (size_t i = 0; i < g.size(); ++i)
        if (i % 2 == 1) g[i] = -g[i];
    return WittVector::from_ghost(std::move(g));
}

namespace {

MembershipReport membership(const WittVector& x, Domain dom, BasisTag tag) {
    MembershipReport rep;
    int n = x.truncation();
    for (int w = 1; w <= n && rep.member; ++w) {
        for (const auto& lambda : partitions_of(w)) {
            Rat v = value_at(x, from_basis(tag, lambda, n));
            if (!domain_contains(dom, v)) {
                rep.member = false;
                rep.witness = lambda;
                rep.value = v;
                break;
            }
        }
    }
    return rep;
}

}  // namespace

MembershipReport member_W(const WittVector& x, Domain dom) {
    return membership(x, dom, BasisTag::m);
}

MembershipReport member_WSch(const WittVector& x, Domain dom) {
    return membership(x, dom, BasisTag::s);
}

std::vector<std::pair<Partition, SymFunc>> effectivity_expressions(BasisTag tag,
                                                                   int max_weight) {
    if (tag != BasisTag::m && tag != BasisTag::s)
        throw std::invalid_argument("effectivity expressions use the m or s basis");
    std::vector<std::pair<Partition, SymFunc>> out;
    for (int w = 1; w <= max_weight; ++w)
        for (const auto& lambda : partitions_of(w))
            out.emplace_back(lambda, from_basis(tag, lambda, max_weight));
    return out;
}

}  // namespace wittforge
