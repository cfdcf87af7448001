#include "wittforge/ptypical.hpp"

#include <algorithm>
#include <functional>

namespace wittforge {

namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

void check_prime(int p) {
    if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
}

int int_pow(int base, int e) {
    int r = 1;
    while (e-- > 0) r *= base;
    return r;
}

}  // namespace

PTypGhost::PTypGhost(int p_, int k_, std::vector<Rat> a_)
    : p(p_), k(k_), a(std::move(a_)) {
    check_prime(p);
    if (k < 0) throw std::invalid_argument("level must be nonnegative");
    if (a.size() != static_cast<size_t>(k) + 1)
        throw std::invalid_argument("ghost vector must have length k+1");
}

PTypWitt::PTypWitt(int p, int k, std::map<Cell, Rat> grid)
    : p_(p), k_(k), grid_(std::move(grid)) {
    check_prime(p);
    if (k < 0) throw std::invalid_argument("level must be nonnegative");
    for (int i = 0; i <= k; ++i)
        for (int j = 0; i + j <= k; ++j)
            if (!grid_.count({i, j})) throw invalid_grid("missing grid entry");
    if (grid_.size() != static_cast<size_t>((k + 1) * (k + 2) / 2))
        throw invalid_grid("unexpected grid entries");
    for (int i = 0; i <= k; ++i)
        for (int j = 0; i + j <= k - 1; ++j) {
            Rat lhs = rat_pow(at(i, j), static_cast<unsigned long>(p));
            Rat rhs = at(i + 1, j) + Rat(p) * at(i, j + 1);
            if (lhs != rhs)
                throw invalid_grid("grid relation fails at (" + std::to_string(i) +
                                   "," + std::to_string(j) + ")");
        }
}

Domain PTypWitt::domain() const {
    bool integral = true, nonneg = true;
    for (const auto& [cell, v] : grid_) {
        integral = integral && is_integer(v);
        nonneg = nonneg && v >= 0;
    }
    if (integral && nonneg) return Domain::Nat;
    if (integral) return Domain::Integer;
    if (nonneg) return Domain::NonnegRat;
    return Domain::Rational;
}

PTypWitt ghost_to_grid(const PTypGhost& g) {
    std::map<PTypWitt::Cell, Rat> grid;
    for (int i = 0; i <= g.k; ++i) grid[{i, 0}] = g.a[static_cast<size_t>(i)];
    for (int j = 0; j < g.k; ++j)
        for (int i = 0; i + j + 1 <= g.k; ++i)
            grid[{i, j + 1}] =
                (rat_pow(grid[{i, j}], static_cast<unsigned long>(g.p)) -
                 grid[{i + 1, j}]) /
                Rat(g.p);
    return PTypWitt(g.p, g.k, std::move(grid));
}

PTypGhost grid_to_ghost(const PTypWitt& w) {
    std::vector<Rat> a;
    for (int i = 0; i <= w.k(); ++i) a.push_back(w.at(i, 0));
    return PTypGhost(w.p(), w.k(), std::move(a));
}

namespace {

PTypWitt ptyp_componentwise(const PTypWitt& a, const PTypWitt& b, bool product) {
    if (a.p() != b.p() || a.k() != b.k())
        throw std::invalid_argument("mismatched p-typical parameters");
    PTypGhost ga = grid_to_ghost(a), gb = grid_to_ghost(b);
    std::vector<Rat> out;
    for (size_t i = 0; i < ga.a.size(); ++i) {
        if (product) out.push_back(ga.a[i] * gb.a[i]);
        else out.push_back(ga.a[i] + gb.a[i]);
    }
    return ghost_to_grid(PTypGhost(a.p(), a.k(), std::move(out)));
}

}  // namespace

PTypWitt ptyp_add(const PTypWitt& a, const PTypWitt& b) {
    return ptyp_componentwise(a, b, false);
}

PTypWitt ptyp_mul(const PTypWitt& a, const PTypWitt& b) {
    return ptyp_componentwise(a, b, true);
}

PTypWitt ptyp_zero(int p, int k) {
    return ghost_to_grid(PTypGhost(p, k, std::vector<Rat>(static_cast<size_t>(k) + 1, Rat(0))));
}

PTypWitt ptyp_one(int p, int k) {
    return ghost_to_grid(PTypGhost(p, k, std::vector<Rat>(static_cast<size_t>(k) + 1, Rat(1))));
}

PTypWitt ptyp_teichmuller(int p, int k, const Rat& a) {
    std::vector<Rat> ghost;
    Rat v = a;
    for (int i = 0; i <= k; ++i) {
        ghost.push_back(v);
        if (i < k) v = rat_pow(v, static_cast<unsigned long>(p));
    }
    return ghost_to_grid(PTypGhost(p, k, std::move(ghost)));
}

GridMembership ptyp_member(const PTypGhost& g, Domain dom) {
    PTypWitt w = ghost_to_grid(g);
    GridMembership rep;
    for (const auto& [cell, v] : w.grid()) {
        if (!domain_contains(dom, v)) {
            rep.member = false;
            rep.witness = cell;
            rep.value = v;
            return rep;
        }
    }
    return rep;
}

bool region_check_k2(int p, const Rat& a, const Rat& x, const Rat& y) {
    check_prime(p);
    if (a <= 0) throw std::invalid_argument("region check requires a > 0");
    if (x < 0 || y < 0 || x > 1) return false;
    Rat gap = rat_pow(x, static_cast<unsigned long>(p)) - y;
    if (gap < 0) return false;
    Rat lim = rat_pow(Rat(1) - x, static_cast<unsigned long>(p)) /
              rat_pow(Rat(p), static_cast<unsigned long>(p - 1));
    return gap <= lim;
}

SymFunc ptyp_generator(int p, int i, int j, int degree_bound) {
    check_prime(p);
    if (i < 0 || j < 0) throw std::invalid_argument("generator indices must be >= 0");
    if (int_pow(p, i + j) > degree_bound)
        throw capacity_error("generator degree p^" + std::to_string(i + j) +
                             " exceeds degree bound");
    SymFunc f = SymFunc::psi(1, degree_bound);
    for (int t = 0; t < j; ++t) f = plethysm(d_op(p, degree_bound), f);
    if (i > 0) f = scale_psi_indices(f, int_pow(p, i));
    return f;
}

std::vector<PTypMonomial> basis_monomials(int p, int k, int max_degree) {
    check_prime(p);
    if (k < 0) throw std::invalid_argument("level must be nonnegative");
    std::vector<PTypWitt::Cell> cells;
    for (int s = 0; s <= k; ++s)
        for (int i = s; i >= 0; --i) cells.push_back({i, s - i});
    std::vector<SymFunc> gens;
    for (const auto& [i, j] : cells) gens.push_back(ptyp_generator(p, i, j, max_degree));

    std::vector<PTypMonomial> out;
    std::map<PTypWitt::Cell, int> expo;
    std::function<void(size_t, int, const SymFunc&)> rec = [&](size_t idx, int degree,
                                                               const SymFunc& acc) {
        if (idx == cells.size()) {
            PTypMonomial m;
            m.exponents = expo;
            m.degree = degree;
            m.value = acc;
            out.push_back(std::move(m));
            return;
        }
        const auto& cell = cells[idx];
        int gen_degree = int_pow(p, cell.first + cell.second);
        bool bounded = (cell.first + cell.second) < k;
        SymFunc pw = acc;
        for (int m = 0;; ++m) {
            if (degree + m * gen_degree > max_degree) break;
            if (bounded && m >= p) break;
            if (m > 0) pw = multiply(pw, gens[idx]);
            expo[cell] = m;
            rec(idx + 1, degree + m * gen_degree, pw);
        }
        expo.erase(cell);
    };
    rec(0, 0, SymFunc::one(max_degree));
    return out;
}

BasisLemmaReport verify_basis_lemma(int p, int k, int max_degree) {
    auto monomials = basis_monomials(p, k, max_degree);
    BasisLemmaReport rep;
    rep.monomial_count = static_cast<int>(monomials.size());
    for (const auto& m : monomials) ++rep.monomials_per_degree[m.degree];

    // Exact column rank of the psi-coefficient matrix.
    std::map<Partition, size_t> row_index;
    for (const auto& m : monomials)
        for (const auto& [lambda, c] : m.value.terms())
            row_index.emplace(lambda, row_index.size());
    std::vector<std::vector<Rat>> cols;
    for (const auto& m : monomials) {
        std::vector<Rat> col(row_index.size(), Rat(0));
        for (const auto& [lambda, c] : m.value.terms()) col[row_index[lambda]] = c;
        cols.push_back(std::move(col));
    }
    // Gauss-Jordan: every stored pivot column is zero at the other pivots'
    // rows, so one reduction pass per incoming column is exact.
    size_t rank = 0;
    std::vector<std::vector<Rat>> basis;
    std::vector<size_t> pivot_rows;
    for (auto& col : cols) {
        for (size_t b = 0; b < basis.size(); ++b) {
            if (col[pivot_rows[b]] == 0) continue;
            Rat f = col[pivot_rows[b]];
            for (size_t r = 0; r < col.size(); ++r) col[r] -= f * basis[b][r];
        }
        size_t piv = col.size();
        for (size_t r = 0; r < col.size(); ++r)
            if (col[r] != 0) {
                piv = r;
                break;
            }
        if (piv == col.size()) continue;
        Rat d = col[piv];
        for (auto& v : col) v /= d;
        for (size_t b = 0; b < basis.size(); ++b) {
            if (basis[b][piv] == 0) continue;
            Rat f = basis[b][piv];
            for (size_t r = 0; r < col.size(); ++r) basis[b][r] -= f * col[r];
        }
        basis.push_back(col);
        pivot_rows.push_back(piv);
        ++rank;
    }
    rep.rank = static_cast<int>(rank);
    rep.independent = (rank == monomials.size());
    return rep;
}

DpCoproductReport dp_coproduct_check(int p) {
    check_prime(p);
    int bound = p;
    SymFunc dp = d_op(p, bound);
    SymFunc one = SymFunc::one(bound);
    SymFunc psi1 = SymFunc::psi(1, bound);
    SymFunc psip = SymFunc::psi(p, bound);

    DpCoproductReport rep;
    TensorSymFunc expected_add =
        TensorSymFunc::tensor(dp, one) + TensorSymFunc::tensor(one, dp);
    rep.coefficients_nonnegative = true;
    for (int i = 1; i <= p - 1; ++i) {
        Rat c = Rat(binomial(static_cast<unsigned long>(p), static_cast<unsigned long>(i))) /
                Rat(p);
        if (c < 0) rep.coefficients_nonnegative = false;
        expected_add = expected_add +
                       scale(c, TensorSymFunc::tensor(power(psi1, i), power(psi1, p - i)));
    }
    rep.add_ok = (coproduct_add(dp) == expected_add);

    TensorSymFunc expected_mul = TensorSymFunc::tensor(dp, psip) +
                                 TensorSymFunc::tensor(psip, dp) +
                                 scale(p, TensorSymFunc::tensor(dp, dp));
    rep.mul_ok = (coproduct_mul(dp) == expected_mul);
    return rep;
}

std::array<Rat, 3> k1_add_grid(int p, const std::array<Rat, 3>& a,
                               const std::array<Rat, 3>& b) {
    check_prime(p);
    Rat third = a[2] + b[2];
    for (int i = 1; i <= p - 1; ++i)
        third += Rat(binomial(static_cast<unsigned long>(p), static_cast<unsigned long>(i))) /
                 Rat(p) * rat_pow(a[0], static_cast<unsigned long>(i)) *
                 rat_pow(b[0], static_cast<unsigned long>(p - i));
    return {a[0] + b[0], a[1] + b[1], third};
}

std::array<Rat, 3> k1_mul_grid(int p, const std::array<Rat, 3>& a,
                               const std::array<Rat, 3>& b) {
    check_prime(p);
    return {a[0] * b[0], a[1] * b[1], a[1] * b[2] + a[2] * b[1] + Rat(p) * a[2] * b[2]};
}

std::array<Rat, 2> k1_add_theta(int p, const std::array<Rat, 2>& a,
                                const std::array<Rat, 2>& b) {
    check_prime(p);
    Rat second = a[1] + b[1];
    for (int i = 1; i <= p - 1; ++i)
        second -= Rat(binomial(static_cast<unsigned long>(p), static_cast<unsigned long>(i))) /
                  Rat(p) * rat_pow(a[0], static_cast<unsigned long>(i)) *
                  rat_pow(b[0], static_cast<unsigned long>(p - i));
    return {a[0] + b[0], second};
}

std::array<Rat, 2> k1_mul_theta(int p, const std::array<Rat, 2>& a,
                                const std::array<Rat, 2>& b) {
    check_prime(p);
    return {a[0] * b[0],
            rat_pow(a[0], static_cast<unsigned long>(p)) * b[1] +
                a[1] * rat_pow(b[0], static_cast<unsigned long>(p)) +
                Rat(p) * a[1] * b[1]};
}

}  // namespace wittforge
