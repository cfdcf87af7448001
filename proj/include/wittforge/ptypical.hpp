#ifndef WITTFORGE_PTYPICAL_HPP
#define WITTFORGE_PTYPICAL_HPP

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "wittforge/symfunc.hpp"
#include "wittforge/witt.hpp"

namespace wittforge {

// Ghost coordinates of a p-typical Witt vector of length k: the k+1 values
// at psi_p^{o 0}, ..., psi_p^{o k}.
struct PTypGhost {
    int p = 2;
    int k = 0;
    std::vector<Rat> a;  // size k+1

    PTypGhost(int p_, int k_, std::vector<Rat> a_);
};

// The coordinate grid (a_ij)_{i+j<=k} of values at psi_p^{o i} o d_p^{o j},
// subject to a_ij^p = a_{i+1,j} + p a_{i,j+1} for i+j < k.
class PTypWitt {
  public:
    using Cell = std::pair<int, int>;

    // Validates the defining relations; throws invalid_grid on violation.
    PTypWitt(int p, int k, std::map<Cell, Rat> grid);

    int p() const { return p_; }
    int k() const { return k_; }
    const std::map<Cell, Rat>& grid() const { return grid_; }
    const Rat& at(int i, int j) const { return grid_.at({i, j}); }
    // Tightest of the four domains containing every entry.
    Domain domain() const;

    bool operator==(const PTypWitt& o) const {
        return p_ == o.p_ && k_ == o.k_ && grid_ == o.grid_;
    }

  private:
    int p_;
    int k_;
    std::map<Cell, Rat> grid_;
};

struct invalid_grid : std::runtime_error {
    explicit invalid_grid(const std::string& what) : std::runtime_error(what) {}
};

// u_{i,0} = a_i, u_{i,j+1} = (u_{i,j}^p - u_{i+1,j}) / p.
PTypWitt ghost_to_grid(const PTypGhost& g);
// The first column of the grid; left inverse of ghost_to_grid.
PTypGhost grid_to_ghost(const PTypWitt& w);

// Componentwise on ghost coordinates, then re-gridded.
PTypWitt ptyp_add(const PTypWitt& a, const PTypWitt& b);
PTypWitt ptyp_mul(const PTypWitt& a, const PTypWitt& b);

PTypWitt ptyp_zero(int p, int k);
PTypWitt ptyp_one(int p, int k);
PTypWitt ptyp_teichmuller(int p, int k, const Rat& a);

struct GridMembership {
    bool member = true;
    std::optional<PTypWitt::Cell> witness;
    Rat value;
};

// Whether every grid entry derived from the ghost lies in dom.
GridMembership ptyp_member(const PTypGhost& g, Domain dom);

// Closed description of W_{(p),2}(R+) over the first coordinate: ghost
// <a, a^p x, a^{p^2} y> is a member iff x, y >= 0, x <= 1 and
// 0 <= x^p - y <= (1-x)^p / p^{p-1}.
bool region_check_k2(int p, const Rat& a, const Rat& x, const Rat& y);

// psi_p^{o i} o d_p^{o j} as a symmetric function (degree p^{i+j}).
SymFunc ptyp_generator(int p, int i, int j, int degree_bound);

struct PTypMonomial {
    std::map<PTypWitt::Cell, int> exponents;
    int degree = 0;
    SymFunc value;
};

// All monomials prod (psi_p^{o i} o d_p^{o j})^{m_ij} with m_ij < p for
// i+j < k (unbounded on the boundary i+j = k) and total degree <= max_degree.
std::vector<PTypMonomial> basis_monomials(int p, int k, int max_degree);

struct BasisLemmaReport {
    bool independent = false;
    int monomial_count = 0;
    int rank = 0;
    std::map<int, int> monomials_per_degree;
};

// Expands the basis monomials into psi coordinates and certifies Q-linear
// independence by an exact rank computation.
BasisLemmaReport verify_basis_lemma(int p, int k, int max_degree);

struct DpCoproductReport {
    bool add_ok = false;
    bool mul_ok = false;
    bool coefficients_nonnegative = false;
};

// Delta+(d_p) = d_p(x)1 + 1(x)d_p + sum_{i=1}^{p-1} (1/p) C(p,i) psi_1^i (x) psi_1^{p-i}
// Delta*(d_p) = d_p(x)psi_p + psi_p(x)d_p + p d_p(x)d_p
DpCoproductReport dp_coproduct_check(int p);

// Closed length-1 laws, kept as independent oracles against ghost arithmetic.
// Grid coordinates (a00, a10, a01):
std::array<Rat, 3> k1_add_grid(int p, const std::array<Rat, 3>& a,
                               const std::array<Rat, 3>& b);
std::array<Rat, 3> k1_mul_grid(int p, const std::array<Rat, 3>& a,
                               const std::array<Rat, 3>& b);
// Witt coordinates (t0, t1) = (a00, -a01):
std::array<Rat, 2> k1_add_theta(int p, const std::array<Rat, 2>& a,
                                const std::array<Rat, 2>& b);
std::array<Rat, 2> k1_mul_theta(int p, const std::array<Rat, 2>& a,
                                const std::array<Rat, 2>& b);

}  // namespace wittforge

#endif
