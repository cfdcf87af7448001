#ifndef WITTFORGE_TOTALPOS_HPP
#define WITTFORGE_TOTALPOS_HPP

#include <optional>
#include <vector>

#include "wittforge/partition.hpp"
#include "wittforge/rational.hpp"

namespace wittforge {

// A truncated series 1 + a_1 t + ... + a_n t^n with exact rational
// coefficients; the constant term is fixed at 1 and not stored.
class TruncSeries {
  public:
    explicit TruncSeries(std::vector<Rat> coeffs);

    int order() const { return static_cast<int>(coeffs_.size()); }
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    // a_m with a_0 = 1 and a_m = 0 outside 0..n.
    Rat at(int m) const;
    bool integral() const;
    // Degree of the underlying polynomial: largest m with a_m != 0.
    int poly_degree() const;

    bool operator==(const TruncSeries& o) const { return coeffs_ == o.coeffs_; }

  private:
    std::vector<Rat> coeffs_;
};

struct MinorWitness {
    std::vector<int> rows;
    std::vector<int> cols;
    Rat value;
};

struct ToeplitzReport {
    bool nonnegative = true;
    std::optional<MinorWitness> witness;
};

// How a truncated coefficient vector is read. Polynomial: the series IS
// 1 + ... + a_n t^n, zero-extended, and minors may reach past n.
// Truncated: coefficients beyond n are unknown, so only minors whose
// entries are all determined (indices <= n) are examined; this is a
// necessary condition for extending to a totally nonnegative series.
enum class SeriesView { Polynomial, Truncated };

// Checks every r' x r' minor, r' <= max_order, of the Toeplitz matrix
// (a_{i-j}). Truncation-level test: necessary, not sufficient, for total
// nonnegativity of an extension; exact at bounded order for polynomials.
ToeplitzReport toeplitz_minors_nonneg(const TruncSeries& s, int max_order,
                                      SeriesView view = SeriesView::Polynomial);

// The minor det(a_{lambda_i - mu_j - i + j}): the skew Schur evaluation
// s_{lambda/mu} with h_k replaced by a_k.
Rat skew_schur_witness(const TruncSeries& s, const Partition& lambda,
                       const Partition& mu);

// Exact decision for integral series: does 1 + a_1 t + ... have only real
// roots <= 0, counted with multiplicity, up to its polynomial degree?
// Square-free decomposition followed by Sturm counting on (-inf, 0).
bool nonpositive_real_roots(const TruncSeries& s);

// Truncation of e^{gamma t} prod_i (1 + alpha_i t) / prod_i (1 - beta_i t)
// to order n. All parameters must be >= 0.
TruncSeries edrei_thoma_truncation(const Rat& gamma, const std::vector<Rat>& alphas,
                                   const std::vector<Rat>& betas, int n);

struct FactorialBoundReport {
    bool ok = true;
    int witness_index = 0;  // first m with a_m > a_1^m / m!
    Rat value;
    Rat bound;
};

// a_m <= a_1^m / m! for 2 <= m <= n; necessary for membership in
// sigma^+_+(W(R+)).
FactorialBoundReport factorial_bound_check(const TruncSeries& s);

}  // namespace wittforge

#endif
