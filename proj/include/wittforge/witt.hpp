#ifndef WITTFORGE_WITT_HPP
#define WITTFORGE_WITT_HPP

#include <optional>
#include <vector>

#include "wittforge/symfunc.hpp"

namespace wittforge {

// Coefficient domains, all embedded in Q. NAT = INT intersect NONNEG_RAT.
enum class Domain { Nat, Integer, NonnegRat, Rational };

bool domain_contains(Domain d, const Rat& x);
const char* domain_name(Domain d);
// "nat" | "int" | "qplus" | "q"
Domain domain_parse(const std::string& name);

// Series normalization sigma^{eps2}_{eps1}: a |-> (sum a(e_i) (eps1 t)^i)^eps2.
// The canonical sigma is (-1,-1), which lists the h-values.
enum class SeriesNorm { MinusMinus, PlusPlus, PlusMinus, MinusPlus };

int series_norm_eps1(SeriesNorm n);
int series_norm_eps2(SeriesNorm n);
// Two-character code, first char eps1, second eps2: "--", "++", "+-", "-+".
const char* series_norm_code(SeriesNorm n);
SeriesNorm series_norm_parse(const std::string& code);

// A big Witt vector truncated by weight: exact rational ghost components
// g_1..g_n, which determine every other coordinate view.
class WittVector {
  public:
    explicit WittVector(int truncation);  // zero
    static WittVector from_ghost(std::vector<Rat> ghost);

    int truncation() const { return static_cast<int>(ghost_.size()); }
    const std::vector<Rat>& ghost() const { return ghost_; }
    // 1-based ghost component g_i.
    const Rat& ghost_at(int i) const { return ghost_[static_cast<size_t>(i - 1)]; }

    bool operator==(const WittVector& o) const { return ghost_ == o.ghost_; }
    bool operator!=(const WittVector& o) const { return !(*this == o); }

  private:
    std::vector<Rat> ghost_;
};

// x(f): substitutes ghost components into the psi-expansion of f.
// Requires degree(f) <= truncation.
Rat value_at(const WittVector& x, const SymFunc& f);

// Coefficients a_1..a_n of sigma(x) in the chosen normalization (a_0 = 1).
std::vector<Rat> to_series(const WittVector& x, SeriesNorm norm = SeriesNorm::MinusMinus);
WittVector from_series(const std::vector<Rat>& coeffs,
                       SeriesNorm norm = SeriesNorm::MinusMinus);

// Values at theta_1..theta_n and the inverse via psi_n = sum_{d|n} d t_d^{n/d}.
std::vector<Rat> witt_coords(const WittVector& x);
WittVector from_witt_coords(const std::vector<Rat>& ts);

// Ghost components are componentwise for both operations.
WittVector add(const WittVector& x, const WittVector& y);
WittVector mul(const WittVector& x, const WittVector& y);
inline WittVector operator+(const WittVector& x, const WittVector& y) { return add(x, y); }
inline WittVector operator*(const WittVector& x, const WittVector& y) { return mul(x, y); }

// [a]: ghost <a, a^2, a^3, ...>.
WittVector teichmuller(const Rat& a, int truncation);
// <a>: ghost <a, -a^2, a^3, ...>.
WittVector anti_teichmuller(const Rat& a, int truncation);
// ghost <1, 0, 0, ...>; sigma(xi) = e^t.
WittVector xi(int truncation);

// Ghost index scaling: ghost(result)_i = ghost(x)_{m i}, truncation floor(n/m).
WittVector frobenius(int m, const WittVector& x);

// The Lambda-action f(x): ghost(result)_m = x(psi_m o f). Output truncation is
// floor(n / max psi index of f).
WittVector apply_symfunc(const SymFunc& f, const WittVector& x);

// x o omega; equals multiplication by anti_teichmuller(1) on ghost components.
WittVector omega_twist(const WittVector& x);

struct MembershipReport {
    bool member = true;
    std::optional<Partition> witness;  // first failing basis index
    Rat value;                         // its value
};

// x in W(A): every monomial value m_lambda(x), |lambda| <= n, lies in dom.
MembershipReport member_W(const WittVector& x, Domain dom);
// x in W^Sch(A): same with Schur values.
MembershipReport member_WSch(const WittVector& x, Domain dom);

// The effectivity conditions up to max_weight: for each partition, the basis
// element as a psi-polynomial (rendered downstream with psi_i named a_i).
std::vector<std::pair<Partition, SymFunc>> effectivity_expressions(BasisTag tag,
                                                                   int max_weight);

}  // namespace wittforge

#endif
