#ifndef WITTFORGE_SYMFUNC_HPP
#define WITTFORGE_SYMFUNC_HPP

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "wittforge/partition.hpp"
#include "wittforge/rational.hpp"

namespace wittforge {

inline constexpr int kDefaultDegreeBound = 12;

enum class BasisTag : char {
    m = 'm',  // monomial
    e = 'e',  // elementary
    h = 'h',  // complete homogeneous
    p = 'p',  // power sum
    s = 's',  // Schur
    w = 'w',  // Witt theta
};

BasisTag basis_tag_from_char(char c);

// Whether overly long products fail loudly or drop high-degree terms.
enum class Overflow { Strict, Truncate };

// A symmetric function of bounded degree, stored as an exact rational
// coefficient map in the power-sum basis: f = sum_lambda c_lambda psi_lambda,
// psi_lambda = psi_{lambda_1} psi_{lambda_2} ... . The representation is
// canonical: zero coefficients are never stored, so equality of coefficient
// maps is equality of values.
class SymFunc {
  public:
    explicit SymFunc(int degree_bound = kDefaultDegreeBound);

    static SymFunc zero(int degree_bound = kDefaultDegreeBound);
    static SymFunc one(int degree_bound = kDefaultDegreeBound);
    static SymFunc constant(const Rat& c, int degree_bound = kDefaultDegreeBound);
    // c * psi_lambda
    static SymFunc psi_term(const Partition& lambda, const Rat& c, int degree_bound);
    static SymFunc psi(int n, int degree_bound);

    int degree_bound() const { return degree_bound_; }
    const std::map<Partition, Rat>& terms() const { return terms_; }
    Rat coeff(const Partition& lambda) const;
    bool is_zero() const { return terms_.empty(); }
    // Largest weight in the support (0 for constants and zero).
    int degree() const;
    // Largest single psi index in the support (0 for constants and zero).
    int max_psi_index() const;

    // Adds c * psi_lambda, erasing the entry if it cancels. Enforces the
    // degree bound.
    void add_term(const Partition& lambda, const Rat& c);

    bool operator==(const SymFunc& o) const { return terms_ == o.terms_; }
    bool operator!=(const SymFunc& o) const { return !(*this == o); }

  private:
    int degree_bound_;
    std::map<Partition, Rat> terms_;
};

// Element of Lambda (x) Lambda in the psi (x) psi basis, same conventions.
class TensorSymFunc {
  public:
    using Key = std::pair<Partition, Partition>;

    explicit TensorSymFunc(int degree_bound = kDefaultDegreeBound);

    static TensorSymFunc zero(int degree_bound = kDefaultDegreeBound);
    // f (x) g
    static TensorSymFunc tensor(const SymFunc& f, const SymFunc& g);

    int degree_bound() const { return degree_bound_; }
    const std::map<Key, Rat>& terms() const { return terms_; }
    Rat coeff(const Partition& left, const Partition& right) const;
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Partition& left, const Partition& right, const Rat& c);

    bool operator==(const TensorSymFunc& o) const { return terms_ == o.terms_; }
    bool operator!=(const TensorSymFunc& o) const { return !(*this == o); }

  private:
    int degree_bound_;
    std::map<Key, Rat> terms_;
};

// --- ring operations ------------------------------------------------------

SymFunc add(const SymFunc& f, const SymFunc& g);
SymFunc sub(const SymFunc& f, const SymFunc& g);
SymFunc negate(const SymFunc& f);
SymFunc scale(const Rat& c, const SymFunc& f);
SymFunc multiply(const SymFunc& f, const SymFunc& g, Overflow mode = Overflow::Strict);
SymFunc power(const SymFunc& f, int n, Overflow mode = Overflow::Strict);

inline SymFunc operator+(const SymFunc& f, const SymFunc& g) { return add(f, g); }
inline SymFunc operator-(const SymFunc& f, const SymFunc& g) { return sub(f, g); }
inline SymFunc operator-(const SymFunc& f) { return negate(f); }
inline SymFunc operator*(const SymFunc& f, const SymFunc& g) { return multiply(f, g); }
inline SymFunc operator*(const Rat& c, const SymFunc& f) { return scale(c, f); }

TensorSymFunc add(const TensorSymFunc& a, const TensorSymFunc& b);
TensorSymFunc sub(const TensorSymFunc& a, const TensorSymFunc& b);
TensorSymFunc scale(const Rat& c, const TensorSymFunc& a);
TensorSymFunc multiply(const TensorSymFunc& a, const TensorSymFunc& b,
                       Overflow mode = Overflow::Strict);

inline TensorSymFunc operator+(const TensorSymFunc& a, const TensorSymFunc& b) {
    return add(a, b);
}
inline TensorSymFunc operator-(const TensorSymFunc& a, const TensorSymFunc& b) {
    return sub(a, b);
}
inline TensorSymFunc operator*(const TensorSymFunc& a, const TensorSymFunc& b) {
    return multiply(a, b);
}

// --- composition structure -------------------------------------------------

// f o g. psi_n o g scales every psi index of g by n; extended to f as an
// algebra map. psi_1 is a two-sided identity.
SymFunc plethysm(const SymFunc& f, const SymFunc& g);

// Scales every psi index by n (= psi_n o f).
SymFunc scale_psi_indices(const SymFunc& f, int n);

// Co-addition: psi_n |-> psi_n (x) 1 + 1 (x) psi_n, applied as an algebra map.
TensorSymFunc coproduct_add(const SymFunc& f);
// Co-multiplication: psi_n |-> psi_n (x) psi_n.
TensorSymFunc coproduct_mul(const SymFunc& f);

// psi_n |-> 0 (evaluation at (0,0,...)).
Rat counit_add(const SymFunc& f);
// psi_n |-> 1 (evaluation at (1,0,0,...)).
Rat counit_mul(const SymFunc& f);

// The involution with omega(psi_n) = (-1)^(n+1) psi_n; omega(h_n) = e_n.
SymFunc omega(const SymFunc& f);

// psi_n |-> a for every n (the trivial Lambda-structure on Q).
Rat evaluate_at_scalar(const SymFunc& f, const Rat& a);
// psi_n |-> sum_i values[i]^n (substitution x_i = values[i], rest 0).
Rat evaluate_finite(const SymFunc& f, const std::vector<Rat>& values);

// --- bases ------------------------------------------------------------------

// The basis element indexed by lambda, in internal psi form. For the
// multiplicative families (e, h, p, w) this is the product over parts; for m
// and s it is the single basis element.
SymFunc from_basis(BasisTag tag, const Partition& lambda, int degree_bound);

// The unique coefficient vector of f in the chosen basis; inverse of
// from_basis on basis elements. Keys with zero coefficient are omitted.
std::map<Partition, Rat> to_basis_coeffs(BasisTag tag, const SymFunc& f);

// Per-leg change of basis on a tensor.
std::map<TensorSymFunc::Key, Rat> tensor_to_basis_coeffs(const TensorSymFunc& t,
                                                         BasisTag tag);

// theta_d: theta_1 = psi_1, theta_n = (psi_n - sum_{d|n, d<n} d theta_d^{n/d}) / n.
SymFunc theta(int d, int degree_bound);
// d_n = -theta_n for n >= 2; for primes this equals (psi_1^p - psi_p)/p.
SymFunc d_op(int n, int degree_bound);

// Irreducible symmetric-group character chi^lambda(mu), |lambda| = |mu|,
// by the Murnaghan-Nakayama border-strip recursion (memoized).
Int character(const Partition& lambda, const Partition& mu);

// --- positivity --------------------------------------------------------------

struct PositivityReport {
    bool nonnegative = true;
    bool integral = true;
    // First partition (in graded reverse-lex order) with a negative
    // coefficient, and its value.
    std::optional<Partition> negative_witness;
    Rat negative_value;
    std::optional<Partition> nonintegral_witness;
    Rat nonintegral_value;
};

PositivityReport is_monomial_positive(const SymFunc& f);
PositivityReport is_schur_positive(const SymFunc& f);

// --- shared caches -----------------------------------------------------------

// Derived data only: deleting or preloading never changes any result.
struct CacheSnapshot {
    // chi^lambda(mu) keyed by "lambda|mu" in partition text form.
    std::map<std::string, std::string> characters;
    // psi-expansions of monomial basis elements, keyed by partition text form.
    std::map<std::string, std::map<std::string, std::string>> monomial_rows;
};

CacheSnapshot cache_export();
void cache_import(const CacheSnapshot& snap);
void cache_clear();

}  // namespace wittforge

#endif
