#ifndef WITTFORGE_TEXTIO_HPP
#define WITTFORGE_TEXTIO_HPP

#include <string>

#include "wittforge/ptypical.hpp"
#include "wittforge/symfunc.hpp"
#include "wittforge/witt.hpp"

#include <json.hpp>

namespace wittforge {

using nlohmann::json;

// Grammar: term (+- term)*, term = [coef '*'] basis '[' parts ']' | coef,
// coef an integer or a/b. Example: "3*m[2,1] - 1/2*p[3] + s[1,1]".
SymFunc parse_symfunc(const std::string& text, int degree_bound);

// Inverse of parse_symfunc for the given basis; empty sum prints "0".
std::string render_symfunc(const SymFunc& f, BasisTag tag);

// {"basis": "p", "terms": [{"partition": [3], "coef": "-1/2"}]}
json symfunc_to_json(const SymFunc& f, BasisTag tag);
SymFunc symfunc_from_json(const json& j, int degree_bound);

// Renders a psi-polynomial as a polynomial in ghost symbols a1, a2, ...,
// over a common denominator: "(a1^2 - a2)/2". If forced_denominator is
// nonzero it is used verbatim instead of the least common denominator.
std::string render_ghost_poly(const SymFunc& f, const Int& forced_denominator = 0);

// {"truncation": 3, "ghost": ["2", "4", "8"]}; input also accepts
// {"series": [...], "normalization": "--"} and {"witt": [...]}.
json witt_to_json(const WittVector& x);
WittVector witt_from_json(const json& j);

// {"p": 2, "k": 2, "ghost": ["1","1/2","1/8"]} or {"grid": {"0,0": "1", ...}}.
json ptyp_ghost_to_json(const PTypGhost& g);
PTypGhost ptyp_ghost_from_json(const json& j);
json ptyp_grid_to_json(const PTypWitt& w);
PTypWitt ptyp_grid_from_json(const json& j);

std::vector<Rat> parse_rat_list(const std::string& csv);

}  // namespace wittforge

#endif
