#include "wittforge/textio.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace wittforge {

Rat rat_parse(const std::string& s) {
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) throw parse_error("empty rational");
    if (!t.empty() && t[0] == '+') t = t.substr(1);
    for (size_t i = 0; i < t.size(); ++i) {
        char c = t[i];
        bool ok = std::isdigit(static_cast<unsigned char>(c)) || c == '/' ||
                  (c == '-' && i == 0);
        if (!ok) throw parse_error("malformed rational '" + s + "'");
    }
    auto slash = t.find('/');
    if (slash != std::string::npos &&
        (slash == 0 || slash + 1 == t.size() || t.find('/', slash + 1) != std::string::npos))
        throw parse_error("malformed rational '" + s + "'");
    try {
        Rat q(t);
        if (q.get_den() == 0) throw parse_error("zero denominator in '" + s + "'");
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw parse_error("malformed rational '" + s + "'");
    }
}

std::string rat_str(const Rat& q) { return q.get_str(); }

Rat rat_pow(const Rat& base, unsigned long e) {
    Rat out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num().get_mpz_t(), e);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den().get_mpz_t(), e);
    return out;
}

// --- symmetric function grammar ------------------------------------------------

namespace {

struct Cursor {
    const std::string& text;
    size_t i = 0;

    void skip_ws() {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    }
    bool done() {
        skip_ws();
        return i >= text.size();
    }
    char peek() {
        skip_ws();
        return i < text.size() ? text[i] : '\0';
    }
};

// number := digits [ '/' digits ]
Rat parse_number(Cursor& cur) {
    cur.skip_ws();
    size_t start = cur.i;
    while (cur.i < cur.text.size() &&
           std::isdigit(static_cast<unsigned char>(cur.text[cur.i])))
        ++cur.i;
    if (cur.i == start) throw parse_error("expected number at '" + cur.text.substr(start) + "'");
    std::string num = cur.text.substr(start, cur.i - start);
    if (cur.i < cur.text.size() && cur.text[cur.i] == '/') {
        ++cur.i;
        size_t dstart = cur.i;
        while (cur.i < cur.text.size() &&
               std::isdigit(static_cast<unsigned char>(cur.text[cur.i])))
            ++cur.i;
        if (cur.i == dstart) throw parse_error("expected denominator in '" + cur.text + "'");
        num += "/" + cur.text.substr(dstart, cur.i - dstart);
    }
    return rat_parse(num);
}

Partition parse_bracketed_partition(Cursor& cur) {
    cur.skip_ws();
    size_t start = cur.i;
    if (start >= cur.text.size() || cur.text[start] != '[')
        throw parse_error("expected '[' in '" + cur.text + "'");
    size_t end = cur.text.find(']', start);
    if (end == std::string::npos) throw parse_error("unterminated '[' in '" + cur.text + "'");
    Partition p = Partition::parse(cur.text.substr(start, end - start + 1));
    cur.i = end + 1;
    return p;
}

}  // namespace

SymFunc parse_symfunc(const std::string& text, int degree_bound) {
    Cursor cur{text};
    SymFunc out(degree_bound);
    bool first = true;
    while (!cur.done()) {
        int sign = 1;
        char c = cur.peek();
        if (c == '+' || c == '-') {
            sign = (c == '-') ? -1 : 1;
            ++cur.i;
        } else if (!first) {
            throw parse_error("expected '+' or '-' at '" + text.substr(cur.i) + "'");
        }
        first = false;
        cur.skip_ws();
        Rat coef = 1;
        bool saw_number = false;
        if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
            coef = parse_number(cur);
            saw_number = true;
        }
        bool saw_star = false;
        if (cur.peek() == '*') {
            if (!saw_number) throw parse_error("dangling '*' in '" + text + "'");
            saw_star = true;
            ++cur.i;
            cur.skip_ws();
        }
        char b = cur.peek();
        if (saw_star && !std::isalpha(static_cast<unsigned char>(b)))
            throw parse_error("expected basis element after '*' in '" + text + "'");
        if (std::isalpha(static_cast<unsigned char>(b))) {
            BasisTag tag = basis_tag_from_char(b);
            ++cur.i;
            Partition lambda = parse_bracketed_partition(cur);
            SymFunc elt = from_basis(tag, lambda, degree_bound);
            out = add(out, scale(sign * coef, elt));
        } else if (saw_number) {
            out = add(out, SymFunc::constant(sign * coef, degree_bound));
        } else {
            throw parse_error("expected term at '" + text.substr(cur.i) + "'");
        }
    }
    return out;
}

std::string render_symfunc(const SymFunc& f, BasisTag tag) {
    auto coeffs = to_basis_coeffs(tag, f);
    if (coeffs.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [lambda, c] : coeffs) {
        Rat a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (lambda.empty()) {
            os << rat_str(a);
        } else {
            if (a != 1) os << rat_str(a) << "*";
            os << static_cast<char>(tag) << lambda.str();
        }
    }
    return os.str();
}

json symfunc_to_json(const SymFunc& f, BasisTag tag) {
    json terms = json::array();
    for (const auto& [lambda, c] : to_basis_coeffs(tag, f)) {
        json term;
        term["partition"] = lambda.parts();
        term["coef"] = rat_str(c);
        terms.push_back(std::move(term));
    }
    json out;
    out["basis"] = std::string(1, static_cast<char>(tag));
    out["terms"] = std::move(terms);
    return out;
}

SymFunc symfunc_from_json(const json& j, int degree_bound) {
    if (!j.contains("basis") || !j.contains("terms"))
        throw parse_error("symmetric function JSON needs 'basis' and 'terms'");
    std::string b = j.at("basis").get<std::string>();
    if (b.size() != 1) throw parse_error("basis must be a single letter");
    BasisTag tag = basis_tag_from_char(b[0]);
    SymFunc out(degree_bound);
    for (const auto& term : j.at("terms")) {
        std::vector<int> parts = term.at("partition").get<std::vector<int>>();
        Rat coef = rat_parse(term.at("coef").get<std::string>());
        out = add(out, scale(coef, from_basis(tag, Partition(std::move(parts)), degree_bound)));
    }
    return out;
}

// --- ghost-symbol polynomials --------------------------------------------------

std::string render_ghost_poly(const SymFunc& f, const Int& forced_denominator) {
    if (f.is_zero()) return "0";
    Int den = forced_denominator;
    if (den == 0) {
        den = 1;
        for (const auto& [lambda, c] : f.terms())
            den = lcm(den, Int(c.get_den()));
    }
    // Ascending lexicographic on parts, the order the tables are printed in.
    std::vector<std::pair<Partition, Int>> terms;
    for (const auto& [lambda, c] : f.terms()) {
        Rat scaled = c * Rat(den);
        if (!is_integer(scaled))
            throw std::invalid_argument("denominator does not clear coefficients");
        terms.emplace_back(lambda, Int(scaled.get_num()));
    }
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        return a.first.parts() < b.first.parts();
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [lambda, n] : terms) {
        Int a = n;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        std::string mono;
        const auto& parts = lambda.parts();
        for (auto it = parts.rbegin(); it != parts.rend();) {
            int v = *it;
            int mult = 0;
            while (it != parts.rend() && *it == v) {
                ++mult;
                ++it;
            }
            mono += "a" + std::to_string(v);
            if (mult > 1) mono += "^" + std::to_string(mult);
        }
        if (mono.empty()) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str();
            os << mono;
        }
    }
    std::string body = os.str();
    if (den == 1) return body;
    return "(" + body + ")/" + den.get_str();
}

// --- Witt vector JSON ------------------------------------------------------------

namespace {

std::vector<Rat> rat_vector_from_json(const json& arr) {
    std::vector<Rat> out;
    for (const auto& v : arr) {
        if (v.is_string()) out.push_back(rat_parse(v.get<std::string>()));
        else if (v.is_number_integer()) out.push_back(Rat(v.get<long>()));
        else throw parse_error("rational entries must be strings or integers");
    }
    return out;
}

json rat_vector_to_json(const std::vector<Rat>& v) {
    json arr = json::array();
    for (const Rat& x : v) arr.push_back(rat_str(x));
    return arr;
}

}  // namespace

json witt_to_json(const WittVector& x) {
    json out;
    out["truncation"] = x.truncation();
    out["ghost"] = rat_vector_to_json(x.ghost());
    return out;
}

WittVector witt_from_json(const json& j) {
    int declared = j.contains("truncation") ? j.at("truncation").get<int>() : 0;
    auto check_length = [&](size_t len) {
        if (declared != 0 && declared != static_cast<int>(len))
            throw parse_error("declared truncation does not match coordinate length");
    };
    if (j.contains("ghost")) {
        auto g = rat_vector_from_json(j.at("ghost"));
        check_length(g.size());
        return WittVector::from_ghost(std::move(g));
    }
    if (j.contains("series")) {
        auto coeffs = rat_vector_from_json(j.at("series"));
        check_length(coeffs.size());
        SeriesNorm norm = SeriesNorm::MinusMinus;
        if (j.contains("normalization"))
            norm = series_norm_parse(j.at("normalization").get<std::string>());
        return from_series(coeffs, norm);
    }
    if (j.contains("witt")) {
        auto ts = rat_vector_from_json(j.at("witt"));
        check_length(ts.size());
        return from_witt_coords(ts);
    }
    throw parse_error("Witt vector JSON needs 'ghost', 'series' or 'witt'");
}

// --- p-typical JSON ----------------------------------------------------------------

json ptyp_ghost_to_json(const PTypGhost& g) {
    json out;
    out["p"] = g.p;
    out["k"] = g.k;
    out["ghost"] = rat_vector_to_json(g.a);
    return out;
}

PTypGhost ptyp_ghost_from_json(const json& j) {
    if (!j.contains("p") || !j.contains("k"))
        throw parse_error("p-typical JSON needs 'p' and 'k'");
    int p = j.at("p").get<int>();
    int k = j.at("k").get<int>();
    if (j.contains("ghost"))
        return PTypGhost(p, k, rat_vector_from_json(j.at("ghost")));
    if (j.contains("grid")) return grid_to_ghost(ptyp_grid_from_json(j));
    throw parse_error("p-typical JSON needs 'ghost' or 'grid'");
}

json ptyp_grid_to_json(const PTypWitt& w) {
    json grid;
    for (const auto& [cell, v] : w.grid())
        grid[std::to_string(cell.first) + "," + std::to_string(cell.second)] = rat_str(v);
    json out;
    out["p"] = w.p();
    out["k"] = w.k();
    out["grid"] = std::move(grid);
    return out;
}

PTypWitt ptyp_grid_from_json(const json& j) {
    if (!j.contains("p") || !j.contains("k") || !j.contains("grid"))
        throw parse_error("grid JSON needs 'p', 'k' and 'grid'");
    int p = j.at("p").get<int>();
    int k = j.at("k").get<int>();
    std::map<PTypWitt::Cell, Rat> grid;
    for (const auto& [key, value] : j.at("grid").items()) {
        auto comma = key.find(',');
        if (comma == std::string::npos) throw parse_error("grid keys look like \"i,j\"");
        int i = std::stoi(key.substr(0, comma));
        int jj = std::stoi(key.substr(comma + 1));
        grid[{i, jj}] = value.is_string() ? rat_parse(value.get<std::string>())
                                          : Rat(value.get<long>());
    }
    return PTypWitt(p, k, std::move(grid));
}

std::vector<Rat> parse_rat_list(const std::string& csv) {
    std::vector<Rat> out;
    std::string item;
    std::istringstream is(csv);
    while (std::getline(is, item, ',')) out.push_back(rat_parse(item));
    if (out.empty()) throw parse_error("expected a comma-separated list of rationals");
    return out;
}

}  // namespace wittforge
