#include <cstdlib>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "wittforge/textio.hpp"
#include "wittforge/totalpos.hpp"
#include "wittforge/verify.hpp"

using namespace wittforge;

namespace {

std::string default_cache_path() {
    if (const char* env = std::getenv("WITT_FORGE_CACHE")) return env;
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"))
        return std::string(xdg) + "/wittforge-cache.json";
    if (const char* home = std::getenv("HOME"))
        return std::string(home) + "/.cache/wittforge-cache.json";
    return "wittforge-cache.json";
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

json membership_json(const MembershipReport& rep) {
    json out;
    out["member"] = rep.member;
    if (rep.witness) {
        out["witness"] = rep.witness->str();
        out["value"] = rat_str(rep.value);
    }
    return out;
}

// Input options shared by the witt subcommands.
struct WittInput {
    std::string input_json;
    std::string ghost_csv;
    std::string series_csv;
    std::string witt_csv;
    std::string normalization = "--";

    void attach(CLI::App* cmd) {
        cmd->add_option("--input", input_json, "Witt vector as JSON");
        cmd->add_option("--ghost", ghost_csv, "ghost components g_1,g_2,...");
        cmd->add_option("--series", series_csv, "series coefficients a_1,a_2,...");
        cmd->add_option("--witt", witt_csv, "Witt coordinates t_1,t_2,...");
        cmd->add_option("--normalization", normalization,
                        "series normalization --|++|+-|-+");
    }
    WittVector to_witt() const {
        if (!input_json.empty()) return witt_from_json(json::parse(input_json));
        if (!ghost_csv.empty()) return WittVector::from_ghost(parse_rat_list(ghost_csv));
        if (!series_csv.empty())
            return from_series(parse_rat_list(series_csv),
                               series_norm_parse(normalization));
        if (!witt_csv.empty()) return from_witt_coords(parse_rat_list(witt_csv));
        throw parse_error("no Witt vector given (use --input/--ghost/--series/--witt)");
    }
};

int run(int argc, char** argv) {
    CLI::App app{"exact symmetric functions, Witt vectors and total positivity"};
    app.require_subcommand(1);

    int max_degree = 0;
    std::string cache_path;
    app.add_option("--max-degree", max_degree, "working degree bound (default 12)");
    app.add_option("--cache-path", cache_path, "computation cache file");

    // --- sf ---------------------------------------------------------------
    auto* sf = app.add_subcommand("sf", "symmetric function operations");
    sf->require_subcommand(1);
    std::string sf_expr, sf_lhs, sf_rhs, sf_to = "p", sf_kind = "add";

    auto* sf_convert = sf->add_subcommand("convert", "rewrite in a chosen basis");
    sf_convert->add_option("--expr", sf_expr)->required();
    sf_convert->add_option("--to", sf_to, "target basis m|e|h|p|s|w");

    auto* sf_multiply = sf->add_subcommand("multiply", "product of two expressions");
    sf_multiply->add_option("--lhs", sf_lhs)->required();
    sf_multiply->add_option("--rhs", sf_rhs)->required();
    sf_multiply->add_option("--to", sf_to);

    auto* sf_plethysm = sf->add_subcommand("plethysm", "composition lhs o rhs");
    sf_plethysm->add_option("--lhs", sf_lhs)->required();
    sf_plethysm->add_option("--rhs", sf_rhs)->required();
    sf_plethysm->add_option("--to", sf_to);

    auto* sf_coproduct = sf->add_subcommand("coproduct", "co-addition or co-multiplication");
    sf_coproduct->add_option("--kind", sf_kind, "add|mul");
    sf_coproduct->add_option("--expr", sf_expr)->required();
    sf_coproduct->add_option("--to", sf_to);

    auto* sf_positivity = sf->add_subcommand("positivity", "monomial/Schur positivity");
    sf_positivity->add_option("--expr", sf_expr)->required();

    // --- witt -------------------------------------------------------------
    auto* witt = app.add_subcommand("witt", "big Witt vectors");
    witt->require_subcommand(1);
    WittInput witt_in, witt_lhs_in, witt_rhs_in;
    std::string witt_value = "0", witt_domain = "nat", witt_norm_out = "--";
    int witt_n = 4;
    bool witt_anti = false;

    auto* witt_ghost = witt->add_subcommand("ghost", "all coordinate views");
    witt_in.attach(witt_ghost);

    auto* witt_series = witt->add_subcommand("series", "series coordinates");
    witt_in.attach(witt_series);
    witt_series->add_option("--to-normalization", witt_norm_out, "output normalization");

    auto* witt_add = witt->add_subcommand("add", "sum of two Witt vectors");
    witt_add->add_option("--lhs", witt_lhs_in.input_json, "JSON")->required();
    witt_add->add_option("--rhs", witt_rhs_in.input_json, "JSON")->required();

    auto* witt_mul = witt->add_subcommand("mul", "product of two Witt vectors");
    witt_mul->add_option("--lhs", witt_lhs_in.input_json, "JSON")->required();
    witt_mul->add_option("--rhs", witt_rhs_in.input_json, "JSON")->required();

    auto* witt_teich = witt->add_subcommand("teich", "(anti-)Teichmueller lift");
    witt_teich->add_option("--value", witt_value)->required();
    witt_teich->add_option("--n", witt_n, "truncation weight");
    witt_teich->add_flag("--anti", witt_anti, "anti-Teichmueller lift");

    auto* witt_xi = witt->add_subcommand("xi", "ghost <1,0,0,...>");
    witt_xi->add_option("--n", witt_n, "truncation weight");

    auto* witt_member = witt->add_subcommand("member", "effectivity membership");
    witt_in.attach(witt_member);
    witt_member->add_option("--domain", witt_domain, "nat|int|qplus|q");

    // --- ptypical -----------------------------------------------------------
    auto* pt = app.add_subcommand("ptypical", "p-typical Witt vectors");
    pt->require_subcommand(1);
    int pt_p = 2, pt_k = 1, pt_maxdeg = 4;
    std::string pt_ghost, pt_lhs, pt_rhs, pt_domain = "nat", pt_input;

    auto* pt_member = pt->add_subcommand("member", "grid membership verdict");
    pt_member->add_option("--p", pt_p)->required();
    pt_member->add_option("--k", pt_k)->required();
    pt_member->add_option("--ghost", pt_ghost, "a_0,...,a_k");
    pt_member->add_option("--input", pt_input, "JSON");
    pt_member->add_option("--domain", pt_domain);

    auto* pt_grid = pt->add_subcommand("grid", "ghost to coordinate grid");
    pt_grid->add_option("--p", pt_p)->required();
    pt_grid->add_option("--k", pt_k)->required();
    pt_grid->add_option("--ghost", pt_ghost);
    pt_grid->add_option("--input", pt_input, "JSON");

    auto* pt_add = pt->add_subcommand("add", "sum in ghost coordinates");
    pt_add->add_option("--p", pt_p)->required();
    pt_add->add_option("--k", pt_k)->required();
    pt_add->add_option("--lhs", pt_lhs, "ghost CSV")->required();
    pt_add->add_option("--rhs", pt_rhs, "ghost CSV")->required();

    auto* pt_mul = pt->add_subcommand("mul", "product in ghost coordinates");
    pt_mul->add_option("--p", pt_p)->required();
    pt_mul->add_option("--k", pt_k)->required();
    pt_mul->add_option("--lhs", pt_lhs, "ghost CSV")->required();
    pt_mul->add_option("--rhs", pt_rhs, "ghost CSV")->required();

    auto* pt_basis = pt->add_subcommand("verify-basis", "basis independence report");
    pt_basis->add_option("--p", pt_p)->required();
    pt_basis->add_option("--k", pt_k)->required();
    pt_basis->add_option("--max-degree", pt_maxdeg)->required();

    // --- tnn ---------------------------------------------------------------
    auto* tnn = app.add_subcommand("tnn", "total nonnegativity of truncated series");
    tnn->require_subcommand(1);
    std::string tnn_coeffs, tnn_gamma = "0", tnn_alpha, tnn_beta;
    int tnn_order = 4, tnn_n = 8;

    auto* tnn_check = tnn->add_subcommand("check", "Toeplitz minors up to an order");
    std::string tnn_view = "polynomial";
    tnn_check->add_option("--coeffs", tnn_coeffs, "1,a1,a2,... (constant 1 included)")
        ->required();
    tnn_check->add_option("--order", tnn_order);
    tnn_check->add_option("--view", tnn_view,
                          "polynomial (zero-extended) or truncated (indices <= n)");

    auto* tnn_roots = tnn->add_subcommand("roots", "nonpositive-real-rootedness");
    tnn_roots->add_option("--coeffs", tnn_coeffs)->required();

    auto* tnn_edrei = tnn->add_subcommand("edrei", "Edrei-Thoma truncation");
    tnn_edrei->add_option("--gamma", tnn_gamma);
    tnn_edrei->add_option("--alpha", tnn_alpha, "comma-separated alphas");
    tnn_edrei->add_option("--beta", tnn_beta, "comma-separated betas");
    tnn_edrei->add_option("--n", tnn_n, "truncation order");

    // --- verify -------------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "reproduce the published computations");
    bool verify_all = false, verify_slow = false, verify_json = false;
    std::vector<std::string> verify_checks;
    verify->add_flag("--all", verify_all, "run every check (default)");
    verify->add_flag("--slow", verify_slow, "include the degree-25 computation");
    verify->add_flag("--json", verify_json, "emit a JSON report array");
    verify->add_option("--check", verify_checks, "run only the named checks");
    bool verify_list = false;
    verify->add_flag("--list", verify_list, "list check names and exit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (cache_path.empty()) cache_path = default_cache_path();
    cache_load_file(cache_path);
    struct CacheSaver {
        std::string path;
        ~CacheSaver() { cache_save_file(path); }
    } saver{cache_path};

    int bound = max_degree > 0 ? max_degree : kDefaultDegreeBound;
    auto target_basis = [&]() {
        if (sf_to.size() != 1) throw parse_error("--to takes a single basis letter");
        return basis_tag_from_char(sf_to[0]);
    };

    auto parse_series_arg = [&](const std::string& csv) {
        auto vals = parse_rat_list(csv);
        if (vals.front() != 1) throw parse_error("series coefficients must start with 1");
        vals.erase(vals.begin());
        if (vals.empty()) throw parse_error("series needs at least one coefficient past 1");
        return TruncSeries(std::move(vals));
    };

    // sf
    if (sf_convert->parsed()) {
        emit(symfunc_to_json(parse_symfunc(sf_expr, bound), target_basis()));
        return 0;
    }
    if (sf_multiply->parsed()) {
        SymFunc f = multiply(parse_symfunc(sf_lhs, bound), parse_symfunc(sf_rhs, bound));
        emit(symfunc_to_json(f, target_basis()));
        return 0;
    }
    if (sf_plethysm->parsed()) {
        SymFunc f = plethysm(parse_symfunc(sf_lhs, bound), parse_symfunc(sf_rhs, bound));
        emit(symfunc_to_json(f, target_basis()));
        return 0;
    }
    if (sf_coproduct->parsed()) {
        if (sf_kind != "add" && sf_kind != "mul")
            throw parse_error("--kind must be add or mul");
        SymFunc f = parse_symfunc(sf_expr, bound);
        TensorSymFunc t = sf_kind == "mul" ? coproduct_mul(f) : coproduct_add(f);
        BasisTag tag = target_basis();
        json terms = json::array();
        for (const auto& [key, c] : tensor_to_basis_coeffs(t, tag)) {
            json term;
            term["left"] = key.first.parts();
            term["right"] = key.second.parts();
            term["coef"] = rat_str(c);
            terms.push_back(std::move(term));
        }
        json out;
        out["kind"] = sf_kind;
        out["basis"] = sf_to.substr(0, 1);
        out["terms"] = std::move(terms);
        emit(out);
        return 0;
    }
    if (sf_positivity->parsed()) {
        SymFunc f = parse_symfunc(sf_expr, bound);
        auto mono = is_monomial_positive(f);
        auto schur = is_schur_positive(f);
        json out;
        out["monomial_positive"] = mono.nonnegative;
        out["monomial_integral"] = mono.integral;
        out["schur_positive"] = schur.nonnegative;
        out["schur_integral"] = schur.integral;
        if (mono.negative_witness) {
            out["monomial_witness"] = mono.negative_witness->str();
            out["monomial_witness_value"] = rat_str(mono.negative_value);
        }
        if (schur.negative_witness) {
            out["schur_witness"] = schur.negative_witness->str();
            out["schur_witness_value"] = rat_str(schur.negative_value);
        }
        emit(out);
        return 0;
    }

    // witt
    if (witt_ghost->parsed()) {
        WittVector x = witt_in.to_witt();
        json out = witt_to_json(x);
        json series;
        for (SeriesNorm norm : {SeriesNorm::MinusMinus, SeriesNorm::PlusPlus,
                                SeriesNorm::PlusMinus, SeriesNorm::MinusPlus}) {
            json arr = json::array();
            for (const Rat& c : to_series(x, norm)) arr.push_back(rat_str(c));
            series[series_norm_code(norm)] = std::move(arr);
        }
        out["series"] = std::move(series);
        json witt_arr = json::array();
        for (const Rat& c : witt_coords(x)) witt_arr.push_back(rat_str(c));
        out["witt"] = std::move(witt_arr);
        emit(out);
        return 0;
    }
    if (witt_series->parsed()) {
        WittVector x = witt_in.to_witt();
        json arr = json::array();
        for (const Rat& c : to_series(x, series_norm_parse(witt_norm_out)))
            arr.push_back(rat_str(c));
        json out;
        out["normalization"] = witt_norm_out;
        out["series"] = std::move(arr);
        emit(out);
        return 0;
    }
    if (witt_add->parsed() || witt_mul->parsed()) {
        WittVector x = witt_from_json(json::parse(witt_lhs_in.input_json));
        WittVector y = witt_from_json(json::parse(witt_rhs_in.input_json));
        emit(witt_to_json(witt_add->parsed() ? add(x, y) : mul(x, y)));
        return 0;
    }
    if (witt_teich->parsed()) {
        Rat a = rat_parse(witt_value);
        emit(witt_to_json(witt_anti ? anti_teichmuller(a, witt_n)
                                    : teichmuller(a, witt_n)));
        return 0;
    }
    if (witt_xi->parsed()) {
        emit(witt_to_json(xi(witt_n)));
        return 0;
    }
    if (witt_member->parsed()) {
        WittVector x = witt_in.to_witt();
        Domain dom = domain_parse(witt_domain);
        json out;
        out["domain"] = witt_domain;
        auto w = member_W(x, dom);
        auto ws = member_WSch(x, dom);
        out["in_W"] = w.member;
        out["in_WSch"] = ws.member;
        if (w.witness) out["W_witness"] = membership_json(w);
        if (ws.witness) out["WSch_witness"] = membership_json(ws);
        emit(out);
        return 0;
    }

    // ptypical
    auto pt_ghost_arg = [&]() {
        if (!pt_input.empty()) return ptyp_ghost_from_json(json::parse(pt_input));
        if (pt_ghost.empty()) throw parse_error("expected --ghost or --input");
        return PTypGhost(pt_p, pt_k, parse_rat_list(pt_ghost));
    };
    if (pt_member->parsed()) {
        auto rep = ptyp_member(pt_ghost_arg(), domain_parse(pt_domain));
        json out;
        out["member"] = rep.member;
        out["domain"] = pt_domain;
        if (rep.witness) {
            out["witness"] = std::to_string(rep.witness->first) + "," +
                             std::to_string(rep.witness->second);
            out["value"] = rat_str(rep.value);
        }
        emit(out);
        return 0;
    }
    if (pt_grid->parsed()) {
        PTypWitt w = ghost_to_grid(pt_ghost_arg());
        json out = ptyp_grid_to_json(w);
        out["domain"] = domain_name(w.domain());
        emit(out);
        return 0;
    }
    if (pt_add->parsed() || pt_mul->parsed()) {
        PTypWitt a = ghost_to_grid(PTypGhost(pt_p, pt_k, parse_rat_list(pt_lhs)));
        PTypWitt b = ghost_to_grid(PTypGhost(pt_p, pt_k, parse_rat_list(pt_rhs)));
        PTypWitt c = pt_add->parsed() ? ptyp_add(a, b) : ptyp_mul(a, b);
        json out = ptyp_grid_to_json(c);
        json arr = json::array();
        for (const Rat& v : grid_to_ghost(c).a) arr.push_back(rat_str(v));
        out["ghost"] = std::move(arr);
        emit(out);
        return 0;
    }
    if (pt_basis->parsed()) {
        auto rep = verify_basis_lemma(pt_p, pt_k, pt_maxdeg);
        json out;
        out["independent"] = rep.independent;
        out["monomials"] = rep.monomial_count;
        out["rank"] = rep.rank;
        json per;
        for (const auto& [deg, count] : rep.monomials_per_degree)
            per[std::to_string(deg)] = count;
        out["per_degree"] = std::move(per);
        emit(out);
        return 0;
    }

    // tnn
    if (tnn_check->parsed()) {
        TruncSeries s = parse_series_arg(tnn_coeffs);
        SeriesView view;
        if (tnn_view == "polynomial") view = SeriesView::Polynomial;
        else if (tnn_view == "truncated") view = SeriesView::Truncated;
        else throw parse_error("--view must be polynomial or truncated");
        auto rep = toeplitz_minors_nonneg(s, tnn_order, view);
        json out;
        out["nonnegative"] = rep.nonnegative;
        out["order"] = tnn_order;
        out["view"] = tnn_view;
        if (rep.witness) {
            json w;
            w["rows"] = rep.witness->rows;
            w["cols"] = rep.witness->cols;
            w["value"] = rat_str(rep.witness->value);
            out["witness"] = std::move(w);
        }
        emit(out);
        return 0;
    }
    if (tnn_roots->parsed()) {
        TruncSeries s = parse_series_arg(tnn_coeffs);
        json out;
        out["in_W_N"] = nonpositive_real_roots(s);
        emit(out);
        return 0;
    }
    if (tnn_edrei->parsed()) {
        std::vector<Rat> alphas, betas;
        if (!tnn_alpha.empty()) alphas = parse_rat_list(tnn_alpha);
        if (!tnn_beta.empty()) betas = parse_rat_list(tnn_beta);
        TruncSeries s = edrei_thoma_truncation(rat_parse(tnn_gamma), alphas, betas, tnn_n);
        json arr = json::array();
        for (const Rat& c : s.coeffs()) arr.push_back(rat_str(c));
        json out;
        out["coeffs"] = std::move(arr);
        emit(out);
        return 0;
    }

    // verify
    if (verify->parsed()) {
        VerifyOptions opts;
        opts.slow = verify_slow;
        opts.max_degree = max_degree;
        if (verify_list) {
            for (const auto& name : verify_check_names()) std::cout << name << "\n";
            return 0;
        }
        std::vector<std::string> names = verify_checks;
        if (verify_all) names.clear();
        auto reports = run_paper_suite(names, opts);
        bool all_pass = true;
        if (verify_json) {
            json arr = json::array();
            for (const auto& rep : reports) {
                json r;
                r["schema"] = 1;
                r["name"] = rep.name;
                r["status"] = rep.pass ? "pass" : "fail";
                r["details"] = rep.details;
                r["ms"] = rep.ms;
                arr.push_back(std::move(r));
                all_pass = all_pass && rep.pass;
            }
            emit(arr);
        } else {
            for (const auto& rep : reports) {
                std::cout << (rep.pass ? "PASS" : "FAIL") << "  " << rep.name << "  ("
                          << rep.ms << " ms)\n";
                if (!rep.pass)
                    for (const auto& line : rep.details) std::cout << "    " << line << "\n";
                all_pass = all_pass && rep.pass;
            }
        }
        return all_pass ? 0 : 1;
    }

    std::cerr << "no subcommand executed\n";
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const capacity_error& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return 2;
    } catch (const parse_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
