// ecci -- eccentricity invariants on trees: exact computation, named extremal
// families, edge-grafting rewrites, isomorph-free enumeration, and
// enumeration-backed theorem verification.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ecci/enumerate.hpp"
#include "ecci/extremal.hpp"
#include "ecci/families.hpp"
#include "ecci/fuzz.hpp"
#include "ecci/invariants.hpp"
#include "ecci/io.hpp"
#include "ecci/report.hpp"
#include "ecci/transforms.hpp"
#include "ecci/verify.hpp"

namespace {

int env_int(const char* name, int fallback) {
    const char* v = std::getenv(name);
    if (!v || !*v) return fallback;
    return std::atoi(v);
}

ecci::Tree load_tree(const std::string& path) {
    std::ostringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw ecci::Error(ecci::Errc::ParseError, "cannot open " + path);
        buf << in.rdbuf();
    }
    std::string text = buf.str();
    std::string first = text.substr(0, text.find('\n'));
    bool graph6 = !first.empty() && first[0] != '#' && !std::isdigit(first[0]) &&
                  (first[0] == '>' || first.find(' ') == std::string::npos);
    if (graph6) return ecci::from_graph6(first);
    return ecci::parse_edge_list(text);
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (!tok.empty()) out.push_back(std::stoi(tok));
    }
    return out;
}

// "A..B" or "A"
std::pair<int, int> parse_range(const std::string& s) {
    auto dots = s.find("..");
    if (dots == std::string::npos) {
        int v = std::stoi(s);
        return {v, v};
    }
    return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"eccentricity invariants on trees"};
    app.require_subcommand(1);

    int max_n = env_int("ECCI_MAX_N", ecci::kDefaultMaxN);
    int workers = env_int("ECCI_WORKERS", 1);
    app.add_option("--max-n", max_n, "enumeration size cap");
    app.add_option("--workers", workers, "worker threads (0 = hardware)");

    // invariants FILE
    std::string inv_file;
    auto* inv = app.add_subcommand("invariants", "print all invariants of a tree");
    inv->add_option("file", inv_file, "edge-list or graph6 file ('-' = stdin)")->required();

    // family
    std::string fam_name, fam_params, fam_spec;
    auto* fam = app.add_subcommand("family", "emit a named family instance as an edge list");
    fam->add_option("--name", fam_name, "family name (path star spider balspider dspider tnb ptab caterpillar cnd snk fig7 fig8)");
    fam->add_option("--params", fam_params, "comma-separated integers; ';' splits double-spider sides");
    fam->add_option("--spec", fam_spec, "compact form, e.g. spider:2,2,2");

    // transform
    std::string tr_kind, tr_in, tr_roots;
    int tr_from = -1, tr_to = -1, tr_via = -1;
    auto* tr = app.add_subcommand("transform", "apply an edge-grafting rewrite");
    tr->add_option("--kind", tr_kind, "rho|alpha|theta|shift|regraft")->required();
    tr->add_option("--in", tr_in, "input tree file")->required();
    tr->add_option("--from", tr_from, "vertex the branches leave");
    tr->add_option("--to", tr_to, "vertex the branches arrive at");
    tr->add_option("--via", tr_via, "middle vertex u (theta only)");
    tr->add_option("--roots", tr_roots, "branch roots R1,R2,...");

    // enumerate
    int en_n = 0;
    std::string en_class, en_emit = "edgelist";
    bool en_count_only = false;
    auto* en = app.add_subcommand("enumerate", "isomorph-free free trees on N vertices");
    en->add_option("N", en_n, "vertex count")->required();
    en->add_option("--class", en_class, "filter: pendants=K matching=B domination=G diameter=D bipartition=P,Q");
    en->add_flag("--count-only", en_count_only, "print only the count");
    en->add_option("--emit", en_emit, "edgelist|graph6");

    // extremal
    int ex_n = 0;
    std::string ex_class, ex_objective = "max", ex_exclude;
    auto* ex = app.add_subcommand("extremal", "exact REE optimum over a class");
    ex->add_option("N", ex_n, "vertex count")->required();
    ex->add_option("--class", ex_class, "class selector (omit for all trees)");
    ex->add_option("--objective", ex_objective, "max|min");
    ex->add_option("--exclude", ex_exclude, "named exclusion: cnd|tndpq");

    // verify
    std::string vf_id, vf_n = "8..12", vf_format = "text";
    int vf_param = -1;
    long vf_trials = 10000;
    std::uint64_t vf_seed = 42;
    auto* vf = app.add_subcommand("verify", "enumeration-backed theorem check");
    vf->add_option("THEOREM", vf_id, "T21 T31..T36 T41..T48")->required();
    vf->add_option("--n", vf_n, "order or range A..B");
    vf->add_option("--param", vf_param, "pin the secondary parameter (beta/gamma/k/d/p)");
    vf->add_option("--trials", vf_trials, "fuzz trials for T21/T31..T36");
    vf->add_option("--seed", vf_seed, "fuzz seed");
    vf->add_option("--format", vf_format, "json|csv|text");

    // fuzz
    std::string fz_kind;
    long fz_trials = 10000;
    std::uint64_t fz_seed = 42;
    auto* fz = app.add_subcommand("fuzz", "transformation monotonicity fuzzing");
    fz->add_option("KIND", fz_kind, "rho|alpha|theta|shift|regraft")->required();
    fz->add_option("--trials", fz_trials, "trial count");
    fz->add_option("--seed", fz_seed, "seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*inv) {
            ecci::Tree t = load_tree(inv_file);
            for (const auto& [kind, value] : ecci::all_invariants(t))
                std::cout << ecci::invariant_name(kind) << ' ' << value.str() << ' '
                          << value.decimal() << '\n';
            return 0;
        }
        if (*fam) {
            ecci::FamilySpec spec;
            if (!fam_spec.empty()) {
                spec = ecci::FamilySpec::parse(fam_spec);
            } else {
                std::string joined = fam_name;
                if (!fam_params.empty()) joined += ":" + fam_params;
                spec = ecci::FamilySpec::parse(joined);
            }
            auto trees = spec.build_all();
            bool first = true;
            for (const auto& t : trees) {
                if (!first) std::cout << '\n';
                first = false;
                ecci::write_edge_list(std::cout, t);
            }
            return 0;
        }
        if (*tr) {
            ecci::Tree t = load_tree(tr_in);
            auto kind = ecci::graft_kind_from_name(tr_kind);
            if (!kind) throw ecci::Error(ecci::Errc::ParseError, "unknown kind " + tr_kind);
            auto roots = parse_int_list(tr_roots);
            std::string meta;
            ecci::Rational before = ecci::ree(t);
            std::optional<ecci::Tree> result;
            switch (*kind) {
                case ecci::GraftMove::Kind::Rho: {
                    auto r = ecci::rho_transform(t, tr_to, tr_from, roots);
                    meta = "precondition held: " + std::string(r.precondition_held ? "yes" : "no") +
                           " (k=" + std::to_string(r.anchor_side_ecc) +
                           " l=" + std::to_string(r.pendant_path_len) + ")";
                    result = std::move(r.tree);
                    break;
                }
                case ecci::GraftMove::Kind::Alpha: {
                    auto r = ecci::alpha_transform(t, tr_to, tr_from, roots);
                    meta = "precondition held: " + std::string(r.precondition_held ? "yes" : "no") +
                           " (q=" + std::to_string(r.kept_side_ecc) +
                           " p=" + std::to_string(r.moved_side_ecc) + ")";
                    result = std::move(r.tree);
                    break;
                }
                case ecci::GraftMove::Kind::Theta: {
                    auto r = ecci::theta_transform(t, tr_from, tr_via, tr_to);
                    meta = "precondition held: " + std::string(r.precondition_held ? "yes" : "no") +
                           " (d2=" + std::to_string(r.target_side_ecc) +
                           " d1=" + std::to_string(r.far_side_ecc) + ")";
                    result = std::move(r.tree);
                    break;
                }
                case ecci::GraftMove::Kind::DiametralShift: {
                    auto r = ecci::diametral_pendant_shift(t);
                    meta = "precondition held: yes (strict=" + std::string(r.strict ? "yes" : "no") + ")";
                    result = std::move(r.tree);
                    break;
                }
                case ecci::GraftMove::Kind::PendantRegraft: {
                    auto r = ecci::pendant_regraft(t);
                    meta = "precondition held: yes";
                    result = std::move(r.tree);
                    break;
                }
            }
            ecci::write_edge_list(std::cout, *result);
            std::cout << "# " << meta << " ree " << before.str() << " -> "
                      << ecci::ree(*result).str() << '\n';
            return 0;
        }
        if (*en) {
            std::optional<ecci::ParamClass> cls;
            if (!en_class.empty()) cls = ecci::ParamClass::parse(en_class);
            ecci::FreeTreeStream stream(en_n, 1, 0, max_n);
            long count = 0;
            while (auto t = stream.next()) {
                if (cls && !cls->matches(*t)) continue;
                ++count;
                if (en_count_only) continue;
                if (en_emit == "graph6")
                    std::cout << ecci::to_graph6(*t) << '\n';
                else if (en_emit == "edgelist")
                    std::cout << ecci::to_edge_list(*t) << '\n';
                else
                    throw ecci::Error(ecci::Errc::UnsupportedFormat, en_emit);
            }
            if (en_count_only) std::cout << count << '\n';
            return 0;
        }
        if (*ex) {
            std::optional<ecci::ParamClass> cls;
            if (!ex_class.empty()) cls = ecci::ParamClass::parse(ex_class);
            std::optional<ecci::Exclusion> excl;
            if (!ex_exclude.empty()) {
                if (!cls) throw ecci::Error(ecci::Errc::InfeasibleParams,
                                            "--exclude needs a diameter class");
                excl = ecci::make_exclusion(ex_exclude, ex_n, *cls);
            }
            bool maximize = ex_objective != "min";
            auto res = ecci::extremal_search(ex_n, cls, maximize, excl ? &*excl : nullptr,
                                             workers, max_n);
            std::cout << "class " << (cls ? cls->str() : "all") << " n=" << ex_n
                      << " objective=" << (maximize ? "max" : "min");
            if (excl) std::cout << " exclude=" << excl->name;
            std::cout << " size=" << res.class_size << '\n';
            if (res.vacuous()) {
                std::cout << "empty class\n";
                return 0;
            }
            std::cout << "value " << res.value->str() << " " << res.value->decimal() << '\n';
            for (const auto& [code, tree] : res.witnesses) {
                std::cout << "witness " << code.hex() << '\n';
                ecci::write_edge_list(std::cout, tree);
            }
            return 0;
        }
        if (*vf) {
            auto [lo, hi] = parse_range(vf_n);
            ecci::VerifyOptions opt;
            if (vf_param >= 0) opt.param = vf_param;
            opt.trials = vf_trials;
            opt.seed = vf_seed;
            opt.workers = workers;
            opt.max_n = max_n;
            std::vector<ecci::TheoremReport> reports;
            for (int n = lo; n <= hi; ++n) {
                auto batch = ecci::verify_theorem(vf_id, n, opt);
                reports.insert(reports.end(), batch.begin(), batch.end());
            }
            auto format = ecci::report_format_from_name(vf_format);
            if (!format) throw ecci::Error(ecci::Errc::UnsupportedFormat, vf_format);
            ecci::report_emit(std::cout, reports, *format);
            for (const auto& r : reports)
                if (r.verdict == ecci::TheoremReport::Verdict::Fail) return 1;
            return 0;
        }
        if (*fz) {
            auto kind = ecci::graft_kind_from_name(fz_kind);
            if (!kind) throw ecci::Error(ecci::Errc::ParseError, "unknown kind " + fz_kind);
            auto s = ecci::fuzz_transforms(*kind, fz_trials, fz_seed);
            std::cout << "kind=" << ecci::graft_kind_name(s.kind) << " trials=" << s.trials
                      << " applied=" << s.applied << " held=" << s.precondition_held
                      << " strict_increase=" << s.strict_increase << " equal=" << s.equal
                      << " decrease=" << s.decrease << " held_violations=" << s.held_violations
                      << '\n';
            if (!s.first_violation.empty()) std::cout << "first violation: " << s.first_violation << '\n';
            return s.held_violations == 0 ? 0 : 1;
        }
    } catch (const ecci::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
