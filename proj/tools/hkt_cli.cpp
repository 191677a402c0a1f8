/**
 * @file hkt_cli.cpp
 * @brief Command-line surface: classify entry files, run verification
 *        suites, list/export the built-in catalog, build products.
 *
 * Exit codes: 0 pass, 1 verification failure, 2 input error, 3 internal
 * hard failure.
 */
#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <iostream>
#include <mutex>
#include <thread>

#include "hkt/catalog_io.hpp"
#include "hkt/verify.hpp"

namespace {

constexpr const char* kToolVersion = "1.0.0";

struct Options {
    std::string mode = "exact";
    std::string tol = "1e-9";
    std::string format = "text";
    int jobs = 1;
    bool force_structure8 = false;
};

hkt::CatalogEntry resolve(const std::string& sel) {
    static std::vector<hkt::CatalogEntry> cat = hkt::build_standard_entries();
    if (const auto* e = hkt::find_entry(cat, sel)) return *e;
    return hkt::load_entry(sel);
}

template <hkt::ScalarField S>
nlohmann::json classify_json(const hkt::CatalogEntry& e, const Options& opt) {
    nlohmann::json out;
    out["name"] = e.name;
    nlohmann::json flags;
    if (e.hyper) {
        auto q = hkt::hyper_cast<S>(e.hs);
        auto rep = hkt::classify_hyper(q);
        flags["hkt"] = rep.hkt;
        flags["strong_hkt"] = rep.strong_hkt;
        flags["hyperkahler"] = rep.hyperkahler;
        flags["balanced"] = rep.balanced;
        flags["parallel_torsion"] = rep.parallel_torsion;
        out["theta"] = rep.theta.str();
        out["H_norm_sq"] = hkt::form_norm_sq(q.g, rep.H).str();
        if (rep.hkt) {
            auto B = hkt::bismut_connection(q.hermitian(0));
            auto hol = hkt::holonomy_algebra(B, q.algebra, q.g);
            auto cls = hkt::classify_holonomy(hol, q.g, &q.I, &q.J, &q.K);
            out["bismut_holonomy"] = {{"dim", cls.dimension}, {"label", cls.label}};
        }
        auto herm = hkt::classify_hermitian(q.hermitian(0));
        flags["skt"] = herm.skt;
        flags["cyt"] = herm.cyt;
        flags["bhe"] = herm.bhe;
        flags["generalized_einstein"] = herm.generalized_einstein;
        if ((rep.strong_hkt && !rep.hyperkahler && q.algebra.dim() == 8) || opt.force_structure8) {
            auto s8 = hkt::analyze_structure8(q, opt.force_structure8);
            if (s8.applicable || opt.force_structure8) {
                nlohmann::json s;
                s["regime"] = s8.in_regime ? "asserted" : ("observed: " + s8.regime_note);
                s["vertical_type"] = s8.vertical_type;
                s["a"] = s8.a.str();
                s["b"] = s8.b.str();
                s["dV_norm_sq"] = s8.dV_norm_sq.str();
                s["eta_norm_sq"] = {s8.eta_norm_sq[0].str(), s8.eta_norm_sq[1].str(),
                                    s8.eta_norm_sq[2].str()};
                s["balance_residual"] = s8.balance_residual.str();
                s["lambda"] = s8.lambda.str();
                nlohmann::json eq = nlohmann::json::array();
                for (bool f : s8.equivalence) eq.push_back(f);
                s["equivalence"] = eq;
                s["equivalence_consistent"] = s8.equivalence_consistent;
                out["structure8"] = s;
            }
        }
    } else {
        auto h = hkt::hermitian_cast<S>(e.cs);
        auto rep = hkt::classify_hermitian(h);
        flags["kahler"] = rep.kahler;
        flags["skt"] = rep.skt;
        flags["balanced"] = rep.balanced;
        flags["cyt"] = rep.cyt;
        flags["bhe"] = rep.bhe;
        flags["generalized_einstein"] = rep.generalized_einstein;
        out["theta"] = rep.theta.str();
        out["H_norm_sq"] = hkt::form_norm_sq(h.g, rep.H).str();
        auto B = hkt::bismut_connection(h);
        auto hol = hkt::holonomy_algebra(B, h.algebra, h.g);
        auto cls = hkt::classify_holonomy(hol, h.g, &h.J);
        out["bismut_holonomy"] = {{"dim", cls.dimension}, {"label", cls.label}};
    }
    out["flags"] = flags;
    return out;
}

void print_classify_text(const nlohmann::json& j) {
    std::cout << "entry " << j["name"].get<std::string>() << "\n";
    for (const auto& [k, v] : j["flags"].items())
        std::cout << "  " << k << ": " << (v.get<bool>() ? "true" : "false") << "\n";
    std::cout << "  theta: " << j["theta"].get<std::string>() << "\n";
    std::cout << "  |H|^2: " << j["H_norm_sq"].get<std::string>() << "\n";
    if (j.contains("bismut_holonomy"))
        std::cout << "  hol(nabla^B): dim " << j["bismut_holonomy"]["dim"].get<int>() << " ("
                  << j["bismut_holonomy"]["label"].get<std::string>() << ")\n";
    if (j.contains("structure8")) {
        const auto& s = j["structure8"];
        std::cout << "  structure8 [" << s["regime"].get<std::string>() << "]\n"
                  << "    vertical type " << s["vertical_type"].get<std::string>()
                  << ", a = " << s["a"].get<std::string>() << ", b = " << s["b"].get<std::string>() << "\n"
                  << "    |dV|^2 = " << s["dV_norm_sq"].get<std::string>()
                  << ", balance residual = " << s["balance_residual"].get<std::string>()
                  << ", lambda = " << s["lambda"].get<std::string>() << "\n"
                  << "    equivalence flags:";
        for (const auto& f : s["equivalence"]) std::cout << " " << (f.get<bool>() ? "T" : "F");
        std::cout << "\n";
    }
}

nlohmann::json checks_json(const std::vector<hkt::CheckResult>& rs) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rs) {
        nlohmann::json c;
        c["id"] = r.id;
        c["status"] = hkt::status_name(r.status);
        c["residual"] = r.detail;
        arr.push_back(std::move(c));
    }
    return arr;
}

template <hkt::ScalarField S>
int run_verify(const std::vector<hkt::CatalogEntry>& entries, const Options& opt) {
    std::vector<std::vector<hkt::CheckResult>> results(entries.size());
    std::atomic<size_t> next{0};
    std::atomic<bool> internal_error{false};
    std::mutex err_mutex;
    std::string first_error;
    auto worker = [&] {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= entries.size()) break;
            try {
                results[i] = hkt::verify_entry<S>(entries[i], opt.force_structure8);
            } catch (const std::exception& ex) {
                std::lock_guard<std::mutex> lk(err_mutex);
                internal_error = true;
                if (first_error.empty()) first_error = entries[i].name + ": " + ex.what();
            }
        }
    };
    int jobs = std::max(1, opt.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (internal_error) {
        std::cerr << "internal hard failure: " << first_error << "\n";
        return 3;
    }
    bool ok = true;
    if (opt.format == "json") {
        nlohmann::json out;
        out["tool_version"] = kToolVersion;
        nlohmann::json arr = nlohmann::json::array();
        for (size_t i = 0; i < entries.size(); ++i) {
            nlohmann::json e;
            e["name"] = entries[i].name;
            e["flags"] = classify_json<S>(entries[i], opt)["flags"];
            e["checks"] = checks_json(results[i]);
            arr.push_back(std::move(e));
            ok = ok && hkt::all_passed(results[i]);
        }
        out["entries"] = arr;
        std::cout << out.dump(1) << "\n";
    } else {
        for (size_t i = 0; i < entries.size(); ++i) {
            std::cout << "== " << entries[i].name << " ==\n";
            for (const auto& r : results[i]) {
                std::cout << "  [" << hkt::status_name(r.status) << "] " << r.id;
                if (!r.detail.empty()) std::cout << "  (" << r.detail << ")";
                std::cout << "\n";
                if (r.status == hkt::CheckStatus::Fail) ok = false;
            }
        }
        std::cout << (ok ? "all checks passed" : "FAILURES present") << "\n";
    }
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"invariant Hermitian / hyper-Hermitian geometry engine"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_option("--mode", opt.mode, "scalar mode: exact|float")->check(CLI::IsMember({"exact", "float"}));
    app.add_option("--tol", opt.tol, "comparison tolerance (float mode)");
    app.add_option("--format", opt.format, "output: text|json")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--jobs", opt.jobs, "parallel verification workers");
    app.add_flag("--force-structure8", opt.force_structure8,
                 "run the dim-8 suite in observed mode on non-qualifying entries");

    std::string classify_path;
    auto* c_classify = app.add_subcommand("classify", "classify one entry file or catalog name");
    c_classify->add_option("file", classify_path)->required();

    std::vector<std::string> verify_sel;
    bool verify_all = false;
    auto* c_verify = app.add_subcommand("verify", "run the verification suite");
    c_verify->add_flag("--all", verify_all, "verify every built-in entry");
    c_verify->add_option("selector", verify_sel, "catalog names or file paths");

    auto* c_catalog = app.add_subcommand("catalog", "list or export built-in entries");
    std::vector<std::string> catalog_args;
    c_catalog->add_option("args", catalog_args, "list | export <name> <path>");

    auto* c_product = app.add_subcommand("product", "direct product of two entries");
    std::string prod_a, prod_b, prod_out;
    c_product->add_option("a", prod_a)->required();
    c_product->add_option("b", prod_b)->required();
    c_product->add_option("out", prod_out)->required();

    CLI11_PARSE(app, argc, argv);

    if (opt.mode == "float") {
        try {
            hkt::Float::tolerance() = std::stod(opt.tol);
        } catch (...) {
            std::cerr << "bad --tol value\n";
            return 2;
        }
    }

    try {
        if (c_classify->parsed()) {
            hkt::CatalogEntry e;
            try {
                e = resolve(classify_path);
            } catch (const hkt::ParseError& ex) {
                std::cerr << "input error: " << ex.what() << "\n";
                return 2;
            }
            nlohmann::json j = opt.mode == "float" ? classify_json<hkt::Float>(e, opt)
                                                   : classify_json<hkt::Exact>(e, opt);
            if (opt.format == "json") {
                nlohmann::json out;
                out["tool_version"] = kToolVersion;
                out["entries"] = nlohmann::json::array({j});
                std::cout << out.dump(1) << "\n";
            } else {
                print_classify_text(j);
            }
            return 0;
        }
        if (c_verify->parsed()) {
            std::vector<hkt::CatalogEntry> entries;
            if (verify_all) {
                entries = hkt::build_standard_entries();
            } else {
                if (verify_sel.empty()) {
                    std::cerr << "verify: need --all or at least one selector\n";
                    return 2;
                }
                for (const auto& s : verify_sel) {
                    try {
                        entries.push_back(resolve(s));
                    } catch (const hkt::ParseError& ex) {
                        std::cerr << "input error: " << ex.what() << "\n";
                        return 2;
                    }
                }
            }
            return opt.mode == "float" ? run_verify<hkt::Float>(entries, opt)
                                       : run_verify<hkt::Exact>(entries, opt);
        }
        if (c_catalog->parsed()) {
            auto cat = hkt::build_standard_entries();
            if (catalog_args.empty() || catalog_args[0] == "list") {
                for (const auto& e : cat)
                    std::cout << e.name << "  (" << (e.hyper ? "hyper" : "hermitian") << ", dim "
                              << (e.hyper ? e.hs.algebra.dim() : e.cs.algebra.dim()) << ")  "
                              << e.provenance << "\n";
                return 0;
            }
            if (catalog_args[0] == "export" && catalog_args.size() == 3) {
                const auto* e = hkt::find_entry(cat, catalog_args[1]);
                if (!e) {
                    std::cerr << "no catalog entry named " << catalog_args[1] << "\n";
                    return 2;
                }
                hkt::save_entry(*e, catalog_args[2]);
                return 0;
            }
            std::cerr << "catalog: expected 'list' or 'export <name> <path>'\n";
            return 2;
        }
        if (c_product->parsed()) {
            hkt::CatalogEntry a, b;
            try {
                a = resolve(prod_a);
                b = resolve(prod_b);
            } catch (const hkt::ParseError& ex) {
                std::cerr << "input error: " << ex.what() << "\n";
                return 2;
            }
            if (!a.hyper || !b.hyper) {
                std::cerr << "product: both entries must be hyper-Hermitian\n";
                return 2;
            }
            hkt::CatalogEntry p;
            p.name = a.name + "_x_" + b.name;
            p.provenance = "product of " + a.name + " and " + b.name;
            p.hs = hkt::product_structure(a.hs, b.hs, p.name);
            hkt::save_entry(p, prod_out);
            return 0;
        }
    } catch (const hkt::ParseError& ex) {
        std::cerr << "input error: " << ex.what() << "\n";
        return 2;
    } catch (const std::exception& ex) {
        std::cerr << "internal hard failure: " << ex.what() << "\n";
        return 3;
    }
    return 2;
}
