// Command-line frontend: per-n reports, verification suites, and the
// polynomial/invariant subcommands.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "ptb/report.hpp"

namespace {

struct Range {
    int lo = 0, hi = 0;
};

Range parse_range(const std::string& text) {
    auto pos = text.find("..");
    if (pos == std::string::npos) throw CLI::ValidationError("range", "expected <a>..<b>");
    Range r;
    r.lo = std::stoi(text.substr(0, pos));
    r.hi = std::stoi(text.substr(pos + 2));
    if (r.lo > r.hi) std::swap(r.lo, r.hi);
    return r;
}

void write_or_print(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content << "\n";
        return;
    }
    std::ofstream out(path);
    out << content;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"character varieties and arithmetic invariants of the once-punctured "
                 "torus bundles with tunnel number one"};
    app.require_subcommand(1);

    int n = 7;
    std::string range_text, json_path, csv_path, suite_text;
    std::string k_range_text = "-3..3";
    double tol = 1e-9;
    int sample = 20;

    auto* rep = app.add_subcommand("report", "full per-n report as JSON");
    rep->add_option("--n", n, "bundle index");
    rep->add_option("--range", range_text, "range <a>..<b> of bundle indices");
    rep->add_option("--json", json_path, "write JSON here instead of stdout");
    rep->add_option("--csv", csv_path, "also write the point cloud CSV here");
    rep->add_option("--tol", tol, "membership tolerance");
    rep->add_option("--k-range", k_range_text, "k range for the special filling families");

    auto* ver = app.add_subcommand("verify", "run verification suites");
    ver->add_option("--range", range_text, "range <a>..<b> (default -30..30)");
    ver->add_option("--suite", suite_text, "comma-separated suite names (default: all)");
    ver->add_option("--json", json_path, "write machine-readable results here");

    auto* poly = app.add_subcommand("poly", "polynomial families");
    bool as_json = false;
    auto* fib_cmd = poly->add_subcommand("fib", "Fibonacci polynomial f_n");
    fib_cmd->add_option("-n", n, "index")->required();
    fib_cmd->add_flag("--json", as_json, "serialized coefficient form");
    auto* fam_cmd = poly->add_subcommand("family", "factor family h, j, k, l");
    fam_cmd->add_option("-n", n, "index")->required();
    fam_cmd->add_flag("--json", as_json, "serialized coefficient form");

    auto* tf = app.add_subcommand("tracefield", "trace-field certificate");
    tf->add_option("-n", n, "bundle index")->required();

    auto* df = app.add_subcommand("df", "discrete-faithful candidates");
    df->add_option("-n", n, "bundle index")->required();

    auto* alex = app.add_subcommand("alexander", "twisted Alexander data");
    alex->add_option("-n", n, "bundle index")->required();
    alex->add_option("--sample", sample, "number of oracle sample points");

    auto* dil = app.add_subcommand("dilatation", "dilatation and d = 2g + alpha");
    dil->add_option("--range", range_text, "range <a>..<b> (default 3..50)");

    auto* fill = app.add_subcommand("fillings", "lens-space filling characters");
    fill->add_option("-n", n, "bundle index")->required();
    fill->add_option("--k-range", k_range_text, "k range for the special families");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    using ptb::ordered_json;
    try {
        if (rep->parsed()) {
            Range kr = parse_range(k_range_text);
            Range r = range_text.empty() ? Range{n, n} : parse_range(range_text);
            ordered_json out = ordered_json::array();
            for (int m = r.lo; m <= r.hi; ++m)
                out.push_back(ptb::bundle_report(m, tol, kr.lo, kr.hi));
            write_or_print(json_path, out.dump(2));
            if (!csv_path.empty()) {
                std::string csv;
                for (int m = r.lo; m <= r.hi; ++m) csv += ptb::point_cloud_csv(m);
                std::ofstream(csv_path) << csv;
            }
            return 0;
        }

        if (ver->parsed()) {
            Range r = range_text.empty() ? Range{-30, 30} : parse_range(range_text);
            std::vector<std::string> suites;
            if (suite_text.empty()) {
                suites = ptb::all_suites();
            } else {
                std::stringstream ss(suite_text);
                std::string item;
                while (std::getline(ss, item, ',')) suites.push_back(item);
            }
            auto results = ptb::run_verify(r.lo, r.hi, suites);
            bool any_fail = false;
            for (const auto& s : results) {
                bool ok = s.failures == 0;
                any_fail = any_fail || !ok;
                std::cout << (ok ? "[pass] " : "[FAIL] ") << s.name << ": " << s.checks
                          << " checks, " << s.failures << " failures\n";
                for (const auto& m : s.messages) std::cout << "       " << m << "\n";
            }
            if (!json_path.empty())
                std::ofstream(json_path) << ptb::verify_results_json(results).dump(2);
            return any_fail ? 1 : 0;
        }

        if (fib_cmd->parsed()) {
            ptb::IntPoly f = ptb::fib(n);
            std::cout << (as_json ? f.to_json_array() : "f_" + std::to_string(n) + "(u) = " +
                                                            f.to_string())
                      << "\n";
            return 0;
        }
        if (fam_cmd->parsed()) {
            ptb::FactorFamily f = ptb::family(n);
            if (as_json) {
                ordered_json j;
                j["h"] = ordered_json::parse(f.h.to_json_array());
                j["j"] = ordered_json::parse(f.j.to_json_array());
                j["k"] = ordered_json::parse(f.k.to_json_array());
                j["l"] = ordered_json::parse(f.l.to_json_array());
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "h = " << f.h.to_string() << "\nj = " << f.j.to_string()
                          << "\nk = " << f.k.to_string() << "\nl = " << f.l.to_string() << "\n";
            }
            return 0;
        }

        if (tf->parsed()) {
            ptb::TraceFieldCert c = ptb::trace_field(n);
            std::cout << "phat = " << c.phat.to_string("y") << "\ndegree = " << c.degree
                      << "\nparity factor = " << c.parity_factor.to_string("b")
                      << "\ncertified (no cyclotomic factors) = "
                      << (c.certified ? "yes" : "no") << "\n";
            return 0;
        }

        if (df->parsed()) {
            auto pts = ptb::discrete_faithful(n);
            for (const auto& d : pts) {
                ptb::AlexanderRecord a = ptb::twisted_alexander(d.point);
                std::cout << "y = " << d.y.re() << (d.y.im() < 0 ? " - " : " + ")
                          << std::abs(d.y.im()) << "i, eps = " << d.eps
                          << ", branch = " << d.branch << ", Z = " << a.Z.real()
                          << (a.Z.imag() < 0 ? " - " : " + ") << std::abs(a.Z.imag()) << "i\n";
            }
            std::cout << pts.size() << " candidate(s)\n";
            return 0;
        }

        if (alex->parsed()) {
            const ptb::cdouble Ts[5] = {2.0, 1.0, -1.0, {0.5, 0.3}, {-0.7, 1.1}};
            int pts = 0, checks = 0;
            double worst = 0.0;
            for (int k = 0; k < 40 * sample && pts < sample; ++k) {
                double th = 0.13 + 2.8 * k / (40.0 * sample);
                ptb::cdouble y = 2.0 * std::cos(ptb::cdouble(th, 0.05));
                ptb::VarietyPoint p;
                try {
                    p = ptb::canonical_param(n, ptb::ComplexVal(y), k % 2 ? 1 : -1);
                } catch (const ptb::on_excluded_fiber&) {
                    continue;
                }
                ++pts;
                for (const auto& T : Ts) {
                    try {
                        worst = std::max(worst,
                                         std::abs(ptb::fox_calculus_oracle(p, n, T) -
                                                  ptb::twisted_alexander_eval(p, T)));
                        ++checks;
                    } catch (const std::exception&) {
                    }
                }
            }
            std::cout << "oracle vs closed form on " << pts << " points x 5 T values ("
                      << checks << " checks): max deviation " << worst << "\n";
            for (const auto& d : ptb::discrete_faithful(n)) {
                ptb::AlexanderRecord a = ptb::twisted_alexander(d.point);
                std::cout << "Z = " << a.Z.real() << " + " << a.Z.imag() << "i (eps " << d.eps
                          << ")\n";
            }
            return worst <= 1e-8 ? 0 : 1;
        }

        if (dil->parsed()) {
            Range r = range_text.empty() ? Range{3, 50} : parse_range(range_text);
            bool ok = true;
            for (int m = r.lo; m <= r.hi; ++m) {
                if (std::abs(m) <= 2) continue;
                ptb::GenusRelation rel = ptb::genus_relation(m);
                ok = ok && rel.holds;
                std::cout << "n = " << m << ": dilatation = " << ptb::dilatation(m)
                          << ", d = " << rel.d << ", g = " << rel.g << ", alpha = " << rel.alpha
                          << (rel.holds ? "" : "  [RELATION FAILS]") << "\n";
            }
            return ok ? 0 : 1;
        }

        if (fill->parsed()) {
            Range kr = parse_range(k_range_text);
            std::cout << "mu-quotient characters:\n";
            for (const auto& p : ptb::filling_characters(n))
                std::cout << "  (" << p.x.re() << ", " << p.y.re() << ", " << p.z.re() << ")\n";
            for (int k = kr.lo; k <= kr.hi; ++k)
                for (const auto& fam : ptb::filling_characters_special(n, k)) {
                    std::cout << "quotient by " << fam.quotient << ": " << fam.points.size()
                              << " characters\n";
                }
            for (const auto& l : ptb::filling_table(-(n + 2)))
                std::cout << "filling " << l.slope << " -> " << l.lens << "\n";
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
