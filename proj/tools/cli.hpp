#pragma once

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "kinv/acceptance.hpp"
#include "kinv/bigint.hpp"
#include "kinv/error.hpp"
#include "kinv/exact_linalg.hpp"
#include "kinv/invariants.hpp"
#include "kinv/knot_table.hpp"
#include "kinv/knots.hpp"
#include "kinv/laurent_poly.hpp"
#include "kinv/mahler.hpp"
#include "kinv/rep_variety.hpp"
#include "kinv/series.hpp"

namespace kinv::cli {

using nlohmann::ordered_json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitComputation = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitSelftest = 3;

/// Integers that might not survive a double round trip go out as strings.
inline ordered_json big(const BigInt& x) {
    if (fits_int53(x)) return x.get_si();
    return x.get_str();
}

inline ordered_json to_json(const LaurentPoly& p) {
    ordered_json c = ordered_json::array();
    for (const auto& x : p.coeffs()) c.push_back(big(x));
    return {{"min_deg", p.min_deg()}, {"coeffs", c}, {"text", p.to_string()}};
}

inline ordered_json to_json(const AbelianGroup& g) {
    ordered_json f = ordered_json::array();
    for (const auto& d : g.invariant_factors) f.push_back(big(d));
    ordered_json j = {{"free_rank", g.free_rank}, {"invariant_factors", f}, {"text", g.to_string()}};
    if (const auto o = g.order()) j["order"] = big(*o);
    return j;
}

inline ordered_json to_json(const std::vector<Rational>& v) {
    ordered_json a = ordered_json::array();
    for (const auto& x : v) a.push_back(rational_string(x));
    return a;
}

inline std::string fmt_double(double x, int digits = 12) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x < 0 ? "-inf" : "inf";
    std::ostringstream os;
    os << std::setprecision(digits) << x;
    return os.str();
}

struct Options {
    bool json = false;
    std::string table_path;
    std::string knot;
    int n = 2;
    int n_max = 199;
    int samples = 4096;
    bool csv = false;
    bool k3 = false;
    std::string q_h = "0";
    std::string f_h = "1";
    int order = 20;
    long c2 = 0;
    long c1_sq = 0;
    int b2_plus = 3;
    int b1 = 0;
    std::vector<long> pairings;
};

inline Rational parse_rational(const std::string& s) {
    try {
        Rational r(s);
        r.canonicalize();
        if (r.get_den() == 0) throw std::invalid_argument("zero denominator");
        return r;
    } catch (const std::invalid_argument&) {
        fail("SyntaxError", "not a rational number: '" + s + "'");
    }
}

class Runner {
public:
    Runner(const Options& o, std::ostream& out, std::ostream& err) : o_(o), out_(out), err_(err) {}

    KnotTable table() const { return o_.table_path.empty() ? KnotTable::builtin() : KnotTable::load(o_.table_path); }
    BraidWord braid() const { return table().resolve(o_.knot); }

    void emit(ordered_json j) const {
        ordered_json root = {{"schema", 1}};
        root.update(j);
        out_ << root.dump(2) << '\n';
    }

    int alexander() const {
        const BraidWord b = braid();
        const LaurentPoly burau = alexander_burau(b);
        const LaurentPoly fox = alexander_fox(braid_closure_wirtinger(b));
        if (!(burau == fox))
            fail("CrossCheckMismatch", "Burau " + burau.to_string() + " vs Fox " + fox.to_string());
        if (o_.json) emit({{"knot", o_.knot}, {"braid", b.to_string()}, {"alexander", to_json(burau)}});
        else out_ << burau.to_string() << '\n';
        return kExitOk;
    }

    int invariant() const {
        const LaurentPoly d = alexander_burau(braid());
        const RelativeInvariant q = q_relative(d, o_.n);
        if (o_.json) {
            emit({{"knot", o_.knot},
                  {"N", o_.n},
                  {"value", big(q.value)},
                  {"sign_determined", q.sign_determined},
                  {"degenerate", q.degenerate},
                  {"signed_product", big(q.signed_product)},
                  {"method_agreement", q.method_agreement}});
        } else {
            out_ << q.value.get_str();
            if (q.degenerate) out_ << " (degenerate)";
            else if (!q.sign_determined) out_ << " (magnitude; sign not determined)";
            out_ << '\n';
        }
        return kExitOk;
    }

    int homology() const {
        const AbelianGroup g = branched_cover_homology(alexander_burau(braid()), o_.n);
        if (o_.json) emit({{"knot", o_.knot}, {"N", o_.n}, {"group", to_json(g)}});
        else out_ << g.to_string() << '\n';
        return kExitOk;
    }

    int repvar() const {
        const BraidWord b = braid();
        const LaurentPoly d = alexander_burau(b);
        const int n = o_.n;
        const int t3 = verify_t3_points(n);
        const CsLadder ladder = chern_simons_ladder(n);
        ordered_json kernel_count, wirtinger_count;
        try {
            kernel_count = kernel_torus_solutions(d, n, BigInt(1000000)).size();
        } catch (const Error& e) {
            if (e.kind() != "Degenerate" && e.kind() != "CapExceeded") throw;
            kernel_count = e.kind() == "Degenerate" ? ordered_json("infinite") : big(*branched_cover_homology(d, n).order());
        }
        try {
            wirtinger_count = big(wirtinger_torus_count(braid_closure_wirtinger(b), n));
        } catch (const Error& e) {
            if (e.kind() != "Degenerate") throw;
            wirtinger_count = "infinite";
        }
        const AbelianGroup g = branched_cover_homology(d, n);
        ordered_json cs = {{"values", to_json(ladder.values)},
                           {"d_step", ladder.d_step},
                           {"kappa_step", rational_string(ladder.kappa_step)},
                           {"d_loop", ladder.d_loop},
                           {"kappa_loop", rational_string(ladder.kappa_loop)}};
        ordered_json j = {{"N", n},          {"t3_points", t3},
                          {"cs_ladder", cs}, {"kernel_count", kernel_count},
                          {"wirtinger_count", wirtinger_count}, {"group", to_json(g)}};
        if (o_.json) {
            j["knot"] = o_.knot;
            emit(j);
        } else {
            for (const auto& [k, v] : j.items()) out_ << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
        }
        return kExitOk;
    }

    int series() const {
        const LaurentPoly d = alexander_burau(braid());
        const PowerSeries s = donaldson_series_xk(d, parse_rational(o_.q_h), parse_rational(o_.f_h), o_.order);
        if (o_.json) {
            emit({{"knot", o_.knot},
                  {"Q_h", rational_string(parse_rational(o_.q_h))},
                  {"F_h", rational_string(parse_rational(o_.f_h))},
                  {"order", o_.order},
                  {"coeffs", to_json(s.coeffs())}});
        } else {
            for (std::size_t k = 0; k < s.coeffs().size(); ++k) out_ << "s^" << k << ": " << rational_string(s[k]) << '\n';
        }
        return kExitOk;
    }

    int mahler() const {
        const LaurentPoly d = alexander_burau(braid());
        const double by_roots = mahler_measure_roots(d);
        const double by_integral = mahler_measure_integral(d, o_.samples);
        const auto rows = asymptotic_table(d, odd_ladder(3, o_.n_max));
        if (o_.json) {
            ordered_json t = ordered_json::array();
            for (const auto& r : rows) {
                t.push_back({{"N", r.n},
                             {"q_N", big(r.q)},
                             {"log_q_over_N", fmt_double(r.log_q_over_n, 17)},
                             {"log_alpha", fmt_double(r.log_alpha, 17)},
                             {"difference", fmt_double(r.difference, 17)},
                             {"degenerate", r.degenerate}});
            }
            emit({{"knot", o_.knot},
                  {"mahler_roots", fmt_double(by_roots, 17)},
                  {"mahler_integral", fmt_double(by_integral, 17)},
                  {"samples", o_.samples},
                  {"table", t}});
        } else {
            out_ << "# mahler_roots=" << fmt_double(by_roots) << " mahler_integral=" << fmt_double(by_integral) << '\n';
            out_ << "N,q_N,log_q_over_N,log_alpha,difference,degenerate\n";
            for (const auto& r : rows)
                out_ << r.n << ',' << r.q.get_str() << ',' << fmt_double(r.log_q_over_n, 17) << ','
                     << fmt_double(r.log_alpha, 17) << ',' << fmt_double(r.difference, 17) << ','
                     << (r.degenerate ? "true" : "false") << '\n';
        }
        return kExitOk;
    }

    int dim() const {
        const int n = o_.n;
        BigInt c2 = o_.c2, c1_sq = o_.c1_sq;
        ManifoldTopology topo{"input", o_.b2_plus, o_.b1, {}, {}};
        if (o_.k3) {
            const K3Bundle kb = k3_bundle(n);
            c2 = kb.c2;
            c1_sq = kb.c1_sq;
            topo = kb.topology;
        }
        if (topo.b2_plus < 2) err_ << "warning: b2+ = " << topo.b2_plus << " < 2; the invariant is not defined\n";
        const Rational k = kappa(n, c2, c1_sq);
        const BigInt d = formal_dimension(n, k, topo);
        ordered_json j = {{"N", n}, {"kappa", rational_string(k)}, {"dim", big(d)}};
        if (!o_.pairings.empty()) j["coprime"] = is_coprime(o_.pairings, n);
        if (o_.json) emit(j);
        else out_ << "kappa = " << rational_string(k) << "\ndim = " << d.get_str() << '\n';
        return kExitOk;
    }

    int selftest() const {
        if (o_.json) {
            ordered_json a = ordered_json::array();
            bool all = true;
            for (const auto& cr : acceptance::criteria()) {
                const auto r = acceptance::run(cr);
                all = all && r.passed;
                a.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"seconds", r.seconds}, {"detail", r.detail}});
            }
            emit({{"passed", all}, {"criteria", a}});
            return all ? kExitOk : kExitSelftest;
        }
        return acceptance::run_all(out_) ? kExitOk : kExitSelftest;
    }

private:
    const Options& o_;
    std::ostream& out_;
    std::ostream& err_;
};

/// Parses argv, dispatches, and maps failures to exit codes.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact knot invariants for higher-rank instanton counts", "kinv"};
    app.require_subcommand(1);
    Options o;
    app.add_flag("--json", o.json, "machine-readable output");
    app.add_option("--table", o.table_path, "knot table file (default: built-in corpus)");

    auto knot_cmd = [&](const char* name, const char* help) {
        CLI::App* c = app.add_subcommand(name, help);
        c->add_option("knot", o.knot, "table name or quoted braid word, e.g. \"1 -2 1 -2\"")->required();
        c->add_flag("--json", o.json, "machine-readable output");
        c->add_option("--table", o.table_path, "knot table file");
        return c;
    };
    CLI::App* alexander = knot_cmd("alexander", "symmetrized Alexander polynomial");
    CLI::App* invariant = knot_cmd("invariant", "relative invariant prod Delta(zeta^k)");
    CLI::App* homology = knot_cmd("homology", "H_1 of the N-fold cyclic branched cover");
    CLI::App* repvar = knot_cmd("repvar", "flat-connection counts");
    CLI::App* series = knot_cmd("series", "Donaldson series along a ray");
    CLI::App* mahler = knot_cmd("mahler", "Mahler measure and the large-N table");
    for (CLI::App* c : {invariant, homology, repvar})
        c->add_option("--n,-N", o.n, "rank N")->check(CLI::Range(2, 1000));
    series->add_option("--q-h,-Q", o.q_h, "Q(h), rational");
    series->add_option("--f-h,-F", o.f_h, "F(h), rational");
    series->add_option("--order", o.order, "truncation order")->check(CLI::Range(0, 200));
    mahler->add_option("--n-max", o.n_max, "largest N in the table")->check(CLI::Range(3, 5001));
    mahler->add_option("--samples", o.samples, "quadrature points")->check(CLI::Range(8, 1 << 24));
    mahler->add_flag("--csv", o.csv, "CSV table (the default without --json)");

    CLI::App* dim = app.add_subcommand("dim", "instanton number and formal dimension");
    dim->add_option("--n,-N", o.n, "rank N")->check(CLI::Range(2, 1000));
    dim->add_flag("--k3", o.k3, "the K3 bundle for this N");
    dim->add_option("--c2", o.c2, "c2 of the bundle");
    dim->add_option("--c1-sq", o.c1_sq, "c1^2 of the bundle");
    dim->add_option("--b2-plus", o.b2_plus, "b2+ of the manifold");
    dim->add_option("--b1", o.b1, "b1 of the manifold");
    dim->add_option("--pairing", o.pairings, "pairings of c1 with integral classes (coprimality check)");
    dim->add_flag("--json", o.json, "machine-readable output");

    CLI::App* selftest = app.add_subcommand("selftest", "run every acceptance check");
    selftest->add_flag("--json", o.json, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        if (!app.get_subcommands().empty() && app.get_subcommands().front()->count() > 0)
            err << app.get_subcommands().front()->help();
        return kExitUsage;
    }

    const Runner r(o, out, err);
    try {
        if (alexander->parsed()) return r.alexander();
        if (invariant->parsed()) return r.invariant();
        if (homology->parsed()) return r.homology();
        if (repvar->parsed()) return r.repvar();
        if (series->parsed()) return r.series();
        if (mahler->parsed()) return r.mahler();
        if (dim->parsed()) return r.dim();
        if (selftest->parsed()) return r.selftest();
    } catch (const Error& e) {
        err << "error: " << e.kind() << ": " << e.what() << '\n';
        return kExitComputation;
    }
    return kExitUsage;
}

}  // namespace kinv::cli
