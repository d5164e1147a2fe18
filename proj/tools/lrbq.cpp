// Command-line front end: each subcommand builds one JSON report and renders
// it as text, JSON or CSV.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "lrbq/qnums.hpp"
#include "lrbq/spectra.hpp"
#include "lrbq/symfun.hpp"
#include "lrbq/verify.hpp"
#include "lrbq/version.hpp"

using nlohmann::json;

namespace {

struct Options {
    int n = 3;
    int q = 0;
    std::string space = "full";
    std::string defs = "ABCDEFG";
    std::uint64_t seed = 20240607;
    std::string out;
    std::string format = "text";
    bool extended = false;
    std::vector<int> checks;
};

/// ISO-8601 UTC time from SOURCE_DATE_EPOCH, or null so that repeated runs
/// stay byte-identical.
json timestamp() {
    const char* epoch = std::getenv("SOURCE_DATE_EPOCH");
    if (!epoch) return nullptr;
    char* end = nullptr;
    const long long t = std::strtoll(epoch, &end, 10);
    if (end == epoch || *end != '\0') return nullptr;
    const std::time_t tt = static_cast<std::time_t>(t);
    std::tm tm{};
    gmtime_r(&tt, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

json envelope(json report, const std::vector<std::string>& argv) {
    std::string inv;
    for (std::size_t i = 0; i < argv.size(); ++i) inv += (i ? " " : "") + argv[i];
    report["tool_version"] = lrbq::kVersion;
    report["invocation"] = inv;
    report["timestamp"] = timestamp();
    return report;
}

void emit(const Options& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.out);
    if (!f) throw std::runtime_error("cannot write " + o.out);
    f << text;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string r = "\"";
    for (char c : s) r += c == '"' ? std::string("\"\"") : std::string(1, c);
    return r + "\"";
}

// ------------------------------------------------------------- subcommands

json cmd_invariants(const Options& o) {
    lrbq::require_desk_scale(o.n, o.q, "invariants");
    json sums = json::array();
    for (const auto& x : lrbq::orbit_sums(o.n, o.q)) {
        const std::size_t l = sums.size();
        json e{{"length", l}, {"terms", x.coeffs.size()}};
        if (x.coeffs.size() <= 64) e["sum"] = x.str();
        sums.push_back(std::move(e));
    }
    const auto m = lrbq::x_matrix_on_invariants(o.n, o.q);
    json rows = json::array();
    bool ok = true;
    for (int r = 0; r <= o.n; ++r) {
        json row = json::array();
        for (int c = 0; c <= o.n; ++c) {
            row.push_back(m.at(r, c).str());
            long long want = r == c ? lrbq::eigenvalue_at(c, o.q) : (r == c + 1 ? (o.q ? lrbq::int_pow(o.q, c) : 1) : 0);
            ok = ok && m.at(r, c) == lrbq::Rat(want);
        }
        rows.push_back(std::move(row));
    }
    return {{"command", "invariants"}, {"monoid", o.q ? "flags" : "words"}, {"n", o.n},
            {"q", o.q ? json(o.q) : json(nullptr)}, {"orbit_sums", sums}, {"x_matrix", rows}, {"pass", ok}};
}

json cmd_stirling(const Options& o) {
    if (o.n < 0 || o.n > 8) throw std::invalid_argument("stirling: need 0 <= n <= 8");
    json plain = json::array(), tilde = json::array(), sq = json::array();
    for (int m = 0; m <= o.n; ++m) {
        json a = json::array(), b = json::array(), c = json::array();
        for (int k = 0; k <= m; ++k) {
            a.push_back(lrbq::stirling2(m, k));
            b.push_back(lrbq::q_stirling(m, k, lrbq::StirlingVariant::tilde).str());
            c.push_back(lrbq::q_stirling(m, k, lrbq::StirlingVariant::plain).str());
        }
        plain.push_back(a);
        tilde.push_back(b);
        sq.push_back(c);
    }
    json checks = json::array();
    bool ok = true;
    for (const auto& c : lrbq::verify_change_of_basis(o.n)) {
        checks.push_back({{"name", c.name}, {"n", c.n}, {"pass", c.pass}});
        ok = ok && c.pass;
    }
    return {{"command", "stirling"}, {"n", o.n}, {"S", plain}, {"S_tilde_q", tilde}, {"S_q", sq}, {"change_of_basis", checks}, {"pass", ok}};
}

json cmd_minpoly(const Options& o) {
    const auto r = lrbq::minpoly_verify(o.n, o.q);
    json del = json::array();
    for (const auto& [f, v] : r.deleted) del.push_back({{"factor", f}, {"annihilates", v}});
    return {{"command", "minpoly"}, {"monoid", o.q ? "flags" : "words"}, {"n", o.n}, {"q", o.q ? json(o.q) : json(nullptr)},
            {"polynomial", r.polynomial}, {"annihilates", r.annihilates}, {"deleted_factors", del}, {"minimal", r.minimal()},
            {"pass", r.minimal()}};
}

json cmd_spectrum(const Options& o) {
    lrbq::require_desk_scale(o.n, o.q, "spectrum");
    const auto space = lrbq::Space::parse(o.space);
    const bool characters = o.q == 0;
    json rep = lrbq::analyze_spectrum(o.n, o.q, space, characters).to_json();
    rep["command"] = "spectrum";
    return rep;
}

json cmd_dsf(const Options& o) {
    if (o.n < 0 || o.n > 8) throw std::invalid_argument("dsf: need 0 <= n <= 8");
    json defs = json::object();
    std::optional<lrbq::SchurVector> schur;
    std::optional<lrbq::QSymVector> qsym;
    bool agree = true;
    for (char d : o.defs) {
        if (d == ',' || d == ' ') continue;
        if (d >= 'A' && d <= 'D') {
            const auto v = lrbq::derangement_sf(o.n, d);
            defs[std::string(1, d)] = v.str();
            if (!schur) schur = v;
            agree = agree && v == *schur;
            const auto f = lrbq::schur_to_fundamental(v);
            if (!qsym) qsym = f;
            agree = agree && f == *qsym;
        } else if (d >= 'E' && d <= 'G') {
            const auto f = lrbq::derangement_qsym(o.n, d);
            defs[std::string(1, d)] = f.str();
            if (!qsym) qsym = f;
            agree = agree && f == *qsym;
        } else {
            throw std::invalid_argument(std::string("dsf: unknown definition '") + d + "'");
        }
    }
    json tableaux = json::array();
    for (const auto& t : lrbq::desarrangement_tableaux(o.n)) tableaux.push_back(t.str());
    json out{{"command", "dsf"}, {"n", o.n}, {"definitions", defs}, {"desarrangement_tableaux", tableaux},
             {"derangements", lrbq::derangement_number(o.n)}, {"agree", agree}, {"pass", agree}};
    if (schur) out["schur"] = schur->str();
    if (qsym) out["fundamental"] = qsym->str();
    return out;
}

json cmd_rtt(const Options& o) {
    const auto r = lrbq::random_to_top(o.n);
    json j = r.to_json(o.format == "json" && o.n <= 4);
    j["command"] = "rtt";
    return j;
}

json cmd_verify(const Options& o, int& exit_code) {
    lrbq::VerificationGrid g;
    g.extended = o.extended;
    g.seed = o.seed;
    g.checks = o.checks;
    const auto results = lrbq::run_verification(g);
    json crit = json::array();
    bool ok = true;
    for (const auto& r : results) {
        crit.push_back(r.to_json());
        ok = ok && r.pass();
    }
    exit_code = ok ? 0 : 1;
    return {{"command", "verify"}, {"extended", o.extended}, {"seed", o.seed}, {"criteria", crit}, {"pass", ok}};
}

// ------------------------------------------------------------------ render

std::string render_text(const json& r) {
    std::ostringstream os;
    const std::string cmd = r.at("command");
    if (cmd == "minpoly") {
        os << r.at("polynomial").get<std::string>() << ": " << (r.at("minimal").get<bool>() ? "minimal" : "not minimal") << " — "
           << (r.at("pass").get<bool>() ? "PASS" : "FAIL") << "\n";
        for (const auto& d : r.at("deleted_factors")) {
            os << "  " << d.at("factor").get<std::string>() << ": " << (d.at("annihilates").get<bool>() ? "annihilates" : "does not annihilate")
               << "\n";
        }
    } else if (cmd == "spectrum") {
        os << r.at("monoid").get<std::string>() << " n=" << r.at("n") << (r.at("q").is_null() ? "" : " q=" + r.at("q").dump()) << " space="
           << r.at("space").get<std::string>() << " dim=" << r.at("space_dim") << "\n";
        for (const auto& e : r.at("eigenvalues")) {
            os << "  j=" << e.at("j") << " eigenvalue " << e.at("eigenvalue") << ": dim " << e.at("dim") << " (predicted "
               << e.at("predicted_dim") << ")";
            if (e.contains("schur")) os << "  " << e.at("schur").get<std::string>();
            os << (e.at("pass").get<bool>() ? "  PASS" : "  FAIL") << "\n";
        }
    } else if (cmd == "verify") {
        for (const auto& c : r.at("criteria")) {
            os << "[" << (c.at("pass").get<bool>() ? "PASS" : "FAIL") << "] " << c.at("id") << ". " << c.at("title").get<std::string>() << " ("
               << c.at("checks").size() << " checks)\n";
            for (const auto& k : c.at("checks")) {
                if (!k.at("pass").get<bool>()) {
                    os << "    failed: " << k.at("name").get<std::string>() << " expected " << k.at("expected").get<std::string>()
                       << ", got " << k.at("actual").get<std::string>() << "\n";
                }
            }
        }
    } else if (cmd == "rtt") {
        os << "random-to-top n=" << r.at("n") << ": column stochastic " << r.at("column_stochastic") << ", row stochastic "
           << r.at("row_stochastic") << "\n";
        for (const auto& s : r.at("spectrum")) {
            os << "  eigenvalue " << s.at("eigenvalue").get<std::string>() << ": multiplicity " << s.at("multiplicity") << " (predicted "
               << s.at("predicted") << ")\n";
        }
        os << "  stationary distribution uniform: " << r.at("stationary_uniform") << " (" << r.at("stationary_method").get<std::string>()
           << ")\n";
    } else if (cmd == "dsf") {
        for (const auto& [k, v] : r.at("definitions").items()) os << "  " << k << ": " << v.get<std::string>() << "\n";
        os << "definitions agree: " << r.at("agree") << "\n";
    } else {
        os << r.dump(2) << "\n";
        return os.str();
    }
    os << (r.at("pass").get<bool>() ? "PASS" : "FAIL") << "\n";
    return os.str();
}

std::string render_csv(const json& r, const Options& o) {
    std::ostringstream os;
    const std::string cmd = r.at("command");
    if (cmd == "spectrum") {
        os << "j,eigenvalue,dim,predicted_dim,schur,predicted_schur,pass\n";
        for (const auto& e : r.at("eigenvalues")) {
            os << e.at("j") << "," << e.at("eigenvalue") << "," << e.at("dim") << "," << e.at("predicted_dim") << ","
               << csv_escape(e.value("schur", "")) << "," << csv_escape(e.value("predicted_schur", "")) << "," << e.at("pass") << "\n";
        }
    } else if (cmd == "rtt") {
        os << lrbq::to_csv(lrbq::random_to_top(o.n).matrix);
    } else if (cmd == "verify") {
        os << "criterion,check,pass,expected,actual\n";
        for (const auto& c : r.at("criteria")) {
            for (const auto& k : c.at("checks")) {
                os << c.at("id") << "," << csv_escape(k.at("name")) << "," << k.at("pass") << "," << csv_escape(k.at("expected")) << ","
                   << csv_escape(k.at("actual")) << "\n";
            }
        }
    } else if (cmd == "invariants") {
        for (const auto& row : r.at("x_matrix")) {
            for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i].get<std::string>();
            os << "\n";
        }
    } else if (cmd == "stirling") {
        os << "m,k,S,S_tilde_q,S_q\n";
        for (std::size_t m = 0; m < r.at("S").size(); ++m) {
            for (std::size_t k = 0; k <= m; ++k) {
                os << m << "," << k << "," << r.at("S")[m][k] << "," << csv_escape(r.at("S_tilde_q")[m][k]) << ","
                   << csv_escape(r.at("S_q")[m][k]) << "\n";
            }
        }
    } else if (cmd == "minpoly") {
        os << "factor,annihilates\n" << csv_escape(r.at("polynomial")) << "," << r.at("annihilates") << "\n";
        for (const auto& d : r.at("deleted_factors")) os << csv_escape(d.at("factor")) << "," << d.at("annihilates") << "\n";
    } else if (cmd == "dsf") {
        os << "definition,value\n";
        for (const auto& [k, v] : r.at("definitions").items()) os << k << "," << csv_escape(v.get<std::string>()) << "\n";
    }
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    CLI::App app{"Left-regular band spectra, Stirling expansions and derangement symmetric functions"};
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App* s, bool with_q, bool with_space) {
        s->add_option("--n", o.n, "number of letters / ambient dimension")->capture_default_str();
        if (with_q) s->add_option("--q", o.q, "prime field size for the flag monoid (omit for words)")->check(CLI::NonNegativeNumber);
        if (with_space) s->add_option("--space", o.space, "full, chamber or stratum:<l>")->capture_default_str();
        s->add_option("--seed", o.seed, "seed for sampled checks")->capture_default_str();
        s->add_option("--out", o.out, "write the report to this file");
        s->add_option("--format", o.format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}))->capture_default_str();
    };

    auto* inv = app.add_subcommand("invariants", "orbit sums and the matrix of x on them");
    common(inv, true, false);
    auto* stir = app.add_subcommand("stirling", "Stirling triangles and change-of-basis identities");
    common(stir, false, false);
    auto* minp = app.add_subcommand("minpoly", "verify the minimal polynomial of x");
    common(minp, true, false);
    auto* spec = app.add_subcommand("spectrum", "eigenspace dimensions, characters and Schur images");
    common(spec, true, true);
    auto* dsf = app.add_subcommand("dsf", "derangement symmetric functions by each definition");
    common(dsf, false, false);
    dsf->add_option("--defs", o.defs, "definitions to compute, from A..G")->capture_default_str();
    auto* rtt = app.add_subcommand("rtt", "random-to-top chain on permutations");
    common(rtt, false, false);
    auto* ver = app.add_subcommand("verify", "run the verification grid");
    common(ver, false, false);
    ver->add_flag("--extended", o.extended, "include flags at n=4, p=2");
    ver->add_option("--checks", o.checks, "criterion ids to run (default all)")->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        json report;
        int exit_code = 0;
        if (*inv) report = cmd_invariants(o);
        else if (*stir) report = cmd_stirling(o);
        else if (*minp) report = cmd_minpoly(o);
        else if (*spec) report = cmd_spectrum(o);
        else if (*dsf) report = cmd_dsf(o);
        else if (*rtt) report = cmd_rtt(o);
        else if (*ver) report = cmd_verify(o, exit_code);
        if (exit_code == 0 && !report.value("pass", true)) exit_code = 1;
        report = envelope(std::move(report), args);

        std::string text;
        if (o.format == "json") text = report.dump(2) + "\n";
        else if (o.format == "csv") text = render_csv(report, o);
        else text = render_text(report);
        emit(o, text);

        if (exit_code == 1 && report.at("command") == "verify") {
            json failing = json::array();
            for (const auto& c : report.at("criteria")) {
                for (const auto& k : c.at("checks")) {
                    if (!k.at("pass").get<bool>()) failing.push_back(k);
                }
            }
            std::cerr << json{{"failing_checks", failing}}.dump(2) << "\n";
        }
        return exit_code;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n" << app.help();
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
