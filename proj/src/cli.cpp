#include "qschur/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qschur/combinatorics.hpp"
#include "qschur/identities.hpp"
#include "qschur/modforms.hpp"
#include "qschur/specialforms.hpp"
#include "qschur/verify.hpp"

namespace qschur {

namespace {

enum class OutputMode { human, json_mode, csv };

void print_series(std::ostream& out, const TruncSeries& s, const std::string& spec_text,
                  OutputMode mode) {
    if (mode == OutputMode::json_mode) {
        json j;
        j["spec"] = spec_text;
        j["trunc"] = s.precision();
        j["modulus"] = s.modulus() ? json(s.modulus()->get_str()) : json(nullptr);
        j["coefficients"] = s.coeff_strings();
        out << j.dump(2) << "\n";
    } else if (mode == OutputMode::csv) {
        out << "index,coefficient\n";
        for (long i = 0; i < s.precision(); ++i) out << i << "," << s.coeff(i) << "\n";
    } else {
        for (long i = 0; i < s.precision(); ++i) out << i << "\t" << s.coeff(i) << "\n";
    }
}

bool report_matches_expectation(const VerificationReport& rep, const Claim* claim) {
    const Verdict expected = claim ? claim->expected : Verdict::verified;
    if (rep.verdict == Verdict::skipped) return true;  // refusals are not failures
    return rep.verdict == expected;
}

void print_report_human(std::ostream& out, const VerificationReport& rep, bool as_documented) {
    out << "[" << to_string(rep.verdict) << (as_documented ? ", as documented" : "") << "] "
        << rep.claim_id;
    if (rep.counterexample)
        out << "  first violation: n=" << rep.counterexample->n
            << " value=" << rep.counterexample->value << " residue=" << rep.counterexample->residue;
    if (rep.verdict == Verdict::skipped && rep.params.contains("reason"))
        out << "  (" << rep.params["reason"].get<std::string>() << ")";
    out << "  (" << rep.ms << " ms)\n";
}

struct VerifyArgs {
    std::string suite = "all";
    std::string id;
    std::string suite_file;
    long trunc = 0;
    long nmax = 0;
    long precision_cap = 0;
    bool json_out = false;
};

int do_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
    std::vector<VerificationReport> reports;
    std::vector<const Claim*> report_claims;  // parallel; null for identities
    bool any_unexpected = false;

    auto run_identity_suite = [&](long trunc) {
        for (const Identity& ident : identity_registry()) {
            reports.push_back(verify_identity(ident, trunc));
            report_claims.push_back(nullptr);
        }
        const long ct = trunc > 0 ? std::min(trunc, 200L) : 200;
        for (long p : {3L, 5L, 7L}) {
            reports.push_back(verify_psi_dissection(p, ct));
            report_claims.push_back(nullptr);
        }
        for (long p : {5L, 7L, 11L}) {
            reports.push_back(verify_f1_dissection(p, ct));
            report_claims.push_back(nullptr);
        }
    };

    auto run_congruence_suite = [&](const std::vector<Claim>& claims) {
        std::vector<Claim> adjusted = claims;
        for (Claim& c : adjusted) {
            if (a.nmax > 0)
                std::visit(
                    [&](auto& body) {
                        using T = std::decay_t<decltype(body)>;
                        if constexpr (!std::is_same_v<T, SeriesCongruenceClaim>)
                            body.n_max = a.nmax;
                        else if (a.trunc > 0)
                            body.trunc = a.trunc;
                    },
                    c.body);
            else if (a.trunc > 0)
                std::visit(
                    [&](auto& body) {
                        using T = std::decay_t<decltype(body)>;
                        if constexpr (std::is_same_v<T, SeriesCongruenceClaim>)
                            body.trunc = a.trunc;
                    },
                    c.body);
        }
        ExpansionPool pool;
        SuiteOptions opts;
        if (a.precision_cap > 0) opts.precision_cap = a.precision_cap;
        auto rs = run_claims(adjusted, pool, opts);
        for (size_t i = 0; i < rs.size(); ++i) {
            reports.push_back(std::move(rs[i]));
            const Claim* orig = find_claim(adjusted[i].id);
            report_claims.push_back(orig ? orig : &claims[i]);
        }
    };

    if (!a.id.empty()) {
        if (find_identity(a.id)) {
            reports.push_back(verify_identity(a.id, a.trunc));
            report_claims.push_back(nullptr);
        } else if (const Claim* c = find_claim(a.id)) {
            ExpansionPool pool;
            SuiteOptions opts;
            if (a.precision_cap > 0) opts.precision_cap = a.precision_cap;
            Claim adjusted = *c;
            if (a.nmax > 0)
                std::visit(
                    [&](auto& body) {
                        using T = std::decay_t<decltype(body)>;
                        if constexpr (!std::is_same_v<T, SeriesCongruenceClaim>)
                            body.n_max = a.nmax;
                    },
                    adjusted.body);
            reports.push_back(run_claim(adjusted, pool, opts));
            report_claims.push_back(c);
        } else {
            err << "unknown identity or claim id: " << a.id << "\n";
            return 2;
        }
    } else if (!a.suite_file.empty()) {
        std::ifstream in(a.suite_file);
        if (!in) {
            err << "cannot open suite file: " << a.suite_file << "\n";
            return 2;
        }
        json doc;
        in >> doc;
        static std::vector<Claim> file_claims;  // keep alive for report_claims pointers
        file_claims = parse_claims_json(doc);
        run_congruence_suite(file_claims);
    } else if (a.suite == "lemmas") {
        run_identity_suite(a.trunc);
    } else if (a.suite == "congruences") {
        run_congruence_suite(builtin_claims());
    } else if (a.suite == "all") {
        run_identity_suite(a.trunc);
        run_congruence_suite(builtin_claims());
    } else {
        err << "unknown suite: " << a.suite << " (expected all|lemmas|congruences)\n";
        return 2;
    }

    json arr = json::array();
    for (size_t i = 0; i < reports.size(); ++i) {
        const bool pass = report_matches_expectation(reports[i], report_claims[i]);
        if (!pass) any_unexpected = true;
        if (a.json_out) {
            json j = to_json(reports[i]);
            if (report_claims[i] && report_claims[i]->expected != Verdict::verified)
                j["params"]["expected"] = to_string(report_claims[i]->expected);
            if (report_claims[i] && !report_claims[i]->note.empty())
                j["params"]["note"] = report_claims[i]->note;
            arr.push_back(std::move(j));
        } else {
            const bool documented =
                pass && reports[i].verdict == Verdict::counterexample;
            print_report_human(out, reports[i], documented);
        }
    }
    if (a.json_out) out << arr.dump(2) << "\n";

    long n_cex = 0, n_skip = 0;
    for (const auto& r : reports) {
        if (r.verdict == Verdict::counterexample) ++n_cex;
        if (r.verdict == Verdict::skipped) ++n_skip;
    }
    if (!a.json_out)
        out << reports.size() << " checks, " << n_cex << " counterexamples, " << n_skip
            << " skipped" << (any_unexpected ? " -- UNEXPECTED RESULTS" : "") << "\n";
    return any_unexpected ? 1 : 0;
}

std::map<long, long> parse_eta_arg(const std::string& text) {
    std::map<long, long> exps;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        const auto colon = part.find(':');
        if (colon == std::string::npos)
            throw CLI::ValidationError("--eta", "expected delta:exp pairs, e.g. 6:4");
        exps[std::stol(part.substr(0, colon))] += std::stol(part.substr(colon + 1));
    }
    if (exps.empty()) throw CLI::ValidationError("--eta", "no exponents given");
    return exps;
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact q-series engine for t-Schur overpartition congruences"};
    app.require_subcommand(1);

    // ---- expand ----
    std::string x_spec;
    long x_trunc = 32;
    long x_mod = 0;
    bool x_json = false, x_csv = false;
    auto* expand_cmd = app.add_subcommand("expand", "expand a series spec to coefficients");
    expand_cmd->add_option("--spec", x_spec, "series spec, e.g. \"schur_over(3)\"")->required();
    expand_cmd->add_option("--trunc", x_trunc, "number of coefficients")->required();
    expand_cmd->add_option("--mod", x_mod, "reduce coefficients mod m");
    expand_cmd->add_flag("--json", x_json, "JSON output");
    expand_cmd->add_flag("--csv", x_csv, "CSV output (index,coefficient)");

    // ---- dissect ----
    std::string d_spec;
    long d_p = 2, d_j = -1, d_trunc = 32;
    long d_mod = 0;
    bool d_json = false, d_csv = false;
    auto* dissect_cmd =
        app.add_subcommand("dissect", "extract arithmetic progressions of a series");
    dissect_cmd->add_option("--spec", d_spec, "series spec")->required();
    dissect_cmd->add_option("--p", d_p, "progression modulus p")->required();
    dissect_cmd->add_option("--j", d_j, "single residue class (default: all)");
    dissect_cmd->add_option("--trunc", d_trunc, "coefficients per component")->required();
    dissect_cmd->add_option("--mod", d_mod, "reduce coefficients mod m");
    dissect_cmd->add_flag("--json", d_json, "JSON output");
    dissect_cmd->add_flag("--csv", d_csv, "CSV output (requires --j)");

    // ---- oracle ----
    long o_t = 3, o_n = 0;
    std::string o_kind = "schur_over";
    auto* oracle_cmd =
        app.add_subcommand("oracle", "enumeration oracles cross-checked against expansions");
    oracle_cmd->add_option("--t", o_t, "parameter t (odd)");
    oracle_cmd->add_option("--n", o_n, "argument n")->required();
    oracle_cmd->add_option("--kind", o_kind,
                           "schur_over|podbar|it_literal|it_bijective|partitions|overpartitions");

    // ---- verify ----
    VerifyArgs v;
    auto* verify_cmd = app.add_subcommand("verify", "run identity / congruence suites");
    verify_cmd->add_option("--suite", v.suite, "all|lemmas|congruences");
    verify_cmd->add_option("--id", v.id, "verify a single identity or claim by id");
    verify_cmd->add_option("--suite-file", v.suite_file, "JSON claim file");
    verify_cmd->add_option("--trunc", v.trunc, "identity / series-congruence precision");
    verify_cmd->add_option("--nmax", v.nmax, "override n range for congruence claims");
    verify_cmd->add_option("--precision-cap", v.precision_cap,
                           "skip claims needing more expansion precision than this");
    verify_cmd->add_flag("--json", v.json_out, "JSON report array");

    // ---- scan ----
    long s_t = 3, s_amax = 12, s_depth = 200, s_support = 32;
    std::string s_mods = "4,8,16";
    bool s_json = false;
    auto* scan_cmd = app.add_subcommand("scan", "search candidate congruences S_t(an+b) = 0 mod m");
    scan_cmd->add_option("--t", s_t, "t parameter")->required();
    scan_cmd->add_option("--amax", s_amax, "largest progression step a");
    scan_cmd->add_option("--mods", s_mods, "comma-separated moduli");
    scan_cmd->add_option("--depth", s_depth, "check n = 0..depth");
    scan_cmd->add_option("--min-support", s_support, "minimum depth demanded of a candidate");
    scan_cmd->add_flag("--json", s_json, "JSON output");

    // ---- modform ----
    std::string m_eta = "6:4";
    long m_level = 36, m_trunc = 3000, m_nmax = 0;
    std::string m_checks = "ono,cusps", m_primes = "5,7,11,13";
    bool m_json = false;
    auto* modform_cmd =
        app.add_subcommand("modform", "eta-quotient conditions, cusp orders, Hecke action");
    modform_cmd->add_option("--eta", m_eta, "exponents delta:r, comma separated")->required();
    modform_cmd->add_option("--level", m_level, "level N")->required();
    modform_cmd->add_option("--check", m_checks, "comma of ono,cusps,hecke");
    modform_cmd->add_option("--primes", m_primes, "primes for the Hecke checks");
    modform_cmd->add_option("--trunc", m_trunc, "expansion precision for Hecke checks");
    modform_cmd->add_option("--nmax", m_nmax, "eigen recurrence range (default trunc/p)");
    modform_cmd->add_flag("--json", m_json, "JSON output");

    std::vector<const char*> argv;
    argv.push_back("qschur");
    for (const auto& s : args) argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return 2;
    }

    try {
        std::optional<Int> xmod;

        if (expand_cmd->parsed()) {
            if (x_mod > 0) xmod = Int(x_mod);
            TruncSeries s = expand(parse_spec(x_spec), x_trunc, xmod);
            print_series(out, s, x_spec,
                         x_json ? OutputMode::json_mode
                                : (x_csv ? OutputMode::csv : OutputMode::human));
            return 0;
        }

        if (dissect_cmd->parsed()) {
            if (d_mod > 0) xmod = Int(d_mod);
            if (d_csv && d_j < 0) {
                err << "error: --csv requires --j\n";
                return 2;
            }
            SeriesSpec base = parse_spec(d_spec);
            if (d_j >= 0) {
                TruncSeries s = expand(extract(base, d_p, d_j), d_trunc, xmod);
                print_series(out, s, d_spec, d_json ? OutputMode::json_mode
                                                    : (d_csv ? OutputMode::csv : OutputMode::human));
                return 0;
            }
            json j;
            j["spec"] = d_spec;
            j["p"] = d_p;
            for (long jj = 0; jj < d_p; ++jj) {
                TruncSeries s = expand(extract(base, d_p, jj), d_trunc, xmod);
                if (d_json)
                    j["components"][std::to_string(jj)] = s.coeff_strings();
                else {
                    out << "-- residue " << jj << " --\n";
                    print_series(out, s, d_spec, OutputMode::human);
                }
            }
            if (d_json) out << j.dump(2) << "\n";
            return 0;
        }

        if (oracle_cmd->parsed()) {
            Int enumerated;
            Int series_value;
            if (o_kind == "schur_over") {
                enumerated = schur_over_oracle(o_t, o_n);
                series_value = named_series(NamedId::schur_over, o_t, o_n + 1).coeff(o_n);
            } else if (o_kind == "podbar") {
                enumerated = podbar_oracle(o_n);
                series_value = named_series(NamedId::overpartition_odd, 0, o_n + 1).coeff(o_n);
            } else if (o_kind == "it_literal" || o_kind == "it_bijective") {
                const auto reading =
                    o_kind == "it_literal" ? ItReading::literal : ItReading::bijective;
                enumerated = i_t_oracle(o_t, o_n, reading);
                series_value =
                    named_series(NamedId::schur_over, o_t, o_n / 2 + 1).coeff(o_n / 2);
            } else if (o_kind == "partitions") {
                enumerated = count_partitions(o_n, PartitionConstraint{});
                series_value = eta_power(1, -1, o_n + 1).coeff(o_n);
            } else if (o_kind == "overpartitions") {
                PartitionConstraint c;
                c.overline = true;
                enumerated = count_partitions(o_n, c);
                series_value = named_series(NamedId::overpartition, 0, o_n + 1).coeff(o_n);
            } else {
                err << "unknown oracle kind: " << o_kind << "\n";
                return 2;
            }
            json j;
            j["enum"] = enumerated.get_str();
            j["series"] = series_value.get_str();
            j["agree"] = (enumerated == series_value);
            out << j.dump() << "\n";
            return enumerated == series_value ? 0 : 1;
        }

        if (verify_cmd->parsed()) return do_verify(v, out, err);

        if (scan_cmd->parsed()) {
            std::vector<unsigned long> mods;
            std::stringstream ss(s_mods);
            std::string part;
            while (std::getline(ss, part, ',')) mods.push_back(std::stoul(part));
            ExpansionPool pool;
            auto cands = scan(pool, s_t, s_amax, mods, s_depth, s_support);
            if (s_json) {
                json arr = json::array();
                for (const auto& c : cands)
                    arr.push_back({{"a", c.a},
                                   {"b", c.b},
                                   {"m", c.m},
                                   {"status", "candidate"},
                                   {"known", c.known}});
                out << arr.dump(2) << "\n";
            } else {
                for (const auto& c : cands)
                    out << "candidate: S_" << s_t << "(" << c.a << "n+" << c.b << ") = 0 mod "
                        << c.m << (c.known ? "  [known theorem]" : "") << "\n";
                out << cands.size() << " candidates (depth " << s_depth << ")\n";
            }
            return 0;
        }

        if (modform_cmd->parsed()) {
            EtaQuotient e(m_level, parse_eta_arg(m_eta));
            json j;
            bool all_ok = true;
            std::stringstream cs(m_checks);
            std::string check;
            std::optional<ModformExpansion> expansion;
            while (std::getline(cs, check, ',')) {
                if (check == "ono") {
                    OnoConditions ono = ono_conditions(e);
                    j["ono"] = {{"weight", ono.weight.get_str()},
                                {"sum_delta_r_mod24_ok", ono.cond_delta},
                                {"sum_inverse_r_mod24_ok", ono.cond_inverse},
                                {"character_s", ono.character_s.get_str()}};
                    if (!ono.cond_delta || !ono.cond_inverse) all_ok = false;
                } else if (check == "cusps") {
                    json cusps = json::object();
                    bool holomorphic = true;
                    for (long d = 1; d <= m_level; ++d) {
                        if (m_level % d) continue;
                        Rational order = cusp_order(e, Cusp{1, d});
                        cusps[std::to_string(d)] = order.get_str();
                        if (order < 0) holomorphic = false;
                    }
                    j["cusp_orders"] = cusps;
                    j["holomorphic_at_cusps"] = holomorphic;
                    if (!holomorphic) all_ok = false;
                } else if (check == "hecke") {
                    if (!expansion) expansion = modform_expansion(e, m_trunc);
                    std::stringstream ps(m_primes);
                    std::string pstr;
                    json hecke = json::array();
                    while (std::getline(ps, pstr, ',')) {
                        const long p = std::stol(pstr);
                        const long nmax = m_nmax > 0 ? m_nmax : (m_trunc - 1) / p;
                        VerificationReport rep = eigen_check(*expansion, p, nmax);
                        hecke.push_back(to_json(rep));
                        if (rep.verdict != Verdict::verified) all_ok = false;
                    }
                    j["hecke"] = hecke;
                } else {
                    err << "unknown check: " << check << "\n";
                    return 2;
                }
            }
            if (m_json)
                out << j.dump(2) << "\n";
            else
                out << j.dump(2) << "\n";
            return all_ok ? 0 : 1;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace qschur
