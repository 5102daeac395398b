// Command-line front end: single-knot braid and invariant reports, parameter
// sweeps, critical-phase listings, analytic-vs-numeric verification, SVG
// braid diagrams. Exit codes: 0 success, 1 verification mismatch, 2
// input/validation error.

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "minknot/minknot.hpp"

namespace mk = minknot;
using mk::json;

namespace {

enum class Format { text, json_fmt, csv };

struct Common {
    int N = 0, p = 0, q = 0;
    std::string phase_str;
    std::string format = "text";
    std::string catalog_path;
    std::string svg_path;

    Format fmt() const {
        if (format == "text") return Format::text;
        if (format == "json") return Format::json_fmt;
        if (format == "csv") return Format::csv;
        throw mk::out_of_range_error("unknown format: " + format);
    }
    mk::Rational phase() const {
        if (phase_str.empty()) return mk::canonical_phase(N, p, q);
        mk::Rational r = mk::Rational::parse(phase_str);
        if (r < mk::Rational(0) || !(r < mk::Rational(1)))
            throw mk::out_of_range_error("phase must lie in [0,1)");
        return r;
    }
    mk::KnotParams params() const { return mk::validate(N, p, q, phase()); }
};

struct InvariantReport {
    mk::KnotParams params;
    mk::BraidWord word;
    mk::LaurentPoly alex;
    mk::RolfsenCoeffs rolf;
    mk::BigInt det;
    int arf = 0;
    bool sq2 = false;
    bool fib = false;
    int e = 0;
    mk::SymmetryClass sym = mk::SymmetryClass::reversible;
    std::optional<mk::LaurentPoly> jones_val;
    mk::Identification ident;
};

InvariantReport invariant_report(const mk::KnotParams& kp, const mk::Catalog& cat) {
    InvariantReport r;
    r.params = kp;
    r.word = mk::braid_word(kp);
    r.alex = mk::alexander(r.word);
    r.rolf = mk::rolfsen_coeffs(r.alex);
    r.det = r.alex.eval_minus_one();
    r.arf = mk::arf_diagnostic(r.alex);
    r.sq2 = mk::square_mod2(r.alex);
    r.fib = mk::fibered_necessary(r.alex);
    r.e = mk::writhe(r.word);
    r.sym = mk::symmetry_class(kp.N, kp.p, kp.q);
    if (kp.N <= 8) r.jones_val = mk::jones(r.word);
    r.ident = mk::identify(cat, r.alex, r.jones_val, r.e);
    return r;
}

json invariant_json(const InvariantReport& r) {
    json j;
    j["N"] = r.params.N;
    j["p"] = r.params.p;
    j["q"] = r.params.q;
    j["phase"] = r.params.phase.str();
    j["word"] = mk::word_json(r.word);
    j["alexander"] = mk::poly_json(r.alex);
    j["rolfsen"] = r.rolf;
    j["determinant"] = static_cast<std::int64_t>(r.det);
    j["arf_diagnostic"] = r.arf;
    j["square_mod2"] = r.sq2;
    j["fibered_necessary"] = r.fib;
    j["writhe"] = r.e;
    j["symmetry_class"] = mk::to_string(r.sym);
    if (r.jones_val) j["jones"] = mk::poly_json(*r.jones_val);
    j["identification"] = mk::identification_json(r.ident);
    if (r.params.both_even) j["both_even"] = true;
    return j;
}

void print_word(std::ostream& os, const mk::BraidWord& w) {
    os << "[";
    for (std::size_t i = 0; i < w.letters.size(); ++i) os << (i ? "," : "") << w.letters[i];
    os << "]";
}

std::string symmetry_note(mk::SymmetryClass s, int N) {
    switch (s) {
        case mk::SymmetryClass::reversible: return "reversible";
        case mk::SymmetryClass::strongly_fully_amphicheiral:
            return "strongly fully amphicheiral (and reversible)";
        case mk::SymmetryClass::periodic_order_two_reversible:
            return "periodic of order two (axis linking number " + std::to_string(N) +
                   "); reversible";
    }
    return "?";
}

int cmd_braid(const Common& c) {
    mk::KnotParams kp = c.params();
    mk::BraidBuild b = mk::build_braid(kp);
    std::vector<int> per = mk::closure_permutation(b.word);
    if (!c.svg_path.empty()) mk::write_braid_svg(kp, b.crossings, c.svg_path);
    switch (c.fmt()) {
        case Format::json_fmt: {
            json j;
            j["N"] = kp.N;
            j["p"] = kp.p;
            j["q"] = kp.q;
            j["phase"] = kp.phase.str();
            j["word"] = mk::word_json(b.word);
            j["writhe"] = mk::writhe(b.word);
            j["closure_permutation"] = per;
            j["is_knot"] = mk::is_knot(b.word);
            j["crossings"] = json::array();
            for (auto& cr : b.crossings) j["crossings"].push_back(mk::crossing_json(cr));
            std::cout << j.dump(2) << "\n";
            break;
        }
        case Format::csv: {
            std::cout << "ordinal,t,k,l,m,level,sign\n";
            for (auto& cr : b.crossings)
                std::cout << cr.ordinal << "," << cr.time.str() << "," << cr.k << "," << cr.l
                          << "," << cr.m << "," << cr.level << "," << cr.sign << "\n";
            break;
        }
        case Format::text: {
            std::cout << "K(" << kp.N << "," << kp.p << "," << kp.q << ") phase " << kp.phase
                      << "\nword ";
            print_word(std::cout, b.word);
            std::cout << "\nwrithe " << mk::writhe(b.word) << "\nclosure permutation [";
            for (std::size_t i = 0; i < per.size(); ++i) std::cout << (i ? " " : "") << per[i];
            std::cout << "] -> " << (mk::is_knot(b.word) ? "knot" : "multi-component link")
                      << "\n\nordinal     t        k l    m  level sign\n";
            for (auto& cr : b.crossings)
                std::printf("%5d %10s  %d %d %4lld  %3d  %+d\n", cr.ordinal,
                            cr.time.str().c_str(), cr.k, cr.l, static_cast<long long>(cr.m),
                            cr.level, cr.sign);
            break;
        }
    }
    if (!c.svg_path.empty() && c.fmt() == Format::text)
        std::cout << "\nbraid diagram written to " << c.svg_path << "\n";
    return 0;
}

int cmd_invariants(const Common& c) {
    mk::Catalog cat = mk::load_catalog(
        c.catalog_path.empty() ? std::nullopt : std::optional<std::string>(c.catalog_path));
    mk::KnotParams kp = c.params();
    InvariantReport r = invariant_report(kp, cat);
    switch (c.fmt()) {
        case Format::json_fmt:
            std::cout << invariant_json(r).dump(2) << "\n";
            break;
        case Format::csv: {
            std::cout << "key,value\n";
            std::cout << "alexander," << r.alex.str() << "\n";
            std::cout << "rolfsen," << mk::rolfsen_str(r.rolf) << "\n";
            std::cout << "determinant," << r.det.str() << "\n";
            std::cout << "arf_diagnostic," << r.arf << "\n";
            std::cout << "square_mod2," << (r.sq2 ? "true" : "false") << "\n";
            std::cout << "fibered_necessary," << (r.fib ? "true" : "false") << "\n";
            std::cout << "writhe," << r.e << "\n";
            std::cout << "symmetry_class," << mk::to_string(r.sym) << "\n";
            if (r.jones_val) std::cout << "jones," << r.jones_val->str() << "\n";
            for (auto& cd : r.ident.candidates)
                std::cout << "candidate," << cd.name << "\n";
            break;
        }
        case Format::text: {
            std::cout << "K(" << kp.N << "," << kp.p << "," << kp.q << ") phase " << kp.phase
                      << (kp.both_even ? "   [p,q both even]" : "") << "\n";
            std::cout << "Alexander  " << r.alex.str() << "\n";
            std::cout << "Rolfsen    " << mk::rolfsen_str(r.rolf) << "\n";
            std::cout << "Delta(-1)  " << r.det.str() << "\n";
            std::cout << "Arf diagnostic     " << r.arf << "\n";
            std::cout << "square mod 2       " << (r.sq2 ? "yes" : "no") << "\n";
            std::cout << "fibered necessary  " << (r.fib ? "yes" : "no") << "\n";
            std::cout << "writhe     " << r.e << "\n";
            std::cout << "symmetry   " << symmetry_note(r.sym, kp.N) << "\n";
            if (r.jones_val) std::cout << "Jones      " << r.jones_val->str() << "\n";
            if (r.ident.candidates.empty()) {
                std::cout << "candidates (none in catalog)\n";
            } else {
                std::cout << "candidates\n";
                for (auto& cd : r.ident.candidates)
                    std::cout << "  " << cd.name << "  ["
                              << (cd.strength == mk::MatchStrength::alexander_and_jones
                                      ? "alexander+jones"
                                      : "alexander only")
                              << "]\n";
            }
            if (r.ident.obstruction_note) std::cout << "note: " << *r.ident.obstruction_note << "\n";
            break;
        }
    }
    return 0;
}

struct Range {
    int lo = 0, hi = -1;
    bool set() const { return hi >= lo && lo > 0; }
};

Range parse_range(const std::string& s) {
    auto pos = s.find("..");
    if (pos == std::string::npos)
        throw mk::out_of_range_error("range must be A..B, got " + s);
    Range r;
    r.lo = std::stoi(s.substr(0, pos));
    r.hi = std::stoi(s.substr(pos + 2));
    if (r.hi < r.lo) throw mk::out_of_range_error("empty range " + s);
    return r;
}

int cmd_scan(const Common& c, const std::string& p_range, const std::string& q_range) {
    mk::Catalog cat = mk::load_catalog(
        c.catalog_path.empty() ? std::nullopt : std::optional<std::string>(c.catalog_path));
    Range pr = parse_range(p_range);
    std::vector<int> qs;
    if (!q_range.empty()) {
        Range qr = parse_range(q_range);
        for (int q = qr.lo; q <= qr.hi; ++q) qs.push_back(q);
    } else {
        qs.push_back(c.q);
    }

    struct Row {
        int p, q;
        bool ok = false;
        std::string err;
        InvariantReport rep;
    };
    std::vector<Row> rows;
    for (int q : qs) {
        for (int p = pr.lo; p <= pr.hi; ++p) {
            Row row;
            row.p = p;
            row.q = q;
            try {
                mk::KnotParams kp = mk::validate(c.N, p, q, mk::canonical_phase(c.N, p, q));
                row.rep = invariant_report(kp, cat);
                row.ok = true;
            } catch (const mk::error& e) {
                row.err = e.what();
            }
            rows.push_back(std::move(row));
        }
    }

    // periodicity summary: Delta agrees at p and p+2qN whenever both are in range
    std::vector<std::string> period_notes;
    for (const Row& a : rows) {
        if (!a.ok) continue;
        for (const Row& b : rows) {
            if (!b.ok || b.q != a.q || b.p != a.p + 2 * a.q * c.N) continue;
            bool same = a.rep.alex == b.rep.alex;
            period_notes.push_back("q=" + std::to_string(a.q) + ": Delta(p=" +
                                   std::to_string(a.p) + ") " + (same ? "==" : "!=") +
                                   " Delta(p=" + std::to_string(b.p) + ")");
        }
    }

    switch (c.fmt()) {
        case Format::json_fmt: {
            json j;
            j["N"] = c.N;
            j["rows"] = json::array();
            for (auto& row : rows) {
                json rj;
                rj["p"] = row.p;
                rj["q"] = row.q;
                if (!row.ok) {
                    rj["error"] = row.err;
                } else {
                    rj["writhe"] = row.rep.e;
                    rj["rolfsen"] = row.rep.rolf;
                    rj["symmetry_class"] = mk::to_string(row.rep.sym);
                    rj["identification"] = mk::identification_json(row.rep.ident);
                }
                j["rows"].push_back(rj);
            }
            j["periodicity"] = period_notes;
            std::cout << j.dump(2) << "\n";
            break;
        }
        case Format::csv: {
            std::cout << "p,q,writhe,rolfsen,symmetry,candidates\n";
            for (auto& row : rows) {
                std::cout << row.p << "," << row.q << ",";
                if (!row.ok) {
                    std::cout << ",,," << "error: " << row.err << "\n";
                    continue;
                }
                std::cout << row.rep.e << "," << mk::rolfsen_str(row.rep.rolf) << ","
                          << mk::to_string(row.rep.sym) << ",";
                for (std::size_t i = 0; i < row.rep.ident.candidates.size(); ++i)
                    std::cout << (i ? " | " : "") << row.rep.ident.candidates[i].name;
                std::cout << "\n";
            }
            break;
        }
        case Format::text: {
            for (auto& row : rows) {
                std::printf("p=%-3d q=%-3d ", row.p, row.q);
                if (!row.ok) {
                    std::cout << "skipped: " << row.err << "\n";
                    continue;
                }
                std::cout << "e=" << row.rep.e << "  " << mk::rolfsen_str(row.rep.rolf) << "  "
                          << mk::to_string(row.rep.sym) << "  ";
                if (row.rep.ident.candidates.empty())
                    std::cout << "(unidentified)";
                else
                    for (std::size_t i = 0; i < row.rep.ident.candidates.size(); ++i)
                        std::cout << (i ? " | " : "") << row.rep.ident.candidates[i].name;
                std::cout << "\n";
            }
            for (auto& s : period_notes) std::cout << "periodicity: " << s << "\n";
            break;
        }
    }
    return 0;
}

int cmd_phases(const Common& c) {
    mk::PhaseSet ps = mk::critical_phases(c.N, c.p, c.q);
    switch (c.fmt()) {
        case Format::json_fmt: {
            json j;
            j["N"] = c.N;
            j["p"] = c.p;
            j["q"] = c.q;
            j["critical_phases"] = json::array();
            for (auto& r : ps.phases) j["critical_phases"].push_back(r.str());
            j["canonical_phase"] = mk::canonical_phase(c.N, c.p, c.q).str();
            std::cout << j.dump(2) << "\n";
            break;
        }
        case Format::csv: {
            std::cout << "phase\n";
            for (auto& r : ps.phases) std::cout << r.str() << "\n";
            break;
        }
        case Format::text: {
            std::cout << "critical phases of (" << c.N << "," << c.p << "," << c.q << "), "
                      << ps.phases.size() << " total:\n";
            for (auto& r : ps.phases) std::cout << "  " << r << "\n";
            std::cout << "canonical (non-critical) phase: " << mk::canonical_phase(c.N, c.p, c.q)
                      << "\n";
            break;
        }
    }
    return 0;
}

int cmd_verify(const Common& c) {
    mk::KnotParams kp = c.params();
    mk::BraidBuild b = mk::build_braid(kp);
    mk::CurveSampler sampler{kp, 0};
    mk::CrossingReport rep = mk::certify_schedule(b.crossings, sampler);

    int closed_disagreements = 0;
    for (const mk::Crossing& cr : b.crossings) {
        mk::SignTerms st;
        int closed = 0;
        try {
            auto [s, terms] = mk::crossing_sign_closed(kp, cr);
            closed = s;
            st = terms;
        } catch (const mk::formula_mismatch_error&) {
            ++closed_disagreements;
            continue;
        }
        if (closed != cr.sign) ++closed_disagreements;
    }
    double minsep = mk::min_separation(sampler);
    bool ok = rep.clean() && closed_disagreements == 0 && minsep > 1e-9;

    if (c.fmt() == Format::json_fmt) {
        json j = mk::report_json(rep);
        j["closed_vs_direct_disagreements"] = closed_disagreements;
        j["min_separation"] = minsep;
        j["ok"] = ok;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "K(" << kp.N << "," << kp.p << "," << kp.q << ") phase " << kp.phase << "\n"
                  << "matched " << rep.matched << " of " << b.crossings.size()
                  << " crossings, max time error " << rep.max_time_error << "\n"
                  << "missing " << rep.missing.size() << ", extra " << rep.extra.size()
                  << ", numeric sign disagreements " << rep.sign_disagreements.size() << "\n"
                  << "closed-form vs direct sign disagreements " << closed_disagreements << "\n"
                  << "min strand separation " << minsep << "\n"
                  << (ok ? "OK" : "MISMATCH") << "\n";
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"braid words, exact schedules and knot invariants of the trigonometric "
                 "curves K(N,p,q,phase)"};
    app.require_subcommand(1);

    Common c;
    auto add_common = [&](CLI::App* sub, bool with_pq) {
        sub->add_option("N", c.N, "strand count")->required();
        if (with_pq) {
            sub->add_option("p", c.p, "first frequency")->required();
            sub->add_option("q", c.q, "second frequency")->required();
        }
        sub->add_option("--phase", c.phase_str, "exact phase a/b in turns (default: canonical)");
        sub->add_option("--format", c.format, "text|json|csv")->default_val("text");
        sub->add_option("--catalog", c.catalog_path, "extra catalog JSON merged over the default");
    };

    CLI::App* braid = app.add_subcommand("braid", "canonical braid word and crossing table");
    add_common(braid, true);
    braid->add_option("--svg", c.svg_path, "write the braid diagram as SVG");

    CLI::App* inv = app.add_subcommand("invariants", "Alexander, Jones, diagnostics, identification");
    add_common(inv, true);

    CLI::App* scan = app.add_subcommand("scan", "sweep p (and optionally q) at fixed N");
    std::string p_range, q_range;
    scan->add_option("N", c.N, "strand count")->required();
    scan->add_option("q", c.q, "second frequency (omit when --q is given)");
    scan->add_option("--p", p_range, "p range A..B")->required();
    scan->add_option("--q-range", q_range, "q range A..B (accepted as --q too)");
    scan->add_option("--format", c.format, "text|json|csv")->default_val("text");
    scan->add_option("--catalog", c.catalog_path, "extra catalog JSON merged over the default");

    CLI::App* phases = app.add_subcommand("phases", "critical phases as exact fractions");
    add_common(phases, true);

    CLI::App* verify = app.add_subcommand("verify", "certify schedule and signs against the numeric oracle");
    add_common(verify, true);

    // "--q" collides with scan's positional q inside the parser; accept the
    // documented spelling by rewriting it to the registered alias.
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (argc > 1 && std::string(argv[1]) == "scan" && a == "--q") a = "--q-range";
        args.push_back(std::move(a));
    }
    std::reverse(args.begin(), args.end());

    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(braid)) return cmd_braid(c);
        if (app.got_subcommand(inv)) return cmd_invariants(c);
        if (app.got_subcommand(scan)) {
            if (q_range.empty() && c.q == 0)
                throw mk::out_of_range_error("scan needs q or --q A..B");
            return cmd_scan(c, p_range, q_range);
        }
        if (app.got_subcommand(phases)) return cmd_phases(c);
        if (app.got_subcommand(verify)) return cmd_verify(c);
    } catch (const mk::non_coprime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const mk::out_of_range_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const mk::critical_phase_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const mk::schema_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const mk::error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
