// Command-line front end: one verification command per invocation.
//
// Exit status: 0 when every report is certified, 1 when any verification fails,
// 2 for usage or configuration errors.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include "hypermod/catalog.hpp"
#include "hypermod/odefit.hpp"
#include "hypermod/pi_lab.hpp"
#include "hypermod/qmodular.hpp"
#include "hypermod/suite.hpp"
#include "hypermod/verifier.hpp"

using namespace hypermod;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

const std::map<std::string, ZagierParams> kZsCases = {
    {"5", {11, 3, 1}}, {"a", {-17, -6, -72}}, {"b", {10, 3, -9}}, {"c", {7, 2, 8}}};

std::string status(bool ok) { return ok ? "certified" : "FAILED"; }

std::string head_string(const std::vector<Rational>& h, size_t n = 8) {
    std::string s;
    for (size_t i = 0; i < h.size() && i < n; ++i)
        s += (i ? " " : "") + (h[i].get_den() == 1 ? to_string(h[i].get_num()) : to_string(h[i]));
    return s;
}

std::string mismatch_string(const std::optional<Mismatch>& m) {
    if (!m) return "";
    return "first mismatch " + m->a + "/" + m->b + " at power " + std::to_string(m->power) + ": " +
           to_string(m->ca) + " vs " + to_string(m->cb);
}

void row(std::ostream& os, const std::string& name, const std::string& st, const std::string& info) {
    os << std::left << std::setw(60) << name << " " << std::setw(10) << st << " " << info << "\n";
}

void print(std::ostream& os, const GroupReport& r) {
    row(os, "group " + r.group, status(r.certified),
        "order " + std::to_string(r.order) + ", " + std::to_string(r.pairwise_count) + " pairs");
    os << "  head: " << head_string(r.head) << "\n";
    if (r.first_mismatch) os << "  " << mismatch_string(r.first_mismatch) << "\n";
    for (const auto& p : r.printed)
        os << "  " << p.entry << " as displayed: "
           << (p.matches ? "agrees" : "differs at power " + std::to_string(p.first_difference)) << "\n";
    if (!r.note.empty()) os << "  note: " << r.note << "\n";
}

void print(std::ostream& os, const CheckReport& r) {
    row(os, r.name, status(r.certified), "order " + std::to_string(r.order));
    os << "  head: " << head_string(r.head) << "\n";
    if (r.first_mismatch) os << "  " << mismatch_string(r.first_mismatch) << "\n";
    if (!r.note.empty()) os << "  note: " << r.note << "\n";
}

void print(std::ostream& os, const QReport& r) {
    row(os, r.id, status(r.certified), "order " + std::to_string(r.order));
    auto sub = [&](const QSubCheck& c, const std::string& prefix) {
        os << "  " << std::left << std::setw(42) << (prefix + c.name) << " " << status(c.certified);
        if (c.mismatch) os << "  " << mismatch_string(c.mismatch);
        if (!c.note.empty()) os << "  (" << c.note << ")";
        os << "\n";
    };
    for (const auto& c : r.checks) sub(c, "");
    if (r.as_printed) sub(*r.as_printed, "");
}

void print(std::ostream& os, const PiReport& r) {
    row(os, r.id, status(r.certified()), std::to_string(r.digits) + " digits");
    for (const auto& c : r.exact_checks)
        os << "  exact  " << std::left << std::setw(56) << c.name << " " << (c.pass ? "pass" : "FAIL")
           << (c.detail.empty() ? "" : "  " + c.detail) << "\n";
    for (const auto& c : r.ball_checks)
        os << "  ball   " << std::left << std::setw(56) << c.name << " " << (c.pass ? "pass" : "FAIL") << "  width "
           << sci(c.width) << (c.detail.empty() ? "" : "  " + c.detail) << "\n";
    for (const auto& n : r.notes) os << "  note: " << n << "\n";
}

void print(std::ostream& os, const CriterionResult& r) {
    char t[32];
    std::snprintf(t, sizeof t, "%.2fs", r.seconds);
    row(os, std::to_string(r.number) + ". " + r.title, status(r.pass), t);
    for (const auto& f : r.failures) os << "  " << f << "\n";
}

struct Output {
    bool json = false;
    std::ostringstream text;
    Json doc;

    template <class R>
    void add(const R& r) {
        if (json) doc = to_json(r);
        else print(text, r);
    }
};

const TheoremGroup& need_group(const Catalog& cat, const std::string& id) {
    const TheoremGroup* g = cat.find_group(id);
    if (!g) throw UsageError("unknown group " + id);
    return *g;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact and ball-arithmetic certification of hypergeometric and modular identities"};
    app.require_subcommand(1, 1);
    app.fallthrough();

    bool json = false;
    int jobs = 0;
    std::string catalog_path, output_path;
    app.add_flag("--json", json, "emit JSON instead of a text table");
    app.add_option("--jobs", jobs, "worker threads (default: logical cores)")->check(CLI::NonNegativeNumber);
    app.add_option("--catalog", catalog_path, "catalog file (default: HYPERMOD_CATALOG or the shipped data)");
    app.add_option("-o,--output", output_path, "write the report here instead of standard output");

    std::string group, entry, ident, case_id;
    long terms = 0, digits = 0, max_order = 2, max_degree = 6;
    int level = 0;

    auto* verify = app.add_subcommand("verify", "certify that every entry of a group expands to one series");
    verify->add_option("--group", group, "T1, T2, T3, EX1 or EX8.1-EX8.7")->required();
    verify->add_option("--terms", terms, "truncation order (default: the group's)")->check(CLI::PositiveNumber);

    auto* clausen = app.add_subcommand("clausen", "certify f_s^2 = F_s(x(1 - C x))");
    clausen->add_option("--level", level, "1..4")->required()->check(CLI::Range(1, 4));
    clausen->add_option("--terms", terms, "truncation order (default 60)")->check(CLI::PositiveNumber);

    auto* zs = app.add_subcommand("zs", "certify the level-5/6 quadratic relation");
    zs->add_option("--case", case_id, "a, b, c or 5")->required()->check(CLI::IsMember({"a", "b", "c", "5"}));
    zs->add_option("--terms", terms, "truncation order (default 60)")->check(CLI::PositiveNumber);

    auto* fit = app.add_subcommand("fit-ode", "guess the minimal linear ODE of an entry or a whole group");
    auto* fe = fit->add_option("--entry", entry, "entry id, e.g. T2.01");
    auto* fg = fit->add_option("--group", group, "fit the first entry and check the operator on all entries");
    fe->excludes(fg);
    fit->add_option("--max-order", max_order, "largest order searched (default 2)")->check(CLI::NonNegativeNumber);
    fit->add_option("--max-degree", max_degree, "largest degree searched (default 6)")->check(CLI::NonNegativeNumber);
    fit->add_option("--terms", terms, "coefficients used (default 50, or the group's order)")->check(CLI::PositiveNumber);

    std::vector<std::string> qids;
    for (const auto& q : q_identities()) qids.push_back(q.id);
    auto* qcheck = app.add_subcommand("qcheck", "certify a q-expansion identity");
    qcheck->add_option("--id", ident, "identity id (see list)")->required()->check(CLI::IsMember(qids));
    qcheck->add_option("--terms", terms, "q-terms (default: the identity's)")->check(CLI::PositiveNumber);

    auto* pi = app.add_subcommand("pi", "evaluate a 1/pi series and compare with the arctangent reference");
    pi->add_option("--case", case_id, "EQ1.1, EQ9.1, EQ9.2, EQ9.3, EQ9.5 or EQ9.6")->required();
    pi->add_option("--digits", digits, "digit target (default: the case's)")->check(CLI::PositiveNumber);

    auto* equiv = app.add_subcommand("equiv", "replay an equivalence case at its point");
    equiv->add_option("--case", case_id, "THM9.1, THM9.3, THM9.4, THM9.4b, THM9.5, THM9.6 or THM9.7")->required();
    equiv->add_option("--digits", digits, "digit target (default 50)")->check(CLI::PositiveNumber);

    auto* list = app.add_subcommand("list", "enumerate groups, entries and case ids");
    auto* all = app.add_subcommand("all", "run the full certification suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n\n" << app.help();
        return 2;
    }

    Output out;
    out.json = json;
    bool ok = true;
    try {
        std::optional<Catalog> loaded;
        if (!catalog_path.empty()) loaded = load_catalog_file(catalog_path);
        const Catalog& cat = loaded ? *loaded : default_catalog();

        if (*verify) {
            const TheoremGroup& g = need_group(cat, group);
            GroupReport r = verify_group(g, terms ? terms : g.default_order, jobs);
            ok = r.certified;
            out.add(r);
        } else if (*clausen) {
            CheckReport r = verify_clausen(level, terms ? terms : 60);
            ok = r.certified;
            out.add(r);
        } else if (*zs) {
            CheckReport r = verify_zs(kZsCases.at(case_id), terms ? terms : 60);
            ok = r.certified;
            out.add(r);
        } else if (*fit) {
            if (entry.empty() && group.empty()) throw UsageError("fit-ode needs --entry or --group");
            Json j;
            std::string var = "p";
            if (!entry.empty()) {
                const IdentityEntry* e = cat.find_entry(entry);
                if (!e) throw UsageError("unknown entry " + entry);
                for (const auto& g : cat.groups)
                    for (const auto& x : g.entries)
                        if (x.id == entry) var = g.variable;
                long n = terms ? terms : 50;
                auto ode = fit_linear_ode(expand_entry(*e, var, n), max_order, max_degree);
                ok = ode.has_value();
                j = {{"entry", entry}, {"terms", n}, {"status", ok ? "found" : "none"}};
                if (ode) {
                    j["ode"] = to_json(*ode);
                    j["text"] = to_string(*ode, var);
                    j["recurrence"] = to_json(ode_to_recurrence(*ode));
                }
            } else {
                const TheoremGroup& g = need_group(cat, group);
                var = g.variable;
                long n = terms ? terms : g.default_order;
                auto cert = common_ode_certificate(g, max_order, max_degree, n, jobs);
                ok = cert && cert->certified;
                j = {{"group", group}, {"terms", n}, {"status", ok ? "certified" : "failed"}};
                if (cert) {
                    j["ode"] = to_json(cert->ode);
                    j["text"] = to_string(cert->ode, var);
                    j["recurrence"] = to_json(ode_to_recurrence(cert->ode));
                    j["failing"] = cert->failing;
                }
            }
            if (json) {
                out.doc = j;
            } else {
                row(out.text, "fit-ode " + (entry.empty() ? group : entry),
                    ok ? (entry.empty() ? "certified" : "found") : "FAILED", std::to_string(j["terms"].get<long>()) + " terms");
                if (j.contains("text")) {
                    out.text << "  " << j["text"].get<std::string>() << "\n";
                    out.text << "  " << j["recurrence"]["text"].get<std::string>() << "\n";
                }
            }
        } else if (*qcheck) {
            long n = terms;
            for (const auto& q : q_identities())
                if (q.id == ident && !n) n = q.default_order;
            QReport r = verify_q_identity(ident, n, cat);
            ok = r.certified;
            out.add(r);
        } else if (*pi) {
            const PiSeriesCase* c = cat.find_pi(case_id);
            if (!c) throw UsageError("unknown series case " + case_id);
            PiReport r = verify_pi_formula(*c, digits ? digits : c->digits);
            ok = r.certified();
            out.add(r);
        } else if (*equiv) {
            const EquivalenceCase* c = cat.find_equivalence(case_id);
            if (!c) throw UsageError("unknown equivalence case " + case_id);
            PiReport r = verify_equivalence_case(*c, digits ? digits : 50, cat);
            ok = r.certified();
            out.add(r);
        } else if (*list) {
            Json groups = Json::array(), pis = Json::array(), eqs = Json::array(), qs = Json::array();
            for (const auto& g : cat.groups) {
                Json ids = Json::array();
                for (const auto& e : g.entries) ids.push_back(e.id);
                groups.push_back({{"id", g.id}, {"title", g.title}, {"variable", g.variable},
                                  {"default_order", g.default_order}, {"entries", ids}});
            }
            for (const auto& c : cat.pi_series) pis.push_back({{"id", c.id}, {"digits", c.digits}, {"boundary", c.boundary}});
            for (const auto& c : cat.equivalences) eqs.push_back(c.id);
            for (const auto& q : q_identities())
                qs.push_back({{"id", q.id}, {"description", q.description}, {"default_order", q.default_order}});
            Json j{{"groups", groups}, {"pi_series", pis}, {"equivalences", eqs}, {"q_identities", qs},
                   {"zs_cases", {"5", "a", "b", "c"}}};
            if (json) {
                out.doc = j;
            } else {
                for (const auto& g : j["groups"]) {
                    std::string ids;
                    for (const auto& e : g["entries"]) ids += " " + e.get<std::string>();
                    out.text << std::left << std::setw(7) << g["id"].get<std::string>() << std::setw(4)
                             << g["entries"].size() << ids << "\n";
                }
                out.text << "pi series:";
                for (const auto& c : cat.pi_series) out.text << " " << c.id;
                out.text << "\nequivalences:";
                for (const auto& c : cat.equivalences) out.text << " " << c.id;
                out.text << "\nq identities:";
                for (const auto& q : q_identities()) out.text << " " << q.id;
                out.text << "\nzs cases: 5 a b c\n";
            }
        } else if (*all) {
            auto results = run_acceptance(jobs, cat);
            Json arr = Json::array();
            for (const auto& r : results) {
                ok = ok && r.pass;
                if (json) arr.push_back(to_json(r));
                else print(out.text, r);
            }
            if (json) out.doc = {{"status", ok ? "certified" : "failed"}, {"criteria", arr}};
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n\n" << app.help();
        return 2;
    } catch (const CatalogError& e) {
        std::cerr << "catalog error: " << e.what() << "\n";
        return 2;
    } catch (const FitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    std::string text = json ? out.doc.dump(2) + "\n" : out.text.str();
    if (output_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(output_path);
        if (!f) {
            std::cerr << "cannot write " << output_path << "\n";
            return 2;
        }
        f << text;
    }
    return ok ? 0 : 1;
}
