#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <map>
#include <ostream>
#include <sstream>

#include "sqcheck/emodule_io.hpp"
#include "sqcheck/errors.hpp"
#include "sqcheck/margolis.hpp"
#include "sqcheck/parallel.hpp"
#include "sqcheck/spaces.hpp"
#include "sqcheck/steenrod.hpp"
#include "sqcheck/verify.hpp"

namespace sqcheck::cli {

namespace {

using nlohmann::ordered_json;

struct CliConfig {
    std::string space = "bso";
    int n = 0;
    int max_deg = 40;
    std::string format = "text";
    unsigned threads = 0;

    // action
    std::string op;
    int k = -1;
    std::string element;

    // verify / report
    std::string target;
    bool reduced = false;
    bool seed_fault = false;
};

// Usage errors detected after flag parsing.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

RingSpec ring_of(const CliConfig& c)
{
    const auto family = c.space == "bo" ? Family::BO : Family::BSO;
    return RingSpec::validated({family, c.n, c.max_deg});
}

ordered_json series_json(const PoincareSeries& s) { return s.coeffs(); }

ordered_json window_json(const Window& w) { return ordered_json::array({w.lo, w.hi}); }

ordered_json base_document(const std::string& command, const CliConfig& c)
{
    ordered_json j;
    j["command"] = command;
    j["space"] = c.space;
    j["n"] = c.n;
    j["max_degree"] = c.max_deg;
    j["window"] = ordered_json::array({0, c.max_deg});
    j["verdict"] = "pass";
    j["witness"] = nullptr;
    j["series"] = {{"alpha", ordered_json::array()}, {"beta", ordered_json::array()}, {"thom", ordered_json::array()}};
    j["checks"] = ordered_json::object();
    return j;
}

void put_verdict(ordered_json& j, const Verdict& v)
{
    j["window"] = window_json(v.window);
    j["verdict"] = v.pass ? "pass" : "fail";
    if (v.witness) {
        j["witness"] = {{"stage", v.witness->stage},
                        {"degree", v.witness->degree},
                        {"element", v.witness->element},
                        {"detail", v.witness->detail}};
    }
    for (const auto& [name, ok] : v.checks) {
        j["checks"][name] = ok;
    }
}

void print_verdict_text(std::ostream& out, const std::string& title, const Verdict& v)
{
    out << title << ": " << (v.pass ? "PASS" : "FAIL") << '\n';
    out << "window: [" << v.window.lo << ", " << v.window.hi << "]\n";
    for (const auto& [name, ok] : v.checks) {
        out << "  " << name << ": " << (ok ? "pass" : "fail") << '\n';
    }
    if (v.witness) {
        out << "witness: stage=" << v.witness->stage << " degree=" << v.witness->degree;
        if (!v.witness->element.empty()) {
            out << " element=" << v.witness->element;
        }
        out << " detail=" << v.witness->detail << '\n';
    }
}

void emit(std::ostream& out, const ordered_json& j) { out << j.dump(2) << '\n'; }

// ---------------------------------------------------------------------------

int cmd_action(const CliConfig& c, std::ostream& out)
{
    const auto spec = ring_of(c);
    const auto p = parse_poly(c.element, spec);
    int shift = 0;
    if (c.op == "sq") {
        if (c.k < 0) {
            throw UsageError("--op sq needs --k >= 0");
        }
        shift = c.k;
    } else {
        shift = c.op == "q0" ? 1 : 3;
    }
    if (!p.is_zero()) {
        if (!p.is_homogeneous()) {
            throw UsageError("element must be homogeneous");
        }
        if (*p.degree() + shift > spec.max_degree) {
            throw RangeError("image degree " + std::to_string(*p.degree() + shift) + " exceeds --max-deg " +
                             std::to_string(spec.max_degree));
        }
    }
    SteenrodContext ctx(spec);
    PolynomialF2 image;
    if (c.op == "sq") {
        image = sq_on_poly(c.k, p, ctx);
    } else {
        image = q_milnor(c.op == "q0" ? 0 : 1, p, ctx);
    }
    if (c.format == "json") {
        auto j = base_document("action", c);
        j["checks"]["computed"] = true;
        j["result"] = to_string(image);
        emit(out, j);
    } else {
        out << to_string(image) << '\n';
    }
    return kPass;
}

int cmd_verify(const CliConfig& c, std::ostream& out)
{
    Verdict v;
    std::optional<PoincareSeries> alpha, beta, thom;
    std::string title = c.target + " n=" + std::to_string(c.n) + " max_degree=" + std::to_string(c.max_deg);
    if (c.seed_fault && c.target != "lemma1") {
        throw UsageError("--seed-fault applies to lemma1 only");
    }
    if (c.target == "lemma1" && c.seed_fault) {
        // Q1(w_{2n}) = w3 w_{2n} + w_{2n+3} with the foreign class forced nonzero
        if (c.n < 2 || c.max_deg < 2 * c.n) {
            throw UsageError("lemma1 needs n >= 2 and --max-deg >= 2n");
        }
        const auto spec = RingSpec::bso(2 * c.n, c.max_deg);
        SteenrodContext ctx(spec);
        auto bad = ctx.q_generator(1, 2 * c.n) + PolynomialF2(Monomial::generator(2 * c.n + 3));
        v = verify_lemma1(SteenrodContext(spec, {{1, 2 * c.n, std::move(bad)}}));
    } else if (c.target == "lemma1") {
        v = verify_lemma1(c.n, c.max_deg);
    } else if (c.target == "lemma2") {
        v = verify_lemma2(c.n, c.max_deg);
    } else if (c.target == "thm3") {
        auto r = verify_theorem3(c.n, c.max_deg);
        v = r.verdict;
        alpha = r.alpha;
        beta = r.beta;
    } else {
        if (c.n < 2) {
            throw UsageError("thm1 requires n >= 2 (the splitting of BSO(2n) is stated for every n >= 2)");
        }
        auto r = splitting_report(c.n, c.max_deg);
        v = r.verdict;
        alpha = r.alpha;
        beta = r.beta;
        thom = r.thom_series;
    }

    if (c.format == "json") {
        auto j = base_document("verify " + c.target, c);
        put_verdict(j, v);
        if (alpha) {
            j["series"]["alpha"] = series_json(*alpha);
            j["series"]["beta"] = series_json(*beta);
        }
        if (thom) {
            j["series"]["thom"] = series_json(*thom);
        }
        emit(out, j);
    } else {
        print_verdict_text(out, title, v);
        if (alpha) {
            out << "alpha: " << alpha->to_string() << '\n';
            out << "beta: " << beta->to_string() << '\n';
        }
        if (thom) {
            out << "thom: " << thom->to_string() << '\n';
        }
    }
    return v.pass ? kPass : kFail;
}

EModule module_of(const CliConfig& c)
{
    const auto spec = ring_of(c);
    return ring_module(SteenrodContext(spec));
}

int cmd_report(const CliConfig& c, std::ostream& out)
{
    const bool json = c.format == "json";
    auto j = base_document("report " + c.target, c);

    if (c.target == "poincare") {
        const auto s = poincare(ring_of(c), c.reduced);
        if (json) {
            j["checks"]["reduced"] = c.reduced;
            j["series"]["poincare"] = series_json(s);
            emit(out, j);
        } else {
            out << s.to_string() << '\n';
        }
        return kPass;
    }

    if (c.target == "generators") {
        const auto m = module_of(c);
        const auto g = min_generators(m);
        if (json) {
            j["series"]["generators"] = series_json(g);
            emit(out, j);
        } else {
            out << g.to_string() << '\n';
        }
        return kPass;
    }

    if (c.target == "margolis") {
        const auto m = module_of(c);
        const auto h0 = margolis_homology(m, Primitive::Q0);
        const auto h1 = margolis_homology(m, Primitive::Q1);
        const auto free = is_free_in_window(m);
        if (json) {
            j["window"] = window_json(free.window);
            j["series"]["q0_homology"] = series_json(h0.homology);
            j["series"]["q1_homology"] = series_json(h1.homology);
            j["windows"] = {{"q0", window_json(h0.window)}, {"q1", window_json(h1.window)}};
            j["checks"]["q0_homology_zero"] = h0.homology.is_zero();
            j["checks"]["q1_homology_zero"] = h1.homology.is_zero();
            j["checks"]["free_in_window"] = free.free;
            emit(out, j);
        } else {
            out << "Q0 homology: " << h0.homology.to_string() << " (window [" << h0.window.lo << ", " << h0.window.hi
                << "])\n";
            out << "Q1 homology: " << h1.homology.to_string() << " (window [" << h1.window.lo << ", " << h1.window.hi
                << "])\n";
            out << "free on [" << free.window.lo << ", " << free.window.hi << "]: " << (free.free ? "yes" : "no");
            if (free.witness) {
                out << " (" << primitive_name(free.witness->which) << " homology at degree " << free.witness->degree
                    << ")";
            }
            out << '\n';
        }
        return kPass;
    }

    // splitting
    if (c.n < 2) {
        throw UsageError("splitting requires n >= 2 (the splitting of BSO(2n) is stated for every n >= 2)");
    }
    const auto r = splitting_report(c.n, c.max_deg);
    if (json) {
        put_verdict(j, r.verdict);
        j["series"]["alpha"] = series_json(r.alpha);
        j["series"]["beta"] = series_json(r.beta);
        j["series"]["thom"] = series_json(r.thom_series);
        ordered_json beta_degrees = ordered_json::array();
        for (int d = 0; d <= r.max_degree; ++d) {
            for (std::int64_t i = 0; i < r.beta[d]; ++i) {
                beta_degrees.push_back(d);
            }
        }
        j["beta_degrees"] = std::move(beta_degrees);
        emit(out, j);
    } else {
        print_verdict_text(out, "splitting n=" + std::to_string(c.n) + " max_degree=" + std::to_string(c.max_deg),
                           r.verdict);
        out << "alpha: " << r.alpha.to_string() << '\n';
        out << "beta: " << r.beta.to_string() << '\n';
        out << "thom: " << r.thom_series.to_string() << '\n';
    }
    return r.verdict.pass ? kPass : kFail;
}

int cmd_dump(const CliConfig& c, std::ostream& out)
{
    out << dump_module_json(module_of(c), 2) << '\n';
    return kPass;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CliConfig c;
    CLI::App app{"Steenrod operations on Stiefel-Whitney classes and E-module checks for BSO(n), BO(n)", "sqcheck"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--threads", c.threads, "Worker threads for degreewise loops (0 = all cores)");

    auto add_common = [&](CLI::App* sub, bool with_space) {
        if (with_space) {
            sub->add_option("--space", c.space, "Ring family")->check(CLI::IsMember({"bso", "bo"}));
        }
        sub->add_option("--n", c.n, "Rank parameter")->required();
        sub->add_option("--max-deg", c.max_deg, "Truncation degree")->check(CLI::Range(1, 1000));
        sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    };

    auto* action = app.add_subcommand("action", "Apply Sq^k, Q0 or Q1 to an element");
    add_common(action, true);
    action->add_option("--op", c.op, "Operation")->required()->check(CLI::IsMember({"sq", "q0", "q1"}));
    action->add_option("--k", c.k, "Square index for --op sq");
    action->add_option("--element", c.element, "Element, e.g. \"w2^2*w3 + w5\"")->required();

    auto* verify = app.add_subcommand("verify", "Run a structural verification");
    verify->add_option("target", c.target, "lemma1 | lemma2 | thm3 | thm1")
        ->required()
        ->check(CLI::IsMember({"lemma1", "lemma2", "thm3", "thm1"}));
    add_common(verify, false);
    verify->add_flag("--seed-fault", c.seed_fault, "lemma1 only: corrupt Q1(w_2n) to exercise the failure path");

    auto* report = app.add_subcommand("report", "Print module data");
    report->add_option("kind", c.target, "margolis | generators | poincare | splitting")
        ->required()
        ->check(CLI::IsMember({"margolis", "generators", "poincare", "splitting"}));
    add_common(report, true);
    report->add_flag("--reduced", c.reduced, "Reduced Poincare series");

    auto* dump = app.add_subcommand("dump", "Dump a module as JSON");
    add_common(dump, true);

    std::vector<const char*> argv{"sqcheck"};
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kPass;
    } catch (const CLI::ParseError& e) {
        err << "sqcheck: " << e.what() << '\n';
        return kUsage;
    }

    try {
        set_thread_count(c.threads);
        if (action->parsed()) {
            return cmd_action(c, out);
        }
        if (verify->parsed()) {
            return cmd_verify(c, out);
        }
        if (report->parsed()) {
            return cmd_report(c, out);
        }
        return cmd_dump(c, out);
    } catch (const UsageError& e) {
        err << "sqcheck: " << e.what() << '\n';
        return kUsage;
    } catch (const ParseError& e) {
        err << "sqcheck: parse error: " << e.what() << '\n';
        return kUsage;
    } catch (const DomainError& e) {
        err << "sqcheck: " << e.what() << '\n';
        return kUsage;
    } catch (const RangeError& e) {
        err << "sqcheck: " << e.what() << '\n';
        return kUsage;
    } catch (const WindowError& e) {
        err << "sqcheck: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "sqcheck: verification error: " << e.what() << '\n';
        return kFail;
    }
}

} // namespace sqcheck::cli
