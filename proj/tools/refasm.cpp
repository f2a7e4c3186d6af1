// refasm: command-line front end. Every report is one JSON document on
// stdout. Exit status: 0 all verdicts pass, 1 some verdict fails, 2 usage.

#include "refasm/asmcount.hpp"
#include "refasm/errors.hpp"
#include "refasm/identity.hpp"
#include "refasm/orthopoly.hpp"
#include "refasm/qcalc.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace {

using json = nlohmann::json;
using refasm::Integer;
using refasm::QPoly;
using refasm::QRatFun;
using refasm::Rational;
namespace asmc = refasm::asmcount;
namespace id = refasm::identity;

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::optional<int> n;
    std::optional<int> n_max;
    std::optional<int> r;
    std::vector<std::string> x;
    std::optional<std::string> s;
    int trunc = 60;
    std::string tail_max = "1/1000000000000000000000000000000";
    bool symbolic = false;
    bool numeric = false;
    int json_indent = 2;
    bool timings = false;
    bool refined = false;
    bool list = false;
    std::optional<int> limit;
    std::optional<int> degree;
    int order = 2;
};

using Task = std::function<json()>;

json verdict_json(const id::Verdict& v)
{
    json d = json::object();
    for (const auto& [k, val] : v.details) {
        d[k] = val;
    }
    return {{"name", v.name}, {"pass", v.pass}, {"details", d}};
}

json failure(const std::string& name, const std::exception& e)
{
    return {{"name", name}, {"pass", false}, {"details", {{"error", e.what()}}}};
}

template <class Seq>
json strings(const Seq& seq)
{
    json a = json::array();
    for (const auto& v : seq) {
        a.push_back(v.get_str());
    }
    return a;
}

unsigned worker_count()
{
    const char* env = std::getenv("REFASM_WORKERS");
    if (env == nullptr || *env == '\0') {
        return std::max(1u, std::thread::hardware_concurrency());
    }
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 1 || v > 1024) {
        throw UsageError(std::string("REFASM_WORKERS must be an integer in [1, 1024], got '") + env + "'");
    }
    return static_cast<unsigned>(v);
}

// Results land at their task index, so the report does not depend on
// completion order.
std::vector<json> run_tasks(const std::vector<Task>& tasks, unsigned workers, bool timings)
{
    std::vector<json> out(tasks.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) {
                return;
            }
            const auto t0 = std::chrono::steady_clock::now();
            json v;
            try {
                v = tasks[i]();
            } catch (const std::exception& e) {
                v = failure("task", e);
            }
            const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0);
            v["elapsedMs"] = timings ? ms.count() : 0;
            out[i] = std::move(v);
        }
    };
    const unsigned extra = std::min<std::size_t>(workers, tasks.size()) > 0
                               ? static_cast<unsigned>(std::min<std::size_t>(workers, tasks.size())) - 1
                               : 0;
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < extra; ++w) {
        pool.emplace_back(work);
    }
    work();
    return out;
}

Rational parse_rational(const std::string& text, const char* flag)
{
    try {
        return Rational::parse(text);
    } catch (const refasm::Error& e) {
        throw UsageError(std::string(flag) + ": " + e.what());
    }
}

struct Range {
    int lo;
    int hi;
};

Range index_range(const Options& o, int floor, int default_hi)
{
    if (o.n && o.n_max) {
        throw UsageError("--n and --n-max are mutually exclusive");
    }
    Range r{floor, default_hi};
    if (o.n) {
        r = {*o.n, *o.n};
    } else if (o.n_max) {
        r.hi = *o.n_max;
    }
    if (r.lo < floor || r.hi < floor) {
        throw UsageError("index must be >= " + std::to_string(floor));
    }
    return r;
}

enum class Mode { Symbolic, Numeric };

Mode mode_for(const Options& o, int n)
{
    if (o.symbolic && o.numeric) {
        throw UsageError("--symbolic and --numeric are mutually exclusive");
    }
    if (o.symbolic) {
        return Mode::Symbolic;
    }
    if (o.numeric || o.s) {
        return Mode::Numeric;
    }
    return n <= 8 ? Mode::Symbolic : Mode::Numeric;
}

Rational numeric_s(const Options& o)
{
    return o.s ? parse_rational(*o.s, "--s") : Rational(1, 2);
}

// ---- asm -------------------------------------------------------------------

json asm_count_verdict(int n, int limit, bool refined, std::optional<int> r)
{
    asmc::RefinedCount rc = asmc::count_refined(n, limit);
    Integer a = asmc::closed_form_A(n);
    json d;
    d["n"] = std::to_string(n);
    d["total"] = rc.total.get_str();
    d["closedFormTotal"] = a.get_str();
    bool pass = rc.total == a;
    if (refined || r) {
        std::vector<Integer> closed;
        for (int k = 1; k <= n; ++k) {
            closed.push_back(asmc::closed_form_A_refined(n, k));
        }
        const bool palindromic = std::equal(rc.by_position.begin(), rc.by_position.end(), rc.by_position.rbegin());
        if (r) {
            const auto i = static_cast<std::size_t>(*r - 1);
            d["r"] = std::to_string(*r);
            d["count"] = rc.by_position[i].get_str();
            d["closedForm"] = closed[i].get_str();
            pass = pass && rc.by_position[i] == closed[i];
        } else {
            d["byPosition"] = strings(rc.by_position);
            d["closedForm"] = strings(closed);
            pass = pass && rc.by_position == closed;
        }
        d["palindromic"] = palindromic ? "true" : "false";
        pass = pass && palindromic;
    }
    return {{"name", refined || r ? "asm-refined" : "asm-count"}, {"pass", pass}, {"details", d}};
}

std::string matrix_text(const asmc::AsmMatrix& m)
{
    std::string out = "[";
    for (int i = 0; i < m.order(); ++i) {
        out += i > 0 ? ",[" : "[";
        for (int j = 0; j < m.order(); ++j) {
            if (j > 0) {
                out += ",";
            }
            out += std::to_string(m.at(i, j));
        }
        out += "]";
    }
    return out + "]";
}

json asm_enumerate_verdict(int n, int limit, bool list)
{
    std::vector<asmc::AsmMatrix> all = asmc::enumerate_asm(n, limit);
    std::vector<Integer> hist(static_cast<std::size_t>(n), Integer(0));
    bool valid = true;
    bool roundtrip = true;
    bool mirror = true;
    json listing = json::array();
    for (const auto& m : all) {
        valid = valid && asmc::validate_asm(m.rows()).valid;
        asmc::MonotoneTriangle t = asmc::asm_to_monotone(m);
        roundtrip = roundtrip && asmc::monotone_to_asm(t) == m && t.top() == m.first_row_position();
        asmc::AsmMatrix rev = m.column_reversed();
        mirror = mirror && rev.column_reversed() == m && rev.first_row_position() == n + 1 - m.first_row_position();
        hist[static_cast<std::size_t>(m.first_row_position() - 1)] += 1;
        if (list) {
            listing.push_back(matrix_text(m));
        }
    }
    asmc::RefinedCount rc = asmc::count_refined(n);
    Integer a = asmc::closed_form_A(n);
    json d;
    d["n"] = std::to_string(n);
    d["count"] = std::to_string(all.size());
    d["closedFormTotal"] = a.get_str();
    d["histogram"] = strings(hist);
    d["refinedCount"] = strings(rc.by_position);
    d["allValid"] = valid ? "true" : "false";
    d["roundTrip"] = roundtrip ? "true" : "false";
    d["mirrorSymmetric"] = mirror ? "true" : "false";
    if (list) {
        d["matrices"] = listing;
    }
    const bool pass = Integer(static_cast<long>(all.size())) == a && hist == rc.by_position && valid && roundtrip && mirror;
    return {{"name", "asm-enumerate"}, {"pass", pass}, {"details", d}};
}

std::vector<Task> asm_tasks(const Options& o, bool enumerate)
{
    const int cap = o.limit.value_or(enumerate ? asmc::kDefaultEnumerationLimit : asmc::kDefaultCountLimit);
    Range range = index_range(o, 1, enumerate ? 6 : 12);
    if (range.hi > cap) {
        throw UsageError("order " + std::to_string(range.hi) + " exceeds the guard " + std::to_string(cap)
                         + " (raise it with --limit)");
    }
    if (o.r && (range.lo != range.hi || *o.r < 1 || *o.r > range.hi)) {
        throw UsageError("--r needs a single --n and 1 <= r <= n");
    }
    std::vector<Task> tasks;
    for (int n = range.lo; n <= range.hi; ++n) {
        if (enumerate) {
            tasks.emplace_back([n, cap, list = o.list] { return asm_enumerate_verdict(n, cap, list); });
        } else {
            tasks.emplace_back([n, cap, refined = o.refined, r = o.r] { return asm_count_verdict(n, cap, refined, r); });
        }
    }
    return tasks;
}

// ---- verify ----------------------------------------------------------------

std::vector<Rational> x_values(const Options& o, std::vector<std::string> defaults)
{
    const auto& src = o.x.empty() ? defaults : o.x;
    std::vector<Rational> out;
    for (const auto& t : src) {
        out.push_back(parse_rational(t, "--x"));
    }
    return out;
}

std::vector<Task> notyetdone_tasks(const Options& o)
{
    Range range = index_range(o, 0, 5);
    std::vector<Task> tasks;
    for (const Rational& X : x_values(o, {"2", "1/2", "-3", "5/7"})) {
        for (int n = range.lo; n <= range.hi; ++n) {
            tasks.emplace_back([n, X] { return verdict_json(id::verify_notyetdone(n, X)); });
        }
    }
    return tasks;
}

std::vector<Task> done_tasks(const Options& o)
{
    Range range = index_range(o, 0, 40);
    std::vector<Task> tasks;
    for (int n = range.lo; n <= range.hi; ++n) {
        tasks.emplace_back([n] { return verdict_json(id::verify_done(n)); });
    }
    return tasks;
}

std::vector<Task> prop_bottom_tasks(const Options& o)
{
    Range range = index_range(o, 0, 8);
    std::vector<Task> tasks;
    for (int n = range.lo; n <= range.hi; ++n) {
        if (mode_for(o, n) == Mode::Symbolic) {
            tasks.emplace_back([n] { return verdict_json(id::prop_bottom(n)); });
        } else {
            tasks.emplace_back([n, s = numeric_s(o)] { return verdict_json(id::prop_bottom_at(n, s)); });
        }
    }
    return tasks;
}

std::vector<Task> prop_top_tasks(const Options& o)
{
    Range range = index_range(o, 0, 6);
    if (o.trunc < 0) {
        throw UsageError("--trunc must be nonnegative");
    }
    if (o.x.size() > 1) {
        throw UsageError("prop-top takes a single --x");
    }
    const Rational s = numeric_s(o);
    const Rational X = o.x.empty() ? Rational(1, 3) : parse_rational(o.x.front(), "--x");
    const Rational tail_max = parse_rational(o.tail_max, "--tail-max");
    if (s <= Rational(0) || s >= Rational(1)) {
        throw UsageError("--s must lie in (0,1)");
    }
    if ((s * X).pow(3).abs() >= Rational(1)) {
        throw UsageError("the series diverges: |s^3 X^3| >= 1");
    }
    std::vector<Task> tasks;
    for (int n = range.lo; n <= range.hi; ++n) {
        tasks.emplace_back([n, s, X, K = o.trunc, tail_max] {
            json v = verdict_json(id::verify_prop_top(n, s, X, K));
            if (v["details"].contains("tailBound")) {
                const bool small = Rational::parse(v["details"]["tailBound"].get<std::string>()) < tail_max;
                v["details"]["tailMax"] = tail_max.to_string();
                v["pass"] = v["pass"].get<bool>() && small;
            }
            return v;
        });
    }
    return tasks;
}

std::vector<Task> hankel_tasks(const Options& o)
{
    Range range = index_range(o, 0, 8);
    std::vector<Task> tasks;
    for (int n = range.lo; n <= range.hi; ++n) {
        if (mode_for(o, n) == Mode::Symbolic) {
            tasks.emplace_back([n] { return verdict_json(id::hankel_vs_corollary(n)); });
        } else {
            tasks.emplace_back([n, s = numeric_s(o)] { return verdict_json(id::hankel_vs_corollary_at(n, s)); });
        }
    }
    return tasks;
}

// ---- qlegendre -------------------------------------------------------------

template <class F>
json coefficient_strings(const refasm::Poly<F>& p)
{
    json a = json::array();
    for (const auto& c : p.coefficients()) {
        a.push_back(c.to_string());
    }
    return a;
}

std::vector<Task> qlegendre_print_tasks(const Options& o)
{
    Range range = index_range(o, 0, 3);
    std::vector<Task> tasks;
    for (int n = range.lo; n <= range.hi; ++n) {
        const auto un = static_cast<std::size_t>(n);
        if (mode_for(o, n) == Mode::Symbolic) {
            tasks.emplace_back([un, n] {
                QRatFun s = QRatFun::variable();
                refasm::qcalc::QContext<QRatFun> ctx(s * s * s);
                auto p = refasm::orthopoly::q_legendre(ctx, un, s, QRatFun(1));
                json d = {{"n", std::to_string(n)}, {"mode", "symbolic"}, {"coefficients", coefficient_strings(p)}};
                return json{{"name", "qlegendre"}, {"pass", true}, {"details", d}};
            });
        } else {
            tasks.emplace_back([un, n, s = numeric_s(o)] {
                refasm::qcalc::QContext<Rational> ctx(s.pow(3));
                QPoly p = refasm::orthopoly::q_legendre(ctx, un, s, Rational(1));
                json d = {{"n", std::to_string(n)},
                          {"mode", "numeric"},
                          {"s", s.to_string()},
                          {"coefficients", coefficient_strings(p)}};
                return json{{"name", "qlegendre"}, {"pass", true}, {"details", d}};
            });
        }
    }
    return tasks;
}

std::vector<Task> ortho_tasks(const Options& o)
{
    Range range = index_range(o, 0, 8);
    std::vector<Task> tasks;
    for (int n = range.lo; n <= range.hi; ++n) {
        if (mode_for(o, n) == Mode::Symbolic) {
            tasks.emplace_back([n] { return verdict_json(id::legendre_orthogonality(n)); });
        } else {
            tasks.emplace_back([n, s = numeric_s(o)] { return verdict_json(id::legendre_orthogonality_at(n, s)); });
        }
    }
    return tasks;
}

// ---- fit-recurrence --------------------------------------------------------

json fit_verdict(int n_max, const Rational& X, int order, std::optional<int> degree)
{
    std::vector<Rational> lhs;
    std::vector<Rational> rhs;
    for (int n = 0; n <= n_max; ++n) {
        lhs.push_back(id::lhs_done(n).eval(X));
        rhs.push_back(id::rhs_done(n).eval(X));
    }
    const int lo = degree.value_or(0);
    const int hi = degree.value_or(6);
    json d = {{"X", X.to_string()}, {"nMax", std::to_string(n_max)}, {"order", std::to_string(order)}};
    for (int deg = lo; deg <= hi; ++deg) {
        std::optional<id::Recurrence> rec;
        try {
            rec = id::fit_recurrence(lhs, order, deg);
        } catch (const refasm::InsufficientData& e) {
            d["error"] = e.what();
            break;
        }
        if (!rec) {
            continue;
        }
        json coeffs = json::array();
        for (const auto& c : rec->coeffs) {
            coeffs.push_back(c.to_string("n"));
        }
        const bool on_lhs = rec->annihilates(lhs);
        const bool on_rhs = rec->annihilates(rhs);
        d["degree"] = std::to_string(deg);
        d["coefficients"] = coeffs;
        d["annihilatesLhs"] = on_lhs ? "true" : "false";
        d["annihilatesRhs"] = on_rhs ? "true" : "false";
        return {{"name", "fit-recurrence"}, {"pass", on_lhs && on_rhs}, {"details", d}};
    }
    d["found"] = "false";
    return {{"name", "fit-recurrence"}, {"pass", false}, {"details", d}};
}

std::vector<Task> fit_tasks(const Options& o)
{
    if (o.n) {
        throw UsageError("fit-recurrence takes --n-max, not --n");
    }
    Range range = index_range(o, 0, 40);
    if (o.order < 1 || (o.degree && *o.degree < 0)) {
        throw UsageError("--order must be >= 1 and --degree >= 0");
    }
    if (o.x.size() > 1) {
        throw UsageError("fit-recurrence takes a single --x");
    }
    const Rational X = o.x.empty() ? Rational(1, 5) : parse_rational(o.x.front(), "--x");
    return {[hi = range.hi, X, order = o.order, degree = o.degree] { return fit_verdict(hi, X, order, degree); }};
}

std::vector<Task> all_tasks(const Options& o)
{
    if (o.n || o.n_max || !o.x.empty() || o.s || o.r) {
        throw UsageError("verify all runs fixed default bounds and takes no index or point flags");
    }
    Options refined = o;
    refined.refined = true;
    std::vector<Task> tasks;
    auto append = [&tasks](std::vector<Task> more) {
        for (auto& t : more) {
            tasks.push_back(std::move(t));
        }
    };
    append(asm_tasks(refined, false));
    append(done_tasks(o));
    append(notyetdone_tasks(o));
    append(ortho_tasks(o));
    append(prop_bottom_tasks(o));
    append(prop_top_tasks(o));
    append(hankel_tasks(o));
    append(fit_tasks(o));
    return tasks;
}

json parameters_json(const Options& o)
{
    json p = json::object();
    if (o.n) {
        p["n"] = std::to_string(*o.n);
    }
    if (o.n_max) {
        p["nMax"] = std::to_string(*o.n_max);
    }
    if (o.r) {
        p["r"] = std::to_string(*o.r);
    }
    if (!o.x.empty()) {
        p["x"] = o.x;
    }
    if (o.s) {
        p["s"] = *o.s;
    }
    if (o.symbolic) {
        p["mode"] = "symbolic";
    } else if (o.numeric) {
        p["mode"] = "numeric";
    }
    if (o.limit) {
        p["limit"] = std::to_string(*o.limit);
    }
    if (o.degree) {
        p["degree"] = std::to_string(*o.degree);
    }
    return p;
}

void add_index_flags(CLI::App* cmd, Options& o)
{
    cmd->add_option("--n", o.n, "Single index");
    cmd->add_option("--n-max", o.n_max, "Largest index of a sweep");
}

void add_mode_flags(CLI::App* cmd, Options& o)
{
    cmd->add_flag("--symbolic", o.symbolic, "Work in Q(s)");
    cmd->add_flag("--numeric", o.numeric, "Work at a rational point s");
    cmd->add_option("--s", o.s, "Rational point s as p/q (numeric mode, default 1/2)");
}

} // namespace

int main(int argc, char** argv)
{
    Options o;
    CLI::App app{"Exact verifier for the refined alternating sign matrix identities"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--json-indent", o.json_indent, "Spaces of JSON indentation (-1 for one line)");
    app.add_flag("--timings", o.timings, "Report wall-clock milliseconds instead of 0");

    std::string command;
    std::function<std::vector<Task>()> build;
    auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help,
                    std::function<std::vector<Task>()> make) {
        CLI::App* cmd = parent->add_subcommand(name, help);
        const std::string full = parent == &app ? name : parent->get_name() + " " + name;
        cmd->callback([&command, &build, full, make] {
            command = full;
            build = make;
        });
        return cmd;
    };

    CLI::App* asm_cmd = app.add_subcommand("asm", "Alternating sign matrix counts");
    asm_cmd->require_subcommand(1);
    asm_cmd->fallthrough();
    CLI::App* count = leaf(asm_cmd, "count", "Refined counts against the closed form", [&] { return asm_tasks(o, false); });
    add_index_flags(count, o);
    count->add_option("--r", o.r, "Single first-row position (needs --n)");
    count->add_flag("--refined", o.refined, "Report counts by first-row position");
    count->add_option("--limit", o.limit, "Override the order guard");
    CLI::App* enumerate = leaf(asm_cmd, "enumerate", "Enumerate ASMs and cross-check the counts",
                               [&] { return asm_tasks(o, true); });
    add_index_flags(enumerate, o);
    enumerate->add_flag("--list", o.list, "Include every matrix in the report");
    enumerate->add_option("--limit", o.limit, "Override the order guard");

    CLI::App* verify = app.add_subcommand("verify", "Identity checks");
    verify->require_subcommand(1);
    verify->fallthrough();
    CLI::App* nyd = leaf(verify, "notyetdone", "Determinant-ratio limit against its closed form",
                         [&] { return notyetdone_tasks(o); });
    add_index_flags(nyd, o);
    nyd->add_option("--x", o.x, "Rational X as p/q (repeatable)");
    add_index_flags(leaf(verify, "done", "Polynomial identity in X", [&] { return done_tasks(o); }), o);
    CLI::App* bottom = leaf(verify, "prop-bottom", "T(x^n Q_n) against its product form",
                            [&] { return prop_bottom_tasks(o); });
    add_index_flags(bottom, o);
    add_mode_flags(bottom, o);
    CLI::App* top = leaf(verify, "prop-top", "Truncated series bracket against the exact value",
                         [&] { return prop_top_tasks(o); });
    add_index_flags(top, o);
    top->add_option("--s", o.s, "Rational s in (0,1), default 1/2");
    top->add_option("--x", o.x, "Rational X, default 1/3");
    top->add_option("--trunc", o.trunc, "Last summation index K, default 60");
    top->add_option("--tail-max", o.tail_max, "Largest accepted tail bound as p/q");
    CLI::App* hankel = leaf(verify, "hankel", "det N_{n+1}(1) against the telescoped product",
                            [&] { return hankel_tasks(o); });
    add_index_flags(hankel, o);
    add_mode_flags(hankel, o);
    leaf(verify, "all", "Every check at its default bounds", [&] { return all_tasks(o); });

    CLI::App* ql = app.add_subcommand("qlegendre", "q-Legendre polynomials");
    ql->require_subcommand(1);
    ql->fallthrough();
    CLI::App* print = leaf(ql, "print", "Coefficients of Q_n(x; s, 1)", [&] { return qlegendre_print_tasks(o); });
    add_index_flags(print, o);
    add_mode_flags(print, o);
    CLI::App* ortho = leaf(ql, "ortho-check", "Orthogonality and uniqueness", [&] { return ortho_tasks(o); });
    add_index_flags(ortho, o);
    add_mode_flags(ortho, o);

    CLI::App* fit = leaf(&app, "fit-recurrence", "Fit a recurrence to the values of both sides at X",
                         [&] { return fit_tasks(o); });
    add_index_flags(fit, o);
    fit->add_option("--x", o.x, "Rational X, default 1/5");
    fit->add_option("--degree", o.degree, "Coefficient degree (default: smallest in 0..6 that works)");
    fit->add_option("--order", o.order, "Recurrence order, default 2");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    json report;
    try {
        const unsigned workers = worker_count();
        const auto t0 = std::chrono::steady_clock::now();
        std::vector<json> verdicts = run_tasks(build(), workers, o.timings);
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
        bool pass = !verdicts.empty();
        for (const auto& v : verdicts) {
            pass = pass && v["pass"].get<bool>();
        }
        report["command"] = command;
        report["parameters"] = parameters_json(o);
        report["verdicts"] = verdicts;
        report["pass"] = pass;
        report["elapsedMs"] = o.timings ? ms.count() : 0;
    } catch (const UsageError& e) {
        std::cerr << "refasm: " << e.what() << "\n";
        return kExitUsage;
    }
    std::cout << report.dump(o.json_indent) << "\n";
    return report["pass"].get<bool>() ? 0 : kExitMismatch;
}
