#include "cantor/cli.hpp"

#include "cantor/error.hpp"
#include "json_util.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

namespace cantor::cli {

namespace {

struct Config {
    int n = 0;
    std::string digits;
    std::string t;
    std::size_t K = 64;
    std::optional<std::size_t> cap;
    int precision = 50;
    std::string format;
    std::string out;
    std::size_t depth = 1;
    std::string s;
    std::string beta;
    std::string y;
    std::string eps;
    std::uint64_t seed = 0;
    std::size_t random = 0;
    unsigned threads = 1;
    std::string edit;

    std::size_t level_cap() const { return cap ? *cap : default_cap(); }
    OracleOptions oracle() const { return {level_cap(), threads, &cancel_flag()}; }
    MeasureOptions measure() const { return {K, level_cap(), threads, &cancel_flag()}; }
};

struct Outcome {
    std::string text;
    int code = 0;
};

std::vector<int> parse_digits(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw Error(ErrorCode::ParseError, "bad digit '" + item + "' in --digits");
        }
    }
    return out;
}

DigitSet digit_set(const Config& c) { return make_digit_set(c.n, parse_digits(c.digits)); }

NaryExpansion translation(const Config& c) {
    if (c.t.empty()) throw Error(ErrorCode::ParseError, "--t is required");
    return parse_translation(c.t, c.n);
}

EditedStream edited(const Config& c) {
    const auto parts = parse_digits(c.edit);
    if (parts.size() != 3 || parts[0] < 1 || parts[1] < 0)
        throw Error(ErrorCode::ParseError, "--edit expects a,b,digit with a >= 1 and b >= 0");
    return EditedStream{translation(c), static_cast<std::uint64_t>(parts[0]), static_cast<std::uint64_t>(parts[1]),
                        parts[2]};
}

CoverExponent cover_exponent(const Config& c, const DigitSet& ds) {
    if (c.s.empty()) return CoverExponent(LogExponent(ds.base(), ds.size()));
    if (c.s.rfind("log_", 0) == 0) {
        const auto open = c.s.find('(');
        const auto close = c.s.rfind(')');
        if (open == std::string::npos || close != c.s.size() - 1)
            throw Error(ErrorCode::ParseError, "--s expects p/q or log_b(a)");
        const BigInt b(c.s.substr(4, open - 4));
        const BigInt a(c.s.substr(open + 1, close - open - 1));
        return CoverExponent(LogExponent(b, a));
    }
    return CoverExponent(parse_rational(c.s));
}

Rational required_rational(const std::string& text, const char* flag) {
    if (text.empty()) throw Error(ErrorCode::ParseError, std::string(flag) + " is required");
    return parse_rational(text);
}

void merge(Json& into, const Json& from) {
    for (const auto& [key, value] : from.items()) into[key] = value;
}

void expect_format(const Config& c, std::initializer_list<const char*> allowed) {
    for (const char* f : allowed)
        if (c.format == f) return;
    throw Error(ErrorCode::ParseError, "format '" + c.format + "' is not available for this command");
}

Json input_json(const Config& c, const DigitSet& ds) {
    Json j;
    j["digit_set"] = digit_set_json(ds);
    if (!c.t.empty()) j["t"] = translation_json(translation(c));
    if (!c.edit.empty()) j["edit"] = c.edit;
    return j;
}

// ---------------------------------------------------------------------------

Outcome cmd_classify(const Config& c) {
    expect_format(c, {"json", "text"});
    const DigitSet ds = digit_set(c);
    const DeltaSet& d = ds.delta();
    if (c.format == "text") {
        std::ostringstream os;
        os << ds.to_string() << "\n";
        os << "delta=";
        for (std::size_t i = 0; i < d.values.size(); ++i) os << (i ? "," : "") << d.values[i];
        os << "\nuniform=" << (d.uniform ? "true" : "false") << "\nregular=" << (d.regular ? "true" : "false")
           << "\nsparse=" << (d.sparse ? "true" : "false") << "\n";
        return {os.str(), 0};
    }
    Json j = document("classify");
    j["digit_set"] = digit_set_json(ds);
    j["delta"] = d.values;
    j["uniform"] = d.uniform;
    j["regular"] = d.regular;
    j["sparse"] = d.sparse;
    return {j.dump(2) + "\n", 0};
}

Outcome cmd_trace(const Config& c) {
    expect_format(c, {"json", "csv"});
    const DigitSet ds = digit_set(c);
    std::optional<NaryExpansion> t;
    SigmaTrace trace = [&] {
        if (!c.edit.empty()) return sigma_sequence(DigitStream(edited(c)), c.K, ds);
        t = translation(c);
        return sigma_sequence(*t, c.K, ds);
    }();
    if (auto k = trace.first_simultaneous())
        throw Error(ErrorCode::SimultaneousStateEncountered,
                    "sigma = i; formula-mode counting refused", *k);
    const CountingProfile prof = t ? mu_profile(*t, c.K, ds) : mu_profile(DigitStream(edited(c)), c.K, ds);

    struct Row {
        std::size_t k;
        int digit;
        std::string sigma, xi, nu;
        int factor;
        std::string mu, ell;
    };
    std::vector<Row> rows;
    for (std::size_t k = 0; k <= c.K; ++k) {
        const auto& r = prof.records[k];
        const std::string x = k == 0 ? "" : std::string(to_string(xi(trace.states[k - 1], trace.digits[k], ds)));
        rows.push_back({k, r.digit, std::string(sigma_symbol(r.state)), x, nu(prof, k, ds.size(), c.precision).numeric,
                        r.factor, r.mu.str(), r.ell ? to_string(*r.ell) : ""});
    }

    if (c.format == "csv") {
        std::ostringstream os;
        os << "k,digit,sigma,xi,factor,mu,nu,ell\n";
        for (const auto& r : rows)
            os << r.k << ',' << r.digit << ',' << r.sigma << ',' << r.xi << ',' << r.factor << ',' << r.mu << ','
               << r.nu << ',' << r.ell << '\n';
        return {os.str(), 0};
    }
    Json j = document("trace");
    j["input"] = input_json(c, ds);
    j["K"] = c.K;
    j["horizon_limited"] = prof.horizon_limited;
    Json arr = Json::array();
    for (const auto& r : rows) {
        Json row;
        row["k"] = r.k;
        row["digit"] = r.digit;
        row["sigma"] = r.sigma;
        row["xi"] = r.xi.empty() ? Json(nullptr) : Json(r.xi);
        row["factor"] = r.factor;
        row["mu"] = r.mu;
        row["nu"] = r.nu;
        row["ell"] = r.ell.empty() ? Json(nullptr) : Json(r.ell);
        arr.push_back(row);
    }
    j["rows"] = arr;
    return {j.dump(2) + "\n", 0};
}

Outcome cmd_bounds(const Config& c) {
    expect_format(c, {"json"});
    const DigitSet ds = digit_set(c);
    MeasureReport r;
    std::optional<NaryExpansion> t;
    if (!c.edit.empty()) {
        r = measure_bounds(edited(c), ds, c.measure());
    } else {
        t = translation(c);
        r = measure_bounds(*t, ds, c.measure());
    }
    Json j = document("bounds");
    j["input"] = input_json(c, ds);
    merge(j, report_object(r, nullptr, c.precision));
    int code = 0;
    if (r.route == MeasureRoute::OracleOnly) code = 3;
    else if (r.kind == MeasureKind::Unknown) code = 4;
    return {j.dump(2) + "\n", code};
}

NaryExpansion random_translation(const DigitSet& ds, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> digit(0, ds.base() - 1), len(0, 3), plen(1, 4);
    std::vector<int> pre(static_cast<std::size_t>(len(rng))), per(static_cast<std::size_t>(plen(rng)));
    for (int& d : pre) d = digit(rng);
    for (int& d : per) d = digit(rng);
    return canonical_expansion(ds.base(), pre, per);
}

struct VerifyRow {
    std::size_t k;
    OracleCounts counts;
    std::string mu;
    std::string sigma;
    bool agree;
};

Outcome cmd_verify(const Config& c) {
    expect_format(c, {"json", "csv"});
    const DigitSet ds = digit_set(c);
    std::vector<NaryExpansion> ts;
    if (c.random > 0) {
        std::mt19937_64 rng(c.seed);
        for (std::size_t i = 0; i < c.random; ++i) ts.push_back(random_translation(ds, rng));
    } else {
        ts.push_back(translation(c));
    }
    std::size_t K = 0;
    while (K < c.K && ipow(ds.size(), K + 1) <= c.level_cap()) ++K;

    const bool formula = ds.delta().sparse;
    Json j = document("verify");
    j["input"] = input_json(c, ds);
    j["formula_mode"] = formula;
    if (!formula) j["note"] = "formula-mode suppressed: D is not sparse; oracle counts only";
    j["levels_checked"] = K;
    Json cases = Json::array();
    std::ostringstream csv;
    csv << "t,k,interval,potential,potentially_empty,empty,mu,sigma,agree\n";
    std::optional<std::pair<std::string, std::size_t>> first_mismatch;

    for (const auto& t : ts) {
        std::optional<CountingProfile> prof;
        if (formula) prof = mu_profile(t, K, ds);
        std::vector<VerifyRow> rows;
        for (std::size_t k = 0; k <= K; ++k) {
            VerifyRow row{k, oracle_counts(ds, t, k, c.oracle()), "", "", true};
            if (prof) {
                const auto& rec = prof->records[k];
                row.mu = rec.mu.str();
                row.sigma = sigma_symbol(rec.state);
                const BigInt interval_expected = rec.state == CaseState::Interval ? rec.mu : BigInt(0);
                row.agree = BigInt(row.counts.interval + row.counts.potential) == rec.mu &&
                            BigInt(row.counts.interval) == interval_expected;
            }
            if (!row.agree && !first_mismatch) first_mismatch = {t.to_string(), k};
            rows.push_back(row);
        }
        Json cj;
        cj["t"] = translation_json(t);
        Json levels = Json::array();
        for (const auto& r : rows) {
            Json lj;
            lj["k"] = r.k;
            lj["interval"] = r.counts.interval;
            lj["potential"] = r.counts.potential;
            lj["potentially_empty"] = r.counts.potentially_empty;
            lj["empty"] = r.counts.empty;
            lj["mu"] = r.mu.empty() ? Json(nullptr) : Json(r.mu);
            lj["sigma"] = r.sigma.empty() ? Json(nullptr) : Json(r.sigma);
            lj["agree"] = r.agree;
            levels.push_back(lj);
            csv << t.to_string() << ',' << r.k << ',' << r.counts.interval << ',' << r.counts.potential << ','
                << r.counts.potentially_empty << ',' << r.counts.empty << ',' << r.mu << ',' << r.sigma << ','
                << (r.agree ? "true" : "false") << '\n';
        }
        cj["levels"] = levels;

        if (t.is_finite() && ipow(ds.size(), t.preperiod().size()) <= c.level_cap()) {
            const auto dec = finite_decomposition(ds, t, 0, c.oracle());
            Json dj;
            dj["k"] = dec.k;
            dj["a"] = dec.a_offsets.size();
            dj["b"] = dec.b_points.size();
            if (formula) {
                const BigInt a = interval_case_count(ds, t, dec.k);
                bool ok = a == dec.a_offsets.size();
                dj["a_formula"] = a.str();
                if (dec.a_offsets.empty() && !t.is_zero()) {
                    const BigInt b = b_count_sparse(ds, t, dec.k, c.oracle());
                    dj["b_formula"] = b.str();
                    ok = ok && b == dec.b_points.size();
                }
                dj["agree"] = ok;
                if (!ok && !first_mismatch) first_mismatch = {t.to_string(), dec.k};
            }
            cj["decomposition"] = dj;
        }
        cases.push_back(cj);
    }
    j["cases"] = cases;
    j["status"] = first_mismatch ? "FAIL" : "PASS";
    if (first_mismatch) {
        Json m;
        m["t"] = first_mismatch->first;
        m["k"] = first_mismatch->second;
        j["first_mismatch"] = m;
    }
    const int code = first_mismatch ? 1 : 0;
    if (c.format == "csv") return {csv.str(), code};
    return {j.dump(2) + "\n", code};
}

Outcome cmd_render(const Config& c) {
    expect_format(c, {"svg"});
    return {render_svg(digit_set(c), translation(c), c.K, c.oracle()), 0};
}

Outcome cmd_dense(const Config& c) {
    expect_format(c, {"json"});
    const DigitSet ds = digit_set(c);
    const auto a = dense_approximant(ds, translation(c), required_rational(c.beta, "--beta"),
                                     required_rational(c.y, "--y"), required_rational(c.eps, "--eps"), c.K);
    Json j = document("dense");
    j["input"] = input_json(c, ds);
    j["beta"] = c.beta;
    j["y"] = c.y;
    j["eps"] = c.eps;
    j["K"] = c.K;
    merge(j, dense_json(a, c.precision));
    const bool ok = a.distance_certified && a.greedy_certified && a.sigma_certified && a.band_certified &&
                    a.liminf_in_band;
    j["verdict"] = ok ? "certified" : "UNKNOWN";
    return {j.dump(2) + "\n", ok ? 0 : 4};
}

Outcome cmd_cover(const Config& c) {
    expect_format(c, {"json"});
    const DigitSet ds = digit_set(c);
    const auto cover = cover_upper_bound(ds, c.depth, cover_exponent(c, ds), c.precision, c.oracle());
    Json j = document("cover");
    j["input"] = input_json(c, ds);
    merge(j, cover_object(ds, cover));
    return {j.dump(2) + "\n", 0};
}

Outcome cmd_member(const Config& c) {
    expect_format(c, {"json"});
    const DigitSet ds = digit_set(c);
    const FMembership f = c.edit.empty() ? in_F(translation(c), ds) : in_F(DigitStream(edited(c)), ds, c.K);
    Json j = document("member");
    j["input"] = input_json(c, ds);
    merge(j, membership_json(f));
    return {j.dump(2) + "\n", f.verdict == FVerdict::Unknown ? 4 : 0};
}

int exit_code(ErrorCode code) {
    switch (code) {
        case ErrorCode::SimultaneousStateEncountered: return 3;
        case ErrorCode::LevelTooLarge:
        case ErrorCode::PeriodTooLong: return 5;
        case ErrorCode::Cancelled: return 130;
        default: return 2;
    }
}

void add_common(CLI::App* sub, Config& c, bool needs_t) {
    sub->add_option("--n", c.n, "base n")->required();
    sub->add_option("--digits", c.digits, "comma-separated digit set D, starting with 0")->required();
    auto* t = sub->add_option("--t", c.t, "translation: p/q or 0.d..(d..), bracketed [a,b] digits when n > 10");
    if (needs_t) t->required();
    sub->add_option("--K", c.K, "horizon / deepest level")->capture_default_str();
    sub->add_option("--cap", c.cap, "maximum number of level intervals (default CANTOR_CAP or 10^6)");
    sub->add_option("--precision", c.precision, "decimal digits for numeric renderings")->capture_default_str();
    sub->add_option("--format", c.format, "json | csv | svg | text");
    sub->add_option("--out", c.out, "write output to this file");
    sub->add_option("--threads", c.threads, "oracle worker threads")->capture_default_str();
    sub->add_option("--seed", c.seed, "seed for randomized inputs")->capture_default_str();
}

}  // namespace

std::atomic<bool>& cancel_flag() {
    static std::atomic<bool> flag{false};
    return flag;
}

std::size_t default_cap() {
    if (const char* env = std::getenv("CANTOR_CAP")) {
        try {
            std::size_t used = 0;
            const unsigned long long v = std::stoull(env, &used);
            if (used == std::string_view(env).size() && v > 0) return static_cast<std::size_t>(v);
        } catch (const std::exception&) {
        }
    }
    return kDefaultCap;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact analysis of C ∩ (C + t) for deleted-digits Cantor sets", "cantor-intersect"};
    app.require_subcommand(1);
    Config c;

    auto* classify = app.add_subcommand("classify", "digit set and difference set predicates");
    add_common(classify, c, false);
    auto* trace = app.add_subcommand("trace", "sigma trace with counting profile");
    add_common(trace, c, true);
    trace->add_option("--edit", c.edit, "a,b,digit: force digit at positions a*j^2+b, j >= 1");
    auto* bounds = app.add_subcommand("bounds", "Hausdorff measure bounds report");
    add_common(bounds, c, true);
    bounds->add_option("--edit", c.edit, "a,b,digit: force digit at positions a*j^2+b, j >= 1");
    auto* verify = app.add_subcommand("verify", "oracle counts against the counting formulas");
    add_common(verify, c, false);
    verify->add_option("--random", c.random, "check this many seeded random periodic t instead of --t");
    auto* render = app.add_subcommand("render", "SVG picture of levels 0..K");
    add_common(render, c, true);
    auto* dense = app.add_subcommand("dense", "greedy approximant with a prescribed liminf band");
    add_common(dense, c, true);
    dense->add_option("--beta", c.beta, "target exponent in (0, 1)")->required();
    dense->add_option("--y", c.y, "target liminf level y > 0")->required();
    dense->add_option("--eps", c.eps, "distance to t")->required();
    auto* cover = app.add_subcommand("cover", "optimal block cover of C_k");
    add_common(cover, c, false);
    cover->add_option("--depth", c.depth, "level k")->capture_default_str();
    cover->add_option("--s", c.s, "exponent p/q or log_b(a) (default log_n(m))");
    auto* member = app.add_subcommand("member", "membership of t in F = C - C");
    add_common(member, c, true);
    member->add_option("--edit", c.edit, "a,b,digit: force digit at positions a*j^2+b, j >= 1");

    std::vector<std::string> argv_store{"cantor-intersect"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    const auto* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    if (c.format.empty()) c.format = name == "render" ? "svg" : name == "classify" ? "json" : "json";

    Outcome result;
    try {
        if (name == "classify") result = cmd_classify(c);
        else if (name == "trace") result = cmd_trace(c);
        else if (name == "bounds") result = cmd_bounds(c);
        else if (name == "verify") result = cmd_verify(c);
        else if (name == "render") result = cmd_render(c);
        else if (name == "dense") result = cmd_dense(c);
        else if (name == "cover") result = cmd_cover(c);
        else result = cmd_member(c);
    } catch (const Error& e) {
        err << "error: " << e.what();
        if (e.level()) err << " (k=" << *e.level() << ")";
        err << "\n";
        return exit_code(e.code());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    if (c.out.empty()) {
        out << result.text;
    } else {
        std::ofstream file(c.out, std::ios::binary);
        if (!file) {
            err << "error: cannot write " << c.out << "\n";
            return 2;
        }
        file << result.text;
    }
    return result.code;
}

}  // namespace cantor::cli
