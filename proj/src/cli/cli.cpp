#include "sextic/cli/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iostream>
#include <optional>

#include "sextic/classify/classify.hpp"
#include "sextic/errors.hpp"
#include "sextic/exact/algorithms.hpp"
#include "sextic/quintic/quintic.hpp"
#include "sextic/resolvents/resolvents.hpp"

namespace sextic::cli {

namespace {

using json = nlohmann::ordered_json;
using exact::BigRational;
using exact::RatPoly;
using resolvents::ReducedSextic;
using resolvents::ResolventKind;

/// Bad or missing arguments detected after CLI11 has parsed the line.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Globals {
    unsigned precision_bits = roots::kDefaultPrecisionBits;
    std::string format = "json";
    unsigned jobs = 1;
};

struct PolyArgs {
    std::string coeffs;
    std::string d;
    std::string e;
};

struct PolyInput {
    RatPoly poly;
    std::optional<ReducedSextic> reduced;
};

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t");
    return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        parts.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
        if (pos == std::string_view::npos) return parts;
        start = pos + 1;
    }
}

void add_poly_args(CLI::App* cmd, PolyArgs& args) {
    auto* coeffs = cmd->add_option("--coeffs", args.coeffs, "Coefficients c6,c5,...,c0; rationals as p/q");
    auto* d = cmd->add_option("--d", args.d, "d of the reduced sextic x^6 + x^2 + d x + e");
    auto* e = cmd->add_option("--e", args.e, "e of the reduced sextic");
    d->needs(e);
    e->needs(d);
    coeffs->excludes(d);
    coeffs->excludes(e);
}

PolyInput parse_poly(const PolyArgs& args) {
    if (!args.coeffs.empty()) {
        const auto parts = split(args.coeffs, ',');
        if (parts.size() != 7) throw UsageError("--coeffs needs 7 coefficients c6,...,c0, got " + std::to_string(parts.size()));
        std::vector<BigRational> high;
        for (const auto& part : parts) high.push_back(BigRational::parse(part));
        if (high.front().is_zero()) throw UsageError("--coeffs: leading coefficient must be nonzero");
        RatPoly poly = RatPoly::from_high(std::move(high));
        return {poly, classify::as_reduced(poly)};
    }
    if (!args.d.empty()) {
        const ReducedSextic s{BigRational::parse(args.d), BigRational::parse(args.e)};
        return {s.polynomial(), s};
    }
    throw UsageError("give --coeffs or both --d and --e");
}

json rationals(const std::vector<BigRational>& values) {
    json out = json::array();
    for (const auto& v : values) out.push_back(v.to_string());
    return out;
}

json coefficients(const RatPoly& p) { return rationals(p.high_to_low()); }

BigRational coefficient(const RatPoly& p, int k) {
    return k >= 0 && k <= p.degree() ? p[static_cast<std::size_t>(k)] : BigRational(0);
}

const char* bound_name(classify::GroupBound bound) {
    switch (bound) {
        case classify::GroupBound::SubgroupOfJ: return "SubgroupOfJ";
        case classify::GroupBound::SubgroupOfK: return "SubgroupOfK";
        case classify::GroupBound::SubgroupOfL: return "SubgroupOfL";
        case classify::GroupBound::SubgroupOfM: return "SubgroupOfM";
        case classify::GroupBound::SubgroupOfD6: return "SubgroupOfD6";
        case classify::GroupBound::NotSolvableBound: return "NotSolvableBound";
        case classify::GroupBound::Inconclusive: return "Inconclusive";
    }
    return "?";
}

const char* solvable_name(classify::Solvable verdict) {
    switch (verdict) {
        case classify::Solvable::Yes: return "Yes";
        case classify::Solvable::No: return "No";
        case classify::Solvable::NotApplicable: return "NotApplicable";
    }
    return "?";
}

json optional_rational(const std::optional<BigRational>& q) { return q ? json(q->to_string()) : json(nullptr); }

// ---- text rendering: flattened, aligned "key  value" lines ----------------

std::string scalar_text(const json& value) {
    if (value.is_string()) return value.get<std::string>();
    if (value.is_null()) return "-";
    return value.dump();
}

void flatten(const json& value, const std::string& key, std::vector<std::pair<std::string, std::string>>& rows) {
    if (value.is_object()) {
        for (const auto& [k, v] : value.items()) flatten(v, key.empty() ? k : key + "." + k, rows);
    } else if (value.is_array() && std::any_of(value.begin(), value.end(), [](const json& v) { return v.is_structured(); })) {
        for (std::size_t i = 0; i < value.size(); ++i) flatten(value[i], key + "[" + std::to_string(i) + "]", rows);
    } else if (value.is_array()) {
        std::string joined;
        for (const auto& v : value) joined += (joined.empty() ? "" : ", ") + scalar_text(v);
        rows.emplace_back(key, value.empty() ? "-" : joined);
    } else {
        rows.emplace_back(key, scalar_text(value));
    }
}

void emit(const json& doc, const Globals& globals, std::ostream& out) {
    if (globals.format == "json") {
        out << doc.dump(2) << '\n';
        return;
    }
    std::vector<std::pair<std::string, std::string>> rows;
    flatten(doc, "", rows);
    std::size_t width = 0;
    for (const auto& row : rows) width = std::max(width, row.first.size());
    for (const auto& [key, value] : rows) out << key << std::string(width - key.size() + 2, ' ') << value << '\n';
}

/// One record per line: compact JSON, or space-separated key=value pairs.
void emit_line(const json& doc, const Globals& globals, std::ostream& out) {
    if (globals.format == "json") {
        out << doc.dump() << '\n';
        return;
    }
    std::vector<std::pair<std::string, std::string>> rows;
    flatten(doc, "", rows);
    bool first = true;
    for (const auto& [key, value] : rows) {
        out << (first ? "" : " ") << key << '=' << value;
        first = false;
    }
    out << '\n';
}

ResolventKind parse_kind(const std::string& kind) { return kind == "j" ? ResolventKind::ThetaJ : ResolventKind::PhiK; }

// ---- commands -------------------------------------------------------------

json classify_json(const classify::ClassificationReport& r) {
    json doc;
    doc["input"] = coefficients(r.input);
    doc["irreducible"] = r.irreducible;
    doc["f_roots"] = rationals(r.f_roots);
    doc["g_roots"] = rationals(r.g_roots);
    doc["discriminant"] = r.discriminant.to_string();
    doc["sqrt_discriminant"] = optional_rational(r.sqrt_discriminant);
    doc["bound"] = bound_name(r.bound);
    doc["solvable"] = solvable_name(r.solvable);
    doc["notes"] = r.notes;
    return doc;
}

classify::ClassifyOptions classify_options(const Globals& globals) {
    classify::ClassifyOptions options;
    options.precision_bits = globals.precision_bits;
    return options;
}

int cmd_classify(const PolyArgs& args, const Globals& globals, std::ostream& out) {
    const PolyInput input = parse_poly(args);
    emit(classify_json(classify::classify(input.poly, classify_options(globals))), globals, out);
    return kOk;
}

struct ResolventArgs {
    PolyArgs poly;
    std::string kind;
    std::string method = "numeric";
    std::string form = "printed";
};

int cmd_resolvent(const ResolventArgs& args, const Globals& globals, std::ostream& out) {
    const ResolventKind kind = parse_kind(args.kind);
    const bool closed = args.method != "numeric";
    const bool numeric = args.method != "closed";
    if (closed && !args.poly.coeffs.empty()) throw UsageError("--method closed needs the reduced shorthand --d, --e");
    const PolyInput input = parse_poly(args.poly);
    if (closed && !input.reduced) throw UsageError("--method closed needs the reduced shorthand --d, --e");

    json doc;
    doc["kind"] = args.kind;
    doc["input"] = coefficients(input.poly);
    RatPoly closed_poly;
    RatPoly numeric_poly;
    if (closed) {
        const bool fitted = args.form == "fitted";
        const auto& form = kind == ResolventKind::ThetaJ
                               ? (fitted ? resolvents::fitted_theta_form() : resolvents::printed_theta_form())
                               : (fitted ? resolvents::fitted_phi_form() : resolvents::printed_phi_form());
        closed_poly = form.evaluate(input.reduced->d, input.reduced->e);
        doc["closed"] = {{"form", args.form}, {"coefficients", coefficients(closed_poly)}};
    }
    if (numeric) {
        const auto result = resolvents::resolvent_numeric(input.poly, kind, globals.precision_bits);
        numeric_poly = result.for_input();
        doc["numeric"] = {{"coefficients", coefficients(numeric_poly)},
                          {"scale", result.scale.get_str()},
                          {"precision_bits", result.precision_bits}};
    }
    if (closed && numeric) {
        json diff = json::array();
        for (int k = std::max(closed_poly.degree(), numeric_poly.degree()); k >= 0; --k) {
            const BigRational a = coefficient(closed_poly, k);
            const BigRational b = coefficient(numeric_poly, k);
            if (a != b) diff.push_back({{"x_power", k}, {"closed", a.to_string()}, {"numeric", b.to_string()}});
        }
        doc["diff"] = diff;
    }
    emit(doc, globals, out);
    return kOk;
}

int cmd_discriminant(const PolyArgs& args, const Globals& globals, std::ostream& out) {
    const PolyInput input = parse_poly(args);
    const BigRational disc = resolvents::discriminant_exact(input.poly);
    json doc;
    doc["input"] = coefficients(input.poly);
    doc["discriminant"] = disc.to_string();
    doc["sqrt_discriminant"] = optional_rational(exact::is_rational_square(disc));
    if (input.reduced) doc["reduced_form"] = resolvents::discriminant_reduced(*input.reduced).to_string();
    emit(doc, globals, out);
    return kOk;
}

json reconstruction_json(const resolvents::ReconstructionReport& report) {
    json doc;
    doc["kind"] = resolvents::to_string(report.kind);
    doc["degree"] = resolvents::resolvent_degree(report.kind);
    doc["sample_points"] = report.sample_points;
    doc["unknowns"] = report.unknowns;
    doc["holdout_points"] = report.holdout_points;
    doc["terms_compared"] = report.terms.size();
    doc["matches_printed"] = report.matches_printed();
    json discrepancies = json::array();
    for (const auto& item : report.discrepancies) {
        json terms = json::array();
        for (const auto& t : report.terms) {
            if (t.x_power != item.x_power || t.matches()) continue;
            terms.push_back({{"d_power", t.d_power},
                             {"e_power", t.e_power},
                             {"printed", t.printed.get_str()},
                             {"fitted", t.fitted.get_str()}});
        }
        discrepancies.push_back({{"x_power", item.x_power},
                                 {"printed", item.printed.to_string()},
                                 {"fitted", item.fitted.to_string()},
                                 {"terms", terms}});
    }
    doc["discrepancies"] = discrepancies;
    return doc;
}

struct AuditArgs {
    std::string kind = "both";
    std::size_t holdouts = 20;
    unsigned seed = resolvents::ReconstructionOptions{}.seed;
};

int cmd_audit(const AuditArgs& args, const Globals& globals, std::ostream& out) {
    resolvents::ReconstructionOptions options;
    options.precision_bits = globals.precision_bits;
    options.jobs = globals.jobs;
    options.holdouts = args.holdouts;
    options.seed = args.seed;
    json doc;
    for (const auto kind : {ResolventKind::ThetaJ, ResolventKind::PhiK}) {
        if (args.kind == "j" && kind != ResolventKind::ThetaJ) continue;
        if (args.kind == "k" && kind != ResolventKind::PhiK) continue;
        doc[resolvents::to_string(kind)] = reconstruction_json(resolvents::reconstruct_reduced(kind, options));
    }
    emit(doc, globals, out);
    return kOk;
}

struct SearchArgs {
    std::string d_range;
    std::string e_range;
    bool quintic = false;
    int box = 0;
    int height = quintic::kDefaultHeightBound;
};

std::vector<BigRational> parse_range(const std::string& text, const char* flag) {
    const auto parts = split(text, ':');
    if (parts.size() != 2) throw UsageError(std::string(flag) + " expects LO:HI");
    const BigRational lo = BigRational::parse(parts[0]);
    const BigRational hi = BigRational::parse(parts[1]);
    if (hi < lo) throw UsageError(std::string(flag) + ": HI is below LO");
    if (hi - lo > 10'000) throw UsageError(std::string(flag) + ": range too long");
    std::vector<BigRational> values;
    for (BigRational v = lo; v <= hi; v += 1) values.push_back(v);
    return values;
}

json quintic_params_json(const quintic::QuinticParams& p) {
    return {{"epsilon", p.epsilon}, {"c", p.c.to_string()}, {"e", p.e.to_string()}};
}

int cmd_search(const SearchArgs& args, const Globals& globals, std::ostream& out, std::ostream& err) {
    if (args.quintic) {
        if (args.box < 1) throw UsageError("search --quintic needs --box N with N >= 1");
        for (const auto& hit : quintic::search_quintics(args.box, args.height, globals.jobs)) {
            const auto params = quintic::params_from_ab(hit.a, hit.b, args.height);
            emit_line({{"a", hit.a.to_string()}, {"b", hit.b.to_string()}, {"params", quintic_params_json(*params)}},
                      globals, out);
        }
        return kOk;
    }
    if (args.d_range.empty() || args.e_range.empty()) {
        throw UsageError("search needs --d-range and --e-range, or --quintic --box N");
    }
    const auto result = classify::search_reduced(parse_range(args.d_range, "--d-range"),
                                                 parse_range(args.e_range, "--e-range"), classify_options(globals),
                                                 globals.jobs);
    for (const auto& hit : result.hits) {
        emit_line({{"d", hit.d.to_string()},
                   {"e", hit.e.to_string()},
                   {"bound", bound_name(hit.report.bound)},
                   {"solvable", solvable_name(hit.report.solvable)},
                   {"f_roots", rationals(hit.report.f_roots)},
                   {"g_roots", rationals(hit.report.g_roots)},
                   {"sqrt_discriminant", optional_rational(hit.report.sqrt_discriminant)}},
                  globals, out);
    }
    for (const auto& failure : result.failures) {
        err << "warning: d=" << failure.d << " e=" << failure.e << ": " << failure.message << '\n';
    }
    return kOk;
}

struct QuinticArgs {
    std::string a;
    std::string b;
    std::string params;
    int height = quintic::kDefaultHeightBound;
    int digits = 40;
};

int cmd_quintic(const QuinticArgs& args, const Globals& globals, std::ostream& out) {
    std::optional<quintic::QuinticParams> params;
    quintic::BringJerrard f;
    if (!args.params.empty()) {
        const auto parts = split(args.params, ',');
        if (parts.size() != 3) throw UsageError("--params expects eps,c,e");
        const BigRational eps = BigRational::parse(parts[0]);
        if (eps != 1 && eps != -1) throw UsageError("--params: epsilon must be 1 or -1");
        params = quintic::QuinticParams{eps == 1 ? 1 : -1, BigRational::parse(parts[1]), BigRational::parse(parts[2])};
        params->validate();
        f = quintic::ab_from_params(*params);
    } else {
        if (args.a.empty() || args.b.empty()) throw UsageError("quintic needs --a and --b, or --params eps,c,e");
        f = {BigRational::parse(args.a), BigRational::parse(args.b)};
        if (f.a.is_zero()) throw UsageError("quintic: a must be nonzero");
        params = quintic::params_from_ab(f.a, f.b, args.height);
    }
    json doc;
    doc["a"] = f.a.to_string();
    doc["b"] = f.b.to_string();
    doc["irreducible"] = classify::is_irreducible(f.polynomial(), globals.precision_bits);
    if (!params) {
        doc["params"] = nullptr;
        doc["note"] = "no parameters with height <= " + std::to_string(args.height);
        emit(doc, globals, out);
        return kOk;
    }
    doc["params"] = quintic_params_json(*params);
    const auto radicals = quintic::radical_roots(*params, globals.precision_bits);
    doc["precision_bits"] = radicals.precision_bits;
    doc["branch"] = radicals.branch;
    json roots = json::array();
    for (const auto& x : radicals.roots) roots.push_back({{"re", x.re.to_string(args.digits)}, {"im", x.im.to_string(args.digits)}});
    doc["roots"] = roots;
    doc["residual"] = radicals.residual.to_string(6);
    emit(doc, globals, out);
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Galois-group bounds for sextics via resolvents, and solvable Bring-Jerrard quintics"};
    app.name("sextic");
    app.require_subcommand(1);
    app.fallthrough();

    Globals globals;
    app.add_option("--precision-bits", globals.precision_bits, "Starting precision of the numeric ladder")
        ->envname("SEXTIC_PRECISION_BITS")
        ->check(CLI::Range(16U, static_cast<unsigned>(roots::kMaxPrecisionBits)));
    app.add_option("--format", globals.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--jobs", globals.jobs, "Worker threads for searches and the audit")->check(CLI::Range(1U, 256U));

    PolyArgs classify_args;
    auto* classify_cmd = app.add_subcommand("classify", "Bound the Galois group of a sextic");
    add_poly_args(classify_cmd, classify_args);

    ResolventArgs resolvent_args;
    auto* resolvent_cmd = app.add_subcommand("resolvent", "Degree-15 (j) or degree-10 (k) resolvent");
    add_poly_args(resolvent_cmd, resolvent_args.poly);
    resolvent_cmd->add_option("--kind", resolvent_args.kind, "j for theta, k for phi")
        ->required()
        ->check(CLI::IsMember({"j", "k"}));
    resolvent_cmd->add_option("--method", resolvent_args.method, "closed, numeric or both")
        ->check(CLI::IsMember({"closed", "numeric", "both"}));
    resolvent_cmd->add_option("--form", resolvent_args.form, "Closed form to evaluate: printed or fitted")
        ->check(CLI::IsMember({"printed", "fitted"}));

    PolyArgs discriminant_args;
    auto* discriminant_cmd = app.add_subcommand("discriminant", "Exact discriminant");
    add_poly_args(discriminant_cmd, discriminant_args);

    AuditArgs audit_args;
    auto* audit_cmd = app.add_subcommand("audit", "Refit the closed resolvent forms and diff them against the printed ones");
    audit_cmd->add_option("--kind", audit_args.kind, "j, k or both")->check(CLI::IsMember({"j", "k", "both"}));
    audit_cmd->add_option("--holdouts", audit_args.holdouts, "Random validation points");
    audit_cmd->add_option("--seed", audit_args.seed, "Seed for the validation points");

    SearchArgs search_args;
    auto* search_cmd = app.add_subcommand("search", "Scan reduced sextics or Bring-Jerrard quintics for solvable ones");
    search_cmd->add_option("--d-range", search_args.d_range, "LO:HI, step 1");
    search_cmd->add_option("--e-range", search_args.e_range, "LO:HI, step 1");
    search_cmd->add_flag("--quintic", search_args.quintic, "Scan x^5 + a x + b instead");
    search_cmd->add_option("--box", search_args.box, "|a|, |b| <= N");
    search_cmd->add_option("--height", search_args.height, "Height bound for the parameter search");

    QuinticArgs quintic_args;
    auto* quintic_cmd = app.add_subcommand("quintic", "Parameters and radical roots of x^5 + a x + b");
    auto* a_opt = quintic_cmd->add_option("--a", quintic_args.a, "Coefficient a");
    auto* b_opt = quintic_cmd->add_option("--b", quintic_args.b, "Coefficient b");
    auto* params_opt = quintic_cmd->add_option("--params", quintic_args.params, "eps,c,e");
    params_opt->excludes(a_opt);
    params_opt->excludes(b_opt);
    quintic_cmd->add_option("--height", quintic_args.height, "Height bound for the parameter search");
    quintic_cmd->add_option("--digits", quintic_args.digits, "Significant digits per root part")
        ->check(CLI::Range(1, 1000));

    std::vector<const char*> argv{"sextic"};
    for (const auto& arg : args) argv.push_back(arg.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*classify_cmd) return cmd_classify(classify_args, globals, out);
        if (*resolvent_cmd) return cmd_resolvent(resolvent_args, globals, out);
        if (*discriminant_cmd) return cmd_discriminant(discriminant_args, globals, out);
        if (*audit_cmd) return cmd_audit(audit_args, globals, out);
        if (*search_cmd) return cmd_search(search_args, globals, out, err);
        if (*quintic_cmd) return cmd_quintic(quintic_args, globals, out);
    } catch (const NumericError& e) {
        err << "error: " << e.what() << '\n';
        return kNumericFailure;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace sextic::cli
