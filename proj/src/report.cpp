#include "tridec/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <stdexcept>

#include "tridec/bounds.hpp"
#include "tridec/chains.hpp"
#include "tridec/decompose.hpp"
#include "tridec/oracle.hpp"
#include "tridec/text.hpp"
#include "tridec/unmixed.hpp"

namespace tridec {

namespace {

using Json = nlohmann::ordered_json;

// Raised for malformed input that the parser accepted syntactically.
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

Json bound_json(const BoundValue& b) {
    Json j;
    j["value"] = b.decimal;
    j["exact"] = b.exact ? Json(to_string(b.rational)) : Json(nullptr);
    return j;
}

std::string integer_text(const Integer& v) { return v.get_str(); }

BoundValue exact_bound(const Integer& v) { return BoundValue{Rational(v), true, integer_text(v)}; }

Json check_json(const BoundCheck& c) {
    Json j;
    j["name"] = c.name;
    j["measured"] = to_string(c.measured);
    j["bound"] = c.bound.decimal;
    double b = c.bound.approx();
    j["ratio"] = b > 0 ? Json(c.measured.get_d() / b) : Json(nullptr);
    j["pass"] = c.pass;
    return j;
}

struct BoundInputs {
    unsigned n = 1;
    unsigned m = 1;
    unsigned d = 1;
    unsigned r = 0;
};

Json bound_block(const BoundInputs& in) {
    unsigned n = std::max(in.n, 1u);
    unsigned m = std::clamp(in.m, 1u, n);
    unsigned d = std::max(in.d, 1u);
    Json j;
    j["parameters"] = {{"n", n}, {"m", m}, {"d", d}, {"r", in.r}, {"digits", kBoundDigits}};
    j["gamma_bound"] = bound_json(gamma_bound(d, m));
    auto db = degree_bound_B(n, std::max(m, 2u), std::max(d, 2u), in.r);
    j["degree_bound_B"] = {{"m", std::max(m, 2u)},
                           {"d", std::max(d, 2u)},
                           {"B", bound_json(db.B)},
                           {"epsilon", bound_json(db.epsilon)}};
    j["component_bound"] = integer_text(component_bound(n, m, d));
    auto gm = gm_comparison(n, m, d, d);
    auto cell = [](const GmCell& c) { return Json{{"ob", integer_text(c.ob)}, {"gm", integer_text(c.gm)}}; };
    j["gm_comparison"] = {{"t", d},
                          {"degree_height_column", cell(gm.degree_height_column)},
                          {"degree_degree_column", cell(gm.degree_degree_column)},
                          {"height_height_column", cell(gm.height_height_column)},
                          {"height_degree_column", cell(gm.height_degree_column)}};
    return j;
}

unsigned max_total_degree(const std::vector<Polynomial>& ps) {
    unsigned d = 0;
    for (const auto& p : ps) d = std::max(d, p.total_degree().value_or(0));
    return d;
}

unsigned max_height(const std::vector<Polynomial>& ps) {
    unsigned h = 0;
    for (const auto& p : ps) h = std::max(h, p.height());
    return h;
}

Json string_list(const std::vector<Polynomial>& ps, const VariableOrder& names) {
    Json j = Json::array();
    for (const auto& p : ps) j.push_back(to_string(p, names));
    return j;
}

Json chain_json(const std::vector<Polynomial>& chain, const std::vector<Polynomial>& local,
                const std::vector<Var>& free, const VariableOrder& names) {
    Json j;
    Json fv = Json::array();
    for (Var v : free) fv.push_back(names.name(v));
    j["free"] = fv;
    j["chain"] = string_list(chain, names);
    Json degs = Json::array(), heights = Json::array();
    for (const auto& p : chain) {
        degs.push_back(p.degree_or_zero(*p.leader()));
        heights.push_back(p.height());
    }
    j["leader_degrees"] = degs;
    j["heights"] = heights;
    j["squarefree"] = std::holds_alternative<ChainCertificate>(is_squarefree_chain(local));
    return j;
}

Json measurements_json(const Measurements& m) {
    Json j;
    j["max_degree"] = m.max_degree;
    j["max_height"] = m.max_height;
    j["max_height_unmixed"] = m.max_height_unmixed;
    j["denominator_exponents"] = m.max_alpha;
    j["polynomials_observed"] = m.observed;
    return j;
}

// Points of zero-dimensional components that also satisfy some
// positive-dimensional output chain with nonvanishing initials.
Json redundancy_json(const Decomposition& dec, std::size_t n) {
    std::size_t zero_dim = 0, positive = 0, covered = 0, unsplit = 0;
    for (const auto& c : dec.components) (c.free.empty() ? zero_dim : positive)++;
    for (const auto& c : dec.components) {
        if (!c.free.empty()) continue;
        auto pts = chain_points(c.chain, c.order);
        if (!pts) {
            ++unsplit;
            continue;
        }
        for (const auto& pt : *pts) {
            std::vector<Rational> point(n);
            for (std::size_t i = 0; i < n && i < pt.size(); ++i) point[c.order[i]] = pt[i];
            for (const auto& o : dec.components) {
                if (o.free.empty()) continue;
                bool on = std::all_of(o.chain.begin(), o.chain.end(), [&](const Polynomial& g) {
                    return g.evaluate_all(point) == 0 && g.initial().evaluate_all(point) != 0;
                });
                if (on) {
                    ++covered;
                    break;
                }
            }
        }
    }
    return {{"zero_dimensional_components", zero_dim},
            {"positive_dimensional_components", positive},
            {"points_on_positive_dimensional_components", covered},
            {"components_with_irrational_points", unsplit}};
}

Json verify_json(const Decomposition& dec, const InputSystem& system, std::uint64_t seed) {
    Json j;
    auto split = factor_split_linear(system);
    if (!split) {
        j["available"] = false;
        j["reason"] = "input is not a product of univariate linear factors";
        return j;
    }
    auto truth = split_linear_solve(*split);
    auto rep = verify_decomposition(dec, system, truth, seed);
    j["available"] = true;
    j["truth_components"] = truth.components.size();
    j["truth_degree"] = truth.degree();
    j["sound"] = rep.sound;
    j["complete"] = rep.complete;
    j["samples_checked"] = rep.samples_checked;
    j["redundant_points"] = rep.redundant_points;
    j["unsplit_components"] = rep.unsplit_components;
    j["failures"] = rep.failures;
    return j;
}

std::vector<IndexedChain> parse_bypass(const std::string& text, const VariableOrder& names, std::size_t n) {
    auto file = parse_polynomial_file(text, names.names());
    std::vector<IndexedChain> out;
    for (auto& group : file.groups) {
        std::vector<bool> leader(n, false);
        for (const auto& g : group) {
            auto l = g.leader();
            if (!l || *l >= n) throw ValidationError("bypass chain element has no x-variable leader");
            if (leader[*l]) throw ValidationError("bypass chain repeats a leader");
            leader[*l] = true;
        }
        std::sort(group.begin(), group.end(), [](const Polynomial& a, const Polynomial& b) { return *a.leader() < *b.leader(); });
        IndexedChain ic;
        for (Var v = 0; v < n; ++v)
            if (!leader[v]) ic.free.push_back(v);
        ic.chain = std::move(group);
        out.push_back(std::move(ic));
    }
    return out;
}

Json run_decompose(const RunConfig& config, const PolynomialFile& file, Json& report, bool& internal_fault) {
    InputSystem system;
    system.n = file.n;
    system.polys = file.all();
    if (system.polys.empty()) throw ValidationError("input has no polynomials");
    for (const auto& p : system.polys)
        if (p.variable_span() > system.n)
            throw ValidationError("input uses the auxiliary variable " + file.order.name(p.variable_span() - 1));
    unsigned d = max_total_degree(system.polys);
    unsigned r = static_cast<unsigned>(system.polys.size() - 1);
    report["input"] = {{"n", system.n}, {"d", d}, {"r", r}, {"polynomials", string_list(system.polys, file.order)}};

    DecomposeOptions opts;
    opts.seed = config.seed;
    if (config.bypass_text) opts.bypass = parse_bypass(*config.bypass_text, file.order, system.n);
    Decomposition dec = triangular_decompose(system, opts);
    internal_fault = dec.internal_faults > 0;

    Json comps = Json::array();
    bool all_squarefree = true;
    for (const auto& c : dec.components) {
        std::vector<Polynomial> local;
        for (const auto& g : c.chain) local.push_back(to_local(g, c.order));
        Json cj = chain_json(c.chain, local, c.free, file.order);
        all_squarefree = all_squarefree && cj["squarefree"].get<bool>();
        comps.push_back(std::move(cj));
    }
    report["inconsistent"] = dec.inconsistent;
    report["components"] = comps;
    Json absent = Json::array();
    for (const auto& a : dec.family.absent) {
        Json fv = Json::array();
        for (Var v : a.free) fv.push_back(file.order.name(v));
        absent.push_back({{"free", fv}, {"reason", a.reason}});
    }
    report["absent_index_sets"] = absent;
    report["failures"] = dec.failures;

    Json inst = measurements_json(dec.measurements);
    inst["component_count"] = dec.components.size();
    inst["all_squarefree"] = all_squarefree;
    report["instrumentation"] = inst;
    report["redundancy"] = redundancy_json(dec, system.n);

    unsigned n = static_cast<unsigned>(std::max<std::size_t>(system.n, 1));
    unsigned m = config.m.value_or(n);
    BoundInputs bi{n, m, d, r};
    Json bounds = bound_block(bi);

    // Height ceiling inside unmixed: largest candidate chain, its largest
    // height, and the combined input as f (h = 1).
    unsigned chain_m = 1, chain_h = 1;
    for (const auto& ic : dec.family.chains) {
        chain_m = std::max<unsigned>(chain_m, static_cast<unsigned>(ic.chain.size()));
        chain_h = std::max(chain_h, max_height(ic.chain));
    }
    unsigned df = dec.inconsistent ? 0 : combine_input(system).height();
    std::vector<BoundCheck> checks;
    checks.push_back(check_bound("component_count", exact_bound(component_bound(n, n, std::max(d, 1u))),
                                 Rational(dec.components.size())));
    auto db = degree_bound_B(n, std::max(m, 2u), std::max(d, 2u), r);
    checks.push_back(check_bound("max_degree", db.B, Rational(dec.measurements.max_degree)));
    checks.push_back(check_bound("max_height", db.B, Rational(dec.measurements.max_height)));
    checks.push_back(check_bound("max_height_unmixed", output_height_bound(chain_m, chain_h, df, 0),
                                 Rational(dec.measurements.max_height_unmixed)));
    Json cj = Json::array();
    for (const auto& c : checks) cj.push_back(check_json(c));
    bounds["checks"] = cj;
    report["bounds"] = bounds;

    if (config.mode == RunMode::verify || config.verify) report["verification"] = verify_json(dec, system, config.seed);
    return report;
}

void run_unmixed(const RunConfig& config, const PolynomialFile& file, Json& report) {
    if (file.groups.empty()) throw ValidationError("unmixed-only input needs a chain group");
    if (file.groups.size() > 3) throw ValidationError("unmixed-only input has more than three groups");
    std::vector<Polynomial> chain = file.groups[0];
    auto single = [&](std::size_t g, Polynomial dflt) {
        if (file.groups.size() <= g) return dflt;
        if (file.groups[g].size() != 1) throw ValidationError("group " + std::to_string(g + 1) + " must hold one polynomial");
        return file.groups[g][0];
    };
    Polynomial f = single(1, Polynomial());
    Polynomial h = single(2, Polynomial(1));
    std::size_t n = file.n;
    if (chain.size() > n) throw ValidationError("chain is longer than the number of variables");
    std::size_t l = n - chain.size();
    for (std::size_t s = 0; s < chain.size(); ++s)
        if (chain[s].leader() != Var(l + s)) throw ValidationError("chain element " + std::to_string(s + 1) + " does not have leader " + file.order.name(l + s));
    if (!is_normalized(chain, l)) throw ValidationError("chain is not normalized");
    report["input"] = {{"n", n},
                       {"l", l},
                       {"chain", string_list(chain, file.order)},
                       {"f", to_string(f, file.order)},
                       {"h", to_string(h, file.order)}};
    Measurements meas;
    UnmixedOutput out;
    {
        Recorder rec(meas);
        out = unmixed(chain, l, f, h, static_cast<Var>(n));
    }
    std::vector<Var> free;
    for (Var v = 0; v < l; ++v) free.push_back(v);
    Json comps = Json::array();
    bool all_squarefree = true;
    for (const auto& c : out.components) {
        Json cj = chain_json(c.chain, c.chain, free, file.order);
        all_squarefree = all_squarefree && cj["squarefree"].get<bool>();
        comps.push_back(std::move(cj));
    }
    report["components"] = comps;
    report["leader_degrees"] = out.leader_degrees;
    Json inst = measurements_json(meas);
    inst["component_count"] = out.components.size();
    inst["all_squarefree"] = all_squarefree;
    report["instrumentation"] = inst;

    unsigned m = config.m.value_or(static_cast<unsigned>(std::max<std::size_t>(chain.size(), 1)));
    unsigned d = std::max(max_height(chain), 1u);
    Json bounds = bound_block({static_cast<unsigned>(std::max<std::size_t>(n, 1)), m, d, 0});
    auto ob = output_height_bound(static_cast<unsigned>(chain.size()), d, f.height(), h.height());
    bounds["output_height_bound"] = bound_json(ob);
    bounds["checks"] = Json::array({check_json(check_bound("max_height_unmixed", ob, Rational(meas.max_height_unmixed)))});
    report["bounds"] = bounds;
}

}  // namespace

std::optional<RunMode> parse_run_mode(std::string_view name) {
    if (name == "decompose") return RunMode::decompose;
    if (name == "unmixed-only") return RunMode::unmixed_only;
    if (name == "bounds-only") return RunMode::bounds_only;
    if (name == "verify") return RunMode::verify;
    return std::nullopt;
}

std::string run_mode_name(RunMode mode) {
    switch (mode) {
        case RunMode::decompose: return "decompose";
        case RunMode::unmixed_only: return "unmixed-only";
        case RunMode::bounds_only: return "bounds-only";
        case RunMode::verify: return "verify";
    }
    return "decompose";
}

RunOutcome run_report(const RunConfig& config, std::string_view input) {
    Json report;
    report["schema"] = 1;
    report["mode"] = run_mode_name(config.mode);
    report["seed"] = config.seed;
    RunOutcome outcome;
    auto fail = [&](int status, const std::string& kind, const std::string& msg, std::size_t line) {
        outcome.status = status;
        outcome.message = msg;
        outcome.line = line;
        Json err{{"kind", kind}, {"message", msg}};
        if (line) err["line"] = line;
        report["error"] = err;
    };
    try {
        if (config.mode == RunMode::bounds_only) {
            if (config.n < 1) throw ValidationError("bounds-only needs n >= 1");
            unsigned m = config.m.value_or(config.n);
            if (m < 1 || m > config.n) throw ValidationError("bounds-only needs 1 <= m <= n");
            report["bounds"] = bound_block({config.n, m, config.d, config.r});
        } else {
            PolynomialFile file = parse_polynomial_file(input, config.order);
            if (config.mode == RunMode::unmixed_only) {
                run_unmixed(config, file, report);
            } else {
                bool internal = false;
                run_decompose(config, file, report, internal);
                if (internal) fail(2, "internal", "an index set hit an internal-consistency fault", 0);
            }
        }
    } catch (const ParseError& e) {
        fail(1, "parse", e.what(), e.line());
    } catch (const InternalFault& e) {
        fail(2, "internal", e.what(), 0);
    } catch (const std::invalid_argument& e) {
        fail(1, "invalid", e.what(), 0);
    } catch (const std::exception& e) {
        fail(2, "internal", e.what(), 0);
    }
    outcome.report = report.dump(2) + "\n";
    return outcome;
}

}  // namespace tridec
