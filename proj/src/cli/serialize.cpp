#include "cantor/cli.hpp"
#include "json_util.hpp"

namespace cantor::cli {

Json document(const char* command) {
    Json j;
    j["schema"] = kSchema;
    j["command"] = command;
    return j;
}

Json exact_json(const ExactLogValue& v, int precision) {
    Json j;
    j["decimal"] = v.decimal(precision);
    j["precision"] = precision;
    j["symbolic"] = v.symbolic();
    if (v.is_finite()) {
        j["radicand"] = to_string(v.radicand());
        j["root"] = v.root();
        if (v.exponent()) {
            j["scale"] = to_string(v.scale());
            j["exponent"] = v.exponent()->symbolic();
        }
    }
    return j;
}

Json exponent_json(const LogExponent& e, int precision) {
    PrecisionScope scope(static_cast<unsigned>(precision) + 20);
    Json j;
    j["decimal"] = format_real(e.value(), precision);
    j["precision"] = precision;
    j["symbolic"] = e.symbolic();
    j["base"] = e.base().str();
    j["arg"] = e.arg().str();
    return j;
}

Json digit_set_json(const DigitSet& ds) {
    Json j;
    j["n"] = ds.base();
    j["digits"] = ds.digits();
    j["m"] = ds.size();
    return j;
}

Json translation_json(const NaryExpansion& t) {
    Json j;
    j["expansion"] = t.to_string();
    j["value"] = to_string(rational_from_expansion(t));
    return j;
}

Json membership_json(const FMembership& f) {
    Json j;
    j["verdict"] = to_string(f.verdict);
    j["used_twin"] = f.used_twin;
    j["empty_level"] = f.empty_level ? Json(*f.empty_level) : Json(nullptr);
    j["K"] = f.K;
    Json trace = Json::array();
    for (CaseState s : f.trace) trace.push_back(sigma_symbol(s));
    j["sigma"] = trace;
    return j;
}

namespace {

Json liminf_json(const LiminfResult& l, const CycleInfo* c, int precision) {
    Json j = exact_json(l.value, precision);
    if (c && !c->dead && l.argmin_k >= c->k0 && l.argmin_k < c->k0 + c->p) {
        Json w;
        w["k"] = l.argmin_k;
        w["mu"] = c->witnesses[l.argmin_k - c->k0].second.str();
        w["P"] = c->P.str();
        w["p"] = c->p;
        j["witness"] = w;
    }
    return j;
}

Json bound_json(const std::optional<ExactLogValue>& v, const std::string& source, int precision) {
    if (!v) return nullptr;
    Json j = exact_json(*v, precision);
    j["source"] = source;
    return j;
}

}  // namespace

Json report_object(const MeasureReport& r, const NaryExpansion* t, int precision) {
    Json j;
    j["route"] = to_string(r.route);
    j["kind"] = to_string(r.kind);
    if (t) j["t"] = translation_json(*t);
    j["s"] = r.s ? exponent_json(*r.s, precision) : Json(nullptr);
    j["beta"] = r.beta ? exponent_json(*r.beta, precision) : Json(nullptr);
    const CycleInfo* c = r.cycle ? &*r.cycle : nullptr;
    j["L"] = r.L ? liminf_json(*r.L, c, precision) : Json(nullptr);
    j["L_tilde"] = r.L_tilde ? liminf_json(*r.L_tilde, c, precision) : Json(nullptr);
    j["lower_bound"] = bound_json(r.lower, r.lower_source, precision);
    j["upper_bound"] = bound_json(r.upper, r.upper_source, precision);
    j["point_count"] = r.point_count ? Json(r.point_count->str()) : Json(nullptr);

    Json flags;
    flags["set_empty"] = r.set_empty;
    flags["L_zero"] = r.L_zero;
    flags["L_infinite"] = r.L_infinite;
    flags["horizon_limited"] = r.horizon_limited;
    flags["upper_not_tight"] = r.upper_not_tight;
    flags["membership_unknown"] = r.membership_unknown;
    j["flags"] = flags;

    if (c) {
        Json cy;
        cy["k0"] = c->k0;
        cy["p"] = c->p;
        cy["P"] = c->P.str();
        cy["dead"] = c->dead;
        Json ws = Json::array();
        for (std::size_t i = 0; i < c->witnesses.size(); ++i) {
            Json w;
            w["k"] = c->witnesses[i].first;
            w["mu"] = c->witnesses[i].second.str();
            w["scaled_ell"] = c->scaled_ell[i] ? Json(to_string(*c->scaled_ell[i])) : Json(nullptr);
            ws.push_back(w);
        }
        cy["witnesses"] = ws;
        j["cycle"] = cy;
    }
    if (r.level) {
        Json f;
        f["k"] = *r.level;
        f["a"] = r.copies ? r.copies->str() : "0";
        j["finite"] = f;
    }
    if (r.edits) {
        Json e;
        e["verdict"] = to_string(r.edits->verdict);
        e["ratio_per_period"] = to_string(r.edits->ratio_per_period);
        e["j_period"] = r.edits->j_period;
        j["edits"] = e;
    }
    if (r.horizon) {
        const HorizonEstimate& h = *r.horizon;
        Json hz;
        hz["K"] = h.K;
        hz["dead"] = h.dead;
        if (!h.dead) {
            hz["beta"] = exponent_json(h.beta, precision);
            hz["beta_argmin"] = h.beta_argmin;
            hz["L"] = h.L ? exact_json(*h.L, precision) : Json(nullptr);
            hz["L_argmin"] = h.L_argmin;
        }
        hz["trend"] = to_string(h.trend);
        j["horizon"] = hz;
    }
    if (!r.oracle_levels.empty()) {
        Json levels = Json::array();
        for (const auto& l : r.oracle_levels) {
            Json row;
            row["k"] = l.k;
            row["interval"] = l.counts.interval;
            row["potential"] = l.counts.potential;
            row["potentially_empty"] = l.counts.potentially_empty;
            row["empty"] = l.counts.empty;
            levels.push_back(row);
        }
        j["oracle_levels"] = levels;
        j["note"] = "formula-mode bounds suppressed: D is not sparse";
    }
    return j;
}

std::string report_json(const MeasureReport& r, const NaryExpansion* t, int precision) {
    return report_object(r, t, precision).dump(2);
}

Json cover_object(const DigitSet&, const CoverBound& c) {
    Json j;
    j["depth"] = c.depth;
    j["s"] = c.s_symbolic;
    j["cost"] = c.cost_decimal;
    j["block_count"] = c.blocks.size();
    Json blocks = Json::array();
    for (const auto& b : c.blocks) blocks.push_back(Json::array({b.start.str(), b.width.str()}));
    j["blocks"] = blocks;
    return j;
}

std::string cover_json(const DigitSet& ds, const CoverBound& c) { return cover_object(ds, c).dump(2); }

Json dense_json(const DenseApproximant& a, int precision) {
    Json j;
    std::string digits;
    for (std::size_t i = 0; i < a.digits.size(); ++i) {
        if (i) digits += ',';
        digits += std::to_string(a.digits[i]);
    }
    j["digits"] = digits;
    j["copied"] = a.copied;
    j["reset_level"] = a.reset_level;
    j["reset_digit"] = a.reset_digit;
    j["first_dm"] = a.first_dm ? Json(*a.first_dm) : Json(nullptr);
    j["prefix_value"] = to_string(a.prefix_value);
    j["rule"] = "x_{j+1} = 0 if m^(nu(j) - j*beta) <= y, else d_m";
    Json cert;
    cert["distance"] = a.distance_certified;
    cert["greedy"] = a.greedy_certified;
    cert["sigma"] = a.sigma_certified;
    cert["band"] = a.band_certified;
    cert["liminf_in_band"] = a.liminf_in_band;
    j["certified"] = cert;
    j["liminf_estimate"] = a.liminf_estimate ? exact_json(*a.liminf_estimate, precision) : Json(nullptr);
    j["horizon_limited"] = a.horizon_limited;
    return j;
}

}  // namespace cantor::cli
