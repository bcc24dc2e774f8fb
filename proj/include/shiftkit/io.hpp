#pragma once

// JSON bindings for the domain types.  Rationals travel as exact strings
// ("24/35"); outputs also carry a 12-significant-digit decimal rendering.
// Enclosures are rendered with outward rounding so the printed interval
// still contains the true value.

#include "shiftkit/berger.hpp"
#include "shiftkit/extension.hpp"
#include "shiftkit/hankel.hpp"
#include "shiftkit/interval.hpp"
#include "shiftkit/perturb.hpp"
#include "shiftkit/quad.hpp"
#include "shiftkit/rational.hpp"
#include "shiftkit/shifts.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace shiftkit {

using nlohmann::json;

// ---------------------------------------------------------------------------
// rationals

// Accepts exact strings ("1/2", "0.645", "1e-9") and integers.  Non-integer
// JSON numbers are rejected: they have already been rounded to binary.
inline BigRational rational_from_json(const json& v) {
    if (v.is_string()) return parse_number(v.get<std::string>());
    if (v.is_number_integer()) return BigRational(BigInt(v.get<long long>()));
    if (v.is_number())
        throw error("non-integer JSON numbers are inexact; pass \"" + v.dump() +
                    "\" as a string instead");
    throw error("expected a rational as string or integer, got " + v.dump());
}

inline json rational_to_json(const BigRational& q) {
    return json{{"exact", rat_to_string(q)}, {"decimal", decimal_string(q)}};
}

inline json rational_list_to_json(const std::vector<BigRational>& qs) {
    json a = json::array();
    for (const auto& q : qs) a.push_back(rational_to_json(q));
    return a;
}

inline json enclosure_to_json(const Enclosure& e) {
    if (e.exact()) return rational_to_json(e.lo);
    return json{{"enclosure",
                 {decimal_string(e.lo, 12, Round::down), decimal_string(e.hi, 12, Round::up)}}};
}

// ---------------------------------------------------------------------------
// weight sequences

inline std::vector<BigRational> rational_vector_from_json(const json& a, const char* what) {
    if (!a.is_array()) throw error(std::string(what) + " must be an array");
    std::vector<BigRational> out;
    out.reserve(a.size());
    for (const auto& v : a) out.push_back(rational_from_json(v));
    return out;
}

inline WeightSequence weight_sequence_from_json(const json& j) {
    if (!j.is_object() || !j.contains("prefix_sq") || !j.contains("tail"))
        throw error("weight sequence needs \"prefix_sq\" and \"tail\"");
    auto prefix = rational_vector_from_json(j["prefix_sq"], "prefix_sq");
    const json& t = j["tail"];
    if (!t.is_object() || !t.contains("kind")) throw error("tail needs a \"kind\"");
    std::string kind = t["kind"].get<std::string>();
    if (kind == "constant") {
        if (!t.contains("c")) throw error("constant tail needs \"c\"");
        return WeightSequence(std::move(prefix), ConstantTail{rational_from_json(t["c"])});
    }
    if (kind == "recursive") {
        if (!t.contains("phi")) throw error("recursive tail needs \"phi\"");
        return WeightSequence(std::move(prefix),
                              RecursiveTail{rational_vector_from_json(t["phi"], "phi")});
    }
    if (kind == "rational_in_n") {
        if (!t.contains("num") || !t.contains("den"))
            throw error("rational_in_n tail needs \"num\" and \"den\"");
        return WeightSequence(
            std::move(prefix),
            RationalInNTail{RationalPolynomial(rational_vector_from_json(t["num"], "num")),
                            RationalPolynomial(rational_vector_from_json(t["den"], "den"))});
    }
    throw error("unknown tail kind \"" + kind + "\"");
}

inline json coeff_list_to_json(const RationalPolynomial& p) {
    json a = json::array();
    for (const auto& c : p.coeffs()) a.push_back(rat_to_string(c));
    return a;
}

inline json weight_sequence_to_json(const WeightSequence& seq) {
    json j;
    j["prefix_sq"] = json::array();
    for (const auto& q : seq.prefix_sq()) j["prefix_sq"].push_back(rat_to_string(q));
    json t;
    if (const auto* c = std::get_if<ConstantTail>(&seq.tail())) {
        t["kind"] = "constant";
        t["c"] = rat_to_string(c->c);
    } else if (const auto* r = std::get_if<RecursiveTail>(&seq.tail())) {
        t["kind"] = "recursive";
        t["phi"] = json::array();
        for (const auto& q : r->phi) t["phi"].push_back(rat_to_string(q));
    } else {
        const auto& rn = std::get<RationalInNTail>(seq.tail());
        t["kind"] = "rational_in_n";
        t["num"] = coeff_list_to_json(rn.num);
        t["den"] = coeff_list_to_json(rn.den);
    }
    j["tail"] = std::move(t);
    return j;
}

// ---------------------------------------------------------------------------
// recursion specs and measures

// {"phi": [...], "gamma": [...]} -- gamma lists the seed moments
inline RecursionSpec recursion_spec_from_json(const json& j) {
    if (!j.is_object() || !j.contains("phi") || !j.contains("gamma"))
        throw error("recursion spec needs \"phi\" and \"gamma\"");
    RecursionSpec spec{rational_vector_from_json(j["phi"], "phi"),
                       rational_vector_from_json(j["gamma"], "gamma")};
    validate_spec(spec);
    return spec;
}

inline json recursion_spec_to_json(const RecursionSpec& spec) {
    json j;
    j["phi"] = json::array();
    for (const auto& q : spec.phi) j["phi"].push_back(rat_to_string(q));
    j["gamma"] = json::array();
    for (const auto& q : spec.seed_gammas) j["gamma"].push_back(rat_to_string(q));
    return j;
}

inline json measure_to_json(const AtomicMeasure& mu) {
    json j;
    j["atoms"] = json::array();
    for (const auto& a : mu.atoms) j["atoms"].push_back(enclosure_to_json(a));
    j["densities"] = json::array();
    for (const auto& d : mu.densities) j["densities"].push_back(enclosure_to_json(d));
    j["valid"] = mu.valid;
    j["atom_at_origin"] = mu.atom_at_origin;
    j["negative_atom"] = mu.negative_atom;
    return j;
}

// ---------------------------------------------------------------------------
// verdicts and reports

inline json khypo_to_json(const KHypoVerdict& v) {
    json j;
    j["k"] = v.k;
    j["N"] = v.N;
    switch (v.kind) {
        case KHypoVerdict::Kind::holds_up_to: j["verdict"] = "holds_up_to"; break;
        case KHypoVerdict::Kind::holds_for_all: j["verdict"] = "holds_for_all"; break;
        case KHypoVerdict::Kind::fails:
            j["verdict"] = "fails";
            j["n"] = v.n;
            j["witness_det"] = rat_to_string(v.witness_det);
            break;
    }
    return j;
}

inline json qh_to_json(const QhVerdict& v, size_t N) {
    json j;
    j["N"] = N;
    j["verdict"] = v.holds ? "holds_up_to" : "fails";
    if (!v.holds) {
        j["n"] = v.n;
        j["witness_t"] = rat_to_string(v.witness_t);
    }
    return j;
}

inline json pqh_to_json(const PqhVerdict& v, size_t N) {
    json j;
    j["N"] = N;
    j["verdict"] = v.holds ? "holds_up_to" : "fails";
    if (!v.holds) {
        j["n"] = v.n;
        j["i"] = v.i;
        j["coefficient"] = rat_to_string(v.value);
    }
    return j;
}

inline json subnormality_to_json(const SubnormalityReport& r) {
    const char* verdict = r.verdict == Tri::yes ? "yes" : r.verdict == Tri::no ? "no" : "undecided";
    return json{{"verdict", verdict}, {"reason", r.reason}};
}

inline json extension_to_json(const ExtensionReport& r) {
    json j;
    j["steps"] = r.steps;
    j["feasible"] = r.feasible;
    if (!r.feasible) {
        j["reason"] = r.reason;
        return j;
    }
    j["forced"] = rational_list_to_json(r.forced);
    j["last_bound"] = rational_to_json(r.last_bound);
    return j;
}

inline json interval_to_json(const IntervalResult& r) {
    auto side = [](const Enclosure& e, const BigRational& member, bool closed) {
        json s;
        s["enclosure"] = {decimal_string(e.lo, 12, Round::down),
                          decimal_string(e.hi, 12, Round::up)};
        s["member"] = rational_to_json(member);
        s["closed"] = closed;
        return s;
    };
    json j;
    j["lower"] = side(r.lower, r.lower_member, r.lower_closed);
    j["upper"] = side(r.upper, r.upper_member, r.upper_closed);
    j["tol"] = rat_to_string(r.tol);
    j["N"] = r.N;
    return j;
}

inline json modulus_to_json(const ModulusResult& r) {
    json j;
    j["value"] = enclosure_to_json(r.value);
    j["member"] = rational_to_json(r.member);
    j["backstep"] = rational_to_json(r.backstep);
    return j;
}

inline json gap_to_json(const GapWitness& g) {
    json j;
    j["x"] = rational_to_json(g.x);
    j["fail_n"] = g.fail_n;
    j["fail_det"] = rat_to_string(g.fail_det);
    return j;
}

}  // namespace shiftkit
