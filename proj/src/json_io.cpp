#include "atomlab/json_io.hpp"

namespace atomlab {

json to_json(const Presentation& pres) {
    json j;
    j["family"] = family_name(pres.family());
    json params = json::object();
    switch (pres.family()) {
    case Family::Gp: params["p"] = pres.base_prime().str(); break;
    case Family::CyclicSq: params["q"] = pres.q().str(); break;
    case Family::Explicit: {
        json gens = json::array();
        for (const Rational& g : pres.explicit_generators()) gens.push_back(g.str());
        params["generators"] = gens;
        break;
    }
    default: break;
    }
    j["params"] = params;
    j["depth"] = pres.depth();
    return j;
}

Presentation presentation_from_json(const json& j) {
    Family fam = family_from_name(j.at("family").get<std::string>());
    int depth = j.at("depth").get<int>();
    json params = j.value("params", json::object());
    switch (fam) {
    case Family::Explicit: {
        std::vector<Rational> gens;
        for (const auto& g : params.at("generators")) gens.push_back(Rational::parse(g.get<std::string>()));
        return Presentation::explicit_gens(std::move(gens), depth);
    }
    case Family::Grams: return Presentation::grams(depth);
    case Family::Gp: return Presentation::gp(Int(params.at("p").get<std::string>()), depth);
    case Family::CyclicSq: return Presentation::cyclic_sq(Rational::parse(params.at("q").get<std::string>()), depth);
    case Family::PairPrimes: return Presentation::pair_primes(depth);
    case Family::RankTwoP: return Presentation::rank_two_p(depth);
    case Family::IntersectG1: return Presentation::intersect_g(1, depth);
    case Family::IntersectG2: return Presentation::intersect_g(2, depth);
    case Family::Zaks: return Presentation::zaks(depth);
    }
    throw std::invalid_argument("presentation_from_json: bad family");
}

json to_json(const MonoidValue& v) { return v.str(); }

json to_json(const Factorization& f) {
    json j = json::array();
    for (const auto& [a, m] : f.atom_multiset) {
        json entry;
        entry["atom"] = a.str();
        entry["multiplicity"] = m.str();
        j.push_back(entry);
    }
    return j;
}

json to_json(const ChainCertificate& cert) {
    json j;
    j["start"] = cert.start.str();
    json terms = json::array();
    for (const MonoidValue& t : cert.terms) terms.push_back(t.str());
    j["terms"] = terms;
    json quotients = json::array();
    for (const MonoidValue& q : cert.quotients) quotients.push_back(q.str());
    j["quotients"] = quotients;
    j["rule"] = chain_rule_name(cert.rule);
    j["rule_param"] = cert.rule_param.str();
    return j;
}

ChainCertificate chain_from_json(const json& j) {
    ChainCertificate cert;
    cert.start = MonoidValue::parse(j.at("start").get<std::string>());
    for (const auto& t : j.at("terms")) cert.terms.push_back(MonoidValue::parse(t.get<std::string>()));
    for (const auto& q : j.at("quotients"))
        cert.quotients.push_back(MonoidValue::parse(q.get<std::string>()));
    cert.rule = chain_rule_from_name(j.value("rule", "none"));
    cert.rule_param = Int(j.value("rule_param", "0"));
    return cert;
}

json to_json(const AccpVerdict& v) {
    json j;
    switch (v.kind) {
    case AccpVerdict::Kind::Satisfies:
        j["verdict"] = "satisfies";
        j["reason"] = satisfies_reason_name(v.reason);
        break;
    case AccpVerdict::Kind::Fails:
        j["verdict"] = "fails";
        break;
    case AccpVerdict::Kind::Unknown:
        j["verdict"] = "unknown";
        break;
    }
    if (v.cert) j["certificate"] = to_json(*v.cert);
    if (v.length_bound) j["length_bound"] = v.length_bound->str();
    j["depth"] = v.depth;
    if (!v.note.empty()) j["note"] = v.note;
    return j;
}

json to_json(const WeakAccpWitness& w) {
    json j;
    switch (w.status) {
    case WeakAccpWitness::Status::Found: j["status"] = "found"; break;
    case WeakAccpWitness::Status::RefutedExhaustive: j["status"] = "refuted-exhaustive"; break;
    case WeakAccpWitness::Status::Unknown: j["status"] = "unknown"; break;
    }
    if (w.status == WeakAccpWitness::Status::Found) {
        j["d"] = w.d.str();
        j["s"] = w.s.str();
        if (w.residual_verdict) j["residual"] = to_json(*w.residual_verdict);
    }
    j["evidence"] = w.evidence;
    j["depth"] = w.depth;
    return j;
}

json to_json(const TaxonomyReport& r) {
    json j;
    j["accp"] = flag_name(r.accp);
    j["weak_accp"] = flag_name(r.weak_accp);
    j["strongly_atomic"] = flag_name(r.strongly_atomic);
    j["atomic"] = flag_name(r.atomic);
    j["depth"] = r.depth;
    j["evidence"] = r.evidence;
    if (r.accp_chain) j["accp_chain"] = to_json(*r.accp_chain);
    return j;
}

json to_json(const GramsDecomposition& d) {
    json j;
    j["q_part"] = d.q_part.str();
    json coeffs = json::object();
    for (const auto& [n, c] : d.coeffs) coeffs[std::to_string(n)] = c.str();
    j["coeffs"] = coeffs;
    return j;
}

json to_json(const PDecomposition& d) {
    json j;
    j["n0"] = d.n0.str();
    json coeffs = json::object();
    for (const auto& [n, c] : d.coeffs) coeffs[std::to_string(n)] = c.str();
    j["coeffs"] = coeffs;
    return j;
}

json to_json(const ShiftedDecomposition& d) {
    json j;
    j["n"] = d.n.str();
    json coeffs = json::object();
    for (const auto& [n, c] : d.coeffs) coeffs[std::to_string(n)] = c.str();
    j["coeffs"] = coeffs;
    return j;
}

namespace {

void markdown_value(std::string& out, const json& v, int indent) {
    std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    if (v.is_object()) {
        for (const auto& [k, val] : v.items()) {
            if (val.is_object() || val.is_array()) {
                out += pad + "- " + k + ":\n";
                markdown_value(out, val, indent + 1);
            } else {
                out += pad + "- " + k + ": " + (val.is_string() ? val.get<std::string>() : val.dump()) + "\n";
            }
        }
    } else if (v.is_array()) {
        for (const auto& val : v) {
            if (val.is_object() || val.is_array()) {
                out += pad + "-\n";
                markdown_value(out, val, indent + 1);
            } else {
                out += pad + "- " + (val.is_string() ? val.get<std::string>() : val.dump()) + "\n";
            }
        }
    } else {
        out += pad + (v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
    }
}

} // namespace

std::string markdown_digest(const json& report) {
    std::string out;
    for (const auto& [k, v] : report.items()) {
        out += "## " + k + "\n\n";
        markdown_value(out, v, 0);
        out += "\n";
    }
    return out;
}

} // namespace atomlab
