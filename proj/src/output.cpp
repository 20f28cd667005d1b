#include "specdom/output.hpp"

#include <stdexcept>

#include "specdom/digest.hpp"

namespace specdom {

namespace {

std::string seed_str(std::uint64_t seed) { return std::to_string(seed); }

std::uint64_t seed_parse(const std::string& s) {
    try {
        std::size_t used = 0;
        const unsigned long long v = std::stoull(s, &used);
        if (used != s.size()) throw std::invalid_argument("trail");
        return static_cast<std::uint64_t>(v);
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed seed: " + s);
    }
}

RadicalMode mode_from_name(const std::string& s) {
    if (s == mode_name(RadicalMode::full_radical)) return RadicalMode::full_radical;
    if (s == mode_name(RadicalMode::certified_members))
        return RadicalMode::certified_members;
    throw std::invalid_argument("unknown radical mode: " + s);
}

Json derivation_json(const DerivationNode& d) {
    Json j;
    if (const auto* jac = std::get_if<JacobianMix>(&d)) {
        j["kind"] = "jacobian";
        j["k"] = jac->k;
        Json rows = Json::array();
        for (const auto& row : jac->combos) {
            Json r = Json::array();
            for (const auto& c : row) r.push_back(to_string(c));
            rows.push_back(std::move(r));
        }
        j["combos"] = std::move(rows);
        j["children"] = jac->children;
    } else if (const auto* rad = std::get_if<RadicalRoot>(&d)) {
        j["kind"] = "radical";
        j["m"] = rad->m;
        j["gamma_member"] = to_string(rad->gamma_member);
    } else {
        j["kind"] = "inherited";
        j["child"] = std::get<Inherited>(d).child;
    }
    return j;
}

DerivationNode derivation_from_json(const Json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "jacobian") {
        JacobianMix jac;
        jac.k = j.at("k").get<int>();
        for (const auto& row : j.at("combos")) {
            std::vector<Rational> r;
            for (const auto& c : row) r.push_back(rat_from_string(c.get<std::string>()));
            jac.combos.push_back(std::move(r));
        }
        jac.children = j.at("children").get<std::vector<int>>();
        return jac;
    }
    if (kind == "radical") {
        RadicalRoot rad;
        rad.m = j.at("m").get<int>();
        rad.gamma_member = rat_from_string(j.at("gamma_member").get<std::string>());
        return rad;
    }
    if (kind == "inherited") {
        Inherited inh;
        inh.child = j.at("child").get<int>();
        return inh;
    }
    throw std::invalid_argument("unknown derivation kind: " + kind);
}

Json generator_json(const OrderedGenerator& g, const std::vector<std::string>& names) {
    Json j;
    j["poly"] = g.poly.to_string(names);
    j["order"] = to_string(g.order);
    j["derivation"] = derivation_json(g.derivation);
    return j;
}

OrderedGenerator generator_from_json(const Json& j,
                                     const std::vector<std::string>& names) {
    return OrderedGenerator{parse_polynomial(j.at("poly").get<std::string>(), names),
                            rat_from_string(j.at("order").get<std::string>()),
                            derivation_from_json(j.at("derivation"))};
}

std::string monomial_str(const Monomial& m, const std::vector<std::string>& names) {
    return Polynomial::from_term(m.nvars(), m, rat(1)).to_string(names);
}

}  // namespace

Json domain_json(const DomainFile& f) {
    Json j;
    j["variables"] = f.variables;
    Json hs = Json::array();
    for (const auto& h : f.h) hs.push_back(h.to_string(f.variables));
    j["h"] = std::move(hs);
    return j;
}

Json run_config_json(const RunConfig& c) {
    Json j;
    j["max_level"] = c.max_level;
    j["m_max"] = c.m_max;
    j["generator_cap"] = c.generator_cap;
    j["random_combos"] = c.random_combos;
    j["seed"] = seed_str(c.seed);
    return j;
}

RunConfig run_config_from_json(const Json& j) {
    RunConfig c;
    c.max_level = j.at("max_level").get<int>();
    c.m_max = j.at("m_max").get<int>();
    c.generator_cap = j.at("generator_cap").get<int>();
    c.random_combos = j.at("random_combos").get<int>();
    c.seed = seed_parse(j.at("seed").get<std::string>());
    return c;
}

Json certificate_json(const Certificate& c, const std::vector<std::string>& names) {
    Json j;
    j["outcome"] = c.outcome == Outcome::subelliptic ? "subelliptic" : "exhausted";
    j["epsilon"] = to_string(c.epsilon);
    j["witness_level"] = c.witness_level;
    j["witness_index"] = c.witness_index;
    j["witness"] = c.witness ? generator_json(*c.witness, names) : Json(nullptr);
    j["config"] = run_config_json(c.config);
    Json levels = Json::array();
    for (const auto& rec : c.history) {
        Json r;
        r["level"] = rec.level;
        r["mode"] = mode_name(rec.mode);
        Json js = Json::array();
        for (const auto& g : rec.J) js.push_back(generator_json(g, names));
        r["J"] = std::move(js);
        Json jts = Json::array();
        for (const auto& g : rec.J_tilde) jts.push_back(generator_json(g, names));
        r["J_tilde"] = std::move(jts);
        levels.push_back(std::move(r));
    }
    j["history"] = std::move(levels);
    j["warnings"] = c.warnings;
    j["input_digest"] = digest_hex(c.input_digest);
    j["history_digest"] = digest_hex(c.history_digest);
    return j;
}

Certificate certificate_from_json(const Json& j, const std::vector<std::string>& names) {
    Certificate c;
    const std::string outcome = j.at("outcome").get<std::string>();
    if (outcome == "subelliptic")
        c.outcome = Outcome::subelliptic;
    else if (outcome == "exhausted")
        c.outcome = Outcome::exhausted;
    else
        throw std::invalid_argument("unknown outcome: " + outcome);
    c.epsilon = rat_from_string(j.at("epsilon").get<std::string>());
    c.witness_level = j.at("witness_level").get<int>();
    c.witness_index = j.at("witness_index").get<int>();
    if (!j.at("witness").is_null())
        c.witness = generator_from_json(j.at("witness"), names);
    c.config = run_config_from_json(j.at("config"));
    for (const auto& r : j.at("history")) {
        LevelRecord rec;
        rec.level = r.at("level").get<int>();
        rec.mode = mode_from_name(r.at("mode").get<std::string>());
        for (const auto& g : r.at("J")) rec.J.push_back(generator_from_json(g, names));
        for (const auto& g : r.at("J_tilde"))
            rec.J_tilde.push_back(generator_from_json(g, names));
        c.history.push_back(std::move(rec));
    }
    c.warnings = j.at("warnings").get<std::vector<std::string>>();
    c.input_digest = digest_parse(j.at("input_digest").get<std::string>());
    c.history_digest = digest_parse(j.at("history_digest").get<std::string>());
    return c;
}

Json type_config_json(const TypeConfig& c) {
    Json j;
    j["p_cap"] = c.p_cap;
    j["exponent_cap"] = c.exponent_cap;
    j["samples"] = c.samples;
    j["seed"] = seed_str(c.seed);
    return j;
}

Json type_report_json(const TypeReport& r) {
    Json j;
    j["zero_dim"] = r.zero_dim;
    j["p"] = r.p ? Json(*r.p) : Json(nullptr);
    j["p_cap"] = r.p_cap;
    Json t;
    t["infinite"] = r.t_hat.infinite;
    t["value"] = r.t_hat.infinite ? Json(nullptr) : Json(to_string(r.t_hat.value));
    if (r.t_hat.witness) {
        Json w;
        Json cs = Json::array();
        for (const auto& c : r.t_hat.witness->c) cs.push_back(to_string(c));
        w["c"] = std::move(cs);
        w["a"] = r.t_hat.witness->a;
        t["witness"] = std::move(w);
    } else {
        t["witness"] = nullptr;
    }
    j["t_hat"] = std::move(t);
    j["q_hat"] = r.q_hat ? Json(*r.q_hat) : Json(nullptr);
    Json checks = Json::array();
    for (const auto& [name, pass] : r.inequality_checks) {
        Json chk;
        chk["name"] = name;
        chk["pass"] = pass;
        checks.push_back(std::move(chk));
    }
    j["checks"] = std::move(checks);
    return j;
}

Json matsusaka_json(const MatsusakaInput& inp, const MatsusakaBound& b) {
    Json j;
    j["n"] = inp.n;
    j["LK"] = inp.LK.get_str();
    j["Ln"] = inp.Ln.get_str();
    j["c_n"] = b.c_n.get_str();
    j["ktilde_l_coefficient"] = b.ktilde_l_coefficient.get_str();
    j["exponent"] = b.exponent.get_str();
    j["bound"] = to_string(b.bound);
    return j;
}

Json enclosure_json(const Enclosure& e, const Rational& max_width) {
    Json j;
    j["lo"] = to_string(e.lo);
    j["hi"] = to_string(e.hi);
    j["width"] = to_string(e.width());
    j["max_width"] = to_string(max_width);
    return j;
}

Json skoda_json(const SkodaExponents& s) {
    Json j;
    j["n"] = s.n;
    j["k"] = s.k;
    j["p_given"] = s.p_given;
    j["p"] = s.p;
    j["alpha"] = to_string(s.alpha);
    j["q"] = s.q;
    j["inner_exponent"] = s.inner_exponent.get_str();
    j["outer_exponent"] = s.outer_exponent.get_str();
    return j;
}

Json generation_json(const GradedMonomialRing& ring, const GenerationResult& g,
                     const std::vector<std::string>& names) {
    Json j;
    j["nvars"] = ring.nvars;
    j["truncation"] = ring.truncation;
    j["degree"] = g.degree;
    Json ws = Json::array();
    for (const auto& w : g.witnesses) {
        Json one;
        one["degree"] = w.degree;
        one["element"] = monomial_str(w.element, names);
        one["d1"] = w.d1;
        one["left"] = monomial_str(w.left, names);
        one["right"] = monomial_str(w.right, names);
        ws.push_back(std::move(one));
    }
    j["witnesses"] = std::move(ws);
    return j;
}

Json run_document(const std::string& command, Json payload) {
    payload["schema"] = "specdom-run/1";
    payload["command"] = command;
    return payload;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace specdom
