// specdom: exact multiplier-ideal runs, finite-type computation, and
// effective-bound evaluation over model domains, with replayable
// machine-readable certificates.

#include <CLI11.hpp>

#include <array>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "specdom/bounds.hpp"
#include "specdom/digest.hpp"
#include "specdom/domain_file.hpp"
#include "specdom/finite_type.hpp"
#include "specdom/groebner.hpp"
#include "specdom/kohn.hpp"
#include "specdom/output.hpp"

namespace {

using namespace specdom;

struct CommonValues {
    bool json = false;
    bool trace = false;
    bool timings = false;
    std::optional<std::uint64_t> seed;
    std::optional<int> max_level;
    std::optional<int> degree_cap;
};

void attach_common(CLI::App* sub, CommonValues& v) {
    sub->add_flag("--json", v.json, "machine-readable output");
    sub->add_flag("--trace", v.trace, "print the full level-by-level state");
    sub->add_flag("--timings", v.timings, "include wall-clock timing in the output");
    sub->add_option("--seed", v.seed, "RNG seed override");
    sub->add_option("--max-level", v.max_level, "level cap override");
    sub->add_option("--degree-cap", v.degree_cap, "polynomial degree cap override");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// ---- configuration resolution: defaults < environment < file < flags ----

std::optional<long long> env_int(const char* name, long long lo, long long hi) {
    const char* raw = std::getenv(name);
    if (!raw) return std::nullopt;
    try {
        std::size_t used = 0;
        const long long v = std::stoll(raw, &used);
        if (used != std::string(raw).size() || v < lo || v > hi)
            throw std::invalid_argument("range");
        return v;
    } catch (const std::exception&) {
        throw std::runtime_error(std::string("environment variable ") + name +
                                 " has an invalid value: " + raw);
    }
}

std::optional<std::uint64_t> env_u64(const char* name) {
    const char* raw = std::getenv(name);
    if (!raw) return std::nullopt;
    try {
        std::size_t used = 0;
        const unsigned long long v = std::stoull(raw, &used);
        if (used != std::string(raw).size()) throw std::invalid_argument("trail");
        if (std::string(raw).find('-') != std::string::npos)
            throw std::invalid_argument("sign");
        return static_cast<std::uint64_t>(v);
    } catch (const std::exception&) {
        throw std::runtime_error(std::string("environment variable ") + name +
                                 " has an invalid value: " + raw);
    }
}

RunConfig resolve_run_config(const DomainConfig& file, const CommonValues& cli) {
    RunConfig cfg;
    if (auto v = env_int("SPECDOM_MAX_LEVEL", 1, 1000000)) cfg.max_level = static_cast<int>(*v);
    if (auto v = env_int("SPECDOM_M_MAX", 1, 1000000)) cfg.m_max = static_cast<int>(*v);
    if (auto v = env_int("SPECDOM_GENERATOR_CAP", 1, 1000000))
        cfg.generator_cap = static_cast<int>(*v);
    if (auto v = env_int("SPECDOM_RANDOM_COMBOS", 0, 1000000))
        cfg.random_combos = static_cast<int>(*v);
    if (auto v = env_u64("SPECDOM_SEED")) cfg.seed = *v;
    if (file.max_level) cfg.max_level = *file.max_level;
    if (file.m_max) cfg.m_max = *file.m_max;
    if (file.generator_cap) cfg.generator_cap = *file.generator_cap;
    if (file.random_combos) cfg.random_combos = *file.random_combos;
    if (file.seed) cfg.seed = *file.seed;
    if (cli.max_level) cfg.max_level = *cli.max_level;
    if (cli.seed) cfg.seed = *cli.seed;
    return cfg;
}

TypeConfig resolve_type_config(const DomainConfig& file, const CommonValues& cli) {
    TypeConfig cfg;
    if (auto v = env_int("SPECDOM_P_CAP", 1, 1000000)) cfg.p_cap = static_cast<int>(*v);
    if (auto v = env_int("SPECDOM_EXPONENT_CAP", 1, 1000000))
        cfg.exponent_cap = static_cast<int>(*v);
    if (auto v = env_int("SPECDOM_SAMPLES", 0, 1000000)) cfg.samples = static_cast<int>(*v);
    if (auto v = env_u64("SPECDOM_SEED")) cfg.seed = *v;
    if (file.p_cap) cfg.p_cap = *file.p_cap;
    if (file.exponent_cap) cfg.exponent_cap = *file.exponent_cap;
    if (file.samples) cfg.samples = *file.samples;
    if (file.seed) cfg.seed = *file.seed;
    if (cli.seed) cfg.seed = *cli.seed;
    return cfg;
}

void resolve_degree_cap(const DomainConfig& file, const CommonValues& cli) {
    int cap = degree_cap();
    if (auto v = env_int("SPECDOM_DEGREE_CAP", 1, 1000000)) cap = static_cast<int>(*v);
    if (file.degree_cap) cap = *file.degree_cap;
    if (cli.degree_cap) cap = *cli.degree_cap;
    set_degree_cap(cap);
}

// The expressions inside a domain file are expanded under the degree cap, so
// the environment and --degree-cap must be in force before the file is read.
// Only the file's own config block cannot raise its parse-time cap.
void resolve_degree_cap_pre_parse(const CommonValues& cli) {
    int cap = degree_cap();
    if (auto v = env_int("SPECDOM_DEGREE_CAP", 1, 1000000)) cap = static_cast<int>(*v);
    if (cli.degree_cap) cap = *cli.degree_cap;
    set_degree_cap(cap);
}

// ---- shared output helpers ----------------------------------------------

void emit(const Json& doc) { std::cout << dump_json(doc); }

Json timing_json(double seconds) {
    Json t;
    // Millisecond string, not a float: documents stay digit-stable.
    t["milliseconds"] = std::to_string(static_cast<long long>(seconds * 1000.0));
    return t;
}

void print_warnings(const std::vector<std::string>& warnings) {
    for (const auto& w : warnings) std::cout << "warning: " << w << "\n";
}

// ---- kohn ----------------------------------------------------------------

void print_trace(const Certificate& cert, const std::vector<std::string>& names) {
    for (const auto& rec : cert.history) {
        std::cout << "level " << rec.level << " (" << mode_name(rec.mode) << ")\n";
        for (std::size_t i = 0; i < rec.J.size(); ++i)
            std::cout << "  J[" << i << "] = " << rec.J[i].poly.to_string(names)
                      << " @ " << to_string(rec.J[i].order) << "  ["
                      << derivation_signature(rec.J[i].derivation) << "]\n";
        for (std::size_t i = 0; i < rec.J_tilde.size(); ++i)
            std::cout << "  J~[" << i << "] = " << rec.J_tilde[i].poly.to_string(names)
                      << " @ " << to_string(rec.J_tilde[i].order) << "  ["
                      << derivation_signature(rec.J_tilde[i].derivation) << "]\n";
    }
}

int cmd_kohn(const std::string& path, const CommonValues& cv) {
    resolve_degree_cap_pre_parse(cv);
    const DomainFile f = parse_domain(read_file(path));
    resolve_degree_cap(f.config, cv);
    const SpecialDomain D = to_special_domain(f);
    const RunConfig cfg = resolve_run_config(f.config, cv);

    const auto t0 = std::chrono::steady_clock::now();
    const Certificate cert = run(D, cfg);
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;

    if (cv.json) {
        Json payload;
        payload["domain"] = domain_json(f);
        payload["input_digest"] = digest_hex(cert.input_digest);
        payload["config"] = run_config_json(cfg);
        payload["certificate"] = certificate_json(cert, f.variables);
        if (cv.timings) payload["timing"] = timing_json(dt.count());
        emit(run_document("kohn", std::move(payload)));
    } else {
        std::cout << "domain: " << D.n << (D.n == 1 ? " variable, " : " variables, ")
                  << D.count() << (D.count() == 1 ? " boundary function\n" : " boundary functions\n");
        if (cert.outcome == Outcome::subelliptic) {
            std::cout << "outcome: subelliptic\n"
                      << "epsilon: " << to_string(cert.epsilon) << "\n"
                      << "witness: level " << cert.witness_level << ", J~["
                      << cert.witness_index
                      << "] = " << cert.witness->poly.to_string(f.variables)
                      << " (order " << to_string(cert.witness->order) << ")\n";
        } else {
            std::cout << "outcome: exhausted\n";
        }
        std::cout << "levels run: " << cert.history.size() << "\n";
        print_warnings(cert.warnings);
        if (cv.trace) print_trace(cert, f.variables);
        if (cv.timings)
            std::cout << "time: " << static_cast<long long>(dt.count() * 1000.0)
                      << " ms\n";
    }
    return cert.outcome == Outcome::exhausted ? 2 : 0;
}

// ---- finite-type ---------------------------------------------------------

int cmd_finite_type(const std::string& path, const CommonValues& cv) {
    resolve_degree_cap_pre_parse(cv);
    const DomainFile f = parse_domain(read_file(path));
    resolve_degree_cap(f.config, cv);
    const SpecialDomain D = to_special_domain(f);
    const TypeConfig cfg = resolve_type_config(f.config, cv);

    const auto t0 = std::chrono::steady_clock::now();
    const TypeReport report = analyze_type(D, cfg);
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;

    if (cv.json) {
        Json payload;
        payload["domain"] = domain_json(f);
        payload["input_digest"] = digest_hex(domain_digest(D));
        payload["config"] = type_config_json(cfg);
        payload["type_report"] = type_report_json(report);
        if (cv.timings) payload["timing"] = timing_json(dt.count());
        emit(run_document("finite-type", std::move(payload)));
    } else {
        std::cout << "zero-dimensional: " << (report.zero_dim ? "yes" : "no") << "\n";
        if (report.p)
            std::cout << "finite type order p: " << *report.p << " (cap "
                      << report.p_cap << ")\n";
        else
            std::cout << "finite type order p: none up to cap " << report.p_cap << "\n";
        if (report.t_hat.infinite)
            std::cout << "type estimate: infinite\n";
        else
            std::cout << "type estimate: " << to_string(report.t_hat.value) << "\n";
        if (report.t_hat.witness) {
            std::cout << "  witness curve: c = (";
            for (std::size_t i = 0; i < report.t_hat.witness->c.size(); ++i)
                std::cout << (i ? ", " : "") << to_string(report.t_hat.witness->c[i]);
            std::cout << "), a = (";
            for (std::size_t i = 0; i < report.t_hat.witness->a.size(); ++i)
                std::cout << (i ? ", " : "") << report.t_hat.witness->a[i];
            std::cout << ")\n";
        }
        if (report.q_hat)
            std::cout << "q_hat: " << *report.q_hat << "\n";
        for (const auto& [name, pass] : report.inequality_checks)
            std::cout << "check " << name << ": " << (pass ? "pass" : "fail") << "\n";
    }
    return 0;
}

// ---- groebner ------------------------------------------------------------

Ideal file_ideal(const DomainFile& f) {
    return Ideal(f.h, MonomialOrder::grevlex());
}

int cmd_groebner(const std::string& mode, const std::string& path,
                 const std::string& poly_expr, const CommonValues& cv) {
    resolve_degree_cap_pre_parse(cv);
    const DomainFile f = parse_domain(read_file(path));
    resolve_degree_cap(f.config, cv);
    const Ideal I = file_ideal(f);

    Json payload;
    payload["domain"] = domain_json(f);

    if (mode == "gb") {
        Json basis = Json::array();
        for (const auto& b : I.basis()) basis.push_back(b.to_string(f.variables));
        if (cv.json) {
            payload["basis"] = std::move(basis);
            emit(run_document("groebner-gb", std::move(payload)));
        } else {
            for (const auto& b : I.basis())
                std::cout << b.to_string(f.variables) << "\n";
        }
        return 0;
    }

    if (poly_expr.empty())
        throw std::runtime_error("groebner " + mode + " requires --poly <expr>");
    const Polynomial p = parse_polynomial(poly_expr, f.variables);
    payload["poly"] = p.to_string(f.variables);

    if (mode == "nf") {
        const Polynomial r = normal_form(p, I);
        if (cv.json) {
            payload["normal_form"] = r.to_string(f.variables);
            emit(run_document("groebner-nf", std::move(payload)));
        } else {
            std::cout << r.to_string(f.variables) << "\n";
        }
        return 0;
    }
    if (mode == "member") {
        const bool yes = is_member(p, I);
        if (cv.json) {
            payload["member"] = yes;
            emit(run_document("groebner-member", std::move(payload)));
        } else {
            std::cout << (yes ? "member" : "not a member") << "\n";
        }
        return 0;
    }
    // radical-member
    const bool yes = is_radical_member(p, I);
    if (cv.json) {
        payload["radical_member"] = yes;
        emit(run_document("groebner-radical-member", std::move(payload)));
    } else {
        std::cout << (yes ? "radical member" : "not a radical member") << "\n";
    }
    return 0;
}

// ---- bounds --------------------------------------------------------------

int cmd_bounds_matsusaka(int n, const std::string& lk, const std::string& ln,
                         const CommonValues& cv) {
    MatsusakaInput inp;
    inp.n = n;
    try {
        inp.LK = Integer(lk);
        inp.Ln = Integer(ln);
    } catch (const std::exception&) {
        throw std::runtime_error("bounds matsusaka: --lk/--ln must be integers");
    }
    const MatsusakaBound b = matsusaka_bound(inp);
    if (cv.json) {
        emit(run_document("bounds-matsusaka", matsusaka_json(inp, b)));
    } else {
        std::cout << "C_n: " << b.c_n.get_str() << "\n"
                  << "K~_X L-coefficient: " << b.ktilde_l_coefficient.get_str() << "\n"
                  << "exponent: " << b.exponent.get_str() << "\n"
                  << "bound: " << to_string(b.bound) << "\n";
    }
    return 0;
}

int cmd_bounds_ot(const std::string& width, const CommonValues& cv) {
    const Rational w = rat_from_string(width);
    const Enclosure e = ot_constant(w);
    if (cv.json) {
        emit(run_document("bounds-ot", enclosure_json(e, w)));
    } else {
        std::cout << "enclosure: [" << to_string(e.lo) << ", " << to_string(e.hi)
                  << "]\n"
                  << "width: " << to_string(e.width()) << "\n";
    }
    return 0;
}

int cmd_bounds_skoda(int n, int k, std::optional<int> p, const CommonValues& cv) {
    const SkodaExponents s = p ? skoda_exponents(n, *p, k) : skoda_exponents(n, k);
    if (cv.json) {
        emit(run_document("bounds-skoda", skoda_json(s)));
    } else {
        std::cout << "alpha: " << to_string(s.alpha) << "\n"
                  << "q: " << s.q << "\n"
                  << "p (padded): " << s.p << "\n"
                  << "inner exponent: " << s.inner_exponent.get_str() << "\n"
                  << "outer exponent: " << s.outer_exponent.get_str() << "\n";
    }
    return 0;
}

std::vector<int> parse_int_list(const std::string& text, const char* what,
                                std::size_t want = 0) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument("trail");
        } catch (const std::exception&) {
            throw std::runtime_error(std::string(what) + ": malformed integer list '" +
                                     text + "'");
        }
    }
    if (out.empty() || (want != 0 && out.size() != want))
        throw std::runtime_error(std::string(what) + ": malformed integer list '" +
                                 text + "'");
    return out;
}

int cmd_bounds_generation(const std::string& semigroup, int polynomial_ring_vars,
                          const std::string& veronese, int truncation,
                          const std::string& check, const CommonValues& cv) {
    GradedMonomialRing ring;
    std::vector<std::string> names;
    const int selected = (semigroup.empty() ? 0 : 1) +
                         (polynomial_ring_vars > 0 ? 1 : 0) + (veronese.empty() ? 0 : 1);
    if (selected != 1)
        throw std::runtime_error(
            "bounds generation: choose exactly one of --semigroup, "
            "--polynomial-ring, --veronese");
    if (!semigroup.empty()) {
        ring = semigroup_ring(parse_int_list(semigroup, "--semigroup"), truncation);
        names = {"t"};
    } else if (polynomial_ring_vars > 0) {
        ring = polynomial_ring_model(polynomial_ring_vars, truncation);
        names = default_var_names(ring.nvars);
    } else {
        const auto nf = parse_int_list(veronese, "--veronese", 2);
        ring = veronese_model(nf[0], nf[1], truncation);
        names = default_var_names(ring.nvars);
    }

    const GenerationResult g = generation_degree(ring);
    Json payload = generation_json(ring, g, names);

    std::optional<bool> pass;
    int bound = 0;
    if (!check.empty()) {
        const auto nab = parse_int_list(check, "--check", 3);
        bound = (nab[0] + 2) * nab[1] + nab[2] - 1;
        pass = g.degree <= bound;
        Json c;
        c["n"] = nab[0];
        c["a"] = nab[1];
        c["b"] = nab[2];
        c["bound"] = bound;
        c["pass"] = *pass;
        payload["check"] = std::move(c);
    } else {
        payload["check"] = nullptr;
    }

    if (cv.json) {
        emit(run_document("bounds-generation", std::move(payload)));
    } else {
        std::cout << "generation degree: " << g.degree << " (truncation "
                  << ring.truncation << ", " << g.witnesses.size()
                  << " factorizations certified)\n";
        if (pass)
            std::cout << "bound " << bound << ": " << (*pass ? "pass" : "fail")
                      << "\n";
    }
    return 0;
}

// ---- replay --------------------------------------------------------------

int cmd_replay(const std::string& out_path, const std::string& dom_path,
               const CommonValues& cv) {
    Json doc;
    try {
        doc = Json::parse(read_file(out_path));
    } catch (const Json::parse_error& e) {
        throw std::runtime_error("cannot parse run document: " + std::string(e.what()));
    }
    if (doc.at("schema").get<std::string>() != "specdom-run/1")
        throw std::runtime_error("unsupported schema in run document");
    if (doc.at("command").get<std::string>() != "kohn")
        throw std::runtime_error("replay expects a kohn run document");

    const auto names = doc.at("domain").at("variables").get<std::vector<std::string>>();
    const Certificate cert = certificate_from_json(doc.at("certificate"), names);

    resolve_degree_cap_pre_parse(cv);
    const DomainFile f = parse_domain(read_file(dom_path));
    resolve_degree_cap(f.config, cv);
    const SpecialDomain D = to_special_domain(f);

    const ReplayReport rep = replay_explain(cert, D);
    if (cv.json) {
        Json payload;
        payload["ok"] = rep.ok;
        payload["divergence"] = rep.ok ? Json(nullptr) : Json(rep.divergence);
        emit(run_document("replay", std::move(payload)));
    } else if (rep.ok) {
        std::cout << "replay ok: certificate reproduced exactly\n";
    } else {
        std::cout << "replay mismatch: " << rep.divergence << "\n";
    }
    return rep.ok ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact multiplier-ideal toolkit for special model domains"};
    app.require_subcommand(1);
    int exit_code = 0;

    // kohn
    auto* kohn_sub = app.add_subcommand("kohn", "run the multiplier-ideal engine");
    std::string kohn_file;
    CommonValues kohn_cv;
    kohn_sub->add_option("file", kohn_file, "domain file")->required();
    attach_common(kohn_sub, kohn_cv);
    kohn_sub->callback([&] { exit_code = cmd_kohn(kohn_file, kohn_cv); });

    // finite-type
    auto* ft_sub = app.add_subcommand("finite-type", "compute the finite type order");
    std::string ft_file;
    CommonValues ft_cv;
    ft_sub->add_option("file", ft_file, "domain file")->required();
    attach_common(ft_sub, ft_cv);
    ft_sub->callback([&] { exit_code = cmd_finite_type(ft_file, ft_cv); });

    // groebner {gb|nf|member|radical-member}
    auto* gb_sub = app.add_subcommand("groebner", "Groebner-basis queries");
    gb_sub->require_subcommand(1);
    struct GMode {
        std::string file;
        std::string poly;
        CommonValues cv;
    };
    const std::array<const char*, 4> gmode_names = {"gb", "nf", "member",
                                                    "radical-member"};
    const std::array<const char*, 4> gmode_help = {
        "print the reduced basis", "normal form of --poly",
        "ideal membership of --poly", "radical membership of --poly"};
    std::array<GMode, 4> gmodes;
    for (std::size_t i = 0; i < gmodes.size(); ++i) {
        auto* m = gb_sub->add_subcommand(gmode_names[i], gmode_help[i]);
        GMode& slot = gmodes[i];
        m->add_option("file", slot.file, "domain file (generators h1..hN)")->required();
        m->add_option("--poly", slot.poly, "query polynomial expression");
        attach_common(m, slot.cv);
        const std::string mode = gmode_names[i];
        m->callback([&exit_code, &slot, mode] {
            exit_code = cmd_groebner(mode, slot.file, slot.poly, slot.cv);
        });
    }

    // bounds {matsusaka|ot|skoda|generation}
    auto* bounds_sub = app.add_subcommand("bounds", "effective-bound calculators");
    bounds_sub->require_subcommand(1);

    auto* mats = bounds_sub->add_subcommand("matsusaka");
    int mats_n = 1;
    std::string mats_lk = "1", mats_ln = "1";
    CommonValues mats_cv;
    mats->add_option("--n", mats_n, "dimension")->required();
    mats->add_option("--lk", mats_lk, "pairing L^{n-1}.K~_X");
    mats->add_option("--ln", mats_ln, "pairing L^n");
    attach_common(mats, mats_cv);
    mats->callback(
        [&] { exit_code = cmd_bounds_matsusaka(mats_n, mats_lk, mats_ln, mats_cv); });

    auto* ot = bounds_sub->add_subcommand("ot");
    std::string ot_width = "1/1000000";
    CommonValues ot_cv;
    ot->add_option("--width", ot_width, "maximum enclosure width (rational)");
    attach_common(ot, ot_cv);
    ot->callback([&] { exit_code = cmd_bounds_ot(ot_width, ot_cv); });

    auto* skoda = bounds_sub->add_subcommand("skoda");
    int skoda_n = 1, skoda_k = 1;
    std::optional<int> skoda_p;
    CommonValues skoda_cv;
    skoda->add_option("--n", skoda_n, "dimension")->required();
    skoda->add_option("--k", skoda_k, "slack")->required();
    skoda->add_option("--p", skoda_p, "function count before padding");
    attach_common(skoda, skoda_cv);
    skoda->callback(
        [&] { exit_code = cmd_bounds_skoda(skoda_n, skoda_k, skoda_p, skoda_cv); });

    auto* gen = bounds_sub->add_subcommand("generation");
    std::string gen_semigroup, gen_veronese, gen_check;
    int gen_polyring = 0, gen_trunc = 0;
    CommonValues gen_cv;
    gen->add_option("--semigroup", gen_semigroup, "semigroup generators, e.g. 2,3");
    gen->add_option("--polynomial-ring", gen_polyring, "variable count");
    gen->add_option("--veronese", gen_veronese, "nvars,factor");
    gen->add_option("--truncation", gen_trunc, "grading truncation")->required();
    gen->add_option("--check", gen_check, "bound data n,a,b");
    attach_common(gen, gen_cv);
    gen->callback([&] {
        exit_code = cmd_bounds_generation(gen_semigroup, gen_polyring, gen_veronese,
                                          gen_trunc, gen_check, gen_cv);
    });

    // replay
    auto* replay_sub = app.add_subcommand("replay", "audit a kohn run document");
    std::string replay_out, replay_dom;
    CommonValues replay_cv;
    replay_sub->add_option("output", replay_out, "run document (JSON)")->required();
    replay_sub->add_option("domain", replay_dom, "domain file")->required();
    attach_common(replay_sub, replay_cv);
    replay_sub->callback(
        [&] { exit_code = cmd_replay(replay_out, replay_dom, replay_cv); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}
