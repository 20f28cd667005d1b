#include "specdom/kohn.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <utility>

#include "specdom/digest.hpp"

namespace specdom {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Per-level engine so the draw sequence is independent of how many draws
// earlier levels consumed. Coefficients are drawn with plain modulo on
// the raw 64-bit stream: mt19937_64 output is fully specified by the
// standard, so runs are byte-identical across platforms.
std::mt19937_64 level_rng(std::uint64_t seed, int level) {
    return std::mt19937_64(splitmix(seed ^ splitmix(static_cast<std::uint64_t>(level))));
}

Rational draw_coefficient(std::mt19937_64& eng) {
    return rat(static_cast<long>(eng() % 19) - 9);  // [-9, 9]
}

Rational base_order() { return rat(1, 8); }

// All size-k index subsets of {0..m-1}, lexicographic.
std::vector<std::vector<int>> subsets(int m, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > m) return out;
    std::vector<int> cur(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = i;
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == m - k + i) --i;
        if (i < 0) break;
        ++cur[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
    }
    if (k == 0) out = {{}};
    return out;
}

Polynomial combo_poly(const SpecialDomain& D, const std::vector<Rational>& coeffs) {
    Polynomial s(D.n);
    for (int j = 0; j < D.count(); ++j)
        if (coeffs[static_cast<std::size_t>(j)] != 0)
            s = s + D.h[static_cast<std::size_t>(j)] * coeffs[static_cast<std::size_t>(j)];
    return s;
}

std::vector<Rational> unit_row(int len, int hot) {
    std::vector<Rational> row(static_cast<std::size_t>(len), rat(0));
    row[static_cast<std::size_t>(hot)] = rat(1);
    return row;
}

// Duplicate polynomials keep the best witnessed order; the first
// derivation reaching it stays recorded.
void insert_generator(std::vector<OrderedGenerator>& out, OrderedGenerator g) {
    for (auto& ex : out) {
        if (ex.poly == g.poly) {
            if (g.order > ex.order) {
                ex.order = std::move(g.order);
                ex.derivation = std::move(g.derivation);
            }
            return;
        }
    }
    out.push_back(std::move(g));
}

void canonical_sort(std::vector<OrderedGenerator>& v) {
    std::sort(v.begin(), v.end(), [](const OrderedGenerator& a, const OrderedGenerator& b) {
        return poly_compare(a.poly, b.poly) < 0;
    });
}

// Membership order of p in the ideal spanned by J: the largest order
// threshold t such that p lies in the subideal of generators of order
// >= t. Sound lower bound for the best witnessed order of p.
class MemberOrder {
  public:
    explicit MemberOrder(const std::vector<OrderedGenerator>& J) : J_(J) {
        for (const auto& g : J) thresholds_.push_back(g.order);
        std::sort(thresholds_.begin(), thresholds_.end(), std::greater<Rational>());
        thresholds_.erase(std::unique(thresholds_.begin(), thresholds_.end()), thresholds_.end());
        slices_.resize(thresholds_.size());
    }

    Rational of(const Polynomial& p) {
        for (std::size_t t = 0; t < thresholds_.size(); ++t)
            if (is_member(p, slice(t))) return thresholds_[t];
        throw std::logic_error("membership order requested for a non-member");
    }

  private:
    const Ideal& slice(std::size_t t) {
        if (!slices_[t]) {
            std::vector<Polynomial> gens;
            for (const auto& g : J_)
                if (g.order >= thresholds_[t]) gens.push_back(g.poly);
            slices_[t].emplace(std::move(gens));
        }
        return *slices_[t];
    }

    const std::vector<OrderedGenerator>& J_;
    std::vector<Rational> thresholds_;
    std::vector<std::optional<Ideal>> slices_;
};

std::string outcome_name(Outcome o) {
    return o == Outcome::subelliptic ? "subelliptic" : "exhausted";
}

}  // namespace

SpecialDomain::SpecialDomain(int n_, std::vector<Polynomial> h_) : n(n_), h(std::move(h_)) {
    if (n < 1) throw std::invalid_argument("domain needs at least one variable");
    if (h.empty()) throw std::invalid_argument("domain needs at least one h polynomial");
    for (const auto& p : h) {
        if (p.nvars() != n) throw std::invalid_argument("h polynomial variable count mismatch");
        if (p.eval_at_origin() != 0)
            throw std::invalid_argument("h polynomial must vanish at the origin");
    }
}

KohnState build_J1(const SpecialDomain& D, const RunConfig& cfg) {
    KohnState st;
    st.level = 1;
    const int n = D.n, N = D.count();

    if (N >= n) {
        // Every size-n subset of the h's; repeated or reordered rows only
        // change the determinant by a sign or kill it.
        for (const auto& S : subsets(N, n)) {
            std::vector<Polynomial> tuple;
            std::vector<std::vector<Rational>> rows;
            for (int idx : S) {
                tuple.push_back(D.h[static_cast<std::size_t>(idx)]);
                rows.push_back(unit_row(N, idx));
            }
            Polynomial det = jacobian_det(tuple);
            if (det.is_zero()) continue;
            insert_generator(st.J, {det.monic(), base_order(), JacobianMix{n, rows, {}}});
        }
        // Seeded generic combinations to witness behavior off the subset
        // pattern; with fewer h's than variables every determinant is
        // identically zero, so no draws happen there.
        auto eng = level_rng(cfg.seed, 1);
        for (int r = 0; r < cfg.random_combos; ++r) {
            std::vector<std::vector<Rational>> rows;
            std::vector<Polynomial> tuple;
            for (int s = 0; s < n; ++s) {
                std::vector<Rational> row;
                for (int j = 0; j < N; ++j) row.push_back(draw_coefficient(eng));
                tuple.push_back(combo_poly(D, row));
                rows.push_back(std::move(row));
            }
            Polynomial det = jacobian_det(tuple);
            if (det.is_zero()) continue;
            insert_generator(st.J, {det.monic(), base_order(), JacobianMix{n, rows, {}}});
        }
    }

    canonical_sort(st.J);
    st.degenerate = st.J.empty();
    if (st.degenerate)
        st.warnings.push_back("level 1: all Jacobians vanish identically; J_1 is the zero ideal");
    return st;
}

KohnState radical_step(const SpecialDomain& D, KohnState st, const RunConfig& cfg) {
    (void)D;
    st.J_tilde.clear();
    if (st.J.empty()) return st;  // degenerate level: nothing to take a radical of

    std::vector<Polynomial> jpolys;
    jpolys.reserve(st.J.size());
    for (const auto& g : st.J) jpolys.push_back(g.poly);
    Ideal I(std::move(jpolys));
    MemberOrder member_order(st.J);

    auto adjoin = [&](const Polynomial& f) {
        auto mp = min_power_in(f, I, cfg.m_max);
        if (mp.status == MinPowerStatus::bound_exceeded) {
            st.warnings.push_back("level " + std::to_string(st.level) + ": dropped " +
                                  f.to_string() + ": smallest power exceeds m_max " +
                                  std::to_string(cfg.m_max));
            return;
        }
        if (mp.status != MinPowerStatus::found)
            throw std::logic_error("certified radical member has no power in the ideal");
        Rational gamma = member_order.of(pow(f, mp.m));
        insert_generator(st.J_tilde,
                         {f.monic(), gamma / rat(mp.m), RadicalRoot{mp.m, gamma}});
    };

    bool full = true;
    std::vector<Polynomial> candidates;
    try {
        candidates = radical(I).basis();
    } catch (const radical_unsupported&) {
        full = false;
    }

    if (full) {
        st.mode = RadicalMode::full_radical;
        for (const auto& f : candidates) adjoin(f);
    } else {
        st.mode = RadicalMode::certified_members;
        st.warnings.push_back("level " + std::to_string(st.level) +
                              ": radical unsupported for this ideal class; using certified members");
        for (const auto& g : st.J) adjoin(g.poly);
        for (const auto& g : st.J) {
            auto s = try_squarefree_part(g.poly);
            if (s && is_radical_member(*s, I)) adjoin(*s);
        }
    }

    canonical_sort(st.J_tilde);
    return st;
}

KohnState advance_level(const SpecialDomain& D, const KohnState& st, const RunConfig& cfg) {
    KohnState nx;
    nx.level = st.level + 1;
    nx.mode = st.mode;
    nx.warnings = st.warnings;
    const int n = D.n, N = D.count();
    const int tcount = static_cast<int>(st.J_tilde.size());

    // Every radical generator survives verbatim.
    for (int i = 0; i < tcount; ++i)
        insert_generator(nx.J, {st.J_tilde[static_cast<std::size_t>(i)].poly,
                                st.J_tilde[static_cast<std::size_t>(i)].order, Inherited{i}});

    auto eng = level_rng(cfg.seed, nx.level);
    for (int k = n; k >= 0; --k) {
        if (k > N) continue;          // rows would be linearly dependent
        const int rslots = n - k;
        if (rslots > tcount) continue;  // not enough radical generators

        // Slot patterns over the h's: unit-coefficient subsets first,
        // then the seeded generic mixes.
        std::vector<std::vector<std::vector<Rational>>> patterns;
        if (k == 0) {
            patterns.push_back({});
        } else {
            for (const auto& S : subsets(N, k)) {
                std::vector<std::vector<Rational>> rows;
                for (int idx : S) rows.push_back(unit_row(N, idx));
                patterns.push_back(std::move(rows));
            }
            for (int r = 0; r < cfg.random_combos; ++r) {
                std::vector<std::vector<Rational>> rows;
                for (int s = 0; s < k; ++s) {
                    std::vector<Rational> row;
                    for (int j = 0; j < N; ++j) row.push_back(draw_coefficient(eng));
                    rows.push_back(std::move(row));
                }
                patterns.push_back(std::move(rows));
            }
        }

        for (const auto& rows : patterns) {
            for (const auto& T : subsets(tcount, rslots)) {
                std::vector<Polynomial> tuple;
                for (const auto& row : rows) tuple.push_back(combo_poly(D, row));
                Rational child_min;
                bool first = true;
                for (int t : T) {
                    const auto& child = st.J_tilde[static_cast<std::size_t>(t)];
                    tuple.push_back(child.poly);
                    if (first || child.order < child_min) child_min = child.order;
                    first = false;
                }
                Polynomial det = jacobian_det(tuple);
                if (det.is_zero()) continue;
                Rational ord;
                if (k == n) {
                    ord = base_order();  // pure h rows
                } else {
                    ord = child_min / 2;  // half the weakest child
                    if (k >= 1 && ord > base_order()) ord = base_order();
                }
                insert_generator(nx.J, {det.monic(), std::move(ord), JacobianMix{k, rows, T}});
            }
        }
    }

    if (static_cast<int>(nx.J.size()) > cfg.generator_cap) {
        std::sort(nx.J.begin(), nx.J.end(), [](const OrderedGenerator& a, const OrderedGenerator& b) {
            if (a.order != b.order) return a.order > b.order;
            return poly_compare(a.poly, b.poly) < 0;
        });
        nx.warnings.push_back("level " + std::to_string(nx.level) + ": generator cap " +
                              std::to_string(cfg.generator_cap) + " exceeded; pruned " +
                              std::to_string(nx.J.size() - static_cast<std::size_t>(cfg.generator_cap)) +
                              " lowest-order generators");
        nx.J.erase(nx.J.begin() + cfg.generator_cap, nx.J.end());
    }

    canonical_sort(nx.J);
    nx.degenerate = nx.J.empty();
    return nx;
}

Certificate run(const SpecialDomain& D, const RunConfig& cfg) {
    Certificate c;
    c.config = cfg;
    c.input_digest = domain_digest(D);
    c.epsilon = rat(0);

    KohnState st = build_J1(D, cfg);
    for (int level = 1; level <= cfg.max_level; ++level) {
        st = radical_step(D, std::move(st), cfg);
        c.history.push_back({st.level, st.J, st.J_tilde, st.mode});

        int best = -1;
        for (int i = 0; i < static_cast<int>(st.J_tilde.size()); ++i) {
            const auto& g = st.J_tilde[static_cast<std::size_t>(i)];
            if (g.poly.eval_at_origin() == 0) continue;
            if (best < 0 || g.order > st.J_tilde[static_cast<std::size_t>(best)].order) best = i;
        }
        if (best >= 0) {
            const auto& w = st.J_tilde[static_cast<std::size_t>(best)];
            c.outcome = Outcome::subelliptic;
            c.epsilon = w.order;
            c.witness_level = st.level;
            c.witness_index = best;
            c.witness = w;
            break;
        }
        if (level == cfg.max_level) {
            c.outcome = Outcome::exhausted;
            c.witness_level = st.level;
            break;
        }
        st = advance_level(D, st, cfg);
    }

    c.warnings = st.warnings;
    c.history_digest = history_digest(c);
    return c;
}

std::string mode_name(RadicalMode m) {
    return m == RadicalMode::full_radical ? "full-radical" : "certified-members";
}

std::string derivation_signature(const DerivationNode& d) {
    std::ostringstream os;
    if (const auto* j = std::get_if<JacobianMix>(&d)) {
        os << "jac(k=" << j->k << ";c=[";
        for (std::size_t r = 0; r < j->combos.size(); ++r) {
            if (r) os << ",";
            os << "[";
            for (std::size_t i = 0; i < j->combos[r].size(); ++i) {
                if (i) os << ",";
                os << to_string(j->combos[r][i]);
            }
            os << "]";
        }
        os << "];ch=[";
        for (std::size_t i = 0; i < j->children.size(); ++i) {
            if (i) os << ",";
            os << j->children[i];
        }
        os << "])";
    } else if (const auto* r = std::get_if<RadicalRoot>(&d)) {
        os << "rad(m=" << r->m << ";g=" << to_string(r->gamma_member) << ")";
    } else {
        os << "inh(" << std::get<Inherited>(d).child << ")";
    }
    return os.str();
}

std::string generator_signature(const OrderedGenerator& g) {
    return g.poly.to_string() + "@" + to_string(g.order) + "#" + derivation_signature(g.derivation);
}

std::uint64_t domain_digest(const SpecialDomain& D) {
    Fnv1a f;
    f.str("n=" + std::to_string(D.n));
    for (const auto& p : D.h) f.str(";" + p.to_string());
    return f.value();
}

std::uint64_t history_digest(const Certificate& c) {
    Fnv1a f;
    for (const auto& lv : c.history) {
        f.str("L" + std::to_string(lv.level) + "{" + mode_name(lv.mode) + "|J:");
        for (const auto& g : lv.J) f.str(generator_signature(g) + ";");
        f.str("|JT:");
        for (const auto& g : lv.J_tilde) f.str(generator_signature(g) + ";");
        f.str("}");
    }
    f.str("outcome=" + outcome_name(c.outcome));
    f.str(";epsilon=" + to_string(c.epsilon));
    f.str(";level=" + std::to_string(c.witness_level));
    f.str(";witness=" + std::to_string(c.witness_index));
    return f.value();
}

namespace {

std::string generator_diff(const std::string& where, const std::vector<OrderedGenerator>& got,
                           const std::vector<OrderedGenerator>& want) {
    if (got.size() != want.size())
        return where + ": generator count differs (recorded " + std::to_string(want.size()) +
               ", replayed " + std::to_string(got.size()) + ")";
    for (std::size_t i = 0; i < want.size(); ++i) {
        const auto& a = want[i];
        const auto& b = got[i];
        std::string at = where + "[" + std::to_string(i) + "]";
        if (!(a.poly == b.poly))
            return at + ": polynomial differs (recorded " + a.poly.to_string() + ", replayed " +
                   b.poly.to_string() + ")";
        if (a.order != b.order)
            return at + ": order differs (recorded " + to_string(a.order) + ", replayed " +
                   to_string(b.order) + ")";
        if (!(a.derivation == b.derivation))
            return at + ": derivation differs (recorded " + derivation_signature(a.derivation) +
                   ", replayed " + derivation_signature(b.derivation) + ")";
    }
    return "";
}

}  // namespace

ReplayReport replay_explain(const Certificate& c, const SpecialDomain& D) {
    if (domain_digest(D) != c.input_digest)
        return {false, "domain digest mismatch: certificate was produced from different input"};
    if (history_digest(c) != c.history_digest)
        return {false, "certificate digest does not match its own history"};

    Certificate r = run(D, c.config);
    if (r.outcome != c.outcome)
        return {false, "outcome differs (recorded " + outcome_name(c.outcome) + ", replayed " +
                           outcome_name(r.outcome) + ")"};
    if (r.history.size() != c.history.size())
        return {false, "level count differs (recorded " + std::to_string(c.history.size()) +
                           ", replayed " + std::to_string(r.history.size()) + ")"};
    for (std::size_t i = 0; i < c.history.size(); ++i) {
        const auto& a = c.history[i];
        const auto& b = r.history[i];
        std::string lv = "level " + std::to_string(a.level);
        if (a.level != b.level) return {false, lv + ": level numbering differs"};
        if (a.mode != b.mode) return {false, lv + ": radical mode differs"};
        if (auto d = generator_diff(lv + " J", b.J, a.J); !d.empty()) return {false, d};
        if (auto d = generator_diff(lv + " J_tilde", b.J_tilde, a.J_tilde); !d.empty())
            return {false, d};
    }
    if (r.epsilon != c.epsilon)
        return {false, "epsilon differs (recorded " + to_string(c.epsilon) + ", replayed " +
                           to_string(r.epsilon) + ")"};
    if (r.witness_level != c.witness_level || r.witness_index != c.witness_index)
        return {false, "witness location differs"};
    if (r.warnings != c.warnings) return {false, "warning list differs"};
    return {true, ""};
}

bool replay(const Certificate& c, const SpecialDomain& D) { return replay_explain(c, D).ok; }

}  // namespace specdom
