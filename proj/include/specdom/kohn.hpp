#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "specdom/groebner.hpp"
#include "specdom/polynomial.hpp"

namespace specdom {

/// Model domain Re w + sum |h_j(z)|^2 < 0 studied at the origin of the
/// z-space: the data is just the tuple h, each entry vanishing at 0.
struct SpecialDomain {
    int n;                      // ambient z-variable count
    std::vector<Polynomial> h;  // h_1..h_N

    SpecialDomain(int n, std::vector<Polynomial> h);
    int count() const { return static_cast<int>(h.size()); }  // N
};

/// Provenance of a generator: determinant of a mixed tuple whose first k
/// rows are rational combinations of the h's (one coefficient row of
/// length N per slot) and whose remaining n-k rows are radical-level
/// generators of the previous level, referenced by index.
struct JacobianMix {
    int k = 0;
    std::vector<std::vector<Rational>> combos;  // k rows, each of length N
    std::vector<int> children;                  // n-k indices into previous J_tilde
    bool operator==(const JacobianMix&) const = default;
};

/// Provenance of a radical-level generator: smallest power m landing in
/// the current J, and the membership order of that power.
struct RadicalRoot {
    int m = 1;
    Rational gamma_member;  // order of f^m as a member of J
    bool operator==(const RadicalRoot&) const = default;
};

/// Carried over verbatim from the previous radical level.
struct Inherited {
    int child = 0;  // index into previous J_tilde
    bool operator==(const Inherited&) const = default;
};

using DerivationNode = std::variant<JacobianMix, RadicalRoot, Inherited>;

/// Generator with its subellipticity order and a replayable derivation.
struct OrderedGenerator {
    Polynomial poly;   // monic
    Rational order;    // in (0, 1/8]
    DerivationNode derivation;
    bool operator==(const OrderedGenerator&) const = default;
};

enum class RadicalMode { full_radical, certified_members };

/// Engine state at one level: J holds the freshly generated ideal, and
/// J_tilde its radical-level generators once radical_step has run.
struct KohnState {
    int level = 1;
    std::vector<OrderedGenerator> J;
    std::vector<OrderedGenerator> J_tilde;
    RadicalMode mode = RadicalMode::full_radical;
    bool degenerate = false;  // J spans the zero ideal
    std::vector<std::string> warnings;
};

struct RunConfig {
    int max_level = 8;
    int m_max = 64;
    int generator_cap = 256;  // per-level J size bound
    int random_combos = 4;    // seeded generic combinations per slot count
    std::uint64_t seed = 0;
    bool operator==(const RunConfig&) const = default;
};

enum class Outcome { subelliptic, exhausted };

/// Snapshot of one level, embedded in the certificate so a replay can
/// re-derive and compare every node.
struct LevelRecord {
    int level = 0;
    std::vector<OrderedGenerator> J;
    std::vector<OrderedGenerator> J_tilde;
    RadicalMode mode = RadicalMode::full_radical;
    bool operator==(const LevelRecord&) const = default;
};

struct Certificate {
    Outcome outcome = Outcome::exhausted;
    Rational epsilon;        // witness order; 0 unless subelliptic
    int witness_level = 0;   // terminating level
    int witness_index = -1;  // into history[witness_level-1].J_tilde
    std::optional<OrderedGenerator> witness;
    RunConfig config;
    std::vector<LevelRecord> history;
    std::vector<std::string> warnings;
    std::uint64_t input_digest = 0;
    std::uint64_t history_digest = 0;
};

/// Level 1: determinants of tuples of combinations of the h's; every
/// order is 1/8. When every determinant vanishes identically the state
/// is degenerate (zero ideal) and the run lives on under caps policy.
KohnState build_J1(const SpecialDomain& D, const RunConfig& cfg);

/// Fill J_tilde from J: full-radical mode when the radical is
/// computable for this ideal class, otherwise certified-members mode
/// (generators plus individually certified squarefree parts). Orders
/// follow the root rule: order(f) = member_order(f^m) / m with m the
/// smallest power landing in J.
KohnState radical_step(const SpecialDomain& D, KohnState st, const RunConfig& cfg);

/// Build level+1: carry every radical generator over, then adjoin all
/// nonzero determinants of mixed tuples (k combination slots over h,
/// n-k radical generators) for every k, with orders assigned by the
/// level rules; duplicates keep the maximum order.
KohnState advance_level(const SpecialDomain& D, const KohnState& st, const RunConfig& cfg);

/// Iterate build_J1, then radical_step/advance_level until some radical
/// generator is nonzero at the origin (subelliptic; epsilon is the best
/// such order) or max_level is exhausted.
Certificate run(const SpecialDomain& D, const RunConfig& cfg = {});

struct ReplayReport {
    bool ok = false;
    std::string divergence;  // empty when ok; else the first divergent node
};

/// Re-derives the whole certificate from the domain and the embedded
/// config, then compares structurally: every polynomial, order, power,
/// and mode must match exactly.
ReplayReport replay_explain(const Certificate& c, const SpecialDomain& D);
bool replay(const Certificate& c, const SpecialDomain& D);

/// Canonical fingerprints (FNV-1a over canonical renderings).
std::uint64_t domain_digest(const SpecialDomain& D);
std::uint64_t history_digest(const Certificate& c);

/// Canonical one-line renderings; these feed the digests and the
/// human-readable trace output.
std::string derivation_signature(const DerivationNode& d);
std::string generator_signature(const OrderedGenerator& g);
std::string mode_name(RadicalMode m);

}  // namespace specdom
