/**
 * @brief Common machinery for identity checks: instances, check modes,
 *        outcomes, term-count budgets, and exact random sampling.
 */
#pragma once

#include "critval/poly_io.hpp"
#include "critval/polynomial.hpp"

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace critval {

struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& msg) : std::runtime_error(msg) {}
};
struct TheoremBRequiresPositiveMultiplicity : std::runtime_error {
    explicit TheoremBRequiresPositiveMultiplicity(const std::string& msg)
        : std::runtime_error(msg) {}
};

/// Cap on intermediate term counts. 0 means unlimited.
struct Budget {
    std::size_t max_terms = 0;

    void check(const Polynomial& p, const char* where) const {
        if (max_terms != 0 && p.term_count() > max_terms)
            throw BudgetExceeded(std::string(where) + ": " +
                                 std::to_string(p.term_count()) + " terms exceeds budget of " +
                                 std::to_string(max_terms));
    }
};

/// Parameters (n, a, b) of a Theorem A / B instance.
struct IdentityInstance {
    int n = 1;
    std::vector<int> a;
    int b = 0;

    IdentityInstance() = default;
    IdentityInstance(int n_, std::vector<int> a_, int b_) : n(n_), a(std::move(a_)), b(b_) {
        if (n < 1 || static_cast<int>(a.size()) != n || b < 0)
            throw std::invalid_argument("IdentityInstance: need n >= 1, len(a) = n, b >= 0");
        for (int ai : a)
            if (ai < 0) throw std::invalid_argument("IdentityInstance: a_i must be >= 0");
    }

    /// Sum of odd-position multiplicities a1 + a3 + ... (1-based).
    int abar() const {
        int s = 0;
        for (int i = 0; i < n; i += 2) s += a[i];
        return s;
    }
    int a_sum() const {
        int s = 0;
        for (int ai : a) s += ai;
        return s;
    }

    std::string str() const {
        std::string s = "n=" + std::to_string(n) + " a=(";
        for (int i = 0; i < n; ++i) s += (i ? "," : "") + std::to_string(a[i]);
        return s + ") b=" + std::to_string(b);
    }

    friend bool operator==(const IdentityInstance&, const IdentityInstance&) = default;
};

enum class CheckKind { Symbolic, Evaluate };
enum class CheckStatus { Pass, Fail, Skipped };

struct CheckMode {
    CheckKind kind = CheckKind::Symbolic;
    int points = 0;          // Evaluate only; 0 = auto (max(10, degree + 1))
    std::uint64_t seed = 0;  // Evaluate only

    static CheckMode symbolic() { return {CheckKind::Symbolic, 0, 0}; }
    static CheckMode evaluate(int points, std::uint64_t seed) {
        return {CheckKind::Evaluate, points, seed};
    }
};

struct CheckOutcome {
    std::string name;
    IdentityInstance instance;
    CheckMode mode;
    CheckStatus status = CheckStatus::Pass;
    std::string witness;  // nonempty iff status == Fail
    std::string reason;   // set when Skipped
    std::int64_t elapsed_ms = 0;
};

inline const char* status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Skipped: return "skipped";
    }
    return "?";
}

namespace detail {

inline std::uint64_t fnv1a(std::uint64_t h, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
        h ^= (v >> (8 * i)) & 0xff;
        h *= 0x100000001b3ull;
    }
    return h;
}

}  // namespace detail

/// Per-check RNG seed derived from (master seed, check name, instance),
/// so results are independent of execution schedule.
inline std::uint64_t derive_seed(std::uint64_t master, const std::string& check,
                                 const IdentityInstance& inst) {
    std::uint64_t h = detail::fnv1a(0xcbf29ce484222325ull, master);
    for (char c : check) h = detail::fnv1a(h, static_cast<unsigned char>(c));
    h = detail::fnv1a(h, static_cast<std::uint64_t>(inst.n));
    for (int ai : inst.a) h = detail::fnv1a(h, static_cast<std::uint64_t>(ai));
    h = detail::fnv1a(h, static_cast<std::uint64_t>(inst.b));
    return h;
}

/// Distinct nonzero rationals with small numerator/denominator, one per
/// variable.  Callers resample the whole point when a needed denominator
/// vanishes at it.
inline std::map<VariableId, ExactRational> sample_point(std::mt19937_64& rng,
                                                        const std::vector<VariableId>& vars) {
    std::uniform_int_distribution<int> num_dist(-50, 50);
    std::uniform_int_distribution<int> den_dist(1, 10);
    std::map<VariableId, ExactRational> point;
    std::set<std::pair<long, long>> used;
    for (VariableId v : vars) {
        for (;;) {
            int num = num_dist(rng);
            if (num == 0) continue;
            int den = den_dist(rng);
            ExactRational r(num, den);
            auto key = std::make_pair(static_cast<long>(r.numerator().get_si()),
                                      static_cast<long>(r.denominator().get_si()));
            if (used.insert(key).second) {
                point.emplace(v, r);
                break;
            }
        }
    }
    return point;
}

inline std::string describe_point(const std::map<VariableId, ExactRational>& point) {
    std::string s;
    for (const auto& [v, r] : point) s += (s.empty() ? "" : ", ") + var_name(v) + "=" + r.str();
    return s;
}

inline std::vector<VariableId> z_variables(int n) {
    std::vector<VariableId> vs;
    for (int i = 1; i <= n; ++i) vs.push_back(var_z(i));
    return vs;
}

inline int auto_points(const CheckMode& mode, std::uint64_t degree) {
    if (mode.points > 0) return mode.points;
    return static_cast<int>(std::max<std::uint64_t>(10, degree + 1));
}

/// Witness text for a nonzero symbolic difference: canonical form truncated
/// at 2000 characters, followed by a hash of the full form.
inline std::string witness_text(const Polynomial& diff) {
    std::string full = to_string(diff);
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (char c : full) h = detail::fnv1a(h, static_cast<unsigned char>(c));
    char buf[32];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    if (full.size() > 2000) full = full.substr(0, 2000) + "...";
    return full + " [fnv1a:" + buf + "]";
}

/// Runs `body`, filling status/witness/reason and the elapsed time.
/// `body` returns an empty string on pass, a witness on fail, and throws
/// BudgetExceeded to skip.
inline CheckOutcome run_check(const std::string& name, const IdentityInstance& inst,
                              const CheckMode& mode,
                              const std::function<std::string()>& body) {
    CheckOutcome out;
    out.name = name;
    out.instance = inst;
    out.mode = mode;
    auto t0 = std::chrono::steady_clock::now();
    try {
        out.witness = body();
        out.status = out.witness.empty() ? CheckStatus::Pass : CheckStatus::Fail;
    } catch (const BudgetExceeded& e) {
        out.status = CheckStatus::Skipped;
        out.reason = e.what();
    }
    auto t1 = std::chrono::steady_clock::now();
    out.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    return out;
}

}  // namespace critval
