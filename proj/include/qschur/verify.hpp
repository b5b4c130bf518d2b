#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qschur/report.hpp"
#include "qschur/specialforms.hpp"

namespace qschur {

/// "schur_over(t)(a n + b) == 0 mod m for all admissible n <= n_max".
struct ProgressionClaim {
    long t = 3;
    long a = 1;
    long b = 0;
    unsigned long m = 2;
    long n_max = 100;
    std::vector<long> excluded_n;  // e.g. {0} when the claim needs n > 0
};

/// "sum schur_over(t)(a n + b) q^n == rhs mod m, coefficientwise to trunc".
struct SeriesCongruenceClaim {
    long t = 3;
    long a = 1;
    long b = 0;
    std::string rhs;
    unsigned long m = 2;
    long trunc = 300;
};

/// "schur_over(t)(a1 n + b1) == c * schur_over(t)(a2 n + b2) mod m".
struct CoefficientIdentityClaim {
    long t = 3;
    long a1 = 1, b1 = 0;
    long a2 = 1, b2 = 0;
    long c = 1;
    unsigned long m = 2;
    long n_max = 100;
};

enum class ClassificationReading {
    literal,    // the displayed square-t case: residue 2 on {j^2 with t not | n, 2j^2, 2tj^2}
    corrected,  // square t: residue 2 iff n in {j^2, 2j^2} with t not dividing n
};

/// The mod-4 classification of schur_over(t)(n) for odd t.
struct ClassificationClaim {
    long t = 3;
    long n_max = 1000;
    ClassificationReading reading = ClassificationReading::corrected;
};

struct Claim {
    std::string id;
    std::variant<ProgressionClaim, SeriesCongruenceClaim, CoefficientIdentityClaim,
                 ClassificationClaim>
        body;
    /// What running the claim is known to yield. Claims transcribed from
    /// displayed statements that fail numerically are kept in the table with
    /// expected = counterexample so the refutation stays reproducible.
    Verdict expected = Verdict::verified;
    std::string anchor;
    std::string note;
};

/// Expansion precision the claim needs (refused, not truncated, if the
/// provided series is shorter).
long required_precision(const Claim& c);
/// Modulus the pooled expansion must contain (claims run fine mod any
/// multiple).
unsigned long required_modulus(const Claim& c);
long claim_t(const Claim& c);

// ---- single-claim checks (series passed in explicitly) -------------------

VerificationReport check_progression(const TruncSeries& s, const ProgressionClaim& c,
                                     const std::string& id);
VerificationReport check_series_congruence(const TruncSeries& s, const SeriesCongruenceClaim& c,
                                           const std::string& id);
VerificationReport check_coefficient_identity(const TruncSeries& s,
                                              const CoefficientIdentityClaim& c,
                                              const std::string& id);
VerificationReport check_mod4_classification(const TruncSeries& s, const ClassificationClaim& c,
                                             const std::string& id);

/// Expected residue r(n) mod 4 of the section-3 classification.
int classification_expected_mod4(long t, long n, ClassificationReading reading);

// ---- families -------------------------------------------------------------

struct FamilyParams {
    long p = 0;
    long alpha = 0;
    long i = 0;
    long j = 0;
    long k = 0;
};

/// Substitute parameters into a named congruence family, checking its
/// residue conditions, and return the resulting progression claim.
/// Family ids: s3_mod3_powers5, s3_mod3_prime, s3_mod6_9powers_36,
/// s3_mod6_9powers_108, s3_mod8_hecke, s9_mod6_powers5, s9_mod12_prime,
/// s9_mod9_powers4, s3k_mod3 (t = 3^k via params.k).
ProgressionClaim instantiate_family(const std::string& family_id, const FamilyParams& params);

// ---- shared expansions ------------------------------------------------------

/// Caches schur_over expansions keyed by (t, modulus). A cached series is
/// replaced when more precision is requested, so hold the reference only
/// until the next get().
class ExpansionPool {
public:
    const TruncSeries& get(long t, long min_precision, const std::optional<Int>& modulus);

private:
    std::map<std::pair<long, std::string>, TruncSeries> cache_;
};

// ---- suite running -----------------------------------------------------------

struct SuiteOptions {
    /// Refuse (verdict skipped) any claim needing more precision than this.
    std::optional<long> precision_cap;
};

/// Runs claims against pooled expansions: per t, one modular expansion at
/// the lcm of the claim moduli and the max required precision.
std::vector<VerificationReport> run_claims(const std::vector<Claim>& claims, ExpansionPool& pool,
                                           const SuiteOptions& options = {});

VerificationReport run_claim(const Claim& claim, ExpansionPool& pool,
                             const SuiteOptions& options = {});

/// Every congruence claim of sections 1 and 3-6 at its acceptance range,
/// including the displayed-but-refuted forms (expected = counterexample).
const std::vector<Claim>& builtin_claims();

const Claim* find_claim(const std::string& id);

// ---- scanner ----------------------------------------------------------------

struct ScanCandidate {
    long a = 0;
    long b = 0;
    unsigned long m = 0;
    bool known = false;  // matches a claim in the builtin table
};

/// Report every (a, b, m) with a <= a_max, b < a, m in mods such that
/// schur_over(t)(a n + b) == 0 mod m for all n <= depth. Results are
/// candidates, not theorems. Requires depth >= min_support >= 8.
std::vector<ScanCandidate> scan(ExpansionPool& pool, long t, long a_max,
                                const std::vector<unsigned long>& mods, long depth,
                                long min_support = 32);

// ---- claim files -------------------------------------------------------------

/// Claim-file schema: a JSON array of objects with a "kind" discriminator
/// ("progression" | "series_congruence" | "classification_mod4" | "family" |
/// "coefficient_identity") and the same field names as the claim structs.
std::vector<Claim> parse_claims_json(const json& doc);
json claims_to_json(const std::vector<Claim>& claims);

}  // namespace qschur
