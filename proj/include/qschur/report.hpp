#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "qschur/series.hpp"

namespace qschur {

using json = nlohmann::json;

enum class Verdict { verified, counterexample, skipped };

std::string to_string(Verdict v);

/// First violation found by a check. For congruence claims `value` is the
/// coefficient as stored in the expansion (exact over Z, a residue when the
/// expansion is modular) and `residue` is value mod m; for identity checks
/// `value`/`residue` hold the two mismatching coefficients.
struct Counterexample {
    long n = 0;
    Int value;
    Int residue;
};

struct VerificationReport {
    std::string claim_id;
    json params = json::object();
    long n_max = 0;
    Verdict verdict = Verdict::skipped;
    std::optional<Counterexample> counterexample;
    long ms = 0;

    bool ok() const { return verdict == Verdict::verified; }
};

/// Schema: {"claim_id", "params", "n_max", "verdict", "counterexample", "ms"}
json to_json(const VerificationReport& r);

}  // namespace qschur
