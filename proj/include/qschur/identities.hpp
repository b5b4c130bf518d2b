#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qschur/report.hpp"
#include "qschur/specialforms.hpp"

namespace qschur {

/// One registered identity: both sides in the spec grammar, verified as
/// truncated series, either exactly or after reduction mod m. Entries whose
/// registered form differs from the printed source carry a note saying what
/// was corrected; every entry must pass at any precision.
struct Identity {
    std::string id;
    std::string lhs;
    std::string rhs;
    std::optional<unsigned long> congruence_mod;  // empty = exact equality
    std::string anchor;       // where the displayed equation lives
    long default_trunc = 300;
    std::string note;
};

/// The full table: section-2 lemmas, the generating-function forms, and
/// every dissection step derived in the proofs.
const std::vector<Identity>& identity_registry();

const Identity* find_identity(const std::string& id);

/// Expand both sides to `trunc` (0 = the entry's default) and compare
/// coefficientwise; reports the first mismatching index on failure.
/// Throws std::invalid_argument for an unknown id.
VerificationReport verify_identity(const std::string& id, long trunc = 0);
VerificationReport verify_identity(const Identity& ident, long trunc = 0);

/// p-dissection of psi(q) into general theta pieces plus a
/// q^{(p^2-1)/8} psi(q^{p^2}) tail, checked against the direct expansion;
/// also checks that (m^2+m)/2 misses (p^2-1)/8 mod p for 0 <= m <= (p-3)/2.
/// Requires an odd prime p.
VerificationReport verify_psi_dissection(long p, long trunc);

/// p-dissection of f1 with the (+-p-1)/6 index excluded and a
/// q^{(p^2-1)/24} f_{p^2} tail. Requires a prime p >= 5.
VerificationReport verify_f1_dissection(long p, long trunc);

enum class DissectionLemma { psi, f1 };
VerificationReport verify_p_dissection_lemma(DissectionLemma which, long p, long trunc);

}  // namespace qschur
