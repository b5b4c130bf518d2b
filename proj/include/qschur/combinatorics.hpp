#pragma once

#include <functional>

#include "qschur/series.hpp"

namespace qschur {

/// Constraint describing a family of (over)partitions to enumerate.
/// Both predicates must be total over positive part sizes / multiplicities.
struct PartitionConstraint {
    /// May size s be used as a part at all?
    std::function<bool(long s)> part_allowed = [](long) { return true; };
    /// May size s appear with multiplicity m (m >= 1)?
    std::function<bool(long s, long m)> multiplicity_allowed = [](long, long) { return true; };
    /// Overpartition counting: the first occurrence of each used size may be
    /// overlined, doubling the count per used size.
    bool overline = false;
};

/// Exact count of partitions of n subject to the constraint, by memoized
/// enumeration over part sizes. count_partitions(0, c) = 1 (empty partition).
/// This enumerator is independent of the q-series machinery on purpose: it
/// is the oracle the generating-function expansions are checked against.
Int count_partitions(long n, const PartitionConstraint& c);

/// Overpartitions of n into odd parts not divisible by t (odd t >= 3).
/// Equals coefficient n of the Eq.-style schur_over expansion for odd t.
Int schur_over_oracle(long t, long n);

/// Overpartitions of n into odd parts; coefficient n of f2^3/(f1^2 f4).
Int podbar_oracle(long n);

enum class ItReading {
    literal,    // parts not divisible by t; odd part sizes appear exactly twice
    bijective,  // additionally every even part is congruent to 2 mod 4
};

/// Partitions of even n2 counted per the chosen reading of the I_t(2n)
/// condition. Under the bijective reading the count equals schur_over(t)
/// at n2/2. Throws on odd n2.
Int i_t_oracle(long t, long n2, ItReading reading);

}  // namespace qschur
