#include "qschur/combinatorics.hpp"

#include <stdexcept>
#include <vector>

namespace qschur {

namespace {

// Memoized count over (size index, remaining). Sizes ascend; each size
// choice fixes a multiplicity, overlining doubles any used size.
class Counter {
public:
    Counter(long n, const PartitionConstraint& c) : c_(c) {
        for (long s = 1; s <= n; ++s)
            if (c_.part_allowed(s)) sizes_.push_back(s);
        memo_.assign(sizes_.size() + 1,
                     std::vector<Int>(static_cast<size_t>(n + 1), Int(-1)));
    }

    Int count(size_t i, long rem) {
        if (rem == 0) return 1;
        if (i >= sizes_.size()) return 0;
        Int& slot = memo_[i][static_cast<size_t>(rem)];
        if (slot >= 0) return slot;
        const long s = sizes_[i];
        Int total = count(i + 1, rem);  // size unused
        const Int factor = c_.overline ? 2 : 1;
        for (long m = 1; m * s <= rem; ++m)
            if (c_.multiplicity_allowed(s, m))
                total += factor * count(i + 1, rem - m * s);
        slot = total;
        return slot;
    }

private:
    const PartitionConstraint& c_;
    std::vector<long> sizes_;
    std::vector<std::vector<Int>> memo_;
};

}  // namespace

Int count_partitions(long n, const PartitionConstraint& c) {
    if (n < 0) throw std::invalid_argument("count_partitions: n must be >= 0");
    if (n == 0) return 1;
    Counter counter(n, c);
    return counter.count(0, n);
}

Int schur_over_oracle(long t, long n) {
    if (t < 3 || t % 2 == 0)
        throw std::invalid_argument(
            "schur_over_oracle: enumeration form requires odd t >= 3 "
            "(use the product expansion for even t)");
    PartitionConstraint c;
    c.part_allowed = [t](long s) { return s % 2 == 1 && s % t != 0; };
    c.overline = true;
    return count_partitions(n, c);
}

Int podbar_oracle(long n) {
    PartitionConstraint c;
    c.part_allowed = [](long s) { return s % 2 == 1; };
    c.overline = true;
    return count_partitions(n, c);
}

Int i_t_oracle(long t, long n2, ItReading reading) {
    if (n2 < 0 || n2 % 2 != 0)
        throw std::invalid_argument("i_t_oracle: n2 must be even and >= 0");
    PartitionConstraint c;
    c.part_allowed = [t, reading](long s) {
        if (s % t == 0) return false;
        if (reading == ItReading::bijective && s % 2 == 0 && s % 4 != 2) return false;
        return true;
    };
    c.multiplicity_allowed = [](long s, long m) { return s % 2 == 0 || m == 2; };
    return count_partitions(n2, c);
}

}  // namespace qschur
