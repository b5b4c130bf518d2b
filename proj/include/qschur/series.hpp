#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qschur {

using Int = mpz_class;

/// Truncated formal power series in q with exact integer coefficients,
/// over Z or over Z/mZ (canonical residues in [0, m)).
///
/// A series knows its coefficients for indices 0..precision()-1 exactly;
/// nothing is claimed beyond that. Every operation states how the output
/// precision derives from the inputs. Values are immutable after
/// construction.
class TruncSeries {
public:
    /// Takes ownership of `coeffs`; precision is coeffs.size().
    /// If `modulus` is present, coefficients are canonicalized into [0, m).
    /// Throws std::invalid_argument on empty coeffs or modulus < 1.
    explicit TruncSeries(std::vector<Int> coeffs, std::optional<Int> modulus = std::nullopt);

    static TruncSeries zero(long precision, std::optional<Int> modulus = std::nullopt);
    static TruncSeries one(long precision, std::optional<Int> modulus = std::nullopt);
    /// c * q^d at the given precision (d may be >= precision, giving zero).
    static TruncSeries monomial(const Int& c, long d, long precision,
                                std::optional<Int> modulus = std::nullopt);

    long precision() const { return static_cast<long>(coeffs_.size()); }
    const Int& coeff(long i) const;                 // bounds-checked
    const Int& operator[](long i) const { return coeff(i); }
    const std::vector<Int>& coeffs() const { return coeffs_; }
    const std::optional<Int>& modulus() const { return modulus_; }

    bool is_zero() const;
    bool same_modulus(const TruncSeries& other) const { return modulus_ == other.modulus_; }

    /// Coefficient list as decimal strings (JSON-safe).
    std::vector<std::string> coeff_strings() const;

    friend bool operator==(const TruncSeries& a, const TruncSeries& b) = default;

private:
    std::vector<Int> coeffs_;
    std::optional<Int> modulus_;
};

/// Coefficient-wise scalar combination sum c_i * s_i.
/// Result precision = min over inputs; all terms must share one modulus setting.
/// Throws std::invalid_argument on an empty term list or mixed moduli.
TruncSeries linear_combine(const std::vector<std::pair<Int, TruncSeries>>& terms);

TruncSeries add(const TruncSeries& a, const TruncSeries& b);
TruncSeries sub(const TruncSeries& a, const TruncSeries& b);

/// Cauchy product truncated to min(precision a, precision b). Schoolbook
/// convolution; this is the baseline contract any faster path must match
/// bit for bit.
TruncSeries mul(const TruncSeries& a, const TruncSeries& b);

/// Multiplicative inverse at a's precision. The constant term must be a
/// unit: +-1 over Z, invertible mod m. Throws std::domain_error otherwise.
TruncSeries inv(const TruncSeries& a);

/// Repeated-squaring power at a's precision; pow(a,0) = 1, negative e
/// goes through inv (same unit precondition).
TruncSeries pow(const TruncSeries& a, long e);

/// q -> q^k. Result precision = k * precision(a): every retained index
/// below that is fully determined by a's coefficients. k >= 1.
TruncSeries dilate(const TruncSeries& a, long k);

/// Coefficient n of the result = coefficient p*n+j of a, 0 <= j < p.
/// Result precision = ceil((precision(a) - j) / p); requires precision(a) > j.
TruncSeries extract(const TruncSeries& a, long p, long j);

/// Canonical residues in [0, m); input must be over Z. m >= 1.
TruncSeries reduce_mod(const TruncSeries& a, const Int& m);

/// Drop coefficients at indices >= n (1 <= n <= precision).
TruncSeries truncate(const TruncSeries& a, long n);

/// q^d * a, at a's precision.
TruncSeries shift(const TruncSeries& a, long d);

}  // namespace qschur
