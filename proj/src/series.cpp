#include "qschur/series.hpp"

#include <stdexcept>

namespace qschur {

namespace {

Int canonical_mod(const Int& x, const Int& m) {
    Int r;
    mpz_mod(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());  // mpz_mod is nonnegative
    return r;
}

void check_compatible(const TruncSeries& a, const TruncSeries& b) {
    if (!a.same_modulus(b))
        throw std::invalid_argument("TruncSeries: mixed moduli");
}

}  // namespace

TruncSeries::TruncSeries(std::vector<Int> coeffs, std::optional<Int> modulus)
    : coeffs_(std::move(coeffs)), modulus_(std::move(modulus)) {
    if (coeffs_.empty())
        throw std::invalid_argument("TruncSeries: precision must be >= 1");
    if (modulus_) {
        if (*modulus_ < 1)
            throw std::invalid_argument("TruncSeries: modulus must be >= 1");
        for (Int& c : coeffs_)
            c = canonical_mod(c, *modulus_);
    }
}

TruncSeries TruncSeries::zero(long precision, std::optional<Int> modulus) {
    if (precision < 1)
        throw std::invalid_argument("TruncSeries: precision must be >= 1");
    return TruncSeries(std::vector<Int>(static_cast<size_t>(precision)), std::move(modulus));
}

TruncSeries TruncSeries::one(long precision, std::optional<Int> modulus) {
    return monomial(1, 0, precision, std::move(modulus));
}

TruncSeries TruncSeries::monomial(const Int& c, long d, long precision,
                                  std::optional<Int> modulus) {
    if (precision < 1)
        throw std::invalid_argument("TruncSeries: precision must be >= 1");
    if (d < 0)
        throw std::invalid_argument("TruncSeries: monomial degree must be >= 0");
    std::vector<Int> v(static_cast<size_t>(precision));
    if (d < precision)
        v[static_cast<size_t>(d)] = c;
    return TruncSeries(std::move(v), std::move(modulus));
}

const Int& TruncSeries::coeff(long i) const {
    if (i < 0 || i >= precision())
        throw std::out_of_range("TruncSeries: coefficient index out of range");
    return coeffs_[static_cast<size_t>(i)];
}

bool TruncSeries::is_zero() const {
    for (const Int& c : coeffs_)
        if (c != 0) return false;
    return true;
}

std::vector<std::string> TruncSeries::coeff_strings() const {
    std::vector<std::string> out;
    out.reserve(coeffs_.size());
    for (const Int& c : coeffs_) out.push_back(c.get_str());
    return out;
}

TruncSeries linear_combine(const std::vector<std::pair<Int, TruncSeries>>& terms) {
    if (terms.empty())
        throw std::invalid_argument("linear_combine: empty term list");
    const auto& mod = terms.front().second.modulus();
    long n = terms.front().second.precision();
    for (const auto& [c, s] : terms) {
        if (s.modulus() != mod)
            throw std::invalid_argument("linear_combine: mixed moduli");
        n = std::min(n, s.precision());
    }
    std::vector<Int> out(static_cast<size_t>(n));
    for (const auto& [c, s] : terms)
        for (long i = 0; i < n; ++i)
            out[static_cast<size_t>(i)] += c * s.coeff(i);
    return TruncSeries(std::move(out), mod);
}

TruncSeries add(const TruncSeries& a, const TruncSeries& b) {
    return linear_combine({{1, a}, {1, b}});
}

TruncSeries sub(const TruncSeries& a, const TruncSeries& b) {
    return linear_combine({{1, a}, {-1, b}});
}

TruncSeries mul(const TruncSeries& a, const TruncSeries& b) {
    check_compatible(a, b);
    const long n = std::min(a.precision(), b.precision());
    std::vector<Int> out(static_cast<size_t>(n));
    for (long i = 0; i < n; ++i) {
        const Int& ai = a.coeff(i);
        if (ai == 0) continue;
        for (long j = 0; j + i < n; ++j) {
            const Int& bj = b.coeff(j);
            if (bj == 0) continue;
            out[static_cast<size_t>(i + j)] += ai * bj;
        }
    }
    return TruncSeries(std::move(out), a.modulus());
}

TruncSeries inv(const TruncSeries& a) {
    const long n = a.precision();
    std::vector<Int> out(static_cast<size_t>(n));
    Int lead0;
    if (a.modulus()) {
        if (mpz_invert(lead0.get_mpz_t(), a.coeff(0).get_mpz_t(), a.modulus()->get_mpz_t()) == 0)
            throw std::domain_error("inv: constant term not invertible mod m");
    } else {
        if (a.coeff(0) == 1 || a.coeff(0) == -1)
            lead0 = a.coeff(0);
        else
            throw std::domain_error("inv: constant term must be a unit (+-1 over Z)");
    }
    out[0] = lead0;
    for (long i = 1; i < n; ++i) {
        Int s = 0;
        for (long j = 1; j <= i; ++j)
            if (a.coeff(j) != 0) s += a.coeff(j) * out[static_cast<size_t>(i - j)];
        out[static_cast<size_t>(i)] = -s * lead0;
        if (a.modulus())
            out[static_cast<size_t>(i)] = Int(out[static_cast<size_t>(i)] % *a.modulus());
    }
    return TruncSeries(std::move(out), a.modulus());
}

TruncSeries pow(const TruncSeries& a, long e) {
    if (e < 0) return pow(inv(a), -e);
    TruncSeries result = TruncSeries::one(a.precision(), a.modulus());
    if (e == 0) return result;
    TruncSeries base = a;
    while (true) {
        if (e & 1) result = mul(result, base);
        e >>= 1;
        if (e == 0) break;
        base = mul(base, base);
    }
    return result;
}

TruncSeries dilate(const TruncSeries& a, long k) {
    if (k < 1)
        throw std::invalid_argument("dilate: k must be >= 1");
    const long n = k * a.precision();
    std::vector<Int> out(static_cast<size_t>(n));
    for (long i = 0; i < a.precision(); ++i)
        out[static_cast<size_t>(k * i)] = a.coeff(i);
    return TruncSeries(std::move(out), a.modulus());
}

TruncSeries extract(const TruncSeries& a, long p, long j) {
    if (p < 1 || j < 0 || j >= p)
        throw std::invalid_argument("extract: need p >= 1 and 0 <= j < p");
    if (a.precision() <= j)
        throw std::invalid_argument("extract: precision must exceed j");
    const long n = (a.precision() - j + p - 1) / p;
    std::vector<Int> out(static_cast<size_t>(n));
    for (long i = 0; i < n; ++i)
        out[static_cast<size_t>(i)] = a.coeff(p * i + j);
    return TruncSeries(std::move(out), a.modulus());
}

TruncSeries reduce_mod(const TruncSeries& a, const Int& m) {
    if (a.modulus())
        throw std::invalid_argument("reduce_mod: input already modular");
    if (m < 1)
        throw std::invalid_argument("reduce_mod: m must be >= 1");
    return TruncSeries(a.coeffs(), m);
}

TruncSeries truncate(const TruncSeries& a, long n) {
    if (n < 1 || n > a.precision())
        throw std::invalid_argument("truncate: need 1 <= n <= precision");
    std::vector<Int> out(a.coeffs().begin(), a.coeffs().begin() + n);
    return TruncSeries(std::move(out), a.modulus());
}

TruncSeries shift(const TruncSeries& a, long d) {
    if (d < 0)
        throw std::invalid_argument("shift: d must be >= 0");
    const long n = a.precision();
    std::vector<Int> out(static_cast<size_t>(n));
    for (long i = 0; i + d < n; ++i)
        out[static_cast<size_t>(i + d)] = a.coeff(i);
    return TruncSeries(std::move(out), a.modulus());
}

}  // namespace qschur
