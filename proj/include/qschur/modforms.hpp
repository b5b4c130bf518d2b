#pragma once

#include <map>
#include <vector>

#include "qschur/report.hpp"
#include "qschur/series.hpp"

namespace qschur {

using Rational = mpq_class;

/// Kronecker symbol (a|n): the completely multiplicative extension of the
/// Legendre symbol to arbitrary integer bottoms. Conventions: (a|0) is 1 for
/// a = +-1 and 0 otherwise; (a|2) is 0 for even a, +1 for a = +-1 mod 8,
/// -1 for a = +-3 mod 8; (a|-1) is -1 exactly when a < 0.
int kronecker(const Int& a, const Int& n);

/// Level-N eta quotient prod_{delta | N} eta(delta z)^{r_delta}.
struct EtaQuotient {
    long level = 1;
    std::map<long, long> exps;  // delta -> r_delta, every delta divides level

    EtaQuotient(long level, std::map<long, long> exps);
};

/// Cusp c/d of Gamma_0(N): d | N and gcd(c,d) = 1.
struct Cusp {
    long c = 0;
    long d = 1;
};

struct OnoConditions {
    Rational weight;     // (1/2) sum r_delta
    bool cond_delta;     // sum delta r_delta == 0 mod 24
    bool cond_inverse;   // sum (N/delta) r_delta == 0 mod 24
    Rational character_s;  // prod delta^{r_delta}; chi(d) = ((-1)^k s | d)
};

/// The computable hypotheses of the eta-quotient transformation theorem.
OnoConditions ono_conditions(const EtaQuotient& e);

/// Order of vanishing at the cusp c/d:
///   (N/24) sum_delta gcd(d,delta)^2 r_delta / (gcd(d, N/d) d delta).
/// Depends only on d; throws if d does not divide the level.
Rational cusp_order(const EtaQuotient& e, const Cusp& cusp);

/// Truncated Fourier expansion q^{sum delta r_delta / 24} prod f_delta^{r_delta}
/// = sum a(n) q^n, together with the weight and character data needed by the
/// Hecke action.
struct ModformExpansion {
    std::vector<Int> a;    // a(0) .. a(N-1)
    long weight = 0;       // integer weight k
    Int character_top;     // (-1)^k s as an integer (chi(d) = kronecker(top, d))

    long precision() const { return static_cast<long>(a.size()); }
    const Int& coeff(long n) const;  // a(n), bounds-checked
    int chi(const Int& d) const { return kronecker(character_top, d); }
};

/// Expand an eta quotient whose leading exponent sum(delta r_delta)/24 is a
/// nonnegative integer and whose weight is a nonnegative integer; throws
/// std::domain_error otherwise.
ModformExpansion modform_expansion(const EtaQuotient& e, long trunc);

/// Coefficients of f|T_p up to n_out: b(n) = a(pn) + chi(p) p^{k-1} a(n/p)
/// (a(n/p) = 0 when p does not divide n). Requires precision > p*(n_out-1).
std::vector<Int> hecke_Tp(const ModformExpansion& f, long p, long n_out);

/// Check the eigenform recurrence a(pn) + chi(p) p^{k-1} a(n/p) = a(p) a(n)
/// for all n <= n_max (lambda(p) = a(p) since a(1) = 1).
VerificationReport eigen_check(const ModformExpansion& f, long p, long n_max);

}  // namespace qschur
