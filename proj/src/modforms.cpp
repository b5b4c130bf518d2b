#include "qschur/modforms.hpp"

#include <chrono>
#include <numeric>
#include <stdexcept>

#include "qschur/specialforms.hpp"

namespace qschur {

namespace {

using Clock = std::chrono::steady_clock;

long elapsed_ms(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

}  // namespace

int kronecker(const Int& a, const Int& n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    Int aa = a, nn = n;
    int result = 1;
    if (nn < 0) {
        nn = -nn;
        if (aa < 0) result = -result;
    }
    if (aa % 2 == 0 && nn % 2 == 0) return 0;
    // factor the 2s out of the bottom: (a|2) by a mod 8
    while (nn % 2 == 0) {
        nn /= 2;
        const long m8 = mpz_class(((aa % 8) + 8) % 8).get_si();
        if (m8 == 3 || m8 == 5) result = -result;
    }
    aa %= nn;
    if (aa < 0) aa += nn;
    // now 0 <= aa < nn, nn odd; quadratic reciprocity loop
    while (aa != 0) {
        while (aa % 2 == 0) {
            aa /= 2;
            const long m8 = mpz_class(nn % 8).get_si();
            if (m8 == 3 || m8 == 5) result = -result;
        }
        std::swap(aa, nn);
        if (aa % 4 == 3 && nn % 4 == 3) result = -result;
        aa %= nn;
    }
    return nn == 1 ? result : 0;
}

EtaQuotient::EtaQuotient(long level_, std::map<long, long> exps_)
    : level(level_), exps(std::move(exps_)) {
    if (level < 1) throw std::invalid_argument("EtaQuotient: level must be >= 1");
    if (exps.empty()) throw std::invalid_argument("EtaQuotient: at least one exponent");
    for (const auto& [delta, r] : exps) {
        if (delta < 1 || level % delta != 0)
            throw std::invalid_argument("EtaQuotient: every delta must divide the level");
        if (r == 0) throw std::invalid_argument("EtaQuotient: exponents must be nonzero");
    }
}

OnoConditions ono_conditions(const EtaQuotient& e) {
    long sum_r = 0, sum_dr = 0, sum_inv = 0;
    Rational s(1);
    for (const auto& [delta, r] : e.exps) {
        sum_r += r;
        sum_dr += delta * r;
        sum_inv += (e.level / delta) * r;
        Int p;
        mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(delta),
                      static_cast<unsigned long>(std::abs(r)));
        if (r >= 0)
            s *= Rational(p);
        else
            s /= Rational(p);
    }
    OnoConditions out;
    out.weight = Rational(sum_r, 2);
    out.weight.canonicalize();
    out.cond_delta = ((sum_dr % 24) + 24) % 24 == 0;
    out.cond_inverse = ((sum_inv % 24) + 24) % 24 == 0;
    out.character_s = s;
    out.character_s.canonicalize();
    return out;
}

Rational cusp_order(const EtaQuotient& e, const Cusp& cusp) {
    if (cusp.d < 1 || e.level % cusp.d != 0)
        throw std::invalid_argument("cusp_order: d must be a positive divisor of the level");
    if (std::gcd(cusp.c, cusp.d) != 1)
        throw std::invalid_argument("cusp_order: gcd(c,d) must be 1");
    const long d = cusp.d;
    const long gdn = std::gcd(d, e.level / d);
    Rational sum(0);
    for (const auto& [delta, r] : e.exps) {
        const long g = std::gcd(d, delta);
        sum += Rational(g * g * r, gdn * d * delta);
    }
    Rational order = Rational(e.level, 24) * sum;
    order.canonicalize();
    return order;
}

const Int& ModformExpansion::coeff(long n) const {
    if (n < 0 || n >= precision())
        throw std::out_of_range("ModformExpansion: coefficient index out of range");
    return a[static_cast<size_t>(n)];
}

ModformExpansion modform_expansion(const EtaQuotient& e, long trunc) {
    if (trunc < 1) throw std::invalid_argument("modform_expansion: trunc must be >= 1");
    const OnoConditions ono = ono_conditions(e);

    long sum_dr = 0;
    for (const auto& [delta, r] : e.exps) sum_dr += delta * r;
    if (sum_dr < 0 || sum_dr % 24 != 0)
        throw std::domain_error(
            "modform_expansion: leading exponent sum(delta r)/24 must be a nonnegative integer");
    const long lead = sum_dr / 24;

    if (ono.weight.get_den() != 1 || ono.weight < 0)
        throw std::domain_error("modform_expansion: weight must be a nonnegative integer");
    const long k = ono.weight.get_num().get_si();

    ModformExpansion out;
    out.weight = k;
    if (ono.character_s.get_den() != 1)
        throw std::domain_error("modform_expansion: character s must be an integer here");
    out.character_top = (k % 2 ? Int(-1) : Int(1)) * ono.character_s.get_num();

    out.a.assign(static_cast<size_t>(trunc), 0);
    if (lead < trunc) {
        TruncSeries prod = eta_quotient_series(e.exps, trunc - lead);
        for (long n = lead; n < trunc; ++n) out.a[static_cast<size_t>(n)] = prod.coeff(n - lead);
    }
    return out;
}

std::vector<Int> hecke_Tp(const ModformExpansion& f, long p, long n_out) {
    if (p < 2) throw std::invalid_argument("hecke_Tp: p must be a prime >= 2");
    if (n_out < 1) throw std::invalid_argument("hecke_Tp: n_out must be >= 1");
    if (f.precision() <= p * (n_out - 1))
        throw std::domain_error("hecke_Tp: insufficient expansion precision");
    const int chi_p = f.chi(p);
    Int pk1;
    mpz_ui_pow_ui(pk1.get_mpz_t(), static_cast<unsigned long>(p),
                  static_cast<unsigned long>(f.weight - 1));
    std::vector<Int> out(static_cast<size_t>(n_out));
    for (long n = 0; n < n_out; ++n) {
        Int b = f.coeff(p * n);
        if (n % p == 0) b += chi_p * pk1 * f.coeff(n / p);
        out[static_cast<size_t>(n)] = b;
    }
    return out;
}

VerificationReport eigen_check(const ModformExpansion& f, long p, long n_max) {
    const auto start = Clock::now();
    if (f.precision() <= p * n_max)
        throw std::domain_error("eigen_check: insufficient expansion precision");
    if (f.precision() < 2 || f.coeff(1) != 1)
        throw std::domain_error("eigen_check: expansion must be normalized with a(1) = 1");

    const Int lambda = f.coeff(p);
    const int chi_p = f.chi(p);
    Int pk1;
    mpz_ui_pow_ui(pk1.get_mpz_t(), static_cast<unsigned long>(p),
                  static_cast<unsigned long>(f.weight - 1));

    VerificationReport rep;
    rep.claim_id = "eigen_p" + std::to_string(p);
    rep.params = {{"p", p},
                  {"lambda", lambda.get_str()},
                  {"chi_p", chi_p},
                  {"n_max", n_max}};
    rep.n_max = n_max;
    rep.verdict = Verdict::verified;
    for (long n = 1; n <= n_max; ++n) {
        Int b = f.coeff(p * n);
        if (n % p == 0) b += chi_p * pk1 * f.coeff(n / p);
        if (b != lambda * f.coeff(n)) {
            rep.verdict = Verdict::counterexample;
            rep.counterexample = Counterexample{n, b, lambda * f.coeff(n)};
            break;
        }
    }
    rep.ms = elapsed_ms(start);
    return rep;
}

}  // namespace qschur
