#include "qschur/specialforms.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <stdexcept>

namespace qschur {

// ---------------------------------------------------------------------------
// sparse kernels
//
// A kernel is the tail of a series with constant term 1: pairs (exponent,
// small integer coefficient), exponents ascending. Multiplying or dividing a
// dense coefficient buffer by such a series is a short sliding recurrence,
// which keeps eta-quotient expansion near O(N^1.5) instead of O(N^2). The
// result is exact, so it agrees bit for bit with the schoolbook path.
// ---------------------------------------------------------------------------

namespace {

struct Kernel {
    std::vector<long> exps;   // ascending, all > 0
    std::vector<long> coefs;  // small integers
};

// f_k = 1 + sum over generalized pentagonal numbers g: (-1)^j q^{k g}
Kernel pentagonal_kernel(long k, long N) {
    Kernel ker;
    for (long j = 1;; ++j) {
        const long g1 = j * (3 * j - 1) / 2, g2 = j * (3 * j + 1) / 2;
        if (k * g1 >= N) break;
        const long sign = (j % 2) ? -1 : 1;
        ker.exps.push_back(k * g1);
        ker.coefs.push_back(sign);
        if (k * g2 < N) {
            ker.exps.push_back(k * g2);
            ker.coefs.push_back(sign);
        }
    }
    return ker;
}

// f_k^3 = sum_{j>=0} (-1)^j (2j+1) q^{k j(j+1)/2}   (Jacobi)
Kernel jacobi_cube_kernel(long k, long N) {
    Kernel ker;
    for (long j = 1;; ++j) {
        const long T = j * (j + 1) / 2;
        if (k * T >= N) break;
        ker.exps.push_back(k * T);
        ker.coefs.push_back((j % 2) ? -(2 * j + 1) : (2 * j + 1));
    }
    return ker;
}

// phi(-q^k) = 1 + 2 sum_{n>=1} (-1)^n q^{k n^2}
Kernel phi_neg_kernel(long k, long N) {
    Kernel ker;
    for (long n = 1;; ++n) {
        const long e = k * n * n;
        if (e >= N) break;
        ker.exps.push_back(e);
        ker.coefs.push_back((n % 2) ? -2 : 2);
    }
    return ker;
}

struct PassSpec {
    enum class Which { pent, cube, phi } which;
    long k;
    bool divide;
};

// Pass plan for prod f_k^{e_k}. Exponent pairs are folded through
// f_k^2 = phi(-q^k) f_{2k}, triples through the Jacobi cube; what remains
// is a single pentagonal pass per unit. All three kernels are exact, so
// the plan choice never changes the result.
std::vector<PassSpec> plan_passes(const std::map<long, long>& exps) {
    std::map<long, long> work = exps;
    std::vector<PassSpec> passes;
    for (auto it = work.begin(); it != work.end(); ++it) {
        const long k = it->first;
        long e = it->second;
        if (e == 0) continue;
        const bool divide = e < 0;
        long cnt = std::abs(e);
        while (cnt >= 3) {
            passes.push_back({PassSpec::Which::cube, k, divide});
            cnt -= 3;
        }
        if (cnt == 2) {
            passes.push_back({PassSpec::Which::phi, k, divide});
            work[2 * k] += divide ? -1 : 1;
            cnt = 0;
        }
        if (cnt == 1) passes.push_back({PassSpec::Which::pent, k, divide});
    }
    return passes;
}

Kernel build_kernel(const PassSpec& p, long N) {
    switch (p.which) {
        case PassSpec::Which::pent: return pentagonal_kernel(p.k, N);
        case PassSpec::Which::cube: return jacobi_cube_kernel(p.k, N);
        case PassSpec::Which::phi: return phi_neg_kernel(p.k, N);
    }
    return {};
}

void acc_term(Int& acc, long coef, const Int& x) {
    if (coef >= 0)
        mpz_addmul_ui(acc.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(coef));
    else
        mpz_submul_ui(acc.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(-coef));
}

void apply_mul(std::vector<Int>& a, const Kernel& ker, const Int* mod) {
    const long n = static_cast<long>(a.size());
    const size_t m = ker.exps.size();
    for (long i = n - 1; i >= 0; --i) {
        Int& acc = a[static_cast<size_t>(i)];
        for (size_t t = 0; t < m && ker.exps[t] <= i; ++t)
            acc_term(acc, ker.coefs[t], a[static_cast<size_t>(i - ker.exps[t])]);
        if (mod) mpz_mod(acc.get_mpz_t(), acc.get_mpz_t(), mod->get_mpz_t());
    }
}

void apply_div(std::vector<Int>& a, const Kernel& ker, const Int* mod) {
    const long n = static_cast<long>(a.size());
    const size_t m = ker.exps.size();
    for (long i = 0; i < n; ++i) {
        Int& acc = a[static_cast<size_t>(i)];
        for (size_t t = 0; t < m && ker.exps[t] <= i; ++t)
            acc_term(acc, -ker.coefs[t], a[static_cast<size_t>(i - ker.exps[t])]);
        if (mod) mpz_mod(acc.get_mpz_t(), acc.get_mpz_t(), mod->get_mpz_t());
    }
}

// Single-word variant for small moduli, blocked so that long-offset kernel
// terms stream sequentially. Residues < 2^20 and kernel coefficient sums
// < 2^22 keep the delayed-reduction int64 accumulators exact.
constexpr unsigned long kFastModLimit = 1ul << 20;
constexpr long kBlock = 4096;

void apply_div_u32(std::vector<std::uint32_t>& a, const Kernel& ker, std::uint32_t m) {
    const long n = static_cast<long>(a.size());
    const size_t km = ker.exps.size();
    size_t small_end = 0;
    while (small_end < km && ker.exps[small_end] < kBlock) ++small_end;
    const long long mm = static_cast<long long>(m);
    std::vector<long long> acc(static_cast<size_t>(kBlock));
    for (long s = 0; s < n; s += kBlock) {
        const long len = std::min(kBlock, n - s);
        for (long i = 0; i < len; ++i) acc[static_cast<size_t>(i)] = a[static_cast<size_t>(s + i)];
        // offsets >= kBlock read only finalized positions below the block
        for (size_t t = small_end; t < km; ++t) {
            const long e = ker.exps[t];
            if (e > s + len - 1) break;
            const long long c = ker.coefs[t];
            const long i0 = std::max(0L, e - s);
            const std::uint32_t* src = &a[static_cast<size_t>(s + i0 - e)];
            long long* dst = &acc[static_cast<size_t>(i0)];
            const long cnt = len - i0;
            for (long i = 0; i < cnt; ++i) dst[i] -= c * static_cast<long long>(src[i]);
        }
        // short offsets feed back inside the block
        for (long i = 0; i < len; ++i) {
            long long v = acc[static_cast<size_t>(i)];
            for (size_t t = 0; t < small_end; ++t) {
                const long e = ker.exps[t];
                if (e > s + i) break;
                v -= ker.coefs[t] * static_cast<long long>(a[static_cast<size_t>(s + i - e)]);
            }
            v %= mm;
            if (v < 0) v += mm;
            a[static_cast<size_t>(s + i)] = static_cast<std::uint32_t>(v);
        }
    }
}

void apply_mul_u32(std::vector<std::uint32_t>& a, const Kernel& ker, std::uint32_t m) {
    const long n = static_cast<long>(a.size());
    const size_t km = ker.exps.size();
    size_t small_end = 0;
    while (small_end < km && ker.exps[small_end] < kBlock) ++small_end;
    const long long mm = static_cast<long long>(m);
    std::vector<long long> acc(static_cast<size_t>(kBlock));
    long s0 = ((n - 1) / kBlock) * kBlock;
    for (long s = s0; s >= 0; s -= kBlock) {
        const long len = std::min(kBlock, n - s);
        for (long i = 0; i < len; ++i) acc[static_cast<size_t>(i)] = a[static_cast<size_t>(s + i)];
        // offsets >= kBlock read original values in lower, untouched blocks
        for (size_t t = small_end; t < km; ++t) {
            const long e = ker.exps[t];
            if (e > s + len - 1) break;
            const long long c = ker.coefs[t];
            const long i0 = std::max(0L, e - s);
            const std::uint32_t* src = &a[static_cast<size_t>(s + i0 - e)];
            long long* dst = &acc[static_cast<size_t>(i0)];
            const long cnt = len - i0;
            for (long i = 0; i < cnt; ++i) dst[i] += c * static_cast<long long>(src[i]);
        }
        // short offsets read original values below the write position
        for (long i = len - 1; i >= 0; --i) {
            long long v = acc[static_cast<size_t>(i)];
            for (size_t t = 0; t < small_end; ++t) {
                const long e = ker.exps[t];
                if (e > s + i) break;
                v += ker.coefs[t] * static_cast<long long>(a[static_cast<size_t>(s + i - e)]);
            }
            v %= mm;
            if (v < 0) v += mm;
            a[static_cast<size_t>(s + i)] = static_cast<std::uint32_t>(v);
        }
    }
}

}  // namespace

TruncSeries eta_quotient_series(const std::map<long, long>& exps, long trunc,
                                const std::optional<Int>& modulus) {
    if (trunc < 1)
        throw std::invalid_argument("eta_quotient_series: trunc must be >= 1");
    for (const auto& [k, e] : exps)
        if (k < 1) throw std::invalid_argument("eta_quotient_series: eta index must be >= 1");

    const auto passes = plan_passes(exps);

    if (modulus && modulus->fits_ulong_p() && modulus->get_ui() <= kFastModLimit) {
        const std::uint32_t m = static_cast<std::uint32_t>(modulus->get_ui());
        std::vector<std::uint32_t> buf(static_cast<size_t>(trunc), 0);
        buf[0] = 1 % m;
        for (const auto& pass : passes) {
            const Kernel ker = build_kernel(pass, trunc);
            pass.divide ? apply_div_u32(buf, ker, m) : apply_mul_u32(buf, ker, m);
        }
        std::vector<Int> out(static_cast<size_t>(trunc));
        for (size_t i = 0; i < out.size(); ++i) out[i] = static_cast<unsigned long>(buf[i]);
        return TruncSeries(std::move(out), modulus);
    }

    std::vector<Int> buf(static_cast<size_t>(trunc));
    buf[0] = modulus ? Int(1 % *modulus) : Int(1);
    const Int* mod = modulus ? &*modulus : nullptr;
    for (const auto& pass : passes) {
        const Kernel ker = build_kernel(pass, trunc);
        pass.divide ? apply_div(buf, ker, mod) : apply_mul(buf, ker, mod);
    }
    return TruncSeries(std::move(buf), modulus);
}

TruncSeries eta_power(long k, long e, long trunc, const std::optional<Int>& modulus) {
    return eta_quotient_series({{k, e}}, trunc, modulus);
}

TruncSeries pochhammer(long a, long b, long trunc, int sign,
                       const std::optional<Int>& modulus) {
    if (a < 1 || b < 1)
        throw std::invalid_argument("pochhammer: need a >= 1 and b >= 1");
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("pochhammer: sign must be +-1");
    if (trunc < 1)
        throw std::invalid_argument("pochhammer: trunc must be >= 1");
    std::vector<Int> buf(static_cast<size_t>(trunc));
    buf[0] = 1;
    for (long e = a; e < trunc; e += b)
        for (long i = trunc - 1 - e; i >= 0; --i)
            if (buf[static_cast<size_t>(i)] != 0) {
                if (sign > 0)
                    buf[static_cast<size_t>(i + e)] -= buf[static_cast<size_t>(i)];
                else
                    buf[static_cast<size_t>(i + e)] += buf[static_cast<size_t>(i)];
            }
    TruncSeries out(std::move(buf));
    return modulus ? reduce_mod(out, *modulus) : out;
}

TruncSeries theta_phi(int sign, long trunc) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("theta_phi: sign must be +-1");
    if (trunc < 1) throw std::invalid_argument("theta_phi: trunc must be >= 1");
    std::vector<Int> buf(static_cast<size_t>(trunc));
    buf[0] = 1;
    for (long n = 1; n * n < trunc; ++n)
        buf[static_cast<size_t>(n * n)] = (sign == -1 && (n % 2)) ? -2 : 2;
    return TruncSeries(std::move(buf));
}

TruncSeries theta_psi(int sign, long trunc) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("theta_psi: sign must be +-1");
    if (trunc < 1) throw std::invalid_argument("theta_psi: trunc must be >= 1");
    std::vector<Int> buf(static_cast<size_t>(trunc));
    for (long n = 0;; ++n) {
        const long T = n * (n + 1) / 2;
        if (T >= trunc) break;
        buf[static_cast<size_t>(T)] = (sign == -1 && (T % 2)) ? -1 : 1;
    }
    return TruncSeries(std::move(buf));
}

TruncSeries theta_general(int eps_r, long r, int eps_s, long s, long trunc) {
    if ((eps_r != 1 && eps_r != -1) || (eps_s != 1 && eps_s != -1))
        throw std::invalid_argument("theta_general: signs must be +-1");
    if (r + s < 1)
        throw std::invalid_argument("theta_general: requires r + s >= 1 (|ab| < 1)");
    if (trunc < 1) throw std::invalid_argument("theta_general: trunc must be >= 1");
    std::vector<Int> buf(static_cast<size_t>(trunc));
    const long W = static_cast<long>(std::ceil(std::sqrt(2.0 * trunc / (r + s)))) + 2;
    for (long m = -W; m <= W; ++m) {
        const long Tm = m * (m + 1) / 2, Tm1 = m * (m - 1) / 2;
        const long e = r * Tm + s * Tm1;
        if (e < 0 || e >= trunc) continue;
        const int sign =
            ((eps_r == -1 && (Tm % 2)) ? -1 : 1) * ((eps_s == -1 && (Tm1 % 2)) ? -1 : 1);
        buf[static_cast<size_t>(e)] += sign;
    }
    return TruncSeries(std::move(buf));
}

std::map<long, long> named_eta_exponents(NamedId id, long t) {
    auto merged = [](std::initializer_list<std::pair<long, long>> items) {
        std::map<long, long> m;
        for (const auto& [k, e] : items) m[k] += e;
        for (auto it = m.begin(); it != m.end();)
            it = (it->second == 0) ? m.erase(it) : std::next(it);
        return m;
    };
    switch (id) {
        case NamedId::schur_over:
            if (t < 2) throw std::invalid_argument("schur_over: requires t >= 2");
            return merged({{2, 3}, {t, 2}, {4 * t, 1}, {1, -2}, {4, -1}, {2 * t, -3}});
        case NamedId::schur:
            if (t < 3 || t % 2 == 0)
                throw std::invalid_argument("schur: requires odd t >= 3");
            return merged({{2, 1}, {t, 1}, {1, -1}, {2 * t, -1}});
        case NamedId::overpartition:
            return merged({{2, 1}, {1, -2}});
        case NamedId::overpartition_odd:
            return merged({{2, 3}, {1, -2}, {4, -1}});
        case NamedId::a_cubed:
            return merged({{3, 1}, {12, 1}, {18, 5}, {6, -2}, {9, -2}, {36, -2}});
        case NamedId::p_neg:
            throw std::invalid_argument("p_neg is sum-defined, not an eta quotient");
    }
    throw std::invalid_argument("named_eta_exponents: unknown id");
}

TruncSeries named_series(NamedId id, long t, long trunc,
                         const std::optional<Int>& modulus) {
    if (trunc < 1) throw std::invalid_argument("named_series: trunc must be >= 1");
    if (id == NamedId::p_neg) {
        // sum over m in Z of (-q)^{(3m^2+m)/2}: generalized pentagonal
        // exponents with sign given by exponent parity
        std::vector<Int> buf(static_cast<size_t>(trunc));
        for (long j = 0;; ++j) {
            const long e1 = j * (3 * j + 1) / 2;   // m = j
            const long e2 = j * (3 * j - 1) / 2;   // m = -j
            if (e2 >= trunc) break;
            if (e1 < trunc) buf[static_cast<size_t>(e1)] += (e1 % 2) ? -1 : 1;
            if (j > 0) buf[static_cast<size_t>(e2)] += (e2 % 2) ? -1 : 1;
        }
        TruncSeries out(std::move(buf));
        return modulus ? reduce_mod(out, *modulus) : out;
    }
    return eta_quotient_series(named_eta_exponents(id, t), trunc, modulus);
}

// ---------------------------------------------------------------------------
// SeriesSpec AST
// ---------------------------------------------------------------------------

struct SeriesSpec::Node {
    enum class Kind {
        Integer, Monomial, Eta, Poch, Phi, Psi, Theta, Named,
        Product, Quotient, Power, Sum, Dilate, Extract
    };
    Kind kind;

    Int c;                       // Integer / Monomial coefficient
    long d = 0;                  // Monomial degree
    long k = 0;                  // Eta index; Phi/Psi dilation; Dilate factor
    long e = 1;                  // Eta / Power exponent
    long a = 0, b = 0;           // Pochhammer
    int sign = 1;                // Pochhammer / Phi / Psi sign
    int eps_r = 1, eps_s = 1;    // Theta
    long r = 0, s = 0;           // Theta
    NamedId id = NamedId::schur_over;
    long t = 0;                  // Named parameter
    long p = 0, j = 0;           // Extract
    std::vector<SeriesSpec> children;
    std::vector<Int> sum_coefs;  // parallel to children, Sum only
};

namespace {

using Node = SeriesSpec::Node;
using Kind = SeriesSpec::Node::Kind;

struct Maker : SeriesSpec {
    explicit Maker(std::shared_ptr<const Node> n) : SeriesSpec(std::move(n)) {}
};

SeriesSpec wrap(std::shared_ptr<const Node> n) { return Maker(std::move(n)); }

std::shared_ptr<Node> make_node(Kind kind) {
    auto n = std::make_shared<Node>();
    n->kind = kind;
    return n;
}

SeriesSpec make_sum(std::vector<Int> coefs, std::vector<SeriesSpec> children) {
    auto n = make_node(Kind::Sum);
    n->sum_coefs = std::move(coefs);
    n->children = std::move(children);
    return wrap(n);
}

}  // namespace

SeriesSpec SeriesSpec::integer(const Int& c) {
    auto n = make_node(Kind::Integer);
    n->c = c;
    return wrap(n);
}

SeriesSpec SeriesSpec::monomial(const Int& c, long d) {
    if (d < 0) throw std::invalid_argument("SeriesSpec::monomial: degree must be >= 0");
    auto n = make_node(Kind::Monomial);
    n->c = c;
    n->d = d;
    return wrap(n);
}

SeriesSpec SeriesSpec::eta(long k, long e) {
    if (k < 1) throw std::invalid_argument("SeriesSpec::eta: index must be >= 1");
    auto n = make_node(Kind::Eta);
    n->k = k;
    n->e = e;
    return wrap(n);
}

SeriesSpec SeriesSpec::pochhammer(long a, long b, int sign) {
    if (a < 1 || b < 1) throw std::invalid_argument("SeriesSpec::pochhammer: need a,b >= 1");
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("SeriesSpec::pochhammer: sign must be +-1");
    auto n = make_node(Kind::Poch);
    n->a = a;
    n->b = b;
    n->sign = sign;
    return wrap(n);
}

SeriesSpec SeriesSpec::phi(int sign, long dilation) {
    if (dilation < 1) throw std::invalid_argument("SeriesSpec::phi: dilation must be >= 1");
    auto n = make_node(Kind::Phi);
    n->sign = sign;
    n->k = dilation;
    return wrap(n);
}

SeriesSpec SeriesSpec::psi(int sign, long dilation) {
    if (dilation < 1) throw std::invalid_argument("SeriesSpec::psi: dilation must be >= 1");
    auto n = make_node(Kind::Psi);
    n->sign = sign;
    n->k = dilation;
    return wrap(n);
}

SeriesSpec SeriesSpec::theta(int eps_r, long r, int eps_s, long s) {
    if (r + s < 1) throw std::invalid_argument("SeriesSpec::theta: requires r+s >= 1");
    auto n = make_node(Kind::Theta);
    n->eps_r = eps_r;
    n->r = r;
    n->eps_s = eps_s;
    n->s = s;
    return wrap(n);
}

SeriesSpec SeriesSpec::named(NamedId id, long t) {
    if (id == NamedId::schur_over || id == NamedId::schur)
        named_eta_exponents(id, t);  // validate t eagerly
    auto n = make_node(Kind::Named);
    n->id = id;
    n->t = t;
    return wrap(n);
}

SeriesSpec operator*(const SeriesSpec& a, const SeriesSpec& b) {
    auto n = make_node(Kind::Product);
    auto append = [&n](const SeriesSpec& x) {
        if (x.node() && x.node()->kind == Kind::Product)
            for (const auto& c : x.node()->children) n->children.push_back(c);
        else
            n->children.push_back(x);
    };
    append(a);
    append(b);
    return wrap(n);
}

SeriesSpec operator/(const SeriesSpec& a, const SeriesSpec& b) {
    auto n = make_node(Kind::Quotient);
    n->children = {a, b};
    return wrap(n);
}

namespace {

void append_sum_term(std::vector<Int>& coefs, std::vector<SeriesSpec>& children,
                     const SeriesSpec& x, const Int& coef) {
    if (x.node() && x.node()->kind == Kind::Sum) {
        for (size_t i = 0; i < x.node()->children.size(); ++i) {
            children.push_back(x.node()->children[i]);
            coefs.push_back(coef * x.node()->sum_coefs[i]);
        }
    } else {
        children.push_back(x);
        coefs.push_back(coef);
    }
}

}  // namespace

SeriesSpec operator+(const SeriesSpec& a, const SeriesSpec& b) {
    std::vector<Int> coefs;
    std::vector<SeriesSpec> children;
    append_sum_term(coefs, children, a, 1);
    append_sum_term(coefs, children, b, 1);
    return make_sum(std::move(coefs), std::move(children));
}

SeriesSpec operator-(const SeriesSpec& a, const SeriesSpec& b) {
    std::vector<Int> coefs;
    std::vector<SeriesSpec> children;
    append_sum_term(coefs, children, a, 1);
    append_sum_term(coefs, children, b, -1);
    return make_sum(std::move(coefs), std::move(children));
}

SeriesSpec pow(const SeriesSpec& a, long e) {
    auto n = make_node(Kind::Power);
    n->e = e;
    n->children = {a};
    return wrap(n);
}

SeriesSpec dilate(const SeriesSpec& a, long k) {
    if (k < 1) throw std::invalid_argument("dilate(spec): k must be >= 1");
    auto n = make_node(Kind::Dilate);
    n->k = k;
    n->children = {a};
    return wrap(n);
}

SeriesSpec extract(const SeriesSpec& a, long p, long j) {
    if (p < 1 || j < 0 || j >= p)
        throw std::invalid_argument("extract(spec): need p >= 1 and 0 <= j < p");
    auto n = make_node(Kind::Extract);
    n->p = p;
    n->j = j;
    n->children = {a};
    return wrap(n);
}

// ---------------------------------------------------------------------------
// printer
// ---------------------------------------------------------------------------

namespace {

std::string print_node(const Node* n);

std::string q_power(int sign, long k) {
    std::string s = sign < 0 ? "-q" : "q";
    if (k != 1) s += "^" + std::to_string(k);
    return s;
}

const char* named_name(NamedId id) {
    switch (id) {
        case NamedId::schur_over: return "schur_over";
        case NamedId::schur: return "schur";
        case NamedId::overpartition: return "overpartition";
        case NamedId::overpartition_odd: return "overpartition_odd";
        case NamedId::p_neg: return "p_neg";
        case NamedId::a_cubed: return "a_cubed";
    }
    return "?";
}

bool prints_atomically(const Node* n) {
    switch (n->kind) {
        case Kind::Integer: return n->c >= 0;
        case Kind::Monomial: return false;
        case Kind::Eta:
        case Kind::Poch:
        case Kind::Phi:
        case Kind::Psi:
        case Kind::Theta:
        case Kind::Named:
        case Kind::Dilate:
        case Kind::Extract:
            return true;
        default:
            return false;
    }
}

std::string print_in_product(const Node* n) {
    std::string s = print_node(n);
    if (n->kind == Kind::Sum) return "(" + s + ")";
    return s;
}

std::string print_node(const Node* n) {
    std::ostringstream os;
    switch (n->kind) {
        case Kind::Integer:
            if (n->c < 0) return "(" + n->c.get_str() + ")";
            return n->c.get_str();
        case Kind::Monomial: {
            std::string qs = n->d == 0 ? "1" : (n->d == 1 ? "q" : "q^" + std::to_string(n->d));
            if (n->c == 1) return qs;
            std::string cs = n->c < 0 ? "(" + n->c.get_str() + ")" : n->c.get_str();
            return n->d == 0 ? cs : cs + "*" + qs;
        }
        case Kind::Eta:
            os << "f" << n->k;
            if (n->e != 1) os << "^" << n->e;
            return os.str();
        case Kind::Poch:
            return "poch(" + q_power(n->sign, n->a) + ",q^" + std::to_string(n->b) + ")";
        case Kind::Phi:
            return "phi(" + q_power(n->sign, n->k) + ")";
        case Kind::Psi:
            return "psi(" + q_power(n->sign, n->k) + ")";
        case Kind::Theta:
            return "f(" + q_power(n->eps_r, n->r) + "," + q_power(n->eps_s, n->s) + ")";
        case Kind::Named: {
            std::string s = named_name(n->id);
            if (n->id == NamedId::schur_over || n->id == NamedId::schur)
                s += "(" + std::to_string(n->t) + ")";
            return s;
        }
        case Kind::Product: {
            std::string s;
            for (size_t i = 0; i < n->children.size(); ++i) {
                if (i) s += "*";
                s += print_in_product(n->children[i].node());
            }
            return s;
        }
        case Kind::Quotient: {
            const Node* num = n->children[0].node();
            const Node* den = n->children[1].node();
            std::string sn = num->kind == Kind::Sum ? "(" + print_node(num) + ")" : print_node(num);
            std::string sd = prints_atomically(den) ? print_node(den) : "(" + print_node(den) + ")";
            return sn + "/" + sd;
        }
        case Kind::Power: {
            const Node* base = n->children[0].node();
            std::string sb = print_node(base);
            if (!prints_atomically(base) || base->kind == Kind::Eta) sb = "(" + sb + ")";
            return sb + "^" + std::to_string(n->e);
        }
        case Kind::Sum: {
            std::string s;
            for (size_t i = 0; i < n->children.size(); ++i) {
                const Int& c = n->sum_coefs[i];
                std::string term = print_in_product(n->children[i].node());
                Int abs_c = c < 0 ? Int(-c) : c;
                if (abs_c != 1) term = abs_c.get_str() + "*" + term;
                if (i == 0)
                    s = (c < 0 ? "-" : "") + term;
                else
                    s += (c < 0 ? " - " : " + ") + term;
            }
            return s;
        }
        case Kind::Dilate:
            return "dilate(" + print_node(n->children[0].node()) + "," + std::to_string(n->k) + ")";
        case Kind::Extract:
            return "extract(" + print_node(n->children[0].node()) + "," + std::to_string(n->p) +
                   "," + std::to_string(n->j) + ")";
    }
    return "?";
}

}  // namespace

std::string SeriesSpec::to_string() const {
    if (!node_) return "<empty>";
    return print_node(node_.get());
}

// ---------------------------------------------------------------------------
// parser
// ---------------------------------------------------------------------------

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : s_(text) {}

    SeriesSpec parse() {
        SeriesSpec e = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return e;
    }

private:
    const std::string& s_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("parse error at position " + std::to_string(pos_) + ": " +
                                    what);
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    long parse_long() {
        skip_ws();
        bool neg = false;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
            neg = s_[pos_] == '-';
            ++pos_;
        }
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            fail("expected integer");
        long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_] - '0');
            ++pos_;
        }
        return neg ? -v : v;
    }

    // ['-'] 'q' ['^' uint]
    std::pair<int, long> parse_qarg() {
        skip_ws();
        int sign = 1;
        if (eat('-')) sign = -1;
        skip_ws();
        if (pos_ >= s_.size() || s_[pos_] != 'q') fail("expected q argument");
        ++pos_;
        long k = 1;
        if (eat('^')) k = parse_long();
        if (k < 1) fail("q exponent must be >= 1 here");
        return {sign, k};
    }

    std::string parse_ident() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
            ++pos_;
        return s_.substr(start, pos_ - start);
    }

    SeriesSpec expr() {
        skip_ws();
        bool neg = eat('-');
        SeriesSpec acc = term();
        if (neg) acc = make_sum({Int(-1)}, {acc});
        while (true) {
            if (eat('+'))
                acc = acc + term();
            else if (eat('-'))
                acc = acc - term();
            else
                break;
        }
        return acc;
    }

    SeriesSpec term() {
        SeriesSpec acc = factor();
        while (true) {
            if (eat('*'))
                acc = acc * factor();
            else if (eat('/'))
                acc = acc / factor();
            else
                break;
        }
        return acc;
    }

    SeriesSpec factor() {
        SeriesSpec base = primary();
        if (eat('^')) {
            long e = parse_long();
            if (base.node() && base.node()->kind == Kind::Eta && base.node()->e == 1)
                return SeriesSpec::eta(base.node()->k, e);
            if (base.node() && base.node()->kind == Kind::Monomial && base.node()->c == 1) {
                if (e < 0) fail("monomial degree must be >= 0");
                return SeriesSpec::monomial(1, base.node()->d * e);
            }
            return pow(base, e);
        }
        return base;
    }

    SeriesSpec primary() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            SeriesSpec e = expr();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return SeriesSpec::integer(parse_long());
        if (c == 'q' &&
            (pos_ + 1 >= s_.size() ||
             (!std::isalnum(static_cast<unsigned char>(s_[pos_ + 1])) && s_[pos_ + 1] != '_'))) {
            ++pos_;
            long d = 1;
            if (eat('^')) {
                d = parse_long();
                if (d < 0) fail("monomial degree must be >= 0");
            }
            return SeriesSpec::monomial(1, d);
        }
        if (c == 'f' && pos_ + 1 < s_.size() &&
            std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
            ++pos_;
            long k = parse_long();
            return SeriesSpec::eta(k, 1);
        }
        std::string id = parse_ident();
        if (id.empty()) fail(std::string("unexpected character '") + c + "'");
        if (id == "f") {
            if (!eat('(')) fail("expected '(' after f");
            auto [er, r] = parse_qarg();
            if (!eat(',')) fail("expected ','");
            auto [es, sx] = parse_qarg();
            if (!eat(')')) fail("expected ')'");
            return SeriesSpec::theta(er, r, es, sx);
        }
        if (id == "phi" || id == "psi") {
            if (!eat('(')) fail("expected '(' after " + id);
            auto [sign, k] = parse_qarg();
            if (!eat(')')) fail("expected ')'");
            return id == "phi" ? SeriesSpec::phi(sign, k) : SeriesSpec::psi(sign, k);
        }
        if (id == "poch") {
            if (!eat('(')) fail("expected '(' after poch");
            auto [sign, a] = parse_qarg();
            if (!eat(',')) fail("expected ','");
            auto [sb, b] = parse_qarg();
            if (sb != 1) fail("pochhammer base must be a positive q power");
            if (!eat(')')) fail("expected ')'");
            return SeriesSpec::pochhammer(a, b, sign);
        }
        if (id == "dilate") {
            if (!eat('(')) fail("expected '(' after dilate");
            SeriesSpec e = expr();
            if (!eat(',')) fail("expected ','");
            long k = parse_long();
            if (!eat(')')) fail("expected ')'");
            return dilate(e, k);
        }
        if (id == "extract") {
            if (!eat('(')) fail("expected '(' after extract");
            SeriesSpec e = expr();
            if (!eat(',')) fail("expected ','");
            long p = parse_long();
            if (!eat(',')) fail("expected ','");
            long j = parse_long();
            if (!eat(')')) fail("expected ')'");
            return extract(e, p, j);
        }
        if (id == "schur_over" || id == "schur") {
            if (!eat('(')) fail("expected '(' after " + id);
            long t = parse_long();
            if (!eat(')')) fail("expected ')'");
            return SeriesSpec::named(id == "schur" ? NamedId::schur : NamedId::schur_over, t);
        }
        if (id == "overpartition") return SeriesSpec::named(NamedId::overpartition);
        if (id == "overpartition_odd") return SeriesSpec::named(NamedId::overpartition_odd);
        if (id == "p_neg") return SeriesSpec::named(NamedId::p_neg);
        if (id == "a_cubed") return SeriesSpec::named(NamedId::a_cubed);
        fail("unknown name '" + id + "'");
    }
};

}  // namespace

SeriesSpec parse_spec(const std::string& text) { return Parser(text).parse(); }

// ---------------------------------------------------------------------------
// expansion
// ---------------------------------------------------------------------------

namespace {

// c * q^d * prod f_k^{e_k}
struct EtaMonomial {
    Int c = 1;
    long d = 0;
    std::map<long, long> exps;
};

// Collapse a pure eta-quotient subtree so it runs through the sparse ladder
// as a single pass plan.
std::optional<EtaMonomial> collapse(const Node* n) {
    switch (n->kind) {
        case Kind::Integer:
            return EtaMonomial{n->c, 0, {}};
        case Kind::Monomial:
            return EtaMonomial{n->c, n->d, {}};
        case Kind::Eta:
            return EtaMonomial{1, 0, {{n->k, n->e}}};
        case Kind::Named: {
            if (n->id == NamedId::p_neg) return std::nullopt;
            return EtaMonomial{1, 0, named_eta_exponents(n->id, n->t)};
        }
        case Kind::Product: {
            EtaMonomial acc;
            for (const auto& ch : n->children) {
                auto m = collapse(ch.node());
                if (!m) return std::nullopt;
                acc.c *= m->c;
                acc.d += m->d;
                for (const auto& [k, e] : m->exps) acc.exps[k] += e;
            }
            return acc;
        }
        case Kind::Quotient: {
            auto num = collapse(n->children[0].node());
            auto den = collapse(n->children[1].node());
            if (!num || !den) return std::nullopt;
            if ((den->c != 1 && den->c != -1) || den->d != 0) return std::nullopt;
            EtaMonomial acc = *num;
            acc.c *= den->c;
            for (const auto& [k, e] : den->exps) acc.exps[k] -= e;
            return acc;
        }
        case Kind::Power: {
            auto base = collapse(n->children[0].node());
            if (!base) return std::nullopt;
            EtaMonomial acc;
            if (n->e >= 0) {
                mpz_pow_ui(acc.c.get_mpz_t(), base->c.get_mpz_t(),
                           static_cast<unsigned long>(n->e));
                acc.d = base->d * n->e;
            } else {
                if ((base->c != 1 && base->c != -1) || base->d != 0) return std::nullopt;
                acc.c = (base->c == -1 && (n->e % 2)) ? Int(-1) : Int(1);
            }
            for (const auto& [k, e] : base->exps) acc.exps[k] += e * n->e;
            return acc;
        }
        default:
            return std::nullopt;
    }
}

TruncSeries expand_node(const Node* n, long N, const std::optional<Int>& mod);

TruncSeries expand_eta_monomial(const EtaMonomial& m, long N, const std::optional<Int>& mod) {
    if (m.d >= N || m.c == 0) return TruncSeries::zero(N, mod);
    TruncSeries base = eta_quotient_series(m.exps, N - m.d, mod);
    std::vector<Int> out(static_cast<size_t>(N));
    for (long i = 0; i + m.d < N; ++i)
        out[static_cast<size_t>(i + m.d)] = m.c * base.coeff(i);
    return TruncSeries(std::move(out), mod);
}

TruncSeries expand_node(const Node* n, long N, const std::optional<Int>& mod) {
    if (N < 1) throw std::invalid_argument("expand: precision underflow (trunc < 1)");
    if (auto m = collapse(n)) return expand_eta_monomial(*m, N, mod);
    switch (n->kind) {
        case Kind::Poch:
            return pochhammer(n->a, n->b, N, n->sign, mod);
        case Kind::Phi: {
            TruncSeries base = theta_phi(n->sign, (N + n->k - 1) / n->k);
            TruncSeries out = truncate(dilate(base, n->k), N);
            return mod ? reduce_mod(out, *mod) : out;
        }
        case Kind::Psi: {
            TruncSeries base = theta_psi(n->sign, (N + n->k - 1) / n->k);
            TruncSeries out = truncate(dilate(base, n->k), N);
            return mod ? reduce_mod(out, *mod) : out;
        }
        case Kind::Theta: {
            TruncSeries out = theta_general(n->eps_r, n->r, n->eps_s, n->s, N);
            return mod ? reduce_mod(out, *mod) : out;
        }
        case Kind::Named:
            return named_series(n->id, n->t, N, mod);
        case Kind::Product: {
            TruncSeries acc = expand_node(n->children[0].node(), N, mod);
            for (size_t i = 1; i < n->children.size(); ++i)
                acc = mul(acc, expand_node(n->children[i].node(), N, mod));
            return acc;
        }
        case Kind::Quotient:
            return mul(expand_node(n->children[0].node(), N, mod),
                       inv(expand_node(n->children[1].node(), N, mod)));
        case Kind::Power:
            return pow(expand_node(n->children[0].node(), N, mod), n->e);
        case Kind::Sum: {
            std::vector<std::pair<Int, TruncSeries>> terms;
            terms.reserve(n->children.size());
            for (size_t i = 0; i < n->children.size(); ++i)
                terms.emplace_back(n->sum_coefs[i], expand_node(n->children[i].node(), N, mod));
            return linear_combine(terms);
        }
        case Kind::Dilate: {
            TruncSeries child = expand_node(n->children[0].node(), (N + n->k - 1) / n->k, mod);
            return truncate(dilate(child, n->k), N);
        }
        case Kind::Extract: {
            TruncSeries child =
                expand_node(n->children[0].node(), n->p * (N - 1) + n->j + 1, mod);
            return extract(child, n->p, n->j);
        }
        default:
            throw std::logic_error("expand: unhandled node kind");
    }
}

}  // namespace

TruncSeries expand(const SeriesSpec& spec, long trunc, const std::optional<Int>& modulus,
                   Reduce mode) {
    if (!spec.valid()) throw std::invalid_argument("expand: empty spec");
    if (trunc < 1) throw std::invalid_argument("expand: trunc must be >= 1");
    if (!modulus || mode == Reduce::eager)
        return expand_node(spec.node(), trunc, modulus);
    return reduce_mod(expand_node(spec.node(), trunc, std::nullopt), *modulus);
}

}  // namespace qschur
