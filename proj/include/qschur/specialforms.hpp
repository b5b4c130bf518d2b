#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qschur/series.hpp"

namespace qschur {

/// Modular reduction strategy during expansion of a symbolic spec. Results
/// are identical either way; eager keeps intermediates small.
enum class Reduce { lazy, eager };

/// Named generating functions from the problem domain.
enum class NamedId {
    schur_over,         // Sbar_t: f2^3 f_t^2 f_{4t} / (f1^2 f4 f_{2t}^3),  t >= 2
    schur,              // S_t:    f2 f_t / (f1 f_{2t}),  odd t >= 3
    overpartition,      // f2 / f1^2
    overpartition_odd,  // f2^3 / (f1^2 f4)
    p_neg,              // sum over n in Z of (-q)^{(3n^2+n)/2}
    a_cubed,            // f3 f12 f18^5 / (f6^2 f9^2 f36^2)
};

/// Symbolic description of a q-series: eta powers, Pochhammer products,
/// theta functions, named generating functions, and arithmetic combinations
/// (including dilation q -> q^k and arithmetic-progression extraction).
/// Immutable value type; cheap to copy.
class SeriesSpec {
public:
    SeriesSpec() = default;  // empty; only assignable

    static SeriesSpec integer(const Int& c);
    static SeriesSpec monomial(const Int& c, long d);  // c * q^d
    static SeriesSpec eta(long k, long e = 1);         // f_k^e, k >= 1
    /// prod_{n>=0} (1 - sign q^{a+bn});  sign=+1 is (q^a;q^b)_inf.
    static SeriesSpec pochhammer(long a, long b, int sign = +1);
    static SeriesSpec phi(int sign, long dilation = 1);   // phi(+-q^k)
    static SeriesSpec psi(int sign, long dilation = 1);   // psi(+-q^k)
    /// Ramanujan's general f(eps_r q^r, eps_s q^s); requires r+s >= 1.
    static SeriesSpec theta(int eps_r, long r, int eps_s, long s);
    static SeriesSpec named(NamedId id, long t = 0);

    friend SeriesSpec operator*(const SeriesSpec& a, const SeriesSpec& b);
    friend SeriesSpec operator/(const SeriesSpec& a, const SeriesSpec& b);
    friend SeriesSpec operator+(const SeriesSpec& a, const SeriesSpec& b);
    friend SeriesSpec operator-(const SeriesSpec& a, const SeriesSpec& b);
    friend SeriesSpec pow(const SeriesSpec& a, long e);
    friend SeriesSpec dilate(const SeriesSpec& a, long k);
    friend SeriesSpec extract(const SeriesSpec& a, long p, long j);

    bool valid() const { return node_ != nullptr; }

    /// Canonical textual form; parse(to_string(s)) round-trips.
    std::string to_string() const;

    struct Node;
    const Node* node() const { return node_.get(); }

protected:
    explicit SeriesSpec(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

private:
    std::shared_ptr<const Node> node_;
};

/// Parse the compact spec grammar, e.g.
///   f1^-2 * f2^3 * (f4^-1 + 2*q^3) / f3
///   schur_over(3), phi(-q^2), psi(q^3), f(q^2,-q^3), poch(-q^5,q^25)
///   dilate(p_neg, 3), extract(schur_over(3), 24, 12)
/// Throws std::invalid_argument with a position message on bad input.
SeriesSpec parse_spec(const std::string& text);

/// Evaluate a spec to a TruncSeries of exactly `trunc` coefficients.
/// With a modulus, `mode` picks eager per-node reduction or a single lazy
/// reduction at the end; outputs are identical.
TruncSeries expand(const SeriesSpec& spec, long trunc,
                   const std::optional<Int>& modulus = std::nullopt,
                   Reduce mode = Reduce::eager);

// ---- direct constructors (the workhorses behind expand) ----

/// f_k^e to `trunc` coefficients via the pentagonal-number expansion.
TruncSeries eta_power(long k, long e, long trunc,
                      const std::optional<Int>& modulus = std::nullopt);

/// prod f_k^{e_k} with a single pass plan; exponent map may repeat keys.
TruncSeries eta_quotient_series(const std::map<long, long>& exps, long trunc,
                                const std::optional<Int>& modulus = std::nullopt);

/// prod_{n>=0} (1 - sign q^{a+bn}) by direct finite product.
TruncSeries pochhammer(long a, long b, long trunc, int sign = +1,
                       const std::optional<Int>& modulus = std::nullopt);

TruncSeries theta_phi(int sign, long trunc);
TruncSeries theta_psi(int sign, long trunc);
TruncSeries theta_general(int eps_r, long r, int eps_s, long s, long trunc);

TruncSeries named_series(NamedId id, long t, long trunc,
                         const std::optional<Int>& modulus = std::nullopt);

/// The eta-quotient exponent map of Eq-style named forms (schur_over etc.);
/// throws for the sum-defined p_neg.
std::map<long, long> named_eta_exponents(NamedId id, long t);

}  // namespace qschur
