#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sl2trace/sl2.hpp"

namespace sl2trace {

/// Trace variable t_{i1...ik} of the ascending product A_{i1}...A_{ik}.
///
/// Stored as a bit mask over generators 1..63. Ordered by subset size, then
/// lexicographically on the ascending index list: t1 < t2 < t12 < t13 < t123.
class BasisVar {
public:
    BasisVar() = default;
    /// Indices must be strictly ascending and in [1, 63].
    explicit BasisVar(const std::vector<int>& ascending_indices);
    static BasisVar single(int generator);
    static BasisVar from_mask(std::uint64_t mask);

    std::vector<int> indices() const;
    std::uint64_t mask() const noexcept { return mask_; }
    int size() const noexcept;
    bool contains(int generator) const noexcept;
    int max_index() const noexcept;

    /// "t12"; when some index is >= 10 every index is prefixed by an
    /// underscore instead ("t_1_10", "t_12"), so that names never collide.
    std::string name() const;
    /// Inverse of name(). Throws Errc::Schema on malformed names.
    static BasisVar parse(std::string_view name);

    friend bool operator==(const BasisVar&, const BasisVar&) = default;
    friend std::strong_ordering operator<=>(const BasisVar& x, const BasisVar& y) noexcept;

private:
    std::uint64_t mask_ = 0;
};

/// All 2^n - 1 nonempty ascending subsets, in size-then-lex order.
std::vector<BasisVar> basis_for(int n);

/// A product of basis variables, kept sorted by variable with positive exponents.
class Monomial {
public:
    using Factor = std::pair<BasisVar, unsigned>;

    Monomial() = default;
    explicit Monomial(BasisVar v, unsigned exponent = 1);

    const std::vector<Factor>& factors() const noexcept { return factors_; }
    unsigned degree() const noexcept;
    unsigned exponent_of(BasisVar v) const noexcept;
    bool is_constant() const noexcept { return factors_.empty(); }

    friend Monomial operator*(const Monomial& x, const Monomial& y);
    friend bool operator==(const Monomial&, const Monomial&) = default;

    /// Canonical term order: total degree, then the expanded variable
    /// sequences compared lexicographically (t1^2 < t1*t2 < t2^2).
    friend std::strong_ordering operator<=>(const Monomial& x, const Monomial& y) noexcept;

    /// Removes one power of v; v must divide the monomial.
    Monomial without_one(BasisVar v) const;

private:
    explicit Monomial(std::vector<Factor> factors) : factors_(std::move(factors)) {}
    std::vector<Factor> factors_;
};

/// Sparse polynomial in the basis trace variables with exact integer coefficients.
class TracePoly {
public:
    using Terms = std::map<Monomial, mpz_class>;

    TracePoly() = default;
    TracePoly(long constant);  // NOLINT: integers promote naturally
    explicit TracePoly(const mpz_class& constant);
    static TracePoly variable(BasisVar v);
    static TracePoly term(const mpz_class& coeff, const Monomial& m);

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    unsigned degree() const noexcept;
    std::set<BasisVar> variables() const;
    bool contains(BasisVar v) const;

    TracePoly& operator+=(const TracePoly& q);
    TracePoly& operator-=(const TracePoly& q);
    friend TracePoly operator+(TracePoly p, const TracePoly& q) { return p += q; }
    friend TracePoly operator-(TracePoly p, const TracePoly& q) { return p -= q; }
    friend TracePoly operator-(const TracePoly& p);
    friend TracePoly operator*(const TracePoly& p, const TracePoly& q);
    friend bool operator==(const TracePoly&, const TracePoly&) = default;

    /// "t1^2 + t2^2 + t12^2 - t1*t2*t12 - 2": non-constant terms in canonical
    /// term order, then the constant term.
    std::string to_string() const;

private:
    void add_term(const Monomial& m, const mpz_class& c);
    Terms terms_;
};

inline TracePoly poly_add(const TracePoly& p, const TracePoly& q) { return p + q; }
inline TracePoly poly_mul(const TracePoly& p, const TracePoly& q) { return p * q; }
inline TracePoly poly_neg(const TracePoly& p) { return -p; }

using TraceValues = std::map<BasisVar, Complex>;

/// Evaluates with coefficients rounded to double. Throws Errc::MissingVariable.
Complex evaluate_poly(const TracePoly& p, const TraceValues& values);

/// Numeric traces of every ascending product for the basis of size n.
TraceValues basis_traces(std::span<const Mat2C> generators);

/// The ascending product A_{i1}...A_{ik} named by v.
FreeWord basis_word(BasisVar v);

}  // namespace sl2trace
