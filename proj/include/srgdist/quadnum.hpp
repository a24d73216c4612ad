#ifndef SRGDIST_QUADNUM_HPP
#define SRGDIST_QUADNUM_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "srgdist/int_matrix.hpp"

namespace srg {

/// Exact element of Q(sqrt(delta)) in the half-integer form
/// (p + q*sqrt(delta))/2, the shape every eigenvalue in this library takes.
///
/// Canonical form: a perfect-square delta is absorbed into p (so rational
/// values always carry q = 0 and delta = 0), which makes structural equality
/// coincide with value equality.
class QuadNum {
  public:
    QuadNum() = default;
    QuadNum(BigInt p, BigInt q, BigInt delta);

    /// The integer v as (2v + 0*sqrt(delta))/2.
    static QuadNum integer(const BigInt& v) { return QuadNum(2 * v, 0, 0); }
    /// (p + q*sqrt(delta))/2 without the /2, i.e. p + q*sqrt(delta).
    static QuadNum whole(const BigInt& p, const BigInt& q, const BigInt& delta) {
        return QuadNum(2 * p, 2 * q, delta);
    }

    const BigInt& p() const { return p_; }
    const BigInt& q() const { return q_; }
    const BigInt& delta() const { return delta_; }
    bool is_rational() const { return q_ == 0; }
    /// Value p/2 as an exact rational; requires is_rational().
    BigRat rational_value() const;

    QuadNum operator-() const;
    QuadNum operator+(const QuadNum& o) const;
    QuadNum operator-(const QuadNum& o) const;
    /// Field product. Throws InconsistentInputError when the product leaves
    /// the half-integer lattice (cannot happen for algebraic integers).
    QuadNum operator*(const QuadNum& o) const;
    QuadNum conjugate() const;
    QuadNum scaled(const BigInt& s) const;

    bool operator==(const QuadNum&) const = default;
    /// Sign of the real value x - y; exact.
    static int compare(const QuadNum& x, const QuadNum& y);

    std::string to_string() const;

  private:
    BigInt p_ = 0;
    BigInt q_ = 0;
    BigInt delta_ = 0;

    static BigInt common_delta(const QuadNum& x, const QuadNum& y);
};

/// Eigenvalue with its multiplicity.
struct SpecPair {
    QuadNum value;
    long long mult = 0;

    bool operator==(const SpecPair&) const = default;
};

/// Multiset of eigenvalues in canonical form: equal values merged, sorted in
/// descending order, all irrational members sharing one delta.
class Spectrum {
  public:
    Spectrum() = default;
    /// Canonically merges `pairs`. Throws DeltaMismatchError on conflicting
    /// deltas and BadParamsError on nonpositive multiplicities.
    Spectrum(BigInt delta, std::vector<SpecPair> pairs);

    const BigInt& delta() const { return delta_; }
    const std::vector<SpecPair>& pairs() const { return pairs_; }
    long long total_multiplicity() const;
    /// Sum of value * multiplicity (the trace the spectrum implies).
    QuadNum weighted_sum() const;
    std::vector<QuadNum> distinct_values() const;

    bool operator==(const Spectrum&) const = default;

    /// {"delta": D, "eigs": [{"p":..., "q":..., "mult":...}, ...]}
    nlohmann::ordered_json to_json() const;
    static Spectrum from_json(const nlohmann::json& j);

    /// e.g. "{50^1, 0^14, (-12)^4, (-2)^1}" in descending value order.
    std::string to_string() const;

  private:
    BigInt delta_ = 0;
    std::vector<SpecPair> pairs_;
};

} // namespace srg

#endif
