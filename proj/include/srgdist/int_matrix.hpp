#ifndef SRGDIST_INT_MATRIX_HPP
#define SRGDIST_INT_MATRIX_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "srgdist/graph.hpp"

namespace srg {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Dense square matrix of arbitrary-precision integers. All arithmetic is
/// exact; nothing in the verification path ever rounds.
class IntMatrix {
  public:
    explicit IntMatrix(int order);
    static IntMatrix identity(int order);
    static IntMatrix ones(int order); // all-ones J
    static IntMatrix adjacency(const Graph& g);
    static IntMatrix from_distance(const DistanceMatrix& d);

    int order() const { return n_; }
    BigInt& at(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
    const BigInt& at(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

    IntMatrix& operator+=(const IntMatrix& o);
    IntMatrix& operator-=(const IntMatrix& o);
    IntMatrix& operator*=(const BigInt& s);
    friend IntMatrix operator+(IntMatrix a, const IntMatrix& b) { return a += b; }
    friend IntMatrix operator-(IntMatrix a, const IntMatrix& b) { return a -= b; }
    friend IntMatrix operator*(IntMatrix a, const BigInt& s) { return a *= s; }

    bool operator==(const IntMatrix&) const = default;
    bool is_zero() const;
    bool is_symmetric() const;

  private:
    int n_;
    std::vector<BigInt> a_;
};

/// Exact product; rows of the result are computed in parallel when OpenMP
/// is enabled. Throws OrderMismatchError.
IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);

/// Serial reference for mat_mul, kept for tests and the benchmark.
IntMatrix mat_mul_serial(const IntMatrix& a, const IntMatrix& b);

BigInt mat_trace(const IntMatrix& a);

/// Basis of the rational null space of m, via exact Gauss-Jordan
/// elimination. Empty result = trivial kernel.
std::vector<std::vector<BigRat>> rational_kernel_basis(const IntMatrix& m);

} // namespace srg

#endif
