#include "srgdist/oracles.hpp"

#include <algorithm>

namespace srg {

namespace {

// Element of Q(sqrt(delta)) with full rational coordinates, used only inside
// the Vandermonde solve where division is required.
struct QuadRat {
    BigRat x, y; // x + y*sqrt(delta)

    bool is_zero() const { return x == 0 && y == 0; }
};

struct QuadField {
    BigInt delta;

    QuadRat add(const QuadRat& a, const QuadRat& b) const { return {a.x + b.x, a.y + b.y}; }
    QuadRat sub(const QuadRat& a, const QuadRat& b) const { return {a.x - b.x, a.y - b.y}; }
    QuadRat mul(const QuadRat& a, const QuadRat& b) const {
        return {a.x * b.x + a.y * b.y * BigRat(delta), a.x * b.y + a.y * b.x};
    }
    QuadRat div(const QuadRat& a, const QuadRat& b) const {
        BigRat norm = b.x * b.x - b.y * b.y * BigRat(delta);
        if (norm == 0)
            throw NonIntegralSolutionError("field division by zero in multiplicity solve");
        QuadRat conj{b.x / norm, -b.y / norm};
        return mul(a, conj);
    }
};

QuadRat to_quadrat(const QuadNum& v) {
    return {BigRat(v.p(), 2), BigRat(v.q(), 2)};
}

} // namespace

bool annihilator_check(const IntMatrix& m, const Spectrum& spectrum) {
    if (spectrum.total_multiplicity() != m.order())
        throw OrderMismatchError("spectrum order " + std::to_string(spectrum.total_multiplicity()) +
                                 " != matrix order " + std::to_string(m.order()));

    const int n = m.order();
    std::vector<std::pair<BigInt, BigInt>> quad_classes; // (p, |q|) per conjugate family
    std::vector<BigInt> rational_ps;
    for (const auto& v : spectrum.distinct_values()) {
        if (v.is_rational()) {
            rational_ps.push_back(v.p());
        } else {
            std::pair<BigInt, BigInt> key{v.p(), boost::multiprecision::abs(v.q())};
            if (std::find(quad_classes.begin(), quad_classes.end(), key) == quad_classes.end())
                quad_classes.push_back(key);
        }
    }

    IntMatrix product = IntMatrix::identity(n);
    const IntMatrix eye = IntMatrix::identity(n);

    for (const auto& p : rational_ps) {
        IntMatrix factor = m;
        if (p % 2 == 0) {
            factor -= eye * BigInt(p / 2);
        } else {
            factor *= 2;
            factor -= eye * p; // denominator cleared: 2M - pI
        }
        product = mat_mul(product, factor);
        if (product.is_zero()) return true; // zero is absorbing
    }

    if (!quad_classes.empty()) {
        IntMatrix m2 = mat_mul(m, m);
        for (const auto& [p, q] : quad_classes) {
            BigInt c4 = p * p - q * q * spectrum.delta(); // 4 * (mu * conj(mu))
            if (c4 % 4 != 0)
                throw NonIntegerFactorError("quadratic factor constant (" + p.str() + "^2 - " +
                                            q.str() + "^2*" + spectrum.delta().str() +
                                            ")/4 is not an integer");
            IntMatrix factor = m2;
            factor -= m * p;
            factor += eye * BigInt(c4 / 4);
            product = mat_mul(product, factor);
            if (product.is_zero()) return true;
        }
    }

    return product.is_zero();
}

std::vector<long long> multiplicity_solve(const IntMatrix& m,
                                          const std::vector<QuadNum>& distinct_eigenvalues) {
    const size_t r = distinct_eigenvalues.size();
    if (r == 0)
        throw NonIntegralSolutionError("no eigenvalues supplied");
    for (size_t i = 0; i < r; ++i)
        for (size_t j = i + 1; j < r; ++j)
            if (distinct_eigenvalues[i] == distinct_eigenvalues[j])
                throw NonIntegralSolutionError("eigenvalues are not pairwise distinct");

    BigInt delta = 0;
    for (const auto& v : distinct_eigenvalues)
        if (!v.is_rational()) {
            if (delta != 0 && delta != v.delta())
                throw DeltaMismatchError("eigenvalues from different quadratic fields");
            delta = v.delta();
        }
    QuadField field{delta};

    // power traces via a sequential power chain
    std::vector<BigInt> traces(r);
    traces[0] = m.order();
    IntMatrix power = m;
    for (size_t p = 1; p < r; ++p) {
        traces[p] = mat_trace(power);
        if (p + 1 < r) power = mat_mul(power, m);
    }

    // Vandermonde system: rows are powers p, columns are eigenvalues
    std::vector<std::vector<QuadRat>> aug(r, std::vector<QuadRat>(r + 1));
    for (size_t j = 0; j < r; ++j) {
        QuadRat acc{1, 0};
        for (size_t p = 0; p < r; ++p) {
            aug[p][j] = acc;
            acc = field.mul(acc, to_quadrat(distinct_eigenvalues[j]));
        }
    }
    for (size_t p = 0; p < r; ++p) aug[p][r] = {BigRat(traces[p]), 0};

    // exact Gaussian elimination with first-nonzero pivoting
    for (size_t col = 0; col < r; ++col) {
        size_t piv = col;
        while (piv < r && aug[piv][col].is_zero()) ++piv;
        if (piv == r)
            throw NonIntegralSolutionError("singular system: eigenvalues not distinct?");
        std::swap(aug[piv], aug[col]);
        QuadRat lead = aug[col][col];
        for (size_t j = col; j <= r; ++j) aug[col][j] = field.div(aug[col][j], lead);
        for (size_t i = 0; i < r; ++i) {
            if (i == col || aug[i][col].is_zero()) continue;
            QuadRat f = aug[i][col];
            for (size_t j = col; j <= r; ++j)
                aug[i][j] = field.sub(aug[i][j], field.mul(f, aug[col][j]));
        }
    }

    std::vector<long long> mults(r);
    long long sum = 0;
    for (size_t j = 0; j < r; ++j) {
        const QuadRat& s = aug[j][r];
        if (s.y != 0)
            throw NonIntegralSolutionError("multiplicity has an irrational part");
        if (boost::multiprecision::denominator(s.x) != 1)
            throw NonIntegralSolutionError("multiplicity is not an integer");
        BigInt num = boost::multiprecision::numerator(s.x);
        if (num < 0)
            throw NonIntegralSolutionError("multiplicity is negative");
        mults[j] = static_cast<long long>(num);
        sum += mults[j];
    }
    if (sum != m.order())
        throw NonIntegralSolutionError("multiplicities sum to " + std::to_string(sum) +
                                       ", expected " + std::to_string(m.order()));
    return mults;
}

} // namespace srg
