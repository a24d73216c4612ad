#include "srgdist/int_matrix.hpp"

namespace srg {

IntMatrix::IntMatrix(int order) : n_(order) {
    if (order < 1) throw BadParamsError("matrix order must be positive");
    a_.resize(static_cast<size_t>(n_) * n_);
}

IntMatrix IntMatrix::identity(int order) {
    IntMatrix m(order);
    for (int i = 0; i < order; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::ones(int order) {
    IntMatrix m(order);
    for (auto& x : m.a_) x = 1;
    return m;
}

IntMatrix IntMatrix::adjacency(const Graph& g) {
    IntMatrix m(g.order());
    for (int u = 0; u < g.order(); ++u)
        for (int v : g.neighbors(u)) m.at(u, v) = 1;
    return m; // symmetric by construction of Graph
}

IntMatrix IntMatrix::from_distance(const DistanceMatrix& d) {
    IntMatrix m(d.order());
    for (int i = 0; i < d.order(); ++i)
        for (int j = 0; j < d.order(); ++j) m.at(i, j) = d.at(i, j);
    return m;
}

IntMatrix& IntMatrix::operator+=(const IntMatrix& o) {
    if (n_ != o.n_) throw OrderMismatchError("matrix order mismatch in add");
    for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
}

IntMatrix& IntMatrix::operator-=(const IntMatrix& o) {
    if (n_ != o.n_) throw OrderMismatchError("matrix order mismatch in subtract");
    for (size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
}

IntMatrix& IntMatrix::operator*=(const BigInt& s) {
    for (auto& x : a_) x *= s;
    return *this;
}

bool IntMatrix::is_zero() const {
    for (const auto& x : a_)
        if (x != 0) return false;
    return true;
}

bool IntMatrix::is_symmetric() const {
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

namespace {

inline void mul_row(const IntMatrix& a, const IntMatrix& b, IntMatrix& out, int i) {
    const int n = a.order();
    for (int k = 0; k < n; ++k) {
        const BigInt& aik = a.at(i, k);
        if (aik == 0) continue;
        for (int j = 0; j < n; ++j) {
            const BigInt& bkj = b.at(k, j);
            if (bkj != 0) out.at(i, j) += aik * bkj;
        }
    }
}

} // namespace

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
    if (a.order() != b.order()) throw OrderMismatchError("matrix order mismatch in product");
    IntMatrix out(a.order());
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < a.order(); ++i) mul_row(a, b, out, i);
    return out;
}

IntMatrix mat_mul_serial(const IntMatrix& a, const IntMatrix& b) {
    if (a.order() != b.order()) throw OrderMismatchError("matrix order mismatch in product");
    IntMatrix out(a.order());
    for (int i = 0; i < a.order(); ++i) mul_row(a, b, out, i);
    return out;
}

BigInt mat_trace(const IntMatrix& a) {
    BigInt t = 0;
    for (int i = 0; i < a.order(); ++i) t += a.at(i, i);
    return t;
}

std::vector<std::vector<BigRat>> rational_kernel_basis(const IntMatrix& m) {
    const int n = m.order();
    std::vector<std::vector<BigRat>> rows(static_cast<size_t>(n),
                                          std::vector<BigRat>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) rows[static_cast<size_t>(i)][static_cast<size_t>(j)] = m.at(i, j);

    // Gauss-Jordan to reduced row echelon form
    std::vector<int> pivot_col;
    int r = 0;
    for (int col = 0; col < n && r < n; ++col) {
        int pr = -1;
        for (int i = r; i < n; ++i)
            if (rows[static_cast<size_t>(i)][static_cast<size_t>(col)] != 0) { pr = i; break; }
        if (pr < 0) continue;
        std::swap(rows[static_cast<size_t>(pr)], rows[static_cast<size_t>(r)]);
        BigRat inv = rows[static_cast<size_t>(r)][static_cast<size_t>(col)];
        for (int j = col; j < n; ++j) rows[static_cast<size_t>(r)][static_cast<size_t>(j)] /= inv;
        for (int i = 0; i < n; ++i) {
            if (i == r) continue;
            BigRat f = rows[static_cast<size_t>(i)][static_cast<size_t>(col)];
            if (f == 0) continue;
            for (int j = col; j < n; ++j)
                rows[static_cast<size_t>(i)][static_cast<size_t>(j)] -=
                    f * rows[static_cast<size_t>(r)][static_cast<size_t>(j)];
        }
        pivot_col.push_back(col);
        ++r;
    }

    std::vector<char> is_pivot(static_cast<size_t>(n), 0);
    for (int c : pivot_col) is_pivot[static_cast<size_t>(c)] = 1;

    std::vector<std::vector<BigRat>> basis;
    for (int free = 0; free < n; ++free) {
        if (is_pivot[static_cast<size_t>(free)]) continue;
        std::vector<BigRat> v(static_cast<size_t>(n));
        v[static_cast<size_t>(free)] = 1;
        for (int i = 0; i < r; ++i)
            v[static_cast<size_t>(pivot_col[static_cast<size_t>(i)])] =
                -rows[static_cast<size_t>(i)][static_cast<size_t>(free)];
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace srg
