#include "srgdist/quadnum.hpp"

#include <algorithm>

namespace srg {

namespace {

// floor square root; exact detection of perfect squares
bool perfect_square(const BigInt& d, BigInt& root) {
    if (d < 0) return false;
    root = boost::multiprecision::sqrt(d);
    return root * root == d;
}

} // namespace

QuadNum::QuadNum(BigInt p, BigInt q, BigInt delta)
    : p_(std::move(p)), q_(std::move(q)), delta_(std::move(delta)) {
    if (delta_ < 0)
        throw BadParamsError("quadnum: delta must be nonnegative");
    if (q_ == 0) {
        delta_ = 0;
        return;
    }
    BigInt root;
    if (perfect_square(delta_, root)) {
        p_ += q_ * root;
        q_ = 0;
        delta_ = 0;
    }
}

BigRat QuadNum::rational_value() const {
    if (!is_rational())
        throw InconsistentInputError("quadnum: irrational value has no rational form");
    return BigRat(p_, 2);
}

BigInt QuadNum::common_delta(const QuadNum& x, const QuadNum& y) {
    if (x.q_ == 0) return y.delta_;
    if (y.q_ == 0) return x.delta_;
    if (x.delta_ != y.delta_)
        throw DeltaMismatchError("quadnum: mixing sqrt(" + x.delta_.str() + ") with sqrt(" +
                                 y.delta_.str() + ")");
    return x.delta_;
}

QuadNum QuadNum::operator-() const { return QuadNum(-p_, -q_, delta_); }

QuadNum QuadNum::operator+(const QuadNum& o) const {
    return QuadNum(p_ + o.p_, q_ + o.q_, common_delta(*this, o));
}

QuadNum QuadNum::operator-(const QuadNum& o) const {
    return QuadNum(p_ - o.p_, q_ - o.q_, common_delta(*this, o));
}

QuadNum QuadNum::operator*(const QuadNum& o) const {
    BigInt d = common_delta(*this, o);
    // (p1 + q1 s)(p2 + q2 s) / 4 with s = sqrt(d)
    BigInt p = p_ * o.p_ + q_ * o.q_ * d;
    BigInt q = p_ * o.q_ + q_ * o.p_;
    if (p % 2 != 0 || q % 2 != 0)
        throw InconsistentInputError("quadnum: product leaves the half-integer lattice");
    return QuadNum(p / 2, q / 2, d);
}

QuadNum QuadNum::conjugate() const { return QuadNum(p_, -q_, delta_); }

QuadNum QuadNum::scaled(const BigInt& s) const { return QuadNum(p_ * s, q_ * s, delta_); }

int QuadNum::compare(const QuadNum& x, const QuadNum& y) {
    // sign of (p + q sqrt(d))/2 for the difference
    BigInt d = common_delta(x, y);
    BigInt p = x.p_ - y.p_;
    BigInt q = (x.q_ - y.q_);
    auto sgn = [](const BigInt& v) { return v > 0 ? 1 : v < 0 ? -1 : 0; };
    if (q == 0) return sgn(p);
    if (p >= 0 && q > 0) return 1;
    if (p <= 0 && q < 0) return -1;
    // p and q of opposite signs: compare p^2 with q^2 d
    BigInt lhs = p * p, rhs = q * q * d;
    if (p > 0) return sgn(lhs - rhs); // q < 0
    return sgn(rhs - lhs);            // p < 0, q > 0
}

std::string QuadNum::to_string() const {
    if (q_ == 0) {
        if (p_ % 2 == 0) return BigInt(p_ / 2).str();
        return p_.str() + "/2";
    }
    std::string root = "√" + delta_.str();
    auto term = [&](const BigInt& coeff) {
        if (coeff == 1) return root;
        if (coeff == -1) return "-" + root;
        return coeff.str() + root;
    };
    if (p_ % 2 == 0 && q_ % 2 == 0) {
        BigInt hp = p_ / 2, hq = q_ / 2;
        if (hp == 0) return term(hq);
        return hp.str() + (hq > 0 ? "+" : "") + term(hq);
    }
    return "(" + p_.str() + (q_ > 0 ? "+" : "") + term(q_) + ")/2";
}

Spectrum::Spectrum(BigInt delta, std::vector<SpecPair> pairs) : delta_(std::move(delta)) {
    if (delta_ < 0) throw BadParamsError("spectrum: delta must be nonnegative");
    BigInt root;
    if (delta_ != 0 && perfect_square(delta_, root))
        delta_ = 0; // perfect square: every value lands in Q
    for (auto& pr : pairs) {
        if (pr.mult <= 0)
            throw BadParamsError("spectrum: multiplicities must be positive");
        if (!pr.value.is_rational() && pr.value.delta() != delta_) {
            if (delta_ == 0)
                delta_ = pr.value.delta(); // adopt the irrational members' field
            else
                throw DeltaMismatchError("spectrum: eigenvalue delta " + pr.value.delta().str() +
                                         " conflicts with spectrum delta " + delta_.str());
        }
    }
    std::sort(pairs.begin(), pairs.end(), [](const SpecPair& a, const SpecPair& b) {
        return QuadNum::compare(a.value, b.value) > 0;
    });
    for (auto& pr : pairs) {
        if (!pairs_.empty() && pairs_.back().value == pr.value)
            pairs_.back().mult += pr.mult;
        else
            pairs_.push_back(pr);
    }
    bool any_irrational = false;
    for (const auto& pr : pairs_) any_irrational |= !pr.value.is_rational();
    if (!any_irrational) delta_ = 0;
}

long long Spectrum::total_multiplicity() const {
    long long t = 0;
    for (const auto& pr : pairs_) t += pr.mult;
    return t;
}

QuadNum Spectrum::weighted_sum() const {
    QuadNum s;
    for (const auto& pr : pairs_) s = s + pr.value.scaled(pr.mult);
    return s;
}

std::vector<QuadNum> Spectrum::distinct_values() const {
    std::vector<QuadNum> v;
    v.reserve(pairs_.size());
    for (const auto& pr : pairs_) v.push_back(pr.value);
    return v;
}

nlohmann::ordered_json Spectrum::to_json() const {
    nlohmann::ordered_json j;
    j["delta"] = static_cast<long long>(delta_);
    j["eigs"] = nlohmann::ordered_json::array();
    for (const auto& pr : pairs_) {
        j["eigs"].push_back({{"p", static_cast<long long>(pr.value.p())},
                             {"q", static_cast<long long>(pr.value.q())},
                             {"mult", pr.mult}});
    }
    return j;
}

Spectrum Spectrum::from_json(const nlohmann::json& j) {
    BigInt delta = j.at("delta").get<long long>();
    std::vector<SpecPair> pairs;
    for (const auto& e : j.at("eigs")) {
        pairs.push_back({QuadNum(e.at("p").get<long long>(), e.at("q").get<long long>(), delta),
                         e.at("mult").get<long long>()});
    }
    return Spectrum(delta, std::move(pairs));
}

std::string Spectrum::to_string() const {
    std::string s = "{";
    for (size_t i = 0; i < pairs_.size(); ++i) {
        if (i) s += ", ";
        std::string v = pairs_[i].value.to_string();
        bool plain = v.find_first_not_of("0123456789") == std::string::npos;
        if (!plain) v = "(" + v + ")";
        s += v + "^" + std::to_string(pairs_[i].mult);
    }
    return s + "}";
}

} // namespace srg
