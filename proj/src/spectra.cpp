#include "srgdist/spectra.hpp"

namespace srg {

std::string to_string(CoverCaseTag tag) {
    switch (tag) {
        case CoverCaseTag::TriangleFreeIrreducible: return "triangle-free-irreducible";
        case CoverCaseTag::AdjacentShareNeighbor: return "adjacent-share-neighbor";
        case CoverCaseTag::DisconnectedCover: return "disconnected-cover";
        case CoverCaseTag::OutOfScope: return "out-of-scope";
    }
    return "?";
}

Spectrum srg_spectrum(const SrgParams& p) {
    p.validate();
    if (p.d == p.n - 1)
        throw InfeasibleParamsError("complete graph: common-neighbour counts are vacuous");
    if (p.c == 0)
        throw InfeasibleParamsError("c = 0 forces a disconnected union of cliques");
    const BigInt delta = BigInt(p.a - p.c) * (p.a - p.c) + 4 * BigInt(p.d - p.c);
    if (delta <= 0)
        throw InfeasibleParamsError("eigenvalue discriminant is not positive");

    QuadNum l1(p.a - p.c, 1, delta);
    QuadNum l2(p.a - p.c, -1, delta);

    // multiplicities: m1 + m2 = n - 1 and d + m1*l1 + m2*l2 = 0
    const BigInt bias = 2 * BigInt(p.d) + BigInt(p.n - 1) * (p.a - p.c);
    long long m1, m2;
    BigInt root = boost::multiprecision::sqrt(delta);
    if (root * root == delta) {
        BigInt num1 = BigInt(p.n - 1) - bias / root;
        if (bias % root != 0 || num1 % 2 != 0)
            throw InfeasibleParamsError("multiplicities are not integers for " + p.to_string());
        m1 = static_cast<long long>(num1 / 2);
        m2 = (p.n - 1) - m1;
    } else {
        if (bias != 0)
            throw InfeasibleParamsError("irrational sqrt needs the conference condition "
                                        "2d + (n-1)(a-c) = 0; got " + p.to_string());
        if ((p.n - 1) % 2 != 0)
            throw InfeasibleParamsError("conference multiplicities need odd n");
        m1 = m2 = (p.n - 1) / 2;
    }
    if (m1 < 0 || m2 < 0)
        throw InfeasibleParamsError("negative multiplicity for " + p.to_string());

    std::vector<SpecPair> pairs{{QuadNum::integer(p.d), 1}};
    if (m1 > 0) pairs.push_back({l1, m1});
    if (m2 > 0) pairs.push_back({l2, m2});
    return Spectrum(delta, std::move(pairs));
}

CoverCase classify_cover_case(const Graph& g, const SrgParams& p) {
    auto found = is_strongly_regular(g);
    if (!found || !(*found == p))
        throw NotSrgError("graph is not strongly regular with parameters " + p.to_string());
    if (p.a >= 1)
        return {CoverCaseTag::AdjacentShareNeighbor,
                "a = " + std::to_string(p.a) + ": every edge lies in a triangle"};
    if (is_irreducible(g))
        return {CoverCaseTag::TriangleFreeIrreducible,
                "a = 0 and all neighbourhoods distinct"};
    // reducible triangle-free SRG: must be complete bipartite with both
    // sides of size d and c = d
    std::vector<int> side;
    if (!is_bipartite(g, &side) || p.c != p.d)
        throw InconsistentInputError("reducible triangle-free srg is not K_{m,m}-shaped");
    int zeros = 0;
    for (int s : side) zeros += (s == 0);
    if (zeros != p.d || g.order() != 2 * p.d)
        throw InconsistentInputError("reducible triangle-free srg has uneven sides");
    return {CoverCaseTag::DisconnectedCover,
            "complete bipartite: c = d = " + std::to_string(p.d)};
}

int cover_distance_rule(bool same_vertex, bool same_side, bool adjacent_in_g,
                        CoverCaseTag cse) {
    if (same_vertex && adjacent_in_g)
        throw InconsistentInputError("a vertex cannot be adjacent to itself");
    switch (cse) {
        case CoverCaseTag::TriangleFreeIrreducible:
            if (same_vertex) return same_side ? 0 : 5;
            if (adjacent_in_g) return same_side ? 4 : 1;
            return same_side ? 2 : 3;
        case CoverCaseTag::AdjacentShareNeighbor:
            if (same_vertex && same_side) return 0;
            if (adjacent_in_g) return same_side ? 2 : 1;
            return same_side ? 2 : 3;
        default:
            throw BadCaseError("no distance rule for case " + to_string(cse));
    }
}

namespace {

void require_adjacency(const IntMatrix& a) {
    for (int i = 0; i < a.order(); ++i) {
        if (a.at(i, i) != 0)
            throw NotAdjacencyError("nonzero diagonal at " + std::to_string(i));
        for (int j = 0; j < a.order(); ++j) {
            const BigInt& v = a.at(i, j);
            if (v != 0 && v != 1)
                throw NotAdjacencyError("entry not 0/1 at (" + std::to_string(i) + "," +
                                        std::to_string(j) + ")");
            if (v != a.at(j, i))
                throw NotAdjacencyError("matrix not symmetric");
        }
    }
}

} // namespace

CoverBlocks cover_block_matrices(const IntMatrix& adjacency) {
    require_adjacency(adjacency);
    const int n = adjacency.order();
    CoverBlocks b{IntMatrix(2 * n), IntMatrix(2 * n), IntMatrix(2 * n), IntMatrix(2 * n),
                  IntMatrix(2 * n)};
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const BigInt& a = adjacency.at(i, j);
            b.cross_adj.at(i, n + j) = a;
            b.cross_adj.at(n + i, j) = a;
            b.same_adj.at(i, j) = a;
            b.same_adj.at(n + i, n + j) = a;
            b.same_ones.at(i, j) = 1;
            b.same_ones.at(n + i, n + j) = 1;
            b.cross_ones.at(i, n + j) = 1;
            b.cross_ones.at(n + i, j) = 1;
        }
        b.cross_eye.at(i, n + i) = 1;
        b.cross_eye.at(n + i, i) = 1;
    }
    return b;
}

namespace {

// case hypotheses, all read off the adjacency matrix and one exact square
void require_case_hypotheses(const IntMatrix& a, CoverCaseTag cse) {
    const int n = a.order();
    BigInt degree = 0;
    for (int j = 0; j < n; ++j) degree += a.at(0, j);
    for (int i = 1; i < n; ++i) {
        BigInt d = 0;
        for (int j = 0; j < n; ++j) d += a.at(i, j);
        if (d != degree) throw HypothesisViolatedError("base graph is not regular");
    }
    IntMatrix a2 = mat_mul(a, a);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            bool reachable2 = a.at(i, j) != 0 || a2.at(i, j) != 0;
            if (!reachable2) throw HypothesisViolatedError("base graph diameter exceeds 2");
            if (cse == CoverCaseTag::TriangleFreeIrreducible) {
                if (a.at(i, j) != 0 && a2.at(i, j) != 0)
                    throw HypothesisViolatedError("adjacent pair with a common neighbour");
            } else {
                if (a.at(i, j) != 0 && a2.at(i, j) == 0)
                    throw HypothesisViolatedError("adjacent pair with no common neighbour");
            }
        }
    if (n < 2 || a2.at(0, 0) == 0) throw HypothesisViolatedError("base graph has no edges");
    if (cse == CoverCaseTag::TriangleFreeIrreducible) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                bool same = true;
                for (int k = 0; k < n && same; ++k) same = a.at(i, k) == a.at(j, k);
                if (same) throw HypothesisViolatedError("base graph is reducible");
            }
    }
}

} // namespace

IntMatrix structured_cover_distance_matrix(const IntMatrix& adjacency, CoverCaseTag cse) {
    if (cse != CoverCaseTag::TriangleFreeIrreducible &&
        cse != CoverCaseTag::AdjacentShareNeighbor)
        throw HypothesisViolatedError("no structured form for case " + to_string(cse));
    require_adjacency(adjacency);
    require_case_hypotheses(adjacency, cse);

    CoverBlocks b = cover_block_matrices(adjacency);
    const IntMatrix eye2n = IntMatrix::identity(2 * adjacency.order());
    IntMatrix d = b.cross_adj * BigInt(-2);
    d += b.same_ones * BigInt(2);
    d += b.cross_ones * BigInt(3);
    d -= eye2n * BigInt(2);
    if (cse == CoverCaseTag::TriangleFreeIrreducible) {
        d += b.same_adj * BigInt(2);
        d += b.cross_eye * BigInt(2);
    }
    return d;
}

namespace {

std::string term(const QuadNum& value, long long mult, const std::string& origin) {
    return origin + " = " + value.to_string() + "^" + std::to_string(mult);
}

} // namespace

CoverSpectrum distance_spectrum_diam2(const Spectrum& base_spectrum, int n, int k,
                                      CoverCaseTag cse) {
    if (cse != CoverCaseTag::TriangleFreeIrreducible &&
        cse != CoverCaseTag::AdjacentShareNeighbor)
        throw BadCaseError("no distance spectrum for case " + to_string(cse));
    if (base_spectrum.total_multiplicity() != n)
        throw InconsistentInputError("base spectrum does not sum to the graph order");
    const auto& pairs = base_spectrum.pairs();
    if (pairs.empty() || !(pairs.front().value == QuadNum::integer(k)) ||
        pairs.front().mult != 1)
        throw InconsistentInputError("base spectrum must lead with the degree, multiplicity 1");

    CoverSpectrum out;
    if (k < 3)
        out.warnings.push_back("degree " + std::to_string(k) +
                               " is outside the k >= 3 hypothesis; result verified by oracle only");

    const QuadNum four = QuadNum::integer(4);
    const QuadNum two = QuadNum::integer(2);
    std::vector<SpecPair> terms;
    if (cse == CoverCaseTag::TriangleFreeIrreducible) {
        QuadNum principal = QuadNum::integer(5LL * n);
        QuadNum last = QuadNum::integer(4LL * k - n - 4);
        terms.push_back({principal, 1});
        out.raw_terms.push_back(term(principal, 1, "(5n)"));
        for (size_t i = 1; i < pairs.size(); ++i) {
            QuadNum v = pairs[i].value.scaled(4) - four;
            terms.push_back({v, pairs[i].mult});
            out.raw_terms.push_back(term(v, pairs[i].mult,
                                         "(4*(" + pairs[i].value.to_string() + ")-4)"));
        }
        terms.push_back({QuadNum(), static_cast<long long>(n) - 1});
        out.raw_terms.push_back(term(QuadNum(), n - 1, "0^(n-1)"));
        terms.push_back({last, 1});
        out.raw_terms.push_back(term(last, 1, "(4k-n-4)"));
    } else {
        QuadNum principal = QuadNum::integer(-2LL * k + 5LL * n - 2);
        QuadNum last = QuadNum::integer(2LL * k - n - 2);
        terms.push_back({principal, 1});
        out.raw_terms.push_back(term(principal, 1, "(-2k+5n-2)"));
        for (size_t i = 1; i < pairs.size(); ++i) {
            QuadNum plus = pairs[i].value.scaled(2) - two;
            QuadNum minus = pairs[i].value.scaled(-2) - two;
            terms.push_back({plus, pairs[i].mult});
            terms.push_back({minus, pairs[i].mult});
            out.raw_terms.push_back(term(plus, pairs[i].mult,
                                         "(2*(" + pairs[i].value.to_string() + ")-2)"));
            out.raw_terms.push_back(term(minus, pairs[i].mult,
                                         "(-2*(" + pairs[i].value.to_string() + ")-2)"));
        }
        terms.push_back({last, 1});
        out.raw_terms.push_back(term(last, 1, "(2k-n-2)"));
    }
    out.spectrum = Spectrum(base_spectrum.delta(), std::move(terms));
    return out;
}

CoverSpectrum distance_spectrum_cover(const SrgParams& p) {
    Spectrum base = srg_spectrum(p);
    CoverCaseTag cse;
    if (p.a != 0) {
        cse = CoverCaseTag::AdjacentShareNeighbor;
    } else if (p.c == p.d) {
        throw DisconnectedCoverError("parameters " + p.to_string() +
                                     " are complete bipartite: the cover is disconnected");
    } else {
        cse = CoverCaseTag::TriangleFreeIrreducible;
    }
    return distance_spectrum_diam2(base, p.n, p.d, cse);
}

} // namespace srg
