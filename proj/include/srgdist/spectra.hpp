#ifndef SRGDIST_SPECTRA_HPP
#define SRGDIST_SPECTRA_HPP

#include <string>
#include <vector>

#include "srgdist/oracles.hpp"

namespace srg {

/// Which closed form (if any) applies to the bipartite double cover of a
/// diameter-2 regular graph.
enum class CoverCaseTag {
    TriangleFreeIrreducible, // a = 0, distinct vertices have distinct neighbourhoods
    AdjacentShareNeighbor,   // every adjacent pair has a common neighbour
    DisconnectedCover,       // base graph bipartite: the cover splits in two
    OutOfScope,              // no closed form applies
};

std::string to_string(CoverCaseTag tag);

struct CoverCase {
    CoverCaseTag tag = CoverCaseTag::OutOfScope;
    std::string detail;
};

/// The five order-2n block matrices the structured distance matrix is built
/// from, under the fixed (v, i) -> v + i*n encoding.
struct CoverBlocks {
    IntMatrix cross_adj;  // [[O, A], [A, O]] -- adjacency of the cover
    IntMatrix same_adj;   // [[A, O], [O, A]]
    IntMatrix same_ones;  // [[J, O], [O, J]]
    IntMatrix cross_ones; // [[O, J], [J, O]]
    IntMatrix cross_eye;  // [[O, I], [I, O]]
};

/// Adjacency spectrum {d^1, l1^m1, l2^m2} of a strongly regular graph with
/// l1,2 = ((a-c) +- sqrt(D))/2, D = (a-c)^2 + 4(d-c), and the multiplicities
/// fixed by the trace identities. Throws InfeasibleParamsError when the
/// multiplicities are not nonnegative integers (for irrational sqrt(D) this
/// requires the conference condition 2d + (n-1)(a-c) = 0), or when the
/// parameters force a complete or disconnected graph.
Spectrum srg_spectrum(const SrgParams& p);

/// Case split for the cover of a strongly regular graph: a >= 1 means every
/// edge lies in a triangle; a = 0 splits on irreducibility, where the
/// reducible case is exactly the complete bipartite K_{m,m} (c = d) and its
/// cover is disconnected. Throws NotSrgError if g's parameters are not p.
CoverCase classify_cover_case(const Graph& g, const SrgParams& p);

/// Distance in the cover between (v_i, r) and (v_j, s), from the case
/// analysis that proves the structured form. Inputs describe the pair:
/// same_vertex (v_i = v_j), same_side (r = s), adjacent_in_g.
/// Throws InconsistentInputError, BadCaseError.
int cover_distance_rule(bool same_vertex, bool same_side, bool adjacent_in_g, CoverCaseTag cse);

/// Builds the five block matrices from a 0/1 symmetric zero-diagonal
/// adjacency matrix. Throws NotAdjacencyError.
CoverBlocks cover_block_matrices(const IntMatrix& adjacency);

/// Closed-form distance matrix of the cover:
///   triangle-free irreducible: D = -2M + 2M' + 2X + 3Y + 2P - 2I
///   adjacent-share-neighbour:  D = -2M + 2X + 3Y - 2I
/// (M cross adjacency, M' same-side adjacency, X same-side ones, Y cross
/// ones, P cross identity). Checks the case's hypotheses on the base graph
/// and throws HypothesisViolatedError if they fail.
IntMatrix structured_cover_distance_matrix(const IntMatrix& adjacency, CoverCaseTag cse);

/// A closed-form spectrum plus its pre-merge terms and any hypothesis
/// warnings picked up along the way.
struct CoverSpectrum {
    Spectrum spectrum;
    std::vector<std::string> raw_terms; // pre-merge terms, for traceability
    std::vector<std::string> warnings;
};

/// Distance spectrum of the cover of a k-regular diameter-2 graph with base
/// spectrum {k^1, l_i^{m_i}}:
///   triangle-free irreducible: {(5n)^1} + {(4l-4)^m} + {0^(n-1)} + {(4k-n-4)^1}
///   adjacent-share-neighbour:  {(-2k+5n-2)^1} + {(2l-2)^m} + {(-2l-2)^m} + {(2k-n-2)^1}
/// canonically merged. k = 2 is accepted but flagged (the derivation is
/// stated for k >= 3). Throws BadCaseError for the other case tags.
CoverSpectrum distance_spectrum_diam2(const Spectrum& base_spectrum, int n, int k,
                                      CoverCaseTag cse);

/// Distance spectrum of the cover of a strongly regular graph straight from
/// its parameters. Dispatches on a and the K_{m,m} signature (a = 0, c = d);
/// the latter throws DisconnectedCoverError since the cover has no distance
/// matrix. Also throws InfeasibleParamsError via srg_spectrum.
CoverSpectrum distance_spectrum_cover(const SrgParams& p);

} // namespace srg

#endif
