// Compares the OpenMP kernels against their serial references:
// all-pairs BFS (one row per source) and exact big-integer matrix products.
// Results are checked for equality before any timing is reported.

#include <chrono>
#include <iostream>
#include <random>
#include <string>

#include "srgdist/constructions.hpp"
#include "srgdist/int_matrix.hpp"

using namespace srg;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

void bench_bfs(int rook_size) {
    Graph g = rook(rook_size);
    std::cout << "all-pairs BFS on rook:" << rook_size << " (" << g.order() << " vertices, "
              << g.edge_count() << " edges)\n";

    auto t0 = std::chrono::steady_clock::now();
    DistanceMatrix serial = distance_matrix_serial(g);
    double t_serial = ms_since(t0);

    t0 = std::chrono::steady_clock::now();
    DistanceMatrix parallel = distance_matrix(g);
    double t_parallel = ms_since(t0);

    std::cout << "  serial   " << t_serial << " ms\n";
    std::cout << "  parallel " << t_parallel << " ms  (x" << t_serial / t_parallel << ")\n";
    std::cout << "  equal: " << (serial == parallel ? "yes" : "NO") << "\n";
}

void bench_matmul(int order) {
    std::mt19937_64 rng(7);
    IntMatrix a(order), b(order);
    for (int i = 0; i < order; ++i)
        for (int j = 0; j < order; ++j) {
            a.at(i, j) = static_cast<long long>(rng() % 10);
            b.at(i, j) = static_cast<long long>(rng() % 10);
        }
    std::cout << "big-integer matrix product, order " << order << "\n";

    auto t0 = std::chrono::steady_clock::now();
    IntMatrix serial = mat_mul_serial(a, b);
    double t_serial = ms_since(t0);

    t0 = std::chrono::steady_clock::now();
    IntMatrix parallel = mat_mul(a, b);
    double t_parallel = ms_since(t0);

    std::cout << "  serial   " << t_serial << " ms\n";
    std::cout << "  parallel " << t_parallel << " ms  (x" << t_serial / t_parallel << ")\n";
    std::cout << "  equal: " << (serial == parallel ? "yes" : "NO") << "  trace "
              << mat_trace(parallel).str() << "\n";
}

} // namespace

int main(int argc, char** argv) {
    int rook_size = 32, order = 192;
    if (argc > 1) rook_size = std::stoi(argv[1]);
    if (argc > 2) order = std::stoi(argv[2]);
    bench_bfs(rook_size);
    bench_matmul(order);
    return 0;
}
