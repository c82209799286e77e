#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "iprn/matrix.hpp"

namespace iprn {

// Finite verification semantics of image partition regularity: vertices are
// {1..N}, each edge is the value set of one image M*x with positive integer
// x and all values positive integers <= N.
struct ImageHypergraph {
    std::int64_t vertex_count = 0;
    std::vector<std::vector<std::int64_t>> edges;      // sorted, pairwise distinct
    std::vector<std::vector<std::int64_t>> witnesses;  // lex-least x per edge
};

struct Coloring {
    std::int64_t n = 0;
    int r = 0;
    std::vector<int> assignment;  // assignment[v-1] in {1..r}

    int color_of(std::int64_t v) const { return assignment[static_cast<std::size_t>(v - 1)]; }
};

enum class Verdict { Forced, Escaped };

struct SolveStats {
    long long nodes = 0;
    long long edge_count = 0;
};

struct ColoringCertificate {
    Verdict verdict = Verdict::Forced;
    std::optional<Coloring> escaped;  // present iff verdict == Escaped
    SolveStats stats;
};

struct Witness {
    int color_index = 0;
    std::vector<std::int64_t> x;
    std::vector<std::int64_t> image;
};

struct SolveOptions {
    int threads = 1;
    std::optional<std::chrono::steady_clock::time_point> deadline;
};

// Enumerates every positive integer x whose image under m consists of
// positive integers <= n. Requires an admissible matrix with no all-zero
// column (drop_irrelevant_columns first).
ImageHypergraph build_image_hypergraph(const RationalMatrix& m, std::int64_t n);

// Weak hypergraph coloring by backtracking, vertices in increasing order,
// first-available-color branching, color-first-occurrence symmetry breaking.
// An Escaped certificate carries the lexicographically least proper coloring.
ColoringCertificate solve_coloring(const ImageHypergraph& h, int r, const SolveOptions& opts = {});

// Forced means every r-coloring of {1..n} admits a monochromatic image.
ColoringCertificate verify_ipr_at(const RationalMatrix& m, int r, std::int64_t n,
                                  const SolveOptions& opts = {});

// Smallest n <= n_max at which verify_ipr_at is Forced.
std::optional<std::int64_t> min_forcing_n(const RationalMatrix& m, int r, std::int64_t n_max,
                                          const SolveOptions& opts = {});

// First x in lexicographic order whose image is monochromatic under chi,
// with image values in {1..chi.n} (and <= value_filter when given).
std::optional<Witness> witness_for_coloring(const RationalMatrix& m, const Coloring& chi,
                                            std::optional<std::int64_t> value_filter = {});

// True when the coloring has no monochromatic edge; used to re-check
// certificates independently of the solver.
bool coloring_escapes(const ImageHypergraph& h, const Coloring& chi);

}  // namespace iprn
