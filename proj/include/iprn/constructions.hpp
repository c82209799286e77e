#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "iprn/ipr.hpp"
#include "iprn/matrix.hpp"

namespace iprn {

// Template C (gamma x delta) plus one block B_t per column of C. Rows of the
// insertion matrix concatenate scaled block rows c_{i,t} * b^(t)_{j(t)}.
struct InsertionSpec {
    RationalMatrix c;
    std::vector<RationalMatrix> blocks;
};

struct InsertionCaps {
    std::int64_t max_rows = 100000;
    std::int64_t max_width = 256;
};

// All (i, j) rows in row-major order over i then lexicographic j, then row
// dedup preserving first occurrence.
RationalMatrix build_insertion(const InsertionSpec& spec, const InsertionCaps& caps = {});

// Horizontal concatenation of equal-height blocks.
RationalMatrix block_concat(const std::vector<RationalMatrix>& blocks);

// Column boundaries <alpha_0 .. alpha_m>, alpha_0 = 0, strictly increasing.
struct BlockStructure {
    std::vector<std::size_t> boundaries;

    explicit BlockStructure(std::vector<std::size_t> b);
};

// Slice m into column blocks per the structure.
std::vector<RationalMatrix> slice_blocks(const RationalMatrix& m, const BlockStructure& structure);

enum class BlockClass {
    Empty,             // every row of the block is zero
    MonicFirstEntries,
    FirstEntries,
    IprVerified,       // Forced at the given (r, n) budget
    IprUnverified,     // Escaped at budget; says nothing beyond that scale
    Fails,             // not verifier-admissible, cannot be checked
};

enum class SegmentedVerdict {
    MonicSegmentedFirstEntries,
    SegmentedFirstEntries,
    SegmentedIprAtBudget,
    Inconclusive,
};

struct BlockReport {
    RationalMatrix block;
    std::size_t nonzero_rows = 0;
    BlockClass classification = BlockClass::Empty;
    bool ipr_forced_at_budget = false;
};

struct SegmentedReport {
    std::vector<BlockReport> blocks;
    SegmentedVerdict verdict = SegmentedVerdict::Inconclusive;
    int budget_r = 0;
    std::int64_t budget_n = 0;
};

// Per-block first-entries / budget-relative IPR classification. The report
// never claims unqualified image partition regularity.
SegmentedReport segmented_check(const RationalMatrix& m, const BlockStructure& structure,
                                int r, std::int64_t n, const SolveOptions& opts = {});

std::string to_string(BlockClass c);
std::string to_string(SegmentedVerdict v);

}  // namespace iprn
