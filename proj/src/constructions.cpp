#include "iprn/constructions.hpp"

#include <algorithm>

namespace iprn {

RationalMatrix build_insertion(const InsertionSpec& spec, const InsertionCaps& caps) {
    const std::size_t delta = spec.c.cols();
    if (spec.blocks.size() != delta)
        throw Error("insertion spec needs one block per column of C: got " +
                    std::to_string(spec.blocks.size()) + " blocks for " + std::to_string(delta) +
                    " columns");

    std::int64_t width = 0;
    std::int64_t row_product = static_cast<std::int64_t>(spec.c.rows());
    for (const auto& b : spec.blocks) {
        width += static_cast<std::int64_t>(b.cols());
        if (row_product > caps.max_rows / static_cast<std::int64_t>(b.rows()))
            throw CapExceeded("insertion row count gamma * prod(u_t) = " +
                              std::to_string(spec.c.rows()) +
                              " * prod(block rows) exceeds cap " +
                              std::to_string(caps.max_rows));
        row_product *= static_cast<std::int64_t>(b.rows());
    }
    if (width > caps.max_width)
        throw CapExceeded("insertion width " + std::to_string(width) + " exceeds cap " +
                          std::to_string(caps.max_width));

    RationalMatrix out(static_cast<std::size_t>(row_product), static_cast<std::size_t>(width));
    std::vector<std::size_t> j(delta, 0);  // row choice per block, odometer
    std::size_t out_row = 0;
    for (std::size_t i = 0; i < spec.c.rows(); ++i) {
        std::fill(j.begin(), j.end(), 0);
        for (;;) {
            std::size_t col = 0;
            for (std::size_t t = 0; t < delta; ++t) {
                const auto& b = spec.blocks[t];
                for (std::size_t k = 0; k < b.cols(); ++k)
                    out.at(out_row, col++) = spec.c.at(i, t) * b.at(j[t], k);
            }
            ++out_row;
            // lexicographic j: advance the last position first
            std::size_t t = delta;
            while (t-- > 0) {
                if (++j[t] < spec.blocks[t].rows()) break;
                j[t] = 0;
                if (t == 0) goto next_i;
            }
        }
    next_i:;
    }
    return dedup_rows(out);
}

RationalMatrix block_concat(const std::vector<RationalMatrix>& blocks) {
    if (blocks.empty()) throw Error("block_concat: no blocks");
    std::size_t rows = blocks.front().rows();
    std::size_t width = 0;
    for (std::size_t t = 0; t < blocks.size(); ++t) {
        if (blocks[t].rows() != rows)
            throw Error("block_concat: block " + std::to_string(t) + " has " +
                        std::to_string(blocks[t].rows()) + " rows, expected " +
                        std::to_string(rows));
        width += blocks[t].cols();
    }
    RationalMatrix out(rows, width);
    std::size_t col = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t jj = 0; jj < b.cols(); ++jj) out.at(i, col + jj) = b.at(i, jj);
        col += b.cols();
    }
    return out;
}

BlockStructure::BlockStructure(std::vector<std::size_t> b) : boundaries(std::move(b)) {
    if (boundaries.size() < 2) throw Error("block structure needs at least two boundaries");
    if (boundaries.front() != 0) throw Error("block structure must start at 0");
    for (std::size_t i = 1; i < boundaries.size(); ++i)
        if (boundaries[i] <= boundaries[i - 1])
            throw Error("block structure boundaries must be strictly increasing");
}

std::vector<RationalMatrix> slice_blocks(const RationalMatrix& m,
                                         const BlockStructure& structure) {
    if (structure.boundaries.back() != m.cols())
        throw Error("block structure must end at the column count " + std::to_string(m.cols()));
    std::vector<RationalMatrix> out;
    for (std::size_t b = 0; b + 1 < structure.boundaries.size(); ++b) {
        std::size_t lo = structure.boundaries[b];
        std::size_t hi = structure.boundaries[b + 1];
        RationalMatrix blk(m.rows(), hi - lo);
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t jj = lo; jj < hi; ++jj) blk.at(i, jj - lo) = m.at(i, jj);
        out.push_back(std::move(blk));
    }
    return out;
}

namespace {

// nonzero rows of a block, deduplicated, or nothing when the block is empty
std::optional<RationalMatrix> nonzero_rows(const RationalMatrix& blk, std::size_t& count) {
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < blk.rows(); ++i)
        if (!blk.row_is_zero(i)) keep.push_back(i);
    count = keep.size();
    if (keep.empty()) return std::nullopt;
    RationalMatrix out(keep.size(), blk.cols());
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t jj = 0; jj < blk.cols(); ++jj) out.at(i, jj) = blk.at(keep[i], jj);
    return dedup_rows(out);
}

}  // namespace

SegmentedReport segmented_check(const RationalMatrix& m, const BlockStructure& structure,
                                int r, std::int64_t n, const SolveOptions& opts) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        if (m.row_is_zero(i))
            throw Error("row " + std::to_string(i) + " of the matrix is zero");

    SegmentedReport rep;
    rep.budget_r = r;
    rep.budget_n = n;

    bool all_monic = true, all_fe = true, all_forced = true;
    for (auto& blk : slice_blocks(m, structure)) {
        BlockReport br{blk, 0, BlockClass::Empty, false};
        auto rows = nonzero_rows(blk, br.nonzero_rows);
        if (rows) {
            auto fe = check_first_entries(*rows);
            bool admissible = validate(*rows).admissible;
            if (admissible) {
                try {
                    br.ipr_forced_at_budget =
                        verify_ipr_at(*rows, r, n, opts).verdict == Verdict::Forced;
                } catch (const Error&) {
                    br.ipr_forced_at_budget = false;
                }
            }
            if (fe.monic)
                br.classification = BlockClass::MonicFirstEntries;
            else if (fe.satisfies)
                br.classification = BlockClass::FirstEntries;
            else if (!admissible)
                br.classification = BlockClass::Fails;
            else
                br.classification = br.ipr_forced_at_budget ? BlockClass::IprVerified
                                                            : BlockClass::IprUnverified;
            all_monic = all_monic && fe.monic;
            all_fe = all_fe && fe.satisfies;
            all_forced = all_forced && br.ipr_forced_at_budget;
        }
        rep.blocks.push_back(std::move(br));
    }

    if (all_monic)
        rep.verdict = SegmentedVerdict::MonicSegmentedFirstEntries;
    else if (all_fe)
        rep.verdict = SegmentedVerdict::SegmentedFirstEntries;
    else if (all_forced)
        rep.verdict = SegmentedVerdict::SegmentedIprAtBudget;
    else
        rep.verdict = SegmentedVerdict::Inconclusive;
    return rep;
}

std::string to_string(BlockClass c) {
    switch (c) {
        case BlockClass::Empty: return "empty";
        case BlockClass::MonicFirstEntries: return "monic-first-entries";
        case BlockClass::FirstEntries: return "first-entries";
        case BlockClass::IprVerified: return "IPR-verified";
        case BlockClass::IprUnverified: return "IPR-unverified";
        case BlockClass::Fails: return "fails";
    }
    return "?";
}

std::string to_string(SegmentedVerdict v) {
    switch (v) {
        case SegmentedVerdict::MonicSegmentedFirstEntries: return "monic segmented first entries";
        case SegmentedVerdict::SegmentedFirstEntries: return "segmented first entries";
        case SegmentedVerdict::SegmentedIprAtBudget: return "segmented-IPR (empirically at budget)";
        case SegmentedVerdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

}  // namespace iprn
