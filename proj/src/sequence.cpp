#include "iprn/sequence.hpp"

#include <algorithm>
#include <string>

namespace iprn {

CompressedSeq::CompressedSeq(std::vector<std::int64_t> e) : entries(std::move(e)) {
    if (entries.empty()) throw Error("compressed sequence must be nonempty");
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (entries[i] <= 0) throw Error("compressed sequence entries must be positive");
        if (i > 0 && entries[i] == entries[i - 1])
            throw Error("compressed sequence has adjacent repeat at index " + std::to_string(i));
    }
}

std::set<Rational> fs_enumerate(const std::vector<Rational>& xs, std::size_t cap) {
    if (xs.empty()) throw Error("fs_enumerate: empty sequence");
    if (xs.size() > cap)
        throw CapExceeded("fs_enumerate: sequence length " + std::to_string(xs.size()) +
                          " exceeds cap " + std::to_string(cap));
    std::set<Rational> out;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << xs.size()); ++mask) {
        Rational sum;
        for (std::size_t i = 0; i < xs.size(); ++i)
            if (mask & (std::uint64_t{1} << i)) sum += xs[i];
        out.insert(sum);
    }
    return out;
}

CompressedSeq compress(const std::vector<std::int64_t>& a) {
    std::vector<std::int64_t> out;
    for (auto v : a) {
        if (v < 0) throw Error("compress: entries must be nonnegative");
        if (v == 0) continue;
        if (out.empty() || out.back() != v) out.push_back(v);
    }
    if (out.empty()) throw Error("empty compressed form");
    return CompressedSeq(std::move(out));
}

namespace {

void mt_recurse(const CompressedSeq& a, const std::vector<Rational>& xs, std::size_t t,
                std::size_t start, const Rational& acc, std::set<Rational>& out) {
    if (t == a.size()) {
        out.insert(acc);
        return;
    }
    std::size_t remaining_blocks = a.size() - t - 1;
    // F_t: nonempty subset of {start..L-1}, leaving room for later blocks
    std::size_t last = xs.size() - remaining_blocks;
    for (std::size_t max_idx = start; max_idx < last; ++max_idx) {
        // subsets of {start..max_idx} that contain max_idx
        std::size_t free = max_idx - start;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free); ++mask) {
            Rational block = xs[max_idx];
            for (std::size_t i = 0; i < free; ++i)
                if (mask & (std::uint64_t{1} << i)) block += xs[start + i];
            mt_recurse(a, xs, t + 1, max_idx + 1, acc + Rational(a.entries[t]) * block, out);
        }
    }
}

}  // namespace

std::set<Rational> mt_enumerate(const CompressedSeq& a, const std::vector<Rational>& xs,
                                std::size_t cap) {
    if (xs.size() > cap)
        throw CapExceeded("mt_enumerate: sequence length exceeds cap " + std::to_string(cap));
    if (a.size() > xs.size())
        throw Error("mt_enumerate: empty system, need at least " + std::to_string(a.size()) +
                    " sequence entries for " + std::to_string(a.size()) + " blocks");
    std::set<Rational> out;
    mt_recurse(a, xs, 0, 0, Rational(0), out);
    return out;
}

RationalMatrix mt_matrix_rows(const CompressedSeq& a, std::size_t width) {
    if (width < a.size())
        throw Error("mt_matrix_rows: width " + std::to_string(width) +
                    " is below the compressed length " + std::to_string(a.size()) +
                    ", no rows exist");
    std::vector<std::int64_t> alphabet{0};
    for (auto v : a.entries)
        if (std::find(alphabet.begin(), alphabet.end(), v) == alphabet.end())
            alphabet.push_back(v);
    std::sort(alphabet.begin(), alphabet.end());

    std::vector<std::vector<std::int64_t>> rows;
    std::vector<std::int64_t> cur(width, 0);
    // odometer over the alphabet, lexicographic on the integer tuples
    auto emit = [&](auto&& self, std::size_t pos) -> void {
        if (pos == width) {
            std::vector<std::int64_t> compressed;
            for (auto v : cur)
                if (v != 0 && (compressed.empty() || compressed.back() != v))
                    compressed.push_back(v);
            if (compressed == a.entries) rows.push_back(cur);
            return;
        }
        for (auto v : alphabet) {
            cur[pos] = v;
            self(self, pos + 1);
        }
    };
    emit(emit, 0);

    if (rows.empty()) throw Error("mt_matrix_rows: no rows at width " + std::to_string(width));
    RationalMatrix out(rows.size(), width);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < width; ++j) out.at(i, j) = Rational(rows[i][j]);
    return out;
}

namespace {

bool falsify_dfs(const std::function<bool(const Rational&)>& predicate, std::size_t k,
                 std::int64_t bound, bool allow_repeats, std::vector<Rational>& gens,
                 std::vector<Rational>& sums) {
    if (gens.size() == k) return true;
    std::int64_t lo = 1;
    if (!gens.empty()) {
        lo = gens.back().floor();
        if (!allow_repeats) ++lo;
    }
    for (std::int64_t v = lo; v <= bound; ++v) {
        Rational x(v);
        if (predicate(x)) continue;
        std::vector<Rational> added{x};
        bool clean = true;
        for (const auto& s : sums) {
            Rational t = s + x;
            if (predicate(t)) {
                clean = false;
                break;
            }
            added.push_back(t);
        }
        if (!clean) continue;
        std::size_t old = sums.size();
        sums.insert(sums.end(), added.begin(), added.end());
        gens.push_back(x);
        if (falsify_dfs(predicate, k, bound, allow_repeats, gens, sums)) return true;
        gens.pop_back();
        sums.resize(old);
    }
    return false;
}

}  // namespace

std::optional<FalsificationWitness> ip_star_falsify(
    const std::function<bool(const Rational&)>& predicate, std::size_t generator_count,
    const Rational& value_bound, bool allow_repeats) {
    if (generator_count == 0) throw Error("ip_star_falsify: generator count must be positive");
    std::int64_t bound = value_bound.floor();
    if (bound < 1) return std::nullopt;
    std::vector<Rational> gens, sums;
    if (!falsify_dfs(predicate, generator_count, bound, allow_repeats, gens, sums))
        return std::nullopt;
    std::sort(sums.begin(), sums.end());
    sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
    return FalsificationWitness{std::move(gens), std::move(sums)};
}

}  // namespace iprn
