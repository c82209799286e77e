#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "iprn/matrix.hpp"

namespace iprn {

// Positive-integer sequence with no adjacent repeats (the a-vector of a
// Milliken-Taylor system).
struct CompressedSeq {
    std::vector<std::int64_t> entries;

    explicit CompressedSeq(std::vector<std::int64_t> e);
    std::size_t size() const { return entries.size(); }
    bool operator==(const CompressedSeq&) const = default;
};

inline constexpr std::size_t kDefaultFsCap = 20;

// All finite sums over nonempty index subsets.
std::set<Rational> fs_enumerate(const std::vector<Rational>& xs, std::size_t cap = kDefaultFsCap);

// Delete zeros, then collapse adjacent repeats. Errors on all-zero input.
CompressedSeq compress(const std::vector<std::int64_t>& a);

// Milliken-Taylor system values: sum_t a_t * sum_{n in F_t} x_n over all
// ordered block families with max F_t < min F_{t+1}, indices in {1..len(xs)}.
std::set<Rational> mt_enumerate(const CompressedSeq& a, const std::vector<Rational>& xs,
                                std::size_t cap = kDefaultFsCap);

// Width-truncation of the Milliken-Taylor matrix: all rows of the given width
// with entries in {0} + set(a) whose compressed form equals a, lexicographic.
RationalMatrix mt_matrix_rows(const CompressedSeq& a, std::size_t width);

struct FalsificationWitness {
    std::vector<Rational> generators;
    std::vector<Rational> fs_sample;  // the full FS set of the generators
};

// Search for a length-k generator sequence whose finite sums all avoid the
// predicate's set. A hit falsifies IP*-ness at this scale; a miss proves
// nothing.
std::optional<FalsificationWitness> ip_star_falsify(
    const std::function<bool(const Rational&)>& predicate, std::size_t generator_count,
    const Rational& value_bound, bool allow_repeats = false);

}  // namespace iprn
