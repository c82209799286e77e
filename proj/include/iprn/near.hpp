#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "iprn/ipr.hpp"
#include "iprn/matrix.hpp"

namespace iprn {

// Total coloring of the positive rationals, values in {1..r}.
using Oracle = std::function<int(const Rational&)>;

// Desk-scale model of (S, e): S = positive rationals under addition, e = 0,
// neighborhoods U_n = (0, 2^-n).
struct NearZeroContext {
    int neighborhood = 0;  // index n of U_n
    int colors = 0;        // r
    Oracle oracle;
};

inline bool in_neighborhood(const Rational& q, int n) {
    return q.is_positive() && q < Rational::pow2_neg(n);
}

struct NearWitness {
    int color_index = 0;
    Rational scale;                // z = 2^-m
    std::vector<Rational> y;       // z * x
    std::vector<Rational> image;   // z * (M x)
};

// Transfers a Forced verdict at (r, n_force) into a monochromatic image
// inside U_n: scale z = 2^-m with m minimal so that n_force * z < 2^-n,
// color t by oracle(t*z), and lift the induced-coloring witness.
NearWitness near_zero_transfer(const RationalMatrix& m, const NearZeroContext& ctx,
                               std::int64_t n_force, const SolveOptions& opts = {});

// Refined coloring psi(q) = <oracle(t*q)>_{t=1..n_pick}, queried pointwise.
using PsiFn = std::function<std::vector<int>(const Rational&)>;

// Given psi and a neighborhood index, produce y-bar whose B-image is
// psi-monochromatic inside that neighborhood.
using WitnessCallback = std::function<std::vector<Rational>(const PsiFn&, int)>;

struct CombinedWitness {
    int color_index = 0;           // j, the common oracle color
    Rational anchor;               // a, the chosen entry of B*y-bar
    std::int64_t scale_entry = 0;  // i, the chosen entry of A*x
    std::vector<std::int64_t> x;
    std::vector<Rational> y_bar;
    std::vector<Rational> z;       // (a*x ; i*y-bar)
    std::vector<Rational> image;   // image of the block-diagonal matrix at z
};

// The diagonal-sum transfer: combines an A-witness in the coloring induced
// by an entry of B*y-bar with the callback's B-witness, yielding a
// monochromatic image of (A O; O B).
CombinedWitness diag_sum_witness(const RationalMatrix& a, const RationalMatrix& b,
                                 const NearZeroContext& ctx, std::int64_t n_pick,
                                 const WitnessCallback& callback, const SolveOptions& opts = {});

struct SearchCallbackCaps {
    std::int64_t max_entry = 16;  // integer vector entries tried, 1..max_entry
    int depth_limit = 40;         // extra scale halvings tried below the minimum
};

// Default callback: scans scales 2^-m' and small integer vectors w,
// returning the first 2^-m' * w whose B-image is psi-monochromatic in the
// requested neighborhood.
WitnessCallback make_search_callback(const RationalMatrix& b,
                                     const SearchCallbackCaps& caps = {});

// Built-in oracle families.
Oracle constant_oracle();
Oracle dyadic_digit_oracle(int digit, int r);
Oracle numerator_mod_oracle(std::int64_t modulus, int r);

// External process speaking the line protocol: one rational "p/q" in, one
// color index out, per line.
Oracle hook_oracle(const std::string& command);

// "constant", "dyadic-digit:k", "numerator-mod:m", or "hook:<command>".
Oracle parse_oracle_spec(const std::string& spec, int r);

}  // namespace iprn
