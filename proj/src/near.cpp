#include "iprn/near.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <string>

namespace iprn {

namespace {

int checked_color(const Oracle& oracle, const Rational& q, int r) {
    int c = oracle(q);
    if (c < 1 || c > r)
        throw Error("oracle returned color " + std::to_string(c) + " outside {1.." +
                    std::to_string(r) + "} at " + q.str());
    return c;
}

// minimal m with bound * 2^-m < 2^-n
int scale_exponent(std::int64_t bound, int n) {
    int k = 0;
    while ((std::int64_t{1} << k) <= bound) ++k;  // 2^k > bound
    return n + k;
}

}  // namespace

NearWitness near_zero_transfer(const RationalMatrix& m, const NearZeroContext& ctx,
                               std::int64_t n_force, const SolveOptions& opts) {
    if (!ctx.oracle) throw Error("near_zero_transfer: no oracle supplied");
    if (verify_ipr_at(m, ctx.colors, n_force, opts).verdict != Verdict::Forced)
        throw Error("near_zero_transfer: matrix is not Forced at (r=" +
                    std::to_string(ctx.colors) + ", N=" + std::to_string(n_force) +
                    "); transfer precondition fails");

    int exp = scale_exponent(n_force, ctx.neighborhood);
    Rational z = Rational::pow2_neg(exp);

    Coloring chi{n_force, ctx.colors, {}};
    chi.assignment.reserve(static_cast<std::size_t>(n_force));
    for (std::int64_t t = 1; t <= n_force; ++t)
        chi.assignment.push_back(checked_color(ctx.oracle, Rational(t) * z, ctx.colors));

    auto wit = witness_for_coloring(m, chi);
    if (!wit)
        throw Error("near_zero_transfer: no witness in the induced coloring; "
                    "Forced verdict was contradicted");

    NearWitness out;
    out.color_index = wit->color_index;
    out.scale = z;
    for (auto v : wit->x) out.y.push_back(Rational(v) * z);
    for (auto v : wit->image) {
        Rational scaled = Rational(v) * z;
        if (!in_neighborhood(scaled, ctx.neighborhood))
            throw Error("near_zero_transfer: scaled image left the neighborhood");
        out.image.push_back(scaled);
    }
    return out;
}

CombinedWitness diag_sum_witness(const RationalMatrix& a, const RationalMatrix& b,
                                 const NearZeroContext& ctx, std::int64_t n_pick,
                                 const WitnessCallback& callback, const SolveOptions& opts) {
    if (!ctx.oracle) throw Error("diag_sum_witness: no oracle supplied");
    if (verify_ipr_at(a, ctx.colors, n_pick, opts).verdict != Verdict::Forced)
        throw Error("diag_sum_witness: A is not Forced at (r=" + std::to_string(ctx.colors) +
                    ", N=" + std::to_string(n_pick) + ")");

    const Oracle& phi = ctx.oracle;
    PsiFn psi = [&phi, n_pick, r = ctx.colors](const Rational& q) {
        std::vector<int> key;
        key.reserve(static_cast<std::size_t>(n_pick));
        for (std::int64_t t = 1; t <= n_pick; ++t)
            key.push_back(checked_color(phi, Rational(t) * q, r));
        return key;
    };

    int exp = scale_exponent(n_pick, ctx.neighborhood);
    std::vector<Rational> y_bar = callback(psi, exp);
    if (y_bar.size() != b.cols())
        throw Error("diag_sum_witness: callback returned " + std::to_string(y_bar.size()) +
                    " entries, B has " + std::to_string(b.cols()) + " columns");

    auto image_b = b.apply(y_bar);
    std::vector<int> key;
    for (std::size_t i = 0; i < image_b.size(); ++i) {
        if (!in_neighborhood(image_b[i], exp))
            throw Error("diag_sum_witness: callback's B-image entry " + image_b[i].str() +
                        " is outside the required neighborhood (0, 2^-" + std::to_string(exp) +
                        ")");
        if (i == 0)
            key = psi(image_b[i]);
        else if (psi(image_b[i]) != key)
            throw Error("diag_sum_witness: callback's B-image is not psi-monochromatic");
    }

    CombinedWitness out;
    out.anchor = image_b.front();
    out.y_bar = y_bar;

    Coloring chi{n_pick, ctx.colors, {}};
    for (std::int64_t t = 1; t <= n_pick; ++t)
        chi.assignment.push_back(checked_color(phi, Rational(t) * out.anchor, ctx.colors));
    auto wit = witness_for_coloring(a, chi);
    if (!wit)
        throw Error("diag_sum_witness: no A-witness in the coloring induced by anchor " +
                    out.anchor.str());

    out.x = wit->x;
    out.scale_entry = wit->image.front();
    out.color_index = checked_color(phi, Rational(out.scale_entry) * out.anchor, ctx.colors);

    for (auto v : out.x) out.z.push_back(out.anchor * Rational(v));
    for (const auto& v : y_bar) out.z.push_back(Rational(out.scale_entry) * v);

    // re-check the two row cases exactly
    std::vector<Rational> xs(out.x.begin(), out.x.end());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Rational val = out.anchor * a.apply_row(i, xs);
        if (checked_color(phi, val, ctx.colors) != out.color_index)
            throw Error("diag_sum_witness: A-block row " + std::to_string(i) +
                        " broke monochromaticity");
        out.image.push_back(val);
    }
    for (std::size_t i = 0; i < b.rows(); ++i) {
        Rational val = Rational(out.scale_entry) * b.apply_row(i, y_bar);
        if (checked_color(phi, val, ctx.colors) != out.color_index)
            throw Error("diag_sum_witness: B-block row " + std::to_string(i) +
                        " broke monochromaticity");
        out.image.push_back(val);
    }
    return out;
}

WitnessCallback make_search_callback(const RationalMatrix& b, const SearchCallbackCaps& caps) {
    return [b, caps](const PsiFn& psi, int exp) -> std::vector<Rational> {
        double combos = std::pow(static_cast<double>(caps.max_entry),
                                 static_cast<double>(b.cols()));
        if (combos > 2e6)
            throw CapExceeded("search callback: vector space too large for B with " +
                              std::to_string(b.cols()) + " columns");

        std::vector<std::int64_t> w(b.cols(), 1);
        for (int extra = 0; extra <= caps.depth_limit; ++extra) {
            Rational z = Rational::pow2_neg(exp + extra);
            std::fill(w.begin(), w.end(), 1);
            for (;;) {
                std::vector<Rational> y;
                y.reserve(w.size());
                for (auto v : w) y.push_back(Rational(v) * z);
                auto image = b.apply(y);
                bool ok = true;
                std::vector<int> key;
                for (std::size_t i = 0; i < image.size() && ok; ++i) {
                    if (!in_neighborhood(image[i], exp)) {
                        ok = false;
                        break;
                    }
                    if (i == 0)
                        key = psi(image[i]);
                    else if (psi(image[i]) != key)
                        ok = false;
                }
                if (ok) return y;
                // odometer, lexicographic
                std::size_t pos = w.size();
                while (pos-- > 0) {
                    if (++w[pos] <= caps.max_entry) break;
                    w[pos] = 1;
                    if (pos == 0) goto next_scale;
                }
            }
        next_scale:;
        }
        throw Error("search callback: no psi-monochromatic B-image found within caps");
    };
}

Oracle constant_oracle() {
    return [](const Rational&) { return 1; };
}

Oracle dyadic_digit_oracle(int digit, int r) {
    if (digit < 0 || digit > 62) throw Error("dyadic digit index out of range");
    if (r < 1) throw Error("color count must be positive");
    return [digit, r](const Rational& q) {
        Rational shifted = q * Rational(std::int64_t{1} << digit);
        return static_cast<int>(shifted.floor() % r) + 1;
    };
}

Oracle numerator_mod_oracle(std::int64_t modulus, int r) {
    if (modulus < 1) throw Error("modulus must be positive");
    if (r < 1) throw Error("color count must be positive");
    return [modulus, r](const Rational& q) {
        std::int64_t v = q.num() % modulus;
        if (v < 0) v += modulus;
        return static_cast<int>(v % r) + 1;
    };
}

namespace {

// bidirectional line-oriented pipe to a child process
struct HookProcess {
    pid_t pid = -1;
    FILE* to_child = nullptr;
    FILE* from_child = nullptr;

    explicit HookProcess(const std::string& command) {
        int in_pipe[2], out_pipe[2];
        if (pipe(in_pipe) != 0 || pipe(out_pipe) != 0) throw Error("hook oracle: pipe failed");
        pid = fork();
        if (pid < 0) throw Error("hook oracle: fork failed");
        if (pid == 0) {
            dup2(in_pipe[0], STDIN_FILENO);
            dup2(out_pipe[1], STDOUT_FILENO);
            close(in_pipe[0]);
            close(in_pipe[1]);
            close(out_pipe[0]);
            close(out_pipe[1]);
            execl("/bin/sh", "sh", "-c", command.c_str(), static_cast<char*>(nullptr));
            _exit(127);
        }
        close(in_pipe[0]);
        close(out_pipe[1]);
        to_child = fdopen(in_pipe[1], "w");
        from_child = fdopen(out_pipe[0], "r");
        if (!to_child || !from_child) throw Error("hook oracle: fdopen failed");
    }

    ~HookProcess() {
        if (to_child) fclose(to_child);
        if (from_child) fclose(from_child);
        if (pid > 0) waitpid(pid, nullptr, 0);
    }

    int query(const Rational& q) {
        if (fprintf(to_child, "%s\n", q.str().c_str()) < 0 || fflush(to_child) != 0)
            throw Error("hook oracle: write to child failed");
        char buf[64];
        if (!fgets(buf, sizeof buf, from_child))
            throw Error("hook oracle: child closed its output");
        return std::atoi(buf);
    }
};

}  // namespace

Oracle hook_oracle(const std::string& command) {
    auto proc = std::make_shared<HookProcess>(command);
    return [proc](const Rational& q) { return proc->query(q); };
}

Oracle parse_oracle_spec(const std::string& spec, int r) {
    if (spec == "constant") return constant_oracle();
    if (spec.rfind("dyadic-digit:", 0) == 0)
        return dyadic_digit_oracle(std::stoi(spec.substr(13)), r);
    if (spec.rfind("numerator-mod:", 0) == 0)
        return numerator_mod_oracle(std::stoll(spec.substr(14)), r);
    if (spec.rfind("hook:", 0) == 0) return hook_oracle(spec.substr(5));
    throw Error("unknown oracle spec '" + spec +
                "'; expected constant, dyadic-digit:k, numerator-mod:m, or hook:<command>");
}

}  // namespace iprn
