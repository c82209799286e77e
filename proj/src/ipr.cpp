#include "iprn/ipr.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <map>
#include <string>

namespace iprn {

namespace {

void require_admissible(const RationalMatrix& m) {
    auto rep = validate(m);
    if (rep.admissible) return;
    std::string why;
    if (!rep.zero_rows.empty())
        why = "row " + std::to_string(rep.zero_rows.front()) + " is all-zero";
    else
        why = "negative entry at (" + std::to_string(rep.negative_entries.front().first) + "," +
              std::to_string(rep.negative_entries.front().second) + ")";
    throw Error("matrix is not verifier-admissible: " + why);
}

// floor(n / a) for positive rational a
std::int64_t div_floor(std::int64_t n, const Rational& a) {
    return (Rational(n) / a).floor();
}

}  // namespace

ImageHypergraph build_image_hypergraph(const RationalMatrix& m, std::int64_t n) {
    require_admissible(m);
    if (n < 1) throw Error("vertex count must be positive");

    const std::size_t v = m.cols();
    std::vector<std::int64_t> bound(v);
    for (std::size_t j = 0; j < v; ++j) {
        std::int64_t b = -1;
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (m.at(i, j).is_positive()) {
                std::int64_t cand = div_floor(n, m.at(i, j));
                if (b < 0 || cand < b) b = cand;
            }
        if (b < 0)
            throw Error("column " + std::to_string(j) +
                        " is all-zero; drop irrelevant columns first");
        bound[j] = b;
    }

    // minimal remaining contribution of columns >= j to each row (all x >= 1)
    std::vector<std::vector<Rational>> suffix_min(v + 1, std::vector<Rational>(m.rows()));
    for (std::size_t j = v; j-- > 0;)
        for (std::size_t i = 0; i < m.rows(); ++i)
            suffix_min[j][i] = suffix_min[j + 1][i] + m.at(i, j);

    std::map<std::vector<std::int64_t>, std::vector<std::int64_t>> edge_map;
    std::vector<std::int64_t> x(v);
    std::vector<Rational> partial(m.rows());
    const Rational cap(n);

    auto recurse = [&](auto&& self, std::size_t j) -> void {
        if (j == v) {
            std::vector<std::int64_t> edge;
            for (const auto& val : partial) {
                if (!val.is_integer() || !val.is_positive() || val.num() > n) return;
                edge.push_back(val.num());
            }
            std::sort(edge.begin(), edge.end());
            edge.erase(std::unique(edge.begin(), edge.end()), edge.end());
            edge_map.try_emplace(std::move(edge), x);  // lex-least x wins
            return;
        }
        for (std::int64_t val = 1; val <= bound[j]; ++val) {
            x[j] = val;
            bool feasible = true;
            std::vector<Rational> saved = partial;
            for (std::size_t i = 0; i < m.rows(); ++i) {
                partial[i] += m.at(i, j) * Rational(val);
                if (partial[i] + suffix_min[j + 1][i] > cap) feasible = false;
            }
            if (feasible) self(self, j + 1);
            partial = saved;
            if (!feasible) break;  // larger val only grows every row
        }
    };
    recurse(recurse, 0);

    ImageHypergraph h;
    h.vertex_count = n;
    for (auto& [edge, wit] : edge_map) {
        h.edges.push_back(edge);
        h.witnesses.push_back(wit);
    }
    return h;
}

bool coloring_escapes(const ImageHypergraph& h, const Coloring& chi) {
    for (const auto& e : h.edges) {
        int c = chi.color_of(e.front());
        bool mono = true;
        for (auto vtx : e)
            if (chi.color_of(vtx) != c) {
                mono = false;
                break;
            }
        if (mono) return false;
    }
    return true;
}

namespace {

struct Searcher {
    const std::vector<std::vector<std::size_t>>& edges_by_max;
    const std::vector<std::vector<std::int64_t>>& edges;
    std::int64_t n;
    int r;
    std::optional<std::chrono::steady_clock::time_point> deadline;
    long long nodes = 0;

    bool conflicts(const std::vector<int>& colors, std::int64_t v, int c) const {
        for (std::size_t idx : edges_by_max[static_cast<std::size_t>(v)]) {
            const auto& e = edges[idx];
            bool mono = true;
            for (auto w : e)
                if (w != v && colors[static_cast<std::size_t>(w - 1)] != c) {
                    mono = false;
                    break;
                }
            if (mono) return true;
        }
        return false;
    }

    // extends colors (filled through vertex v-1) to a full proper coloring;
    // first success is the lexicographically least canonical completion
    bool extend(std::vector<int>& colors, std::int64_t v, int max_used) {
        if (v > n) return true;
        if ((++nodes & 0xfff) == 0 && deadline &&
            std::chrono::steady_clock::now() > *deadline)
            throw BudgetExceeded("coloring search exceeded budget", nodes);
        int limit = std::min(r, max_used + 1);
        for (int c = 1; c <= limit; ++c) {
            if (conflicts(colors, v, c)) continue;
            colors[static_cast<std::size_t>(v - 1)] = c;
            if (extend(colors, v + 1, std::max(max_used, c))) return true;
            colors[static_cast<std::size_t>(v - 1)] = 0;
        }
        return false;
    }

    // collect all consistent canonical prefixes of the given depth
    void prefixes(std::vector<int>& colors, std::int64_t v, int max_used, std::int64_t depth,
                  std::vector<std::vector<int>>& out) {
        if (v > depth) {
            out.emplace_back(colors.begin(), colors.begin() + depth);
            return;
        }
        int limit = std::min(r, max_used + 1);
        for (int c = 1; c <= limit; ++c) {
            if (conflicts(colors, v, c)) continue;
            colors[static_cast<std::size_t>(v - 1)] = c;
            prefixes(colors, v + 1, std::max(max_used, c), depth, out);
            colors[static_cast<std::size_t>(v - 1)] = 0;
        }
    }
};

}  // namespace

ColoringCertificate solve_coloring(const ImageHypergraph& h, int r, const SolveOptions& opts) {
    if (r < 1) throw Error("color count must be positive");
    if (opts.deadline && std::chrono::steady_clock::now() > *opts.deadline)
        throw BudgetExceeded("time budget exhausted before search began", 0);
    ColoringCertificate cert;
    cert.stats.edge_count = static_cast<long long>(h.edges.size());

    for (const auto& e : h.edges)
        if (e.size() == 1) {
            cert.verdict = Verdict::Forced;  // a singleton edge defeats every coloring
            return cert;
        }

    std::vector<std::vector<std::size_t>> by_max(static_cast<std::size_t>(h.vertex_count) + 1);
    for (std::size_t i = 0; i < h.edges.size(); ++i)
        by_max[static_cast<std::size_t>(h.edges[i].back())].push_back(i);

    const std::int64_t n = h.vertex_count;
    int threads = std::max(1, opts.threads);

    if (threads == 1 || n < 8) {
        Searcher s{by_max, h.edges, n, r, opts.deadline};
        std::vector<int> colors(static_cast<std::size_t>(n), 0);
        bool ok = s.extend(colors, 1, 0);
        cert.stats.nodes = s.nodes;
        if (ok) {
            cert.verdict = Verdict::Escaped;
            cert.escaped = Coloring{n, r, std::move(colors)};
        }
        return cert;
    }

    // deterministic subtree parallelism: split at a shallow depth, subtrees
    // are lex-disjoint so the first Escaped prefix yields the global
    // lex-least coloring
    std::int64_t depth = std::min<std::int64_t>(n, 6);
    Searcher splitter{by_max, h.edges, n, r, opts.deadline};
    std::vector<std::vector<int>> pre;
    {
        std::vector<int> colors(static_cast<std::size_t>(n), 0);
        splitter.prefixes(colors, 1, 0, depth, pre);
    }
    long long total_nodes = splitter.nodes;

    struct TaskResult {
        std::optional<std::vector<int>> colors;
        long long nodes = 0;
    };
    std::atomic<std::size_t> next{0};
    std::vector<TaskResult> results(pre.size());
    auto worker = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= pre.size()) break;
            Searcher s{by_max, h.edges, n, r, opts.deadline};
            std::vector<int> colors(static_cast<std::size_t>(n), 0);
            std::copy(pre[i].begin(), pre[i].end(), colors.begin());
            int max_used = *std::max_element(pre[i].begin(), pre[i].end());
            bool ok = s.extend(colors, depth + 1, max_used);
            results[i].nodes = s.nodes;
            if (ok) results[i].colors = std::move(colors);
        }
    };
    std::vector<std::future<void>> pool;
    for (int t = 0; t < threads; ++t) pool.push_back(std::async(std::launch::async, worker));
    for (auto& f : pool) f.get();

    std::optional<std::vector<int>> best;
    for (auto& res : results) {
        total_nodes += res.nodes;
        if (!best && res.colors) best = std::move(res.colors);
    }
    cert.stats.nodes = total_nodes;
    if (best) {
        cert.verdict = Verdict::Escaped;
        cert.escaped = Coloring{n, r, std::move(*best)};
    }
    return cert;
}

ColoringCertificate verify_ipr_at(const RationalMatrix& m, int r, std::int64_t n,
                                  const SolveOptions& opts) {
    require_admissible(m);
    auto dropped = drop_irrelevant_columns(m);
    auto h = build_image_hypergraph(dropped.matrix, n);
    return solve_coloring(h, r, opts);
}

std::optional<std::int64_t> min_forcing_n(const RationalMatrix& m, int r, std::int64_t n_max,
                                          const SolveOptions& opts) {
    // Forced is monotone in n, so the first hit is minimal
    for (std::int64_t n = 1; n <= n_max; ++n)
        if (verify_ipr_at(m, r, n, opts).verdict == Verdict::Forced) return n;
    return std::nullopt;
}

std::optional<Witness> witness_for_coloring(const RationalMatrix& m, const Coloring& chi,
                                            std::optional<std::int64_t> value_filter) {
    require_admissible(m);
    std::int64_t limit = chi.n;
    if (value_filter) limit = std::min(limit, *value_filter);
    if (limit < 1) return std::nullopt;

    const std::size_t v = m.cols();
    std::vector<std::int64_t> bound(v);
    for (std::size_t j = 0; j < v; ++j) {
        std::int64_t b = -1;
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (m.at(i, j).is_positive()) {
                std::int64_t cand = div_floor(limit, m.at(i, j));
                if (b < 0 || cand < b) b = cand;
            }
        bound[j] = b < 0 ? 1 : b;  // zero column: value is irrelevant, pin to 1
    }

    std::vector<std::int64_t> x(v);
    std::optional<Witness> found;
    auto recurse = [&](auto&& self, std::size_t j) -> bool {
        if (j == v) {
            std::vector<Rational> xs(x.begin(), x.end());
            auto image = m.apply(xs);
            int color = 0;
            std::vector<std::int64_t> vals;
            for (const auto& val : image) {
                if (!val.is_integer() || !val.is_positive() || val.num() > limit) return false;
                int c = chi.color_of(val.num());
                if (color == 0) color = c;
                if (c != color) return false;
                vals.push_back(val.num());
            }
            found = Witness{color, x, std::move(vals)};
            return true;
        }
        for (std::int64_t val = 1; val <= bound[j]; ++val) {
            x[j] = val;
            if (self(self, j + 1)) return true;
        }
        return false;
    };
    recurse(recurse, 0);
    return found;
}

}  // namespace iprn
