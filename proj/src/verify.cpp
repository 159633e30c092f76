#include "dnacode/verify.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

namespace dnacode {

int reference_distance(const std::string& a, const std::string& b) {
    if (a.size() != b.size()) throw std::invalid_argument("reference_distance: length mismatch");
    int dist = 0;
    for (std::size_t i = 0; i < a.size(); ++i) dist += (a[i] != b[i]);
    return dist;
}

namespace {

char complement_char(char c) {
    switch (c) {
        case 'A': return 'T';
        case 'T': return 'A';
        case 'C': return 'G';
        case 'G': return 'C';
    }
    throw std::invalid_argument("bad nucleotide character");
}

std::string image_string(const std::string& s, ConstraintKind kind) {
    std::string out(s.rbegin(), s.rend());
    if (kind == ConstraintKind::GC_RC)
        for (char& c : out) c = complement_char(c);
    return out;
}

int gc_of_string(const std::string& s) {
    return static_cast<int>(std::count_if(s.begin(), s.end(),
                                          [](char c) { return c == 'C' || c == 'G'; }));
}

}  // namespace

VerifyReport verify(const Code& code) {
    VerifyReport report;
    const auto& params = code.params;
    params.validate();

    std::vector<std::string> words;
    words.reserve(code.words.size());
    for (const auto& w : code.words) words.push_back(w.str());

    std::unordered_set<std::string> seen;
    for (const auto& s : words) {
        report.gc_contents.insert(gc_of_string(s));
        if (!seen.insert(s).second) ++report.duplicate_count;
    }

    const bool cross = params.kind != ConstraintKind::GC;
    std::vector<std::string> images;
    if (cross) {
        images.reserve(words.size());
        for (const auto& s : words) images.push_back(image_string(s, params.kind));
    }

    int min_pair = params.n + 1, min_cross = params.n + 1;
    for (std::size_t i = 0; i < words.size(); ++i) {
        for (std::size_t j = i + 1; j < words.size(); ++j)
            min_pair = std::min(min_pair, reference_distance(words[i], words[j]));
        if (cross)
            for (std::size_t j = i; j < words.size(); ++j)
                min_cross = std::min(min_cross, reference_distance(words[i], images[j]));
    }
    report.min_pairwise_distance = words.size() >= 2 ? min_pair : -1;
    report.min_cross_distance = cross && !words.empty() ? min_cross : -1;

    bool gc_ok = words.empty() ||
                 (report.gc_contents.size() == 1 && *report.gc_contents.begin() == params.w);
    bool pair_ok = words.size() < 2 || min_pair >= params.d;
    bool cross_ok = !cross || words.empty() || min_cross >= params.d;
    report.pass = gc_ok && pair_ok && cross_ok && report.duplicate_count == 0;
    return report;
}

// --- exact maximum code ----------------------------------------------------

namespace {

class BitGraph {
  public:
    explicit BitGraph(std::size_t n) : n_(n), stride_((n + 63) / 64), adj_(n * stride_, 0) {}

    void add_edge(std::size_t i, std::size_t j) {
        adj_[i * stride_ + j / 64] |= 1ull << (j % 64);
        adj_[j * stride_ + i / 64] |= 1ull << (i % 64);
    }
    const std::uint64_t* row(std::size_t i) const { return adj_.data() + i * stride_; }
    std::size_t size() const { return n_; }
    std::size_t stride() const { return stride_; }

  private:
    std::size_t n_, stride_;
    std::vector<std::uint64_t> adj_;
};

class MaxCliqueSolver {
  public:
    MaxCliqueSolver(const BitGraph& g, std::uint64_t node_cap)
        : g_(g), stride_(g.stride()), cap_(node_cap) {}

    std::optional<std::uint64_t> solve(std::size_t seed_size) {
        best_ = seed_size;
        std::vector<std::uint64_t> all(stride_, 0);
        for (std::size_t v = 0; v < g_.size(); ++v) all[v / 64] |= 1ull << (v % 64);
        expand(all, 0);
        if (aborted_) return std::nullopt;
        return best_;
    }

  private:
    void expand(const std::vector<std::uint64_t>& candidates, std::size_t depth) {
        if (aborted_) return;
        if (++nodes_ > cap_) {
            aborted_ = true;
            return;
        }
        // greedy coloring: color classes are independent sets, so a clique
        // takes at most one vertex per class
        std::vector<std::size_t> order;
        std::vector<std::size_t> color;
        std::vector<std::uint64_t> uncolored = candidates;
        auto pop_lowest = [&](std::vector<std::uint64_t>& set) -> std::optional<std::size_t> {
            for (std::size_t wi = 0; wi < stride_; ++wi)
                if (set[wi]) {
                    std::size_t v = wi * 64 + static_cast<std::size_t>(__builtin_ctzll(set[wi]));
                    set[wi] &= set[wi] - 1;
                    return v;
                }
            return std::nullopt;
        };
        std::size_t num_colors = 0;
        std::vector<std::uint64_t> cls(stride_);
        while (true) {
            cls = uncolored;
            std::size_t members = 0;
            while (auto v = pop_lowest(cls)) {
                ++members;
                order.push_back(*v);
                color.push_back(num_colors + 1);
                uncolored[*v / 64] &= ~(1ull << (*v % 64));
                const std::uint64_t* row = g_.row(*v);
                for (std::size_t k = 0; k < stride_; ++k) cls[k] &= ~row[k];
            }
            if (members == 0) break;
            ++num_colors;
        }

        std::vector<std::uint64_t> remaining = candidates;
        for (std::size_t idx = order.size(); idx-- > 0;) {
            std::size_t v = order[idx];
            if (depth + color[idx] <= best_) return;  // bound
            remaining[v / 64] &= ~(1ull << (v % 64));
            std::vector<std::uint64_t> next(stride_);
            const std::uint64_t* row = g_.row(v);
            bool empty = true;
            for (std::size_t k = 0; k < stride_; ++k) {
                next[k] = remaining[k] & row[k];
                empty &= next[k] == 0;
            }
            best_ = std::max(best_, depth + 1);
            if (!empty) expand(next, depth + 1);
            if (aborted_) return;
        }
    }

    const BitGraph& g_;
    std::size_t stride_;
    std::uint64_t cap_;
    std::uint64_t nodes_ = 0;
    std::size_t best_ = 0;
    bool aborted_ = false;
};

}  // namespace

std::optional<std::uint64_t> exact_max_code(int n, int d, int w, ConstraintKind kind,
                                            std::uint64_t node_cap) {
    CodeParams params{n, d, w, kind};
    params.validate();

    // vertex set: GC-content-w words passing the self-image check
    const bool cross = kind != ConstraintKind::GC;
    std::vector<std::string> vertices;
    for (std::uint64_t bits = 0; bits < (1ull << (2 * n)); ++bits) {
        DnaWord word(n, bits);
        std::string s = word.str();
        if (gc_of_string(s) != w) continue;
        if (cross && reference_distance(s, image_string(s, kind)) < d) continue;
        vertices.push_back(std::move(s));
    }
    const std::size_t m = vertices.size();
    if (m == 0) return 0;

    std::vector<std::string> images;
    if (cross)
        for (const auto& s : vertices) images.push_back(image_string(s, kind));

    BitGraph graph(m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            bool ok = reference_distance(vertices[i], vertices[j]) >= d;
            if (ok && cross)
                ok = reference_distance(vertices[i], images[j]) >= d &&
                     reference_distance(vertices[j], images[i]) >= d;
            if (ok) graph.add_edge(i, j);
        }

    // greedy clique in vertex order seeds the incumbent
    std::size_t seed = 0;
    {
        std::vector<std::size_t> clique;
        for (std::size_t v = 0; v < m; ++v) {
            bool ok = true;
            for (std::size_t u : clique)
                if (!(graph.row(u)[v / 64] >> (v % 64) & 1ull)) {
                    ok = false;
                    break;
                }
            if (ok) clique.push_back(v);
        }
        seed = clique.size();
    }

    MaxCliqueSolver solver(graph, node_cap);
    return solver.solve(seed);
}

}  // namespace dnacode
