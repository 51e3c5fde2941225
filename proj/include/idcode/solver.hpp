#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <mutex>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <thread>
#include <unordered_set>
#include <vector>

#include "idcode/code_set.hpp"
#include "idcode/formulas.hpp"
#include "idcode/graph.hpp"
#include "idcode/product_graph.hpp"
#include "idcode/verify.hpp"

namespace idcode {

// ---------------------------------------------------------------------------
// Reduction: C is an identifying code iff it hits N[v] for every v and
// N[u] xor N[v] for every pair u != v.

enum class ConstraintKind { dominate, separate };

struct ConstraintTag {
    ConstraintKind kind = ConstraintKind::dominate;
    Vertex u = 0;
    Vertex v = 0;  // separate only
};

struct HittingInstance {
    std::size_t universe = 0;
    std::vector<VertexSet> constraints;
    std::vector<ConstraintTag> tags;
    std::size_t raw_constraint_count = 0;  // |V| + C(|V|, 2)
    std::size_t pruned_duplicates = 0;
    std::size_t pruned_supersets = 0;
    std::vector<Edge> empty_pairs;  // twins: separation constraints with no elements

    bool infeasible() const noexcept { return !empty_pairs.empty(); }
};

inline HittingInstance build_hitting_instance(const Graph& g, bool simplify = true) {
    const std::size_t nv = g.vertex_count();
    HittingInstance inst;
    inst.universe = nv;
    std::vector<VertexSet> closed;
    closed.reserve(nv);
    for (Vertex v = 0; v < nv; ++v) closed.push_back(g.closed_neighborhood(v));

    std::vector<VertexSet> raw;
    std::vector<ConstraintTag> raw_tags;
    raw.reserve(nv + nv * (nv - 1) / 2);
    for (Vertex v = 0; v < nv; ++v) {
        raw.push_back(closed[v]);
        raw_tags.push_back({ConstraintKind::dominate, v, v});
    }
    for (Vertex u = 0; u < nv; ++u)
        for (Vertex v = u + 1; v < nv; ++v) {
            raw.push_back(closed[u] ^ closed[v]);
            raw_tags.push_back({ConstraintKind::separate, u, v});
            if (raw.back().empty()) inst.empty_pairs.emplace_back(u, v);
        }
    inst.raw_constraint_count = raw.size();

    if (!simplify || inst.infeasible()) {
        inst.constraints = std::move(raw);
        inst.tags = std::move(raw_tags);
        return inst;
    }

    std::vector<std::size_t> order(raw.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::vector<std::size_t> sizes(raw.size());
    for (std::size_t c = 0; c < raw.size(); ++c) sizes[c] = raw[c].size();
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return sizes[a] < sizes[b]; });

    std::unordered_set<VertexSet, VertexSetHash> seen;
    std::vector<std::size_t> kept;
    for (std::size_t c : order) {
        if (!seen.insert(raw[c]).second) {
            ++inst.pruned_duplicates;
            continue;
        }
        bool dominated = false;
        for (std::size_t k : kept)
            if (sizes[k] < sizes[c] && raw[k].is_subset_of(raw[c])) {
                dominated = true;
                break;
            }
        if (dominated) {
            ++inst.pruned_supersets;
            continue;
        }
        kept.push_back(c);
    }
    for (std::size_t c : kept) {
        inst.constraints.push_back(std::move(raw[c]));
        inst.tags.push_back(raw_tags[c]);
    }
    return inst;
}

// ---------------------------------------------------------------------------
// Search

struct SolveOptions {
    std::optional<double> time_limit;  // seconds
    std::optional<int> max_size;
    int thread_count = 1;
    bool symmetry_breaking = true;  // clique products only
    bool deterministic_witness = true;
};

enum class SolveStatus { optimal, infeasible_twins, timeout_with_bounds };

struct SolveResult {
    SolveStatus status = SolveStatus::timeout_with_bounds;
    std::optional<int> value;         // optimum, or best feasible size on timeout
    std::optional<CodeSet> witness;
    int proven_lower = 0;
    std::uint64_t nodes_explored = 0;
    double wall_time = 0.0;           // seconds
};

namespace detail {

using Clock = std::chrono::steady_clock;

struct SearchControl {
    std::optional<Clock::time_point> deadline;
    std::atomic<bool> timed_out{false};
    std::atomic<bool> found{false};
    std::atomic<std::uint64_t> nodes{0};

    bool should_stop() const noexcept { return timed_out.load(std::memory_order_relaxed) || found.load(std::memory_order_relaxed); }
    void poll() noexcept {
        if (deadline && Clock::now() >= *deadline) timed_out.store(true, std::memory_order_relaxed);
    }
};

/// Branch-and-bound for "is there a hitting set of size <= k". W is the
/// number of 64-bit words per set, 0 for a runtime width.
template <std::size_t W>
class HittingKernel {
public:
    using Word = std::uint64_t;

    explicit HittingKernel(const HittingInstance& inst)
        : universe_(inst.universe), words_(W ? W : (inst.universe + 63) / 64), count_(inst.constraints.size()) {
        if (W && (inst.universe + 63) / 64 > W) throw std::logic_error("kernel width too small for instance");
        // Static order by size: the packing bound scans small sets first.
        std::vector<std::size_t> order(count_);
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return inst.constraints[a].size() < inst.constraints[b].size();
        });
        bits_.assign(count_ * words_, 0);
        for (std::size_t c = 0; c < count_; ++c) {
            const auto& src = inst.constraints[order[c]].words();
            std::copy(src.begin(), src.end(), bits_.begin() + static_cast<std::ptrdiff_t>(c * words_));
        }
    }

    std::size_t words() const noexcept { return W ? W : words_; }
    std::size_t universe() const noexcept { return universe_; }

    struct Set {
        std::vector<Word> w;
    };

    Set empty_set() const { return Set{std::vector<Word>(words(), 0)}; }

    /// Unhit constraints given the chosen set.
    std::vector<std::uint32_t> unhit(const Set& chosen) const {
        std::vector<std::uint32_t> out;
        for (std::uint32_t c = 0; c < count_; ++c)
            if (!intersects(c, chosen.w.data())) out.push_back(c);
        return out;
    }

    /// Greedy packing of pairwise-disjoint available parts of unhit constraints.
    int packing_bound(const std::vector<std::uint32_t>& list, const Set& excluded) const {
        std::vector<Word> used(words(), 0);
        int pack = 0;
        for (std::uint32_t c : list) {
            const Word* cw = row(c);
            bool disjoint = true;
            for (std::size_t k = 0; k < words(); ++k)
                if (cw[k] & ~excluded.w[k] & used[k]) {
                    disjoint = false;
                    break;
                }
            if (!disjoint) continue;
            ++pack;
            for (std::size_t k = 0; k < words(); ++k) used[k] |= cw[k] & ~excluded.w[k];
        }
        return pack;
    }

    /// Smallest-constraint branching. On success `chosen` holds the hitting set.
    bool decide(int k, Set& chosen, Set& excluded, SearchControl& ctl) const {
        const int have = popcount(chosen.w.data());
        Frame f{k, &ctl, {}};
        f.lists.resize(static_cast<std::size_t>(std::max(0, k - have)) + 2);
        f.lists[0] = unhit(chosen);
        return dfs(f, 0, have, chosen.w.data(), excluded.w.data());
    }

    /// Children of the root: each branch element with its sibling exclusions.
    /// Returns false when the root is already pruned.
    bool root_branches(int k, const Set& chosen, std::vector<std::pair<Set, Set>>& out) const {
        const int have = popcount(chosen.w.data());
        const auto list = unhit(chosen);
        if (list.empty()) {
            out.push_back({chosen, empty_set()});
            return true;
        }
        if (have >= k) return false;
        Set excluded = empty_set();
        std::uint32_t best = 0;
        int best_size = -1;
        for (std::uint32_t c : list) {
            const int s = popcount(row(c));
            if (best_size < 0 || s < best_size) {
                best = c;
                best_size = s;
            }
        }
        if (have + packing_bound(list, excluded) > k) return false;
        for_each_bit(row(best), [&](std::size_t e) {
            Set child = chosen;
            set_bit(child.w.data(), e);
            out.push_back({child, excluded});
            set_bit(excluded.w.data(), e);
        });
        return true;
    }

    /// Lexicographically least hitting set of size <= k, if any.
    bool lex_least(int k, Set& chosen, SearchControl& ctl) const {
        const int have = popcount(chosen.w.data());
        Frame f{k, &ctl, {}};
        f.lists.resize(static_cast<std::size_t>(std::max(0, k - have)) + 2);
        f.lists[0] = unhit(chosen);
        return lex_dfs(f, 0, have, 0, chosen.w.data());
    }

    static int popcount(const Word* s, std::size_t n) {
        int c = 0;
        for (std::size_t k = 0; k < n; ++k) c += std::popcount(s[k]);
        return c;
    }

private:
    struct Frame {
        int k;
        SearchControl* ctl;
        std::vector<std::vector<std::uint32_t>> lists;
    };

    const Word* row(std::uint32_t c) const noexcept { return bits_.data() + static_cast<std::size_t>(c) * words(); }

    bool intersects(std::uint32_t c, const Word* s) const noexcept {
        const Word* cw = row(c);
        for (std::size_t k = 0; k < words(); ++k)
            if (cw[k] & s[k]) return true;
        return false;
    }

    int popcount(const Word* s) const noexcept { return popcount(s, words()); }

    static void set_bit(Word* s, std::size_t e) noexcept { s[e / 64] |= Word{1} << (e % 64); }
    static void clear_bit(Word* s, std::size_t e) noexcept { s[e / 64] &= ~(Word{1} << (e % 64)); }
    static bool has_bit(const Word* s, std::size_t e) noexcept { return (s[e / 64] >> (e % 64)) & 1U; }

    template <class F>
    void for_each_bit(const Word* s, F&& f) const {
        for (std::size_t k = 0; k < words(); ++k) {
            Word w = s[k];
            while (w) {
                f(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    bool tick(Frame& f) const {
        const auto n = f.ctl->nodes.fetch_add(1, std::memory_order_relaxed);
        if ((n & 0xFFF) == 0) f.ctl->poll();
        return f.ctl->should_stop();
    }

    void filter_child(Frame& f, std::size_t depth, std::size_t e) const {
        auto& child = f.lists[depth + 1];
        child.clear();
        const std::size_t word = e / 64;
        const Word bit = Word{1} << (e % 64);
        for (std::uint32_t c : f.lists[depth])
            if (!(row(c)[word] & bit)) child.push_back(c);
    }

    bool dfs(Frame& f, std::size_t depth, int have, Word* chosen, Word* excluded) const {
        if (tick(f)) return false;
        const auto& list = f.lists[depth];
        if (list.empty()) return true;
        if (have >= f.k) return false;

        std::array<Word, W ? W : 1> used_fixed{};
        std::vector<Word> used_dyn;
        Word* used = used_fixed.data();
        if constexpr (W == 0) {
            used_dyn.assign(words(), 0);
            used = used_dyn.data();
        }
        int pack = 0;
        int best_size = 1 << 30;
        std::uint32_t best = 0;
        const int budget = f.k - have;
        for (std::uint32_t c : list) {
            const Word* cw = row(c);
            int size = 0;
            bool disjoint = true;
            for (std::size_t k = 0; k < words(); ++k) {
                const Word a = cw[k] & ~excluded[k];
                size += std::popcount(a);
                if (a & used[k]) disjoint = false;
            }
            if (size == 0) return false;
            if (size < best_size) {
                best_size = size;
                best = c;
            }
            if (disjoint) {
                if (++pack > budget) return false;
                for (std::size_t k = 0; k < words(); ++k) used[k] |= cw[k] & ~excluded[k];
            }
        }

        std::array<Word, W ? W : 1> saved_fixed{};
        std::vector<Word> saved_dyn;
        Word* saved = saved_fixed.data();
        if constexpr (W == 0) {
            saved_dyn.assign(words(), 0);
            saved = saved_dyn.data();
        }
        std::copy(excluded, excluded + words(), saved);

        std::vector<std::size_t> branch;
        branch.reserve(static_cast<std::size_t>(best_size));
        const Word* bw = row(best);
        for (std::size_t k = 0; k < words(); ++k) {
            Word a = bw[k] & ~excluded[k];
            while (a) {
                branch.push_back(k * 64 + static_cast<std::size_t>(std::countr_zero(a)));
                a &= a - 1;
            }
        }
        bool ok = false;
        for (std::size_t e : branch) {
            set_bit(chosen, e);
            filter_child(f, depth, e);
            if (dfs(f, depth + 1, have + 1, chosen, excluded)) {
                ok = true;
                break;
            }
            clear_bit(chosen, e);
            if (f.ctl->should_stop()) break;
            set_bit(excluded, e);
        }
        std::copy(saved, saved + words(), excluded);
        return ok;
    }

    bool lex_dfs(Frame& f, std::size_t depth, int have, std::size_t from, Word* chosen) const {
        if (tick(f)) return false;
        const auto& list = f.lists[depth];
        if (list.empty()) return true;
        if (have >= f.k) return false;

        // Picks increase, so each unhit constraint must keep an element >= from
        // and the next pick cannot pass the largest one.
        std::vector<Word> mask(words(), 0);
        for (std::size_t k = 0; k < words(); ++k) {
            if ((k + 1) * 64 <= from) continue;
            mask[k] = from <= k * 64 ? ~Word{0} : ~Word{0} << (from - k * 64);
        }
        std::vector<Word> used(words(), 0);
        int pack = 0;
        std::size_t limit = universe_;
        const int budget = f.k - have;
        for (std::uint32_t c : list) {
            const Word* cw = row(c);
            bool any = false;
            bool disjoint = true;
            std::size_t top = 0;
            for (std::size_t k = 0; k < words(); ++k) {
                const Word a = cw[k] & mask[k];
                if (a) {
                    top = k * 64 + 63 - static_cast<std::size_t>(std::countl_zero(a));
                    any = true;
                }
                if (a & used[k]) disjoint = false;
            }
            if (!any) return false;
            limit = std::min(limit, top);
            if (disjoint) {
                if (++pack > budget) return false;
                for (std::size_t k = 0; k < words(); ++k) used[k] |= cw[k] & mask[k];
            }
        }
        for (std::size_t v = from; v <= limit && v < universe_; ++v) {
            if (has_bit(chosen, v)) continue;
            set_bit(chosen, v);
            filter_child(f, depth, v);
            if (lex_dfs(f, depth + 1, have + 1, v + 1, chosen)) return true;
            clear_bit(chosen, v);
            if (f.ctl->should_stop()) return false;
        }
        return false;
    }

    std::size_t universe_;
    std::size_t words_;
    std::size_t count_;
    std::vector<Word> bits_;
};

struct SolveSetup {
    std::vector<Vertex> forced;  // vertices fixed into the code
    int seed_lower = 0;          // extra admissible lower bound
};

/// Greedy hitting set: repeatedly take the element in the most unhit constraints.
inline std::vector<Vertex> greedy_hitting_set(const HittingInstance& inst, const std::vector<Vertex>& forced) {
    VertexSet chosen(inst.universe);
    for (Vertex v : forced) chosen.insert(v);
    std::vector<bool> hit(inst.constraints.size(), false);
    for (std::size_t c = 0; c < inst.constraints.size(); ++c) hit[c] = inst.constraints[c].intersects(chosen);
    for (;;) {
        std::vector<std::size_t> score(inst.universe, 0);
        bool any = false;
        for (std::size_t c = 0; c < inst.constraints.size(); ++c)
            if (!hit[c]) {
                any = true;
                inst.constraints[c].for_each([&](Vertex v) { ++score[v]; });
            }
        if (!any) break;
        const auto best = static_cast<Vertex>(std::max_element(score.begin(), score.end()) - score.begin());
        chosen.insert(best);
        for (std::size_t c = 0; c < inst.constraints.size(); ++c)
            if (!hit[c] && inst.constraints[c].contains(best)) hit[c] = true;
    }
    return chosen.to_vector();
}

struct RawSolve {
    SolveStatus status = SolveStatus::timeout_with_bounds;
    std::optional<int> value;
    std::optional<std::vector<Vertex>> witness;
    int proven_lower = 0;
    std::uint64_t nodes = 0;
    double seconds = 0.0;
};

inline std::optional<Clock::time_point> deadline_from(const SolveOptions& opts, Clock::time_point start) {
    if (!opts.time_limit) return std::nullopt;
    return start + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(*opts.time_limit));
}

template <std::size_t W>
class Driver {
public:
    using Kernel = HittingKernel<W>;
    using Set = typename Kernel::Set;

    Driver(const HittingInstance& inst, const SolveOptions& opts, const SolveSetup& setup)
        : inst_(inst), opts_(opts), setup_(setup), kernel_(inst), start_(Clock::now()) {
        ctl_.deadline = deadline_from(opts, start_);
        forced_ = to_set(setup.forced);
    }

    /// Lower bound valid for every code containing the forced vertices.
    int root_lower_bound() const {
        int lower = std::max(setup_.seed_lower, static_cast<int>(setup_.forced.size()) +
                                                    kernel_.packing_bound(kernel_.unhit(forced_), kernel_.empty_set()));
        // Distinct nonempty signatures: |V| <= 2^|C| - 1.
        const int info = static_cast<int>(std::ceil(std::log2(static_cast<double>(inst_.universe) + 1.0) - 1e-9));
        return std::max(lower, info);
    }

    /// Iterative deepening from the root lower bound up to the greedy upper bound.
    RawSolve minimize() {
        RawSolve res;
        const int lower = root_lower_bound();
        const std::vector<Vertex> greedy = greedy_hitting_set(inst_, setup_.forced);
        const int upper = static_cast<int>(greedy.size());
        int cap = upper - 1;
        if (opts_.max_size) cap = std::min(cap, *opts_.max_size);

        std::optional<std::vector<Vertex>> found;
        int k = lower;
        for (; k <= cap; ++k) {
            found = decide(k);
            if (found || ctl_.timed_out.load()) break;
        }
        res.nodes = ctl_.nodes.load();
        if (!found && ctl_.timed_out.load()) {
            res.status = SolveStatus::timeout_with_bounds;
            res.proven_lower = k;
            res.value = upper;
            res.witness = greedy;
            return finish(res);
        }
        if (!found && opts_.max_size && *opts_.max_size < upper) {
            // Every size up to the cap is refuted; the greedy code is the best known.
            res.status = SolveStatus::timeout_with_bounds;
            res.proven_lower = std::max(lower, *opts_.max_size + 1);
            res.value = upper;
            res.witness = greedy;
            return finish(res);
        }
        if (!found) found = greedy;
        const int optimum = static_cast<int>(found->size());
        res.status = SolveStatus::optimal;
        res.value = optimum;
        res.proven_lower = optimum;
        res.witness = *found;
        if (opts_.deterministic_witness) {
            if (auto lex = lex_least(optimum)) res.witness = *lex;
        }
        res.nodes = ctl_.nodes.load();
        return finish(res);
    }

    /// A hitting set of size <= k containing the forced vertices, if one exists.
    std::optional<std::vector<Vertex>> decide(int k) {
        ctl_.found.store(false);
        if (k < static_cast<int>(setup_.forced.size())) return std::nullopt;
        const int threads = std::max(1, opts_.thread_count);
        if (threads == 1) {
            Set chosen = forced_;
            Set excluded = kernel_.empty_set();
            if (kernel_.decide(k, chosen, excluded, ctl_)) return to_vertices(chosen);
            return std::nullopt;
        }
        std::vector<std::pair<Set, Set>> tasks;
        if (!kernel_.root_branches(k, forced_, tasks)) return std::nullopt;
        std::optional<std::vector<Vertex>> found;
        std::atomic<std::size_t> next{0};
        std::mutex mu;
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back([&] {
                for (;;) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= tasks.size() || ctl_.should_stop()) return;
                    Set chosen = tasks[i].first;
                    Set excluded = tasks[i].second;
                    if (kernel_.decide(k, chosen, excluded, ctl_)) {
                        std::lock_guard lock(mu);
                        if (!found) found = to_vertices(chosen);
                        ctl_.found.store(true);
                    }
                }
            });
        for (auto& th : pool) th.join();
        return found;
    }

    std::optional<std::vector<Vertex>> lex_least(int k) {
        SearchControl lex_ctl;
        lex_ctl.deadline = ctl_.deadline;
        Set chosen = kernel_.empty_set();
        const bool ok = kernel_.lex_least(k, chosen, lex_ctl);
        ctl_.nodes += lex_ctl.nodes.load();
        if (!ok) return std::nullopt;
        return to_vertices(chosen);
    }

    bool timed_out() const { return ctl_.timed_out.load(); }
    std::uint64_t nodes() const { return ctl_.nodes.load(); }

    RawSolve& finish(RawSolve& r) const {
        r.seconds = std::chrono::duration<double>(Clock::now() - start_).count();
        return r;
    }

private:
    Set to_set(const std::vector<Vertex>& vs) const {
        Set s = kernel_.empty_set();
        for (Vertex v : vs) s.w[v / 64] |= std::uint64_t{1} << (v % 64);
        return s;
    }
    std::vector<Vertex> to_vertices(const Set& s) const {
        std::vector<Vertex> out;
        for (std::size_t v = 0; v < inst_.universe; ++v)
            if ((s.w[v / 64] >> (v % 64)) & 1U) out.push_back(static_cast<Vertex>(v));
        return out;
    }

    const HittingInstance& inst_;
    SolveOptions opts_;
    SolveSetup setup_;
    Kernel kernel_;
    Clock::time_point start_;
    SearchControl ctl_;
    Set forced_;
};

/// Calls f(driver) with a kernel sized for the instance.
template <class F>
auto with_driver(const HittingInstance& inst, const SolveOptions& opts, const SolveSetup& setup, F&& f) {
    const std::size_t words = (inst.universe + 63) / 64;
    if (words <= 1) {
        Driver<1> d(inst, opts, setup);
        return f(d);
    }
    if (words <= 2) {
        Driver<2> d(inst, opts, setup);
        return f(d);
    }
    if (words <= 4) {
        Driver<4> d(inst, opts, setup);
        return f(d);
    }
    Driver<0> d(inst, opts, setup);
    return f(d);
}

template <class Owner>
SolveResult to_result(const Owner& owner, const RawSolve& raw) {
    SolveResult res;
    res.status = raw.status;
    res.value = raw.value;
    res.proven_lower = raw.proven_lower;
    res.nodes_explored = raw.nodes;
    res.wall_time = raw.seconds;
    if (raw.witness) {
        CodeSet code(owner, std::span<const Vertex>(*raw.witness));
        if (raw.status == SolveStatus::optimal && !is_identifying_code(owner, code).is_identifying_code())
            throw std::logic_error("solver produced a witness that is not an identifying code");
        res.witness = std::move(code);
    }
    return res;
}

inline RawSolve infeasible_result() {
    RawSolve raw;
    raw.status = SolveStatus::infeasible_twins;
    return raw;
}

inline RawSolve solve_instance(const HittingInstance& inst, const SolveOptions& opts, const SolveSetup& setup) {
    if (opts.thread_count < 1) throw std::invalid_argument("thread_count must be at least 1");
    if (inst.infeasible()) return infeasible_result();
    return with_driver(inst, opts, setup, [](auto& d) { return d.minimize(); });
}

}  // namespace detail

/// Exact minimum identifying code of an arbitrary graph.
inline SolveResult min_id_code(const Graph& g, const SolveOptions& opts = {}) {
    const auto inst = build_hitting_instance(g);
    return detail::to_result(g, detail::solve_instance(inst, opts, {}));
}

/// Exact minimum identifying code of K_n x K_m. With symmetry breaking the
/// search fixes (1,1) in the code: S_n x S_m acts transitively on vertices,
/// so some optimal code contains it.
inline SolveResult min_id_code_product(int n, int m, const SolveOptions& opts = {}) {
    const ProductGraph p(n, m);
    const auto inst = build_hitting_instance(p.graph());
    detail::SolveSetup setup;
    if (opts.symmetry_breaking) setup.forced.push_back(p.vertex(1, 1));
    const Regime r = regime(n, m);
    if (r != Regime::too_small_factor && r != Regime::twins) setup.seed_lower = lower_bound(n, m);
    return detail::to_result(p, detail::solve_instance(inst, opts, setup));
}

/// An identifying code with at most k codewords, or nothing if none exists.
inline std::optional<CodeSet> exists_code_of_size(const Graph& g, int k, const SolveOptions& opts = {}) {
    if (k < 0) throw std::invalid_argument("size bound must be nonnegative");
    if (opts.thread_count < 1) throw std::invalid_argument("thread_count must be at least 1");
    const auto inst = build_hitting_instance(g);
    if (inst.infeasible()) return std::nullopt;
    const int target = std::min(k, static_cast<int>(g.vertex_count()));
    auto found = detail::with_driver(inst, opts, {}, [&](auto& d) -> std::optional<std::vector<Vertex>> {
        if (target < d.root_lower_bound()) return std::nullopt;
        auto r = d.decide(target);
        if (!r && d.timed_out()) throw std::runtime_error("time limit reached before the search completed");
        return r;
    });
    if (!found) return std::nullopt;
    CodeSet code(g, std::span<const Vertex>(*found));
    if (!is_identifying_code(g, code).is_identifying_code())
        throw std::logic_error("solver produced a witness that is not an identifying code");
    return code;
}

}  // namespace idcode
