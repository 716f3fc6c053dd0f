// Backtracking search for prime labelings of arbitrary graphs, an exact
// permutation-counting oracle for tiny graphs, and the conjecture scan over
// all small unicyclic graphs.
//
// The search assigns labels depth-first, keeping one bitset of unused labels
// plus a per-vertex bitset of labels compatible with the already-labeled
// neighbors. The next vertex is the one with the fewest feasible labels
// (ties: higher degree, then lower id) and values are tried ascending, so a
// run is fully deterministic; a branch dies as soon as any unassigned
// vertex has no feasible label left.
#pragma once

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

#include "primeweave/graph.hpp"
#include "primeweave/labelings.hpp"
#include "primeweave/numtheory.hpp"

namespace primeweave {

inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;
inline constexpr int kDefaultCountGuard = 10;

struct SolveBudget {
    std::uint64_t max_nodes = kDefaultNodeBudget;
    // Optional wall-clock cutoff. Node budgets keep reruns bit-identical;
    // a time limit trades that determinism for punctuality.
    std::optional<std::chrono::milliseconds> time_limit{};
};

enum class SolveOutcome { found, exhausted_no_solution, budget_exceeded };

inline const char* outcome_name(SolveOutcome o) {
    switch (o) {
        case SolveOutcome::found: return "found";
        case SolveOutcome::exhausted_no_solution: return "exhausted_no_solution";
        case SolveOutcome::budget_exceeded: return "budget_exceeded";
    }
    return "?";
}

struct SearchStats {
    SolveOutcome outcome = SolveOutcome::exhausted_no_solution;
    std::optional<Labeling> labeling{};  // set iff outcome == found
    std::uint64_t nodes_expanded = 0;    // assignments committed
    std::uint64_t backtracks = 0;        // assignments undone
    std::chrono::microseconds elapsed{0};
};

namespace detail {

class LabelSet {
public:
    LabelSet() = default;
    LabelSet(int bits, bool ones) : bits_(bits), w_(words(bits), ones ? ~std::uint64_t{0} : 0) {
        if (ones && bits % 64 != 0 && !w_.empty())
            w_.back() &= (std::uint64_t{1} << (bits % 64)) - 1;
    }

    void set(int b) { w_[static_cast<std::size_t>(b >> 6)] |= std::uint64_t{1} << (b & 63); }
    void clear(int b) { w_[static_cast<std::size_t>(b >> 6)] &= ~(std::uint64_t{1} << (b & 63)); }

    void and_with(const LabelSet& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    }

    int count_and(const LabelSet& o) const {
        int c = 0;
        for (std::size_t i = 0; i < w_.size(); ++i) c += std::popcount(w_[i] & o.w_[i]);
        return c;
    }

    // Smallest set bit of (this & o) at or after `from`, or -1.
    int next_and(const LabelSet& o, int from) const {
        if (from >= bits_) return -1;
        std::size_t wi = static_cast<std::size_t>(from >> 6);
        std::uint64_t cur = (w_[wi] & o.w_[wi]) >> (from & 63);
        if (cur != 0) return from + std::countr_zero(cur);
        for (++wi; wi < w_.size(); ++wi) {
            const std::uint64_t x = w_[wi] & o.w_[wi];
            if (x != 0) return static_cast<int>(wi << 6) + std::countr_zero(x);
        }
        return -1;
    }

private:
    static std::size_t words(int bits) { return static_cast<std::size_t>((bits + 63) / 64); }
    int bits_ = 0;
    std::vector<std::uint64_t> w_;
};

class PrimeSearch {
public:
    PrimeSearch(const Graph& g, const SolveBudget& budget)
        : g_(g),
          n_(g.vertex_count()),
          budget_(budget),
          avail_(n_, true),
          prune_(static_cast<std::size_t>(n_), LabelSet(n_, true)),
          assignment_(static_cast<std::size_t>(n_), 0),
          mask_cache_(static_cast<std::size_t>(n_) + 1) {}

    SearchStats run() {
        const auto t0 = std::chrono::steady_clock::now();
        deadline_.reset();
        if (budget_.time_limit)
            deadline_ = t0 + *budget_.time_limit;

        SearchStats st;
        const Status s = n_ == 0 ? Status::found : descend();
        st.outcome = s == Status::found     ? SolveOutcome::found
                     : s == Status::budget  ? SolveOutcome::budget_exceeded
                                            : SolveOutcome::exhausted_no_solution;
        if (s == Status::found) st.labeling = assignment_;
        st.nodes_expanded = nodes_;
        st.backtracks = backtracks_;
        st.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
            std::chrono::steady_clock::now() - t0);
        return st;
    }

private:
    enum class Status { found, dead, budget };

    // Bit b corresponds to label b+1; bit mask of labels coprime to `label`.
    const LabelSet& coprime_mask(std::uint64_t label) {
        auto& slot = mask_cache_[static_cast<std::size_t>(label)];
        if (!slot) {
            LabelSet m(n_, false);
            for (int b = 0; b < n_; ++b)
                if (std::gcd(static_cast<std::uint64_t>(b) + 1, label) == 1) m.set(b);
            slot = std::move(m);
        }
        return *slot;
    }

    int pick_vertex() const {
        int best = -1, best_count = 0;
        for (int v = 0; v < n_; ++v) {
            if (assignment_[static_cast<std::size_t>(v)] != 0) continue;
            const int c = avail_.count_and(prune_[static_cast<std::size_t>(v)]);
            if (best < 0 || c < best_count ||
                (c == best_count && g_.degree(v) > g_.degree(best))) {
                best = v;
                best_count = c;
            }
        }
        return best;
    }

    bool out_of_time() {
        if (!deadline_) return false;
        if (++time_probe_ % 1024 != 0) return false;
        return std::chrono::steady_clock::now() >= *deadline_;
    }

    Status descend() {
        if (assigned_ == n_) return Status::found;
        const int v = pick_vertex();
        const auto& pv = prune_[static_cast<std::size_t>(v)];
        for (int bit = avail_.next_and(pv, 0); bit >= 0; bit = avail_.next_and(pv, bit + 1)) {
            if (nodes_ >= budget_.max_nodes || out_of_time()) return Status::budget;
            ++nodes_;
            const std::uint64_t label = static_cast<std::uint64_t>(bit) + 1;
            assignment_[static_cast<std::size_t>(v)] = label;
            ++assigned_;
            avail_.clear(bit);

            const std::size_t undo_mark = undo_.size();
            bool wiped = false;
            const LabelSet& mask = coprime_mask(label);
            for (int w : g_.neighbors(v)) {
                if (assignment_[static_cast<std::size_t>(w)] != 0) continue;
                undo_.emplace_back(w, prune_[static_cast<std::size_t>(w)]);
                prune_[static_cast<std::size_t>(w)].and_with(mask);
                if (avail_.count_and(prune_[static_cast<std::size_t>(w)]) == 0) wiped = true;
            }

            if (!wiped) {
                const Status s = descend();
                if (s != Status::dead) return s;
            }

            while (undo_.size() > undo_mark) {
                auto& [w, old] = undo_.back();
                prune_[static_cast<std::size_t>(w)] = std::move(old);
                undo_.pop_back();
            }
            avail_.set(bit);
            assignment_[static_cast<std::size_t>(v)] = 0;
            --assigned_;
            ++backtracks_;
        }
        return Status::dead;
    }

    const Graph& g_;
    int n_;
    SolveBudget budget_;
    LabelSet avail_;
    std::vector<LabelSet> prune_;
    std::vector<std::uint64_t> assignment_;
    std::vector<std::optional<LabelSet>> mask_cache_;
    std::vector<std::pair<int, LabelSet>> undo_;
    int assigned_ = 0;
    std::uint64_t nodes_ = 0;
    std::uint64_t backtracks_ = 0;
    std::uint64_t time_probe_ = 0;
    std::optional<std::chrono::steady_clock::time_point> deadline_;
};

}  // namespace detail

// Deterministic search for a prime labeling. A Found labeling always passes
// verify; exhausted_no_solution means the full tree was explored.
inline SearchStats solve(const Graph& g, const SolveBudget& budget = {}) {
    return detail::PrimeSearch(g, budget).run();
}

// Exact number of prime labelings as raw vertex -> label assignments, by
// brute force over all n! bijections. Deliberately unclever: this is the
// oracle the solver is checked against.
inline std::uint64_t count_labelings(const Graph& g, int guard = kDefaultCountGuard) {
    const int n = g.vertex_count();
    if (n > guard)
        throw std::domain_error("count_labelings: vertex count exceeds the factorial guard (" +
                                std::to_string(guard) + ")");
    if (n == 0) return 1;

    std::vector<std::vector<char>> ok(static_cast<std::size_t>(n) + 1,
                                      std::vector<char>(static_cast<std::size_t>(n) + 1, 0));
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
            ok[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                std::gcd(a, b) == 1 ? 1 : 0;

    const auto& edges = g.edges();
    std::vector<int> label(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) label[static_cast<std::size_t>(v)] = v + 1;
    std::uint64_t count = 0;
    do {
        bool good = true;
        for (auto [u, v] : edges) {
            if (!ok[static_cast<std::size_t>(label[static_cast<std::size_t>(u)])]
                   [static_cast<std::size_t>(label[static_cast<std::size_t>(v)])]) {
                good = false;
                break;
            }
        }
        if (good) ++count;
    } while (std::next_permutation(label.begin(), label.end()));
    return count;
}

struct ScanTally {
    std::uint64_t scanned = 0;
    std::uint64_t found = 0;
    std::uint64_t budget_exceeded = 0;
    std::uint64_t no_solution = 0;

    friend bool operator==(const ScanTally&, const ScanTally&) = default;
};

struct ScanReport {
    std::map<int, ScanTally> per_n;
    std::vector<Graph> counterexamples;  // graphs proven to have no prime labeling

    friend bool operator==(const ScanReport&, const ScanReport&) = default;
};

// Solves every unicyclic graph on 3..max_n vertices. Workers split the
// stream by index and share nothing; the merged report does not depend on
// the worker count.
inline ScanReport scan_conjecture(int max_n, const SolveBudget& per_graph_budget = {},
                                  int jobs = 1, int cap = kDefaultUnicyclicCap) {
    if (max_n > cap)
        throw std::domain_error("scan_conjecture: max_n exceeds the configured cap (" +
                                std::to_string(cap) + ")");
    ScanReport report;
    for (int n = 3; n <= max_n; ++n) {
        const std::uint64_t total = unicyclic_stream_count(n);
        const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(
                                std::min<std::uint64_t>(total, 64))));

        std::vector<ScanTally> tallies(static_cast<std::size_t>(workers));
        std::vector<std::vector<std::pair<std::uint64_t, Graph>>> hits(
            static_cast<std::size_t>(workers));
        std::atomic<std::uint64_t> cursor{0};

        auto work = [&](int id) {
            auto& tally = tallies[static_cast<std::size_t>(id)];
            for (;;) {
                const std::uint64_t i = cursor.fetch_add(1, std::memory_order_relaxed);
                if (i >= total) break;
                const Graph g = unicyclic_at(n, i);
                const SearchStats st = solve(g, per_graph_budget);
                ++tally.scanned;
                switch (st.outcome) {
                    case SolveOutcome::found: ++tally.found; break;
                    case SolveOutcome::budget_exceeded: ++tally.budget_exceeded; break;
                    case SolveOutcome::exhausted_no_solution:
                        ++tally.no_solution;
                        hits[static_cast<std::size_t>(id)].emplace_back(i, g);
                        break;
                }
            }
        };

        if (workers == 1) {
            work(0);
        } else {
            std::vector<std::thread> pool;
            for (int id = 0; id < workers; ++id) pool.emplace_back(work, id);
            for (auto& t : pool) t.join();
        }

        ScanTally merged;
        std::vector<std::pair<std::uint64_t, Graph>> counter;
        for (int id = 0; id < workers; ++id) {
            const auto& t = tallies[static_cast<std::size_t>(id)];
            merged.scanned += t.scanned;
            merged.found += t.found;
            merged.budget_exceeded += t.budget_exceeded;
            merged.no_solution += t.no_solution;
            for (auto& h : hits[static_cast<std::size_t>(id)]) counter.push_back(std::move(h));
        }
        std::sort(counter.begin(), counter.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (auto& [idx, g] : counter) report.counterexamples.push_back(std::move(g));
        report.per_n[n] = merged;
    }
    return report;
}

}  // namespace primeweave
