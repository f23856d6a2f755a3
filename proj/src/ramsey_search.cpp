#include "nhr/ramsey.hpp"

#include "nhr/error.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <set>
#include <thread>

namespace nhr {

RamseyTarget RamseyTarget::of(const PatternGraph& h, int copies)
{
    require(h.k() >= 1, ErrorKind::Precondition, "target pattern must have a vertex");
    require(copies >= 1, ErrorKind::Precondition, "copies must be positive");
    return RamseyTarget{{h}, copies};
}

RamseyTarget RamseyTarget::family(const GraphFamily& f)
{
    require(!f.empty(), ErrorKind::Precondition, "empty family");
    RamseyTarget t;
    for (const auto& g : f.members()) {
        require(g.order() >= 1, ErrorKind::Precondition, "family member must have a vertex");
        t.members.emplace_back(g);
    }
    return t;
}

std::string RamseyTarget::key() const
{
    GraphFamily f;
    for (const auto& m : members) f.add(m.graph());
    return std::to_string(copies) + "x" + f.key();
}

AvoidResult colouring_avoids(const TwoColouring& col, const RamseyTarget& target, Colour colour, Budget* budget)
{
    for (const auto& h : target.members) {
        if (auto t = find_disjoint_mono(col, h, target.copies, colour, budget)) return {false, std::move(t)};
    }
    return {true, std::nullopt};
}

namespace {

    struct Member {
        SimpleGraph pattern;
        int k = 0;
        bool edgeless = false;
        std::vector<Edge> reps;         // ordered edge orbit representatives
        std::vector<int> vertex_reps;   // vertex orbit representatives
    };

    struct PreparedTarget {
        std::vector<Member> members;
        int copies = 1;
    };

    PreparedTarget prepare(const RamseyTarget& t)
    {
        PreparedTarget p;
        p.copies = t.copies;
        for (const auto& h : t.members) {
            Member m;
            m.pattern = h.graph();
            m.k = h.k();
            m.edgeless = h.edge_count() == 0;
            if (!m.edgeless) {
                m.reps = ordered_edge_orbit_representatives(m.pattern);
                m.vertex_reps = orbit_representatives(m.pattern);
            }
            p.members.push_back(std::move(m));
        }
        return p;
    }

    std::vector<Edge> edge_sequence(int n, EdgeOrder order)
    {
        std::vector<Edge> edges;
        if (order == EdgeOrder::Column) {
            for (int j = 1; j < n; ++j)
                for (int i = 0; i < j; ++i) edges.emplace_back(i, j);
        } else {
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
        }
        return edges;
    }

    // Colour index helpers: 0 = red, 1 = blue.
    constexpr int idx(Colour c) { return c == Colour::Red ? 0 : 1; }

    class Search {
    public:
        Search(const PreparedTarget* targets, int n, const std::vector<Edge>* edges, bool lex, Budget budget)
            : targets_(targets), n_(n), edges_(edges), lex_(lex), budget_(budget)
        {
            g_[0] = SimpleGraph(n);
            g_[1] = SimpleGraph(n);
            colour_.assign(static_cast<std::size_t>(n) * n, -1);
        }

        std::uint64_t nodes() const { return budget_.used(); }

        /// Assign edge `i` of the sequence; false if it completes a target or
        /// breaks the ordering constraint.
        bool assign(std::size_t i, Colour c)
        {
            const auto [u, v] = (*edges_)[i];
            if (lex_ && !lex_ok(u, v, c)) return false;
            g_[idx(c)].add_edge(u, v);
            colour_[u * n_ + v] = colour_[v * n_ + u] = idx(c);
            if (completes(c, u, v)) {
                unassign(i);
                return false;
            }
            return true;
        }

        void unassign(std::size_t i)
        {
            const auto [u, v] = (*edges_)[i];
            const int c = colour_[u * n_ + v];
            g_[c].remove_edge(u, v);
            colour_[u * n_ + v] = colour_[v * n_ + u] = -1;
        }

        bool dfs(std::size_t i)
        {
            budget_.charge();
            if (i == edges_->size()) return true;
            for (Colour c : {Colour::Red, Colour::Blue}) {
                if (assign(i, c)) {
                    if (dfs(i + 1)) return true;
                    unassign(i);
                }
            }
            return false;
        }

        TwoColouring colouring() const { return TwoColouring::from_red_graph(g_[0]); }

    private:
        // Lex-leader test against swapping vertices j−1 and j, column order:
        // column j−1 must not exceed column j on the shared rows.
        bool lex_ok(int x, int j, Colour c)
        {
            if (j < 2 || x > j - 2) return true;
            for (int y = 0; y < x; ++y)
                if (colour_[y * n_ + j] != colour_[y * n_ + j - 1]) return true;
            const int prev = colour_[x * n_ + j - 1];
            return !(prev == 1 && idx(c) == 0);
        }

        bool completes(Colour c, int u, int v)
        {
            const PreparedTarget& t = targets_[idx(c)];
            const SimpleGraph& g = g_[idx(c)];
            for (const Member& m : t.members) {
                if (m.edgeless || m.k * t.copies > n_) continue;
                for (auto [a, b] : m.reps) {
                    MatchOptions opt;
                    opt.domains.assign(m.k, g.all());
                    opt.domains[a] = bit(u);
                    opt.domains[b] = bit(v);
                    opt.twin_pruning = false;
                    if (t.copies == 1) {
                        if (find_copy(g, m.pattern, opt)) return true;
                        continue;
                    }
                    bool found = false;
                    std::set<Mask> tried;
                    for_each_copy(g, m.pattern, opt, [&](std::span<const int> map) {
                        const Mask s = to_mask(map);
                        if (!tried.insert(s).second) return true;
                        if (pack_copies(g, m.pattern, g.all() & ~s, t.copies - 1, nullptr, m.vertex_reps)) {
                            found = true;
                            return false;
                        }
                        return true;
                    });
                    if (found) return true;
                }
            }
            return false;
        }

        const PreparedTarget* targets_;
        int n_;
        const std::vector<Edge>* edges_;
        bool lex_;
        Budget budget_;
        SimpleGraph g_[2];
        std::vector<int> colour_;
    };

    bool trivially_contained(const PreparedTarget& t, int n)
    {
        return std::any_of(t.members.begin(), t.members.end(),
                           [&](const Member& m) { return m.edgeless && m.k * t.copies <= n; });
    }

}  // namespace

std::optional<TwoColouring> find_avoiding_colouring(const RamseyTarget& red, const RamseyTarget& blue, int n,
                                                    const RamseyOptions& options, std::uint64_t* nodes)
{
    require(n >= 0 && n <= kMaxVertices, ErrorKind::SizeLimit, "colouring order outside [0, 64]");
    const PreparedTarget targets[2] = {prepare(red), prepare(blue)};
    if (trivially_contained(targets[0], n) || trivially_contained(targets[1], n)) return std::nullopt;
    if (n <= 1) return TwoColouring(n);

    const auto edges = edge_sequence(n, options.order);
    const bool lex = options.symmetry_breaking && options.order == EdgeOrder::Column;
    const bool symmetric = red == blue;
    const Budget proto(options.budget, options.deadline);
    std::uint64_t total_nodes = 0;

    // All-blue is the only colouring not equivalent to one with edge (0,1) red.
    if (!symmetric) {
        Search s(targets, n, &edges, false, proto.fresh());
        bool ok = true;
        for (std::size_t i = 0; i < edges.size() && ok; ++i) ok = s.assign(i, Colour::Blue);
        total_nodes += edges.size();
        if (ok) {
            if (nodes) *nodes = total_nodes;
            return s.colouring();
        }
    }

    // Enumerate the prefixes (first edge red) to a fixed depth; each becomes
    // an independent subtree. The split does not depend on the thread count.
    const std::size_t depth = std::min<std::size_t>(edges.size(), 10);
    std::vector<std::vector<Colour>> prefixes;
    {
        Search s(targets, n, &edges, lex, proto.fresh());
        std::vector<Colour> current;
        std::function<void(std::size_t)> grow = [&](std::size_t i) {
            if (i == depth) {
                prefixes.push_back(current);
                return;
            }
            for (Colour c : {Colour::Red, Colour::Blue}) {
                if (i == 0 && c == Colour::Blue) continue;
                if (s.assign(i, c)) {
                    current.push_back(c);
                    grow(i + 1);
                    current.pop_back();
                    s.unassign(i);
                }
            }
        };
        grow(0);
        total_nodes += s.nodes();
    }

    enum class Outcome { Pending, Found, Empty, Exhausted };
    std::vector<Outcome> outcome(prefixes.size(), Outcome::Pending);
    std::vector<std::optional<TwoColouring>> found(prefixes.size());
    std::vector<std::uint64_t> used(prefixes.size(), 0);
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> best{prefixes.size()};
    std::mutex lock;
    std::exception_ptr failure;

    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= prefixes.size()) return;
            if (i > best.load()) {
                outcome[i] = Outcome::Empty;
                continue;
            }
            try {
                Search s(targets, n, &edges, lex, proto.fresh());
                for (std::size_t e = 0; e < depth; ++e) s.assign(e, prefixes[i][e]);
                Outcome result = Outcome::Empty;
                try {
                    if (s.dfs(depth)) {
                        found[i] = s.colouring();
                        result = Outcome::Found;
                    }
                } catch (const Error& err) {
                    if (err.kind() != ErrorKind::Timeout) throw;
                    result = Outcome::Exhausted;
                }
                used[i] = s.nodes();
                outcome[i] = result;
                if (result == Outcome::Found) {
                    std::size_t b = best.load();
                    while (i < b && !best.compare_exchange_weak(b, i)) {
                    }
                }
            } catch (...) {
                std::lock_guard guard(lock);
                if (!failure) failure = std::current_exception();
                return;
            }
        }
    };

    const int threads = std::max(1, options.threads);
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);
    for (auto u : used) total_nodes += u;
    if (nodes) *nodes = total_nodes;

    for (std::size_t i = 0; i < prefixes.size(); ++i) {
        if (outcome[i] == Outcome::Found) return found[i];
        if (outcome[i] == Outcome::Exhausted)
            throw Error(ErrorKind::Timeout, "subtree " + std::to_string(i) + " undecided at order " + std::to_string(n));
    }
    return std::nullopt;
}

RamseyResult ramsey_search(const RamseyQuery& q)
{
    require(q.n_lo >= 0 && q.n_lo <= q.n_hi, ErrorKind::Precondition, "invalid search range");
    RamseyResult result;
    std::optional<TwoColouring> witness;
    int witness_order = -1;
    std::optional<int> none_at;  // smallest order proved to have no avoiding colouring

    auto probe = [&](int n) -> std::optional<TwoColouring> {
        std::uint64_t nodes = 0;
        auto c = find_avoiding_colouring(q.red, q.blue, n, q.options, &nodes);
        result.nodes += nodes;
        return c;
    };

    int n = q.n_lo;
    try {
        // Walk down until an avoiding colouring appears (K_0 always avoids).
        for (;;) {
            auto c = probe(n);
            if (c) {
                witness = std::move(c);
                witness_order = n;
                break;
            }
            if (n == 0) throw Error(ErrorKind::Defect, "empty colouring contains a target");
            none_at = n;
            --n;
        }
        if (witness_order < q.n_lo) {
            result.exact = true;
            result.value = witness_order + 1;
            result.lower_witness = *witness;
            return result;
        }
        for (n = witness_order + 1; n <= q.n_hi; ++n) {
            auto c = probe(n);
            if (!c) {
                result.exact = true;
                result.value = n;
                result.lower_witness = *witness;
                return result;
            }
            witness = std::move(c);
            witness_order = n;
        }
        result.value = q.n_hi + 1;
    } catch (const Error& err) {
        if (err.kind() != ErrorKind::Timeout) throw;
        result.value = std::max(witness_order + 1, 1);
        result.upper = none_at;
    }
    result.exact = false;
    result.lower_witness = witness ? std::move(*witness) : TwoColouring(0);
    return result;
}

}  // namespace nhr
