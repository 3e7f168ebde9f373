#include <gpcert/bounds.hh>
#include <gpcert/exact.hh>
#include <gpcert/verify.hh>

#include <Eigen/Dense>
#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <atomic>
#include <bit>
#include <map>
#include <mutex>
#include <thread>
#include <unordered_map>

using std::size_t;
using std::uint64_t;
using std::vector;

namespace gpcert
{
    namespace
    {
        using Bits = boost::dynamic_bitset<uint64_t>;
        using Mask = uint64_t;

        constexpr size_t max_search_vertices = 64;

        auto bit(size_t i) -> Mask
        {
            return Mask{1} << i;
        }

        auto mask_members(Mask m) -> vector<size_t>
        {
            vector<size_t> result;
            while (m) {
                result.push_back(static_cast<size_t>(std::countr_zero(m)));
                m &= m - 1;
            }
            return result;
        }

        /// max(n+, n-) for the symmetric 0/1 matrix given by adjacency masks. Eigenvalues within
        /// the tolerance of zero are not counted, so rounding can only weaken the bound.
        auto inertia_of(const vector<Mask> & adj) -> size_t
        {
            vector<size_t> active;
            for (size_t v = 0; v < adj.size(); ++v)
                if (adj[v])
                    active.push_back(v);
            if (active.empty())
                return 0;
            auto n = static_cast<Eigen::Index>(active.size());
            Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
            for (Eigen::Index i = 0; i < n; ++i)
                for (Eigen::Index j = 0; j < n; ++j)
                    if (adj[active[i]] & bit(active[j]))
                        a(i, j) = 1.0;
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
            size_t positive = 0, negative = 0;
            for (Eigen::Index i = 0; i < n; ++i) {
                double lambda = solver.eigenvalues()[i];
                if (lambda > 1e-7)
                    ++positive;
                else if (lambda < -1e-7)
                    ++negative;
            }
            return std::max(positive, negative);
        }

        /// Every biclique (X, Y) inside the graph given by adjacency masks with u in X and v in Y.
        /// Each is reported once.
        template <typename Callback>
        auto for_each_biclique(const vector<Mask> & adj, size_t u, size_t v, Callback && callback) -> void
        {
            Mask pool = (adj[u] | adj[v]) & ~bit(u) & ~bit(v);
            auto order = mask_members(pool);

            auto rec = [&](auto & self, size_t idx, Mask x, Mask y, Mask can_x, Mask can_y) -> void {
                if (idx == order.size()) {
                    callback(x, y);
                    return;
                }
                auto w = order[idx];
                self(self, idx + 1, x, y, can_x, can_y);
                if (can_x & bit(w))
                    self(self, idx + 1, x | bit(w), y, can_x, can_y & adj[w]);
                if (can_y & bit(w))
                    self(self, idx + 1, x, y | bit(w), can_x & adj[w], can_y);
            };
            rec(rec, 0, bit(u), bit(v), adj[v], adj[u]);
        }

        template <typename Block>
        struct Option
        {
            Block block;
            Bits covered;
        };

        template <typename Block>
        auto sort_options(vector<Option<Block>> & options) -> void
        {
            std::stable_sort(options.begin(), options.end(),
                [](const Option<Block> & a, const Option<Block> & b) { return a.covered.count() > b.covered.count(); });
        }

        auto check_vertex_limit(size_t n) -> void
        {
            if (n > max_search_vertices)
                throw InvalidArguments("exact search supports at most 64 vertices per factor");
        }

        class GraphDomain
        {
        private:
            VertexSet _labels;
            vector<std::pair<size_t, size_t>> _ends;
            vector<vector<int>> _edge_id;

        public:
            using Block = Biclique;

            explicit GraphDomain(const Graph & g) :
                _labels(g.vertices()),
                _edge_id(g.vertex_count(), vector<int>(g.vertex_count(), -1))
            {
                check_vertex_limit(_labels.size());
                for (auto & e : g.edges()) {
                    auto i = static_cast<size_t>(std::lower_bound(_labels.begin(), _labels.end(), e.u) - _labels.begin());
                    auto j = static_cast<size_t>(std::lower_bound(_labels.begin(), _labels.end(), e.v) - _labels.begin());
                    _edge_id[i][j] = _edge_id[j][i] = static_cast<int>(_ends.size());
                    _ends.emplace_back(i, j);
                }
            }

            [[nodiscard]] auto size() const -> size_t { return _ends.size(); }

            [[nodiscard]] auto singleton(size_t e) const -> Block
            {
                return Biclique::make({_labels[_ends[e].first]}, {_labels[_ends[e].second]});
            }

            [[nodiscard]] auto adjacency(const Bits & remaining) const -> vector<Mask>
            {
                vector<Mask> adj(_labels.size(), 0);
                for (auto e = remaining.find_first(); e != Bits::npos; e = remaining.find_next(e)) {
                    auto [i, j] = _ends[e];
                    adj[i] |= bit(j);
                    adj[j] |= bit(i);
                }
                return adj;
            }

            [[nodiscard]] auto lower_bound(const Bits & remaining) const -> size_t
            {
                return inertia_of(adjacency(remaining));
            }

            [[nodiscard]] auto options(const Bits & remaining, size_t pivot) const -> vector<Option<Block>>
            {
                auto adj = adjacency(remaining);
                auto [u, v] = _ends[pivot];
                vector<Option<Block>> result;
                for_each_biclique(adj, u, v, [&](Mask x, Mask y) {
                    Bits covered(size());
                    vector<Vertex> xs, ys;
                    for (auto a : mask_members(x))
                        xs.push_back(_labels[a]);
                    for (auto b : mask_members(y)) {
                        ys.push_back(_labels[b]);
                        for (auto a : mask_members(x))
                            covered.set(static_cast<size_t>(_edge_id[a][b]));
                    }
                    result.push_back({Biclique::make(xs, ys), std::move(covered)});
                });
                sort_options(result);
                return result;
            }
        };

        class HypergraphDomain
        {
        private:
            VertexSet _labels;
            size_t _rank;
            vector<Mask> _edges;
            std::unordered_map<Mask, size_t> _index;

            // For each (rank-2)-subset S: the host edges containing S, and for each the bit of
            // its remaining pair in the pair numbering of the vertex set. Empty when the vertex
            // set is too large for pair masks.
            vector<vector<std::pair<size_t, Mask>>> _links;
            static constexpr size_t max_link_vertices = 11;

        public:
            using Block = MultipartiteBlock;

            explicit HypergraphDomain(const HypergraphHost & host) :
                _labels(host.vertices()),
                _rank(host.rank())
            {
                check_vertex_limit(_labels.size());
                auto edges = host.edges();
                std::sort(edges.begin(), edges.end());
                for (auto & e : edges) {
                    Mask m = 0;
                    for (auto v : e)
                        m |= bit(static_cast<size_t>(std::lower_bound(_labels.begin(), _labels.end(), v) - _labels.begin()));
                    _index.emplace(m, _edges.size());
                    _edges.push_back(m);
                }
                if (_rank >= 2 && _labels.size() <= max_link_vertices)
                    build_links();
            }

            auto build_links() -> void
            {
                auto n = _labels.size();
                auto pair_bit = [n](size_t a, size_t b) { return bit(a * n + b - (a + 1) * (a + 2) / 2); };
                std::map<Mask, size_t> subset_id;
                for (size_t e = 0; e < _edges.size(); ++e) {
                    auto members = mask_members(_edges[e]);
                    for (size_t i = 0; i < members.size(); ++i)
                        for (size_t j = i + 1; j < members.size(); ++j) {
                            auto rest = _edges[e] & ~bit(members[i]) & ~bit(members[j]);
                            auto [it, fresh] = subset_id.emplace(rest, _links.size());
                            if (fresh)
                                _links.emplace_back();
                            _links[it->second].emplace_back(e, pair_bit(members[i], members[j]));
                        }
                }
            }

            // Blocks through a (rank-2)-set S meet the link graph of S in bicliques from distinct
            // blocks, so the inertia of any link is a lower bound. Summed over all S, each block is
            // counted at most once per (rank-2)-set it splits across classes.
            [[nodiscard]] auto link_bound(const Bits & remaining, size_t active_vertices) const -> size_t
            {
                thread_local std::array<std::unordered_map<Mask, size_t>, max_link_vertices + 1> caches;
                auto n = _labels.size();
                auto & cache = caches[n];
                size_t best = 0, total = 0;
                for (auto & link : _links) {
                    Mask pairs = 0;
                    for (auto & [e, b] : link)
                        if (remaining.test(e))
                            pairs |= b;
                    if (! pairs)
                        continue;
                    auto it = cache.find(pairs);
                    if (it == cache.end()) {
                        vector<Mask> adj(n, 0);
                        size_t index = 0;
                        for (size_t a = 0; a < n; ++a)
                            for (size_t b = a + 1; b < n; ++b, ++index)
                                if (pairs & bit(index)) {
                                    adj[a] |= bit(b);
                                    adj[b] |= bit(a);
                                }
                        it = cache.emplace(pairs, inertia_of(adj)).first;
                    }
                    best = std::max(best, it->second);
                    total += it->second;
                }
                auto split = max_split_subsets(active_vertices);
                return std::max(best, split ? static_cast<size_t>((total + split - 1) / split) : 0);
            }

            // Largest number of (rank-2)-subsets meeting rank-2 distinct classes of a block on a
            // vertices: the elementary symmetric polynomial of the class sizes, maximized by a
            // balanced split.
            [[nodiscard]] auto max_split_subsets(size_t a) const -> uint64_t
            {
                vector<uint64_t> sizes;
                for (size_t t = 0; t < _rank; ++t)
                    sizes.push_back((a + t) / _rank);
                vector<uint64_t> elementary(_rank + 1, 0);
                elementary[0] = 1;
                for (auto c : sizes)
                    for (size_t d = _rank; d > 0; --d)
                        elementary[d] += elementary[d - 1] * c;
                return elementary[_rank - 2];
            }

            [[nodiscard]] auto size() const -> size_t { return _edges.size(); }

            [[nodiscard]] auto singleton(size_t e) const -> Block
            {
                vector<vector<Vertex>> classes;
                for (auto v : mask_members(_edges[e]))
                    classes.push_back({_labels[v]});
                return MultipartiteBlock::make(std::move(classes));
            }

            // Area bound: a complete r-partite block on A vertices has at most the product of a
            // balanced split of A into r parts.
            [[nodiscard]] auto lower_bound(const Bits & remaining) const -> size_t
            {
                auto count = remaining.count();
                if (count == 0)
                    return 0;
                Mask active = 0;
                for (auto e = remaining.find_first(); e != Bits::npos; e = remaining.find_next(e))
                    active |= _edges[e];
                auto a = static_cast<uint64_t>(std::popcount(active));
                uint64_t largest = 1;
                for (size_t t = 0; t < _rank; ++t)
                    largest *= (a + t) / _rank;
                auto area = static_cast<size_t>((count + largest - 1) / largest);
                return _links.empty() ? area : std::max(area, link_bound(remaining, a));
            }

            [[nodiscard]] auto options(const Bits & remaining, size_t pivot) const -> vector<Option<Block>>
            {
                auto pivot_vertices = mask_members(_edges[pivot]);
                Mask active = 0;
                for (auto e = remaining.find_first(); e != Bits::npos; e = remaining.find_next(e))
                    active |= _edges[e];
                auto order = mask_members(active & ~_edges[pivot]);

                vector<Mask> classes;
                for (auto v : pivot_vertices)
                    classes.push_back(bit(v));
                vector<size_t> covered{pivot};
                vector<Option<Block>> result;

                // Transversals through w in class t; false if one is not remaining.
                auto extend = [&](size_t w, size_t t) -> bool {
                    vector<Mask> partial{bit(w)};
                    for (size_t s = 0; s < classes.size(); ++s) {
                        if (s == t)
                            continue;
                        vector<Mask> next;
                        for (auto p : partial)
                            for (auto v : mask_members(classes[s]))
                                next.push_back(p | bit(v));
                        partial = std::move(next);
                    }
                    auto mark = covered.size();
                    for (auto m : partial) {
                        auto it = _index.find(m);
                        if (it == _index.end() || ! remaining.test(it->second)) {
                            covered.resize(mark);
                            return false;
                        }
                        covered.push_back(it->second);
                    }
                    return true;
                };

                auto rec = [&](auto & self, size_t idx) -> void {
                    if (idx == order.size()) {
                        Bits bits(size());
                        for (auto c : covered)
                            bits.set(c);
                        vector<vector<Vertex>> out;
                        for (auto c : classes) {
                            vector<Vertex> labels;
                            for (auto v : mask_members(c))
                                labels.push_back(_labels[v]);
                            out.push_back(std::move(labels));
                        }
                        result.push_back({MultipartiteBlock::make(std::move(out)), std::move(bits)});
                        return;
                    }
                    self(self, idx + 1);
                    auto w = order[idx];
                    for (size_t t = 0; t < classes.size(); ++t) {
                        auto mark = covered.size();
                        if (! extend(w, t))
                            continue;
                        classes[t] |= bit(w);
                        self(self, idx + 1);
                        classes[t] &= ~bit(w);
                        covered.resize(mark);
                    }
                };
                rec(rec, 0);
                sort_options(result);
                return result;
            }
        };

        class ProductDomain
        {
        private:
            VertexSet _left_labels, _right_labels;
            vector<std::pair<size_t, size_t>> _left_ends, _right_ends;
            vector<vector<int>> _left_id, _right_id;

            static auto index_edges(const Graph & g, vector<std::pair<size_t, size_t>> & ends, vector<vector<int>> & id)
                -> void
            {
                auto & labels = g.vertices();
                id.assign(labels.size(), vector<int>(labels.size(), -1));
                for (auto & e : g.edges()) {
                    auto i = static_cast<size_t>(std::lower_bound(labels.begin(), labels.end(), e.u) - labels.begin());
                    auto j = static_cast<size_t>(std::lower_bound(labels.begin(), labels.end(), e.v) - labels.begin());
                    id[i][j] = id[j][i] = static_cast<int>(ends.size());
                    ends.emplace_back(i, j);
                }
            }

            auto element(size_t le, size_t re) const -> size_t { return le * _right_ends.size() + re; }

            auto to_biclique(Mask x, Mask y, const VertexSet & labels) const -> Biclique
            {
                vector<Vertex> xs, ys;
                for (auto a : mask_members(x))
                    xs.push_back(labels[a]);
                for (auto b : mask_members(y))
                    ys.push_back(labels[b]);
                return Biclique::make(xs, ys);
            }

        public:
            using Block = ProductBlock;

            ProductDomain(const Graph & g, const Graph & h) :
                _left_labels(g.vertices()),
                _right_labels(h.vertices())
            {
                check_vertex_limit(_left_labels.size());
                check_vertex_limit(_right_labels.size());
                index_edges(g, _left_ends, _left_id);
                index_edges(h, _right_ends, _right_id);
            }

            [[nodiscard]] auto size() const -> size_t { return _left_ends.size() * _right_ends.size(); }

            [[nodiscard]] auto singleton(size_t p) const -> Block
            {
                auto [a, b] = _left_ends[p / _right_ends.size()];
                auto [c, d] = _right_ends[p % _right_ends.size()];
                return {Biclique::make({_left_labels[a]}, {_left_labels[b]}),
                    Biclique::make({_right_labels[c]}, {_right_labels[d]})};
            }

            // A partition into q blocks doubles to a partition of the corresponding subgraph of
            // the weak product into 2q bicliques.
            [[nodiscard]] auto lower_bound(const Bits & remaining) const -> size_t
            {
                auto width = _right_labels.size();
                auto vertices = _left_labels.size() * width;
                if (vertices > max_search_vertices) {
                    return remaining.none() ? 0 : 1;
                }
                vector<Mask> adj(vertices, 0);
                auto link = [&](size_t p, size_t q) {
                    adj[p] |= bit(q);
                    adj[q] |= bit(p);
                };
                for (auto p = remaining.find_first(); p != Bits::npos; p = remaining.find_next(p)) {
                    auto [x1, x2] = _left_ends[p / _right_ends.size()];
                    auto [y1, y2] = _right_ends[p % _right_ends.size()];
                    link(x1 * width + y1, x2 * width + y2);
                    link(x1 * width + y2, x2 * width + y1);
                }
                return (inertia_of(adj) + 1) / 2;
            }

            [[nodiscard]] auto options(const Bits & remaining, size_t pivot) const -> vector<Option<Block>>
            {
                auto pl = pivot / _right_ends.size(), pr = pivot % _right_ends.size();

                vector<Mask> left_adj(_left_labels.size(), 0);
                for (size_t le = 0; le < _left_ends.size(); ++le)
                    if (remaining.test(element(le, pr))) {
                        auto [i, j] = _left_ends[le];
                        left_adj[i] |= bit(j);
                        left_adj[j] |= bit(i);
                    }

                vector<Option<Block>> result;
                for_each_biclique(left_adj, _left_ends[pl].first, _left_ends[pl].second, [&](Mask x1, Mask x2) {
                    vector<size_t> left_edges;
                    for (auto a : mask_members(x1))
                        for (auto b : mask_members(x2))
                            left_edges.push_back(static_cast<size_t>(_left_id[a][b]));

                    vector<Mask> right_adj(_right_labels.size(), 0);
                    for (size_t re = 0; re < _right_ends.size(); ++re) {
                        bool all = std::all_of(left_edges.begin(), left_edges.end(),
                            [&](size_t le) { return remaining.test(element(le, re)); });
                        if (all) {
                            auto [i, j] = _right_ends[re];
                            right_adj[i] |= bit(j);
                            right_adj[j] |= bit(i);
                        }
                    }

                    auto left = to_biclique(x1, x2, _left_labels);
                    for_each_biclique(right_adj, _right_ends[pr].first, _right_ends[pr].second, [&](Mask y1, Mask y2) {
                        Bits covered(size());
                        for (auto a : mask_members(y1))
                            for (auto b : mask_members(y2)) {
                                auto re = static_cast<size_t>(_right_id[a][b]);
                                for (auto le : left_edges)
                                    covered.set(element(le, re));
                            }
                        result.push_back({{left, to_biclique(y1, y2, _right_labels)}, std::move(covered)});
                    });
                });
                sort_options(result);
                return result;
            }
        };

        /// Depth-first branch and bound over exact partitions: branch on every block that
        /// contains the lowest uncovered element, prune when blocks used plus a lower bound on
        /// the rest cannot beat the incumbent.
        template <typename Domain>
        class Search
        {
        private:
            using Block = typename Domain::Block;

            const Domain & _domain;
            const SolveOptions<Block> & _options;
            std::chrono::steady_clock::time_point _start = std::chrono::steady_clock::now();

            std::atomic<size_t> _best;
            std::mutex _best_mutex;
            vector<Block> _best_blocks;
            size_t _floor = 0;

            std::atomic<uint64_t> _nodes{0};
            std::atomic<bool> _exhausted{false};
            std::atomic<bool> _finished{false};

            auto out_of_budget(uint64_t count) -> bool
            {
                auto & budget = _options.budget;
                if (budget.max_nodes && count > *budget.max_nodes)
                    return true;
                if (budget.max_seconds && count % 256 == 0
                    && std::chrono::steady_clock::now() - _start > *budget.max_seconds)
                    return true;
                return false;
            }

            auto record(const vector<Block> & stack) -> void
            {
                std::lock_guard<std::mutex> lock(_best_mutex);
                if (stack.size() < _best.load()) {
                    _best_blocks = stack;
                    _best.store(stack.size());
                    if (stack.size() <= _floor)
                        _finished = true;
                }
            }

            // Returns false when the search must stop.
            auto enter(const Bits & remaining, vector<Block> & stack, size_t & lower) -> bool
            {
                if (_exhausted || _finished)
                    return false;
                if (out_of_budget(++_nodes)) {
                    _exhausted = true;
                    return false;
                }
                if (remaining.none()) {
                    record(stack);
                    return false;
                }
                auto depth = stack.size();
                if (depth + 1 >= _best.load())
                    return false;
                lower = std::max<size_t>(1, _domain.lower_bound(remaining));
                return depth + lower < _best.load();
            }

            auto dfs(const Bits & remaining, vector<Block> & stack) -> void
            {
                size_t lower = 0;
                if (! enter(remaining, stack, lower))
                    return;
                auto depth = stack.size();
                auto options = _domain.options(remaining, remaining.find_first());
                for (auto & option : options) {
                    stack.push_back(option.block);
                    dfs(remaining - option.covered, stack);
                    stack.pop_back();
                    if (_exhausted || _finished || depth + lower >= _best.load())
                        return;
                }
            }

        public:
            Search(const Domain & domain, const SolveOptions<Block> & options) :
                _domain(domain),
                _options(options)
            {
            }

            auto run(vector<Block> incumbent, size_t root_floor) -> SolveResult<Block>
            {
                _best_blocks = std::move(incumbent);
                _best = _best_blocks.size();

                Bits all(_domain.size());
                all.set();
                _floor = std::max(root_floor, _options.lower_bound_hint);
                if (_best.load() <= _floor)
                    _finished = true;

                if (_options.threads <= 1) {
                    vector<Block> stack;
                    dfs(all, stack);
                }
                else {
                    vector<Block> root_stack;
                    size_t lower = 0;
                    if (enter(all, root_stack, lower)) {
                        auto options = _domain.options(all, all.find_first());
                        std::atomic<size_t> next{0};
                        auto worker = [&]() {
                            vector<Block> stack;
                            for (size_t k = next++; k < options.size(); k = next++) {
                                if (_exhausted || _finished || lower >= _best.load())
                                    return;
                                stack.assign(1, options[k].block);
                                dfs(all - options[k].covered, stack);
                            }
                        };
                        vector<std::jthread> pool;
                        for (unsigned t = 0; t < _options.threads; ++t)
                            pool.emplace_back(worker);
                    }
                }

                SolveResult<Block> result;
                result.best_count = _best.load();
                result.certificate = _best_blocks;
                result.nodes_explored = _nodes.load();
                result.budget_exhausted = _exhausted.load();
                if (! result.budget_exhausted || result.best_count <= _floor)
                    result.optimum = result.best_count;
                return result;
            }
        };

        template <typename Domain>
        auto singletons(const Domain & domain) -> vector<typename Domain::Block>
        {
            vector<typename Domain::Block> result;
            for (size_t e = 0; e < domain.size(); ++e)
                result.push_back(domain.singleton(e));
            return result;
        }

        auto complete_graph_size(const Graph & g) -> std::optional<size_t>
        {
            if (g.vertex_count() >= 2 && g.is_complete())
                return g.vertex_count();
            return std::nullopt;
        }
    }

    auto inertia_bound(const Graph & g) -> size_t
    {
        GraphDomain domain(g);
        Bits all(domain.size());
        all.set();
        return domain.lower_bound(all);
    }

    auto min_biclique_partition(const Graph & g, const SolveOptions<Biclique> & options) -> SolveResult<Biclique>
    {
        GraphDomain domain(g);
        auto incumbent = singletons(domain);
        if (options.incumbent) {
            if (! is_biclique_partition(g, *options.incumbent))
                throw InvalidArguments("incumbent is not a biclique partition of the graph");
            if (options.incumbent->size() < incumbent.size())
                incumbent = *options.incumbent;
        }
        Search<GraphDomain> search(domain, options);
        return search.run(std::move(incumbent), 0);
    }

    auto min_multipartite_partition(const HypergraphHost & host, const SolveOptions<MultipartiteBlock> & options)
        -> SolveResult<MultipartiteBlock>
    {
        HypergraphDomain domain(host);
        auto incumbent = singletons(domain);
        if (options.incumbent) {
            HypergraphCertificate cert{host, *options.incumbent, {}};
            if (! verify_partition(cert).is_exact_partition)
                throw InvalidArguments("incumbent is not an exact partition of the host");
            if (options.incumbent->size() < incumbent.size())
                incumbent = *options.incumbent;
        }
        Search<HypergraphDomain> search(domain, options);
        return search.run(std::move(incumbent), 0);
    }

    auto min_product_block_partition(const Graph & g, const Graph & h, const ProductSolveOptions & options)
        -> SolveResult<ProductBlock>
    {
        ProductDomain domain(g, h);
        auto incumbent = singletons(domain);
        if (options.incumbent) {
            ProductCertificate cert{g, h, *options.incumbent, {}};
            if (! verify_product_partition(cert).is_exact_partition)
                throw InvalidArguments("incumbent is not an exact partition of E(g) x E(h)");
            if (options.incumbent->size() < incumbent.size())
                incumbent = *options.incumbent;
        }

        size_t floor = 0;
        auto m1 = complete_graph_size(g), m2 = complete_graph_size(h);
        if (options.closed_form_root_bound && m1 && m2) {
            auto take = [&](const BoundValue & b) { floor = std::max(floor, static_cast<size_t>(b.value)); };
            if (*m1 == 3)
                take(g_k3_bounds(*m2).first);
            if (*m2 == 3)
                take(g_k3_bounds(*m1).first);
            if (*m1 == 4)
                take(g_k4_bounds(*m2).first);
            if (*m2 == 4)
                take(g_k4_bounds(*m1).first);
            if (*m1 == *m2)
                take(g_weakproduct_lower(*m1));
        }

        Search<ProductDomain> search(domain, options);
        return search.run(std::move(incumbent), floor);
    }

    auto scheme_with_optimal_witnesses(size_t n, std::array<Graph, 4> parts, const Budget & budget) -> PartitionScheme
    {
        PartitionScheme scheme;
        scheme.n = n;
        auto vertices = Graph::complete(n).vertices();
        for (size_t p = 0; p < 4; ++p)
            scheme.parts[p] = Graph{vertices, parts[p].edges()};

        SolveOptions<Biclique> options;
        options.budget = budget;
        auto solve = [&](const Graph & g) {
            auto result = min_biclique_partition(g, options);
            if (! result.resolved())
                throw std::runtime_error("biclique partition search unresolved within budget");
            return result.certificate;
        };
        for (size_t i = 1; i <= 3; ++i) {
            scheme.part_witness[i - 1] = solve(scheme.parts[i]);
            scheme.union_witness[i - 1] = solve(scheme.union_graph(i));
        }
        validate(scheme);
        return scheme;
    }
}
