#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rmlab/errors.hpp"

namespace rmlab {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

// Rectangular array of nonnegative weights on sites {1..m} x {1..n};
// i indexes columns (horizontal), j indexes rows. Accessors are 0-based.
template <typename T>
class Grid {
public:
    Grid(int m, int n) : m_(m), n_(n), w_(static_cast<std::size_t>(m) * n, T{}) {
        if (m < 1 || n < 1)
            throw validation_error("Grid: both dimensions must be positive");
    }

    // rows[j] lists the m weights of row j
    static Grid from_rows(const std::vector<std::vector<T>>& rows) {
        if (rows.empty() || rows[0].empty())
            throw validation_error("Grid: empty");
        Grid g(static_cast<int>(rows[0].size()), static_cast<int>(rows.size()));
        for (int j = 0; j < g.n_; ++j) {
            if (static_cast<int>(rows[j].size()) != g.m_)
                throw validation_error("Grid: ragged rows");
            for (int i = 0; i < g.m_; ++i)
                g.set(i, j, rows[j][i]);
        }
        return g;
    }

    int columns() const { return m_; }
    int rows() const { return n_; }

    T operator()(int i, int j) const { return w_[static_cast<std::size_t>(j) * m_ + i]; }

    void set(int i, int j, T v) {
        if (v < T{})
            throw validation_error("Grid: weights must be nonnegative");
        w_[static_cast<std::size_t>(j) * m_ + i] = v;
    }

    T total() const {
        T s{};
        for (const T& v : w_)
            s += v;
        return s;
    }

private:
    int m_, n_;
    std::vector<T> w_;
};

using WeightGrid = Grid<double>;
using IntGrid = Grid<long long>;

// Maximum total weight over monotone east/north paths from (1,1) to (M,N):
// T(i,j) = w(i,j) + max(T(i-1,j), T(i,j-1)).
template <typename T>
T last_passage(const Grid<T>& g) {
    const int m = g.columns(), n = g.rows();
    std::vector<T> row(m, T{});
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < m; ++i) {
            T best = row[i]; // from the south (previous row), 0 at j=0
            if (i > 0 && row[i - 1] > best)
                best = row[i - 1];
            row[i] = g(i, j) + best;
        }
    }
    return row[m - 1];
}

namespace detail {

// All monotone east/north paths in an m x n rectangle as cell bitmasks,
// every contiguous prefix counted as a path in its own right.
inline std::vector<std::uint32_t> enumerate_path_masks(int m, int n) {
    std::vector<std::uint32_t> masks;
    auto extend = [&](auto&& self, int i, int j, std::uint32_t mask) -> void {
        mask |= std::uint32_t{1} << (j * m + i);
        masks.push_back(mask);
        if (i + 1 < m)
            self(self, i + 1, j, mask);
        if (j + 1 < n)
            self(self, i, j + 1, mask);
    };
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < m; ++i)
            extend(extend, i, j, 0);
    return masks;
}

} // namespace detail

// Exhaustive maximum over families of up to k pairwise vertex-disjoint
// monotone paths with free endpoints. Oracle-grade: branch and bound over the
// full path list, guarded to grids of at most 16 cells.
template <typename T>
T brute_force_disjoint(const Grid<T>& g, int k) {
    const int m = g.columns(), n = g.rows();
    if (m * n > 16)
        throw capacity_error("brute_force_disjoint: grid larger than 16 cells");
    if (k < 1 || k > n)
        throw validation_error("brute_force_disjoint: k out of range");

    std::vector<std::pair<T, std::uint32_t>> paths; // weight, mask
    for (std::uint32_t mask : detail::enumerate_path_masks(m, n)) {
        T w{};
        for (int c = 0; c < m * n; ++c)
            if (mask & (std::uint32_t{1} << c))
                w += g(c % m, c / m);
        if (w > T{})
            paths.emplace_back(w, mask);
    }
    std::sort(paths.begin(), paths.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    std::vector<T> prefix(paths.size() + 1, T{});
    for (std::size_t i = 0; i < paths.size(); ++i)
        prefix[i + 1] = prefix[i] + paths[i].first;

    T best{};
    auto search = [&](auto&& self, std::size_t idx, int used, std::uint32_t mask, T acc) -> void {
        if (acc > best)
            best = acc;
        if (used == k || idx == paths.size())
            return;
        const std::size_t take = std::min<std::size_t>(paths.size(), idx + (k - used));
        if (!(acc + (prefix[take] - prefix[idx]) > best))
            return;
        for (std::size_t i = idx; i < paths.size(); ++i) {
            if (!(acc + (prefix[std::min(paths.size(), i + (k - used))] - prefix[i]) > best))
                return;
            if ((mask & paths[i].second) == 0)
                self(self, i + 1, used + 1, mask | paths[i].second, acc + paths[i].first);
        }
    };
    search(search, 0, 0, 0, T{});
    return best;
}

namespace detail {

// Successive-shortest-path min-cost flow specialised to the disjoint-path
// problem: unit vertex capacities, profit = cell weight, free endpoints.
class DisjointPathFlow {
public:
    DisjointPathFlow(int node_count) : head_(node_count, -1) {}

    void add_edge(int from, int to, double cost) {
        edges_.push_back({to, head_[from], 1, cost});
        head_[from] = static_cast<int>(edges_.size()) - 1;
        edges_.push_back({from, head_[to], 0, -cost});
        head_[to] = static_cast<int>(edges_.size()) - 1;
    }

    // One augmentation along the minimum-cost source->sink path (Bellman-Ford,
    // costs may be negative). Returns the path cost, or nullopt if unreachable.
    bool augment(int source, int sink, double& path_cost) {
        const int n = static_cast<int>(head_.size());
        std::vector<double> dist(n, std::numeric_limits<double>::infinity());
        std::vector<int> via(n, -1);
        dist[source] = 0.0;
        for (int round = 0; round < n; ++round) {
            bool changed = false;
            for (int u = 0; u < n; ++u) {
                if (!std::isfinite(dist[u]))
                    continue;
                for (int e = head_[u]; e != -1; e = edges_[e].next) {
                    if (edges_[e].cap > 0 && dist[u] + edges_[e].cost < dist[edges_[e].to] - 1e-12) {
                        dist[edges_[e].to] = dist[u] + edges_[e].cost;
                        via[edges_[e].to] = e;
                        changed = true;
                    }
                }
            }
            if (!changed)
                break;
        }
        if (!std::isfinite(dist[sink]))
            return false;
        for (int v = sink; v != source;) {
            const int e = via[v];
            edges_[e].cap -= 1;
            edges_[e ^ 1].cap += 1;
            v = edges_[e ^ 1].to;
        }
        path_cost = dist[sink];
        return true;
    }

private:
    struct Edge {
        int to;
        int next;
        int cap;
        double cost;
    };
    std::vector<Edge> edges_;
    std::vector<int> head_;
};

inline double disjoint_paths_flow(const WeightGrid& g, int k) {
    const int m = g.columns(), n = g.rows();
    const int cells = m * n;
    const int source = 2 * cells, sink = 2 * cells + 1;
    DisjointPathFlow flow(2 * cells + 2);
    auto cell_in = [&](int i, int j) { return 2 * (j * m + i); };
    auto cell_out = [&](int i, int j) { return 2 * (j * m + i) + 1; };
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < m; ++i) {
            flow.add_edge(cell_in(i, j), cell_out(i, j), -g(i, j));
            flow.add_edge(source, cell_in(i, j), 0.0);
            flow.add_edge(cell_out(i, j), sink, 0.0);
            if (i + 1 < m)
                flow.add_edge(cell_out(i, j), cell_in(i + 1, j), 0.0);
            if (j + 1 < n)
                flow.add_edge(cell_out(i, j), cell_in(i, j + 1), 0.0);
        }
    }
    double total = 0.0, best = 0.0;
    for (int paths = 0; paths < k; ++paths) {
        double cost = 0.0;
        if (!flow.augment(source, sink, cost))
            break;
        total -= cost; // profit
        best = std::max(best, total);
    }
    return best;
}

} // namespace detail

class Partition; // fwd
inline Partition rsk_shape(const IntGrid& a);
inline long long partial_shape_sum(const Partition& shape, int k);

// Maximum total weight over k pairwise vertex-disjoint monotone paths with
// free endpoints. Real grids run a min-cost-flow search over the column
// lattice; k = 1 uses the corner-to-corner recursion (equal for nonnegative
// weights, a tested property).
inline double last_passage_disjoint(const WeightGrid& g, int k) {
    if (k < 1 || k > g.rows())
        throw validation_error("last_passage_disjoint: k out of range");
    if (k == 1)
        return last_passage(g);
    return detail::disjoint_paths_flow(g, k);
}

// Integer grids go through the RSK shape: the sum of its first k parts.
inline long long last_passage_disjoint(const IntGrid& g, int k) {
    if (k < 1 || k > g.rows())
        throw validation_error("last_passage_disjoint: k out of range");
    if (k == 1)
        return last_passage(g);
    return partial_shape_sum(rsk_shape(g), k);
}

// Weakly decreasing nonnegative integers; trailing zeros are stripped so
// equality is canonical. h-form entries h_i = parts_i + n - i are strictly
// decreasing by construction.
class Partition {
public:
    Partition() = default;

    static Partition from_parts(std::vector<long long> parts) {
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (parts[i] < 0)
                throw validation_error("Partition: negative part");
            if (i > 0 && parts[i] > parts[i - 1])
                throw validation_error("Partition: parts must be weakly decreasing");
        }
        while (!parts.empty() && parts.back() == 0)
            parts.pop_back();
        Partition p;
        p.parts_ = std::move(parts);
        return p;
    }

    const std::vector<long long>& parts() const { return parts_; }
    int rows() const { return static_cast<int>(parts_.size()); }

    long long weight() const {
        long long s = 0;
        for (long long v : parts_)
            s += v;
        return s;
    }

    long long part(int i) const { // 0-based, zero beyond the listed rows
        return i < rows() ? parts_[i] : 0;
    }

    // (part_i + n - 1 - i) for i = 0..n-1
    std::vector<long long> h_form(int n) const {
        if (rows() > n)
            throw validation_error("Partition: does not fit in the requested row count");
        std::vector<long long> h(n);
        for (int i = 0; i < n; ++i)
            h[i] = part(i) + n - 1 - i;
        return h;
    }

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

private:
    std::vector<long long> parts_;
};

inline long long partial_shape_sum(const Partition& shape, int k) {
    long long s = 0;
    for (int i = 0; i < k; ++i)
        s += shape.part(i);
    return s;
}

// Semi-standard Young tableau in explicit row form (1-based letters).
struct Tableau {
    std::vector<std::vector<int>> rows;

    bool is_semistandard() const {
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r + 1 < rows.size() && rows[r + 1].size() > rows[r].size())
                return false;
            for (std::size_t c = 0; c < rows[r].size(); ++c) {
                if (c > 0 && rows[r][c] < rows[r][c - 1])
                    return false;
                if (r > 0 && rows[r][c] <= rows[r - 1][c])
                    return false;
            }
        }
        return true;
    }
};

struct TableauPair {
    Tableau p; // letters {1..n}
    Tableau q; // letters {1..m}
    Partition shape;
};

namespace detail {

// Tableau rows as per-letter counts; rows are weakly increasing so counts
// determine them. Block insertion of c copies of letter v bumps the leftmost
// min(c, #entries > v) entries, smallest letters first, which matches
// letter-by-letter row insertion of a weakly increasing word.
struct CountTableau {
    int alphabet;
    std::vector<std::vector<long long>> rows; // rows[r][letter-1]

    // returns the bumped blocks (letter, count) in weakly increasing order
    std::vector<std::pair<int, long long>> insert_blocks_row(
        std::size_t r, const std::vector<std::pair<int, long long>>& blocks) {
        if (r == rows.size())
            rows.emplace_back(alphabet, 0);
        auto& row = rows[r];
        std::vector<std::pair<int, long long>> bumped;
        for (const auto& [v, c] : blocks) {
            long long need = c;
            for (int l = v; l < alphabet && need > 0; ++l) { // letters > v (1-based)
                const long long take = std::min(need, row[l]);
                if (take > 0) {
                    row[l] -= take;
                    if (!bumped.empty() && bumped.back().first == l + 1)
                        bumped.back().second += take;
                    else
                        bumped.emplace_back(l + 1, take);
                    need -= take;
                }
            }
            row[v - 1] += c;
        }
        return bumped;
    }

    long long row_length(std::size_t r) const {
        long long s = 0;
        for (long long c : rows[r])
            s += c;
        return s;
    }

    Tableau expand() const {
        Tableau t;
        for (const auto& row : rows) {
            std::vector<int> cells;
            for (int l = 0; l < alphabet; ++l)
                cells.insert(cells.end(), static_cast<std::size_t>(row[l]), l + 1);
            if (!cells.empty())
                t.rows.push_back(std::move(cells));
        }
        return t;
    }
};

struct RskResult {
    CountTableau p;
    CountTableau q;
};

inline RskResult rsk_counts(const IntGrid& a) {
    const int m = a.columns(), n = a.rows();
    RskResult res{CountTableau{n, {}}, CountTableau{m, {}}};
    for (int i = 0; i < m; ++i) {
        // biword letters (i+1, j+1) in lexicographic order: insert the j's,
        // record the i's where the shape grows
        std::vector<std::pair<int, long long>> blocks;
        for (int j = 0; j < n; ++j) {
            const long long c = a(i, j);
            if (c < 0)
                throw validation_error("rsk: entries must be nonnegative");
            if (c > 0)
                blocks.emplace_back(j + 1, c);
        }
        std::size_t r = 0;
        while (!blocks.empty()) {
            long long inserted = 0;
            for (const auto& [v, c] : blocks)
                inserted += c;
            auto bumped = res.p.insert_blocks_row(r, blocks);
            long long out = 0;
            for (const auto& [v, c] : bumped)
                out += c;
            const long long growth = inserted - out;
            if (growth > 0) {
                if (r == res.q.rows.size())
                    res.q.rows.emplace_back(m, 0);
                res.q.rows[r][i] += growth;
            }
            blocks = std::move(bumped);
            ++r;
        }
    }
    return res;
}

} // namespace detail

// Robinson-Schensted-Knuth image of a nonnegative integer matrix: classical
// row insertion of the biword in lexicographic order.
inline TableauPair rsk(const IntGrid& a) {
    auto counts = detail::rsk_counts(a);
    std::vector<long long> parts;
    for (std::size_t r = 0; r < counts.p.rows.size(); ++r)
        parts.push_back(counts.p.row_length(r));
    return TableauPair{counts.p.expand(), counts.q.expand(), Partition::from_parts(std::move(parts))};
}

inline Partition rsk_shape(const IntGrid& a) {
    auto counts = detail::rsk_counts(a);
    std::vector<long long> parts;
    for (std::size_t r = 0; r < counts.p.rows.size(); ++r)
        parts.push_back(counts.p.row_length(r));
    return Partition::from_parts(std::move(parts));
}

// Number of semi-standard Young tableaux of the given shape over {1..K},
// counted by exhaustive filling. Oracle for l_count; guarded to 12 cells.
inline cpp_int ssyt_count(const Partition& shape, int alphabet_size) {
    if (alphabet_size < 0)
        throw validation_error("ssyt_count: negative alphabet");
    if (shape.rows() == 0)
        return 1;
    if (shape.rows() > alphabet_size)
        return 0;
    if (shape.weight() > 12)
        throw capacity_error("ssyt_count: exhaustive filling is limited to 12 cells");

    const auto& parts = shape.parts();
    std::vector<std::vector<int>> fill(parts.size());
    for (std::size_t r = 0; r < parts.size(); ++r)
        fill[r].assign(static_cast<std::size_t>(parts[r]), 0);

    cpp_int count = 0;
    auto rec = [&](auto&& self, std::size_t r, std::size_t c) -> void {
        if (r == fill.size()) {
            ++count;
            return;
        }
        std::size_t nr = r, nc = c + 1;
        if (nc == fill[r].size()) {
            nr = r + 1;
            nc = 0;
        }
        int lo = 1;
        if (c > 0)
            lo = std::max(lo, fill[r][c - 1]);
        if (r > 0)
            lo = std::max(lo, fill[r - 1][c] + 1);
        for (int v = lo; v <= alphabet_size; ++v) {
            fill[r][c] = v;
            self(self, nr, nc);
        }
    };
    rec(rec, 0, 0);
    return count;
}

namespace detail {

inline cpp_int factorial(long long n) {
    cpp_int f = 1;
    for (long long i = 2; i <= n; ++i)
        f *= i;
    return f;
}

inline double log_cpp_int(const cpp_int& v) {
    if (v <= 0)
        throw consistency_error("log_cpp_int: nonpositive value");
    const unsigned bits = boost::multiprecision::msb(v);
    if (bits <= 52)
        return std::log(v.convert_to<double>());
    const cpp_int shifted = v >> (bits - 52);
    return std::log(shifted.convert_to<double>()) +
           static_cast<double>(bits - 52) * std::numbers::ln2;
}

} // namespace detail

// Number of nonnegative integer m x n matrices whose RSK shape is the given
// partition, by the hook-content style product over the shifted coordinates
// h_i: c_{mn}^{-1} prod_{i<j} (h_j - h_i)^2 prod_i (h_i + m - n)! / h_i! with
// c_{mn} = prod_{j=0}^{n-1} j! (m-n+j)!. Evaluated in exact rational
// arithmetic; a non-integer result signals a transcription bug.
inline cpp_int l_count(const Partition& shape, int m, int n) {
    if (n < 1 || m < n)
        throw validation_error("l_count: need m >= n >= 1");
    const auto h = shape.h_form(n); // throws if the shape does not fit
    cpp_rational r = 1;
    for (int j = 0; j < n; ++j)
        r /= cpp_rational(detail::factorial(j) * detail::factorial(m - n + j));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const cpp_int diff = h[i] - h[j];
            r *= cpp_rational(diff * diff);
        }
    for (int i = 0; i < n; ++i)
        r *= cpp_rational(detail::factorial(h[i] + m - n), detail::factorial(h[i]));
    if (boost::multiprecision::denominator(r) != 1)
        throw consistency_error("l_count: product formula gave a non-integer");
    return boost::multiprecision::numerator(r);
}

// log P(RSK shape of an m x n i.i.d. Geometric(q) matrix equals the given
// partition) = mn log(1-q) + |shape| log q + log L(shape, m, n).
inline double shape_log_pmf(const Partition& shape, int m, int n, double q) {
    if (!(q > 0.0 && q < 1.0))
        throw validation_error("shape_log_pmf: q must lie in (0,1)");
    const cpp_int count = l_count(shape, m, n);
    return static_cast<double>(m) * n * std::log1p(-q) +
           static_cast<double>(shape.weight()) * std::log(q) + detail::log_cpp_int(count);
}

} // namespace rmlab
