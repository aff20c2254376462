#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pw1 {

using VertexId = std::int32_t;
using Edge = std::pair<VertexId, VertexId>;

inline constexpr VertexId kNoVertex = -1;

// Malformed input handed to the library: unknown ids, self-loops, parallel edges, bad splits.
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A broken internal invariant. Seeing one of these is a bug in this library.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

namespace detail {

// Neighbor list that keeps up to four ids inline, the common case for sparse inputs, so
// copying a graph and walking a vertex's neighbors usually avoid the heap.
class NeighborList {
public:
    static constexpr std::uint32_t kInline = 4;

    NeighborList() = default;
    NeighborList(const NeighborList& o) { assign(o.begin(), o.end()); }
    NeighborList(NeighborList&& o) noexcept { steal(o); }
    NeighborList& operator=(const NeighborList& o) {
        if (this != &o) {
            size_ = 0;
            assign(o.begin(), o.end());
        }
        return *this;
    }
    NeighborList& operator=(NeighborList&& o) noexcept {
        if (this != &o) {
            release();
            steal(o);
        }
        return *this;
    }
    ~NeighborList() { release(); }

    VertexId* begin() { return data(); }
    VertexId* end() { return data() + size_; }
    const VertexId* begin() const { return data(); }
    const VertexId* end() const { return data() + size_; }
    std::size_t size() const { return size_; }
    bool empty() const { return size_ == 0; }
    VertexId& back() { return data()[size_ - 1]; }
    operator std::span<const VertexId>() const { return {data(), size_}; }

    void push_back(VertexId v) {
        if (size_ == cap_) grow(cap_ * 2);
        data()[size_++] = v;
    }
    void pop_back() { --size_; }
    void erase(VertexId* pos) {
        std::copy(pos + 1, end(), pos);
        --size_;
    }
    void erase(VertexId* first, VertexId* last) {
        std::copy(last, end(), first);
        size_ -= static_cast<std::uint32_t>(last - first);
    }
    void clear() { size_ = 0; }
    void shrink_to_fit() {
        if (cap_ == kInline || size_ > kInline) return;
        VertexId* old = heap_;
        std::copy(old, old + size_, inline_);
        delete[] old;
        cap_ = kInline;
    }

private:
    VertexId* data() { return cap_ == kInline ? inline_ : heap_; }
    const VertexId* data() const { return cap_ == kInline ? inline_ : heap_; }

    void grow(std::uint32_t cap) {
        auto* fresh = new VertexId[cap];
        std::copy(begin(), end(), fresh);
        release();
        heap_ = fresh;
        cap_ = cap;
    }
    void assign(const VertexId* first, const VertexId* last) {
        const auto n = static_cast<std::uint32_t>(last - first);
        if (n > cap_) grow(n);
        std::copy(first, last, data());
        size_ = n;
    }
    void release() {
        if (cap_ != kInline) delete[] heap_;
        cap_ = kInline;
    }
    void steal(NeighborList& o) {
        size_ = o.size_;
        cap_ = o.cap_;
        if (cap_ == kInline) std::copy(o.inline_, o.inline_ + size_, inline_);
        else heap_ = o.heap_;
        o.size_ = 0;
        o.cap_ = kInline;
    }

    std::uint32_t size_ = 0;
    std::uint32_t cap_ = kInline;
    union {
        VertexId inline_[kInline];
        VertexId* heap_;
    };
};

}  // namespace detail

// Simple undirected graph over stable non-negative ids.
//
// Ids are never reused: removed vertices leave a dead slot behind and fresh vertices are
// numbered from next_id(). Adjacency lists are unordered; anything that needs a canonical
// order sorts explicitly.
class Graph {
public:
    Graph() = default;

    // Vertices 0..n-1 (or 1..n with one_based), no edges.
    static Graph with_vertices(VertexId n, bool one_based = false);
    // Builds from an explicit id list and edge list, rejecting loops and duplicates.
    static Graph from_edges(std::span<const VertexId> ids, std::span<const Edge> edges);
    static Graph from_edges(VertexId n, std::span<const Edge> edges);

    bool contains(VertexId v) const {
        return v >= 0 && static_cast<std::size_t>(v) < alive_.size() && alive_[v];
    }
    std::size_t num_vertices() const { return n_; }
    std::size_t num_edges() const { return m_; }
    VertexId next_id() const { return static_cast<VertexId>(alive_.size()); }

    std::size_t degree(VertexId v) const { return adj_[checked(v)].size(); }
    std::span<const VertexId> neighbors(VertexId v) const { return adj_[checked(v)]; }
    bool has_edge(VertexId u, VertexId v) const;

    // Ascending list of live ids.
    std::vector<VertexId> vertices() const;
    // Every edge once as (min, max), sorted.
    std::vector<Edge> edges() const;

    VertexId add_vertex();
    void add_vertex(VertexId id);
    void add_edge(VertexId u, VertexId v);
    void remove_edge(VertexId u, VertexId v);
    void remove_vertex(VertexId v);
    // Removes a batch in time linear in the touched adjacency.
    void remove_vertices(std::span<const VertexId> vs);
    // In u's list, the neighbor `from` becomes `to`. The caller keeps `to`'s list consistent.
    void retarget(VertexId u, VertexId from, VertexId to);
    // Drops `to_drop` from v's list (caller updates the other side).
    void erase_from_list(VertexId v, VertexId to_drop);
    void push_neighbor(VertexId v, VertexId u) { adj_[checked(v)].push_back(u); }
    void adjust_edge_count(std::ptrdiff_t delta) { m_ = static_cast<std::size_t>(static_cast<std::ptrdiff_t>(m_) + delta); }

    // Structural equality: same live ids, same neighbor sets, same id counter.
    friend bool operator==(const Graph& a, const Graph& b);

    // Throws InternalError when adjacency is asymmetric, reflexive or has duplicates.
    void check_invariants() const;

private:
    VertexId checked(VertexId v) const {
        if (!contains(v)) throw InputError("unknown vertex id " + std::to_string(v));
        return v;
    }

    std::vector<detail::NeighborList> adj_;
    std::vector<std::uint8_t> alive_;
    std::size_t n_ = 0;
    std::size_t m_ = 0;
};

// Membership bitmap keyed by vertex id; grows on insert.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::span<const VertexId> ids) {
        for (VertexId v : ids) insert(v);
    }

    bool contains(VertexId v) const {
        return v >= 0 && static_cast<std::size_t>(v) < bits_.size() && bits_[v];
    }
    void insert(VertexId v) {
        if (v < 0) throw InputError("negative vertex id");
        if (static_cast<std::size_t>(v) >= bits_.size()) bits_.resize(static_cast<std::size_t>(v) + 1, 0);
        if (!bits_[v]) {
            bits_[v] = 1;
            ++count_;
        }
    }
    void erase(VertexId v) {
        if (contains(v)) {
            bits_[v] = 0;
            --count_;
        }
    }
    std::size_t size() const { return count_; }
    bool empty() const { return count_ == 0; }
    std::vector<VertexId> to_vector() const;

    friend bool operator==(const VertexSet& a, const VertexSet& b) { return a.to_vector() == b.to_vector(); }

private:
    std::vector<std::uint8_t> bits_;
    std::size_t count_ = 0;
};

}  // namespace pw1
