#ifndef MPBN_HYPERCUBE_HPP
#define MPBN_HYPERCUBE_HPP

#include "mpbn/network.hpp"

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mpbn {

enum class Cell : std::uint8_t { Zero = 0, One = 1, Free = 2 };

inline Cell cell_of(bool v) noexcept { return v ? Cell::One : Cell::Zero; }

// ── Hypercube ───────────────────────────────────────────────────────────────
// A vector over {0, 1, *}. c(h) is the set of configurations agreeing with
// every fixed cell; it is never empty.

class Hypercube {
public:
    Hypercube() = default;
    explicit Hypercube(std::size_t n, Cell fill = Cell::Free) : cells_(n, fill) {}
    explicit Hypercube(std::vector<Cell> cells) : cells_(std::move(cells)) {}
    explicit Hypercube(const Configuration& x);

    /// Parses a string over {0, 1, *}.
    static Hypercube from_string(std::string_view text);

    std::size_t size() const noexcept { return cells_.size(); }
    Cell operator[](std::size_t i) const noexcept { return cells_[i]; }
    void set(std::size_t i, Cell c) noexcept { cells_[i] = c; }
    bool is_free(std::size_t i) const noexcept { return cells_[i] == Cell::Free; }
    std::span<const Cell> cells() const noexcept { return cells_; }

    std::size_t free_count() const noexcept;
    bool contains(const Configuration& x) const noexcept;
    /// h <= other: every cell fixed in `other` is fixed to the same value here.
    bool is_subcube_of(const Hypercube& other) const noexcept;
    /// c(h) ∩ c(other) is empty.
    bool disjoint_from(const Hypercube& other) const noexcept;
    /// The configuration with every free cell set to 0.
    Configuration lowest() const;
    /// Enumerates c(h); intended for small free counts.
    std::vector<Configuration> configurations() const;

    std::string to_string() const;

    friend bool operator==(const Hypercube&, const Hypercube&) = default;
    friend auto operator<=>(const Hypercube&, const Hypercube&) = default;

private:
    std::vector<Cell> cells_;
};

// ── ComponentSet ────────────────────────────────────────────────────────────

class ComponentSet {
public:
    ComponentSet() = default;
    explicit ComponentSet(std::size_t n, bool all = false) : bits_(n, all) {}
    ComponentSet(std::size_t n, std::initializer_list<std::size_t> members);

    static ComponentSet all(std::size_t n) { return ComponentSet(n, true); }
    static ComponentSet none(std::size_t n) { return ComponentSet(n, false); }

    std::size_t universe() const noexcept { return bits_.size(); }
    bool contains(std::size_t i) const noexcept { return bits_[i]; }
    void insert(std::size_t i) { bits_[i] = true; }
    void erase(std::size_t i) { bits_[i] = false; }
    std::size_t count() const noexcept;
    bool empty() const noexcept { return count() == 0; }
    ComponentSet complement() const;
    std::vector<std::size_t> members() const;

    friend bool operator==(const ComponentSet&, const ComponentSet&) = default;

private:
    std::vector<bool> bits_;
};

// ── Value queries ───────────────────────────────────────────────────────────

/// True iff some z in c(h) has f_i(z) = target. Locally monotonic components
/// are answered by evaluating one extremal corner; others by a complete
/// backtracking search over the free cells of h in the support of f_i.
bool exists_value(const BooleanNetwork& net, std::size_t i, const Hypercube& h, bool target);
bool exists_value(const BooleanNetwork& net, std::size_t i, std::span<const Cell> cells, bool target);

/// Both routes, exposed so they can be checked against each other.
namespace detail {
/// Requires `net.compiled(i).monotone`.
bool exists_value_corner(const BooleanNetwork& net, std::size_t i, std::span<const Cell> cells, bool target);
bool exists_value_search(const BooleanNetwork& net, std::size_t i, std::span<const Cell> cells, bool target);
}  // namespace detail

/// Value of f_i when it is constant over c(h): `Tri::False`/`Tri::True`, or
/// `Tri::Unknown` when f_i takes both values.
Tri determined_value(const BooleanNetwork& net, std::size_t i, std::span<const Cell> cells);

// ── Percolation ─────────────────────────────────────────────────────────────

/// Smallest hypercube containing `start` that is K-closed by f. Cells fixed
/// in `start` and in K are freed until no f_i (i in K) can leave its value.
/// When `opening_order` is given, freed components are appended in the order
/// they were freed; each freeing is a valid most-permissive opening from the
/// hypercube reached so far.
Hypercube percolate(const BooleanNetwork& net, const Hypercube& start, const ComponentSet& K,
                    std::vector<std::size_t>* opening_order = nullptr);
Hypercube percolate(const BooleanNetwork& net, const Configuration& x, const ComponentSet& K,
                    std::vector<std::size_t>* opening_order = nullptr);

/// For every i in K fixed in h, f_i never differs from h_i on c(h).
bool is_k_closed(const BooleanNetwork& net, const Hypercube& h, const ComponentSet& K);

}  // namespace mpbn

#endif  // MPBN_HYPERCUBE_HPP
