// Depth-first search for closed hypercubes inside a closed root hypercube.
//
// Every free cell of the root is decided as fixed-to-0, fixed-to-1 or kept
// free ("skip"), in that order. Propagation after each decision:
//   - an undecided cell whose local function is constant on the current
//     hypercube is fixed to that constant;
//   - a fixed cell whose function is constant with the other value, or stays
//     non-constant once every undecided input has been decided, is a conflict;
//   - a skipped cell whose function becomes constant is a conflict.
// The last two rules are only sound for *minimal* closed hypercubes; any
// closed hypercube contains a minimal one, so searches for existence and for
// minimal trap spaces stay complete. Leaves (no undecided cell) are closed.
//
// With skipping disabled, leaves are exactly the fixed points in the root.

#ifndef MPBN_SRC_SUBSPACE_SEARCH_HPP
#define MPBN_SRC_SUBSPACE_SEARCH_HPP

#include "mpbn/hypercube.hpp"

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <atomic>
#include <vector>

namespace mpbn::detail {

enum class Visit { Continue, Stop };

using Deadline = std::optional<std::chrono::steady_clock::time_point>;

class SubspaceSearch {
public:
    enum class Choice : std::uint8_t { Zero = 0, One = 1, Skip = 2 };

    /// `root` must be closed by `net`.
    SubspaceSearch(const BooleanNetwork& net, const Hypercube& root, bool allow_skip, Deadline deadline = {});

    /// Forces a decision before the search starts (used to split work).
    void preset(std::size_t component, Choice choice) { presets_.emplace_back(component, choice); }

    /// Cuts every subtree whose hypercube lies inside `blocked` (a minimal
    /// trap space found earlier). May be called from within `run`'s visitor.
    void block(const Hypercube& blocked);

    /// Stops `run` (as if the visitor returned Stop) once `flag` is set.
    void cancel_when(const std::atomic<bool>* flag) { cancel_ = flag; }

    /// Visits closed leaves in depth-first order. Returns false if the
    /// deadline expired before the search space was exhausted.
    bool run(const std::function<Visit(const Hypercube&)>& on_leaf);

    /// First branching component at the root after propagation, if any.
    std::optional<std::size_t> root_branch();

    std::uint64_t nodes() const noexcept { return nodes_; }

private:
    enum class Status : std::uint8_t { Undecided, Fixed, Skipped, RootFixed };

    struct Frame {
        std::uint32_t component;
        std::uint8_t next;
        std::size_t mark;
    };

    bool decide(std::size_t j, Choice choice);
    bool propagate();
    bool check(std::size_t i);
    void enqueue(std::size_t i);
    void clear_queue();
    void undo_to(std::size_t mark);
    bool advance(std::vector<Frame>& frames);
    std::size_t choose() const;
    bool expired();

    const BooleanNetwork& net_;
    Hypercube root_;
    bool allow_skip_;
    Deadline deadline_;
    const std::atomic<bool>* cancel_ = nullptr;
    std::vector<std::pair<std::size_t, Choice>> presets_;

    std::vector<Cell> cells_;
    std::vector<Status> status_;
    std::vector<std::uint32_t> undecided_support_;
    std::vector<std::uint32_t> trail_;
    std::size_t undecided_ = 0;

    std::vector<std::uint32_t> queue_;
    std::vector<bool> queued_;

    // Blocking: for each blocked hypercube, how many of its fixed cells the
    // current node fixes identically; a node is pruned when one matches fully.
    std::vector<std::uint32_t> block_needed_;
    std::vector<std::uint32_t> block_agree_;
    std::vector<std::vector<std::uint32_t>> block_index_[2];
    std::size_t blocks_full_ = 0;

    std::uint64_t nodes_ = 0;
    std::uint32_t clock_tick_ = 0;
    bool timed_out_ = false;
};

}  // namespace mpbn::detail

#endif  // MPBN_SRC_SUBSPACE_SEARCH_HPP
