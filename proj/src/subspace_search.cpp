#include "subspace_search.hpp"

#include "mpbn/error.hpp"

namespace mpbn::detail {

SubspaceSearch::SubspaceSearch(const BooleanNetwork& net, const Hypercube& root, bool allow_skip,
                               Deadline deadline)
    : net_(net), root_(root), allow_skip_(allow_skip), deadline_(deadline) {
    const std::size_t n = net.size();
    if (root.size() != n) throw Error("dimension mismatch in subspace search");
    cells_.assign(root.cells().begin(), root.cells().end());
    status_.resize(n);
    undecided_support_.assign(n, 0);
    queued_.assign(n, false);
    block_index_[0].resize(n);
    block_index_[1].resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        status_[i] = root.is_free(i) ? Status::Undecided : Status::RootFixed;
        undecided_ += root.is_free(i);
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (auto j : net.support(i)) undecided_support_[i] += root.is_free(j);
    }
}

void SubspaceSearch::block(const Hypercube& blocked) {
    const auto id = static_cast<std::uint32_t>(block_needed_.size());
    std::uint32_t needed = 0;
    std::uint32_t agree = 0;
    for (std::size_t j = 0; j < blocked.size(); ++j) {
        if (blocked.is_free(j)) continue;
        ++needed;
        const auto v = static_cast<std::size_t>(blocked[j]);
        if (cells_[j] == blocked[j]) ++agree;
        if (status_[j] != Status::RootFixed) block_index_[v][j].push_back(id);
    }
    block_needed_.push_back(needed);
    block_agree_.push_back(agree);
    if (agree == needed) ++blocks_full_;
}

void SubspaceSearch::enqueue(std::size_t i) {
    if (queued_[i] || status_[i] == Status::RootFixed) return;
    queued_[i] = true;
    queue_.push_back(static_cast<std::uint32_t>(i));
}

void SubspaceSearch::clear_queue() {
    for (auto i : queue_) queued_[i] = false;
    queue_.clear();
}

bool SubspaceSearch::decide(std::size_t j, Choice choice) {
    if (status_[j] != Status::Undecided) return false;
    trail_.push_back(static_cast<std::uint32_t>(j));
    --undecided_;
    for (auto r : net_.readers(j)) --undecided_support_[r];
    if (choice == Choice::Skip) {
        status_[j] = Status::Skipped;
        for (auto r : net_.readers(j)) {
            if (status_[r] == Status::Fixed) enqueue(r);
        }
        return true;
    }
    status_[j] = Status::Fixed;
    cells_[j] = choice == Choice::One ? Cell::One : Cell::Zero;
    for (auto b : block_index_[static_cast<std::size_t>(choice)][j]) {
        if (++block_agree_[b] == block_needed_[b]) ++blocks_full_;
    }
    enqueue(j);
    for (auto r : net_.readers(j)) enqueue(r);
    return true;
}

bool SubspaceSearch::check(std::size_t i) {
    switch (status_[i]) {
    case Status::RootFixed:
        return true;
    case Status::Undecided: {
        const Tri d = determined_value(net_, i, cells_);
        if (d != Tri::Unknown) decide(i, d == Tri::True ? Choice::One : Choice::Zero);
        return true;
    }
    case Status::Fixed: {
        const Tri d = determined_value(net_, i, cells_);
        if (d == Tri::Unknown) return undecided_support_[i] > 0;
        return static_cast<std::uint8_t>(d) == static_cast<std::uint8_t>(cells_[i]);
    }
    case Status::Skipped:
        return determined_value(net_, i, cells_) == Tri::Unknown;
    }
    return true;
}

bool SubspaceSearch::propagate() {
    // Stack order: the result of propagation does not depend on it.
    while (!queue_.empty()) {
        const std::size_t i = queue_.back();
        queue_.pop_back();
        queued_[i] = false;
        if (!check(i)) {
            clear_queue();
            return false;
        }
    }
    return true;
}

void SubspaceSearch::undo_to(std::size_t mark) {
    while (trail_.size() > mark) {
        const std::size_t j = trail_.back();
        trail_.pop_back();
        ++undecided_;
        for (auto r : net_.readers(j)) ++undecided_support_[r];
        if (status_[j] == Status::Fixed) {
            for (auto b : block_index_[static_cast<std::size_t>(cells_[j])][j]) {
                if (block_agree_[b]-- == block_needed_[b]) --blocks_full_;
            }
        }
        status_[j] = Status::Undecided;
        cells_[j] = Cell::Free;
    }
}

std::size_t SubspaceSearch::choose() const {
    for (std::size_t j = 0; j < status_.size(); ++j) {
        if (status_[j] == Status::Undecided) return j;
    }
    return status_.size();
}

bool SubspaceSearch::advance(std::vector<Frame>& frames) {
    const std::uint8_t alternatives = allow_skip_ ? 3 : 2;
    while (!frames.empty()) {
        Frame& f = frames.back();
        undo_to(f.mark);
        while (f.next < alternatives) {
            const auto choice = static_cast<Choice>(f.next++);
            ++nodes_;
            if (decide(f.component, choice) && propagate()) return true;
            undo_to(f.mark);
        }
        frames.pop_back();
    }
    return false;
}

bool SubspaceSearch::expired() {
    if (!deadline_) return false;
    if ((++clock_tick_ & 255U) != 0) return timed_out_;
    timed_out_ = std::chrono::steady_clock::now() >= *deadline_;
    return timed_out_;
}

std::optional<std::size_t> SubspaceSearch::root_branch() {
    for (std::size_t i = 0; i < status_.size(); ++i) {
        if (status_[i] == Status::Undecided) enqueue(i);
    }
    if (!propagate() || undecided_ == 0) return std::nullopt;
    return choose();
}

bool SubspaceSearch::run(const std::function<Visit(const Hypercube&)>& on_leaf) {
    for (std::size_t i = 0; i < status_.size(); ++i) {
        if (status_[i] == Status::Undecided) enqueue(i);
    }
    if (!propagate()) return true;
    for (const auto& [component, choice] : presets_) {
        if (choice == Choice::Skip && !allow_skip_) return true;
        if (!decide(component, choice) || !propagate()) return true;
    }
    const std::size_t base = trail_.size();
    std::vector<Frame> frames;
    while (true) {
        if (expired()) return false;
        if (cancel_ && cancel_->load(std::memory_order_relaxed)) return true;
        if (blocks_full_ == 0) {
            if (undecided_ == 0) {
                if (on_leaf(Hypercube(cells_)) == Visit::Stop) return true;
            } else {
                frames.push_back({static_cast<std::uint32_t>(choose()), 0, trail_.size()});
            }
        }
        if (!advance(frames)) break;
    }
    undo_to(base);
    return true;
}

}  // namespace mpbn::detail
