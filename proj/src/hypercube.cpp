#include "mpbn/hypercube.hpp"

#include "mpbn/error.hpp"

#include <boost/container/small_vector.hpp>

#include <deque>

namespace mpbn {

using LocalCells = boost::container::small_vector<std::uint8_t, 32>;

// ── Hypercube ───────────────────────────────────────────────────────────────

Hypercube::Hypercube(const Configuration& x) : cells_(x.size()) {
    for (std::size_t i = 0; i < x.size(); ++i) cells_[i] = cell_of(x[i]);
}

Hypercube Hypercube::from_string(std::string_view text) {
    std::vector<Cell> cells;
    cells.reserve(text.size());
    for (char c : text) {
        switch (c) {
        case '0': cells.push_back(Cell::Zero); break;
        case '1': cells.push_back(Cell::One); break;
        case '*': cells.push_back(Cell::Free); break;
        default:
            throw Error("invalid hypercube character '" + std::string(1, c) + "' in \"" + std::string(text) + "\"");
        }
    }
    return Hypercube(std::move(cells));
}

std::size_t Hypercube::free_count() const noexcept {
    std::size_t count = 0;
    for (auto c : cells_) count += c == Cell::Free;
    return count;
}

bool Hypercube::contains(const Configuration& x) const noexcept {
    if (x.size() != cells_.size()) return false;
    for (std::size_t i = 0; i < cells_.size(); ++i) {
        if (cells_[i] != Cell::Free && cells_[i] != cell_of(x[i])) return false;
    }
    return true;
}

bool Hypercube::is_subcube_of(const Hypercube& other) const noexcept {
    for (std::size_t i = 0; i < cells_.size(); ++i) {
        if (other.cells_[i] != Cell::Free && cells_[i] != other.cells_[i]) return false;
    }
    return true;
}

bool Hypercube::disjoint_from(const Hypercube& other) const noexcept {
    for (std::size_t i = 0; i < cells_.size(); ++i) {
        if (cells_[i] != Cell::Free && other.cells_[i] != Cell::Free && cells_[i] != other.cells_[i]) {
            return true;
        }
    }
    return false;
}

Configuration Hypercube::lowest() const {
    Configuration x(cells_.size());
    for (std::size_t i = 0; i < cells_.size(); ++i) x.set(i, cells_[i] == Cell::One);
    return x;
}

std::vector<Configuration> Hypercube::configurations() const {
    std::vector<std::size_t> free;
    for (std::size_t i = 0; i < cells_.size(); ++i) {
        if (cells_[i] == Cell::Free) free.push_back(i);
    }
    if (free.size() >= 32) throw CapExceeded("hypercube too large to enumerate");
    std::vector<Configuration> out;
    out.reserve(std::size_t{1} << free.size());
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free.size()); ++mask) {
        Configuration x = lowest();
        // Component order: the first free cell is the most significant.
        for (std::size_t k = 0; k < free.size(); ++k) {
            x.set(free[k], (mask >> (free.size() - 1 - k)) & 1U);
        }
        out.push_back(std::move(x));
    }
    return out;
}

std::string Hypercube::to_string() const {
    std::string s;
    s.reserve(cells_.size());
    for (auto c : cells_) s += c == Cell::Zero ? '0' : (c == Cell::One ? '1' : '*');
    return s;
}

// ── ComponentSet ────────────────────────────────────────────────────────────

ComponentSet::ComponentSet(std::size_t n, std::initializer_list<std::size_t> members) : bits_(n, false) {
    for (auto i : members) bits_.at(i) = true;
}

std::size_t ComponentSet::count() const noexcept {
    std::size_t c = 0;
    for (bool b : bits_) c += b;
    return c;
}

ComponentSet ComponentSet::complement() const {
    ComponentSet out = *this;
    out.bits_.flip();
    return out;
}

std::vector<std::size_t> ComponentSet::members() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        if (bits_[i]) out.push_back(i);
    }
    return out;
}

// ── Value queries ───────────────────────────────────────────────────────────

namespace {

LocalCells gather(const LocalFunction& lf, std::span<const Cell> cells) {
    LocalCells local(lf.support.size());
    for (std::size_t l = 0; l < lf.support.size(); ++l) {
        local[l] = static_cast<std::uint8_t>(cells[lf.support[l]]);
    }
    return local;
}

Tri eval_local(const LocalFunction& lf, const LocalCells& local) {
    return lf.expr.eval3([&](std::uint32_t l) { return local[l]; });
}

bool corner(const LocalFunction& lf, LocalCells& local, bool target) {
    for (std::size_t l = 0; l < local.size(); ++l) {
        if (local[l] != static_cast<std::uint8_t>(Cell::Free)) continue;
        // The top corner under the component's ordering maximizes f_i.
        const bool top = lf.polarity[l] == Polarity::Positive;
        local[l] = (top == target) ? 1 : 0;
    }
    return eval_local(lf, local) == (target ? Tri::True : Tri::False);
}

bool search(const LocalFunction& lf, LocalCells& local, bool target) {
    const Tri t = eval_local(lf, local);
    if (t != Tri::Unknown) return t == (target ? Tri::True : Tri::False);
    // Branch on the free variable with the most occurrences.
    std::size_t best = local.size();
    std::uint32_t best_count = 0;
    for (std::size_t l = 0; l < local.size(); ++l) {
        if (local[l] != static_cast<std::uint8_t>(Cell::Free)) continue;
        const std::uint32_t count = lf.positive[l] + lf.negative[l];
        if (best == local.size() || count > best_count) {
            best = l;
            best_count = count;
        }
    }
    // Try first the value that makes the majority of occurrences push towards target.
    const bool favored = (lf.positive[best] >= lf.negative[best]) == target;
    for (const bool v : {favored, !favored}) {
        local[best] = v ? 1 : 0;
        if (search(lf, local, target)) {
            local[best] = static_cast<std::uint8_t>(Cell::Free);
            return true;
        }
    }
    local[best] = static_cast<std::uint8_t>(Cell::Free);
    return false;
}

}  // namespace

namespace detail {

bool exists_value_corner(const BooleanNetwork& net, std::size_t i, std::span<const Cell> cells, bool target) {
    const auto& lf = net.compiled(i);
    auto local = gather(lf, cells);
    return corner(lf, local, target);
}

bool exists_value_search(const BooleanNetwork& net, std::size_t i, std::span<const Cell> cells, bool target) {
    const auto& lf = net.compiled(i);
    auto local = gather(lf, cells);
    return search(lf, local, target);
}

}  // namespace detail

bool exists_value(const BooleanNetwork& net, std::size_t i, std::span<const Cell> cells, bool target) {
    const auto& lf = net.compiled(i);
    auto local = gather(lf, cells);
    const Tri t = eval_local(lf, local);
    if (t != Tri::Unknown) return t == (target ? Tri::True : Tri::False);
    return lf.monotone ? corner(lf, local, target) : search(lf, local, target);
}

bool exists_value(const BooleanNetwork& net, std::size_t i, const Hypercube& h, bool target) {
    return exists_value(net, i, h.cells(), target);
}

Tri determined_value(const BooleanNetwork& net, std::size_t i, std::span<const Cell> cells) {
    const auto& lf = net.compiled(i);
    auto local = gather(lf, cells);
    const Tri t = eval_local(lf, local);
    if (t != Tri::Unknown) return t;
    if (lf.monotone) {
        auto scratch = local;
        if (!corner(lf, scratch, true)) return Tri::False;
        scratch = local;
        if (!corner(lf, scratch, false)) return Tri::True;
        return Tri::Unknown;
    }
    if (!search(lf, local, true)) return Tri::False;
    if (!search(lf, local, false)) return Tri::True;
    return Tri::Unknown;
}

// ── Percolation ─────────────────────────────────────────────────────────────

Hypercube percolate(const BooleanNetwork& net, const Hypercube& start, const ComponentSet& K,
                    std::vector<std::size_t>* opening_order) {
    const std::size_t n = net.size();
    if (start.size() != n || K.universe() != n) throw Error("dimension mismatch in percolate");
    std::vector<Cell> cells(start.cells().begin(), start.cells().end());
    std::vector<bool> queued(n, false);
    std::deque<std::size_t> work;
    for (std::size_t i = 0; i < n; ++i) {
        if (K.contains(i) && cells[i] != Cell::Free) {
            work.push_back(i);
            queued[i] = true;
        }
    }
    while (!work.empty()) {
        const std::size_t i = work.front();
        work.pop_front();
        queued[i] = false;
        if (cells[i] == Cell::Free) continue;
        if (!exists_value(net, i, cells, cells[i] == Cell::Zero)) continue;
        cells[i] = Cell::Free;
        if (opening_order) opening_order->push_back(i);
        // Only readers of i can gain a new value.
        for (auto r : net.readers(i)) {
            if (K.contains(r) && cells[r] != Cell::Free && !queued[r]) {
                work.push_back(r);
                queued[r] = true;
            }
        }
    }
    return Hypercube(std::move(cells));
}

Hypercube percolate(const BooleanNetwork& net, const Configuration& x, const ComponentSet& K,
                    std::vector<std::size_t>* opening_order) {
    return percolate(net, Hypercube(x), K, opening_order);
}

bool is_k_closed(const BooleanNetwork& net, const Hypercube& h, const ComponentSet& K) {
    for (std::size_t i = 0; i < h.size(); ++i) {
        if (!K.contains(i) || h.is_free(i)) continue;
        if (exists_value(net, i, h, h[i] == Cell::Zero)) return false;
    }
    return true;
}

}  // namespace mpbn
