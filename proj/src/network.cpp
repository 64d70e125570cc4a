#include "mpbn/network.hpp"

#include "mpbn/error.hpp"

#include <algorithm>
#include <unordered_set>

namespace mpbn {

// ── Configuration ───────────────────────────────────────────────────────────

Configuration::Configuration(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    for (auto& b : bits_) b = b ? 1 : 0;
}

Configuration Configuration::from_string(std::string_view text) {
    std::vector<std::uint8_t> bits;
    bits.reserve(text.size());
    for (char c : text) {
        if (c != '0' && c != '1') {
            throw Error("invalid configuration character '" + std::string(1, c) + "' in \"" +
                        std::string(text) + "\"");
        }
        bits.push_back(c == '1' ? 1 : 0);
    }
    return Configuration(std::move(bits));
}

std::string Configuration::to_string() const {
    std::string s;
    s.reserve(bits_.size());
    for (auto b : bits_) s += b ? '1' : '0';
    return s;
}

Configuration Configuration::concat(const Configuration& suffix) const {
    std::vector<std::uint8_t> bits = bits_;
    bits.insert(bits.end(), suffix.bits_.begin(), suffix.bits_.end());
    return Configuration(std::move(bits));
}

Configuration Configuration::prefix(std::size_t length) const {
    return Configuration(std::vector<std::uint8_t>(bits_.begin(), bits_.begin() + length));
}

std::uint64_t Configuration::to_index() const {
    std::uint64_t index = 0;
    for (auto b : bits_) index = (index << 1) | b;
    return index;
}

Configuration Configuration::from_index(std::uint64_t index, std::size_t n) {
    std::vector<std::uint8_t> bits(n);
    for (std::size_t i = 0; i < n; ++i) bits[n - 1 - i] = (index >> i) & 1U;
    return Configuration(std::move(bits));
}

std::size_t ConfigurationHash::operator()(const Configuration& x) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto b : x.bits()) h = (h ^ b) * 1099511628211ULL;
    return h;
}

// ── Compilation ─────────────────────────────────────────────────────────────

namespace {

void count_polarities(const Expr& e, bool negated, std::vector<std::uint32_t>& pos,
                      std::vector<std::uint32_t>& neg) {
    switch (e.kind()) {
    case Expr::Kind::Constant:
        return;
    case Expr::Kind::Variable:
        ++(negated ? neg : pos)[e.index()];
        return;
    case Expr::Kind::Not:
        count_polarities(e.operands().front(), !negated, pos, neg);
        return;
    case Expr::Kind::And:
    case Expr::Kind::Or:
        for (const auto& op : e.operands()) count_polarities(op, negated, pos, neg);
        return;
    }
}

LocalFunction compile(const Expr& global, std::size_t n) {
    LocalFunction lf;
    lf.support = global.variables();
    std::vector<std::uint32_t> to_local(n, 0);
    for (std::uint32_t l = 0; l < lf.support.size(); ++l) to_local[lf.support[l]] = l;
    lf.expr = global.remap(to_local);
    const std::size_t k = lf.support.size();
    lf.positive.assign(k, 0);
    lf.negative.assign(k, 0);
    count_polarities(lf.expr, false, lf.positive, lf.negative);
    lf.polarity.resize(k);
    for (std::size_t l = 0; l < k; ++l) {
        const bool p = lf.positive[l] > 0;
        const bool q = lf.negative[l] > 0;
        lf.polarity[l] = p && q ? Polarity::Dual : (p ? Polarity::Positive : Polarity::Negative);
        if (p && q) lf.monotone = false;
    }
    return lf;
}

}  // namespace

BooleanNetwork::BooleanNetwork(std::vector<std::string> names, std::vector<Expr> locals) {
    if (names.empty()) throw Error("a Boolean network needs at least one component");
    if (names.size() != locals.size()) {
        throw Error("expected one local function per component (" + std::to_string(names.size()) +
                    " names, " + std::to_string(locals.size()) + " functions)");
    }
    std::unordered_set<std::string> seen;
    for (const auto& name : names) {
        if (!seen.insert(name).second) throw Error("duplicate component name '" + name + "'");
    }
    const std::size_t n = names.size();
    auto data = std::make_shared<Data>();
    data->compiled.reserve(n);
    data->readers.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (locals[i].arity_bound() > n) {
            throw Error("local function of '" + names[i] + "' references a component outside the network");
        }
        data->compiled.push_back(compile(locals[i], n));
        for (auto j : data->compiled.back().support) {
            data->readers[j].push_back(static_cast<std::uint32_t>(i));
        }
    }
    data->names = std::move(names);
    data->locals = std::move(locals);
    data_ = std::move(data);
}

std::optional<std::size_t> BooleanNetwork::index_of(std::string_view name) const {
    const auto& names = data_->names;
    const auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) return std::nullopt;
    return static_cast<std::size_t>(it - names.begin());
}

bool evaluate(const BooleanNetwork& net, std::size_t i, const Configuration& x) {
    const auto bits = x.bits();
    return net.local(i).eval([&](std::uint32_t j) { return bits[j]; });
}

Configuration apply(const BooleanNetwork& net, const Configuration& x) {
    Configuration y(net.size());
    for (std::size_t i = 0; i < net.size(); ++i) y.set(i, evaluate(net, i, x));
    return y;
}

// ── PolarityProfile ─────────────────────────────────────────────────────────

Polarity PolarityProfile::polarity(std::size_t i, std::size_t j) const {
    const auto& lf = net_.compiled(i);
    const auto it = std::lower_bound(lf.support.begin(), lf.support.end(), j);
    if (it == lf.support.end() || *it != j) return Polarity::Unused;
    return lf.polarity[static_cast<std::size_t>(it - lf.support.begin())];
}

bool PolarityProfile::locally_monotonic() const {
    for (std::size_t i = 0; i < net_.size(); ++i) {
        if (!locally_monotonic(i)) return false;
    }
    return true;
}

std::optional<std::vector<Order>> PolarityProfile::ordering(std::size_t i) const {
    const auto& lf = net_.compiled(i);
    if (!lf.monotone) return std::nullopt;
    std::vector<Order> order(net_.size(), Order::LessEq);
    for (std::size_t l = 0; l < lf.support.size(); ++l) {
        if (lf.polarity[l] == Polarity::Negative) order[lf.support[l]] = Order::GreaterEq;
    }
    return order;
}

PolarityProfile polarity_analysis(const BooleanNetwork& net) { return PolarityProfile(net); }

}  // namespace mpbn
