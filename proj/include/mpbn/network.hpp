#ifndef MPBN_NETWORK_HPP
#define MPBN_NETWORK_HPP

#include "mpbn/expression.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mpbn {

// ── Configuration ───────────────────────────────────────────────────────────
// A binary state vector. Text form lists component 1 first ("010").

class Configuration {
public:
    Configuration() = default;
    explicit Configuration(std::size_t n, bool fill = false) : bits_(n, fill ? 1 : 0) {}
    explicit Configuration(std::vector<std::uint8_t> bits);

    /// Parses a string over {0,1}; throws `Error` on any other character.
    static Configuration from_string(std::string_view text);

    std::size_t size() const noexcept { return bits_.size(); }
    bool operator[](std::size_t i) const noexcept { return bits_[i] != 0; }
    void set(std::size_t i, bool v) noexcept { bits_[i] = v ? 1 : 0; }
    void flip(std::size_t i) noexcept { bits_[i] ^= 1; }

    /// Raw 0/1 values, usable wherever cell values are expected.
    std::span<const std::uint8_t> bits() const noexcept { return bits_; }

    std::string to_string() const;

    /// Concatenation `this · suffix`.
    Configuration concat(const Configuration& suffix) const;
    Configuration prefix(std::size_t length) const;

    /// Index with component 1 as the most significant bit (n <= 63).
    std::uint64_t to_index() const;
    static Configuration from_index(std::uint64_t index, std::size_t n);

    friend bool operator==(const Configuration&, const Configuration&) = default;
    friend auto operator<=>(const Configuration&, const Configuration&) = default;

private:
    std::vector<std::uint8_t> bits_;
};

struct ConfigurationHash {
    std::size_t operator()(const Configuration& x) const noexcept;
};

// ── Polarities ──────────────────────────────────────────────────────────────

enum class Polarity : std::uint8_t { Unused, Positive, Negative, Dual };

/// Per-input ordering of a locally monotonic component: `LessEq` reads the
/// input as an activator, `GreaterEq` as an inhibitor.
enum class Order : std::uint8_t { LessEq, GreaterEq };

/// A local function compiled for evaluation over its own support:
/// variable l of `expr` is network component `support[l]`.
struct LocalFunction {
    Expr expr;
    std::vector<std::uint32_t> support;
    std::vector<Polarity> polarity;         // per support position
    std::vector<std::uint32_t> positive;    // unnegated occurrence counts (NNF)
    std::vector<std::uint32_t> negative;    // negated occurrence counts (NNF)
    bool monotone = true;                   // no `Dual` entry
};

// ── BooleanNetwork ──────────────────────────────────────────────────────────

/// Immutable Boolean network f: B^n -> B^n. Copies share the same data.
class BooleanNetwork {
public:
    /// Throws `Error` if names are empty, duplicated, or `locals` reference
    /// components outside [0, n).
    BooleanNetwork(std::vector<std::string> names, std::vector<Expr> locals);

    std::size_t size() const noexcept { return data_->names.size(); }
    const std::string& name(std::size_t i) const { return data_->names[i]; }
    std::span<const std::string> names() const noexcept { return data_->names; }
    const Expr& local(std::size_t i) const { return data_->locals[i]; }
    std::span<const Expr> locals() const noexcept { return data_->locals; }
    std::optional<std::size_t> index_of(std::string_view name) const;

    const LocalFunction& compiled(std::size_t i) const { return data_->compiled[i]; }
    std::span<const std::uint32_t> support(std::size_t i) const { return data_->compiled[i].support; }
    /// Components whose local function reads component j.
    std::span<const std::uint32_t> readers(std::size_t j) const { return data_->readers[j]; }

private:
    struct Data {
        std::vector<std::string> names;
        std::vector<Expr> locals;
        std::vector<LocalFunction> compiled;
        std::vector<std::vector<std::uint32_t>> readers;
    };
    std::shared_ptr<const Data> data_;
};

/// f_i(x).
bool evaluate(const BooleanNetwork& net, std::size_t i, const Configuration& x);

/// f(x), componentwise.
Configuration apply(const BooleanNetwork& net, const Configuration& x);

// ── PolarityProfile ─────────────────────────────────────────────────────────

/// Syntactic (negation normal form) polarity of every input of every local
/// function. Detection is sound but conservative: a syntactically dual
/// input may still be semantically monotone.
class PolarityProfile {
public:
    explicit PolarityProfile(const BooleanNetwork& net) : net_(net) {}

    std::size_t size() const noexcept { return net_.size(); }
    Polarity polarity(std::size_t i, std::size_t j) const;
    bool locally_monotonic(std::size_t i) const { return net_.compiled(i).monotone; }
    bool locally_monotonic() const;
    /// The ordering for component i, or nothing when some input is dual.
    /// Unused inputs get `LessEq`.
    std::optional<std::vector<Order>> ordering(std::size_t i) const;

private:
    BooleanNetwork net_;
};

PolarityProfile polarity_analysis(const BooleanNetwork& net);

}  // namespace mpbn

template <>
struct std::hash<mpbn::Configuration> : mpbn::ConfigurationHash {};

#endif  // MPBN_NETWORK_HPP
