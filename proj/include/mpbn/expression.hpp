#ifndef MPBN_EXPRESSION_HPP
#define MPBN_EXPRESSION_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace mpbn {

/// Three-valued truth value. The numeric encoding matches `Cell` so that a
/// hypercube cell can be read directly as a Kleene value.
enum class Tri : std::uint8_t { False = 0, True = 1, Unknown = 2 };

/// Immutable Boolean expression tree over component indices.
///
/// Conjunctions and disjunctions are k-ary and flattened on construction;
/// double negations and negated constants are folded away.
class Expr {
public:
    enum class Kind : std::uint8_t { Constant, Variable, Not, And, Or };

    Expr() = default;  // constant false

    static Expr constant(bool value);
    static Expr variable(std::uint32_t index);
    static Expr negation(Expr operand);
    /// Empty conjunction is `true`; a single operand is returned unchanged.
    static Expr conjunction(std::vector<Expr> operands);
    /// Empty disjunction is `false`; a single operand is returned unchanged.
    static Expr disjunction(std::vector<Expr> operands);

    Kind kind() const noexcept { return kind_; }
    bool value() const noexcept { return value_; }
    std::uint32_t index() const noexcept { return var_; }
    const std::vector<Expr>& operands() const noexcept { return operands_; }

    bool is_constant() const noexcept { return kind_ == Kind::Constant; }

    /// Kleene evaluation; `cell(j)` returns 0, 1 or 2 (unknown) for variable j.
    template <class Lookup>
    Tri eval3(const Lookup& cell) const;

    /// Two-valued evaluation; `cell(j)` must return 0 or 1.
    template <class Lookup>
    bool eval(const Lookup& cell) const {
        return eval3(cell) == Tri::True;
    }

    /// Sorted, duplicate-free list of referenced variables.
    std::vector<std::uint32_t> variables() const;

    /// Highest referenced index + 1, or 0 if none.
    std::uint32_t arity_bound() const;

    /// Replace every variable j by `mapping[j]`.
    Expr remap(std::span<const std::uint32_t> mapping) const;

    /// Replace every variable j by the expression `substitution[j]`.
    Expr substitute(std::span<const Expr> substitution) const;

    /// Renders in `.bnet` syntax, using `names[j]` for variable j.
    std::string to_string(std::span<const std::string> names) const;

    std::size_t node_count() const;

    friend bool operator==(const Expr&, const Expr&) = default;

private:
    Kind kind_ = Kind::Constant;
    bool value_ = false;
    std::uint32_t var_ = 0;
    std::vector<Expr> operands_;
};

template <class Lookup>
Tri Expr::eval3(const Lookup& cell) const {
    switch (kind_) {
    case Kind::Constant:
        return value_ ? Tri::True : Tri::False;
    case Kind::Variable:
        return static_cast<Tri>(cell(var_));
    case Kind::Not: {
        const Tri t = operands_.front().eval3(cell);
        if (t == Tri::Unknown) return Tri::Unknown;
        return t == Tri::True ? Tri::False : Tri::True;
    }
    case Kind::And: {
        bool unknown = false;
        for (const auto& op : operands_) {
            const Tri t = op.eval3(cell);
            if (t == Tri::False) return Tri::False;
            unknown |= (t == Tri::Unknown);
        }
        return unknown ? Tri::Unknown : Tri::True;
    }
    case Kind::Or: {
        bool unknown = false;
        for (const auto& op : operands_) {
            const Tri t = op.eval3(cell);
            if (t == Tri::True) return Tri::True;
            unknown |= (t == Tri::Unknown);
        }
        return unknown ? Tri::Unknown : Tri::False;
    }
    }
    return Tri::Unknown;
}

}  // namespace mpbn

#endif  // MPBN_EXPRESSION_HPP
