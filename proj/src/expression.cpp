#include "mpbn/expression.hpp"

#include <algorithm>
#include <utility>

namespace mpbn {

Expr Expr::constant(bool value) {
    Expr e;
    e.kind_ = Kind::Constant;
    e.value_ = value;
    return e;
}

Expr Expr::variable(std::uint32_t index) {
    Expr e;
    e.kind_ = Kind::Variable;
    e.var_ = index;
    return e;
}

Expr Expr::negation(Expr operand) {
    if (operand.kind_ == Kind::Constant) return constant(!operand.value_);
    if (operand.kind_ == Kind::Not) return std::move(operand.operands_.front());
    Expr e;
    e.kind_ = Kind::Not;
    e.operands_.push_back(std::move(operand));
    return e;
}

namespace {

// Flatten same-kind children and fold constants. `absorbing` is the constant
// that decides the whole junction (false for And, true for Or).
Expr make_junction(Expr::Kind kind, std::vector<Expr> operands, bool absorbing,
                   Expr (*rebuild)(std::vector<Expr>)) {
    std::vector<Expr> flat;
    flat.reserve(operands.size());
    for (auto& op : operands) {
        if (op.kind() == Expr::Kind::Constant) {
            if (op.value() == absorbing) return Expr::constant(absorbing);
            continue;
        }
        if (op.kind() == kind) {
            for (const auto& inner : op.operands()) flat.push_back(inner);
        } else {
            flat.push_back(std::move(op));
        }
    }
    if (flat.empty()) return Expr::constant(!absorbing);
    if (flat.size() == 1) return std::move(flat.front());
    return rebuild(std::move(flat));
}

}  // namespace

Expr Expr::conjunction(std::vector<Expr> operands) {
    return make_junction(Kind::And, std::move(operands), false, [](std::vector<Expr> ops) {
        Expr e;
        e.kind_ = Kind::And;
        e.operands_ = std::move(ops);
        return e;
    });
}

Expr Expr::disjunction(std::vector<Expr> operands) {
    return make_junction(Kind::Or, std::move(operands), true, [](std::vector<Expr> ops) {
        Expr e;
        e.kind_ = Kind::Or;
        e.operands_ = std::move(ops);
        return e;
    });
}

namespace {

void collect(const Expr& e, std::vector<std::uint32_t>& out) {
    if (e.kind() == Expr::Kind::Variable) {
        out.push_back(e.index());
        return;
    }
    for (const auto& op : e.operands()) collect(op, out);
}

}  // namespace

std::vector<std::uint32_t> Expr::variables() const {
    std::vector<std::uint32_t> out;
    collect(*this, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::uint32_t Expr::arity_bound() const {
    const auto vars = variables();
    return vars.empty() ? 0 : vars.back() + 1;
}

Expr Expr::remap(std::span<const std::uint32_t> mapping) const {
    switch (kind_) {
    case Kind::Constant:
        return *this;
    case Kind::Variable:
        return variable(mapping[var_]);
    case Kind::Not:
        return negation(operands_.front().remap(mapping));
    case Kind::And:
    case Kind::Or: {
        std::vector<Expr> ops;
        ops.reserve(operands_.size());
        for (const auto& op : operands_) ops.push_back(op.remap(mapping));
        return kind_ == Kind::And ? conjunction(std::move(ops)) : disjunction(std::move(ops));
    }
    }
    return *this;
}

Expr Expr::substitute(std::span<const Expr> substitution) const {
    switch (kind_) {
    case Kind::Constant:
        return *this;
    case Kind::Variable:
        return substitution[var_];
    case Kind::Not:
        return negation(operands_.front().substitute(substitution));
    case Kind::And:
    case Kind::Or: {
        std::vector<Expr> ops;
        ops.reserve(operands_.size());
        for (const auto& op : operands_) ops.push_back(op.substitute(substitution));
        return kind_ == Kind::And ? conjunction(std::move(ops)) : disjunction(std::move(ops));
    }
    }
    return *this;
}

namespace {

void render(const Expr& e, std::span<const std::string> names, std::string& out) {
    switch (e.kind()) {
    case Expr::Kind::Constant:
        out += e.value() ? '1' : '0';
        return;
    case Expr::Kind::Variable:
        out += names[e.index()];
        return;
    case Expr::Kind::Not: {
        const Expr& op = e.operands().front();
        out += '!';
        const bool atomic = op.kind() == Expr::Kind::Variable || op.kind() == Expr::Kind::Constant;
        if (!atomic) out += '(';
        render(op, names, out);
        if (!atomic) out += ')';
        return;
    }
    case Expr::Kind::And:
    case Expr::Kind::Or: {
        const bool is_and = e.kind() == Expr::Kind::And;
        bool first = true;
        for (const auto& op : e.operands()) {
            if (!first) out += is_and ? " & " : " | ";
            first = false;
            // Only a disjunction nested under a conjunction needs parentheses.
            const bool paren = is_and && op.kind() == Expr::Kind::Or;
            if (paren) out += '(';
            render(op, names, out);
            if (paren) out += ')';
        }
        return;
    }
    }
}

}  // namespace

std::string Expr::to_string(std::span<const std::string> names) const {
    std::string out;
    render(*this, names, out);
    return out;
}

std::size_t Expr::node_count() const {
    std::size_t count = 1;
    for (const auto& op : operands_) count += op.node_count();
    return count;
}

}  // namespace mpbn
