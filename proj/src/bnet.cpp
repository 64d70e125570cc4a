#include "mpbn/bnet.hpp"

#include "mpbn/error.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <unordered_map>

namespace mpbn {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool valid_ident(std::string_view s) {
    if (s.empty() || !is_ident_start(s.front())) return false;
    for (char c : s) {
        if (!is_ident_char(c)) return false;
    }
    return true;
}

// Recursive descent over one right-hand side:
//   expr := term ('|' term)* ; term := factor ('&' factor)*
//   factor := '!' factor | '(' expr ')' | ident | '0' | '1'
class ExprParser {
public:
    ExprParser(std::string_view text, std::size_t line,
               const std::unordered_map<std::string, std::uint32_t>& index)
        : text_(text), line_(line), index_(index) {}

    Expr parse() {
        Expr e = expr();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return e;
    }

private:
    Expr expr() {
        std::vector<Expr> ops;
        ops.push_back(term());
        while (accept('|')) ops.push_back(term());
        return Expr::disjunction(std::move(ops));
    }

    Expr term() {
        std::vector<Expr> ops;
        ops.push_back(factor());
        while (accept('&')) ops.push_back(factor());
        return Expr::conjunction(std::move(ops));
    }

    Expr factor() {
        skip_space();
        if (pos_ >= text_.size()) fail("unexpected end of expression");
        const char c = text_[pos_];
        if (c == '!') {
            ++pos_;
            return Expr::negation(factor());
        }
        if (c == '(') {
            ++pos_;
            Expr e = expr();
            if (!accept(')')) fail("expected ')'");
            return e;
        }
        if (c == '0' || c == '1') {
            ++pos_;
            if (pos_ < text_.size() && is_ident_char(text_[pos_])) fail("invalid token after constant");
            return Expr::constant(c == '1');
        }
        if (is_ident_start(c)) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
            const std::string name(text_.substr(start, pos_ - start));
            const auto it = index_.find(name);
            if (it == index_.end()) fail("undefined component '" + name + "'");
            return Expr::variable(it->second);
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& message) const { throw ParseError(line_, message); }

    std::string_view text_;
    std::size_t line_;
    const std::unordered_map<std::string, std::uint32_t>& index_;
    std::size_t pos_ = 0;
};

struct Definition {
    std::string name;
    std::string_view body;
    std::size_t line;
};

}  // namespace

BooleanNetwork parse_bnet(std::string_view text) {
    std::vector<Definition> defs;
    std::unordered_map<std::string, std::uint32_t> index;
    std::size_t line_no = 0;
    bool seen_content = false;
    while (!text.empty()) {
        ++line_no;
        const auto eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string_view::npos) throw ParseError(line_no, "expected 'name, expression'");
        const std::string name(trim(line.substr(0, comma)));
        const std::string_view body = trim(line.substr(comma + 1));
        if (!seen_content) {
            seen_content = true;
            std::string lowered_name = name;
            std::string lowered_body(body);
            for (auto& c : lowered_name) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
            for (auto& c : lowered_body) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
            if (lowered_name == "targets" && lowered_body == "factors") continue;
        }
        if (!valid_ident(name)) throw ParseError(line_no, "invalid component name '" + name + "'");
        if (body.empty()) throw ParseError(line_no, "missing expression for '" + name + "'");
        if (!index.emplace(name, static_cast<std::uint32_t>(defs.size())).second) {
            throw ParseError(line_no, "duplicate definition of '" + name + "'");
        }
        defs.push_back({name, body, line_no});
    }
    if (defs.empty()) throw ParseError(line_no == 0 ? 1 : line_no, "no component defined");

    std::vector<std::string> names;
    std::vector<Expr> locals;
    names.reserve(defs.size());
    locals.reserve(defs.size());
    for (const auto& d : defs) {
        names.push_back(d.name);
        locals.push_back(ExprParser(d.body, d.line, index).parse());
    }
    return BooleanNetwork(std::move(names), std::move(locals));
}

BooleanNetwork load_bnet(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_bnet(buf.str());
}

std::string render_bnet(const BooleanNetwork& net) {
    std::string out;
    for (std::size_t i = 0; i < net.size(); ++i) {
        out += net.name(i);
        out += ", ";
        out += net.local(i).to_string(net.names());
        out += '\n';
    }
    return out;
}

nlohmann::json network_to_json(const BooleanNetwork& net) {
    nlohmann::json functions = nlohmann::json::object();
    for (std::size_t i = 0; i < net.size(); ++i) {
        functions[net.name(i)] = net.local(i).to_string(net.names());
    }
    const auto names = net.names();
    return {{"nodes", std::vector<std::string>(names.begin(), names.end())},
            {"functions", std::move(functions)}};
}

}  // namespace mpbn
