#include "gfr/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <vector>

namespace gfr {

namespace {

struct Token {
    std::string text;
    int line;
    int col;
};

std::vector<Token> tokenize_line(const std::string& raw, int lineno) {
    std::string s = raw;
    if (auto hash = s.find('#'); hash != std::string::npos) s.erase(hash);
    std::vector<Token> toks;
    std::size_t i = 0;
    while (i < s.size()) {
        if (std::isspace(static_cast<unsigned char>(s[i]))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        toks.push_back({s.substr(start, i - start), lineno, static_cast<int>(start) + 1});
    }
    return toks;
}

} // namespace

Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string raw;
    int lineno = 0;
    bool saw_statement = false;
    bool declared = false;
    std::vector<VertexId> vertices;
    std::vector<std::pair<VertexId, VertexId>> edges;

    while (std::getline(in, raw)) {
        ++lineno;
        auto toks = tokenize_line(raw, lineno);
        if (toks.empty()) continue;
        if (toks[0].text == "vertices:") {
            if (saw_statement)
                throw ParseError(lineno, toks[0].col, "vertices declaration must be the first line");
            saw_statement = true;
            declared = true;
            for (std::size_t i = 1; i < toks.size(); ++i) vertices.push_back(toks[i].text);
            continue;
        }
        saw_statement = true;
        if (toks.size() != 2)
            throw ParseError(lineno, toks[0].col, "expected an edge 'u v'");
        const auto& u = toks[0].text;
        const auto& v = toks[1].text;
        if (u == v) throw ParseError(lineno, toks[1].col, "self-loop on vertex '" + u + "'");
        if (declared) {
            auto known = [&](const VertexId& x) {
                return std::find(vertices.begin(), vertices.end(), x) != vertices.end();
            };
            if (!known(u)) throw ParseError(lineno, toks[0].col, "unknown vertex '" + u + "'");
            if (!known(v)) throw ParseError(lineno, toks[1].col, "unknown vertex '" + v + "'");
        } else {
            vertices.push_back(u);
            vertices.push_back(v);
        }
        edges.emplace_back(u, v);
    }
    if (!saw_statement) throw ParseError(1, 1, "empty graph input (write 'vertices:' for the empty graph)");
    return Graph::from_edge_list(vertices, edges);
}

namespace {

struct DotLexer {
    std::string_view src;
    std::size_t pos = 0;
    int line = 1;
    int col = 1;

    void advance(char c) {
        if (c == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++pos;
    }

    void skip_ws() {
        while (pos < src.size()) {
            char c = src[pos];
            if (std::isspace(static_cast<unsigned char>(c))) {
                advance(c);
            } else if (c == '/' && pos + 1 < src.size() && src[pos + 1] == '/') {
                while (pos < src.size() && src[pos] != '\n') advance(src[pos]);
            } else {
                break;
            }
        }
    }

    // Token kinds: ident, punctuation ("{", "}", ";", ",", "--"), or eof.
    Token next() {
        skip_ws();
        if (pos >= src.size()) return {"", line, col};
        int l = line, c = col;
        char ch = src[pos];
        if (ch == '"') {
            advance(ch);
            std::string out;
            while (pos < src.size() && src[pos] != '"') {
                out.push_back(src[pos]);
                advance(src[pos]);
            }
            if (pos >= src.size()) throw ParseError(l, c, "unterminated quoted identifier");
            advance('"');
            return {out, l, c};
        }
        if (ch == '-' && pos + 1 < src.size() && src[pos + 1] == '-') {
            advance('-');
            advance('-');
            return {"--", l, c};
        }
        if (ch == '-' && pos + 1 < src.size() && src[pos + 1] == '>')
            throw ParseError(l, c, "directed edges are not supported");
        if (ch == '{' || ch == '}' || ch == ';' || ch == ',' || ch == '[' || ch == ']' ||
            ch == '=') {
            advance(ch);
            return {std::string(1, ch), l, c};
        }
        if (std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '.') {
            std::string out;
            while (pos < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_' ||
                    src[pos] == '.')) {
                out.push_back(src[pos]);
                advance(src[pos]);
            }
            return {out, l, c};
        }
        throw ParseError(l, c, std::string("unexpected character '") + ch + "'");
    }
};

bool is_dot_punct(const Token& t) {
    return t.text == "{" || t.text == "}" || t.text == ";" || t.text == "," ||
           t.text == "[" || t.text == "]" || t.text == "=" || t.text == "--";
}

} // namespace

Graph parse_dot(std::string_view text) {
    DotLexer lex{text};
    Token t = lex.next();
    if (t.text == "strict") t = lex.next();
    if (t.text == "digraph") throw ParseError(t.line, t.col, "directed graphs are not supported");
    if (t.text != "graph") throw ParseError(t.line, t.col, "expected 'graph'");
    t = lex.next();
    if (t.text != "{") {
        if (t.text.empty() || is_dot_punct(t))
            throw ParseError(t.line, t.col, "expected graph name or '{'");
        t = lex.next(); // graph name ignored
        if (t.text != "{") throw ParseError(t.line, t.col, "expected '{'");
    }

    std::vector<VertexId> vertices;
    std::vector<std::pair<VertexId, VertexId>> edges;
    auto declare = [&](const VertexId& v) { vertices.push_back(v); };

    bool closed = false;
    t = lex.next();
    while (!t.text.empty()) {
        if (t.text == "}") {
            closed = true;
            break;
        }
        if (t.text == ";") {
            t = lex.next();
            continue;
        }
        if (is_dot_punct(t)) throw ParseError(t.line, t.col, "unexpected '" + t.text + "'");
        // Node or edge chain: a [-- b [-- c ...]] with optional [attrs].
        VertexId prev = t.text;
        declare(prev);
        t = lex.next();
        while (t.text == "--") {
            t = lex.next();
            if (t.text.empty() || is_dot_punct(t))
                throw ParseError(t.line, t.col, "expected vertex after '--'");
            if (t.text == prev)
                throw ParseError(t.line, t.col, "self-loop on vertex '" + prev + "'");
            declare(t.text);
            edges.emplace_back(prev, t.text);
            prev = t.text;
            t = lex.next();
        }
        if (t.text == "[") { // skip attribute block
            while (!t.text.empty() && t.text != "]") t = lex.next();
            if (t.text.empty()) throw ParseError(t.line, t.col, "unterminated attribute block");
            t = lex.next();
        }
    }
    if (!closed) throw ParseError(t.line, t.col, "expected '}'");
    try {
        return Graph::from_edge_list(vertices, edges);
    } catch (const SelfLoopError& e) {
        throw ParseError(1, 1, e.what());
    }
}

Graph parse_graph_auto(std::string_view text) {
    std::size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t j = i;
    while (j < text.size() && std::isalpha(static_cast<unsigned char>(text[j]))) ++j;
    std::string_view head = text.substr(i, j - i);
    if (head == "graph" || head == "strict" || head == "digraph") return parse_dot(text);
    return parse_edge_list(text);
}

std::string to_edge_list_text(const Graph& g) {
    std::string out = "vertices:";
    for (const auto& v : g.vertices()) {
        out += ' ';
        out += v;
    }
    out += '\n';
    for (const auto& [u, v] : g.edges()) {
        out += u;
        out += ' ';
        out += v;
        out += '\n';
    }
    return out;
}

namespace {

std::string dot_id(const VertexId& v) {
    bool plain = !v.empty();
    for (char c : v)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.')) plain = false;
    if (plain) return v;
    std::string q = "\"";
    for (char c : v) {
        if (c == '"' || c == '\\') q += '\\';
        q += c;
    }
    q += '"';
    return q;
}

} // namespace

std::string to_dot(const Graph& g, const std::string& name) {
    std::string out = "graph " + name + " {\n";
    std::vector<bool> in_edge(static_cast<std::size_t>(g.order()), false);
    for (int u = 0; u < g.order(); ++u)
        for (int v = g.neighbors(u).next(u); v >= 0; v = g.neighbors(u).next(v)) {
            out += "  " + dot_id(g.label(u)) + " -- " + dot_id(g.label(v)) + ";\n";
            in_edge[static_cast<std::size_t>(u)] = in_edge[static_cast<std::size_t>(v)] = true;
        }
    for (int v = 0; v < g.order(); ++v)
        if (!in_edge[static_cast<std::size_t>(v)]) out += "  " + dot_id(g.label(v)) + ";\n";
    out += "}\n";
    return out;
}

nlohmann::json graph_to_json(const Graph& g) {
    nlohmann::json j;
    j["vertices"] = g.vertices();
    auto edges = nlohmann::json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
    j["edges"] = edges;
    return j;
}

nlohmann::json ext_nat_to_json(ExtNat v) {
    if (v.is_inf()) return "inf";
    return v.value();
}

} // namespace gfr
