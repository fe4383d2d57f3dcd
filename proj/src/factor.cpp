#include "gfr/factor.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>

#include "gfr/io.hpp"
#include "gfr/isomorphism.hpp"

namespace gfr {

FactorExpr FactorExpr::unit() { return {}; }

FactorExpr FactorExpr::r() {
    FactorExpr e;
    e.kind = ExprKind::R;
    return e;
}

FactorExpr FactorExpr::fgf(const Rational& s) {
    if (!(s > Rational(1))) throw DomainError("LF parameter must exceed 1, got " + s.str());
    FactorExpr e;
    e.kind = ExprKind::Fgf;
    e.fgf_param = s;
    return e;
}

FactorExpr FactorExpr::graph_leaf(Graph g) {
    FactorExpr e;
    e.kind = ExprKind::Gp;
    e.graph = std::make_shared<const Graph>(std::move(g));
    return e;
}

namespace {

FactorExpr make_node(ExprKind kind, std::vector<FactorExpr> kids) {
    std::vector<FactorExpr> flat;
    for (auto& k : kids) {
        if (k.kind == kind) {
            for (auto& c : k.children) flat.push_back(std::move(c));
        } else if (k.kind == ExprKind::Unit) {
            // unit of both products
        } else {
            flat.push_back(std::move(k));
        }
    }
    std::sort(flat.begin(), flat.end(), expr_less);
    if (flat.empty()) return FactorExpr::unit();
    if (flat.size() == 1) return std::move(flat.front());
    FactorExpr e;
    e.kind = kind;
    e.children = std::move(flat);
    return e;
}

int kind_rank(ExprKind k) {
    switch (k) {
        case ExprKind::Unit: return 0;
        case ExprKind::R: return 1;
        case ExprKind::Fgf: return 2;
        case ExprKind::Tensor: return 3;
        case ExprKind::Free: return 4;
        case ExprKind::Gp: return 5;
    }
    return 6;
}

int graph_cmp(const Graph& a, const Graph& b) {
    Fingerprint fa = fingerprint(a), fb = fingerprint(b);
    if (fa != fb) return fa < fb ? -1 : 1;
    if (a.vertices() != b.vertices()) return a.vertices() < b.vertices() ? -1 : 1;
    auto ea = a.edges(), eb = b.edges();
    if (ea != eb) return ea < eb ? -1 : 1;
    return 0;
}

int expr_cmp(const FactorExpr& a, const FactorExpr& b) {
    if (a.kind != b.kind) return kind_rank(a.kind) < kind_rank(b.kind) ? -1 : 1;
    switch (a.kind) {
        case ExprKind::Unit:
        case ExprKind::R: return 0;
        case ExprKind::Fgf:
            if (a.fgf_param == b.fgf_param) return 0;
            return a.fgf_param < b.fgf_param ? -1 : 1;
        case ExprKind::Tensor:
        case ExprKind::Free: {
            std::size_t n = std::min(a.children.size(), b.children.size());
            for (std::size_t i = 0; i < n; ++i)
                if (int c = expr_cmp(a.children[i], b.children[i])) return c;
            if (a.children.size() == b.children.size()) return 0;
            return a.children.size() < b.children.size() ? -1 : 1;
        }
        case ExprKind::Gp: return graph_cmp(*a.graph, *b.graph);
    }
    return 0;
}

} // namespace

FactorExpr FactorExpr::tensor(std::vector<FactorExpr> kids) {
    return make_node(ExprKind::Tensor, std::move(kids));
}

FactorExpr FactorExpr::free_product(std::vector<FactorExpr> kids) {
    return make_node(ExprKind::Free, std::move(kids));
}

bool expr_eq(const FactorExpr& a, const FactorExpr& b) { return expr_cmp(a, b) == 0; }
bool expr_less(const FactorExpr& a, const FactorExpr& b) { return expr_cmp(a, b) < 0; }

FactorExpr canonical(const FactorExpr& e) {
    switch (e.kind) {
        case ExprKind::Unit: return FactorExpr::unit();
        case ExprKind::R: return FactorExpr::r();
        case ExprKind::Fgf: return FactorExpr::fgf(e.fgf_param);
        case ExprKind::Gp: {
            FactorExpr out;
            out.kind = ExprKind::Gp;
            out.graph = e.graph;
            if (!out.graph) throw DomainError("graph leaf without a graph");
            return out;
        }
        case ExprKind::Tensor:
        case ExprKind::Free: {
            std::vector<FactorExpr> kids;
            kids.reserve(e.children.size());
            for (const auto& c : e.children) kids.push_back(canonical(c));
            return e.kind == ExprKind::Tensor ? FactorExpr::tensor(std::move(kids))
                                              : FactorExpr::free_product(std::move(kids));
        }
    }
    return FactorExpr::unit();
}

namespace {

struct StepProto {
    std::string rule;
    bool extension = false;
    FactorExpr result;
};

// One innermost-leftmost rule application, or nullopt at normal form.
std::optional<StepProto> rewrite_once(const FactorExpr& e, bool strict) {
    if (e.kind != ExprKind::Tensor && e.kind != ExprKind::Free) return std::nullopt;

    for (std::size_t i = 0; i < e.children.size(); ++i) {
        if (auto sub = rewrite_once(e.children[i], strict)) {
            std::vector<FactorExpr> kids = e.children;
            kids[i] = std::move(sub->result);
            FactorExpr rebuilt = e.kind == ExprKind::Tensor
                                     ? FactorExpr::tensor(std::move(kids))
                                     : FactorExpr::free_product(std::move(kids));
            return StepProto{sub->rule, sub->extension, std::move(rebuilt)};
        }
    }

    auto count_r = [&] {
        std::size_t c = 0;
        for (const auto& k : e.children)
            if (k.kind == ExprKind::R) ++c;
        return c;
    };

    if (e.kind == ExprKind::Tensor) {
        if (count_r() >= 2) {
            std::vector<FactorExpr> kids = e.children;
            auto it = std::find_if(kids.begin(), kids.end(),
                                   [](const FactorExpr& k) { return k.kind == ExprKind::R; });
            kids.erase(it);
            return StepProto{"T1", false, FactorExpr::tensor(std::move(kids))};
        }
        return std::nullopt;
    }

    // Free node. Children are sorted, so R's precede LF's.
    std::size_t rs = count_r();
    std::vector<std::size_t> fgf_idx;
    for (std::size_t i = 0; i < e.children.size(); ++i)
        if (e.children[i].kind == ExprKind::Fgf) fgf_idx.push_back(i);

    auto merge_two = [&](std::size_t i, std::size_t j, const Rational& merged,
                         const char* rule, bool ext) {
        std::vector<FactorExpr> kids;
        for (std::size_t k = 0; k < e.children.size(); ++k)
            if (k != i && k != j) kids.push_back(e.children[k]);
        kids.push_back(FactorExpr::fgf(merged));
        return StepProto{rule, ext, FactorExpr::free_product(std::move(kids))};
    };

    if (rs >= 1 && !fgf_idx.empty())
        return merge_two(0, fgf_idx[0], e.children[fgf_idx[0]].fgf_param + Rational(1), "F2",
                         false);
    if (rs >= 2) return merge_two(0, 1, Rational(2), "F1", false);
    if (fgf_idx.size() >= 2 && !strict)
        return merge_two(fgf_idx[0], fgf_idx[1],
                         e.children[fgf_idx[0]].fgf_param + e.children[fgf_idx[1]].fgf_param,
                         "F3", true);
    return std::nullopt;
}

} // namespace

SimplifyResult simplify(const FactorExpr& e, SimplifyOptions opts) {
    SimplifyResult out;
    out.expr = canonical(e);
    int fuel = 100000;
    while (auto step = rewrite_once(out.expr, opts.strict)) {
        if (--fuel <= 0) throw DomainError("simplify did not terminate");
        out.trace.push_back({step->rule, step->extension, out.expr, step->result, std::nullopt});
        out.expr = std::move(step->result);
    }
    return out;
}

namespace {

FactorExpr graph_expr_raw(const Graph& g) {
    if (g.order() == 0) return FactorExpr::unit();
    if (g.order() == 1) return FactorExpr::r();

    auto comps = connected_component_sets(g);
    if (comps.size() >= 2) {
        std::vector<FactorExpr> kids;
        for (const auto& c : comps) kids.push_back(graph_expr_raw(induced_subgraph(g, c)));
        return FactorExpr::free_product(std::move(kids));
    }

    auto anti = connected_component_sets(complement(g));
    if (anti.size() >= 2) {
        std::vector<FactorExpr> kids;
        for (const auto& c : anti) kids.push_back(graph_expr_raw(induced_subgraph(g, c)));
        return FactorExpr::tensor(std::move(kids));
    }

    return FactorExpr::graph_leaf(g);
}

} // namespace

SimplifyResult graph_to_expression_traced(const Graph& g, SimplifyOptions opts) {
    return simplify(graph_expr_raw(g), opts);
}

FactorExpr graph_to_expression(const Graph& g, SimplifyOptions opts) {
    return graph_to_expression_traced(g, opts).expr;
}

Rational amplify_fgf(const Rational& s, const Rational& r) {
    if (!(s > Rational(1))) throw DomainError("amplify_fgf: s must exceed 1, got " + s.str());
    if (!(r > Rational(0))) throw DomainError("amplify_fgf: r must be positive, got " + r.str());
    return Rational(1) + (s - Rational(1)) / r;
}

namespace {

// Applies one pairwise amplification move inside a tensor of LF factors.
std::optional<FactorExpr> apply_amplify(const FactorExpr& e, const AmplifyMove& m) {
    if (e.kind != ExprKind::Tensor) return std::nullopt;
    if (!(m.r > Rational(0)) || !(m.s > Rational(1)) || !(m.t > Rational(1)))
        return std::nullopt;
    std::vector<FactorExpr> kids = e.children;
    auto take = [&](const Rational& v) -> bool {
        auto it = std::find_if(kids.begin(), kids.end(), [&](const FactorExpr& k) {
            return k.kind == ExprKind::Fgf && k.fgf_param == v;
        });
        if (it == kids.end()) return false;
        kids.erase(it);
        return true;
    };
    if (!take(m.s) || !take(m.t)) return std::nullopt;
    kids.push_back(FactorExpr::fgf(amplify_fgf(m.s, Rational(1) / m.r)));
    kids.push_back(FactorExpr::fgf(amplify_fgf(m.t, m.r)));
    return FactorExpr::tensor(std::move(kids));
}

} // namespace

std::optional<RewriteTrace> provably_equal(const FactorExpr& a0, const FactorExpr& b0,
                                           SimplifyOptions opts) {
    auto sa = simplify(a0, opts);
    auto sb = simplify(b0, opts);
    RewriteTrace trace = sa.trace;
    const FactorExpr& a = sa.expr;
    const FactorExpr& b = sb.expr;

    if (expr_eq(a, b)) return trace;
    if (a.kind != ExprKind::Tensor || b.kind != ExprKind::Tensor) return std::nullopt;

    std::vector<Rational> fa, fb;
    std::vector<FactorExpr> rest_a, rest_b;
    for (const auto& k : a.children) {
        if (k.kind == ExprKind::Fgf)
            fa.push_back(k.fgf_param);
        else
            rest_a.push_back(k);
    }
    for (const auto& k : b.children) {
        if (k.kind == ExprKind::Fgf)
            fb.push_back(k.fgf_param);
        else
            rest_b.push_back(k);
    }

    if (fa.size() != fb.size() || rest_a.size() != rest_b.size()) return std::nullopt;
    for (std::size_t i = 0; i < rest_a.size(); ++i)
        if (!expr_eq(rest_a[i], rest_b[i])) return std::nullopt;

    Rational prod_a(1), prod_b(1);
    for (const auto& s : fa) prod_a = prod_a * (s - Rational(1));
    for (const auto& s : fb) prod_b = prod_b * (s - Rational(1));
    if (!(prod_a == prod_b)) return std::nullopt;

    // Transform the LF multiset of `cur` into fb, matching the largest
    // remaining target first. Each move fixes one target factor exactly.
    FactorExpr cur = a;
    std::vector<Rational> active = fa, targets = fb;
    std::sort(active.begin(), active.end());
    std::sort(targets.begin(), targets.end());
    while (!targets.empty()) {
        Rational want = targets.back();
        targets.pop_back();
        auto hit = std::find(active.begin(), active.end(), want);
        if (hit != active.end()) { // already matched, no move needed
            active.erase(hit);
            continue;
        }
        if (active.size() < 2) return std::nullopt; // cannot happen when products match
        Rational s = active.back();
        active.pop_back();
        Rational t = active.back();
        active.pop_back();
        Rational r = (want - Rational(1)) / (s - Rational(1));
        AmplifyMove move{s, t, r};
        auto next = apply_amplify(cur, move);
        if (!next) return std::nullopt;
        trace.push_back({"AMPLIFY", false, cur, *next, move});
        cur = std::move(*next);
        Rational leftover = amplify_fgf(t, r);
        active.insert(std::lower_bound(active.begin(), active.end(), leftover), leftover);
    }
    if (!expr_eq(cur, b)) return std::nullopt; // bug trap
    return trace;
}

bool replay_trace(const FactorExpr& source, const FactorExpr& target, const RewriteTrace& trace) {
    FactorExpr cur = canonical(source);
    for (const auto& step : trace) {
        if (!expr_eq(step.before, cur)) return false;
        FactorExpr next;
        if (step.rule == "AMPLIFY") {
            if (!step.move) return false;
            auto applied = apply_amplify(cur, *step.move);
            if (!applied) return false;
            next = std::move(*applied);
        } else {
            auto rw = rewrite_once(cur, false);
            if (!rw || rw->rule != step.rule) return false;
            next = std::move(rw->result);
        }
        if (!expr_eq(next, step.after)) return false;
        cur = std::move(next);
    }
    return expr_eq(cur, canonical(target));
}

bool is_quasi_strongly_solid(const Graph& g) {
    for (const auto& comp : connected_component_sets(g))
        if (!is_complete_set(g, comp)) return false;
    return true;
}

bool contains_kind(const FactorExpr& e, ExprKind k) {
    if (e.kind == k) return true;
    for (const auto& c : e.children)
        if (contains_kind(c, k)) return true;
    return false;
}

std::string to_text(const FactorExpr& e) {
    switch (e.kind) {
        case ExprKind::Unit: return "1";
        case ExprKind::R: return "R";
        case ExprKind::Fgf: return "LF(" + e.fgf_param.str() + ")";
        case ExprKind::Tensor:
        case ExprKind::Free: {
            std::string out = e.kind == ExprKind::Tensor ? "T[" : "F[";
            for (std::size_t i = 0; i < e.children.size(); ++i) {
                if (i) out += ", ";
                out += to_text(e.children[i]);
            }
            out += ']';
            return out;
        }
        case ExprKind::Gp: {
            const Graph& g = *e.graph;
            std::string out = "GP{vertices:";
            for (const auto& v : g.vertices()) {
                out += ' ';
                out += v;
            }
            for (const auto& [u, v] : g.edges()) {
                out += "; ";
                out += u;
                out += ' ';
                out += v;
            }
            out += '}';
            return out;
        }
    }
    return "1";
}

namespace {

struct ExprParser {
    std::string_view src;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(1, static_cast<int>(pos) + 1, msg);
    }

    void skip_ws() {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < src.size() && src[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }

    std::string word() {
        skip_ws();
        std::size_t start = pos;
        while (pos < src.size() && std::isalpha(static_cast<unsigned char>(src[pos]))) ++pos;
        return std::string(src.substr(start, pos - start));
    }

    Rational rational() {
        skip_ws();
        std::size_t start = pos;
        if (pos < src.size() && (src[pos] == '-' || src[pos] == '+')) ++pos;
        while (pos < src.size() &&
               (std::isdigit(static_cast<unsigned char>(src[pos])) || src[pos] == '/'))
            ++pos;
        try {
            return Rational::parse(src.substr(start, pos - start));
        } catch (const BadParamError& e) {
            fail(e.what());
        }
    }

    FactorExpr expr() {
        skip_ws();
        if (pos >= src.size()) fail("unexpected end of expression");
        if (src[pos] == '1') {
            ++pos;
            return FactorExpr::unit();
        }
        std::string w = word();
        if (w == "R") return FactorExpr::r();
        if (w == "LF") {
            expect('(');
            Rational s = rational();
            expect(')');
            try {
                return FactorExpr::fgf(s);
            } catch (const DomainError& e) {
                fail(e.what());
            }
        }
        if (w == "T" || w == "F") {
            expect('[');
            std::vector<FactorExpr> kids;
            if (!eat(']')) {
                kids.push_back(expr());
                while (eat(',')) kids.push_back(expr());
                expect(']');
            }
            return w == "T" ? FactorExpr::tensor(std::move(kids))
                            : FactorExpr::free_product(std::move(kids));
        }
        if (w == "GP") {
            expect('{');
            std::size_t start = pos;
            while (pos < src.size() && src[pos] != '}') ++pos;
            if (pos >= src.size()) fail("unterminated GP{...}");
            std::string body(src.substr(start, pos - start));
            ++pos; // '}'
            for (auto& c : body)
                if (c == ';') c = '\n';
            return FactorExpr::graph_leaf(parse_edge_list(body));
        }
        fail("expected expression");
    }
};

} // namespace

FactorExpr parse_expression(std::string_view text) {
    ExprParser p{text};
    FactorExpr e = p.expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input after expression");
    return e;
}

nlohmann::json expr_to_json(const FactorExpr& e) {
    nlohmann::json j;
    switch (e.kind) {
        case ExprKind::Unit: j["kind"] = "unit"; break;
        case ExprKind::R: j["kind"] = "R"; break;
        case ExprKind::Fgf:
            j["kind"] = "LF";
            j["s"] = e.fgf_param.str();
            break;
        case ExprKind::Tensor:
        case ExprKind::Free: {
            j["kind"] = e.kind == ExprKind::Tensor ? "tensor" : "free";
            auto kids = nlohmann::json::array();
            for (const auto& c : e.children) kids.push_back(expr_to_json(c));
            j["children"] = kids;
            break;
        }
        case ExprKind::Gp:
            j["kind"] = "gp";
            j["graph"] = graph_to_json(*e.graph);
            break;
    }
    return j;
}

nlohmann::json trace_to_json(const RewriteTrace& t) {
    auto steps = nlohmann::json::array();
    for (const auto& s : t) {
        nlohmann::json step;
        step["rule"] = s.rule;
        step["extension"] = s.extension;
        step["before"] = to_text(s.before);
        step["after"] = to_text(s.after);
        if (s.move)
            step["move"] = {{"s", s.move->s.str()}, {"t", s.move->t.str()}, {"r", s.move->r.str()}};
        steps.push_back(step);
    }
    return steps;
}

} // namespace gfr
