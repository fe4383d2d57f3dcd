#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "gfr/graph.hpp"
#include "gfr/rational.hpp"

namespace gfr {

// Symbolic factor expressions:
//   Unit    -- the trivial factor, unit of both tensor and free product
//   R       -- the hyperfinite vertex factor
//   Fgf     -- interpolated free group factor LF(s), exact rational s > 1
//   Tensor  -- tensor product over a flattened, canonically sorted child list
//   Free    -- free product, same child handling, at least two children
//   Gp      -- opaque leaf for a connected, non-complete, join-indecomposable
//             graph product
enum class ExprKind { Unit, R, Fgf, Tensor, Free, Gp };

class FactorExpr {
public:
    ExprKind kind = ExprKind::Unit;
    Rational fgf_param;                   // Fgf only
    std::vector<FactorExpr> children;     // Tensor/Free only
    std::shared_ptr<const Graph> graph;   // Gp only

    static FactorExpr unit();
    static FactorExpr r();
    static FactorExpr fgf(const Rational& s); // DomainError unless s > 1
    // Flatten same-kind children, drop units, sort canonically; empty lists
    // collapse to Unit and singleton lists to the child itself.
    static FactorExpr tensor(std::vector<FactorExpr> kids);
    static FactorExpr free_product(std::vector<FactorExpr> kids);
    static FactorExpr graph_leaf(Graph g);
};

bool expr_eq(const FactorExpr& a, const FactorExpr& b);
bool expr_less(const FactorExpr& a, const FactorExpr& b);

// Rebuilds through the canonicalizing constructors (validates invariants).
FactorExpr canonical(const FactorExpr& e);

struct AmplifyMove {
    Rational s, t, r; // (LF(s), LF(t)) -> (LF(1+(s-1)r), LF(1+(t-1)/r))
};

struct RewriteStep {
    std::string rule; // T1 | F1 | F2 | F3 | AMPLIFY
    bool extension = false;
    FactorExpr before; // whole expression, canonical
    FactorExpr after;
    std::optional<AmplifyMove> move; // AMPLIFY only
};

using RewriteTrace = std::vector<RewriteStep>;

struct SimplifyOptions {
    bool strict = false; // disable extension rule F3 (merging two LF factors)
};

struct SimplifyResult {
    FactorExpr expr;
    RewriteTrace trace;
};

// Confluent normal form under:
//   T1: drop a duplicate R inside a tensor product
//   F1: R * R            -> LF(2)
//   F2: LF(s) * R        -> LF(s+1)
//   F3: LF(s) * LF(t)    -> LF(s+t)   (extension; off in strict mode)
// Rules apply innermost-leftmost; every step is recorded.
SimplifyResult simplify(const FactorExpr& e, SimplifyOptions opts = {});

// Recursive shape decomposition: components give free products, complement
// components give tensor factors, single vertices give R, irreducible
// connected pieces stay as Gp leaves. Result is already simplified.
SimplifyResult graph_to_expression_traced(const Graph& g, SimplifyOptions opts = {});
FactorExpr graph_to_expression(const Graph& g, SimplifyOptions opts = {});

// 1 + (s-1)/r, exact. DomainError unless s > 1 and r > 0.
Rational amplify_fgf(const Rational& s, const Rational& r);

// Certificate-producing equality: Some(trace) exactly when both sides share
// the same non-LF tensor residue and their LF factors agree in count and in
// the product of (s-1); the trace is an explicit amplification chain. None
// means unknown, never "distinct". Inputs are expected in simplified form;
// unsimplified inputs are normalized first and the trace then runs from the
// first argument to the second's normal form.
std::optional<RewriteTrace> provably_equal(const FactorExpr& a, const FactorExpr& b,
                                           SimplifyOptions opts = {});

// Validates the chain: each step re-derives `after` from `before` by its
// named rule, and the chain links source to target.
bool replay_trace(const FactorExpr& source, const FactorExpr& target, const RewriteTrace& trace);

// True iff every connected component of g is complete.
bool is_quasi_strongly_solid(const Graph& g);

bool contains_kind(const FactorExpr& e, ExprKind k);

// Text form: R, 1, LF(7/2), T[...], F[...], GP{vertices: a b; a b}.
std::string to_text(const FactorExpr& e);
FactorExpr parse_expression(std::string_view text); // ParseError

nlohmann::json expr_to_json(const FactorExpr& e);
nlohmann::json trace_to_json(const RewriteTrace& t);

} // namespace gfr
