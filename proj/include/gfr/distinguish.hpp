#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "gfr/factor.hpp"
#include "gfr/graph.hpp"
#include "gfr/internal.hpp"
#include "gfr/isomorphism.hpp"

namespace gfr {

enum class VerdictKind { NotIsomorphic, IsomorphicFactors, Unknown, Inapplicable };

// Wire tokens: GRAPH_ISOMORPHIC, THEOREM_4_7, COROLLARY_4_11, FACTOR_CALCULUS,
// NONE. The two named criteria are the internal-graph separation rule and the
// radius-gap separation rule (see README for the decision ladder).
enum class VerdictBasis { GraphIsomorphic, Theorem47, Corollary411, FactorCalculus, None };

std::string to_string(VerdictKind k);
std::string to_string(VerdictBasis b);

struct Verdict {
    VerdictKind kind = VerdictKind::Unknown;
    VerdictBasis basis = VerdictBasis::None;

    HRigidityReport report1, report2;
    FactorExpr expr1, expr2; // simplified
    ExtNat radius1, radius2;

    std::optional<std::vector<std::pair<VertexId, VertexId>>> graph_iso;
    std::optional<RewriteTrace> certificate;
    std::optional<Graph> int1, int2;

    nlohmann::json evidence; // basis-specific payload
};

// Decision ladder, first hit wins:
//   (a) whole-graph isomorphism            -> ISOMORPHIC_FACTORS / GRAPH_ISOMORPHIC
//   (b) certified expression equality      -> ISOMORPHIC_FACTORS / FACTOR_CALCULUS
//   (c) both connected + rigid, internal
//       graphs not isomorphic              -> NOT_ISOMORPHIC / THEOREM_4_7
//   (d) both connected + rigid, radius gap
//       of two or more                     -> NOT_ISOMORPHIC / COROLLARY_4_11
//   (e) otherwise UNKNOWN, or INAPPLICABLE when neither graph is rigid.
Verdict distinguish(const Graph& g1, const Graph& g2);

struct CatalogReport {
    std::vector<std::string> names;
    std::vector<std::vector<VerdictKind>> kinds;   // full matrix
    std::vector<std::vector<VerdictBasis>> bases;
    std::vector<std::vector<int>> classes;         // quotient under ISOMORPHIC_FACTORS
};

CatalogReport classify_catalog(const std::vector<Graph>& graphs,
                               std::vector<std::string> names = {});

nlohmann::json verdict_to_json(const Verdict& v);
nlohmann::json catalog_report_to_json(const CatalogReport& r);

} // namespace gfr
