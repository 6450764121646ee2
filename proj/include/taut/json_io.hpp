#pragma once

#include "taut/strata.hpp"

#include <json.hpp>

namespace taut {

// {vertices:[{genus}], edges:[[v,w]...], legs:[{vertex, marking}]}; edges are
// listed in half-edge order, self-loops as [v,v].
nlohmann::json graph_to_json(const StableGraph& gr);
StableGraph graph_from_json(const nlohmann::json& j);

// {ambient:{g,n}, terms:[{graph, kappa, psi:{edges:[[e,side,exp]], legs:[[marking,exp]]}, coeff}]}
// where e indexes graph.edges and side 0/1 picks its first/second end.
nlohmann::json strata_to_json(const StrataElement& x);
StrataElement strata_from_json(const nlohmann::json& j);

// {monomials:[{exps:[e_1..e_d], coeff}]}: exps[i] is the power of kappa_{i+1}.
nlohmann::json kappa_to_json(const KappaPoly& p);

}  // namespace taut
