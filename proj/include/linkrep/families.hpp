#pragma once

#include <string>
#include <vector>

#include "linkrep/diagram.hpp"
#include "linkrep/simple_graph.hpp"

namespace linkrep {

// Closed chain of u unknots with a twist region carrying |v| extra
// self-crossings on the closing component (handedness = sign of v).
// Linking graph is the u-cycle. Requires u >= 3.
LinkDiagram luv(int u, int v);

// Forest of unknots: one component per vertex, a clasp (two crossings,
// linking number +1) per edge, a kinked unknot per isolated vertex.
// Linking graph of the result equals f. Requires f acyclic and nonempty.
LinkDiagram hopf_forest(const SimpleGraph& f);

// hopf_forest on the path with n vertices (n >= 1).
LinkDiagram chain(int n);

// Stored/generated diagrams by name: Hopf, Trefoil, L6n1, L8n8, L5m3,
// G0Link, plus parametric forms "Chain(n)", "Luv(u,v)" and
// "HopfForest(n:1-2,2-3,...)" (vertices 1-based, edges optional).
LinkDiagram named(const std::string& name);

std::vector<std::string> family_names();

}  // namespace linkrep
