#pragma once

#include "indpoly/graph.hpp"
#include "indpoly/polynomial.hpp"

namespace indpoly {

// Counts independent sets by size: coefficient k of the result is the
// number of independent sets of size k, so the constant term is 1 and the
// degree is the independence number.

// Works on any graph. Splits into connected components, then expands on a
// maximum-degree vertex v via I(G) = I(G - v) + x * I(G - N[v]).
Polynomial independence_polynomial_general(const Graph& g);

// Linear-time two-state dynamic program over a rooted tree. Iterative;
// safe for deep paths.
Polynomial independence_polynomial_tree(const Tree& t);

// Exhaustive check of all 2^n vertex subsets. Guard rail: n <= 24.
Polynomial independence_polynomial_bruteforce(const Graph& g);

// Routes to the cheapest applicable method: tree DP for trees, otherwise
// the general expansion.
Polynomial independence_polynomial(const Graph& g);

// Size of a largest independent set (the degree of the polynomial).
int independence_number(const Graph& g);

}  // namespace indpoly
