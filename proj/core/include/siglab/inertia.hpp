#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "siglab/graph.hpp"

namespace siglab {

/// det(xI - A(G)); coefficients[i] multiplies x^i, so the last entry is 1.
struct CharPoly {
  std::vector<mpz_class> coefficients;

  std::size_t degree() const { return coefficients.empty() ? 0 : coefficients.size() - 1; }
};

struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t nullity = 0;

  std::size_t rank() const { return positive + negative; }
  long signature() const { return static_cast<long>(positive) - static_cast<long>(negative); }
  std::size_t order() const { return positive + negative + nullity; }

  friend bool operator==(const Inertia&, const Inertia&) = default;
};

// Division-free (Berkowitz) over the integers. Throws SizeLimitError above
// max_order.
CharPoly char_poly(const Graph& g, std::size_t max_order = kMaxOrder);

// Exact: multiplicity of the root 0, then Descartes sign variations of the
// deflated polynomial. Exact because adjacency spectra are real.
Inertia inertia(const Graph& g, std::size_t max_order = kMaxOrder);
// Inertia of the subgraph induced by keep, without materializing it.
Inertia induced_inertia(const Graph& g, VertexMask keep);
Inertia inertia_from_char_poly(const CharPoly& poly);

long signature(const Graph& g);
std::size_t rank(const Graph& g);
std::size_t nullity(const Graph& g);

// Numerical eigenvalues classified with |lambda| < zero_tolerance as zero.
// Default tolerance is 1e-9 * order. nullopt if the solver fails.
std::optional<Inertia> float_inertia_oracle(const Graph& g,
                                            std::optional<double> zero_tolerance = std::nullopt);

// Sylvester congruence over the rationals (symmetric LDL^T with 1x1 and 2x2
// pivots). Independent of char_poly; used to validate it.
Inertia congruence_inertia(const Graph& g);

}  // namespace siglab
