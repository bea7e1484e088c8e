#include "siglab/inertia.hpp"

#include <string>

#include "berkowitz.hpp"
#include "siglab/error.hpp"

namespace siglab {

namespace {

int sign_of(const mpz_class& x) { return sgn(x); }
int sign_of(const detail::Checked64& x) { return x.sign(); }

// Exact for real-rooted polynomials: zero roots are the trailing zero
// coefficients; positive roots are the sign variations of the deflated
// sequence, negative roots those of p(-x).
template <typename Scalar>
Inertia inertia_from_coefficients(const std::vector<Scalar>& c) {
  Inertia in;
  const std::size_t degree = c.size() - 1;
  std::size_t low = 0;
  while (low < degree && sign_of(c[low]) == 0) ++low;
  in.nullity = low;
  int last_pos = 0;
  int last_neg = 0;
  for (std::size_t i = low; i <= degree; ++i) {
    const int s = sign_of(c[i]);
    if (s == 0) continue;
    const int s_neg = (i % 2 == 0) ? s : -s;
    if (last_pos != 0 && s != last_pos) ++in.positive;
    if (last_neg != 0 && s_neg != last_neg) ++in.negative;
    last_pos = s;
    last_neg = s_neg;
  }
  return in;
}

Inertia inertia_of(std::span<const VertexMask> rows, std::span<const Vertex> vertices) {
  try {
    return inertia_from_coefficients(detail::berkowitz<detail::Checked64>(rows, vertices));
  } catch (const detail::Overflow&) {
    return inertia_from_coefficients(detail::berkowitz<mpz_class>(rows, vertices));
  }
}

void check_size(const Graph& g, std::size_t max_order) {
  if (g.order() > max_order) {
    throw SizeLimitError("graph order " + std::to_string(g.order()) + " exceeds limit " +
                         std::to_string(max_order));
  }
}

std::vector<Vertex> all_vertices(const Graph& g) { return to_set(g.vertex_mask()); }

}  // namespace

CharPoly char_poly(const Graph& g, std::size_t max_order) {
  check_size(g, max_order);
  const auto vertices = all_vertices(g);
  CharPoly p;
  try {
    for (const auto& c : detail::berkowitz<detail::Checked64>(g.rows(), vertices)) {
      p.coefficients.emplace_back(static_cast<long>(c.v));
    }
  } catch (const detail::Overflow&) {
    p.coefficients = detail::berkowitz<mpz_class>(g.rows(), vertices);
  }
  return p;
}

Inertia inertia_from_char_poly(const CharPoly& poly) {
  if (poly.coefficients.empty()) throw InvalidArgument("empty characteristic polynomial");
  return inertia_from_coefficients(poly.coefficients);
}

Inertia inertia(const Graph& g, std::size_t max_order) {
  check_size(g, max_order);
  return inertia_of(g.rows(), all_vertices(g));
}

Inertia induced_inertia(const Graph& g, VertexMask keep) {
  if (keep & ~g.vertex_mask()) throw InvalidArgument("vertex set references a missing vertex");
  return inertia_of(g.rows(), to_set(keep));
}

long signature(const Graph& g) { return inertia(g).signature(); }
std::size_t rank(const Graph& g) { return inertia(g).rank(); }
std::size_t nullity(const Graph& g) { return inertia(g).nullity; }

}  // namespace siglab
