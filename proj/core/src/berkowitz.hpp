#pragma once

// Berkowitz characteristic polynomial of a 0/1 symmetric matrix given as
// neighbor masks, generic over the scalar ring.

#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "siglab/graph.hpp"

namespace siglab::detail {

struct Overflow : std::exception {};

// int64 with overflow trapping; throws Overflow so callers can redo the work
// in arbitrary precision.
struct Checked64 {
  std::int64_t v = 0;

  Checked64() = default;
  Checked64(std::int64_t x) : v(x) {}  // NOLINT(google-explicit-constructor)

  friend Checked64 operator+(Checked64 a, Checked64 b) {
    std::int64_t r;
    if (__builtin_add_overflow(a.v, b.v, &r)) throw Overflow{};
    return r;
  }
  friend Checked64 operator-(Checked64 a, Checked64 b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a.v, b.v, &r)) throw Overflow{};
    return r;
  }
  friend Checked64 operator*(Checked64 a, Checked64 b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a.v, b.v, &r)) throw Overflow{};
    return r;
  }
  Checked64& operator+=(Checked64 b) { return *this = *this + b; }
  Checked64 operator-() const { return Checked64{0} - *this; }
  int sign() const { return (v > 0) - (v < 0); }
};

// rows[i] restricted to the listed vertices. Returns c_0..c_n of det(xI - A)
// (coefficient of x^i at index i).
template <typename Scalar>
std::vector<Scalar> berkowitz(std::span<const VertexMask> rows, std::span<const Vertex> vertices) {
  const std::size_t n = vertices.size();
  // Local neighbor masks in 0..n-1 numbering.
  std::vector<std::uint64_t> local(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if ((rows[vertices[i]] >> vertices[j]) & 1U) local[i] |= std::uint64_t{1} << j;

  // poly holds coefficients highest degree first while growing.
  std::vector<Scalar> poly{Scalar{1}};
  std::vector<Scalar> vec, next, toeplitz;
  for (std::size_t k = 0; k < n; ++k) {
    // Leading block is vertices 0..k-1; new vertex k has zero diagonal.
    toeplitz.assign(k + 2, Scalar{0});
    toeplitz[0] = Scalar{1};
    vec.assign(k, Scalar{0});
    for (std::size_t i = 0; i < k; ++i)
      if ((local[k] >> i) & 1U) vec[i] = Scalar{1};
    const std::uint64_t prefix = k == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
    for (std::size_t j = 0; j < k; ++j) {
      // toeplitz[j+2] = -(R M^j C) with R = C = column k restricted to 0..k-1.
      Scalar dot{0};
      for (std::uint64_t m = local[k] & prefix; m; m &= m - 1) dot += vec[std::countr_zero(m)];
      toeplitz[j + 2] = -dot;
      if (j + 1 == k) break;
      next.assign(k, Scalar{0});
      for (std::size_t i = 0; i < k; ++i) {
        Scalar acc{0};
        for (std::uint64_t m = local[i] & prefix; m; m &= m - 1) acc += vec[std::countr_zero(m)];
        next[i] = acc;
      }
      vec.swap(next);
    }
    std::vector<Scalar> grown(k + 2, Scalar{0});
    for (std::size_t i = 0; i < k + 2; ++i) {
      Scalar acc{0};
      for (std::size_t j = 0; j <= i && j < k + 2; ++j) {
        if (i - j < poly.size()) acc += toeplitz[j] * poly[i - j];
      }
      grown[i] = acc;
    }
    poly.swap(grown);
  }
  return {poly.rbegin(), poly.rend()};
}

}  // namespace siglab::detail
