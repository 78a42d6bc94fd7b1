#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "picseq/bimodule/bimodule.hpp"

namespace picseq::bimodule {

/// Maps m -> n with the requested linearity, as a subspace of row-major
/// flattened (n.dim x m.dim) matrices.
Subspace hom_space(const Bimodule& m, const Bimodule& n, Linearity lin);

/// The basis of hom_space as matrices.
std::vector<Mat> hom_basis(const Bimodule& m, const Bimodule& n, Linearity lin);

Mat unflatten(const Vec& v, int rows, int cols, int p);

inline constexpr std::uint64_t kDefaultSearchLimit = std::uint64_t{1} << 22;

/// First invertible element of a space of flattened square matrices, in
/// lexicographic order of coordinates. Throws Error{SearchTooLarge} above limit.
std::optional<Mat> first_invertible(const Subspace& maps, int n, std::uint64_t limit = kDefaultSearchLimit);

/// An invertible intertwiner m -> n, if one exists.
std::optional<Mat> iso_search(const Bimodule& m, const Bimodule& n, Linearity lin,
                              std::uint64_t limit = kDefaultSearchLimit);

/// Hom_A(P, N) for right-linear maps over A = P.right = N.right, as a
/// bimodule over (N.left, P.left): (a f)(x) = a f(x), (f b)(x) = f(b x).
/// `space` holds the flattened maps; module coordinates refer to its basis.
struct HomModule {
  Bimodule module;
  Subspace space;
  int rows = 0;  // N.dim
  int cols = 0;  // P.dim

  Mat as_matrix(const Vec& coords) const;
  std::optional<Vec> coordinates(const Mat& f) const;
};

HomModule right_hom_module(const Bimodule& p, const Bimodule& n);

/// Restriction of a HomModule to its unital part (Hom_A(P,N)A), keeping the
/// flattened-map view.
HomModule unital_hom_module(const Bimodule& p, const Bimodule& n);

}  // namespace picseq::bimodule
