#include "picseq/bimodule/hom.hpp"

#include "picseq/error.hpp"

namespace picseq::bimodule {

using exactla::kron;

namespace {

// Rows expressing F a = b F for F of shape (rows x cols), row-major vec:
// vec(F a) = (I ⊗ a^T) vec F, vec(b F) = (b ⊗ I) vec F.
Mat intertwining_block(const Mat& a, const Mat& b) {
  int p = a.p();
  return kron(Mat::identity(b.rows(), p), a.transpose()) - kron(b, Mat::identity(a.rows(), p));
}

}  // namespace

Mat unflatten(const Vec& v, int rows, int cols, int p) { return Mat::reshape(v, rows, cols, p); }

Subspace hom_space(const Bimodule& m, const Bimodule& n, Linearity lin) {
  require_compatible(m, n, lin);
  const int p = m.p();
  const int unknowns = n.dim * m.dim;
  std::vector<Mat> blocks;
  if (lin != Linearity::RightOnly) {
    for (std::size_t i = 0; i < m.left_act.size(); ++i) {
      blocks.push_back(intertwining_block(m.left_act[i], n.left_act[i]));
    }
  }
  if (lin != Linearity::LeftOnly) {
    for (std::size_t i = 0; i < m.right_act.size(); ++i) {
      blocks.push_back(intertwining_block(m.right_act[i], n.right_act[i]));
    }
  }
  if (blocks.empty()) return Subspace::whole(unknowns, p);
  return exactla::kernel(exactla::vstack(blocks, unknowns, p));
}

std::vector<Mat> hom_basis(const Bimodule& m, const Bimodule& n, Linearity lin) {
  std::vector<Mat> out;
  for (const Vec& v : hom_space(m, n, lin).basis_vectors()) out.push_back(unflatten(v, n.dim, m.dim, m.p()));
  return out;
}

std::optional<Mat> first_invertible(const Subspace& maps, int n, std::uint64_t limit) {
  if (maps.ambient() != n * n) throw Error(ErrorKind::DimensionMismatch, "first_invertible: not square maps");
  if (n == 0) return Mat(0, 0, maps.p());
  // Quick rank obstruction: the span of all maps must be able to reach rank n.
  if (maps.dim() == 0) return std::nullopt;
  if (exactla::element_count(maps) > limit) {
    throw Error(ErrorKind::SearchTooLarge, "hom space of dimension " + std::to_string(maps.dim()) +
                                               " is too large for exhaustive search");
  }
  Vec c = exactla::zero_vec(maps.dim());
  while (exactla::next_coordinates(c, maps.p())) {
    Mat f = unflatten(maps.from_coordinates(c), n, n, maps.p());
    if (exactla::is_invertible(f)) return f;
  }
  return std::nullopt;
}

std::optional<Mat> iso_search(const Bimodule& m, const Bimodule& n, Linearity lin, std::uint64_t limit) {
  require_compatible(m, n, lin);
  if (m.dim != n.dim) return std::nullopt;
  return first_invertible(hom_space(m, n, lin), m.dim, limit);
}

Mat HomModule::as_matrix(const Vec& coords) const {
  return unflatten(space.from_coordinates(coords), rows, cols, space.p());
}

std::optional<Vec> HomModule::coordinates(const Mat& f) const {
  if (f.rows() != rows || f.cols() != cols) return std::nullopt;
  return space.coordinates(f.data());
}

HomModule right_hom_module(const Bimodule& p, const Bimodule& n) {
  HomModule h;
  h.space = hom_space(p, n, Linearity::RightOnly);
  h.rows = n.dim;
  h.cols = p.dim;
  const int prime = p.p();
  Bimodule& m = h.module;
  m.left = n.left;
  m.right = p.left;
  m.dim = h.space.dim();
  auto induced = [&](auto&& apply) {
    Mat out(m.dim, m.dim, prime);
    for (int c = 0; c < m.dim; ++c) {
      Mat f = h.as_matrix(exactla::unit_vec(m.dim, c));
      auto coords = h.coordinates(apply(f));
      if (!coords) throw Error(ErrorKind::Internal, "hom module is not closed under the induced action");
      out.set_col(c, *coords);
    }
    return out;
  };
  for (const Mat& a : n.left_act) m.left_act.push_back(induced([&](const Mat& f) { return a * f; }));
  for (const Mat& b : p.left_act) m.right_act.push_back(induced([&](const Mat& f) { return f * b; }));
  return h;
}

HomModule unital_hom_module(const Bimodule& p, const Bimodule& n) {
  HomModule full = right_hom_module(p, n);
  Subspace part = unital_part(full.module);
  HomModule h;
  h.rows = full.rows;
  h.cols = full.cols;
  std::vector<Vec> flat;
  for (const Vec& c : part.basis_vectors()) flat.push_back(full.space.from_coordinates(c));
  h.space = Subspace::span(flat, full.space.ambient(), full.space.p());
  // Re-express the restricted actions in the coordinates of h.space.
  h.module.left = full.module.left;
  h.module.right = full.module.right;
  h.module.dim = h.space.dim();
  auto induced = [&](auto&& apply) {
    Mat out(h.module.dim, h.module.dim, full.space.p());
    for (int c = 0; c < h.module.dim; ++c) {
      auto coords = h.coordinates(apply(h.as_matrix(exactla::unit_vec(h.module.dim, c))));
      if (!coords) throw Error(ErrorKind::Internal, "unital part of hom module is not a sub-bimodule");
      out.set_col(c, *coords);
    }
    return out;
  };
  for (const Mat& a : n.left_act) h.module.left_act.push_back(induced([&](const Mat& f) { return a * f; }));
  for (const Mat& b : p.left_act) h.module.right_act.push_back(induced([&](const Mat& f) { return f * b; }));
  return h;
}

}  // namespace picseq::bimodule
