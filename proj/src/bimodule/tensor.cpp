#include "picseq/bimodule/tensor.hpp"

#include "picseq/error.hpp"

namespace picseq::bimodule {

using exactla::kron;

Vec TensorProduct::pure(const Vec& x, const Vec& y) const {
  Vec k(static_cast<std::size_t>(dm * dn), 0);
  int p = projection.p();
  for (int i = 0; i < dm; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < dn; ++j) {
      k[i * dn + j] = exactla::reduce(static_cast<std::int64_t>(x[i]) * y[j], p);
    }
  }
  return projection * k;
}

Vec TensorProduct::pure_basis(int i, int j) const { return projection.col(i * dn + j); }

std::pair<int, int> TensorProduct::representative(int k) const {
  for (int r = 0; r < section.rows(); ++r) {
    if (section(r, k) != 0) return {r / dn, r % dn};
  }
  throw Error(ErrorKind::Internal, "tensor section column is zero");
}

TensorProduct tensor_over(const Bimodule& m, const Bimodule& n) {
  if (m.right != n.left) {
    throw Error(ErrorKind::IncompatibleAlgebras, "tensor product: right algebra of m differs from left algebra of n");
  }
  const int p = m.p();
  const int dm = m.dim;
  const int dn = n.dim;
  const auto& A = *m.right;
  Mat im = Mat::identity(dm, p);
  Mat in = Mat::identity(dn, p);
  std::vector<Mat> blocks;
  for (int a = 0; a < A.dim(); ++a) {
    blocks.push_back(kron(m.right_act[a], in) - kron(im, n.left_act[a]));
  }
  Mat all = blocks.empty() ? Mat(dm * dn, 0, p) : exactla::hstack(blocks, dm * dn, p);
  TensorProduct t;
  t.dm = dm;
  t.dn = dn;
  t.relations = exactla::image(all);
  exactla::Quotient q = exactla::quotient_with_section(t.relations);
  t.projection = q.projection;
  t.section = q.section;

  Bimodule& out = t.module;
  out.left = m.left;
  out.right = n.right;
  out.dim = q.dim;
  for (const Mat& a : m.left_act) out.left_act.push_back(q.projection * kron(a, in) * q.section);
  for (const Mat& b : n.right_act) out.right_act.push_back(q.projection * kron(im, b) * q.section);
  return t;
}

Mat descend(const Mat& f, const TensorProduct& t) {
  if (f.cols() != t.dm * t.dn) throw Error(ErrorKind::DimensionMismatch, "descend: map does not start at the Kronecker space");
  if (!(f * t.relations.embedding()).is_zero()) {
    throw Error(ErrorKind::NotBilinear, "map is not balanced over the tensor base");
  }
  return f * t.section;
}

Mat descend_from_basis(const TensorProduct& t, int target_dim, const std::function<Vec(int, int)>& value) {
  Mat f(target_dim, t.dm * t.dn, t.projection.p());
  for (int i = 0; i < t.dm; ++i) {
    for (int j = 0; j < t.dn; ++j) f.set_col(i * t.dn + j, value(i, j));
  }
  return descend(f, t);
}

Mat tensor_maps(const TensorProduct& t1, const TensorProduct& t2, const Mat& f, const Mat& g) {
  if (f.cols() != t1.dm || g.cols() != t1.dn || f.rows() != t2.dm || g.rows() != t2.dn) {
    throw Error(ErrorKind::DimensionMismatch, "tensor_maps shapes");
  }
  return descend(t2.projection * kron(f, g), t1);
}

Mat left_action_map(const TensorProduct& t, const Bimodule& n) {
  return descend_from_basis(t, n.dim, [&](int a, int j) { return n.left_act[a].col(j); });
}

Mat right_action_map(const TensorProduct& t, const Bimodule& m) {
  return descend_from_basis(t, m.dim, [&](int i, int a) { return m.right_act[a].col(i); });
}

}  // namespace picseq::bimodule
