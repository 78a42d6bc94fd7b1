#include "picseq/bimodule/picard.hpp"

#include <sstream>

#include "picseq/error.hpp"

namespace picseq::bimodule {

using exactla::unit_vec;

namespace {

void require_over(const Bimodule& m, const AlgebraPtr& a, const char* what) {
  if (m.left != a || m.right != a) {
    throw Error(ErrorKind::IncompatibleAlgebras, std::string(what) + " is not a bimodule over the base algebra");
  }
}

void require_iso(const TensorProduct& t, const Mat& f, const AlgebraPtr& a, const char* what) {
  if (f.rows() != a->dim() || f.cols() != t.module.dim || !exactla::is_invertible(f)) {
    throw Error(ErrorKind::WitnessesInvalid, std::string(what) + " is not an isomorphism onto the base algebra");
  }
  if (!is_linear(t.module, regular(a), f, Linearity::Bilinear)) {
    throw Error(ErrorKind::WitnessesInvalid, std::string(what) + " is not bilinear");
  }
}

// Solves l(p_i ⊗ q_j) p_k = p_i r(q_j ⊗ p_k) for l.
Mat normalized_l(const Bimodule& P, const Bimodule& Q, const TensorProduct& qp, const TensorProduct& pq,
                 const Mat& r, int na) {
  const int prime = P.p();
  const int dp = P.dim;
  const int dq = Q.dim;
  const int nt = pq.module.dim;
  const int unknowns = na * nt;
  Mat sys(dp * dp * dq * dp, unknowns, prime);
  Vec rhs(static_cast<std::size_t>(sys.rows()), 0);
  int row = 0;
  for (int i = 0; i < dp; ++i) {
    for (int j = 0; j < dq; ++j) {
      Vec t = pq.pure_basis(i, j);
      for (int k = 0; k < dp; ++k) {
        Vec target = P.right_of(r * qp.pure_basis(j, k)).col(i);
        for (int out = 0; out < dp; ++out, ++row) {
          for (int c = 0; c < na; ++c) {
            Residue act = P.left_act[c](out, k);
            if (act == 0) continue;
            for (int s = 0; s < nt; ++s) {
              if (t[s] != 0) sys.set(row, c * nt + s, static_cast<long long>(act) * t[s]);
            }
          }
          rhs[row] = target[out];
        }
      }
    }
  }
  auto sol = exactla::solve(sys, rhs);
  if (!sol) throw Error(ErrorKind::CoherenceFailure, "no l satisfies l(p⊗q)p' = p r(q⊗p')");
  if (exactla::kernel(sys).dim() != 0) {
    throw Error(ErrorKind::CoherenceFailure, "l is not determined by r");
  }
  return Mat::reshape(*sol, na, nt, prime);
}

}  // namespace

PicardPair make_picard_pair(const Bimodule& p, const Bimodule& q, const Mat& r, const std::optional<Mat>& l) {
  AlgebraPtr a = p.left;
  require_over(p, a, "P");
  require_over(q, a, "Q");
  PicardPair pair;
  pair.base = a;
  pair.P = p;
  pair.Q = q;
  pair.qp = tensor_over(q, p);
  pair.pq = tensor_over(p, q);
  require_iso(pair.qp, r, a, "r");
  pair.r = r;
  pair.l = normalized_l(p, q, pair.qp, pair.pq, r, a->dim());
  require_iso(pair.pq, pair.l, a, "normalized l");
  if (l) {
    require_iso(pair.pq, *l, a, "l");
    pair.correction = pair.l * exactla::inverse(*l);
  } else {
    pair.correction = Mat::identity(a->dim(), a->p());
  }
  CoherenceReport rep = check_coherence(pair);
  if (!rep.ok()) {
    std::ostringstream os;
    os << "Picard witnesses are not coherent:";
    for (const auto& f : rep.failures) os << " " << f << ";";
    throw Error(ErrorKind::CoherenceFailure, os.str());
  }
  return pair;
}

PicardPair trivial_pair(const AlgebraPtr& a) {
  Bimodule reg = regular(a);
  TensorProduct t = tensor_over(reg, reg);
  Mat mult = left_action_map(t, reg);
  return make_picard_pair(reg, reg, mult, mult);
}

PicardPair swapped(const PicardPair& pair) {
  PicardPair s;
  s.base = pair.base;
  s.P = pair.Q;
  s.Q = pair.P;
  s.qp = pair.pq;
  s.pq = pair.qp;
  s.r = pair.l;
  s.l = pair.r;
  s.correction = Mat::identity(pair.base->dim(), pair.base->p());
  return s;
}

CoherenceReport check_coherence(const PicardPair& pr) {
  CoherenceReport rep;
  const Bimodule& P = pr.P;
  const Bimodule& Q = pr.Q;
  const int dp = P.dim;
  const int dq = Q.dim;
  auto note = [&](bool& flag, const std::string& what) {
    if (flag) rep.failures.push_back(what);
    flag = false;
  };
  for (int i = 0; i < dp && rep.triangle_left; ++i)
    for (int j = 0; j < dq; ++j)
      for (int k = 0; k < dp; ++k) {
        Vec lhs = P.left_of(pr.l * pr.pq.pure_basis(i, j)).col(k);
        Vec rhs = P.right_of(pr.r * pr.qp.pure_basis(j, k)).col(i);
        if (lhs != rhs) note(rep.triangle_left, "l(p⊗q)p' != p r(q⊗p')");
      }
  for (int j = 0; j < dq && rep.triangle_right; ++j)
    for (int i = 0; i < dp; ++i)
      for (int k = 0; k < dq; ++k) {
        Vec lhs = Q.left_of(pr.r * pr.qp.pure_basis(j, i)).col(k);
        Vec rhs = Q.right_of(pr.l * pr.pq.pure_basis(i, k)).col(j);
        if (lhs != rhs) note(rep.triangle_right, "r(q⊗p)q' != q l(p⊗q')");
      }
  // p1 r(q1 ⊗ l(p2⊗q2) p3) == l(p1 ⊗ r(q1⊗p2) q2) p3
  for (int p1 = 0; p1 < dp && rep.pentagon_left; ++p1)
    for (int q1 = 0; q1 < dq; ++q1)
      for (int p2 = 0; p2 < dp; ++p2) {
        Vec r12 = pr.r * pr.qp.pure_basis(q1, p2);
        for (int q2 = 0; q2 < dq; ++q2) {
          Mat l22 = P.left_of(pr.l * pr.pq.pure_basis(p2, q2));
          Vec q2moved = Q.left_of(r12).col(q2);
          Mat outer = P.left_of(pr.l * pr.pq.pure(unit_vec(dp, p1), q2moved));
          for (int p3 = 0; p3 < dp; ++p3) {
            Vec lhs = P.right_of(pr.r_of(unit_vec(dq, q1), l22.col(p3))).col(p1);
            Vec rhs = outer.col(p3);
            if (lhs != rhs) note(rep.pentagon_left, "five-fold identity fails on P⊗Q⊗P⊗Q⊗P");
          }
        }
      }
  // r(q1 ⊗ l(p1⊗q2) p2) q3 == r(q1⊗p1) q2 l(p2⊗q3)
  for (int q1 = 0; q1 < dq && rep.pentagon_right; ++q1)
    for (int p1 = 0; p1 < dp; ++p1) {
      Mat r11 = Q.left_of(pr.r * pr.qp.pure_basis(q1, p1));
      for (int q2 = 0; q2 < dq; ++q2) {
        Mat l12 = P.left_of(pr.l * pr.pq.pure_basis(p1, q2));
        for (int p2 = 0; p2 < dp; ++p2) {
          Mat inner = Q.left_of(pr.r_of(unit_vec(dq, q1), l12.col(p2)));
          for (int q3 = 0; q3 < dq; ++q3) {
            Vec lhs = inner.col(q3);
            Vec rhs = Q.right_of(pr.l * pr.pq.pure_basis(p2, q3)) * r11.col(q2);
            if (lhs != rhs) note(rep.pentagon_right, "five-fold identity fails on Q⊗P⊗Q⊗P⊗Q");
          }
        }
      }
    }
  return rep;
}

TensorToHom tensor_to_hom(const PicardPair& pr, const Bimodule& n) {
  const AlgebraPtr& a = pr.base;
  if (n.right != a) throw Error(ErrorKind::IncompatibleAlgebras, "N is not a right module over the base algebra");
  const Bimodule& P = pr.P;
  const Bimodule& Q = pr.Q;
  const int prime = a->p();
  TensorToHom out;
  out.nq = tensor_over(n, Q);
  out.hom = unital_hom_module(P, n);
  Mat rinv = exactla::inverse(pr.r);
  const auto& units = a->local_units();

  auto fixes = [&](const Vec& u, int na, int qb, int pk) {
    if (n.right_of(u).col(na) != unit_vec(n.dim, na)) return false;
    if (Q.left_of(u).col(qb) != unit_vec(Q.dim, qb) || Q.right_of(u).col(qb) != unit_vec(Q.dim, qb)) return false;
    if (P.left_of(u).col(pk) != unit_vec(P.dim, pk) || P.right_of(u).col(pk) != unit_vec(P.dim, pk)) return false;
    return true;
  };

  Mat flat(out.hom.rows * out.hom.cols, n.dim * Q.dim, prime);
  for (int na = 0; na < n.dim; ++na) {
    for (int qb = 0; qb < Q.dim; ++qb) {
      Mat f(n.dim, P.dim, prime);
      for (int pk = 0; pk < P.dim; ++pk) {
        const Vec* e = nullptr;
        for (const Vec& u : units) {
          if (fixes(u, na, qb, pk)) {
            e = &u;
            break;
          }
        }
        if (e == nullptr) throw Error(ErrorKind::Validation, "no common local unit for n, q, p");
        // r^{-1}(e) as a combination of basis tensors q_i ⊗ p_j
        Vec kronecker = pr.qp.section * (rinv * *e);
        Vec value = exactla::zero_vec(n.dim);
        for (int i = 0; i < Q.dim; ++i) {
          for (int j = 0; j < P.dim; ++j) {
            Residue c = kronecker[i * P.dim + j];
            if (c == 0) continue;
            Vec moved_q = Q.right_of(pr.l * pr.pq.pure_basis(j, qb)).col(i);
            Vec rv = pr.r_of(moved_q, unit_vec(P.dim, pk));
            value = exactla::add(value, exactla::scaled(n.right_of(rv).col(na), c, prime), prime);
          }
        }
        f.set_col(pk, value);
      }
      Vec v = f.data();
      flat.set_col(na * Q.dim + qb, v);
    }
  }
  Mat induced = descend(flat, out.nq);
  out.map = Mat(out.hom.module.dim, out.nq.module.dim, prime);
  for (int c = 0; c < induced.cols(); ++c) {
    auto coords = out.hom.space.coordinates(induced.col(c));
    if (!coords) throw Error(ErrorKind::WitnessesInvalid, "tensor_to_hom lands outside the unital hom part");
    out.map.set_col(c, *coords);
  }
  if (!exactla::is_invertible(out.map)) {
    throw Error(ErrorKind::WitnessesInvalid, "tensor_to_hom is not bijective");
  }
  return out;
}

Subspace product_span(const algebra::Algebra& s, const Subspace& x, const Subspace& y) {
  std::vector<Vec> vs;
  for (const Vec& a : x.basis_vectors())
    for (const Vec& b : y.basis_vectors()) vs.push_back(s.multiply(a, b));
  return Subspace::span(vs, s.dim(), s.p());
}

MultiplicationIsos multiplication_isos(const ExtensionModules& v, const Subspace& x, const Subspace& y) {
  const auto& S = *v.ext.S;
  const int prime = S.p();
  if (product_span(S, x, y) != v.ext.r_space || product_span(S, y, x) != v.ext.r_space) {
    throw Error(ErrorKind::NotInvertiblePair, "XY = YX = R does not hold");
  }
  MultiplicationIsos m;
  m.x_rr = sub_bimodule(v.s_rr, x);
  m.y_rr = sub_bimodule(v.s_rr, y);
  std::vector<Vec> xb = x.basis_vectors();
  std::vector<Vec> yb = y.basis_vectors();
  const int ns = S.dim();
  m.s_x = tensor_over(v.s_sr, m.x_rr);
  m.x_s = tensor_over(m.x_rr, v.s_rs);
  m.x_y = tensor_over(m.x_rr, m.y_rr);
  m.left_mult = descend_from_basis(m.s_x, ns, [&](int a, int b) { return S.multiply(unit_vec(ns, a), xb[b]); });
  m.right_mult = descend_from_basis(m.x_s, ns, [&](int b, int a) { return S.multiply(xb[b], unit_vec(ns, a)); });

  // products x_i y_j, used to write elements of R as sums of products
  Mat prods(ns, x.dim() * y.dim(), prime);
  for (int i = 0; i < x.dim(); ++i)
    for (int j = 0; j < y.dim(); ++j) prods.set_col(i * y.dim() + j, S.multiply(xb[i], yb[j]));
  const int nr = v.ext.r_space.dim();
  m.unit_map = Mat(m.x_y.module.dim, nr, prime);
  for (int k = 0; k < nr; ++k) {
    auto c = exactla::solve(prods, v.ext.inclusion.col(k));
    if (!c) throw Error(ErrorKind::NotInvertiblePair, "element of R is not a sum of products xy");
    m.unit_map.set_col(k, m.x_y.projection * *c);
  }

  m.right_mult_inverse = Mat(m.x_s.module.dim, ns, prime);
  for (int k = 0; k < ns; ++k) {
    Vec s = unit_vec(ns, k);
    std::optional<Vec> first;
    for (int ui : algebra::units_for(S, {s})) {
      Vec e_r = v.ext.to_r(S.local_units()[ui]);
      Vec kronecker = m.x_y.section * (m.unit_map * e_r);
      Vec value = exactla::zero_vec(m.x_s.module.dim);
      for (int i = 0; i < x.dim(); ++i) {
        for (int j = 0; j < y.dim(); ++j) {
          Residue c = kronecker[i * y.dim() + j];
          if (c == 0) continue;
          Vec t = m.x_s.pure(unit_vec(x.dim(), i), S.multiply(yb[j], s));
          value = exactla::add(value, exactla::scaled(t, c, prime), prime);
        }
      }
      if (!first) {
        first = value;
        m.right_mult_inverse.set_col(k, value);
      } else if (*first != value) {
        m.unit_choice_independent = false;
      }
    }
    if (!first) throw Error(ErrorKind::Validation, "no local unit fixes a basis element of S");
  }
  m.left_invertible = exactla::is_invertible(m.left_mult);
  m.right_invertible = exactla::is_invertible(m.right_mult);
  m.unit_invertible = exactla::is_invertible(m.unit_map);
  m.inverse_matches = m.right_mult.rows() == m.right_mult.cols() &&
                      m.right_mult * m.right_mult_inverse == Mat::identity(ns, prime) &&
                      m.right_mult_inverse * m.right_mult == Mat::identity(m.x_s.module.dim, prime);
  return m;
}

}  // namespace picseq::bimodule
