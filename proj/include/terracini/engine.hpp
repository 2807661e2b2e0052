#ifndef TERRACINI_ENGINE_HPP
#define TERRACINI_ENGINE_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "terracini/matrix.hpp"
#include "terracini/variety.hpp"

namespace terracini {

// Rows spanning the affine cone of the embedded tangent space at a chart
// point: the point vector followed by the n Jacobian rows. Rank n + 1 means
// the sample is smooth and the chart is immersive there; derived charts
// (joins, tangential projections) top out at image_dim + 1 instead.
template <class K> struct TangentFrame {
  std::vector<K> params;
  std::vector<K> ambient;
  Matrix<K> rows;
  std::size_t rank;
};

template <class K>
TangentFrame<K> tangent_frame(const ParamVariety<K> &X,
                              const std::vector<K> &params) {
  std::vector<K> ambient = X.eval(params);
  bool all_zero = true;
  for (const K &c : ambient)
    all_zero = all_zero && c.is_zero();
  if (all_zero)
    throw Error("tangent_frame: chart point maps to zero");
  Matrix<K> rows(X.n + 1, X.r + 1, X.coords[0].rep());
  rows.set_row(0, ambient);
  for (std::size_t i = 0; i < X.n; ++i)
    for (std::size_t c = 0; c <= X.r; ++c)
      rows(i + 1, c) = X.coords[c].diff(i).eval(params);
  TangentFrame<K> f{params, ambient, rows, 0};
  f.rank = f.rows.rank();
  return f;
}

// Frame of maximal rank found within the budget; stops as soon as
// `target_rank` (default: full rank n + 1) is reached. Rank can only drop on
// special points, so the maximum over samples is the generic value.
template <class F>
TangentFrame<typename F::Scalar>
best_frame(const F &field, const ParamVariety<typename F::Scalar> &X,
           Rng &rng, std::size_t target_rank = 0, int budget = 32) {
  using K = typename F::Scalar;
  if (target_rank == 0)
    target_rank = X.n + 1;
  std::optional<TangentFrame<K>> best;
  for (int i = 0; i < budget; ++i) {
    PointSample<K> p = random_point(field, X, rng);
    TangentFrame<K> f = tangent_frame(X, p.params);
    if (!best || f.rank > best->rank)
      best = f;
    if (best->rank >= target_rank)
      return *best;
  }
  if (!best)
    throw SampleError("best_frame: no usable sample on " + X.name);
  return *best;
}

// Like best_frame but the sample must reach full rank n + 1; a persistent
// rank drop means the chart is singular along the sampled locus.
template <class F>
TangentFrame<typename F::Scalar>
full_rank_frame(const F &field, const ParamVariety<typename F::Scalar> &X,
                Rng &rng, int budget = 32) {
  auto f = best_frame(field, X, rng, X.n + 1, budget);
  if (f.rank != X.n + 1)
    throw SampleError("full_rank_frame: rank " + std::to_string(f.rank) +
                      " after retries on " + X.name);
  return f;
}

// Dimension of the image of the chart map: generic frame rank minus one.
template <class F>
std::size_t image_dim(const F &field,
                      const ParamVariety<typename F::Scalar> &X, Rng &rng,
                      int trials = 3) {
  std::size_t best = 0;
  for (int i = 0; i < trials; ++i)
    best = std::max(best, best_frame(field, X, rng).rank);
  return best - 1;
}

// dim S(X) through Terracini: the span of two general tangent frames is the
// tangent frame of the secant variety.
template <class F>
std::size_t secant_dim(const F &field,
                       const ParamVariety<typename F::Scalar> &X, Rng &rng,
                       int trials = 3) {
  using K = typename F::Scalar;
  std::size_t best = 0;
  for (int i = 0; i < trials; ++i) {
    TangentFrame<K> f0 = full_rank_frame(field, X, rng);
    TangentFrame<K> f1 = full_rank_frame(field, X, rng);
    best = std::max(best, Matrix<K>::stacked(f0.rows, f1.rows).rank());
  }
  return best - 1;
}

// Independent route to dim S(X): the Jacobian rank of the abstract join
// chart of X with itself.
template <class F>
std::size_t secant_dim_join_oracle(const F &field,
                                   const ParamVariety<typename F::Scalar> &X,
                                   Rng &rng, int trials = 3) {
  auto J = join(X, X);
  std::size_t best = 0;
  for (int i = 0; i < trials; ++i) {
    PointSample<typename F::Scalar> p = random_point(field, J, rng);
    best = std::max(best, tangent_frame(J, p.params).rank);
  }
  return best - 1;
}

struct FibreDefect {
  std::size_t s;
  std::size_t f;
  std::size_t meet_rank; // rank of the affine-cone intersection
  bool consistent;       // meet_rank == f at a generic sample
};

// f = 2n + 1 - s, cross-checked against the rank of the intersection of two
// general tangent cones (the meet has projective dimension f - 1).
template <class F>
FibreDefect fibre_defect(const F &field,
                         const ParamVariety<typename F::Scalar> &X, Rng &rng,
                         int trials = 3) {
  using K = typename F::Scalar;
  std::size_t s = 0;
  std::size_t meet = X.r + 1;
  for (int i = 0; i < trials; ++i) {
    TangentFrame<K> f0 = full_rank_frame(field, X, rng);
    TangentFrame<K> f1 = full_rank_frame(field, X, rng);
    s = std::max(s, Matrix<K>::stacked(f0.rows, f1.rows).rank() - 1);
    meet = std::min(meet, row_space_meet(f0.rows, f1.rows).rank());
  }
  std::size_t f = 2 * X.n + 1 - s;
  return FibreDefect{s, f, meet, meet == f};
}

// The second fundamental form at a chart point: the coordinate Hessians
// contracted with a basis of the conormal space (functionals vanishing on
// the tangent frame), reduced to a basis. Quadrics act on the n chart
// directions; fibre_dim records how many of those directions are collapsed
// by the chart itself.
template <class K> struct QuadricSystem {
  std::vector<Matrix<K>> quadrics; // basis of the system, n x n symmetric
  std::size_t conormal_count;      // before basis extraction
  std::size_t fibre_dim;           // chart dim minus image dim at the sample
  std::size_t dim() const { return quadrics.size(); } // affine dimension
};

template <class K>
QuadricSystem<K> second_fundamental_form(const ParamVariety<K> &X,
                                         const TangentFrame<K> &frame) {
  if (frame.rank == 0)
    throw Error("second_fundamental_form: degenerate frame");
  K zero = zero_like(X.coords[0].rep());
  std::size_t n = X.n;
  // Hessians of every ambient coordinate
  std::vector<Matrix<K>> hessians;
  hessians.reserve(X.r + 1);
  for (std::size_t c = 0; c <= X.r; ++c) {
    Matrix<K> h(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) {
      MPoly<K> di = X.coords[c].diff(i);
      for (std::size_t j = i; j < n; ++j) {
        K v = di.diff(j).eval(frame.params);
        h(i, j) = v;
        h(j, i) = v;
      }
    }
    hessians.push_back(std::move(h));
  }
  std::vector<std::vector<K>> conormals = frame.rows.kernel_basis();
  std::vector<Matrix<K>> raw;
  for (const auto &w : conormals) {
    Matrix<K> m(n, n, zero);
    for (std::size_t c = 0; c <= X.r; ++c) {
      if (w[c].is_zero())
        continue;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          m(i, j) += w[c] * hessians[c](i, j);
    }
    raw.push_back(std::move(m));
  }
  // extract a basis of the span by flattening upper triangles
  QuadricSystem<K> out;
  out.conormal_count = raw.size();
  out.fibre_dim = n + 1 - frame.rank;
  if (raw.empty())
    return out;
  std::size_t flat = n * (n + 1) / 2;
  Matrix<K> coeff(raw.size(), flat, zero);
  for (std::size_t k = 0; k < raw.size(); ++k) {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j)
        coeff(k, idx++) = raw[k](i, j);
  }
  Matrix<K> basis = coeff.row_basis();
  for (std::size_t k = 0; k < basis.rows(); ++k) {
    Matrix<K> m(n, n, zero);
    std::size_t idx = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        m(i, j) = basis(k, idx);
        m(j, i) = basis(k, idx);
        ++idx;
      }
    out.quadrics.push_back(std::move(m));
  }
  return out;
}

// Linear dimension of the common kernel of all quadrics in the system
// (within the chart direction space).
template <class K> std::size_t common_kernel_dim(const QuadricSystem<K> &qs) {
  if (qs.quadrics.empty())
    throw Error("common_kernel_dim: direction count unknown for empty system");
  std::size_t n = qs.quadrics[0].rows();
  Matrix<K> stack(0, n, qs.quadrics[0].zero());
  for (const Matrix<K> &m : qs.quadrics)
    stack = Matrix<K>::stacked(stack, m);
  return n - stack.rank();
}

template <class K>
std::size_t combo_kernel_dim(const QuadricSystem<K> &qs,
                             const std::vector<K> &weights) {
  if (qs.quadrics.empty())
    throw Error("combo_kernel_dim: empty system");
  std::size_t n = qs.quadrics[0].rows();
  Matrix<K> combo(n, n, qs.quadrics[0].zero());
  for (std::size_t k = 0; k < qs.quadrics.size(); ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        combo(i, j) += weights[k] * qs.quadrics[k](i, j);
  return n - combo.rank();
}

// Tangential defect t(X): dimension of the general Gauss fibre, computed as
// the common kernel of the second fundamental form minus the chart fibre.
// A chart with an empty quadric system (a linear space) has t = n.
template <class F>
std::size_t tangential_defect(const F &field,
                              const ParamVariety<typename F::Scalar> &X,
                              Rng &rng, int trials = 3) {
  using K = typename F::Scalar;
  std::size_t best = X.n;
  for (int i = 0; i < trials; ++i) {
    TangentFrame<K> fr = best_frame(field, X, rng);
    QuadricSystem<K> qs = second_fundamental_form(X, fr);
    std::size_t kernel = qs.quadrics.empty() ? X.n : common_kernel_dim(qs);
    best = std::min(best, kernel - qs.fibre_dim);
  }
  return best;
}

// Dual defect d(X): kernel of a general member of the quadric system (the
// contact dimension of a general tangent hyperplane).
template <class F>
std::size_t dual_defect(const F &field,
                        const ParamVariety<typename F::Scalar> &X, Rng &rng,
                        int trials = 3) {
  using K = typename F::Scalar;
  std::size_t best = X.n;
  for (int i = 0; i < trials; ++i) {
    TangentFrame<K> fr = best_frame(field, X, rng);
    QuadricSystem<K> qs = second_fundamental_form(X, fr);
    std::size_t kernel;
    if (qs.quadrics.empty()) {
      kernel = X.n;
    } else {
      std::vector<K> weights;
      for (std::size_t k = 0; k < qs.quadrics.size(); ++k)
        weights.push_back(field.random(rng));
      kernel = combo_kernel_dim(qs, weights);
    }
    best = std::min(best, kernel - qs.fibre_dim);
  }
  return best;
}

// General tangential projection: X projected from the tangent frame at a
// general point, landing in P^(r - n - 1). The chart keeps the parameters
// of X; the image dimension must come out as n - f(X).
template <class F>
ParamVariety<typename F::Scalar>
tangential_projection(const F &field,
                      const ParamVariety<typename F::Scalar> &X, Rng &rng) {
  auto frame = full_rank_frame(field, X, rng);
  auto X1 = project(X, frame.rows);
  X1.name = X.name + "/tau";
  return X1;
}

// Projective dimension of the intersection of all general tangent spaces
// (-1 when empty): the vertex of the smallest cone containing X. Sampling
// stops once adding two more frames leaves the meet unchanged.
template <class F>
int cone_vertex(const F &field, const ParamVariety<typename F::Scalar> &X,
                Rng &rng) {
  using K = typename F::Scalar;
  Matrix<K> meet = full_rank_frame(field, X, rng).rows;
  int stable = 0;
  int max_samples = static_cast<int>(X.n) + 10;
  for (int i = 0; i < max_samples && stable < 2; ++i) {
    Matrix<K> next = full_rank_frame(field, X, rng).rows;
    Matrix<K> reduced = row_space_meet(meet, next);
    if (reduced.rank() == meet.rank())
      ++stable;
    else
      stable = 0;
    meet = reduced;
    if (meet.rank() == 0)
      return -1;
  }
  return static_cast<int>(meet.rank()) - 1;
}

// f(Y) for Y = X ∩ {h = 0}: tangent frames of the section are the meets of
// the X frames with the hyperplane, at points produced on the section.
inline std::size_t section_fibre_defect(const FpField &field,
                                        const ParamVariety<Fp> &X,
                                        const std::vector<Fp> &h, Rng &rng,
                                        int trials = 3, int budget = 32) {
  Matrix<Fp> hmat(1, X.r + 1, field.zero());
  hmat.set_row(0, h);
  Matrix<Fp> hspace =
      Matrix<Fp>::from_rows(hmat.kernel_basis(), field.zero());
  std::size_t s_best = 0;
  for (int trial = 0; trial < trials; ++trial) {
    Matrix<Fp> sec0(0, X.r + 1, field.zero()), sec1(0, X.r + 1, field.zero());
    for (int attempt = 0;; ++attempt) {
      if (attempt >= budget)
        throw SampleError("section_fibre_defect: no smooth section sample");
      PointSample<Fp> p0 = hyperplane_point(field, X, h, rng, budget);
      PointSample<Fp> p1 = hyperplane_point(field, X, h, rng, budget);
      TangentFrame<Fp> f0 = tangent_frame(X, p0.params);
      TangentFrame<Fp> f1 = tangent_frame(X, p1.params);
      if (f0.rank != X.n + 1 || f1.rank != X.n + 1)
        continue;
      sec0 = row_space_meet(f0.rows, hspace);
      sec1 = row_space_meet(f1.rows, hspace);
      // a generic hyperplane cuts each tangent cone in dimension n
      if (sec0.rank() != X.n || sec1.rank() != X.n)
        continue;
      break;
    }
    s_best = std::max(s_best, Matrix<Fp>::stacked(sec0, sec1).rank() - 1);
  }
  return 2 * (X.n - 1) + 1 - s_best;
}

// t(Y) for Y = X ∩ {h = 0}: the quadric system of X restricted to the
// directions tangent to the hyperplane.
inline std::size_t section_tangential_defect(const FpField &field,
                                             const ParamVariety<Fp> &X,
                                             const std::vector<Fp> &h,
                                             Rng &rng, int trials = 3,
                                             int budget = 32) {
  std::size_t best = X.n; // shrinks below
  for (int trial = 0; trial < trials; ++trial) {
    for (int attempt = 0;; ++attempt) {
      if (attempt >= budget)
        throw SampleError(
            "section_tangential_defect: no smooth section sample");
      PointSample<Fp> p = hyperplane_point(field, X, h, rng, budget);
      TangentFrame<Fp> fr = tangent_frame(X, p.params);
      if (fr.rank != X.n + 1)
        continue;
      // directions v with dh(J v) = 0
      Matrix<Fp> constraint(1, X.n, field.zero());
      for (std::size_t i = 0; i < X.n; ++i) {
        Fp acc = field.zero();
        for (std::size_t c = 0; c <= X.r; ++c)
          acc += fr.rows(i + 1, c) * h[c];
        constraint(0, i) = acc;
      }
      if (constraint.rank() == 0)
        continue; // tangent space inside the hyperplane: not generic
      Matrix<Fp> dirs =
          Matrix<Fp>::from_rows(constraint.kernel_basis(), field.zero());
      QuadricSystem<Fp> qs = second_fundamental_form(X, fr);
      std::size_t kernel;
      if (qs.quadrics.empty()) {
        kernel = X.n - 1;
      } else {
        // restrict each quadric to the section directions
        Matrix<Fp> basis = dirs.transposed(); // n x (n-1)
        Matrix<Fp> stack(0, X.n - 1, field.zero());
        for (const Matrix<Fp> &m : qs.quadrics) {
          Matrix<Fp> restricted = basis.transposed() * (m * basis);
          stack = Matrix<Fp>::stacked(stack, restricted);
        }
        kernel = (X.n - 1) - stack.rank();
      }
      best = std::min(best, kernel);
      break;
    }
  }
  return best;
}

} // namespace terracini

#endif // TERRACINI_ENGINE_HPP
