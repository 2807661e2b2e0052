#ifndef TERRACINI_REPORT_HPP
#define TERRACINI_REPORT_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "terracini/engine.hpp"
#include "terracini/fp.hpp"
#include "terracini/rat.hpp"

namespace terracini {

struct EngineOptions {
  std::uint64_t seed = 0;
  int primes = 3; // independent 62-bit primes for consensus
  int trials = 3; // samples per invariant per field
  bool rational = false;
  int budget = 32;
};

// Field-independent description of a variety: built fresh over every prime
// so that consensus runs see genuinely independent reductions.
struct VarietyRecipe {
  std::function<ParamVariety<Fp>(const FpField &)> build_fp;
  std::function<ParamVariety<Rat>(const RatField &)> build_rat;
};

template <class Fn> VarietyRecipe make_recipe(Fn fn) {
  VarietyRecipe r;
  r.build_fp = [fn](const FpField &f) { return fn(f); };
  r.build_rat = [fn](const RatField &f) { return fn(f); };
  return r;
}

struct InvariantReport {
  std::string input_name;
  int n = 0, r = 0;
  int s = -1, sigma = -1, delta = -1, f = -1;
  int t = -1, d = -1;
  int ii_dim = -1; // projective dimension of the second fundamental form
  int gamma = -1, epsilon = -1, theta_formula = -1, theta_direct = -1;
  int species = -1;
  bool is_cone = false;
  int vertex_dim = -1;
  bool defective = false;
  bool consistent = true;
  std::vector<std::pair<std::string, bool>> checks;
  std::vector<std::string> flags;
  int trials = 0;
  std::vector<std::uint64_t> primes_used;
  std::uint64_t seed = 0;
  std::string field_name;
  std::set<std::string> tags;
  std::map<std::string, int> expected;
};

namespace detail {

struct SffSample {
  int t = -1;
  int d = -1;
  int ii_affine = -1;
  int achieved_rank = -1;
};

// t, d and the affine dimension of the quadric system, sampled together.
// Kernels only inflate on special points, so the minimum over trials is the
// generic value; ranks only drop, so the maximum is.
template <class F>
SffSample sff_sample(const F &field,
                     const ParamVariety<typename F::Scalar> &X, Rng &rng,
                     int trials, std::size_t target_rank, int budget) {
  using K = typename F::Scalar;
  SffSample out;
  for (int trial = 0; trial < trials; ++trial) {
    TangentFrame<K> fr = best_frame(field, X, rng, target_rank, budget);
    QuadricSystem<K> qs = second_fundamental_form(X, fr);
    std::size_t kernel_all, kernel_one;
    if (qs.quadrics.empty()) {
      kernel_all = kernel_one = X.n;
    } else {
      kernel_all = common_kernel_dim(qs);
      std::vector<K> weights;
      for (std::size_t k = 0; k < qs.quadrics.size(); ++k)
        weights.push_back(field.random(rng));
      kernel_one = combo_kernel_dim(qs, weights);
    }
    int t_trial = static_cast<int>(kernel_all - qs.fibre_dim);
    int d_trial = static_cast<int>(kernel_one - qs.fibre_dim);
    out.t = out.t < 0 ? t_trial : std::min(out.t, t_trial);
    out.d = out.d < 0 ? d_trial : std::min(out.d, d_trial);
    out.ii_affine = std::max(out.ii_affine, static_cast<int>(qs.dim()));
    out.achieved_rank =
        std::max(out.achieved_rank, static_cast<int>(fr.rank));
  }
  return out;
}

struct FieldValues {
  int n = 0, r = 0;
  int s = -1, s_join = -1;
  bool meet_ok = true;
  int ii_dim = -1;
  int t = -1, d = -1;
  int vertex = -1;
  int gamma = -1, epsilon = -1;
  int theta_formula = -1, theta_direct = -1;
  bool x1_dim_ok = true;

  bool operator==(const FieldValues &o) const {
    return n == o.n && r == o.r && s == o.s && s_join == o.s_join &&
           meet_ok == o.meet_ok && ii_dim == o.ii_dim && t == o.t &&
           d == o.d && vertex == o.vertex && gamma == o.gamma &&
           epsilon == o.epsilon && theta_formula == o.theta_formula &&
           theta_direct == o.theta_direct && x1_dim_ok == o.x1_dim_ok;
  }
};

template <class F>
FieldValues field_values(const F &field,
                         const ParamVariety<typename F::Scalar> &X, Rng &rng,
                         const EngineOptions &opt) {
  FieldValues v;
  v.n = static_cast<int>(X.n);
  v.r = static_cast<int>(X.r);
  FibreDefect fd = fibre_defect(field, X, rng, opt.trials);
  v.s = static_cast<int>(fd.s);
  v.meet_ok = fd.consistent;
  v.s_join = static_cast<int>(
      secant_dim_join_oracle(field, X, rng, opt.trials));
  SffSample own = sff_sample(field, X, rng, opt.trials, X.n + 1, opt.budget);
  v.t = own.t;
  v.d = own.d;
  v.ii_dim = own.ii_affine - 1;
  v.vertex = cone_vertex(field, X, rng);
  int sigma = std::min(v.r, 2 * v.n + 1);
  int delta = sigma - v.s;
  int f = 2 * v.n + 1 - v.s;
  if (delta > 0) {
    int gamma = -1, epsilon = -1;
    bool dims_ok = true;
    for (int trial = 0; trial < opt.trials; ++trial) {
      auto X1 = tangential_projection(field, X, rng);
      std::size_t target = X.n - f + 1;
      SffSample s1 = sff_sample(field, X1, rng, 1, target, opt.budget);
      dims_ok = dims_ok && s1.achieved_rank == static_cast<int>(target);
      int g_trial = f + s1.t, e_trial = f + s1.d;
      gamma = gamma < 0 ? g_trial : std::min(gamma, g_trial);
      epsilon = epsilon < 0 ? e_trial : std::min(epsilon, e_trial);
    }
    v.gamma = gamma;
    v.epsilon = epsilon;
    v.x1_dim_ok = dims_ok;
    v.theta_formula = 2 * gamma + 1 - f;
    if (v.s < v.r) {
      auto J = join(X, X);
      SffSample sj = sff_sample(field, J, rng, opt.trials,
                                static_cast<std::size_t>(v.s) + 1, opt.budget);
      v.theta_direct = sj.t;
    }
  }
  return v;
}

} // namespace detail

// All invariants of a variety with multi-prime (or rational) consensus.
// Oracle disagreements and consensus failures are flagged in the report,
// never silently resolved.
inline InvariantReport full_report(const std::string &name,
                                   const VarietyRecipe &recipe,
                                   const EngineOptions &opt) {
  InvariantReport rep;
  rep.input_name = name;
  rep.seed = opt.seed;
  rep.trials = opt.trials;

  Rng master(opt.seed);
  Rng prime_rng = master.fork();
  std::vector<detail::FieldValues> per_field;
  if (opt.rational) {
    rep.field_name = "rational";
    RatField field;
    Rng rng = master.fork();
    ParamVariety<Rat> X = recipe.build_rat(field);
    rep.tags = X.tags;
    rep.expected = X.expected;
    try {
      per_field.push_back(detail::field_values(field, X, rng, opt));
      if (X.claimed_vertex_dim >= 0 &&
          X.claimed_vertex_dim != per_field.back().vertex)
        rep.flags.push_back("vertex differs from construction");
    } catch (const SampleError &e) {
      rep.flags.push_back(std::string("sampling: ") + e.what());
    }
  } else {
    rep.field_name = "modp";
    for (int i = 0; i < opt.primes; ++i)
      rep.primes_used.push_back(random_prime62(prime_rng));
    for (std::uint64_t p : rep.primes_used) {
      FpField field(p);
      Rng rng = master.fork();
      ParamVariety<Fp> X = recipe.build_fp(field);
      rep.tags = X.tags;
      rep.expected = X.expected;
      try {
        per_field.push_back(detail::field_values(field, X, rng, opt));
        if (X.claimed_vertex_dim >= 0 &&
            X.claimed_vertex_dim != per_field.back().vertex)
          rep.flags.push_back("vertex differs from construction at p=" +
                              std::to_string(p));
      } catch (const SampleError &e) {
        rep.flags.push_back(std::string("sampling: ") + e.what());
      }
    }
  }
  if (per_field.empty()) {
    rep.consistent = false;
    rep.flags.push_back("no field pass completed");
    return rep;
  }

  bool consensus = true;
  for (std::size_t i = 1; i < per_field.size(); ++i)
    consensus = consensus && per_field[i] == per_field[0];
  const detail::FieldValues &v = per_field.back();

  rep.n = v.n;
  rep.r = v.r;
  rep.s = v.s;
  rep.sigma = std::min(v.r, 2 * v.n + 1);
  rep.delta = rep.sigma - v.s;
  rep.f = 2 * v.n + 1 - v.s;
  rep.t = v.t;
  rep.d = v.d;
  rep.ii_dim = v.ii_dim;
  rep.gamma = v.gamma;
  rep.epsilon = v.epsilon;
  rep.theta_formula = v.theta_formula;
  rep.theta_direct = v.theta_direct;
  rep.is_cone = v.vertex >= 0;
  rep.vertex_dim = v.vertex;
  rep.defective = rep.delta > 0;
  rep.species = rep.defective && v.gamma >= 0 ? rep.n - v.gamma : -1;

  rep.checks.emplace_back("secant-oracle", v.s == v.s_join);
  rep.checks.emplace_back("fibre-meet", v.meet_ok);
  rep.checks.emplace_back("tangential-image", v.x1_dim_ok);
  if (v.theta_direct >= 0)
    rep.checks.emplace_back("theta-direct", v.theta_direct == v.theta_formula);
  rep.checks.emplace_back("prime-consensus", consensus);
  if (!rep.expected.empty()) {
    bool pinned_ok = true;
    auto probe = [&](const char *key, int actual) {
      auto it = rep.expected.find(key);
      if (it != rep.expected.end() && it->second != actual)
        pinned_ok = false;
    };
    probe("s", rep.s);
    probe("delta", rep.delta);
    probe("f", rep.f);
    probe("t", rep.t);
    probe("d", rep.d);
    probe("gamma", rep.gamma);
    probe("epsilon", rep.epsilon);
    probe("theta", rep.theta_formula);
    probe("species", rep.species);
    probe("vertex", rep.vertex_dim);
    rep.checks.emplace_back("pinned-regression", pinned_ok);
  }
  for (const auto &[check, ok] : rep.checks)
    if (!ok) {
      rep.consistent = false;
      rep.flags.push_back("check failed: " + check);
    }
  return rep;
}

} // namespace terracini

#endif // TERRACINI_REPORT_HPP
