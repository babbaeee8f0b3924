#include "qinv/stretch.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>

#include "qinv/reptheory.hpp"
#include "qinv/span.hpp"

namespace qinv {

EpsNetwork random_eps_network(int q, int d, std::uint64_t seed) {
  if (d <= 0 || d % 2) throw std::invalid_argument("random_eps_network: degree must be even and positive");
  std::mt19937_64 rng(seed);
  std::vector<EpsSlot> slots(static_cast<std::size_t>(q) * d);
  std::vector<int> perm(d);
  int label = 0;
  for (int c = 0; c < q; ++c) {
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    for (int k = 0; k < d; k += 2) {
      ++label;
      bool flip = rng() & 1;
      slots[perm[k] * q + c] = {label, flip};
      slots[perm[k + 1] * q + c] = {label, !flip};
    }
  }
  return EpsNetwork(q, d, std::move(slots));
}

namespace {

using Mat = Eigen::MatrixXcd;

// Orthonormal basis of the row space, rows scaled to unit norm first.
Mat row_space(Mat a, double tol) {
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    double n = a.row(r).norm();
    if (n > 0) a.row(r) /= n;
  }
  Eigen::BDCSVD<Mat> svd(a, Eigen::ComputeThinV);
  const auto& s = svd.singularValues();
  Eigen::Index r = 0;
  while (r < s.size() && s(0) > 0 && s(r) > tol * s(0)) ++r;
  return svd.matrixV().leftCols(r).adjoint();
}

}  // namespace

std::vector<GeneratorCount> generator_counts(const StretchOptions& opt) {
  const int q = opt.qubits;
  std::map<int, std::size_t> expected;
  std::size_t widest = 0;
  for (int d = 2; d <= opt.max_degree; d += 2) {
    expected[d] = dim_sl_invariants(2, q, d).get_ui();
    widest = std::max(widest, expected[d]);
  }
  const std::size_t cols = widest + 30;
  auto states = sample_float_states(q, cols, opt.seed * 0x2545F4914F6CDD1DULL + 17);
  auto say = [&](const std::string& m) {
    if (opt.log) opt.log(m);
  };

  std::map<int, Mat> basis;
  std::vector<GeneratorCount> out;
  for (int d = 2; d <= opt.max_degree; d += 2) {
    GeneratorCount g;
    g.degree = d;
    g.dim_v_expected = expected[d];
    // Decomposable part from lower bases.
    std::vector<Eigen::RowVectorXcd> prods;
    for (int a = 2; 2 * a <= d; a += 2) {
      if (!basis.count(a) || !basis.count(d - a)) continue;
      const Mat& x = basis[a];
      const Mat& y = basis[d - a];
      for (Eigen::Index i = 0; i < x.rows(); ++i)
        for (Eigen::Index j = (a == d - a ? i : 0); j < y.rows(); ++j)
          prods.push_back(x.row(i).cwiseProduct(y.row(j)));
    }
    Mat u(prods.size(), cols);
    for (std::size_t k = 0; k < prods.size(); ++k) u.row(k) = prods[k];
    Mat ub = prods.empty() ? Mat(0, cols) : row_space(u, opt.rel_tol);
    g.dim_u = ub.rows();

    if (expected[d] == 0) {
      basis[d] = Mat(0, cols);
    } else if (d <= opt.measure_v_up_to) {
      // Random networks on top of the decomposable part.
      const std::size_t extra = expected[d] - std::min<std::size_t>(expected[d], g.dim_u) + 15;
      Mat a(g.dim_u + extra, cols);
      a.topRows(g.dim_u) = ub;
      // Many networks vanish identically; their float rows are pure rounding
      // noise and would pass for independent after scaling, so they are
      // screened out with one exact evaluation.
      const ExactState probe = random_exact_state(q, opt.seed + 977 * d);
      std::uint64_t tries = 0;
      for (std::size_t k = 0; k < extra;) {
        auto net = random_eps_network(q, d, opt.seed * 1000003ULL + d * 7919ULL + tries++);
        if (tries > 100 * (extra + 10)) throw std::runtime_error("generator_counts: networks keep vanishing");
        if (eval_network(net, probe).is_zero()) continue;
        for (std::size_t s = 0; s < cols; ++s) a(g.dim_u + k, s) = eval_network(net, states[s]);
        ++k;
      }
      basis[d] = row_space(a, opt.rel_tol);
      g.dim_v = basis[d].rows();
    }
    say("degree " + std::to_string(d) + ": dim V " + std::to_string(g.dim_v) + " (expected " +
        std::to_string(g.dim_v_expected) + "), dim U " + std::to_string(g.dim_u));
    out.push_back(g);
  }
  return out;
}

}  // namespace qinv
