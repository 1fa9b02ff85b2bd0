#include "qht/channels.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "qht/rng.hpp"

namespace qht {

KrausChannel::KrausChannel(std::vector<Matrix> kraus_ops)
    : ops_(std::move(kraus_ops)) {
  if (ops_.empty()) throw ValidationError("channel needs at least one Kraus op");
  const Eigen::Index din = ops_.front().cols();
  const Eigen::Index dout = ops_.front().rows();
  Matrix completeness = Matrix::Zero(din, din);
  for (const Matrix& k : ops_) {
    if (k.cols() != din || k.rows() != dout) {
      throw ValidationError("Kraus operators have inconsistent shapes");
    }
    completeness += k.adjoint() * k;
  }
  const double residual =
      (completeness - Matrix::Identity(din, din)).cwiseAbs().maxCoeff();
  if (residual > 1e-10) {
    std::ostringstream os;
    os << "channel is not trace preserving: completeness residual " << residual;
    throw ValidationError(os.str());
  }
}

DensityOperator KrausChannel::apply(const DensityOperator& rho) const {
  if (rho.dim() != d_in()) {
    std::ostringstream os;
    os << "channel input dim " << d_in() << " does not match state dim "
       << rho.dim();
    throw ValidationError(os.str());
  }
  Matrix out = Matrix::Zero(d_out(), d_out());
  for (const Matrix& k : ops_) out += k * rho.matrix() * k.adjoint();
  return DensityOperator(std::move(out));
}

nlohmann::json KrausChannel::to_json() const {
  nlohmann::json j;
  j["d_in"] = d_in();
  j["d_out"] = d_out();
  j["kraus"] = nlohmann::json::array();
  for (const Matrix& k : ops_) {
    nlohmann::json op;
    std::vector<std::vector<double>> re(k.rows()), im(k.rows());
    for (Eigen::Index r = 0; r < k.rows(); ++r) {
      for (Eigen::Index c = 0; c < k.cols(); ++c) {
        re[r].push_back(k(r, c).real());
        im[r].push_back(k(r, c).imag());
      }
    }
    op["re"] = re;
    op["im"] = im;
    j["kraus"].push_back(op);
  }
  return j;
}

KrausChannel KrausChannel::from_json(const nlohmann::json& j) {
  const int din = j.at("d_in").get<int>();
  const int dout = j.at("d_out").get<int>();
  std::vector<Matrix> ops;
  for (const auto& op : j.at("kraus")) {
    const auto re = op.at("re").get<std::vector<std::vector<double>>>();
    const auto im = op.at("im").get<std::vector<std::vector<double>>>();
    Matrix k(dout, din);
    for (int r = 0; r < dout; ++r) {
      for (int c = 0; c < din; ++c) k(r, c) = Complex(re.at(r).at(c), im.at(r).at(c));
    }
    ops.push_back(std::move(k));
  }
  return KrausChannel(std::move(ops));
}

KrausChannel random_channel(int d_in, int d_out, int k, std::uint64_t seed) {
  if (d_in < 1 || d_out < 1 || k < 1 || static_cast<long>(k) * d_out < d_in) {
    std::ostringstream os;
    os << "infeasible channel dims: d_in=" << d_in << ", d_out=" << d_out
       << ", k=" << k << " (need k*d_out >= d_in)";
    throw ValidationError(os.str());
  }
  Rng rng(seed);
  const Matrix g = rng.gaussian_matrix(k * d_out, d_in);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix iso = qr.householderQ() * Matrix::Identity(k * d_out, d_in);
  // Fix the column phases from the R diagonal so the isometry is a
  // deterministic function of g alone.
  const Matrix r = qr.matrixQR().topRows(d_in).triangularView<Eigen::Upper>();
  for (int c = 0; c < d_in; ++c) {
    const Complex diag = r(c, c);
    if (std::abs(diag) > 1e-14) iso.col(c) *= diag / std::abs(diag);
  }
  std::vector<Matrix> ops;
  ops.reserve(k);
  for (int block = 0; block < k; ++block) {
    ops.push_back(iso.middleRows(block * d_out, d_out));
  }
  return KrausChannel(std::move(ops));
}

namespace {

double trace_overlap(const StatePair& pair, double s) {
  const Matrix a = matrix_power(pair.rho_eig(), 1.0 - s);
  const Matrix b = matrix_power(pair.sigma_eig(), s);
  return (a * b).trace().real();
}

}  // namespace

double renyi_monotonicity_check(const StatePair& pair, const KrausChannel& ch,
                                std::span<const double> s_grid) {
  const StatePair out(ch.apply(pair.rho()), ch.apply(pair.sigma()));
  double worst = -std::numeric_limits<double>::infinity();
  for (double s : s_grid) {
    worst = std::max(worst, trace_overlap(pair, s) - trace_overlap(out, s));
  }
  return worst;
}

RelentCheck relent_monotonicity_check(const StatePair& pair,
                                      const KrausChannel& ch) {
  const double d_in = relative_entropy(pair);
  DensityOperator out_rho = ch.apply(pair.rho());
  DensityOperator out_sigma = ch.apply(pair.sigma());
  RelentCheck result;
  StatePair out(out_rho, out_sigma);
  if (!out.full_rank()) {
    const double eps = 1e-9;
    const int d = out.dim();
    auto mix = [&](const DensityOperator& x) {
      Matrix m = (x.matrix() + (eps / d) * Matrix::Identity(d, d)) / (1.0 + eps);
      return DensityOperator(std::move(m));
    };
    out = StatePair(mix(out_rho), mix(out_sigma));
    result.regularized = true;
    result.regularization = eps;
  }
  result.violation = relative_entropy(out) - d_in;
  return result;
}

}  // namespace qht
