// CEC 2019 100-digit-challenge functions in their published analytic forms.
// CEC01-CEC03 evaluate the raw input; CEC04-CEC10 first apply
// z = M ((x - Os) * rate) with rotation M and shift Os (identity and zero
// unless loaded from a data file). Every function carries a +1 offset so the
// base optimum evaluates to 1.
#include <cmath>
#include <fstream>
#include <numbers>
#include <utility>
#include <vector>

#include "lpbsa/benchmarks.hpp"

namespace lpbsa {

namespace {

constexpr double kPi = std::numbers::pi;

double cec01_chebyshev(const SolutionVector& x, RngStream&) {
  const int nx = static_cast<int>(x.size());
  double a = 1.0;
  double b = 1.2;
  double dx = 0.0;
  for (int i = 0; i < nx - 2; ++i) {
    dx = 2.4 * b - a;
    a = b;
    b = dx;
  }
  const int sample = 32 * nx;
  const double dy = 2.0 / static_cast<double>(sample);
  double y = -1.0;
  double total = 0.0;
  for (int s = 0; s <= sample; ++s) {
    double px = x[0];
    for (int j = 1; j < nx; ++j) {
      px = y * px + x[j];
    }
    if (px < -1.0 || px > 1.0) {
      const double t = 1.0 - std::abs(px);
      total += t * t;
    }
    y += dy;
  }
  for (int r = 0; r < 2; ++r) {
    double px = x[0];
    for (int j = 1; j < nx; ++j) {
      px = 1.2 * px + x[j];
    }
    if (px < dx) {
      total += px * px;
    }
  }
  return total + 1.0;
}

double cec02_hilbert(const SolutionVector& x, RngStream&) {
  const int b = static_cast<int>(std::lround(
      std::sqrt(static_cast<double>(x.size()))));
  Eigen::MatrixXd hilbert(b, b);
  for (int i = 0; i < b; ++i) {
    for (int j = 0; j < b; ++j) {
      hilbert(i, j) = 1.0 / (static_cast<double>(i + j) + 1.0);
    }
  }
  // x is interpreted as a b x b matrix X with X(i, k) = x[k + b*i]; the
  // product H*X is accumulated coefficient-wise so results are reproducible
  // across BLAS-style reorderings.
  Eigen::MatrixXd prod = Eigen::MatrixXd::Zero(b, b);
  for (int j = 0; j < b; ++j) {
    for (int k = 0; k < b; ++k) {
      for (int i = 0; i < b; ++i) {
        prod(j, k) += hilbert(j, i) * x[k + b * i];
      }
    }
  }
  double total = 0.0;
  for (int i = 0; i < b; ++i) {
    for (int j = 0; j < b; ++j) {
      total += std::abs(prod(i, j) - (i == j ? 1.0 : 0.0));
    }
  }
  return total + 1.0;
}

double cec03_lennard_jones(const SolutionVector& x, RngStream&) {
  const int k = static_cast<int>(x.size()) / 3;
  double total = 0.0;
  for (int i = 0; i < k - 1; ++i) {
    for (int j = i + 1; j < k; ++j) {
      double ed = 0.0;
      for (int d = 0; d < 3; ++d) {
        const double diff = x[3 * i + d] - x[3 * j + d];
        ed += diff * diff;
      }
      const double ud = ed * ed * ed;
      if (ud > 1.0e-10) {
        total += (1.0 / ud - 2.0) / ud;
      } else {
        total += 1.0e20;
      }
    }
  }
  return total + 12.7120622568 + 1.0;
}

double rastrigin_base(const SolutionVector& z) {
  double total = 0.0;
  for (Eigen::Index i = 0; i < z.size(); ++i) {
    total += z[i] * z[i] - 10.0 * std::cos(2.0 * kPi * z[i]) + 10.0;
  }
  return total + 1.0;
}

double griewank_base(const SolutionVector& z) {
  double s = 0.0;
  double p = 1.0;
  for (Eigen::Index i = 0; i < z.size(); ++i) {
    s += z[i] * z[i];
  }
  s /= 4000.0;
  for (Eigen::Index i = 0; i < z.size(); ++i) {
    p *= std::cos(z[i] / std::sqrt(static_cast<double>(i) + 1.0));
  }
  return s - p + 1.0 + 1.0;
}

double weierstrass_base(const SolutionVector& z) {
  constexpr double a = 0.5;
  constexpr double b = 3.0;
  constexpr int kmax = 20;
  double total = 0.0;
  for (Eigen::Index i = 0; i < z.size(); ++i) {
    for (int k = 0; k <= kmax; ++k) {
      total += std::pow(a, k) *
               std::cos(2.0 * kPi * std::pow(b, k) * (z[i] + 0.5));
    }
  }
  double bias = 0.0;
  for (int k = 0; k <= kmax; ++k) {
    bias += std::pow(a, k) * std::cos(2.0 * kPi * std::pow(b, k) * 0.5);
  }
  return total - static_cast<double>(z.size()) * bias + 1.0;
}

double schwefel_base(const SolutionVector& z) {
  const auto n = static_cast<double>(z.size());
  double total = 0.0;
  for (Eigen::Index i = 0; i < z.size(); ++i) {
    const double w = z[i] + 4.209687462275036e+002;
    if (w > 500.0) {
      const double m = 500.0 - std::fmod(w, 500.0);
      total -= m * std::sin(std::sqrt(std::abs(m)));
      const double tmp = (w - 500.0) / 100.0;
      total += tmp * tmp / n;
    } else if (w < -500.0) {
      const double m = -500.0 + std::fmod(std::abs(w), 500.0);
      total -= m * std::sin(std::sqrt(500.0 - std::fmod(std::abs(w), 500.0)));
      const double tmp = (w + 500.0) / 100.0;
      total += tmp * tmp / n;
    } else {
      total -= w * std::sin(std::sqrt(std::abs(w)));
    }
  }
  return total + 4.189828872724338e+002 * n + 1.0;
}

double schaffer_f6_base(const SolutionVector& z) {
  const auto n = z.size();
  double total = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const double a = z[i];
    const double b = z[(i + 1) % n];
    const double r2 = a * a + b * b;
    const double s = std::sin(std::sqrt(r2));
    const double t1 = s * s;
    const double t2 = 1.0 + 0.001 * r2;
    total += 0.5 + (t1 - 0.5) / (t2 * t2);
  }
  return total + 1.0;
}

double happycat_base(const SolutionVector& w) {
  const auto n = static_cast<double>(w.size());
  double r2 = 0.0;
  double sz = 0.0;
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    const double z = w[i] - 1.0;  // shift the optimum to the transform origin
    r2 += z * z;
    sz += z;
  }
  return std::pow(std::abs(r2 - n), 0.25) + (0.5 * r2 + sz) / n + 0.5 + 1.0;
}

double ackley_base(const SolutionVector& z) {
  const auto n = static_cast<double>(z.size());
  double s1 = 0.0;
  double s2 = 0.0;
  for (Eigen::Index i = 0; i < z.size(); ++i) {
    s1 += z[i] * z[i];
  }
  for (Eigen::Index i = 0; i < z.size(); ++i) {
    s2 += std::cos(2.0 * kPi * z[i]);
  }
  return -20.0 * std::exp(-0.2 * std::sqrt(s1 / n)) - std::exp(s2 / n) +
         20.0 + std::numbers::e + 1.0;
}

struct CecTransform {
  Eigen::MatrixXd rotation;  // empty when identity
  Eigen::VectorXd shift;     // zero vector when none loaded
  bool loaded = false;
};

CecTransform load_transform(const std::filesystem::path& file, int dim) {
  CecTransform transform;
  transform.shift = Eigen::VectorXd::Zero(dim);
  if (!std::filesystem::exists(file)) {
    return transform;  // identity rotation, zero shift
  }
  std::ifstream in(file);
  if (!in) {
    throw DataFileError("cannot open data file " + file.string());
  }
  const std::string shape =
      "expected 1 + " + std::to_string(dim) + "*" + std::to_string(dim) +
      " + " + std::to_string(dim) +
      " whitespace-separated values (dimension, row-major rotation matrix, "
      "shift vector)";
  std::vector<double> values;
  double v = 0.0;
  while (in >> v) {
    values.push_back(v);
  }
  if (!in.eof()) {
    throw DataFileError("malformed data file " + file.string() +
                        ": non-numeric content; " + shape);
  }
  const std::size_t want =
      1 + static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim) +
      static_cast<std::size_t>(dim);
  if (values.size() != want) {
    throw DataFileError("malformed data file " + file.string() + ": found " +
                        std::to_string(values.size()) + " values; " + shape);
  }
  if (values[0] != static_cast<double>(dim)) {
    throw DataFileError("malformed data file " + file.string() +
                        ": header dimension mismatch; " + shape);
  }
  transform.rotation.resize(dim, dim);
  std::size_t pos = 1;
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      transform.rotation(i, j) = values[pos++];
    }
  }
  for (int i = 0; i < dim; ++i) {
    transform.shift[i] = values[pos++];
  }
  transform.loaded = true;
  return transform;
}

ObjectiveFn shifted_rotated(double rate, double (*base)(const SolutionVector&),
                            CecTransform transform) {
  return [rate, base, transform = std::move(transform)](
             const SolutionVector& x, RngStream&) {
    const SolutionVector y = (x - transform.shift) * rate;
    if (transform.loaded) {
      const SolutionVector z = transform.rotation * y;
      return base(z);
    }
    return base(y);
  };
}

}  // namespace

BenchmarkCatalog cec2019_suite(
    const std::optional<std::filesystem::path>& data_dir) {
  BenchmarkCatalog catalog;

  auto add_plain = [&catalog](std::string name, int dim, double lo, double hi,
                              ObjectiveFn fn, SolutionVector optimizer) {
    ObjectiveSpec spec =
        make_uniform_spec(std::move(name), dim, lo, hi, std::move(fn));
    spec.known_optimum = 1.0;
    spec.optimizer = std::move(optimizer);
    catalog.add(std::move(spec));
  };

  // CEC01: coefficients of the degree-8 Chebyshev polynomial.
  SolutionVector cheb(9);
  cheb << 128.0, 0.0, -256.0, 0.0, 160.0, 0.0, -32.0, 0.0, 1.0;
  add_plain("CEC01", 9, -8192.0, 8192.0, cec01_chebyshev, cheb);

  // CEC02: the inverse of the 4x4 Hilbert matrix, row-major.
  SolutionVector hinv(16);
  hinv << 16.0, -120.0, 240.0, -140.0, -120.0, 1200.0, -2700.0, 1680.0,
      240.0, -2700.0, 6480.0, -4200.0, -140.0, 1680.0, -4200.0, 2800.0;
  add_plain("CEC02", 16, -16384.0, 16384.0, cec02_hilbert, hinv);

  // CEC03: octahedral 6-atom cluster with pair distances at the
  // Lennard-Jones equilibrium.
  constexpr double kOcta = 0.7039468473095744;
  SolutionVector octa(18);
  octa << kOcta, 0.0, 0.0, -kOcta, 0.0, 0.0, 0.0, kOcta, 0.0, 0.0, -kOcta,
      0.0, 0.0, 0.0, kOcta, 0.0, 0.0, -kOcta;
  add_plain("CEC03", 18, -4.0, 4.0, cec03_lennard_jones, octa);

  struct ShiftedEntry {
    const char* id;
    double rate;
    double (*base)(const SolutionVector&);
  };
  const ShiftedEntry shifted[] = {
      {"CEC04", 5.12 / 100.0, rastrigin_base},
      {"CEC05", 600.0 / 100.0, griewank_base},
      {"CEC06", 0.5 / 100.0, weierstrass_base},
      {"CEC07", 1000.0 / 100.0, schwefel_base},
      {"CEC08", 1.0, schaffer_f6_base},
      {"CEC09", 5.0 / 100.0, happycat_base},
      {"CEC10", 1.0, ackley_base},
  };
  for (const auto& entry : shifted) {
    constexpr int kDim = 10;
    CecTransform transform;
    if (data_dir) {
      transform = load_transform(*data_dir / (std::string(entry.id) + ".txt"),
                                 kDim);
    } else {
      transform.shift = Eigen::VectorXd::Zero(kDim);
    }
    const SolutionVector optimizer = transform.shift;
    add_plain(entry.id, kDim, -100.0, 100.0,
              shifted_rotated(entry.rate, entry.base, std::move(transform)),
              optimizer);
  }

  return catalog;
}

}  // namespace lpbsa
