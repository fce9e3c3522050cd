// The 19 classical test functions. Formula layout (summation order, term
// grouping) is kept in the straightforward left-to-right form that the test
// oracles were computed with.
#include <cmath>
#include <numbers>

#include "lpbsa/benchmarks.hpp"

namespace lpbsa {

namespace {

constexpr double kPi = std::numbers::pi;

double tf1_sphere(const SolutionVector& x, RngStream&) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    s += x[i] * x[i];
  }
  return s;
}

double tf2_schwefel222(const SolutionVector& x, RngStream&) {
  double s = 0.0;
  double p = 1.0;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    s += std::abs(x[i]);
  }
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    p *= std::abs(x[i]);
  }
  return s + p;
}

double tf3_schwefel12(const SolutionVector& x, RngStream&) {
  double total = 0.0;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    double inner = 0.0;
    for (Eigen::Index j = 0; j <= i; ++j) {
      inner += x[j];
    }
    total += inner * inner;
  }
  return total;
}

double tf4_schwefel221(const SolutionVector& x, RngStream&) {
  double m = 0.0;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    m = std::max(m, std::abs(x[i]));
  }
  return m;
}

double tf5_rosenbrock(const SolutionVector& x, RngStream&) {
  double total = 0.0;
  for (Eigen::Index i = 0; i + 1 < x.size(); ++i) {
    const double a = x[i + 1] - x[i] * x[i];
    const double b = x[i] - 1.0;
    total += 100.0 * a * a + b * b;
  }
  return total;
}

double tf6_step(const SolutionVector& x, RngStream&) {
  double total = 0.0;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    const double t = std::floor(x[i] + 0.5);
    total += t * t;
  }
  return total;
}

double tf7_quartic(const SolutionVector& x, RngStream& rng) {
  double total = 0.0;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    const double sq = x[i] * x[i];
    total += static_cast<double>(i + 1) * sq * sq;
  }
  return total + rng.uniform01();
}

double tf8_schwefel226(const SolutionVector& x, RngStream&) {
  double total = 0.0;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    total += x[i] * std::sin(std::sqrt(std::abs(x[i])));
  }
  return -total;
}

double tf9_rastrigin(const SolutionVector& x, RngStream&) {
  double total = 0.0;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    total += x[i] * x[i] - 10.0 * std::cos(2.0 * kPi * x[i]) + 10.0;
  }
  return total;
}

double tf10_ackley(const SolutionVector& x, RngStream&) {
  const auto n = static_cast<double>(x.size());
  double s1 = 0.0;
  double s2 = 0.0;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    s1 += x[i] * x[i];
  }
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    s2 += std::cos(2.0 * kPi * x[i]);
  }
  return -20.0 * std::exp(-0.2 * std::sqrt(s1 / n)) - std::exp(s2 / n) +
         20.0 + std::numbers::e;
}

double tf11_griewank(const SolutionVector& x, RngStream&) {
  double s = 0.0;
  double p = 1.0;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    s += x[i] * x[i];
  }
  s /= 4000.0;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    p *= std::cos(x[i] / std::sqrt(static_cast<double>(i) + 1.0));
  }
  return s - p + 1.0;
}

double penalty_term(double v, double a, double k, int m) {
  if (v > a) {
    return k * std::pow(v - a, m);
  }
  if (v < -a) {
    return k * std::pow(-v - a, m);
  }
  return 0.0;
}

double tf12_penalized1(const SolutionVector& x, RngStream&) {
  const auto n = x.size();
  SolutionVector y(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    y[i] = 1.0 + (x[i] + 1.0) / 4.0;
  }
  const double s0 = std::sin(kPi * y[0]);
  double total = 10.0 * s0 * s0;
  for (Eigen::Index i = 0; i + 1 < n; ++i) {
    const double d = y[i] - 1.0;
    const double s = std::sin(kPi * y[i + 1]);
    total += d * d * (1.0 + 10.0 * s * s);
  }
  const double dn = y[n - 1] - 1.0;
  total += dn * dn;
  total *= kPi / static_cast<double>(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    total += penalty_term(x[i], 10.0, 100.0, 4);
  }
  return total;
}

double tf13_penalized2(const SolutionVector& x, RngStream&) {
  const auto n = x.size();
  const double s0 = std::sin(3.0 * kPi * x[0]);
  double total = s0 * s0;
  for (Eigen::Index i = 0; i + 1 < n; ++i) {
    const double d = x[i] - 1.0;
    const double s = std::sin(3.0 * kPi * x[i + 1]);
    total += d * d * (1.0 + s * s);
  }
  const double dn = x[n - 1] - 1.0;
  const double sn = std::sin(2.0 * kPi * x[n - 1]);
  total += dn * dn * (1.0 + sn * sn);
  total *= 0.1;
  for (Eigen::Index i = 0; i < n; ++i) {
    total += penalty_term(x[i], 5.0, 100.0, 4);
  }
  return total;
}

// Foxholes grid: a1 cycles -32..32 across columns, a2 steps per block of 5.
constexpr double kFoxA[5] = {-32.0, -16.0, 0.0, 16.0, 32.0};

double tf14_foxholes(const SolutionVector& x, RngStream&) {
  double s = 1.0 / 500.0;
  for (int j = 0; j < 25; ++j) {
    const double a1 = kFoxA[j % 5];
    const double a2 = kFoxA[j / 5];
    const double d1 = x[0] - a1;
    const double d2 = x[1] - a2;
    const double p1 = d1 * d1 * d1 * d1 * d1 * d1;
    const double p2 = d2 * d2 * d2 * d2 * d2 * d2;
    s += 1.0 / (static_cast<double>(j) + 1.0 + p1 + p2);
  }
  return 1.0 / s;
}

constexpr double kKowalikA[11] = {0.1957, 0.1947, 0.1735, 0.16,
                                  0.0844, 0.0627, 0.0456, 0.0342,
                                  0.0323, 0.0235, 0.0246};
constexpr double kKowalikB[11] = {4.0,  2.0,        1.0,   0.5,
                                  0.25, 1.0 / 6.0,  0.125, 0.1,
                                  1.0 / 12.0, 1.0 / 14.0, 0.0625};

double tf15_kowalik(const SolutionVector& x, RngStream&) {
  double total = 0.0;
  for (int i = 0; i < 11; ++i) {
    const double a = kKowalikA[i];
    const double b = kKowalikB[i];
    const double num = x[0] * (b * b + b * x[1]);
    const double den = b * b + b * x[2] + x[3];
    const double r = a - num / den;
    total += r * r;
  }
  return total;
}

double tf16_camel(const SolutionVector& x, RngStream&) {
  const double x1 = x[0];
  const double x2 = x[1];
  const double x1_2 = x1 * x1;
  const double x1_4 = x1_2 * x1_2;
  const double x1_6 = x1_4 * x1_2;
  const double x2_2 = x2 * x2;
  return 4.0 * x1_2 - 2.1 * x1_4 + x1_6 / 3.0 + x1 * x2 - 4.0 * x2_2 +
         4.0 * x2_2 * x2_2;
}

double tf17_branin(const SolutionVector& x, RngStream&) {
  const double x1 = x[0];
  const double x2 = x[1];
  const double a =
      x2 - 5.1 * x1 * x1 / (4.0 * kPi * kPi) + 5.0 * x1 / kPi - 6.0;
  return a * a + 10.0 * (1.0 - 1.0 / (8.0 * kPi)) * std::cos(x1) + 10.0;
}

double tf18_goldstein_price(const SolutionVector& x, RngStream&) {
  const double x1 = x[0];
  const double x2 = x[1];
  const double u = x1 + x2 + 1.0;
  const double t1 =
      1.0 + u * u * (19.0 - 14.0 * x1 + 3.0 * x1 * x1 - 14.0 * x2 +
                     6.0 * x1 * x2 + 3.0 * x2 * x2);
  const double v = 2.0 * x1 - 3.0 * x2;
  const double t2 =
      30.0 + v * v * (18.0 - 32.0 * x1 + 12.0 * x1 * x1 + 48.0 * x2 -
                      36.0 * x1 * x2 + 27.0 * x2 * x2);
  return t1 * t2;
}

constexpr double kH3Alpha[4] = {1.0, 1.2, 3.0, 3.2};
constexpr double kH3A[4][3] = {{3.0, 10.0, 30.0},
                               {0.1, 10.0, 35.0},
                               {3.0, 10.0, 30.0},
                               {0.1, 10.0, 35.0}};
constexpr double kH3P[4][3] = {{0.3689, 0.117, 0.2673},
                               {0.4699, 0.4387, 0.747},
                               {0.1091, 0.8732, 0.5547},
                               {0.03815, 0.5743, 0.8828}};

double tf19_hartmann3(const SolutionVector& x, RngStream&) {
  double total = 0.0;
  for (int i = 0; i < 4; ++i) {
    double inner = 0.0;
    for (int j = 0; j < 3; ++j) {
      const double d = x[j] - kH3P[i][j];
      inner += kH3A[i][j] * d * d;
    }
    total -= kH3Alpha[i] * std::exp(-inner);
  }
  return total;
}

SolutionVector constant_vector(int n, double v) {
  return SolutionVector::Constant(n, v);
}

}  // namespace

BenchmarkCatalog classical_suite() {
  BenchmarkCatalog catalog;

  auto add = [&catalog](std::string name, int dim, double lo, double hi,
                        ObjectiveFn fn, double optimum,
                        SolutionVector optimizer) {
    ObjectiveSpec spec = make_uniform_spec(std::move(name), dim, lo, hi,
                                           std::move(fn));
    spec.known_optimum = optimum;
    spec.optimizer = std::move(optimizer);
    catalog.add(std::move(spec));
  };

  add("TF1", 30, -100.0, 100.0, tf1_sphere, 0.0, constant_vector(30, 0.0));
  add("TF2", 30, -10.0, 10.0, tf2_schwefel222, 0.0, constant_vector(30, 0.0));
  add("TF3", 30, -100.0, 100.0, tf3_schwefel12, 0.0, constant_vector(30, 0.0));
  add("TF4", 30, -100.0, 100.0, tf4_schwefel221, 0.0,
      constant_vector(30, 0.0));
  add("TF5", 30, -30.0, 30.0, tf5_rosenbrock, 0.0, constant_vector(30, 1.0));
  add("TF6", 30, -100.0, 100.0, tf6_step, 0.0, constant_vector(30, 0.0));
  add("TF7", 30, -1.28, 1.28, tf7_quartic, 0.0, constant_vector(30, 0.0));
  // Schwefel 2.26: stationary point of x sin(sqrt(x)) nearest the upper
  // bound, refined to full precision.
  add("TF8", 30, -500.0, 500.0, tf8_schwefel226, -12569.486618173012,
      constant_vector(30, 420.96874635998205));
  add("TF9", 30, -5.12, 5.12, tf9_rastrigin, 0.0, constant_vector(30, 0.0));
  add("TF10", 30, -32.0, 32.0, tf10_ackley, 0.0, constant_vector(30, 0.0));
  add("TF11", 30, -600.0, 600.0, tf11_griewank, 0.0,
      constant_vector(30, 0.0));
  add("TF12", 30, -50.0, 50.0, tf12_penalized1, 0.0,
      constant_vector(30, -1.0));
  add("TF13", 30, -50.0, 50.0, tf13_penalized2, 0.0,
      constant_vector(30, 1.0));

  SolutionVector fox_opt(2);
  fox_opt << -32.0, -32.0;
  add("TF14", 2, -65.536, 65.536, tf14_foxholes, 0.9980038388186492,
      fox_opt);

  SolutionVector kow_opt(4);
  kow_opt << 0.19283345308129274, 0.1908362399907949, 0.1231172992771683,
      0.13576599026903194;
  add("TF15", 4, -5.0, 5.0, tf15_kowalik, 0.00030748598780560557, kow_opt);

  SolutionVector camel_opt(2);
  camel_opt << 0.08984201652927098, -0.7126564013807202;
  add("TF16", 2, -5.0, 5.0, tf16_camel, -1.0316284534898776, camel_opt);

  {
    ObjectiveSpec spec;
    spec.name = "TF17";
    spec.dimension = 2;
    spec.lower_bounds.resize(2);
    spec.upper_bounds.resize(2);
    spec.lower_bounds << -5.0, 0.0;
    spec.upper_bounds << 10.0, 15.0;
    spec.evaluate = tf17_branin;
    spec.known_optimum = 0.39788735772973816;  // 5 / (4 pi)
    SolutionVector branin_opt(2);
    branin_opt << -kPi, 12.275;
    spec.optimizer = branin_opt;
    catalog.add(std::move(spec));
  }

  SolutionVector gp_opt(2);
  gp_opt << 0.0, -1.0;
  add("TF18", 2, -2.0, 2.0, tf18_goldstein_price, 3.0, gp_opt);

  SolutionVector h3_opt(3);
  h3_opt << 0.11461434203082951, 0.5556488507905384, 0.8525469538460251;
  add("TF19", 3, 0.0, 1.0, tf19_hartmann3, -3.8627821478207554, h3_opt);

  return catalog;
}

}  // namespace lpbsa
