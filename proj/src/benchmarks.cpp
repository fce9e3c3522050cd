// Catalog plumbing plus the exemplar (EQ2-EQ4) and application (APP1, APP2)
// objectives.
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "lpbsa/benchmarks.hpp"

namespace lpbsa {

void BenchmarkCatalog::add(ObjectiveSpec spec) {
  validate_objective(spec);
  if (entries_.count(spec.name) != 0) {
    throw std::invalid_argument("duplicate benchmark id '" + spec.name + "'");
  }
  order_.push_back(spec.name);
  entries_.emplace(spec.name, std::move(spec));
}

bool BenchmarkCatalog::contains(const std::string& id) const {
  return entries_.count(id) != 0;
}

const ObjectiveSpec& BenchmarkCatalog::at(const std::string& id) const {
  const auto it = entries_.find(id);
  if (it == entries_.end()) {
    throw std::invalid_argument("unknown benchmark id '" + id + "'");
  }
  return it->second;
}

void BenchmarkCatalog::merge(const BenchmarkCatalog& other) {
  for (const std::string& id : other.order_) {
    add(other.entries_.at(id));
  }
}

ObjectiveSpec make_uniform_spec(std::string name, int dimension, double lower,
                                double upper, ObjectiveFn fn) {
  ObjectiveSpec spec;
  spec.name = std::move(name);
  spec.dimension = dimension;
  spec.lower_bounds = Eigen::VectorXd::Constant(dimension, lower);
  spec.upper_bounds = Eigen::VectorXd::Constant(dimension, upper);
  spec.evaluate = std::move(fn);
  validate_objective(spec);
  return spec;
}

ObjectiveSpec eq2_quadratic(double a) {
  ObjectiveSpec spec = make_uniform_spec(
      "EQ2", 1, -100.0, 100.0,
      [a](const SolutionVector& x, RngStream&) {
        const double d = x[0] - a;
        return d * d;
      });
  spec.known_optimum = 0.0;
  spec.optimizer = Eigen::VectorXd::Constant(1, a);
  return spec;
}

ObjectiveSpec eq3_rastrigin(int n, double A) {
  ObjectiveSpec spec = make_uniform_spec(
      "EQ3", n, -5.12, 5.12,
      [A](const SolutionVector& x, RngStream&) {
        double total = A * static_cast<double>(x.size());
        for (Eigen::Index i = 0; i < x.size(); ++i) {
          total += x[i] * x[i] -
                   A * std::cos(2.0 * std::numbers::pi * x[i]);
        }
        return total;
      });
  spec.known_optimum = 0.0;
  spec.optimizer = Eigen::VectorXd::Zero(n);
  return spec;
}

ObjectiveSpec eq4_quadratic_sine() {
  ObjectiveSpec spec = make_uniform_spec(
      "EQ4", 1, -100.0, 100.0,
      [](const SolutionVector& x, RngStream&) {
        return x[0] * x[0] + std::sin(x[0]);
      });
  spec.known_optimum = -0.23246557515821564;
  spec.optimizer = Eigen::VectorXd::Constant(1, -0.45018361129487355);
  return spec;
}

ObjectiveSpec app1_igg(int n) {
  ObjectiveSpec spec = make_uniform_spec(
      "APP1", n, -100.0, 100.0,
      [](const SolutionVector& x, RngStream&) {
        double total = 0.0;
        for (Eigen::Index i = 0; i < x.size(); ++i) {
          total += 0.41 + 0.001 * x[i];
        }
        return total;
      });
  // Linear and increasing in every variable, so the minimum sits at the
  // lower-bound corner.
  double corner = 0.0;
  for (int i = 0; i < n; ++i) {
    corner += 0.41 + 0.001 * -100.0;
  }
  spec.known_optimum = corner;
  spec.optimizer = Eigen::VectorXd::Constant(n, -100.0);
  return spec;
}

ObjectiveSpec app2_cps(double A, double B, double C, int n) {
  ObjectiveSpec spec = make_uniform_spec(
      "APP2", n, -100.0, 100.0,
      [A, B, C](const SolutionVector& x, RngStream&) {
        double s3 = 0.0;
        double s2 = 0.0;
        double s1 = 0.0;
        for (Eigen::Index i = 0; i < x.size(); ++i) {
          s3 += x[i] * x[i] * x[i];
          s2 += x[i] * x[i];
          s1 += x[i];
        }
        return std::abs(s3 + A * s2 + B * s1 + C);
      });
  if (A == 0.0 && B == 0.0 && C == 0.0) {
    spec.known_optimum = 0.0;
    spec.optimizer = Eigen::VectorXd::Zero(n);
  }
  return spec;
}

BenchmarkCatalog default_catalog(
    const std::optional<std::filesystem::path>& cec_data_dir) {
  BenchmarkCatalog catalog = classical_suite();
  catalog.merge(cec2019_suite(cec_data_dir));
  catalog.add(eq2_quadratic());
  catalog.add(eq3_rastrigin(10));
  catalog.add(eq4_quadratic_sine());
  catalog.add(app1_igg());
  catalog.add(app2_cps());
  return catalog;
}

}  // namespace lpbsa
