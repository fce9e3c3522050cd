// Objective-function library: the 19 classical test functions (TF1-TF19),
// the ten CEC 2019 100-digit-challenge functions (CEC01-CEC10) in their
// analytic forms with optionally file-loaded shift/rotation data, three
// small exemplar objectives (EQ2-EQ4), and two application objectives
// (APP1, APP2).
#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lpbsa/core.hpp"

namespace lpbsa {

/// Thrown when a shift/rotation data file is malformed; the message names
/// the file and the expected shape.
class DataFileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Registry of objective functions keyed by identifier. Iteration order is
/// insertion order (the natural TF1..TF19, CEC01..CEC10, ... sequence).
class BenchmarkCatalog {
 public:
  /// Validates and registers a spec; rejects duplicate identifiers.
  void add(ObjectiveSpec spec);

  bool contains(const std::string& id) const;

  /// Throws std::invalid_argument naming the identifier when absent.
  const ObjectiveSpec& at(const std::string& id) const;

  const std::vector<std::string>& ids() const { return order_; }

  /// Registers every entry of `other` into this catalog.
  void merge(const BenchmarkCatalog& other);

 private:
  std::vector<std::string> order_;
  std::map<std::string, ObjectiveSpec> entries_;
};

/// Convenience constructor for a spec with constant per-variable bounds.
ObjectiveSpec make_uniform_spec(std::string name, int dimension, double lower,
                                double upper, ObjectiveFn fn);

/// 1-D quadratic (x - a)^2 on [-100, 100]; optimum 0 at x = a.
ObjectiveSpec eq2_quadratic(double a = 0.0);

/// n-D Rastrigin A*n + sum(x_i^2 - A cos(2 pi x_i)) on [-5.12, 5.12]^n;
/// optimum 0 at the origin.
ObjectiveSpec eq3_rastrigin(int n, double A = 10.0);

/// 1-D x^2 + sin(x) on [-100, 100]; minimum near x = -0.450184.
ObjectiveSpec eq4_quadratic_sine();

/// n-D sum of affine terms 0.41 + 0.001 * x_i on [-100, 100]^n; as a pure
/// linear objective its minimum sits at the lower bound corner.
ObjectiveSpec app1_igg(int n = 10);

/// n-D cubic-sum residual |sum x^3 + A sum x^2 + B sum x + C| on
/// [-100, 100]^n with configurable coefficients.
ObjectiveSpec app2_cps(double A = 0.0, double B = 0.0, double C = 0.0,
                       int n = 10);

/// TF1-TF19: unimodal (TF1-TF7, 30-D), multimodal (TF8-TF13, 30-D), and
/// fixed-dimension composite (TF14-TF19) functions with their standard
/// bounds and documented optima.
BenchmarkCatalog classical_suite();

/// CEC01-CEC10. CEC01-CEC03 (Chebyshev 9-D, inverse Hilbert 16-D,
/// Lennard-Jones 18-D) are used untransformed. CEC04-CEC10 (10-D in
/// [-100, 100]) apply z = M ((x - Os) * rate); when data_dir contains
/// "<ID>.txt" the rotation M and shift Os are loaded from it, otherwise
/// identity rotation and zero shift apply. Every function carries a +1
/// offset so the base optimum evaluates to 1.
///
/// Data file format (whitespace-separated text): the dimension n, then the
/// n x n rotation matrix in row-major order, then the n shift values.
BenchmarkCatalog cec2019_suite(
    const std::optional<std::filesystem::path>& data_dir = std::nullopt);

/// Everything: TF1-TF19, CEC01-CEC10, EQ2 (a=0), EQ3 (10-D), EQ4, APP1
/// (10-D), APP2 (A=B=C=0, 10-D).
BenchmarkCatalog default_catalog(
    const std::optional<std::filesystem::path>& cec_data_dir = std::nullopt);

}  // namespace lpbsa
