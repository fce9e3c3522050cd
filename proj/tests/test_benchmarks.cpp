#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "expected_values.hpp"
#include "lpbsa/benchmarks.hpp"
#include "test_support.hpp"

using lpbsa::BenchmarkCatalog;
using lpbsa::Mt64Stream;
using lpbsa::ObjectiveSpec;
using lpbsa::SolutionVector;
using testsupport::spot_close;
using testsupport::ZeroStream;

namespace {

SolutionVector to_vector(const std::vector<double>& v) {
  SolutionVector out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[static_cast<Eigen::Index>(i)] = v[i];
  }
  return out;
}

void check_rows(const BenchmarkCatalog& catalog,
                const std::vector<expected::SpotCheck>& rows) {
  for (const expected::SpotCheck& row : rows) {
    CAPTURE(row.id);
    REQUIRE(catalog.contains(row.id));
    const ObjectiveSpec& spec = catalog.at(row.id);
    REQUIRE(spec.dimension == static_cast<int>(row.point.size()));
    ZeroStream noise_free;
    const double got = spec.evaluate(to_vector(row.point), noise_free);
    CAPTURE(got);
    CAPTURE(row.value);
    CHECK(spot_close(got, row.value));
  }
}

struct TempDir {
  std::filesystem::path path;
  explicit TempDir(const std::string& name)
      : path(std::filesystem::temp_directory_path() / name) {
    std::filesystem::remove_all(path);
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST_CASE("classical functions reproduce the independent reference values") {
  const BenchmarkCatalog catalog = lpbsa::classical_suite();
  check_rows(catalog, expected::classical_spot_checks());
}

TEST_CASE("CEC functions reproduce the independent reference values") {
  const BenchmarkCatalog catalog = lpbsa::cec2019_suite();
  check_rows(catalog, expected::cec_spot_checks());
}

TEST_CASE("every documented optimum point evaluates to its optimum value") {
  const BenchmarkCatalog catalog = lpbsa::default_catalog();
  check_rows(catalog, expected::optimum_checks());
}

TEST_CASE("catalog optimizer metadata is self-consistent") {
  const BenchmarkCatalog catalog = lpbsa::default_catalog();
  int audited = 0;
  for (const std::string& id : catalog.ids()) {
    const ObjectiveSpec& spec = catalog.at(id);
    if (!spec.optimizer || !spec.known_optimum) {
      continue;
    }
    CAPTURE(id);
    REQUIRE(spec.optimizer->size() == spec.dimension);
    for (int g = 0; g < spec.dimension; ++g) {
      CHECK((*spec.optimizer)[g] >= spec.lower_bounds[g]);
      CHECK((*spec.optimizer)[g] <= spec.upper_bounds[g]);
    }
    ZeroStream noise_free;
    const double got = spec.evaluate(*spec.optimizer, noise_free);
    CAPTURE(got);
    CAPTURE(*spec.known_optimum);
    CHECK(std::abs(got - *spec.known_optimum) <=
          1e-9 * std::max(1.0, std::abs(*spec.known_optimum)));
    ++audited;
  }
  CHECK(audited == 34);  // every entry documents its optimum
}

TEST_CASE("default catalog lists the full suite in canonical order") {
  const BenchmarkCatalog catalog = lpbsa::default_catalog();
  std::vector<std::string> want;
  for (int i = 1; i <= 19; ++i) {
    want.push_back("TF" + std::to_string(i));
  }
  for (int i = 1; i <= 10; ++i) {
    char buf[8];
    std::snprintf(buf, sizeof(buf), "CEC%02d", i);
    want.push_back(buf);
  }
  want.insert(want.end(), {"EQ2", "EQ3", "EQ4", "APP1", "APP2"});
  CHECK(catalog.ids() == want);
}

TEST_CASE("catalog dimensions match the published suite") {
  const BenchmarkCatalog catalog = lpbsa::default_catalog();
  const std::map<std::string, int> dims = {
      {"TF1", 30},  {"TF7", 30},   {"TF8", 30},   {"TF13", 30}, {"TF14", 2},
      {"TF15", 4},  {"TF16", 2},   {"TF17", 2},   {"TF18", 2},  {"TF19", 3},
      {"CEC01", 9}, {"CEC02", 16}, {"CEC03", 18}, {"CEC04", 10},
      {"CEC10", 10}, {"EQ2", 1},   {"EQ3", 10},   {"EQ4", 1},   {"APP1", 10},
      {"APP2", 10}};
  for (const auto& [id, dim] : dims) {
    CAPTURE(id);
    CHECK(catalog.at(id).dimension == dim);
  }
}

TEST_CASE("every catalog function is finite across its domain") {
  const BenchmarkCatalog catalog = lpbsa::default_catalog();
  Mt64Stream rng(20250813);
  for (const std::string& id : catalog.ids()) {
    const ObjectiveSpec& spec = catalog.at(id);
    for (int trial = 0; trial < 100; ++trial) {
      SolutionVector x(spec.dimension);
      for (int g = 0; g < spec.dimension; ++g) {
        x[g] = rng.uniform(spec.lower_bounds[g], spec.upper_bounds[g]);
      }
      const double value = spec.evaluate(x, rng);
      CAPTURE(id);
      CHECK(std::isfinite(value));
    }
  }
}

TEST_CASE("quartic noise draws from the stream") {
  const BenchmarkCatalog catalog = lpbsa::classical_suite();
  const ObjectiveSpec& tf7 = catalog.at("TF7");
  const SolutionVector x = SolutionVector::Constant(30, 0.5);
  Mt64Stream rng(5);
  const double first = tf7.evaluate(x, rng);
  const double second = tf7.evaluate(x, rng);
  CHECK(first != second);  // additive uniform noise

  ZeroStream zero;
  const double quiet1 = tf7.evaluate(x, zero);
  const double quiet2 = tf7.evaluate(x, zero);
  CHECK(quiet1 == quiet2);
}

TEST_CASE("catalog add/contains/at/merge behave as a keyed registry") {
  BenchmarkCatalog catalog;
  catalog.add(lpbsa::eq2_quadratic());
  CHECK(catalog.contains("EQ2"));
  CHECK_FALSE(catalog.contains("EQ3"));
  CHECK_THROWS_WITH_AS(static_cast<void>(catalog.at("EQ3")),
                       doctest::Contains("EQ3"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(catalog.add(lpbsa::eq2_quadratic(1.0)),
                       doctest::Contains("EQ2"), std::invalid_argument);

  BenchmarkCatalog other;
  other.add(lpbsa::eq4_quadratic_sine());
  catalog.merge(other);
  CHECK(catalog.contains("EQ4"));
  CHECK(catalog.ids() == std::vector<std::string>{"EQ2", "EQ4"});
}

TEST_CASE("exemplar factories honor their parameters") {
  SUBCASE("EQ2 center") {
    const ObjectiveSpec spec = lpbsa::eq2_quadratic(2.5);
    ZeroStream rng;
    CHECK(spec.evaluate(SolutionVector::Constant(1, 2.5), rng) == 0.0);
    CHECK(spec.evaluate(SolutionVector::Constant(1, 4.5), rng) == 4.0);
    CHECK((*spec.optimizer)[0] == 2.5);
  }
  SUBCASE("EQ3 amplitude and dimension") {
    const ObjectiveSpec spec = lpbsa::eq3_rastrigin(4, 5.0);
    CHECK(spec.dimension == 4);
    ZeroStream rng;
    CHECK(spec.evaluate(SolutionVector::Zero(4), rng) == 0.0);
    // At x = all-ones: 5*4 + 4*(1 - 5*cos(2*pi)) = 20 + 4 - 20 = 4.
    const double got = spec.evaluate(SolutionVector::Constant(4, 1.0), rng);
    CHECK(got == doctest::Approx(4.0).epsilon(1e-12));
  }
  SUBCASE("EQ3 reference values at hand-computed points") {
    const ObjectiveSpec spec = lpbsa::eq3_rastrigin(2);
    ZeroStream rng;
    SolutionVector x(2);
    x << 1.0, 0.0;
    CHECK(spec.evaluate(x, rng) ==
          doctest::Approx(expected::kRastrigin_1_0).epsilon(1e-12));
    SolutionVector y(2);
    y << 0.5, 0.0;
    CHECK(spec.evaluate(y, rng) ==
          doctest::Approx(expected::kRastrigin_half).epsilon(1e-12));
  }
  SUBCASE("EQ4 frozen minimum") {
    const ObjectiveSpec spec = lpbsa::eq4_quadratic_sine();
    CHECK(*spec.known_optimum == expected::kQuadraticSineMin);
    CHECK((*spec.optimizer)[0] == expected::kQuadraticSineArgMin);
    ZeroStream rng;
    const double at_min = spec.evaluate(*spec.optimizer, rng);
    CHECK(at_min == doctest::Approx(expected::kQuadraticSineMin).epsilon(1e-15));
    // Nearby points are worse: it is a genuine local (and global) minimum.
    CHECK(spec.evaluate(SolutionVector::Constant(1, -0.46), rng) > at_min);
    CHECK(spec.evaluate(SolutionVector::Constant(1, -0.44), rng) > at_min);
  }
  SUBCASE("APP1 corner optimum") {
    const ObjectiveSpec spec = lpbsa::app1_igg();
    CHECK(*spec.known_optimum == 3.1);
    ZeroStream rng;
    CHECK(spec.evaluate(SolutionVector::Constant(10, -100.0), rng) == 3.1);
  }
  SUBCASE("APP2 coefficients") {
    const ObjectiveSpec spec = lpbsa::app2_cps(1.0, 2.0, 3.0, 2);
    ZeroStream rng;
    // |(1+1) + 1*(1+1) + 2*(1+1) + 3| = 11 at x = (1, 1).
    CHECK(spec.evaluate(SolutionVector::Constant(2, 1.0), rng) == 11.0);
    CHECK_FALSE(spec.known_optimum.has_value());  // unknown for general A,B,C

    const ObjectiveSpec plain = lpbsa::app2_cps();
    CHECK(*plain.known_optimum == 0.0);
    CHECK(plain.evaluate(SolutionVector::Zero(10), rng) == 0.0);
  }
}

TEST_CASE("CEC transform files load, reshape, and validate") {
  TempDir dir("lpbsa_cec_data_test");

  SUBCASE("a permutation rotation with a shift relocates the optimum") {
    // 10x10 cyclic permutation P: row i selects column (i+1) mod 10.
    std::ofstream out(dir.path / "CEC04.txt");
    out << 10 << "\n";
    for (int i = 0; i < 10; ++i) {
      for (int j = 0; j < 10; ++j) {
        out << ((j == (i + 1) % 10) ? 1 : 0) << ' ';
      }
      out << "\n";
    }
    for (int i = 0; i < 10; ++i) {
      out << (i + 1) << ' ';  // shift = (1, 2, ..., 10)
    }
    out << "\n";
    out.close();

    const BenchmarkCatalog loaded = lpbsa::cec2019_suite(dir.path);
    const BenchmarkCatalog plain = lpbsa::cec2019_suite();
    const ObjectiveSpec& shifted = loaded.at("CEC04");
    const ObjectiveSpec& identity = plain.at("CEC04");

    SolutionVector shift(10);
    for (int i = 0; i < 10; ++i) {
      shift[i] = i + 1;
    }
    ZeroStream rng;
    CHECK(shifted.evaluate(shift, rng) == 1.0);  // exact at the new optimum
    CHECK((*shifted.optimizer) == shift);

    // f_loaded(shift + v) == f_identity(P v) for the permutation P.
    Mt64Stream sampler(3);
    for (int trial = 0; trial < 10; ++trial) {
      SolutionVector v(10);
      for (int g = 0; g < 10; ++g) {
        v[g] = sampler.uniform(-5.0, 5.0);
      }
      SolutionVector pv(10);
      for (int i = 0; i < 10; ++i) {
        pv[i] = v[(i + 1) % 10];
      }
      const double lhs = shifted.evaluate(shift + v, rng);
      const double rhs = identity.evaluate(pv, rng);
      CHECK(spot_close(lhs, rhs));
    }

    // Other functions keep the identity/zero default.
    CHECK(plain.at("CEC05").evaluate(SolutionVector::Zero(10), rng) ==
          loaded.at("CEC05").evaluate(SolutionVector::Zero(10), rng));
  }

  SUBCASE("a truncated file is rejected with the expected shape") {
    std::ofstream out(dir.path / "CEC05.txt");
    out << 10 << "\n";
    for (int i = 0; i < 42; ++i) {
      out << 0.5 << ' ';
    }
    out.close();
    CHECK_THROWS_WITH_AS(static_cast<void>(lpbsa::cec2019_suite(dir.path)),
                         doctest::Contains("CEC05.txt"),
                         lpbsa::DataFileError);
  }

  SUBCASE("a wrong header dimension is rejected") {
    std::ofstream out(dir.path / "CEC06.txt");
    out << 9 << "\n";
    for (int i = 0; i < 9 * 9 + 9; ++i) {
      out << 0.0 << ' ';
    }
    out.close();
    CHECK_THROWS_WITH_AS(static_cast<void>(lpbsa::cec2019_suite(dir.path)),
                         doctest::Contains("dimension"),
                         lpbsa::DataFileError);
  }

  SUBCASE("non-numeric content is rejected") {
    std::ofstream out(dir.path / "CEC07.txt");
    out << "10 hello world\n";
    out.close();
    CHECK_THROWS_AS(static_cast<void>(lpbsa::cec2019_suite(dir.path)),
                    lpbsa::DataFileError);
  }

  SUBCASE("missing files default to identity rotation and zero shift") {
    const BenchmarkCatalog loaded = lpbsa::cec2019_suite(dir.path);
    ZeroStream rng;
    for (int i = 4; i <= 10; ++i) {
      char buf[8];
      std::snprintf(buf, sizeof(buf), "CEC%02d", i);
      CAPTURE(buf);
      CHECK(loaded.at(buf).evaluate(SolutionVector::Zero(10), rng) ==
            doctest::Approx(1.0).epsilon(1e-12));
    }
  }
}
