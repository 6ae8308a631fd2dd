#include <doctest.h>

#include <cavepr/fock.hpp>

using namespace cavepr;

TEST_CASE("mode space validation") {
  CHECK_THROWS_AS(ModeSpace({{"a", 2}, {"a", 3}}), std::invalid_argument);
  CHECK_THROWS_AS(ModeSpace({{"a", 1}}), std::invalid_argument);
  CHECK_THROWS_AS(ModeSpace({{"dipole", 3}}), std::invalid_argument);
  const ModeSpace s{{"dipole", 2}, {"motion", 5}, {"cav1", 4}};
  CHECK(s.total_dim() == 40);
  CHECK(s.stride(2) == 1);
  CHECK(s.stride(1) == 4);
  CHECK(s.stride(0) == 20);
  CHECK(s.index("motion") == 1);
  CHECK_THROWS_AS(s.index("nope"), std::out_of_range);
}

TEST_CASE("ladder operators") {
  const ModeSpace s{{"m", 3}};
  const Operator a = annihilation(s, "m");
  Vector one = fock_vector(s, {1});
  Vector two = fock_vector(s, {2});
  CHECK((a.matrix * one - fock_vector(s, {0})).norm() == doctest::Approx(0.0));
  CHECK((a.matrix * two - std::sqrt(2.0) * one).norm() ==
        doctest::Approx(0.0));
}

TEST_CASE("truncated canonical commutator") {
  const ModeSpace s{{"m", 20}};
  const Operator a = annihilation(s, "m");
  const Matrix comm = a.matrix * a.matrix.adjoint() -
                      a.matrix.adjoint() * a.matrix;
  // identity except the top level
  for (int n = 0; n < 19; ++n)
    CHECK(std::abs(comm(n, n) - 1.0) < 1e-14);
  CHECK(std::abs(comm(19, 19) + 19.0) < 1e-12);
}

TEST_CASE("tensor embedding") {
  const ModeSpace s{{"m1", 3}, {"m2", 4}};
  const Operator id = tensor_embed(Matrix::Identity(3, 3), s, "m1");
  CHECK((id.matrix - Matrix::Identity(12, 12)).norm() == doctest::Approx(0.0));

  const Operator a = annihilation(s, "m1");
  const Operator b = annihilation(s, "m2");
  CHECK((a.matrix * b.matrix - b.matrix * a.matrix).norm() < 1e-12);

  Matrix op = Matrix::Random(3, 3);
  const Operator e = tensor_embed(op, s, "m1");
  CHECK(std::abs(e.matrix.trace() - op.trace() * 4.0) < 1e-12);
  CHECK_THROWS_AS(tensor_embed(Matrix::Identity(2, 2), s, "m1"),
                  std::invalid_argument);
}

TEST_CASE("basis ordering: last mode varies fastest") {
  const ModeSpace s{{"m1", 2}, {"m2", 3}};
  // |n1=1, n2=2> sits at flat index 1*3 + 2 = 5
  Vector v = fock_vector(s, {1, 2});
  CHECK(std::abs(v(5) - 1.0) < 1e-15);
  const Operator n2 = number_operator(s, "m2");
  CHECK(std::abs(expectation(s, v, n2) - 2.0) < 1e-14);
}

TEST_CASE("expectation values") {
  const ModeSpace s{{"m", 30}};
  const Operator n = number_operator(s, "m");
  CHECK(std::abs(expectation(vacuum_state(s), n)) < 1e-15);

  DensityState one{s, Matrix::Zero(30, 30)};
  one.matrix(1, 1) = 1.0;
  CHECK(std::abs(expectation(one, n) - 1.0) < 1e-14);

  const DensityState th = thermal_state(s, "m", 0.5);
  CHECK(std::abs(expectation(th, n) - 0.5) < 1e-6);

  const ModeSpace other{{"m", 31}};
  CHECK_THROWS_AS(expectation(vacuum_state(other), n),
                  std::invalid_argument);
}

TEST_CASE("thermal state") {
  const ModeSpace s{{"m", 40}};
  const DensityState vac = thermal_state(s, "m", 0.0);
  CHECK((vac.matrix - vacuum_state(s).matrix).norm() < 1e-15);
  CHECK_THROWS_AS(thermal_state(s, "m", -0.1), std::invalid_argument);

  const DensityState th = thermal_state(s, "m", 1.0);
  th.validate();
  CHECK(std::abs(th.matrix(0, 0).real() - 0.5) < 1e-10);
  CHECK(purity(th) == doctest::Approx(1.0 / 3.0).epsilon(1e-6));
}

TEST_CASE("thermal state valid up to dim/4") {
  const ModeSpace s{{"m", 40}};
  thermal_state(s, "m", 10.0).validate();
}

TEST_CASE("partial trace") {
  const ModeSpace s{{"m1", 3}, {"m2", 4}};
  Vector v = fock_vector(s, {1, 2});
  const DensityState red = partial_trace(s, v, {"m2"});
  CHECK(red.space.total_dim() == 4);
  CHECK(std::abs(red.matrix(2, 2) - 1.0) < 1e-14);

  // entangled state -> mixed marginal
  Vector bell = (fock_vector(s, {0, 0}) + fock_vector(s, {1, 1})) /
                std::sqrt(2.0);
  const DensityState m1 = partial_trace(s, bell, {"m1"});
  CHECK(purity(m1) == doctest::Approx(0.5));

  const DensityState full{s, bell * bell.adjoint()};
  const DensityState m1b = partial_trace(full, {"m1"});
  CHECK((m1.matrix - m1b.matrix).norm() < 1e-14);
}

TEST_CASE("fidelity") {
  const ModeSpace s{{"m", 6}};
  const DensityState vac = vacuum_state(s);
  CHECK(fidelity(vac, vac) == doctest::Approx(1.0));
  DensityState one{s, Matrix::Zero(6, 6)};
  one.matrix(1, 1) = 1.0;
  CHECK(fidelity(vac, one) == doctest::Approx(0.0));
  const DensityState th = thermal_state(s, "m", 0.3);
  CHECK(fidelity(th, th) == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("density state validation") {
  const ModeSpace s{{"m", 3}};
  DensityState bad{s, Matrix::Identity(3, 3)};  // trace 3
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad.matrix /= 3.0;
  bad.validate();
  bad.matrix(0, 1) = 0.5;  // not Hermitian
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("top level population") {
  const ModeSpace s{{"m1", 3}, {"m2", 4}};
  Vector v = fock_vector(s, {2, 0});
  CHECK(top_level_population(s, v) == doctest::Approx(1.0));
  CHECK(top_level_population(s, fock_vector(s, {0, 0})) ==
        doctest::Approx(0.0));
}
