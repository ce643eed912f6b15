#include <doctest.h>

#include <cmath>

#include "oracle/dense_oracle.hpp"
#include "squeezelab/error.hpp"
#include "squeezelab/fock.hpp"
#include "squeezelab/states.hpp"

using namespace squeezelab;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::invalid_argument;
}

}  // namespace

TEST_CASE("tolerance defaults are pinned") {
  const auto& tol = default_tolerances();
  CHECK(tol.norm_tol == 1e-12);
  CHECK(tol.moment_tol == 1e-9);
  CHECK(tol.tail_tol == 1e-12);
}

TEST_CASE("constructing from bad amplitudes") {
  CHECK(kind_of([] { FockState(Eigen::VectorXcd()); }) == ErrorKind::invalid_argument);
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(3);
  v(1) = Complex(NAN, 0.0);
  CHECK(kind_of([&] { FockState{v}; }) == ErrorKind::invalid_argument);
}

TEST_CASE("normalize rejects the zero vector") {
  const FockState zero(Eigen::VectorXcd::Zero(4));
  CHECK(kind_of([&] { normalize(zero); }) == ErrorKind::zero_state);
}

TEST_CASE("vacuum and number states") {
  const auto vac = FockState::vacuum();
  CHECK(vac.norm() == doctest::Approx(1.0));
  CHECK(std::abs(moment(vac, 1, 1)) < 1e-15);

  const auto three = FockState::number(3);
  CHECK(moment(three, 1, 1).real() == doctest::Approx(3.0));
  CHECK(moment(three, 2, 2).real() == doctest::Approx(6.0));
  CHECK(std::abs(moment(three, 0, 1)) < 1e-15);
}

TEST_CASE("inner product pads the shorter state") {
  const auto a = FockState::number(2, 0);
  const auto b = FockState::number(2, 10);
  CHECK(std::abs(inner_product(a, b) - Complex(1.0, 0.0)) < 1e-15);
  CHECK(std::abs(inner_product(FockState::number(1), b)) < 1e-15);
}

TEST_CASE("moments agree with explicit matrices") {
  const auto s = squeezed_vacuum(SqueezeParam(0.7, 1.1));
  const auto c = pacs(PacsParam(Complex(0.8, -0.3), 2));
  for (const FockState* st : {&s, &c}) {
    for (int p = 0; p <= 4; ++p) {
      for (int q = 0; q <= 4; ++q) {
        const Complex got = moment(*st, p, q);
        const Complex want = oracle::moment(st->amplitudes(), p, q);
        CHECK(std::abs(got - want) < 1e-10);
      }
    }
  }
}

TEST_CASE("hermiticity of the moment table") {
  const auto st = cat(Complex(1.2, 0.4), CatKind::yurke_stoler);
  const auto table = MomentTable::build(st, 6);
  for (int p = 0; p <= 6; ++p) {
    for (int q = 0; p + q <= 6; ++q) {
      CHECK(std::abs(table.at(p, q) - std::conj(table.at(q, p))) < 1e-12);
    }
  }
  CHECK(table.fingerprint() == fingerprint(st));
  CHECK(table.mean() == table.at(0, 1));
}

TEST_CASE("doubling the cutoff leaves moments unchanged") {
  const FockState states[] = {
      squeezed_vacuum(SqueezeParam(1.5)),
      coherent(Complex(3.0, 0.0)),
      cat(3.0, CatKind::even),
      first_kind_superposition(SqueezeParam(1.5), 3),
      pacs(PacsParam(2.0, 5)),
  };
  for (const auto& st : states) {
    const auto big = st.resized(2 * st.cutoff());
    for (int p = 0; p <= 6; ++p) {
      for (int q = 0; p + q <= 6; ++q) {
        CHECK(std::abs(moment(st, p, q) - moment(big, p, q)) < 1e-9);
      }
    }
  }
}

TEST_CASE("parity selection on sparse support") {
  for (int l : {2, 3}) {
    const auto st = first_kind_superposition(SqueezeParam(1.0), l);
    for (int q = 1; q <= 8; ++q) {
      if (q % (2 * l) == 0) continue;
      CHECK(std::abs(moment(st, 0, q)) < 1e-14);
    }
  }
}

TEST_CASE("cutoff check flags mass at the edge") {
  const auto st = coherent(Complex(2.0, 0.0));
  CHECK_NOTHROW(check_cutoff(st, 4));
  const auto tight = st.resized(6);
  CHECK(kind_of([&] { check_cutoff(tight, 4); }) == ErrorKind::cutoff_too_small);
  CHECK(kind_of([&] { moment(tight, 2, 2); }) == ErrorKind::cutoff_too_small);
}

TEST_CASE("ladder application") {
  const auto five = FockState::number(5, 2);
  const auto lowered = annihilate(five);
  CHECK(std::abs(lowered[4] - Complex(std::sqrt(5.0), 0.0)) < 1e-14);
  const auto raised = create(five);
  CHECK(raised.cutoff() == five.cutoff() + 1);
  CHECK(std::abs(raised[6] - Complex(std::sqrt(6.0), 0.0)) < 1e-14);
}

TEST_CASE("photon number distribution sums to one") {
  const auto st = pacs(PacsParam(1.3, 3));
  const auto p = photon_number_distribution(st);
  double sum = 0.0;
  for (double x : p) sum += x;
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
  for (std::size_t n = 0; n < 3; ++n) CHECK(p[n] < 1e-30);
}

TEST_CASE("operator words") {
  const auto w = parse_operator_word("a† b ad*a");
  REQUIRE(w.size() == 4);
  CHECK(w[0] == Ladder::a_dag);
  CHECK(w[1] == Ladder::b);
  CHECK(w[2] == Ladder::a_dag);
  CHECK(w[3] == Ladder::a);
  const auto adj = adjoint(w);
  CHECK(adj[0] == Ladder::a_dag);
  CHECK(adj[3] == Ladder::a);
  CHECK(kind_of([] { parse_operator_word("a c"); }) == ErrorKind::invalid_argument);
}

TEST_CASE("two-mode moments of the squeezed pair") {
  const auto st = two_mode_squeezed_vacuum(SqueezeParam(1.0));
  const double sh = std::sinh(1.0);
  CHECK(two_mode_moment(st, parse_operator_word("a† a")).real() == doctest::Approx(sh * sh));
  CHECK(two_mode_moment(st, parse_operator_word("b† b")).real() == doctest::Approx(sh * sh));
  // frozen: <a b> = -sinh r cosh r at r = 1
  CHECK(two_mode_moment(st, parse_operator_word("a b")).real() ==
        doctest::Approx(-1.813430).epsilon(1e-6));
  CHECK(two_mode_moment(st, parse_operator_word("a† a")).real() ==
        doctest::Approx(1.381098).epsilon(1e-6));
  CHECK(std::abs(two_mode_moment(st, parse_operator_word("a"))) < 1e-14);
}
