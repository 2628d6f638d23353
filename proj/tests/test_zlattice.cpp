#include <random>

#include "a4csl/zlattice.hpp"
#include "doctest.h"

using namespace a4csl;

namespace {

const KNum t = KNum::tau();

std::vector<RationalVec4> reference_csl_rows() {
  std::vector<RationalVec4> rows;
  for (const char* v : {"(1,2,0,0)", "(2,-1,0,0)", "(3/2,1/2,1/2,1/2)", "(-1,1/2,(t-1)/2,-t/2)"}) {
    auto y = to_L_coords(parse_quat(v));
    REQUIRE_MESSAGE(y.has_value(), v);
    rows.push_back(*y);
  }
  return rows;
}

SublatticeL random_sublattice(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-6, 6);
  for (;;) {
    IntMatrix m(4, 4);
    for (size_t i = 0; i < 4; ++i)
      for (size_t j = 0; j < 4; ++j) m(i, j) = d(rng);
    if (hnf(m).rows() == 4) return SublatticeL(m);
  }
}

Integer det4(const IntMatrix& m) {
  RationalMatrix4 r{};
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = 0; j < 4; ++j) r[i][j] = Rational(m(i, j));
  return boost::multiprecision::numerator(determinant(r));
}

}  // namespace

TEST_CASE("Gram matrix of L is half the Cartan matrix of A4") {
  const int cartan[4][4] = {{2, -1, 0, 0}, {-1, 2, -1, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}};
  RationalMatrix4 g = gram_L();
  const auto& b = lattice_basis();
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = 0; j < 4; ++j) {
      CHECK(g[i][j] == Rational(cartan[i][j], 2));
      KNum ip = inner(b[i], b[j]);  // computed independently in K
      CHECK(ip.is_rational());
      CHECK(ip.a() == g[i][j]);
    }
  CHECK(determinant(g) == Rational(5, 16));
}

TEST_CASE("basis of L") {
  const auto& b = lattice_basis();
  CHECK(b[1] == KNum(Rational(1, 2)) * Quat(-1, 1, 1, 1));
  CHECK(b[3] == KNum(Rational(1, 2)) * Quat(0, 1, KNum(-1, 1), -t));
  for (const auto& v : b) {
    CHECK(twist(v) == v);
    CHECK(to_icosian(v).has_value());
  }
}

TEST_CASE("L-coordinates") {
  CHECK(to_L_coords(lattice_basis()[1]) == RationalVec4{0, 1, 0, 0});
  auto y = to_L_coords(Quat(1, 2, 0, 0));
  REQUIRE(y.has_value());
  for (const auto& c : *y) CHECK(boost::multiprecision::denominator(c) == 1);
  CHECK(from_L_coords(*y) == Quat(1, 2, 0, 0));
  CHECK(!to_L_coords(Quat(0, 0, 1, 0)).has_value());
  CHECK(!to_L_coords(Quat(t, 0, 0, 0)).has_value());
}

TEST_CASE("hnf4") {
  CHECK(hnf4({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}).index() == 1);
  CHECK(hnf4({{2, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 2}}).index() == 16);
  SublatticeL reference = hnf4(reference_csl_rows());
  CHECK(reference.index() == 5);
  // oracle: |det| of the coordinate rows
  RationalMatrix4 rows{};
  auto pr = reference_csl_rows();
  for (size_t i = 0; i < 4; ++i) rows[i] = pr[i];
  CHECK(boost::multiprecision::abs(determinant(rows)) == 5);
  CHECK_THROWS_AS(hnf4({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {1, 1, 1, 0}}), DomainError);
  CHECK_THROWS_AS(hnf4({{Rational(1, 2), 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}), DomainError);
}

TEST_CASE("intersection and sum") {
  SublatticeL two = SublatticeL::scaled_whole(2), three = SublatticeL::scaled_whole(3);
  CHECK(intersect(two, three) == SublatticeL::scaled_whole(6));
  CHECK(sum(two, three) == SublatticeL::whole());
  SublatticeL a = hnf4(reference_csl_rows());
  CHECK(intersect(a, SublatticeL::whole()) == a);
  CHECK(sum(a, SublatticeL::whole()) == SublatticeL::whole());
}

TEST_CASE("dual lattice") {
  RationalMatrix4 g = gram_L();
  RationalMatrix4 d = dual_L();
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = 0; j < 4; ++j) {
      Rational ip = 0;  // <b_i*, b_j> with b_i* = sum_k d[i][k] b_k
      for (size_t k = 0; k < 4; ++k) ip += d[i][k] * g[k][j];
      CHECK(ip == (i == j ? 1 : 0));
    }
  CHECK(determinant(d) == Rational(16, 5));
}

TEST_CASE("module_to_L and phi_plus_image") {
  CHECK(module_to_L(whole_ring()) == SublatticeL::whole());
  CHECK(module_to_L(Rank8Module(IntMatrix::identity(8).scaled(2))) == SublatticeL::scaled_whole(2));
  CHECK(phi_plus_image(Icosian::one()) == SublatticeL::whole());
  CHECK(phi_plus_image(OInt(2) * Icosian::one()) == SublatticeL::scaled_whole(2));
  auto q = to_icosian(Quat(1, 2, 0, 0));
  REQUIRE(q.has_value());
  CHECK(phi_plus_image(*q) == hnf4(reference_csl_rows()));
}

TEST_CASE("HNF canonicity (random)") {
  std::mt19937_64 rng(37);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int n = 0; n < 300; ++n) {
    SublatticeL a = random_sublattice(rng);
    CHECK(SublatticeL(a.hnf()) == a);
    CHECK(det4(a.hnf()) == a.index());
    IntMatrix mixed = a.hnf();
    for (int step = 0; step < 10; ++step) {
      size_t i = static_cast<size_t>(rng() % 4), j = static_cast<size_t>(rng() % 4);
      if (i == j) {
        for (size_t c = 0; c < 4; ++c) mixed(i, c) = -mixed(i, c);
        continue;
      }
      int k = d(rng);
      for (size_t c = 0; c < 4; ++c) mixed(i, c) += k * mixed(j, c);
    }
    CHECK(SublatticeL(mixed) == a);
    std::vector<RationalVec4> rows;
    for (size_t i = 0; i < 4; ++i) rows.push_back({Rational(mixed(i, 0)), Rational(mixed(i, 1)), Rational(mixed(i, 2)), Rational(mixed(i, 3))});
    CHECK(hnf4(rows) == a);
  }
}

TEST_CASE("meet and join index identity (random)") {
  std::mt19937_64 rng(41);
  for (int n = 0; n < 300; ++n) {
    SublatticeL a = random_sublattice(rng), b = random_sublattice(rng);
    SublatticeL m = intersect(a, b), j = sum(a, b);
    // [A : A cap B] = [A + B : B]
    CHECK(m.index() / a.index() == b.index() / j.index());
    CHECK(m.index() % a.index() == 0);
    CHECK(b.index() % j.index() == 0);
    for (size_t r = 0; r < 4; ++r) {
      std::array<Integer, 4> v{m.hnf()(r, 0), m.hnf()(r, 1), m.hnf()(r, 2), m.hnf()(r, 3)};
      CHECK(a.contains(v));
      CHECK(b.contains(v));
      std::array<Integer, 4> w{a.hnf()(r, 0), a.hnf()(r, 1), a.hnf()(r, 2), a.hnf()(r, 3)};
      CHECK(j.contains(w));
    }
  }
}

TEST_CASE("rational matrix helpers") {
  RationalMatrix4 g = gram_L();
  CHECK(g * inverse(g) == identity4());
  CHECK(transpose(transpose(g)) == g);
  CHECK(preserves_gram(identity4()));
  RationalMatrix4 swap = identity4();
  swap[0][0] = 0;
  swap[0][1] = 1;
  swap[1][1] = 0;
  swap[1][0] = 1;
  CHECK(!preserves_gram(swap));
  RationalMatrix4 zero{};
  CHECK_THROWS_AS(inverse(zero), DomainError);
}
