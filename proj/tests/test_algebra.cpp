#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "semiprim/field.hpp"
#include "semiprim/linear.hpp"
#include "semiprim/perm_group.hpp"

using namespace semiprim;

namespace {

void check_field_axioms_full(const Field &F) {
  std::uint32_t q = F.q();
  for (std::uint32_t a = 0; a < q; ++a) {
    CHECK(F.add(a, 0) == a);
    CHECK(F.mul(a, 1) == a);
    CHECK(F.add(a, F.neg(a)) == 0);
    if (a != 0)
      CHECK(F.mul(a, F.inv(a)) == 1);
  }
  for (std::uint32_t a = 0; a < q; ++a)
    for (std::uint32_t b = 0; b < q; ++b) {
      CHECK(F.add(a, b) == F.add(b, a));
      CHECK(F.mul(a, b) == F.mul(b, a));
      for (std::uint32_t c = 0; c < q; ++c) {
        CHECK(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
        CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
        CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
      }
    }
}

void check_field_axioms_random(const Field &F, int trials) {
  std::mt19937 rng(1234);
  std::uniform_int_distribution<std::uint32_t> dist(0, F.q() - 1);
  for (int i = 0; i < trials; ++i) {
    std::uint32_t a = dist(rng), b = dist(rng), c = dist(rng);
    REQUIRE(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
    REQUIRE(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
    REQUIRE(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
  }
}

Matrix random_matrix(const Field &F, std::uint32_t d, std::mt19937 &rng) {
  std::uniform_int_distribution<std::uint32_t> dist(0, F.q() - 1);
  Matrix m{d, std::vector<std::uint32_t>(d * d)};
  for (auto &v : m.a)
    v = dist(rng);
  return m;
}

} // namespace

TEST_CASE("field axioms hold exactly") {
  for (auto [p, f] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
           {2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2},
           {2, 4}, {5, 2}, {3, 3}, {2, 6}}) {
    Field F(p, f);
    check_field_axioms_full(F);
  }
  check_field_axioms_random(Field(3, 4), 10000); // q = 81
  check_field_axioms_random(Field(2, 7), 10000); // q = 128
}

TEST_CASE("field structure constants") {
  // GF(4): modulus x^2 + x + 1, generator x of order 3 with x^2 + x + 1 = 0.
  Field F4(2, 2);
  CHECK(F4.modulus_low() == 3);
  std::uint32_t l = F4.generator();
  CHECK(F4.pow(l, 3) == 1);
  CHECK(F4.pow(l, 2) != 1);
  CHECK(F4.add(F4.add(F4.mul(l, l), l), 1) == 0);

  // GF(9): Frobenius is the cube map.
  Field F9(3, 2);
  for (std::uint32_t a = 0; a < 9; ++a)
    CHECK(F9.frobenius(a) == F9.pow(a, 3));

  // GF(16): the generator has multiplicative order 15.
  Field F16(2, 4);
  for (std::uint32_t k = 1; k < 15; ++k)
    CHECK(F16.pow(F16.generator(), k) != 1);
  CHECK(F16.pow(F16.generator(), 15) == 1);

  // Frobenius is a field automorphism.
  for (std::uint32_t a = 0; a < 16; ++a)
    for (std::uint32_t b = 0; b < 16; ++b) {
      CHECK(F16.frobenius(F16.add(a, b)) ==
            F16.add(F16.frobenius(a), F16.frobenius(b)));
      CHECK(F16.frobenius(F16.mul(a, b)) ==
            F16.mul(F16.frobenius(a), F16.frobenius(b)));
    }
}

TEST_CASE("field error handling and ordering") {
  CHECK_THROWS_AS(Field(4, 1), std::invalid_argument);
  CHECK_THROWS_AS(Field(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(Field(6, 2), std::invalid_argument);
  CHECK_THROWS_AS(Field(2, 21), std::invalid_argument); // q > 2^20
  CHECK_THROWS_AS(Field(5, 0), std::invalid_argument);

  Field F(3, 2);
  CHECK_THROWS_AS(F.inv(0), std::domain_error);
  CHECK_THROWS_AS(F.log(0), std::domain_error);

  // order_key is a bijection with 0 first.
  std::vector<std::uint32_t> keys;
  for (std::uint32_t a = 0; a < 9; ++a)
    keys.push_back(F.order_key(a));
  CHECK(F.order_key(0) == 0);
  std::sort(keys.begin(), keys.end());
  for (std::uint32_t i = 0; i < 9; ++i)
    CHECK(keys[i] == i);
}

TEST_CASE("determinants") {
  Field F(2, 2);
  CHECK(determinant(F, identity_matrix(3)) == 1);
  Matrix diag = identity_matrix(2);
  diag.at(0, 0) = F.generator();
  CHECK(determinant(F, diag) == F.generator());

  Matrix singular{2, {1, 1, 1, 1}};
  CHECK(determinant(F, singular) == 0);

  std::mt19937 rng(99);
  for (int i = 0; i < 40; ++i) {
    Matrix a = random_matrix(F, 3, rng), b = random_matrix(F, 3, rng);
    CHECK(determinant(F, mat_mul(F, a, b)) ==
          F.mul(determinant(F, a), determinant(F, b)));
  }
}

TEST_CASE("semilinear composition matches permutation composition") {
  Field F(3, 2);
  VectorAction act(F, 2);
  std::mt19937 rng(7);
  int built = 0;
  while (built < 20) {
    Matrix a = random_matrix(F, 2, rng), b = random_matrix(F, 2, rng);
    if (determinant(F, a) == 0 || determinant(F, b) == 0)
      continue;
    std::uniform_int_distribution<std::uint32_t> edist(0, 1);
    SemilinearMap m1{a, edist(rng)}, m2{b, edist(rng)};
    CHECK(act.perm_of(compose(F, m1, m2)) ==
          act.perm_of(m1) * act.perm_of(m2));
    ++built;
  }
}

TEST_CASE("linear groups on nonzero vectors") {
  // GL2(3) on the 8 nonzero vectors: order 48, rank 3, subdegrees (1,1,6).
  auto gl23 = semilinear_group(2, 3, 1, false, 1);
  PermGroup g = action_on_nonzero_vectors(gl23);
  CHECK(g.degree() == 8);
  CHECK(g.order() == 48);
  auto [rank, subdegrees] = g.rank_and_subdegrees();
  CHECK(rank == 3);
  CHECK(subdegrees == std::vector<std::uint64_t>{1, 1, 6});

  // SL2(4): order 60.
  auto sl24 = semilinear_group(2, 2, 2, false, 3);
  CHECK(action_on_nonzero_vectors(sl24).order() == 60);

  // ΓL2(4) on 15 points: order 360 (faithful), subdegrees (1, 2, 12).
  auto gammal24 = semilinear_group(2, 2, 2, true, 1);
  PermGroup gl = action_on_nonzero_vectors(gammal24);
  CHECK(gl.degree() == 15);
  CHECK(gl.order() == 360);
  auto [grank, gsub] = gl.rank_and_subdegrees();
  CHECK(grank == 3);
  CHECK(gsub == std::vector<std::uint64_t>{1, 2, 12});

  // GL3(3) on 26 points: rank 3, subdegrees (1, 1, 24).
  auto gl33 = semilinear_group(3, 3, 1, false, 1);
  PermGroup h = action_on_nonzero_vectors(gl33);
  CHECK(h.degree() == 26);
  CHECK(h.order() == 11232);
  auto [hrank, hsub] = h.rank_and_subdegrees();
  CHECK(hrank == 3);
  CHECK(hsub == std::vector<std::uint64_t>{1, 1, 24});

  CHECK_THROWS_AS(semilinear_group(1, 3, 1, false, 1), std::invalid_argument);
  CHECK_THROWS_AS(semilinear_group(2, 3, 1, false, 5), std::invalid_argument);
}

TEST_CASE("scalar-orbit actions") {
  // d=2, q=9, r=2: C has order 4, giving (81-1)/4 = 20 blocks.
  Field F9(3, 2);
  COrbitAction blocks(F9, 2, 2);
  CHECK(blocks.degree() == 20);

  // GL2(9) acts on blocks with kernel exactly C: image order |GL2(9)|/4.
  auto gl29 = semilinear_group(2, 3, 2, false, 1);
  PermGroup img = blocks.group(gl29.generators);
  CHECK(img.order() == 5760 / 4);

  // The image of the scalar group is cyclic of order r = 2 and semiregular.
  PermGroup scalars(blocks.degree(), {blocks.scalar_image()});
  CHECK(scalars.order() == 2);
  CHECK(scalars.transitivity_profile().is_semiregular);

  // ΣL2(9) on the 20 blocks has rank exceeding 3.
  auto sigmal29 = semilinear_group(2, 3, 2, true, 8);
  PermGroup sig = blocks.group(sigmal29.generators);
  REQUIRE(sig.transitivity_profile().is_transitive);
  auto [srank, ssub] = sig.rank_and_subdegrees();
  CHECK(srank > 3);

  // r = q-1 makes C trivial: the block action coincides with the vector
  // action generator by generator.
  Field F3(3, 1);
  VectorAction vec(F3, 2);
  COrbitAction triv(F3, 2, 2);
  auto gl23 = semilinear_group(2, 3, 1, false, 1);
  for (const auto &m : gl23.generators)
    CHECK(triv.perm_of(m) == vec.perm_of(m));

  CHECK_THROWS_AS(COrbitAction(F9, 2, 3), std::invalid_argument);
}
