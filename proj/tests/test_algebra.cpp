#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "taureg/algebra.hpp"
#include "taureg/fixtures.hpp"

using namespace taureg;
using Q = Rational;

namespace {

// Monomial relations of the fixtures, as arrow-index words.
std::vector<std::vector<int>> monomial_relations(const std::string& name) {
  if (name == "ALG-B") return {{0, 1}};
  if (name == "ALG-C") return {{0, 1}, {0, 2}, {1, 0}, {2, 0}};
  return {};
}

Vector<Q> path_vec(const Algebra<Q>& a, const std::string& text) {
  return a.element(parse_combination(a.quiver(), text, 0));
}

}  // namespace

TEST_CASE("monomial and hereditary fixtures match path counting") {
  for (const std::string name : {"ALG-B", "ALG-B0", "ALG-C", "ALG-K"}) {
    CAPTURE(name);
    const auto a = fixture_algebra<Q>(name);
    const auto paths = oracle::monomial_paths(a->quiver(), monomial_relations(name), 10);
    CHECK(a->dim() == static_cast<int>(paths.size()));
    for (int s = 0; s < a->num_vertices(); ++s)
      for (int t = 0; t < a->num_vertices(); ++t)
        CHECK(static_cast<int>(a->between(s, t).size()) == oracle::count_between(paths, s, t));
  }
  CHECK(fixture_algebra<Q>("ALG-B")->dim() == 5);
}

TEST_CASE("ALG-A dimensions") {
  // 3 idempotents, 6 arrows, 9 paths a_i b_j cut down by 6 independent relations.
  const auto a = fixture_algebra<Q>("ALG-A");
  CHECK(a->dim() == 3 + 6 + 9 - 6);
  CHECK(a->max_length() == 2);
  CHECK(a->between(2, 0).size() == 3);
  CHECK(a->between(1, 0).size() == 3);
  CHECK(a->starting_at(2).size() == 7);
  CHECK(radical(*a).dim() == 9);
}

TEST_CASE("relations hold in the algebra") {
  const auto a = fixture_algebra<Q>("ALG-A");
  for (const auto& r : a->presentation().relations) CHECK(is_zero_matrix(a->element(r)));
  // a1 b2 = a2 b1 and a1 b3 = -a3 b1
  CHECK(path_vec(*a, "a1*b2") == path_vec(*a, "a2*b1"));
  CHECK(path_vec(*a, "a1*b3") == -path_vec(*a, "a3*b1"));
  CHECK_FALSE(is_zero_matrix(path_vec(*a, "a1*b2")));
}

TEST_CASE("associativity, unit and idempotents") {
  for (const auto& name : fixture_names()) {
    CAPTURE(name);
    const auto a = fixture_algebra<Q>(name);
    const int n = a->dim();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          const auto x = a->unit_vector(i), y = a->unit_vector(j), z = a->unit_vector(k);
          REQUIRE(a->multiply(a->multiply(x, y), z) == a->multiply(x, a->multiply(y, z)));
        }
    for (int i = 0; i < n; ++i) {
      CHECK(a->multiply(a->one(), a->unit_vector(i)) == a->unit_vector(i));
      CHECK(a->multiply(a->unit_vector(i), a->one()) == a->unit_vector(i));
    }
    for (int v = 0; v < a->num_vertices(); ++v)
      for (int w = 0; w < a->num_vertices(); ++w) {
        const auto ev = a->unit_vector(a->idempotent(v)), ew = a->unit_vector(a->idempotent(w));
        CHECK(a->multiply(ev, ew) == (v == w ? ev : Vector<Q>::Zero(n).eval()));
      }
  }
}

TEST_CASE("opposite algebra") {
  const auto b = fixture_algebra<Q>("ALG-B");
  const auto op = b->opposite();
  CHECK(op->dim() == b->dim());
  CHECK(op->quiver().arrows[0].source == 0);
  CHECK(op->quiver().arrows[0].target == 1);
  CHECK(op->opposite() == b);
  CHECK(op->presentation().relations.size() == 1);
  // in A^op the product x·y is y·x of A
  for (int i = 0; i < b->dim(); ++i)
    for (int j = 0; j < b->dim(); ++j)
      CHECK(op->multiply(op->unit_vector(i), op->unit_vector(j)) ==
            b->multiply(b->unit_vector(j), b->unit_vector(i)));
}

TEST_CASE("ideals") {
  const auto c = fixture_algebra<Q>("ALG-C");
  const auto ia = generate_ideal(*c, {path_vec(*c, "a")});
  CHECK(ia.dim() == 1);
  CHECK(is_two_sided(*c, ia));
  const auto ib = generate_ideal(*c, {path_vec(*c, "b")});
  CHECK(intersect(ia, ib).dim() == 0);
  CHECK(generate_ideal(*c, {path_vec(*c, "e(1)")}).dim() == 4);  // e1, a, b, c
  CHECK(generate_ideal(*c, {c->one()}) == whole_algebra(*c));
  CHECK(intersect(radical(*c), whole_algebra(*c)) == radical(*c));
  Ideal<Q> not_closed = subspace_normal_form<Q>(Matrix<Q>(path_vec(*c, "e(1)")));
  CHECK_FALSE(is_two_sided(*c, not_closed));

  const auto a = fixture_algebra<Q>("ALG-A");
  const auto i = generate_ideal(*a, {path_vec(*a, "b1")});
  // b1 and the two independent products a_k b1 (a1 b1 = 0)
  CHECK(i.dim() == 3);
}

TEST_CASE("quotients") {
  const auto c = fixture_algebra<Q>("ALG-C");
  const auto q = quotient_algebra(c, generate_ideal(*c, {path_vec(*c, "a")}));
  CHECK(q.algebra->dim() == 4);
  CHECK(q.algebra->num_arrows() == 2);
  CHECK(q.algebra->presentation().relations.empty());
  CHECK(q.arrow_map[0] == -1);
  CHECK(q.projection.rows() == 4);
  // the projection is multiplicative
  for (int i = 0; i < c->dim(); ++i)
    for (int j = 0; j < c->dim(); ++j)
      CHECK(q.projection * c->multiply(c->unit_vector(i), c->unit_vector(j)) ==
            q.algebra->multiply(q.projection * c->unit_vector(i), q.projection * c->unit_vector(j)));

  const auto b0 = fixture_algebra<Q>("ALG-B0");
  const auto qb = quotient_algebra(b0, generate_ideal(*b0, {path_vec(*b0, "a*b")}));
  CHECK(qb.algebra->dim() == 5);
  CHECK(qb.algebra->presentation().relations.size() == 1);

  // killing a vertex
  const auto qe = quotient_algebra(b0, generate_ideal(*b0, {path_vec(*b0, "e(3)")}));
  CHECK(qe.algebra->num_vertices() == 2);
  CHECK(qe.vertex_map[2] == -1);
  CHECK(qe.algebra->dim() == 3);
  CHECK_THROWS_AS(quotient_algebra(b0, whole_algebra(*b0)), std::invalid_argument);
}

TEST_CASE("infinite-dimensional presentations are rejected") {
  const auto loop = parse_quiver("vertices: 1\narrow x: 1 -> 1\n");
  CHECK_THROWS_AS(build_algebra<Q>(loop, 8), NotFiniteDimensional);
  const auto nil = parse_quiver("vertices: 1\narrow x: 1 -> 1\nrelations:\nx*x*x\n");
  CHECK(build_algebra<Q>(nil)->dim() == 3);
  // the ideal (x^2 - y^2, xy, yx) on two loops leaves 1, x, y, x^2
  const auto two = parse_quiver("vertices: 1\narrow x: 1 -> 1\narrow y: 1 -> 1\nrelations:\nx*x - y*y\nx*y\ny*x\n");
  CHECK(build_algebra<Q>(two)->dim() == 4);
}

TEST_CASE("algebras over a prime field") {
  Fp::set_modulus(101);
  const auto a = fixture_algebra<Fp>("ALG-A");
  CHECK(a->dim() == 12);
  CHECK(a->field_name() == "F_101");
  Fp::set_modulus(Fp::kDefaultModulus);
}
