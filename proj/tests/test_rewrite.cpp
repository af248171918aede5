#include "qcat/pbw.hpp"
#include "qcat/rewrite.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace qcat;
using test::q;
using test::term;

namespace {

enum : Letter { a, b, c, d };

/// Degree-3 part of the ideal, as a coefficient matrix over the words.
Matrix ideal3(const RelationSet& r) {
  const std::size_t n = r.alphabet.size();
  Matrix out(0, n * n * n);
  for (const auto& rel : r.polys)
    for (Letter x = 0; x < n; ++x) {
      Vector left(n * n * n), right(n * n * n);
      for (const auto& [w, coeff] : rel.terms()) {
        left[(x * n + w[0]) * n + w[1]] += coeff;
        right[(w[0] * n + w[1]) * n + x] += coeff;
      }
      out.append_row(left);
      out.append_row(right);
    }
  return out;
}

Vector coords3(const NCPoly& p, std::size_t n) {
  Vector v(n * n * n);
  for (const auto& [w, coeff] : p.terms()) v[(w[0] * n + w[1]) * n + w[2]] += coeff;
  return v;
}

bool in_ideal3(const RelationSet& r, const NCPoly& p) {
  Matrix ideal = ideal3(r);
  const std::size_t before = rank(ideal);
  ideal.append_row(coords3(p, r.alphabet.size()));
  return rank(ideal) == before;
}

}  // namespace

TEST_CASE("monomial order") {
  CHECK(monomial_compare({a}, {b}) == std::strong_ordering::less);
  CHECK(monomial_compare({b, a}, {a, b}) == std::strong_ordering::greater);
  CHECK(monomial_compare({c, a}, {c, a}) == std::strong_ordering::equal);
  CHECK(monomial_compare({d}, {a, a}) == std::strong_ordering::less);

  auto alpha = hom_alphabet(GradedSpace({0, 1}), GradedSpace({0, 0}));
  // a=t1^1 even, c=t2^1 odd.
  CHECK(is_ordered_word(alpha, {a, a, b}));
  CHECK_FALSE(is_ordered_word(alpha, {b, a}));
  CHECK_FALSE(is_ordered_word(alpha, {c, c}));
  CHECK(is_ordered_word(alpha, {a, c, d}));
}

TEST_CASE("classical rewriting rules") {
  auto cl = make_classical(GradedSpace({0, 1}));
  auto h = make_hom_algebra(cl, cl);
  auto rs = build_rewrite_system(h.relations);
  CHECK_FALSE(rs.degree2_defect());
  const std::size_t n = h.generator_count();
  for (Letter x = 0; x < n; ++x)
    for (Letter y = 0; y < n; ++y) {
      const NCPoly* rule = rs.rule(x, y);
      if (x > y) {
        REQUIRE(rule != nullptr);
        CHECK(*rule == term(y, x, parity_sign(h.alphabet.parity(x) * h.alphabet.parity(y))));
      } else if (x == y && h.alphabet.parity(x)) {
        REQUIRE(rule != nullptr);
        CHECK(rule->is_zero());
      } else {
        CHECK(rule == nullptr);
      }
    }
  CHECK(confluence_check(rs).confluent());
}

TEST_CASE("2x2 example rewriting") {
  auto h = make_hom_algebra(test::even2(q(3), q(2)), test::even2(q(5), q(4)));
  auto rs = build_rewrite_system(h.relations);
  CHECK(rs.rule_count() == 6);
  CHECK_FALSE(rs.degree2_defect());
  for (const auto& [lhs, rhs] : rs.rules()) {
    CHECK_FALSE(is_ordered_word(h.alphabet, lhs));
    for (const auto& [w, coeff] : rhs.terms()) CHECK(monomial_compare(w, lhs) == std::strong_ordering::less);
  }
  // da = (9/5) ad + (7/5) cb holds modulo the relations.
  CHECK(normal_form(term(d, a), rs) == normal_form(term(a, d, q(9, 5)) + term(c, b, q(7, 5)), rs));
  CHECK(normal_form(term(d, a) - term(a, d, q(9, 5)) - term(c, b, q(7, 5)), rs).is_zero());

  // Rules depend on the span only.
  auto polys = h.relations.polys;
  polys.push_back(q(2) * polys[0] - polys[3]);
  auto again = build_rewrite_system(make_relation_set(h.alphabet, polys));
  REQUIRE(again.rule_count() == rs.rule_count());
  for (std::size_t i = 0; i < rs.rule_count(); ++i) {
    CHECK(again.rules()[i].first == rs.rules()[i].first);
    CHECK(again.rules()[i].second == rs.rules()[i].second);
  }
}

TEST_CASE("normal forms") {
  auto alpha = test::normalized2(q(2), -1, q(5));
  auto beta = test::normalized2(q(3), -1, q(5));
  auto h = make_hom_algebra(alpha, beta);
  auto rs = build_rewrite_system(h.relations);

  NCPoly ordered = NCPoly::monomial({a, b, d});
  CHECK(normal_form(ordered, rs) == ordered);

  NormalFormTrace trace;
  NCPoly cba = NCPoly::monomial({c, b, a});
  NCPoly nf = normal_form(cba, rs, &trace);
  CHECK(trace.monotone);
  CHECK(trace.steps > 0);
  for (const auto& [w, coeff] : nf.terms()) CHECK(is_ordered_word(h.alphabet, w));
  CHECK(in_ideal3(h.relations, cba - nf));

  test::Random rnd(6);
  for (int i = 0; i < 10; ++i) {
    NCPoly p;
    for (int k = 0; k < 4; ++k)
      p.add_term({static_cast<Letter>(rnd.index(4)), static_cast<Letter>(rnd.index(4)), static_cast<Letter>(rnd.index(4))},
                 rnd.rational());
    NormalFormTrace t;
    NCPoly r = normal_form(p, rs, &t);
    CHECK(t.monotone);
    CHECK(in_ideal3(h.relations, p - r));
    for (const auto& [w, coeff] : r.terms()) CHECK(is_ordered_word(h.alphabet, w));
  }
}

TEST_CASE("odd squares rewrite to zero") {
  // t_1^1 is odd for an odd source line and an even target line.
  auto src = make_classical(GradedSpace({1}));
  auto tgt = make_classical(GradedSpace({0}));
  auto h = make_hom_algebra(src, tgt);
  REQUIRE(h.alphabet.parity(0) == 1);
  auto rs = build_rewrite_system(h.relations);
  CHECK(normal_form(NCPoly::monomial({0, 0}), rs).is_zero());

  // The same through a one-row relation in a super sudbery object.
  auto super = test::sudbery({1, 0}, {{{0, 1}, q(2)}}, {{{0, 1}, q(3)}});
  auto h2 = make_hom_algebra(super, super);
  auto rs2 = build_rewrite_system(h2.relations);
  const Letter odd = hom_letter(0, 1, 2);
  REQUIRE(h2.alphabet.parity(odd) == 1);
  CHECK(normal_form(NCPoly::monomial({odd, odd}), rs2).is_zero());
}

TEST_CASE("confluence agrees with the dimension oracle") {
  auto cl = make_classical(GradedSpace({0, 0}));
  CHECK(confluence_check(build_rewrite_system(make_hom_algebra(cl, cl).relations)).confluent());

  auto good = make_hom_algebra(test::even2(q(1), q(1, 3)), test::even2(q(2), q(2, 3)));
  auto good_report = confluence_check(build_rewrite_system(good.relations));
  CHECK(good_report.confluent());
  CHECK(dimension_oracle(good, 3) == 20);

  // c = 2 against c = 3.
  auto bad = make_hom_algebra(test::even2(q(1), q(1, 2)), test::even2(q(1), q(1, 3)));
  auto bad_report = confluence_check(build_rewrite_system(bad.relations));
  CHECK(bad_report.failures() >= 1);
  CHECK(dimension_oracle(bad, 3) < 20);

  // The cba overlap resolves to the same ordered combination both ways.
  auto h = make_hom_algebra(test::normalized2(q(2), -1, q(5)), test::normalized2(q(3), -1, q(5)));
  auto report = confluence_check(build_rewrite_system(h.relations));
  bool seen = false;
  for (const auto& o : report.overlaps)
    if (o.word == Word{c, b, a}) {
      seen = true;
      CHECK(o.resolved);
      CHECK(o.via_left == o.via_right);
    }
  CHECK(seen);
}

TEST_CASE("confluence matches the oracle on random instances") {
  test::Random rnd(303);
  for (int i = 0; i < 40; ++i) {
    auto alpha = rnd.coin() ? rnd.structured(1 + rnd.index(3), rnd.constant()) : rnd.unstructured(1 + rnd.index(3));
    auto beta = rnd.coin() ? rnd.structured(1 + rnd.index(3), rnd.constant()) : rnd.unstructured(1 + rnd.index(3));
    auto h = make_hom_algebra(alpha, beta);
    auto rs = build_rewrite_system(h.relations);
    CHECK_FALSE(rs.degree2_defect());
    const bool classical3 = dimension_oracle(h, 3) == classical_dimension(h.alphabet, 3);
    CHECK(confluence_check(rs).confluent() == classical3);
  }
}
