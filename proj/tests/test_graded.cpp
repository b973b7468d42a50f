#include "doctest.h"

#include "ainf/fixtures.hpp"
#include "test_support.hpp"

using namespace ainf;

namespace {

RingRef k7() { return Ring::integers_mod(7); }

GradedSpace xyz(Grading g = Grading::integer()) { return GradedSpace(k7(), g, {{"x", 0}, {"y", 1}, {"z", 2}}); }

MultiOp identity_op(const GradedSpace& s) {
  MultiOp id(s.ring(), 0);
  for (Letter l = 0; l < s.rank(); ++l) id.set({l}, Vec<Letter>(s.ring(), l));
  return id;
}

// Homogeneous random family of the given degree on words of length <= max_len.
MultiOp random_op(Rng& rng, const GradedSpace& s, Degree degree, std::size_t max_len, bool with_arity_zero) {
  MultiOp op(s.ring(), degree);
  for (const auto& w : all_words(s.rank(), max_len)) {
    if (w.empty() && !with_arity_zero) continue;
    Vec<Letter> out(s.ring());
    for (Letter l = 0; l < s.rank(); ++l)
      if (s.grading().same(s.degree(l), word_degree(s, w) + degree) && rng.uniform(0, 2) == 0)
        out.add(l, random_elem(rng, s.ring()));
    op.set(w, std::move(out));
  }
  return op;
}

// (A ⊠ B)(u ⊠ v) with Koszul sign (-1)^{|B||u|}.
Vec<Split> tensor_splits(const GradedSpace& s, const Vec<Split>& in, const std::function<Vec<Word>(const Word&)>& left,
                         const std::function<Vec<Word>(const Word&)>& right, Degree right_degree) {
  Vec<Split> out(s.ring());
  for (const auto& [sp, c] : in) {
    int sign = is_odd(right_degree) ? sign_of(word_degree(s, sp.first)) : 1;
    for (const auto& [lu, lc] : left(sp.first))
      for (const auto& [rv, rc] : right(sp.second)) out.add(Split{lu, rv}, c * lc * rc, sign);
  }
  return out;
}

Vec<Split> comultiply_vec(RingRef r, const Vec<Word>& v) {
  Vec<Split> out(r);
  for (const auto& [w, c] : v) out.add_scaled(comultiply(r, w, false), c);
  return out;
}

}  // namespace

TEST_CASE("shift lowers degrees by one") {
  auto s = xyz().shift();
  CHECK(s.degree(2) == 1);
  CHECK(s.name(2) == "z");
  Grading z2 = Grading::cyclic(2);
  CHECK(z2.same(GradedSpace(k7(), z2, {{"e", 0}}).shift().degree(0), 1));
  CHECK(z2.normalize(-1) == 1);
  CHECK(z2.describe() == "Z/2");
  CHECK(Grading::integer().describe() == "Z");
}

TEST_CASE("koszul_apply oracles") {
  auto s = xyz();
  MultiOp id = identity_op(s);
  const MultiOp* ops[] = {&id, &id};
  std::size_t blocks[] = {1, 1};
  CHECK(koszul_apply(s, ops, blocks, {0, 1}) == Vec<Word>(k7(), Word{0, 1}));

  // 1 ⊗ ψ with |ψ| = 1 on y ⊗ y, |y| odd: the sign is -1.
  MultiOp psi(k7(), 1);
  psi.set({1}, Vec<Letter>(k7(), 2));
  const MultiOp* ops2[] = {&id, &psi};
  CHECK(koszul_apply(s, ops2, blocks, {1, 1}) == -Vec<Word>(k7(), Word{1, 2}));
  // Preceded by x of even degree there is no sign.
  CHECK(koszul_apply(s, ops2, blocks, {0, 1}) == Vec<Word>(k7(), Word{0, 2}));

  // Block of degree 3 (y ⊗ z) before a degree-one op on z.
  MultiOp sigma(k7(), 1);
  sigma.set({2}, Vec<Letter>(k7(), 1));
  MultiOp pair(k7(), 0);
  pair.set({1, 2}, Vec<Letter>(k7(), 1));
  const MultiOp* ops3[] = {&pair, &sigma};
  std::size_t blocks3[] = {2, 1};
  CHECK(koszul_apply(s, ops3, blocks3, {1, 2, 2}) == -Vec<Word>(k7(), Word{1, 1}));

  std::size_t bad[] = {1, 2};
  CHECK_THROWS_AS(koszul_apply(s, ops, bad, {0, 1}), StructuralError);
}

TEST_CASE("geometric_extend oracles") {
  auto s = xyz();
  MultiOp id = identity_op(s);
  CHECK(geometric_extend(s, id, {0, 1, 2}) == Vec<Word>(k7(), Word{0, 1, 2}));
  CHECK(geometric_extend(s, id, {}) == Vec<Word>(k7(), Word{}));

  // f₁ = id and f₂(a, b) = x: compositions 1+1+1, 1+2, 2+1.
  MultiOp f = id;
  for (Letter a = 0; a < 3; ++a)
    for (Letter b = 0; b < 3; ++b)
      if (s.degree(a) + s.degree(b) == 0) f.set({a, b}, Vec<Letter>(k7(), 0));
  auto out = geometric_extend(s, f, {0, 0, 0});
  Vec<Word> expect(k7());
  expect.add(Word{0, 0, 0}, Elem::one(k7()));
  expect.add(Word{0, 0}, Elem::from_int(k7(), 2));
  CHECK(out == expect);
}

TEST_CASE("sandwich oracles") {
  auto s = xyz();
  MultiOp b0(k7(), 1);
  b0.set({}, Vec<Letter>(k7(), 1));  // b₀ = y
  auto out = sandwich(s, b0, Word{1});
  Vec<Word> expect(k7());
  expect.add(Word{1, 1}, Elem::one(k7()));
  expect.add(Word{1, 1}, -Elem::one(k7()));  // crossing the odd letter y
  CHECK(out == expect);
  CHECK(out.is_zero());
  auto out2 = sandwich(s, b0, Word{0});
  CHECK(out2.size() == 2);
  CHECK(sandwich(s, MultiOp(k7(), 1), Word{0, 1}).is_zero());
}

TEST_CASE("comultiply oracles") {
  auto r = k7();
  auto full = comultiply(r, {0, 1}, false);
  CHECK(full.size() == 3);
  CHECK(full.coeff({Word{}, Word{0, 1}}) == Elem::one(r));
  CHECK(full.coeff({Word{0}, Word{1}}) == Elem::one(r));
  CHECK(full.coeff({Word{0, 1}, Word{}}) == Elem::one(r));
  auto red = comultiply(r, {0, 1}, true);
  CHECK(red == Vec<Split>(r, Split{Word{0}, Word{1}}));
  CHECK(comultiply(r, {0}, true).is_zero());
}

TEST_CASE("sandwich is a coderivation and geometric_extend a coalgebra map") {
  Rng rng(5);
  for (Grading g : {Grading::integer(), Grading::cyclic(2)}) {
    auto s = xyz(g);
    for (int t = 0; t < 8; ++t) {
      MultiOp b = random_op(rng, s, 1, 2, true);
      MultiOp f = random_op(rng, s, 0, 2, false);
      auto B = [&](const Word& w) { return sandwich(s, b, w); };
      auto F = [&](const Word& w) { return geometric_extend(s, f, w); };
      auto one = [&](const Word& w) { return Vec<Word>(k7(), w); };
      for (const auto& w : all_words(3, 3)) {
        auto lhs = comultiply_vec(k7(), B(w));
        auto splits = comultiply(k7(), w, false);
        auto rhs = tensor_splits(s, splits, B, one, 0) + tensor_splits(s, splits, one, B, 1);
        CHECK(lhs == rhs);
        CHECK(comultiply_vec(k7(), F(w)) == tensor_splits(s, splits, F, F, 0));
      }
    }
  }
}

TEST_CASE("all_words ordering") {
  auto w = all_words(2, 2);
  REQUIRE(w.size() == 7);
  CHECK(w[0].empty());
  CHECK(w[1] == Word{0});
  CHECK(w[3] == Word{0, 0});
  CHECK(w[6] == Word{1, 1});
}
