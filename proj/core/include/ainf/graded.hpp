#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ainf/linear.hpp"

namespace ainf {

using Degree = std::int64_t;
using Letter = std::uint32_t;
using Word = std::vector<Letter>;

inline bool is_odd(Degree d) { return (d % 2) != 0; }
inline int sign_of(Degree d) { return is_odd(d) ? -1 : 1; }

// Z or Z/2n grading.
class Grading {
 public:
  static Grading integer() { return Grading(0); }
  static Grading cyclic(Degree modulus);

  bool is_cyclic() const { return modulus_ != 0; }
  Degree modulus() const { return modulus_; }
  Degree normalize(Degree d) const;
  bool same(Degree a, Degree b) const { return normalize(a) == normalize(b); }
  std::string describe() const;

  friend bool operator==(const Grading&, const Grading&) = default;

 private:
  explicit Grading(Degree m) : modulus_(m) {}
  Degree modulus_ = 0;
};

struct Generator {
  std::string name;
  Degree degree = 0;
};

// Free graded S-module with a named, ordered basis.
class GradedSpace {
 public:
  GradedSpace() = default;
  GradedSpace(RingRef ring, Grading grading, std::vector<Generator> gens);

  RingRef ring() const { return ring_; }
  const Grading& grading() const { return grading_; }
  const std::vector<Generator>& generators() const { return gens_; }
  std::size_t rank() const { return gens_.size(); }
  Degree degree(Letter i) const { return gens_.at(i).degree; }
  const std::string& name(Letter i) const { return gens_.at(i).name; }
  std::optional<Letter> index_of(const std::string& name) const;
  Letter require(const std::string& name) const;

  // Same names, degrees lowered by one: the space M[1].
  GradedSpace shift() const;

 private:
  RingRef ring_ = nullptr;
  Grading grading_ = Grading::integer();
  std::vector<Generator> gens_;
};

// Rendering-only tensor word: letters and separator tags, used in witnesses.
enum class Sep { Tensor, Odot, Boxtimes, Diamond, Oslash };

std::string sep_symbol(Sep s);

struct TensorWord {
  struct Token {
    bool is_sep = false;
    Sep sep = Sep::Tensor;
    std::string text;
  };
  std::vector<Token> tokens;

  TensorWord& letter(std::string s) {
    tokens.push_back({false, Sep::Tensor, std::move(s)});
    return *this;
  }
  TensorWord& separator(Sep s) {
    tokens.push_back({true, s, {}});
    return *this;
  }
  std::string str() const;
  friend bool operator==(const TensorWord& a, const TensorWord& b) { return a.str() == b.str(); }
};

// Sparse multilinear operation table on one graded space. Inputs are words
// of letters in the source, outputs linear combinations of target letters.
class MultiOp {
 public:
  MultiOp() = default;
  MultiOp(RingRef ring, Degree degree) : ring_(ring), degree_(degree) {}

  RingRef ring() const { return ring_; }
  Degree degree() const { return degree_; }
  const std::map<Word, Vec<Letter>>& table() const { return table_; }

  const Vec<Letter>* find(const Word& in) const {
    auto it = table_.find(in);
    return it == table_.end() ? nullptr : &it->second;
  }
  void set(Word in, Vec<Letter> out);
  void add(const Word& in, Letter out, const Elem& c);
  void erase(const Word& in) { table_.erase(in); }
  std::size_t max_arity() const;

  friend bool operator==(const MultiOp& a, const MultiOp& b) {
    return a.degree_ == b.degree_ && a.table_ == b.table_;
  }

 private:
  RingRef ring_ = nullptr;
  Degree degree_ = 0;
  std::map<Word, Vec<Letter>> table_;
};

Degree word_degree(const GradedSpace& s, std::span<const Letter> w);

// All words of length <= max_len over an alphabet of given size, ordered by
// length then lexicographically.
std::vector<Word> all_words(std::size_t alphabet, std::size_t max_len);

// Koszul-signed application of `ops` to consecutive blocks of `w` with the
// given block lengths. Each op of degree p passing a prefix of input degree d
// contributes (-1)^{pd}.
Vec<Word> koszul_apply(const GradedSpace& src, std::span<const MultiOp* const> ops,
                       std::span<const std::size_t> blocks, const Word& w);

// Sum over compositions of w into nonempty blocks of f applied block-wise.
// An empty word maps to the empty word.
Vec<Word> geometric_extend(const GradedSpace& src, const MultiOp& f, const Word& w);

// Coderivation extension 1^⊗ ⊗ b ⊗ 1^⊗, including arity-0 insertions.
Vec<Word> sandwich(const GradedSpace& src, const MultiOp& b, const Word& w);
Vec<Word> sandwich(const GradedSpace& src, const MultiOp& b, const Vec<Word>& v);

// Multilinear evaluation of a table on vector arguments, without signs.
Vec<Letter> apply_multilinear(const MultiOp& m, const std::vector<Vec<Letter>>& args);

// Applies b to a linear combination of words, giving target letters.
Vec<Letter> apply_op(const MultiOp& b, const Vec<Word>& v);

using Split = std::pair<Word, Word>;

// Deconcatenation; the reduced version drops the two splits with an empty side.
Vec<Split> comultiply(RingRef ring, const Word& w, bool reduced);

std::string render_word(const GradedSpace& s, std::span<const Letter> w);

// ---------------------------------------------------------------------------
// Generic coderivation on words of arbitrary letter type, used for spaces
// whose letters are not table indices (e.g. shifted U_e(A) elements).

template <class L, class OpFn, class DegFn>
Vec<std::vector<L>> sandwich_generic(RingRef ring, const std::vector<L>& w, std::size_t max_arity,
                                     Degree op_degree, OpFn&& op, DegFn&& deg) {
  Vec<std::vector<L>> out(ring);
  Degree prefix = 0;
  for (std::size_t i = 0; i <= w.size(); ++i) {
    int s = is_odd(op_degree) ? sign_of(prefix) : 1;
    for (std::size_t len = 0; len <= max_arity && i + len <= w.size(); ++len) {
      Vec<L> r = op(std::span<const L>(w.data() + i, len));
      for (const auto& [letter, c] : r) {
        std::vector<L> nw;
        nw.reserve(w.size() - len + 1);
        nw.insert(nw.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
        nw.push_back(letter);
        nw.insert(nw.end(), w.begin() + static_cast<std::ptrdiff_t>(i + len), w.end());
        out.add(std::move(nw), c, s);
      }
    }
    if (i < w.size()) prefix += deg(w[i]);
  }
  return out;
}

}  // namespace ainf
