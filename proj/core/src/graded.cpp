#include "ainf/graded.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace ainf {

Grading Grading::cyclic(Degree modulus) {
  if (modulus <= 0 || is_odd(modulus)) throw StructuralError("cyclic grading modulus must be even and positive");
  return Grading(modulus);
}

Degree Grading::normalize(Degree d) const {
  if (modulus_ == 0) return d;
  Degree r = d % modulus_;
  return r < 0 ? r + modulus_ : r;
}

std::string Grading::describe() const {
  return modulus_ == 0 ? "Z" : "Z/" + std::to_string(modulus_);
}

GradedSpace::GradedSpace(RingRef ring, Grading grading, std::vector<Generator> gens)
    : ring_(ring), grading_(grading), gens_(std::move(gens)) {
  std::set<std::string> seen;
  for (auto& g : gens_) {
    if (!seen.insert(g.name).second) throw StructuralError("duplicate generator name '" + g.name + "'");
    g.degree = grading_.normalize(g.degree);
  }
}

std::optional<Letter> GradedSpace::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < gens_.size(); ++i)
    if (gens_[i].name == name) return static_cast<Letter>(i);
  return std::nullopt;
}

Letter GradedSpace::require(const std::string& name) const {
  auto i = index_of(name);
  if (!i) throw StructuralError("unknown generator '" + name + "'");
  return *i;
}

GradedSpace GradedSpace::shift() const {
  auto gens = gens_;
  for (auto& g : gens) g.degree -= 1;
  return GradedSpace(ring_, grading_, std::move(gens));
}

std::string sep_symbol(Sep s) {
  switch (s) {
    case Sep::Tensor:
      return "(x)";
    case Sep::Odot:
      return "(.)";
    case Sep::Boxtimes:
      return "[x]";
    case Sep::Diamond:
      return "<>";
    case Sep::Oslash:
      return "(/)";
  }
  return "?";
}

std::string TensorWord::str() const {
  std::string s;
  for (const auto& t : tokens) {
    if (!s.empty()) s += ' ';
    s += t.is_sep ? sep_symbol(t.sep) : t.text;
  }
  return s.empty() ? "1" : s;
}

void MultiOp::set(Word in, Vec<Letter> out) {
  if (out.is_zero())
    table_.erase(in);
  else
    table_[std::move(in)] = std::move(out);
}

void MultiOp::add(const Word& in, Letter out, const Elem& c) {
  auto it = table_.find(in);
  if (it == table_.end()) it = table_.emplace(in, Vec<Letter>(ring_)).first;
  it->second.add(out, c);
  if (it->second.is_zero()) table_.erase(it);
}

std::size_t MultiOp::max_arity() const {
  std::size_t m = 0;
  for (const auto& [w, v] : table_) m = std::max(m, w.size());
  return m;
}

Degree word_degree(const GradedSpace& s, std::span<const Letter> w) {
  Degree d = 0;
  for (auto l : w) d += s.degree(l);
  return d;
}

std::vector<Word> all_words(std::size_t alphabet, std::size_t max_len) {
  std::vector<Word> out{Word{}};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i)
      for (Letter a = 0; a < alphabet; ++a) {
        Word w = out[i];
        w.push_back(a);
        out.push_back(std::move(w));
      }
    begin = end;
    if (alphabet == 0) break;
  }
  return out;
}

Vec<Word> koszul_apply(const GradedSpace& src, std::span<const MultiOp* const> ops,
                       std::span<const std::size_t> blocks, const Word& w) {
  if (ops.size() != blocks.size()) throw StructuralError("koszul_apply: ops/blocks mismatch");
  std::size_t total = 0;
  for (auto b : blocks) total += b;
  if (total != w.size()) throw StructuralError("koszul_apply: arity mismatch");
  RingRef ring = src.ring();
  Vec<Word> acc(ring, Word{});
  std::size_t pos = 0;
  Degree prefix = 0;
  for (std::size_t j = 0; j < ops.size(); ++j) {
    Word in(w.begin() + static_cast<std::ptrdiff_t>(pos),
            w.begin() + static_cast<std::ptrdiff_t>(pos + blocks[j]));
    const Vec<Letter>* r = ops[j]->find(in);
    if (!r) return Vec<Word>(ring);
    int s = is_odd(ops[j]->degree()) ? sign_of(prefix) : 1;
    Vec<Word> next(ring);
    for (const auto& [pw, pc] : acc)
      for (const auto& [l, c] : *r) {
        Word nw = pw;
        nw.push_back(l);
        next.add(std::move(nw), pc * c, s);
      }
    acc = std::move(next);
    prefix += word_degree(src, in);
    pos += blocks[j];
  }
  return acc;
}

namespace {

void geometric_rec(const GradedSpace& src, const MultiOp& f, const Word& w, std::size_t pos,
                   Degree prefix, Word& out, const Elem& coeff, int sign, Vec<Word>& acc) {
  if (pos == w.size()) {
    acc.add(out, coeff, sign);
    return;
  }
  int s = is_odd(f.degree()) ? sign_of(prefix) : 1;
  Word in;
  Degree block_deg = 0;
  for (std::size_t end = pos + 1; end <= w.size(); ++end) {
    in.push_back(w[end - 1]);
    block_deg += src.degree(w[end - 1]);
    const Vec<Letter>* r = f.find(in);
    if (!r) continue;
    for (const auto& [l, c] : *r) {
      out.push_back(l);
      geometric_rec(src, f, w, end, prefix + block_deg, out, coeff * c, sign * s, acc);
      out.pop_back();
    }
  }
}

}  // namespace

Vec<Word> geometric_extend(const GradedSpace& src, const MultiOp& f, const Word& w) {
  Vec<Word> acc(src.ring());
  Word out;
  geometric_rec(src, f, w, 0, 0, out, Elem::one(src.ring()), 1, acc);
  return acc;
}

Vec<Word> sandwich(const GradedSpace& src, const MultiOp& b, const Word& w) {
  std::size_t max_arity = b.max_arity();
  return sandwich_generic<Letter>(
      src.ring(), w, max_arity, b.degree(),
      [&](std::span<const Letter> block) {
        const Vec<Letter>* r = b.find(Word(block.begin(), block.end()));
        return r ? *r : Vec<Letter>(src.ring());
      },
      [&](Letter l) { return src.degree(l); });
}

Vec<Word> sandwich(const GradedSpace& src, const MultiOp& b, const Vec<Word>& v) {
  Vec<Word> out(src.ring());
  for (const auto& [w, c] : v) out.add_scaled(sandwich(src, b, w), c);
  return out;
}

Vec<Letter> apply_op(const MultiOp& b, const Vec<Word>& v) {
  Vec<Letter> out(v.ring());
  for (const auto& [w, c] : v)
    if (const auto* r = b.find(w)) out.add_scaled(*r, c);
  return out;
}

Vec<Split> comultiply(RingRef ring, const Word& w, bool reduced) {
  Vec<Split> out(ring);
  std::size_t lo = reduced ? 1 : 0;
  std::size_t hi = reduced ? (w.size() == 0 ? 0 : w.size() - 1) : w.size();
  for (std::size_t i = lo; i <= hi && i <= w.size(); ++i) {
    if (reduced && (i == 0 || i == w.size())) continue;
    out.add(Split{Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i)),
                  Word(w.begin() + static_cast<std::ptrdiff_t>(i), w.end())},
            Elem::one(ring));
  }
  return out;
}

std::string render_word(const GradedSpace& s, std::span<const Letter> w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += " (x) ";
    out += "s" + s.name(w[i]);
  }
  return out;
}

Vec<Letter> apply_multilinear(const MultiOp& m, const std::vector<Vec<Letter>>& args) {
  Vec<Letter> out(m.ring());
  Word cur;
  std::function<void(std::size_t, const Elem&)> rec = [&](std::size_t i, const Elem& c) {
    if (i == args.size()) {
      if (const auto* v = m.find(cur)) out.add_scaled(*v, c);
      return;
    }
    for (const auto& [l, k] : args[i]) {
      cur.push_back(l);
      rec(i + 1, c * k);
      cur.pop_back();
    }
  };
  rec(0, Elem::one(m.ring()));
  return out;
}

}  // namespace ainf
