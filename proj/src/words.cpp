#include "raagsplit/words.hpp"

#include <algorithm>
#include <cstdlib>

#include "raagsplit/errors.hpp"

namespace raagsplit {

long normalize_exponent(const WeightedGraph& p, Vertex v, long k) {
  const long n = p.order[v];
  if (n == 0) return k;
  k %= n;
  if (k < 0) k += n;
  return k;
}

void check_word(const WeightedGraph& p, const Word& w) {
  for (const auto& s : w)
    if (s.v < 0 || s.v >= p.size())
      throw InputError("syllable refers to unknown vertex index " + std::to_string(s.v));
}

namespace {

void append(const WeightedGraph& p, Word& r, Syllable s) {
  s.exp = normalize_exponent(p, s.v, s.exp);
  if (s.exp == 0) return;
  for (std::size_t j = r.size(); j-- > 0;) {
    if (r[j].v == s.v) {
      long e = normalize_exponent(p, s.v, r[j].exp + s.exp);
      if (e == 0)
        r.erase(r.begin() + static_cast<std::ptrdiff_t>(j));
      else
        r[j].exp = e;
      return;
    }
    if (!p.graph.adjacent(r[j].v, s.v)) break;
  }
  r.push_back(s);
}

}  // namespace

Word reduce(const WeightedGraph& p, const Word& w) {
  check_word(p, w);
  Word r;
  r.reserve(w.size());
  for (const auto& s : w) append(p, r, s);
  return r;
}

Word canonical_order(const WeightedGraph& p, const Word& reduced) {
  // greedy: repeatedly emit the smallest syllable that commutes with every
  // syllable still waiting in front of it
  Word rest = reduced, out;
  out.reserve(rest.size());
  while (!rest.empty()) {
    std::size_t best = 0;
    bool found = false;
    for (std::size_t i = 0; i < rest.size(); ++i) {
      bool free = true;
      for (std::size_t j = 0; j < i && free; ++j)
        if (rest[j].v == rest[i].v || !p.graph.adjacent(rest[j].v, rest[i].v)) free = false;
      if (free && (!found || rest[i] < rest[best])) {
        best = i;
        found = true;
      }
    }
    out.push_back(rest[best]);
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return out;
}

Word normal_form(const WeightedGraph& p, const Word& w) { return canonical_order(p, reduce(p, w)); }

bool is_graphically_reduced(const WeightedGraph& p, const Word& w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i].v < 0 || w[i].v >= p.size()) return false;
    if (normalize_exponent(p, w[i].v, w[i].exp) != w[i].exp || w[i].exp == 0) return false;
    // w[i] must not be able to reach a later same-vertex syllable
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      if (w[j].v == w[i].v) return false;
      if (!p.graph.adjacent(w[i].v, w[j].v)) break;
    }
  }
  return true;
}

NormalForm apply_moves_to_normal_form(const GroupWord& w) {
  return NormalForm{GroupWord{w.presentation, normal_form(w.presentation, w.syllables)}, true};
}

bool words_equal(const GroupWord& a, const GroupWord& b) {
  if (a.presentation != b.presentation) throw InputError("words_equal: presentations differ");
  return normal_form(a.presentation, a.syllables) == normal_form(b.presentation, b.syllables);
}

int syllable_length(const WeightedGraph& p, const Word& w) {
  return static_cast<int>(reduce(p, w).size());
}

long word_metric_length(const WeightedGraph& p, const Word& w) {
  long total = 0;
  for (const auto& s : reduce(p, w)) {
    const long n = p.order[s.v];
    total += n == 0 ? std::labs(s.exp) : std::min(s.exp, n - s.exp);
  }
  return total;
}

int syllable_length(const GroupWord& w) { return syllable_length(w.presentation, w.syllables); }
long word_metric_length(const GroupWord& w) { return word_metric_length(w.presentation, w.syllables); }

Word inverse(const WeightedGraph& p, const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->v, -it->exp});
  return normal_form(p, out);
}

Word multiply(const WeightedGraph& p, const Word& a, const Word& b) {
  Word w = a;
  w.insert(w.end(), b.begin(), b.end());
  return normal_form(p, w);
}

Word letters(const WeightedGraph& p, const Word& w) {
  Word out;
  for (const auto& s : reduce(p, w)) {
    const long n = p.order[s.v];
    long k = s.exp;
    if (n != 0 && k > n - k) k -= n;
    const long step = k < 0 ? -1 : 1;
    for (long i = 0; i < std::labs(k); ++i) out.push_back({s.v, step});
  }
  return out;
}

std::string format_word(const SimpleGraph& g, const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (const auto& s : w) {
    if (!out.empty()) out += ' ';
    out += g.name(s.v);
    if (s.exp != 1) out += '^' + std::to_string(s.exp);
  }
  return out;
}

}  // namespace raagsplit
