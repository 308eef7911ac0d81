#pragma once

#include <string>
#include <vector>

#include "raagsplit/graph.hpp"

namespace raagsplit {

struct Syllable {
  Vertex v = 0;
  long exp = 0;

  auto operator<=>(const Syllable&) const = default;
};

using Word = std::vector<Syllable>;

struct GroupWord {
  WeightedGraph presentation;
  Word syllables;
};

struct NormalForm {
  GroupWord word;
  bool canonical = true;
};

// Exponent reduced into 1..nu-1 for a finite factor (0 for the identity);
// unchanged for an infinite one.
long normalize_exponent(const WeightedGraph& p, Vertex v, long k);

// Graphically reduced form, built one syllable at a time: each new syllable
// is pushed left through the syllables it commutes with and merged (or
// cancelled) with a same-vertex syllable when it meets one.
Word reduce(const WeightedGraph& p, const Word& w);

// Lexicographically least member of the shuffle class of a reduced word.
Word canonical_order(const WeightedGraph& p, const Word& reduced);

Word normal_form(const WeightedGraph& p, const Word& w);
bool is_graphically_reduced(const WeightedGraph& p, const Word& w);

NormalForm apply_moves_to_normal_form(const GroupWord& w);
bool words_equal(const GroupWord& a, const GroupWord& b);

int syllable_length(const WeightedGraph& p, const Word& w);
long word_metric_length(const WeightedGraph& p, const Word& w);
int syllable_length(const GroupWord& w);
long word_metric_length(const GroupWord& w);

Word inverse(const WeightedGraph& p, const Word& w);
// Normal form of a*b.
Word multiply(const WeightedGraph& p, const Word& a, const Word& b);

// Word over the standard generators: every syllable u^k becomes |k| letters
// u^{+-1} (finite factors use the shorter direction).
Word letters(const WeightedGraph& p, const Word& w);

// "a^2 b^-1 c"; the identity prints as "1".
std::string format_word(const SimpleGraph& g, const Word& w);

void check_word(const WeightedGraph& p, const Word& w);

}  // namespace raagsplit
