#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "engel/errors.hpp"
#include "engel/report.hpp"

namespace engel::words {

enum class Symbol : std::uint8_t { x = 0, y = 1, z = 2 };
char symbol_char(Symbol s);

// Freely reduced word over {x,y,z}: adjacent letters never share a symbol,
// no zero exponents.
struct GroupWord {
  std::vector<std::pair<Symbol, long>> letters;
  bool operator==(const GroupWord&) const = default;
  bool empty() const { return letters.empty(); }
  std::size_t reduced_length() const;
};

// Bracket-expression tree; leaves are symbols.
struct LieTerm {
  std::variant<Symbol, std::pair<std::shared_ptr<const LieTerm>, std::shared_ptr<const LieTerm>>> node;
  static std::shared_ptr<const LieTerm> leaf(Symbol s);
  static std::shared_ptr<const LieTerm> bracket(std::shared_ptr<const LieTerm> a,
                                                std::shared_ptr<const LieTerm> b);
};
using LieTermPtr = std::shared_ptr<const LieTerm>;

// Default cap on the reduced length of generated/derived words.
constexpr std::size_t kDefaultWordCap = 1'000'000;

GroupWord reduce(const GroupWord& w);
GroupWord concat(const GroupWord& a, const GroupWord& b);
GroupWord inverse(const GroupWord& a);
GroupWord power(const GroupWord& a, long e);
// [a,b] = a b a^-1 b^-1; the single commutator convention used everywhere.
GroupWord commutator(const GroupWord& a, const GroupWord& b);
// a^y; with convention `right` this is y^-1 a y, with `left` it is y a y^-1.
enum class ConjConvention { right, left };
GroupWord conjugate(const GroupWord& a, const GroupWord& by, ConjConvention conv);

GroupWord word_x();
GroupWord word_y();
GroupWord word_z();
GroupWord parse_word(const std::string& text);
std::string format_word(const GroupWord& w);
std::string format_term(const LieTermPtr& t);

GroupWord substitute(const GroupWord& w, const std::map<Symbol, GroupWord>& assignment,
                     std::size_t cap = kDefaultWordCap);
long exponent_sum(const GroupWord& w, Symbol s);

enum class SeqId {
  e_group,
  u_bggkpp,
  s_bww,
  w_group,
  e_lie,
  v_lie,
  w_lie,
  r_lie,
};

struct SequenceSpec {
  SeqId id;
  int arity;      // 2 or 3
  bool is_group;  // group word vs Lie term
  ConjConvention conj = ConjConvention::right;  // used by s-bww only
};

SequenceSpec sequence(SeqId id, ConjConvention conj = ConjConvention::right);
SequenceSpec sequence_by_name(const std::string& name,
                              ConjConvention conj = ConjConvention::right);
std::string sequence_name(SeqId id);

// n-th term of the sequence; group sequences return a reduced word.
std::variant<GroupWord, LieTermPtr> generate(const SequenceSpec& seq, int n,
                                             std::size_t cap = kDefaultWordCap);
GroupWord generate_group(const SequenceSpec& seq, int n, std::size_t cap = kDefaultWordCap);
LieTermPtr generate_lie(const SequenceSpec& seq, int n);

// One application of the recursion rule to an arbitrary current word.
GroupWord apply_step(const SequenceSpec& seq, const GroupWord& current,
                     std::size_t cap = kDefaultWordCap);
// The seed u_1 (for r-lie, of three variables).
GroupWord group_seed(const SequenceSpec& seq);

// Def 2.1 checks in syntactic form. Reports observed thresholds n0 for the
// substitutions x->1 and y->1, and verifies reduce(rule(1,x,y)) = 1.
rpt::Report check_correct(const SequenceSpec& seq, int n_max,
                          std::size_t cap = kDefaultWordCap);

struct ConjugateRewrite {
  // u = prod_i  y^{k_i} x^{e_i} y^{-k_i}
  std::vector<std::pair<long, long>> factors;  // (k_i, e_i)
};
GroupWord rewrite_to_word(const ConjugateRewrite& r);

// Autocorrectness: y-exponent sum of u_n is 0 for every n <= n_max. Verdicts
// are computed from the recursion rules (exponent sum is a homomorphism), so
// they do not require materializing huge words; the explicit conjugate
// rewrite is attached for each n whose reduced word fits under the cap.
rpt::Report check_autocorrect(const SequenceSpec& seq, int n_max,
                              std::size_t cap = kDefaultWordCap);
std::optional<ConjugateRewrite> conjugate_rewrite(const GroupWord& w);

}  // namespace engel::words
