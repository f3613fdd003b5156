#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hypertile/rational.hpp"

namespace hypertile {

using Word = std::vector<int>;

/// Cyclic tuple [k1, ..., kd] of polygon sizes around a vertex, read in either
/// rotational direction. Entries keep the order they were given in (the
/// initial fan is laid out in that order); equality and printing go through
/// the canonical form, the lexicographically least of the 2d rotations and
/// reflections.
class VertexType {
 public:
  explicit VertexType(std::vector<int> entries);

  /// Accepts "[4,5,4,5]", "4,5,4,5", "3^7", "[4,3^3,4,3]"; whitespace is
  /// ignored. Throws ParseError.
  static VertexType parse(std::string_view text);

  const std::vector<int>& entries() const { return entries_; }
  const std::vector<int>& canonical_form() const { return canonical_; }
  int degree() const { return static_cast<int>(entries_.size()); }
  bool contains(int size) const;
  int max_entry() const;

  /// Bracketed, comma separated, canonical order, no exponent shorthand.
  std::string to_string() const;

  friend bool operator==(const VertexType& a, const VertexType& b) {
    return a.canonical_ == b.canonical_;
  }

 private:
  std::vector<int> entries_;
  std::vector<int> canonical_;
};

/// Lexicographically least linear sequence among all rotations and reversals.
std::vector<int> canonical_cycle(std::span<const int> cycle);

/// All 2d linear readings of the cycle (d rotations of each direction).
std::vector<Word> linear_readings(std::span<const int> cycle);

/// Sum of (k_i - 2) / k_i, exact.
Rational angle_sum(const VertexType& k);

/// True when the angle-sum strictly exceeds 2.
bool is_hyperbolic(const VertexType& k);

/// Whether `word` occurs consecutively in the cyclic tuple, in either
/// direction. Throws PreconditionError when the word is empty or longer than
/// the degree.
bool appears(const VertexType& k, std::span<const int> word);

/// All distinct linear sequences of length d that start with `word` and read
/// the tuple in some rotation/direction, sorted lexicographically. Empty when
/// the word does not appear (or is longer than d).
std::vector<Word> continuations(const VertexType& k, std::span<const int> word);

/// Pair form. Throws PreconditionError when xy does not appear.
std::vector<Word> continuations(const VertexType& k, int x, int y);

enum class ConditionKind { A, B };

struct ConditionWitness {
  ConditionKind kind;
  std::vector<Word> premise_words;
  Word missing_word;

  std::string to_string() const;
};

/// Condition (A): xy and yz appear => xyz appears. Returns the first failing
/// instance in lexicographic (x, y, z) order, or nullopt on pass.
std::optional<ConditionWitness> condition_a(const VertexType& k);

/// Condition (B): x3y and 3yz appear => x3yz appears. Vacuous without a 3.
std::optional<ConditionWitness> condition_b(const VertexType& k);

/// Every appearing pair xy has exactly one continuation.
bool pair_deterministic(const VertexType& k);

enum class Degree3Case {
  RegularTriple,     // [p,p,p], p >= 7
  TruncatedPair,     // [2n,2n,q], 2n != q, 1/n + 1/q < 1/2
  DistinctEven,      // [2l,2m,2n] distinct, 1/l + 1/m + 1/n < 1
  AngleSumFailure,
  OddPairObstruction,  // [p,p,q] with p odd, p != q
  OddDistinctEntry,    // distinct triple with an odd entry
};

struct Degree3Classification {
  bool exists = false;
  Degree3Case label = Degree3Case::AngleSumFailure;
  std::string reason;
};

std::string to_string(Degree3Case c);

/// Complete existence decision for degree-3 tuples. Throws PreconditionError
/// for d != 3.
Degree3Classification classify_degree3(const VertexType& k);

enum class ExistenceStatus { ExistsThm1, ExistsThm2, ExistsDeg3, NotExists, Unknown };

std::string to_string(ExistenceStatus s);

struct ExistenceVerdict {
  ExistenceStatus status = ExistenceStatus::Unknown;
  std::vector<std::string> reasons;

  bool exists() const {
    return status == ExistenceStatus::ExistsThm1 || status == ExistenceStatus::ExistsThm2 ||
           status == ExistenceStatus::ExistsDeg3;
  }
};

ExistenceVerdict existence_verdict(const VertexType& k);

std::string word_to_string(std::span<const int> word);

}  // namespace hypertile
