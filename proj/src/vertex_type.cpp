#include "hypertile/vertex_type.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

#include "hypertile/errors.hpp"

namespace hypertile {

namespace {

constexpr int kMaxDegree = 4096;

std::string strip_whitespace(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

int parse_int(std::string_view token, std::string_view whole) {
  int value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (token.empty() || ec != std::errc() || ptr != last) {
    throw ParseError("vertex-type syntax error near '" + std::string(token) + "' in '" +
                     std::string(whole) + "'");
  }
  return value;
}

// Window of `len` entries starting at `start`, read forward cyclically.
bool window_matches(std::span<const int> cycle, std::size_t start, std::span<const int> word,
                    bool reversed) {
  const std::size_t d = cycle.size();
  for (std::size_t i = 0; i < word.size(); ++i) {
    const std::size_t idx = reversed ? (start + d - i) % d : (start + i) % d;
    if (cycle[idx] != word[i]) return false;
  }
  return true;
}

bool appears_unchecked(std::span<const int> cycle, std::span<const int> word) {
  if (word.empty() || word.size() > cycle.size()) return false;
  for (std::size_t s = 0; s < cycle.size(); ++s) {
    if (window_matches(cycle, s, word, false) || window_matches(cycle, s, word, true)) return true;
  }
  return false;
}

std::vector<int> distinct_values(const VertexType& k) {
  std::vector<int> v = k.entries();
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

VertexType::VertexType(std::vector<int> entries) : entries_(std::move(entries)) {
  if (entries_.size() < 3) {
    throw ParseError("vertex-type needs degree >= 3, got " + std::to_string(entries_.size()));
  }
  if (entries_.size() > static_cast<std::size_t>(kMaxDegree)) {
    throw ParseError("vertex-type degree exceeds " + std::to_string(kMaxDegree));
  }
  for (int k : entries_) {
    if (k < 3) throw ParseError("polygon size must be >= 3, got " + std::to_string(k));
  }
  canonical_ = canonical_cycle(entries_);
}

VertexType VertexType::parse(std::string_view text) {
  std::string s = strip_whitespace(text);
  if (!s.empty() && s.front() == '[') {
    if (s.back() != ']') throw ParseError("unbalanced bracket in '" + std::string(text) + "'");
    s = s.substr(1, s.size() - 2);
  } else if (!s.empty() && s.back() == ']') {
    throw ParseError("unbalanced bracket in '" + std::string(text) + "'");
  }
  if (s.empty()) throw ParseError("empty vertex-type");

  std::vector<int> entries;
  std::string_view rest(s);
  while (true) {
    const std::size_t comma = rest.find(',');
    const std::string_view term = rest.substr(0, comma);
    const std::size_t caret = term.find('^');
    if (caret == std::string_view::npos) {
      entries.push_back(parse_int(term, text));
    } else {
      const int base = parse_int(term.substr(0, caret), text);
      const int exponent = parse_int(term.substr(caret + 1), text);
      if (exponent < 1 || exponent > kMaxDegree) {
        throw ParseError("exponent out of range in '" + std::string(term) + "'");
      }
      entries.insert(entries.end(), static_cast<std::size_t>(exponent), base);
    }
    if (entries.size() > static_cast<std::size_t>(kMaxDegree)) {
      throw ParseError("vertex-type degree exceeds " + std::to_string(kMaxDegree));
    }
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return VertexType(std::move(entries));
}

bool VertexType::contains(int size) const {
  return std::find(entries_.begin(), entries_.end(), size) != entries_.end();
}

int VertexType::max_entry() const { return *std::max_element(entries_.begin(), entries_.end()); }

std::string VertexType::to_string() const { return word_to_string(canonical_); }

std::string word_to_string(std::span<const int> word) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) os << ',';
    os << word[i];
  }
  os << ']';
  return os.str();
}

std::vector<Word> linear_readings(std::span<const int> cycle) {
  const std::size_t d = cycle.size();
  std::vector<Word> out;
  out.reserve(2 * d);
  for (std::size_t s = 0; s < d; ++s) {
    Word fwd(d), bwd(d);
    for (std::size_t i = 0; i < d; ++i) {
      fwd[i] = cycle[(s + i) % d];
      bwd[i] = cycle[(s + d - i) % d];
    }
    out.push_back(std::move(fwd));
    out.push_back(std::move(bwd));
  }
  return out;
}

std::vector<int> canonical_cycle(std::span<const int> cycle) {
  if (cycle.empty()) return {};
  auto readings = linear_readings(cycle);
  return *std::min_element(readings.begin(), readings.end());
}

Rational angle_sum(const VertexType& k) {
  Rational sum(0);
  for (int ki : k.entries()) sum = sum + Rational(ki - 2, ki);
  return sum;
}

bool is_hyperbolic(const VertexType& k) { return angle_sum(k) > Rational(2); }

bool appears(const VertexType& k, std::span<const int> word) {
  if (word.empty()) throw PreconditionError("appears: empty word");
  if (word.size() > static_cast<std::size_t>(k.degree())) {
    throw PreconditionError("appears: word " + word_to_string(word) + " is longer than degree " +
                            std::to_string(k.degree()));
  }
  return appears_unchecked(k.entries(), word);
}

std::vector<Word> continuations(const VertexType& k, std::span<const int> word) {
  std::vector<Word> out;
  if (word.empty() || word.size() > static_cast<std::size_t>(k.degree())) return out;
  for (auto& reading : linear_readings(k.entries())) {
    if (std::equal(word.begin(), word.end(), reading.begin())) out.push_back(std::move(reading));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Word> continuations(const VertexType& k, int x, int y) {
  const int pair[2] = {x, y};
  auto out = continuations(k, std::span<const int>(pair, 2));
  if (out.empty()) {
    throw PreconditionError("pair " + word_to_string(pair) + " does not appear in " +
                            k.to_string());
  }
  return out;
}

std::string ConditionWitness::to_string() const {
  std::string s = kind == ConditionKind::A ? "A: " : "B: ";
  for (std::size_t i = 0; i < premise_words.size(); ++i) {
    if (i) s += " and ";
    s += word_to_string(premise_words[i]);
  }
  s += " appear but " + word_to_string(missing_word) + " does not";
  return s;
}

std::optional<ConditionWitness> condition_a(const VertexType& k) {
  const auto& cyc = k.entries();
  const auto values = distinct_values(k);
  for (int x : values) {
    for (int y : values) {
      const Word xy{x, y};
      if (!appears_unchecked(cyc, xy)) continue;
      for (int z : values) {
        const Word yz{y, z};
        if (!appears_unchecked(cyc, yz)) continue;
        const Word xyz{x, y, z};
        if (!appears_unchecked(cyc, xyz)) {
          return ConditionWitness{ConditionKind::A, {xy, yz}, xyz};
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<ConditionWitness> condition_b(const VertexType& k) {
  if (!k.contains(3)) return std::nullopt;
  const auto& cyc = k.entries();
  const auto values = distinct_values(k);
  for (int x : values) {
    for (int y : values) {
      const Word x3y{x, 3, y};
      if (!appears_unchecked(cyc, x3y)) continue;
      for (int z : values) {
        const Word threeyz{3, y, z};
        if (!appears_unchecked(cyc, threeyz)) continue;
        const Word x3yz{x, 3, y, z};
        if (!appears_unchecked(cyc, x3yz)) {
          return ConditionWitness{ConditionKind::B, {x3y, threeyz}, x3yz};
        }
      }
    }
  }
  return std::nullopt;
}

bool pair_deterministic(const VertexType& k) {
  const auto& e = k.entries();
  const std::size_t d = e.size();
  std::set<std::pair<int, int>> seen;
  for (std::size_t i = 0; i < d; ++i) {
    for (auto pr : {std::pair{e[i], e[(i + 1) % d]}, std::pair{e[(i + 1) % d], e[i]}}) {
      if (!seen.insert(pr).second) continue;
      const int w[2] = {pr.first, pr.second};
      if (continuations(k, std::span<const int>(w, 2)).size() != 1) return false;
    }
  }
  return true;
}

std::string to_string(Degree3Case c) {
  switch (c) {
    case Degree3Case::RegularTriple: return "[p,p,p]";
    case Degree3Case::TruncatedPair: return "[2n,2n,q]";
    case Degree3Case::DistinctEven: return "[2l,2m,2n]";
    case Degree3Case::AngleSumFailure: return "angle-sum";
    case Degree3Case::OddPairObstruction: return "odd-p";
    case Degree3Case::OddDistinctEntry: return "odd-entry";
  }
  return "?";
}

Degree3Classification classify_degree3(const VertexType& k) {
  if (k.degree() != 3) {
    throw PreconditionError("classify_degree3 needs degree 3, got " + std::to_string(k.degree()));
  }
  std::vector<int> t = k.entries();
  std::sort(t.begin(), t.end());
  const std::string name = k.to_string();

  if (!is_hyperbolic(k)) {
    return {false, Degree3Case::AngleSumFailure,
            name + ": angle-sum " + angle_sum(k).to_string() + " <= 2"};
  }
  if (t[0] == t[2]) {
    // Hyperbolic [p,p,p] forces p >= 7.
    return {true, Degree3Case::RegularTriple, name + ": [p,p,p] with p = " + std::to_string(t[0])};
  }
  if (t[0] == t[1] || t[1] == t[2]) {
    const int p = t[1];
    const int q = (t[0] == t[1]) ? t[2] : t[0];
    if (p % 2 != 0) {
      return {false, Degree3Case::OddPairObstruction,
              name + ": repeated entry " + std::to_string(p) + " is odd and differs from " +
                  std::to_string(q)};
    }
    return {true, Degree3Case::TruncatedPair,
            name + ": [2n,2n,q] with n = " + std::to_string(p / 2) + ", q = " + std::to_string(q)};
  }
  for (int v : t) {
    if (v % 2 != 0) {
      return {false, Degree3Case::OddDistinctEntry,
              name + ": distinct triple has odd entry " + std::to_string(v)};
    }
  }
  return {true, Degree3Case::DistinctEven,
          name + ": distinct even triple with l,m,n = " + std::to_string(t[0] / 2) + "," +
              std::to_string(t[1] / 2) + "," + std::to_string(t[2] / 2)};
}

std::string to_string(ExistenceStatus s) {
  switch (s) {
    case ExistenceStatus::ExistsThm1: return "ExistsThm1";
    case ExistenceStatus::ExistsThm2: return "ExistsThm2";
    case ExistenceStatus::ExistsDeg3: return "ExistsDeg3";
    case ExistenceStatus::NotExists: return "NotExists";
    case ExistenceStatus::Unknown: return "Unknown";
  }
  return "?";
}

ExistenceVerdict existence_verdict(const VertexType& k) {
  ExistenceVerdict v;
  const Rational alpha = angle_sum(k);
  if (alpha <= Rational(2)) {
    v.status = ExistenceStatus::NotExists;
    v.reasons.push_back("angle-sum " + alpha.to_string() + " <= 2 (not hyperbolic)");
    return v;
  }
  v.reasons.push_back("angle-sum " + alpha.to_string() + " > 2");

  if (k.degree() == 3) {
    auto c = classify_degree3(k);
    v.status = c.exists ? ExistenceStatus::ExistsDeg3 : ExistenceStatus::NotExists;
    v.reasons.push_back("degree 3, case " + to_string(c.label) + ": " + c.reason);
    return v;
  }

  const auto a = condition_a(k);
  v.reasons.push_back(a ? "Condition A fails: " + a->to_string() : "Condition A holds");
  const bool has_triangle = k.contains(3);

  if (!a && !has_triangle) {
    v.status = ExistenceStatus::ExistsThm1;
    v.reasons.push_back("degree >= 4, every entry >= 4 and Condition A");
    return v;
  }
  if (has_triangle) {
    const auto b = condition_b(k);
    v.reasons.push_back(b ? "Condition B fails: " + b->to_string() : "Condition B holds");
    if (!a && !b && k.degree() >= 6) {
      v.status = ExistenceStatus::ExistsThm2;
      v.reasons.push_back("degree >= 6 with Conditions A and B");
      return v;
    }
    if (k.degree() < 6) v.reasons.push_back("triangular entry with degree < 6");
  }
  v.status = ExistenceStatus::Unknown;
  v.reasons.push_back("sufficient criteria not met; existence undecided");
  return v;
}

}  // namespace hypertile
