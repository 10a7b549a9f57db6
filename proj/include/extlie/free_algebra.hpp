#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "extlie/scalar.hpp"

namespace extlie::freealg {

/// Word over an alphabet, as symbol indices; the empty word is 1.
using Word = std::vector<std::uint8_t>;

/// Shorter words first, then lexicographic by symbol index.
struct DegLexLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

/// Ordered list of single-character symbols, e.g. "XYV".
class Alphabet {
 public:
  Alphabet() = default;
  /// Throws DomainError on repeated or non-alphabetic symbols.
  explicit Alphabet(std::string symbols);

  const std::string& symbols() const { return symbols_; }
  std::size_t size() const { return symbols_.size(); }
  bool contains(char c) const { return symbols_.find(c) != std::string::npos; }
  std::uint8_t index_of(char c) const;
  /// Word from a string of symbols; "1" is the empty word.
  Word word(std::string_view letters) const;
  /// "1" for the empty word, otherwise the letters.
  std::string spell(const Word& w) const;

  bool operator==(const Alphabet&) const = default;

 private:
  std::string symbols_;
};

/// Element of the free associative algebra F<alphabet>: a finite sum of
/// words with nonzero coefficients.
class FreePoly {
 public:
  using Terms = std::map<Word, Scalar, DegLexLess>;

  FreePoly() = default;
  FreePoly(Field f, Alphabet a) : field_(f), alphabet_(std::move(a)) {}

  static FreePoly constant(Field f, const Alphabet& a, const Scalar& c);
  static FreePoly monomial(Field f, const Alphabet& a, const Word& w, const Scalar& c);

  Field field() const { return field_; }
  const Alphabet& alphabet() const { return alphabet_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Whether the polynomial is c * 1 for some c (including 0).
  bool is_constant() const;
  Scalar constant_term() const;
  std::size_t degree() const;

  void add_term(const Word& w, const Scalar& c);

  FreePoly operator-() const;
  FreePoly& operator+=(const FreePoly& o);
  FreePoly& operator-=(const FreePoly& o);
  FreePoly& operator*=(const Scalar& c);
  friend FreePoly operator+(FreePoly a, const FreePoly& b) { return a += b; }
  friend FreePoly operator-(FreePoly a, const FreePoly& b) { return a -= b; }
  friend FreePoly operator*(const Scalar& c, FreePoly p) { return p *= c; }
  friend FreePoly operator*(const FreePoly& a, const FreePoly& b);
  FreePoly pow(unsigned e) const;

  bool operator==(const FreePoly& o) const;
  bool operator!=(const FreePoly& o) const { return !(*this == o); }

  /// Terms by decreasing degree, lexicographic within a degree, e.g.
  /// "X^2*Y - 2*X*Y*X + Y*X^2 + 2*X". GF(p) coefficients use the symmetric
  /// representative. parse(to_string()) round-trips.
  std::string to_string() const;

 private:
  void check_compatible(const FreePoly& o) const;

  Field field_;
  Alphabet alphabet_;
  Terms terms_;
};

using NameTable = std::map<std::string, FreePoly>;

/// Grammar: sums and differences of products; products by '*' or
/// juxtaposition; '^' with a non-negative integer exponent; division by a
/// constant; parentheses; unary minus. An identifier is a name from `names`
/// if present, otherwise a word whose letters must all be in the alphabet.
/// Throws ParseError with the offending position.
FreePoly parse(std::string_view text, Field f, const Alphabet& a, const NameTable& names = {});

/// lhs -> rhs where every word of rhs is smaller than lhs in DegLexLess,
/// so rewriting terminates.
class RewriteRule {
 public:
  /// Throws DomainError for an empty lhs or a non-decreasing rhs word.
  RewriteRule(Word lhs, FreePoly rhs);

  const Word& lhs() const { return lhs_; }
  const FreePoly& rhs() const { return rhs_; }
  std::string to_string() const;

 private:
  Word lhs_;
  FreePoly rhs_;
};

/// Normal form: each word is rewritten at the redex whose end position is
/// leftmost (ties go to the earlier rule in the list) until no rule applies.
FreePoly reduce(const FreePoly& p, const std::vector<RewriteRule>& rules);

/// Whether no rule's lhs occurs in w.
bool is_irreducible(const Word& w, const std::vector<RewriteRule>& rules);

struct CertificateCheck {
  bool ok = false;
  FreePoly residual;  ///< reduce(combination - expected)
};

CertificateCheck verify_certificate(const FreePoly& combination, const FreePoly& expected,
                                    const std::vector<RewriteRule>& rules);

/// Irreducible words of length <= max_degree (at most 12), in DegLexLess order.
std::vector<Word> span_closure(const Alphabet& a, const std::vector<RewriteRule>& rules, std::size_t max_degree);

}  // namespace extlie::freealg
