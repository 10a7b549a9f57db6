#include "extlie/free_algebra.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

namespace extlie::freealg {

Alphabet::Alphabet(std::string symbols) : symbols_(std::move(symbols)) {
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (!std::isalpha(static_cast<unsigned char>(symbols_[i])))
      throw DomainError(std::string("alphabet symbol '") + symbols_[i] + "' is not a letter");
    if (symbols_.find(symbols_[i]) != i) throw DomainError(std::string("repeated alphabet symbol '") + symbols_[i] + "'");
  }
}

std::uint8_t Alphabet::index_of(char c) const {
  auto pos = symbols_.find(c);
  if (pos == std::string::npos) throw DomainError(std::string("symbol '") + c + "' is not in the alphabet");
  return static_cast<std::uint8_t>(pos);
}

Word Alphabet::word(std::string_view letters) const {
  if (letters == "1") return {};
  Word w;
  for (char c : letters) w.push_back(index_of(c));
  return w;
}

std::string Alphabet::spell(const Word& w) const {
  if (w.empty()) return "1";
  std::string s;
  for (auto i : w) s += symbols_.at(i);
  return s;
}

FreePoly FreePoly::constant(Field f, const Alphabet& a, const Scalar& c) { return monomial(f, a, {}, c); }

FreePoly FreePoly::monomial(Field f, const Alphabet& a, const Word& w, const Scalar& c) {
  FreePoly p(f, a);
  p.add_term(w, c);
  return p;
}

bool FreePoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }

Scalar FreePoly::constant_term() const {
  auto it = terms_.find(Word{});
  return it == terms_.end() ? Scalar(field_) : it->second;
}

std::size_t FreePoly::degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.size(); }

void FreePoly::add_term(const Word& w, const Scalar& c) {
  if (c.field() != field_) throw FieldMismatch("coefficient over " + c.field().name() + " in " + field_.name() + " polynomial");
  for (auto s : w)
    if (s >= alphabet_.size()) throw DomainError("word uses a symbol outside the alphabet");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void FreePoly::check_compatible(const FreePoly& o) const {
  if (field_ != o.field_) throw FieldMismatch("polynomials over " + field_.name() + " and " + o.field_.name());
  if (alphabet_ != o.alphabet_)
    throw DomainError("polynomials over alphabets '" + alphabet_.symbols() + "' and '" + o.alphabet_.symbols() + "'");
}

FreePoly FreePoly::operator-() const {
  FreePoly r(*this);
  for (auto& [w, c] : r.terms_) c = -c;
  return r;
}

FreePoly& FreePoly::operator+=(const FreePoly& o) {
  check_compatible(o);
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

FreePoly& FreePoly::operator-=(const FreePoly& o) {
  check_compatible(o);
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

FreePoly& FreePoly::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, x] : terms_) x *= c;
  return *this;
}

FreePoly operator*(const FreePoly& a, const FreePoly& b) {
  a.check_compatible(b);
  FreePoly r(a.field_, a.alphabet_);
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      r.add_term(w, ca * cb);
    }
  return r;
}

FreePoly FreePoly::pow(unsigned e) const {
  FreePoly r = constant(field_, alphabet_, Scalar::one(field_));
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

bool FreePoly::operator==(const FreePoly& o) const {
  return field_ == o.field_ && alphabet_ == o.alphabet_ && terms_ == o.terms_;
}

namespace {

// Sign and magnitude text of a coefficient.
std::pair<bool, std::string> signed_magnitude(const Scalar& c) {
  const Field f = c.field();
  if (f.is_finite()) {
    const auto p = static_cast<std::uint64_t>(f.characteristic());
    const std::uint64_t r = c.residue();
    if (r > p / 2) return {true, std::to_string(p - r)};
    return {false, std::to_string(r)};
  }
  if (c.rational() < 0) return {true, (-c).to_string()};
  return {false, c.to_string()};
}

std::string word_text(const Word& w, const Alphabet& a) {
  std::string s;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!s.empty()) s += "*";
    s += a.symbols()[w[i]];
    if (j - i > 1) s += "^" + std::to_string(j - i);
    i = j;
  }
  return s;
}

}  // namespace

std::string FreePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Word, Scalar>> ordered(terms_.begin(), terms_.end());
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const auto& a, const auto& b) { return a.first.size() > b.first.size(); });
  std::string s;
  bool first = true;
  for (const auto& [w, c] : ordered) {
    auto [neg, mag] = signed_magnitude(c);
    if (first)
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    first = false;
    if (w.empty())
      s += mag;
    else if (mag == "1")
      s += word_text(w, alphabet_);
    else
      s += mag + "*" + word_text(w, alphabet_);
  }
  return s;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, Field f, const Alphabet& a, const NameTable& names)
      : text_(text), field_(f), alphabet_(a), names_(names) {}

  FreePoly run() {
    FreePoly p = sum();
    skip();
    if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  static bool starts_factor(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(';
  }

  FreePoly sum() {
    FreePoly acc = product();
    while (true) {
      char c = peek();
      if (c == '+') {
        ++pos_;
        acc += product();
      } else if (c == '-') {
        ++pos_;
        acc -= product();
      } else {
        return acc;
      }
    }
  }

  FreePoly product() {
    FreePoly acc = unary();
    while (true) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * unary();
      } else if (c == '/') {
        ++pos_;
        std::size_t at = pos_;
        FreePoly d = unary();
        if (!d.is_constant()) throw ParseError("division by a non-constant", at);
        if (d.is_zero()) throw ParseError("division by zero", at);
        acc *= d.constant_term().inverse();
      } else if (starts_factor(c)) {
        acc = acc * unary();
      } else {
        return acc;
      }
    }
  }

  FreePoly unary() {
    char c = peek();
    if (c == '-') {
      ++pos_;
      return -unary();
    }
    if (c == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  FreePoly power() {
    FreePoly base = primary();
    if (peek() != '^') return base;
    ++pos_;
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("exponent must be a non-negative integer");
    if (pos_ - start > 4) throw ParseError("exponent too large", start);
    return base.pow(static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
  }

  FreePoly primary() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      FreePoly inner = sum();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    std::size_t start = pos_;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      Integer v{std::string(text_.substr(start, pos_ - start))};
      return FreePoly::constant(field_, alphabet_, Scalar::from_integer(field_, v));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
      std::string ident(text_.substr(start, pos_ - start));
      if (auto it = names_.find(ident); it != names_.end()) return it->second;
      Word w;
      for (std::size_t i = 0; i < ident.size(); ++i) {
        if (!alphabet_.contains(ident[i]))
          throw ParseError("unknown symbol '" + ident + "'", start + i);
        w.push_back(alphabet_.index_of(ident[i]));
      }
      return FreePoly::monomial(field_, alphabet_, w, Scalar::one(field_));
    }
    if (c == '\0') fail("unexpected end of expression");
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Field field_;
  const Alphabet& alphabet_;
  const NameTable& names_;
};

}  // namespace

FreePoly parse(std::string_view text, Field f, const Alphabet& a, const NameTable& names) {
  return Parser(text, f, a, names).run();
}

RewriteRule::RewriteRule(Word lhs, FreePoly rhs) : lhs_(std::move(lhs)), rhs_(std::move(rhs)) {
  if (lhs_.empty()) throw DomainError("rewrite rule with empty left-hand side");
  for (const auto& [w, c] : rhs_.terms())
    if (!DegLexLess{}(w, lhs_))
      throw DomainError("rule " + to_string() + " does not decrease: " + rhs_.alphabet().spell(w) +
                        " is not smaller than " + rhs_.alphabet().spell(lhs_));
}

std::string RewriteRule::to_string() const { return rhs_.alphabet().spell(lhs_) + " -> " + rhs_.to_string(); }

namespace {

struct Redex {
  std::size_t start;
  std::size_t rule;
};

std::optional<Redex> find_redex(const Word& w, const std::vector<RewriteRule>& rules) {
  for (std::size_t end = 1; end <= w.size(); ++end)
    for (std::size_t r = 0; r < rules.size(); ++r) {
      const Word& lhs = rules[r].lhs();
      if (lhs.size() > end) continue;
      if (std::equal(lhs.begin(), lhs.end(), w.begin() + static_cast<std::ptrdiff_t>(end - lhs.size())))
        return Redex{end - lhs.size(), r};
    }
  return std::nullopt;
}

}  // namespace

FreePoly reduce(const FreePoly& p, const std::vector<RewriteRule>& rules) {
  for (const auto& r : rules)
    if (r.rhs().alphabet() != p.alphabet() || r.rhs().field() != p.field())
      throw DomainError("rule " + r.to_string() + " is over a different alphabet or field");
  // Rewriting only produces DegLex-smaller words, so popping the largest
  // pending word first settles every word exactly once.
  FreePoly::Terms pending = p.terms();
  FreePoly out(p.field(), p.alphabet());
  while (!pending.empty()) {
    auto it = std::prev(pending.end());
    Word w = it->first;
    Scalar c = it->second;
    pending.erase(it);
    auto redex = find_redex(w, rules);
    if (!redex) {
      out.add_term(w, c);
      continue;
    }
    const RewriteRule& rule = rules[redex->rule];
    for (const auto& [rw, rc] : rule.rhs().terms()) {
      Word nw(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(redex->start));
      nw.insert(nw.end(), rw.begin(), rw.end());
      nw.insert(nw.end(), w.begin() + static_cast<std::ptrdiff_t>(redex->start + rule.lhs().size()), w.end());
      Scalar nc = c * rc;
      auto [pit, inserted] = pending.emplace(std::move(nw), nc);
      if (!inserted) {
        pit->second += nc;
        if (pit->second.is_zero()) pending.erase(pit);
      }
    }
  }
  return out;
}

bool is_irreducible(const Word& w, const std::vector<RewriteRule>& rules) { return !find_redex(w, rules); }

CertificateCheck verify_certificate(const FreePoly& combination, const FreePoly& expected,
                                    const std::vector<RewriteRule>& rules) {
  CertificateCheck c;
  c.residual = reduce(combination - expected, rules);
  c.ok = c.residual.is_zero();
  return c;
}

std::vector<Word> span_closure(const Alphabet& a, const std::vector<RewriteRule>& rules, std::size_t max_degree) {
  if (max_degree > 12) throw DomainError("span_closure supports degree <= 12");
  std::vector<Word> out{Word{}};
  std::vector<Word> level{Word{}};
  for (std::size_t d = 1; d <= max_degree && !level.empty(); ++d) {
    std::vector<Word> next;
    for (const auto& w : level)
      for (std::uint8_t s = 0; s < a.size(); ++s) {
        Word nw = w;
        nw.push_back(s);
        // The prefix is irreducible, so only redexes ending at the last
        // letter can occur.
        bool reducible = false;
        for (const auto& r : rules) {
          const Word& lhs = r.lhs();
          if (lhs.size() <= nw.size() && std::equal(lhs.rbegin(), lhs.rend(), nw.rbegin())) {
            reducible = true;
            break;
          }
        }
        if (!reducible) next.push_back(std::move(nw));
      }
    out.insert(out.end(), next.begin(), next.end());
    level = std::move(next);
  }
  std::sort(out.begin(), out.end(), DegLexLess{});
  return out;
}

}  // namespace extlie::freealg
