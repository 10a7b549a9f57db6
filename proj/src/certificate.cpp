#include "extlie/certificate.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace extlie::freealg {

namespace {

enum class Kind { let, rule, assert_reduce, assert_words };

struct Statement {
  Kind kind;
  std::size_t line;
  std::string text;
  std::string name;  // let name, rule lhs
  std::string lhs;
  std::string rhs;
  std::size_t degree = 0;
};

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

bool starts_with_word(const std::string& s, std::string_view w) {
  return s.size() > w.size() && s.compare(0, w.size(), w) == 0 &&
         std::isspace(static_cast<unsigned char>(s[w.size()]));
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw ParseError("line " + std::to_string(line) + ": " + what);
}

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

std::vector<std::string> split_list(std::string_view body) {
  std::vector<std::string> items;
  std::string cur;
  for (char c : body) {
    if (c == ',') {
      items.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!trim(cur).empty() || !items.empty()) items.push_back(trim(cur));
  return items;
}

// "{a, b, c}" -> items; empty braces -> empty list.
std::vector<std::string> braced_list(const std::string& s, std::size_t line) {
  if (s.size() < 2 || s.front() != '{' || s.back() != '}') fail(line, "expected a braced list");
  auto items = split_list(std::string_view(s).substr(1, s.size() - 2));
  for (const auto& i : items)
    if (i.empty()) fail(line, "empty list entry");
  return items;
}

std::size_t parse_count(const std::string& s, std::size_t line) {
  if (s.empty() || s.size() > 3 || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    fail(line, "expected a small non-negative integer, got '" + s + "'");
  return std::stoul(s);
}

// Splits "A == B" at the single top-level "==".
std::pair<std::string, std::string> split_equation(const std::string& s, std::size_t line) {
  auto pos = s.find("==");
  if (pos == std::string::npos || s.find("==", pos + 2) != std::string::npos) fail(line, "assert needs exactly one '=='");
  return {trim(s.substr(0, pos)), trim(s.substr(pos + 2))};
}

// "fn(inner)" -> inner.
std::string call_argument(const std::string& s, std::string_view fn, std::size_t line) {
  if (s.size() < fn.size() + 2 || s.compare(0, fn.size(), fn) != 0) fail(line, "expected " + std::string(fn) + "(...)");
  std::string rest = trim(s.substr(fn.size()));
  if (rest.size() < 2 || rest.front() != '(' || rest.back() != ')') fail(line, "expected " + std::string(fn) + "(...)");
  return trim(std::string_view(rest).substr(1, rest.size() - 2));
}

std::string words_text(const std::vector<Word>& ws, const Alphabet& a) {
  std::string s = "{";
  for (std::size_t i = 0; i < ws.size(); ++i) s += (i ? ", " : "") + a.spell(ws[i]);
  return s + "}";
}

FreePoly parse_at(const std::string& text, std::size_t line, Field f, const Alphabet& a, const NameTable& names) {
  try {
    return parse(text, f, a, names);
  } catch (const Error& e) {
    fail(line, e.what());
  }
}

}  // namespace

CertificateReport run_certificate(std::string_view script) {
  CertificateReport report;
  std::string alphabet_symbols = "XY";
  bool have_chars = false, have_alphabet = false;
  std::vector<Statement> statements;

  std::istringstream in{std::string(script)};
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::string s = trim(raw);
    if (s.empty()) continue;

    if (starts_with_word(s, "char")) {
      if (have_chars) fail(line, "repeated char directive");
      std::string rest = trim(s.substr(4));
      if (!starts_with_word(rest, "in")) fail(line, "expected 'char in {...}'");
      for (const auto& item : braced_list(trim(rest.substr(2)), line)) {
        if (item.size() > 10 || !std::all_of(item.begin(), item.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
          fail(line, "bad characteristic '" + item + "'");
        std::int64_t p = std::stoll(item);
        if (p != 0 && !is_prime(p)) fail(line, "characteristic " + item + " is not 0 or a prime");
        if (std::find(report.characteristics.begin(), report.characteristics.end(), p) != report.characteristics.end())
          fail(line, "repeated characteristic " + item);
        report.characteristics.push_back(p);
      }
      if (report.characteristics.empty()) fail(line, "empty characteristic list");
      have_chars = true;
    } else if (starts_with_word(s, "alphabet")) {
      if (have_alphabet) fail(line, "repeated alphabet directive");
      if (!statements.empty()) fail(line, "alphabet must precede let, rule and assert");
      alphabet_symbols.clear();
      for (const auto& item : split_list(s.substr(8))) {
        if (item.size() != 1) fail(line, "alphabet symbols are single letters, got '" + item + "'");
        alphabet_symbols += item;
      }
      try {
        Alphabet check(alphabet_symbols);
        if (check.size() == 0) fail(line, "empty alphabet");
      } catch (const DomainError& e) {
        fail(line, e.what());
      }
      have_alphabet = true;
    } else if (starts_with_word(s, "let")) {
      auto eq = s.find('=');
      if (eq == std::string::npos) fail(line, "expected 'let NAME = EXPR'");
      Statement st{Kind::let, line, s, trim(s.substr(3, eq - 3)), "", trim(s.substr(eq + 1))};
      if (!is_identifier(st.name)) fail(line, "bad name '" + st.name + "'");
      if (std::all_of(st.name.begin(), st.name.end(), [&](char c) { return alphabet_symbols.find(c) != std::string::npos; }))
        fail(line, "name '" + st.name + "' is also a word");
      statements.push_back(std::move(st));
    } else if (starts_with_word(s, "rule")) {
      auto arrow = s.find("->");
      if (arrow == std::string::npos) fail(line, "expected 'rule WORD -> EXPR'");
      statements.push_back(Statement{Kind::rule, line, s, trim(s.substr(4, arrow - 4)), "", trim(s.substr(arrow + 2))});
    } else if (starts_with_word(s, "assert")) {
      auto [lhs, rhs] = split_equation(trim(s.substr(6)), line);
      if (lhs.rfind("words", 0) == 0) {
        Statement st{Kind::assert_words, line, s, "", "", rhs};
        st.degree = parse_count(call_argument(lhs, "words", line), line);
        if (st.degree > 12) fail(line, "words() supports degree <= 12");
        braced_list(rhs, line);
        statements.push_back(std::move(st));
      } else {
        statements.push_back(Statement{Kind::assert_reduce, line, s, "", call_argument(lhs, "reduce", line), rhs});
      }
    } else {
      fail(line, "unknown statement '" + s + "'");
    }
  }
  if (!have_chars) report.characteristics = {0};
  report.alphabet = alphabet_symbols;
  const Alphabet alphabet(alphabet_symbols);

  for (std::int64_t p : report.characteristics) {
    const Field f = Field::of(p);
    CharacteristicRun run;
    run.characteristic = p;
    NameTable names;
    std::vector<RewriteRule> rules;
    for (const auto& st : statements) {
      switch (st.kind) {
        case Kind::let: {
          FreePoly v = parse_at(st.rhs, st.line, f, alphabet, names);
          if (parse(v.to_string(), f, alphabet) != v)
            throw ContradictionError("line " + std::to_string(st.line) + ": print/parse round trip failed for " + v.to_string());
          names[st.name] = std::move(v);
          break;
        }
        case Kind::rule: {
          Word lhs;
          for (char c : st.name) {
            if (!alphabet.contains(c)) fail(st.line, "rule left-hand side '" + st.name + "' is not a word");
            lhs.push_back(alphabet.index_of(c));
          }
          try {
            rules.emplace_back(lhs, parse_at(st.rhs, st.line, f, alphabet, names));
          } catch (const DomainError& e) {
            fail(st.line, e.what());
          }
          break;
        }
        case Kind::assert_reduce: {
          FreePoly got = reduce(parse_at(st.lhs, st.line, f, alphabet, names), rules);
          FreePoly want = parse_at(st.rhs, st.line, f, alphabet, names);
          AssertionResult r{st.line, st.text, got == want, (got - want).to_string()};
          run.ok = run.ok && r.ok;
          run.assertions.push_back(std::move(r));
          break;
        }
        case Kind::assert_words: {
          std::vector<Word> want;
          for (const auto& item : braced_list(st.rhs, st.line)) {
            Word w;
            if (item != "1")
              for (char c : item) {
                if (!alphabet.contains(c)) fail(st.line, "'" + item + "' is not a word");
                w.push_back(alphabet.index_of(c));
              }
            want.push_back(std::move(w));
          }
          std::sort(want.begin(), want.end(), DegLexLess{});
          auto got = span_closure(alphabet, rules, st.degree);
          bool ok = got == want;
          AssertionResult r{st.line, st.text, ok, ok ? "0" : words_text(got, alphabet)};
          run.ok = run.ok && ok;
          run.assertions.push_back(std::move(r));
          break;
        }
      }
    }
    report.assertion_count += run.assertions.size();
    report.ok = report.ok && run.ok;
    report.runs.push_back(std::move(run));
  }
  return report;
}

}  // namespace extlie::freealg
