// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "extlie/algebra_io.hpp"
#include "extlie/builtins.hpp"
#include "extlie/certificate.hpp"
#include "extlie/classify.hpp"

using namespace extlie;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond && pass) detail = what;
    pass = pass && cond;
  }
};

using Clock = std::chrono::steady_clock;

bool report(int id, const char* title, double budget_s, const std::function<Outcome()>& body) {
  auto start = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (budget_s > 0 && secs >= budget_s) {
    o.pass = false;
    o.detail = "took " + std::to_string(secs) + " s, budget " + std::to_string(budget_s) + " s";
  }
  std::ostringstream line;
  line << (o.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << title;
  line.precision(3);
  line << std::fixed << " (" << secs << " s)";
  if (!o.pass) line << " -- " << o.detail;
  std::cout << line.str() << std::endl;
  return o.pass;
}

Scalar num(Field f, std::int64_t v) { return Scalar::from_int(f, v); }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

bool has_check(const std::vector<RelationCheck>& cs, const std::string& prefix) {
  for (const auto& c : cs)
    if (c.name.rfind(prefix, 0) == 0) return c.holds;
  return false;
}

struct Designated {
  std::string name;
  LieAlgebra algebra;
  Vector x;
};

std::vector<Designated> simple_builtins() {
  std::vector<Designated> out;
  for (std::int64_t p : {5, 7}) {
    auto sl2 = builtin("sl2", p), sl3 = builtin("sl3", p), sl4 = builtin("sl4", p);
    out.push_back({"sl2/F" + std::to_string(p), sl2, sl2.basis_vector(0)});
    out.push_back({"sl3/F" + std::to_string(p), sl3, sl3.basis_vector(1)});
    out.push_back({"sl4/F" + std::to_string(p), sl4, sl4.basis_vector(2)});
  }
  auto w = builtin("witt5", 5);
  out.push_back({"witt5", w, Vector::from_ints(w.field(), {0, 0, 4, 0, 0})});
  return out;
}

// Seeded admissible witnesses: random w with f_x(w) = -2.
std::vector<Vector> witnesses(const LieAlgebra& l, const ExtremalStatus& st, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Field f = l.field();
  std::vector<Vector> out;
  while (out.size() < count) {
    Vector w(f, l.dim());
    for (std::size_t i = 0; i < l.dim(); ++i) w[i] = num(f, static_cast<std::int64_t>(rng() % f.characteristic()));
    Scalar fw = st.f_of(w);
    if (fw.is_zero()) continue;
    out.push_back((num(f, -2) / fw) * w);
  }
  return out;
}

struct Built {
  std::string name;
  LieAlgebra algebra;
  Sl2Triple triple;
  WalesCertificate cert;
};

// Triples for every simple builtin and for the simple quotient of wittext5.
std::vector<Built> constructed_triples() {
  auto targets = simple_builtins();
  auto we = builtin("wittext5", 5);
  auto q = quotient_algebra(we, center(we));
  targets.push_back({"wittext5/center", q, Vector::from_ints(q.field(), {0, 0, 4, 0, 0})});
  std::vector<Built> out;
  std::uint64_t seed = 1;
  for (const auto& d : targets) {
    auto st = classify_element(d.algebra, d.x);
    for (const auto& w : witnesses(d.algebra, st, 50, seed++)) {
      auto [t, c] = wales_sl2(d.algebra, d.x, w);
      out.push_back({d.name, d.algebra, t, c});
    }
  }
  return out;
}

Outcome criterion1() {
  Outcome o;
  auto w = builtin("witt5", 5);
  Field f = w.field();
  Vector x = Vector::from_ints(f, {0, 0, 4, 0, 0});
  auto r = classify_theorem_main(w, x);
  o.expect(r.verdict == Verdict::WittExceptional, "verdict " + to_string(r.verdict));
  o.expect(r.x == x, "x");
  o.expect(r.y == w.basis_vector(0), "y is not d/dz: " + r.y.to_string());
  o.expect(r.h == num(f, 2) * w.basis_vector(1), "h is not 2z d/dz: " + r.h.to_string());
  o.expect(r.grading_dims == std::array<std::size_t, 5>{1, 1, 1, 1, 1}, "grading dims");
  o.expect(r.witt.has_value(), "no isomorphism report");
  if (!r.witt) return o;
  o.expect(r.witt->target == WittTarget::W, "target is not W");
  o.expect(r.witt->spans_l, "spanning set does not span L");
  o.expect(r.witt->pairs_checked == 15, "phi not checked on all pairs");
  o.expect(r.witt->rules.size() == 16, "rule count " + std::to_string(r.witt->rules.size()));
  for (const auto& rule : r.witt->rules) o.expect(rule.holds, "rule fails: " + rule.name);
  // The images must form a basis of witt5 and the map must preserve brackets.
  std::vector<Vector> imgs(r.witt->images.begin(), r.witt->images.begin() + 5);
  o.expect(Subspace::span(f, 5, imgs).is_full(), "images do not span witt5");
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) {
      Vector src = w.bracket(r.witt->spanning_set[i], r.witt->spanning_set[j]);
      std::vector<Vector> cols(r.witt->spanning_set.begin(), r.witt->spanning_set.begin() + 5);
      auto c = solve(Matrix::from_columns(f, 5, cols), src);
      o.expect(c.has_value(), "bracket leaves the span");
      if (!c) continue;
      Vector mapped = w.zero();
      for (std::size_t k = 0; k < 5; ++k) mapped += (*c)[k] * r.witt->images[k];
      o.expect(mapped == w.bracket(r.witt->images[i], r.witt->images[j]), "phi is not a homomorphism");
    }
  return o;
}

Outcome criterion2() {
  Outcome o;
  auto w = builtin("witt5", 5);
  auto r = exhaustive_scan(w);
  std::uint64_t total = r.count_extremal_nonsandwich + r.count_sandwich + r.count_not_extremal;
  o.expect(total == 3124, "scanned " + std::to_string(total) + " vectors");
  std::size_t multiples = 0;
  for (const auto& v : r.extremal_nonsandwich) {
    Vector rest = v;
    rest[2] = Scalar(w.field());
    if (rest.is_zero()) ++multiples;
  }
  o.expect(r.count_extremal_nonsandwich == 4 && multiples == 4,
           "found " + std::to_string(r.count_extremal_nonsandwich) + " extremal non-sandwich vectors, " +
               std::to_string(multiples) + " of them multiples of z^2 d/dz");
  return o;
}

Outcome criterion3(std::int64_t p) {
  Outcome o;
  auto l = builtin("sl3", p);
  auto r = classify_theorem_main(l, l.basis_vector(1));
  o.expect(r.verdict == Verdict::ExtremalGenerated, "verdict " + to_string(r.verdict));
  o.expect(r.closure_dim == 8, "closure dim " + std::to_string(r.closure_dim));
  o.expect(!r.certificates.empty(), "no certificates");
  for (const auto& c : r.certificates) {
    for (int k = 1; k <= 12; ++k) o.expect(has_check(c.checks, "rel" + std::to_string(k) + ":"), "rel" + std::to_string(k));
    for (const char* name : {"[y,u] = -h - z", "[[y,u],y] = 2y", "[[y,u],u] = -2u", "u extremal", "z in <x,y,u>"})
      o.expect(has_check(c.checks, name), name);
    o.expect(c.closure_xyz_dim <= 8, "dim <x,y,z> > 8");
    o.expect(classify_element(l, c.u).is_extremal(), "u not extremal");
    o.expect(subalgebra_closure(l, {r.x, r.y, c.u}).contains(c.z), "z not in <x,y,u>");
  }
  o.expect(subalgebra_closure(l, r.generators).is_full(), "generators do not generate L");
  return o;
}

Outcome criterion4() {
  Outcome o;
  std::uint64_t seed = 1;
  for (const auto& d : simple_builtins()) {
    const LieAlgebra& l = d.algebra;
    Field f = l.field();
    auto st = classify_element(l, d.x);
    for (const auto& w : witnesses(l, st, 50, seed++ * 7919)) {
      auto [t, c] = wales_sl2(l, d.x, w);
      o.expect(l.bracket(t.x(), t.y()) == t.h(), d.name + ": [x,y] != h");
      o.expect(l.bracket(t.h(), t.x()) == num(f, 2) * t.x(), d.name + ": [h,x] != 2x");
      o.expect(l.bracket(t.h(), t.y()) == num(f, -2) * t.y(), d.name + ": [h,y] != -2y");
      o.expect(t.h() == l.bracket(d.x, w), d.name + ": h != [x,w]");
      Subspace cx = kernel(l.ad(d.x));
      Matrix hm = l.ad(t.h());
      auto basis = cx.basis_vectors();
      Matrix restricted(f, basis.size(), basis.size());
      for (std::size_t j = 0; j < basis.size(); ++j) {
        Vector img = hm * basis[j] + num(f, 2) * basis[j];
        o.expect(cx.contains(img), d.name + ": C_L(x) not H-invariant");
        if (!cx.contains(img)) continue;
        auto co = cx.coordinates(img);
        for (std::size_t i = 0; i < co.size(); ++i) restricted(i, j) = co[i];
        Vector cubic = hm * basis[j];
        cubic = hm * (cubic - basis[j]);
        cubic = hm * cubic - num(f, 2) * cubic;
        o.expect(cubic.is_zero(), d.name + ": H(H-1)(H-2) != 0 on C_L(x)");
      }
      o.expect(rank(restricted) == basis.size(), d.name + ": H+2 singular on C_L(x)");
    }
  }
  return o;
}

Outcome criterion5(const std::vector<Built>& built) {
  Outcome o;
  for (const auto& b : built) o.expect(quadraticity_check(b.algebra, b.triple), b.name + ": y not quadratic");
  return o;
}

Outcome criterion6(const std::vector<Built>& built) {
  Outcome o;
  for (const auto& b : built) {
    const LieAlgebra& l = b.algebra;
    Field f = l.field();
    const std::size_t n = l.dim();
    auto g = h_grading(l, b.triple);
    Matrix hm = l.ad(b.triple.h());
    Matrix minus = num(f, -1) * hm;
    Subspace sum = Subspace::zero(f, n);
    std::size_t dims = 0;
    for (int i = -2; i <= 2; ++i) {
      auto e = eigenspace(minus, num(f, i));
      o.expect(e == g.component(i), b.name + ": component mismatch");
      sum = sum.sum(e);
      dims += e.dim();
    }
    o.expect(sum.is_full() && dims == n, b.name + ": eigenspaces do not sum directly to L");
    Matrix id = Matrix::identity(f, n);
    Matrix poly = hm * (hm - id) * (hm + id) * (hm - num(f, 2) * id) * (hm + num(f, 2) * id);
    o.expect(poly.is_zero(), b.name + ": minimal polynomial does not divide t(t^2-1)(t^2-4)");
    o.expect(kernel(hm * hm) == kernel(hm), b.name + ": ker ad_h^2 != ker ad_h");
    o.expect(g.component(-2) == Subspace::span(f, n, {b.triple.x()}), b.name + ": L_-2 != Fx");
    o.expect(g.component(2) == Subspace::span(f, n, {b.triple.y()}), b.name + ": L_2 != Fy");
  }
  return o;
}

Outcome criterion7() {
  Outcome o;
  auto run = [&](const char* file, std::vector<std::string> needles) {
    auto r = freealg::run_certificate(read_file(std::string(EXTLIE_CERT_DIR) + "/" + file));
    o.expect(r.ok, std::string(file) + " has failing assertions");
    for (const auto& needle : needles) {
      bool seen = false;
      for (const auto& rr : r.runs)
        for (const auto& a : rr.assertions)
          if (a.statement.find(needle) != std::string::npos) seen = seen || a.ok;
      o.expect(seen, std::string(file) + ": no passing assertion for " + needle);
    }
  };
  run("lemma22.cert", {"== 12*Y^2", "== Y^2"});
  run("prop32.cert", {"R9*(1 - X*Y) - 2*Y*V*R10) == X", "reduce(R10) == Y", "reduce(R8) == V"});
  run("thm23_span.cert", {"reduce(H^3 - H) == 0", "words(6) == {1, X, Y, XY, YX}"});
  return o;
}

Outcome criterion8() {
  Outcome o;
  auto h = builtin("heisenberg", 5);
  auto hs = classify_element(h, h.basis_vector(0));
  o.expect(hs.kind == ExtremalKind::sandwich, "heisenberg p is not a sandwich");
  bool threw = false;
  try {
    find_witness(h, h.basis_vector(0), *hs.f);
  } catch (const HypothesisError&) {
    threw = true;
  }
  o.expect(threw, "find_witness accepted a sandwich");
  auto sl2 = builtin("sl2", 5);
  o.expect(classify_element(sl2, sl2.basis_vector(2)).kind == ExtremalKind::not_extremal, "h is extremal");
  auto w = builtin("witt5", 5);
  auto table = w.table();
  table[{0, 1}] = {{0, num(w.field(), 2)}};
  auto v = validate(LieAlgebra(w.field(), w.basis_names(), table));
  o.expect(!v.ok() && !v.violations.empty(), "mutation not detected");
  return o;
}

Outcome criterion9() {
  Outcome o;
  auto we = builtin("wittext5", 5);
  auto z = center(we);
  o.expect(z == Subspace::span(we.field(), 6, {we.basis_vector(5)}), "center is not F z^6 d/dz");
  auto s = is_simple(we);
  o.expect(!s.simple && s.certified, "wittext5 reported simple");
  o.expect(write_algebra(quotient_algebra(we, z)) == write_algebra(builtin("witt5", 5)), "quotient serialization differs");
  return o;
}

}  // namespace

int main() {
  bool ok = true;
  ok &= report(1, "witt5 pipeline gives WittExceptional with the expected triple and isomorphism", 1.0, criterion1);
  ok &= report(2, "exhaustive witt5 scan finds exactly 4 extremal non-sandwich vectors, all multiples of z^2 d/dz", 5.0,
               criterion2);
  ok &= report(3, "sl3(F7) regular pipeline with all per-z certificates", 1.0, [] { return criterion3(7); });
  ok &= report(3, "sl3(F5) regular pipeline with all per-z certificates", 1.0, [] { return criterion3(5); });
  ok &= report(4, "Wales construction on 50 seeded witnesses per simple builtin", 0, criterion4);
  std::vector<Built> built;
  try {
    built = constructed_triples();
  } catch (const std::exception& e) {
    std::cout << "note: triple construction failed: " << e.what() << std::endl;
  }
  ok &= report(5, "y acts quadratically modulo <x,y,h> for every constructed triple", 0,
               [&] {
                 Outcome o = criterion5(built);
                 o.expect(!built.empty(), "no triples");
                 return o;
               });
  ok &= report(6, "-ad_h grading properties for every constructed triple", 0,
               [&] {
                 Outcome o = criterion6(built);
                 o.expect(!built.empty(), "no triples");
                 return o;
               });
  ok &= report(7, "certificate corpus", 1.0, criterion7);
  ok &= report(8, "negative controls", 0, criterion8);
  ok &= report(9, "wittext5 structure", 0, criterion9);
  return ok ? 0 : 1;
}
