#include "extlie/classify.hpp"

#include "extlie/builtins.hpp"

namespace extlie {

namespace {

Scalar num(Field f, std::int64_t v) { return Scalar::from_int(f, v); }

class Checklist {
 public:
  explicit Checklist(std::vector<RelationCheck>& out) : out_(out) {}

  // Records the check and throws E naming it on failure.
  template <class E = ContradictionError>
  void require(const std::string& name, bool holds) {
    out_.push_back({name, holds});
    if (!holds) throw E("relation fails: " + name);
  }

 private:
  std::vector<RelationCheck>& out_;
};

}  // namespace

Vector exp_ad(const LieAlgebra& l, const Vector& z, const Vector& x) {
  const Field f = l.field();
  if (!f.supports_lie_theory()) throw CapabilityError("exp(ad_z) needs characteristic other than 2 and 3");
  std::array<Vector, 5> powers{x};
  for (std::size_t k = 1; k < 5; ++k) powers[k] = l.bracket(z, powers[k - 1]);
  if (!l.bracket(z, powers[4]).is_zero()) throw HypothesisError("ad_z^5 x != 0; exp(ad_z) x is not a finite sum");
  const std::int64_t factorial[] = {1, 1, 2, 6, 24};
  Vector u = l.zero();
  for (std::size_t k = 0; k < 5; ++k) u += (Scalar::one(f) / num(f, factorial[k])) * powers[k];
  return u;
}

ExtremalGenCertificate extremal_from_l1(const LieAlgebra& l, const Sl2Triple& t, const HGrading& g, const Vector& z) {
  const Field f = l.field();
  if (!g.component(1).contains(z)) throw HypothesisError("z is not in L_1");
  const Vector& x = t.x();
  const Vector& y = t.y();
  const Vector& h = t.h();
  auto br = [&](const Vector& a, const Vector& b) { return l.bracket(a, b); };

  ExtremalGenCertificate c;
  c.z = z;
  Checklist check(c.checks);

  Vector zx = br(z, x);
  Vector z2x = br(z, zx);
  Vector z3x = br(z, z2x);
  Vector z4x = br(z, z3x);
  Vector xz = br(x, z);

  c.alpha = Scalar(f);
  if (!z4x.is_zero()) {
    auto lead = *y.first_nonzero();
    c.alpha = z4x[lead] / y[lead];
  }

  check.require("rel1: [h,x] = 2x", br(h, x) == num(f, 2) * x);
  check.require("rel2: [h,y] = -2y", br(h, y) == num(f, -2) * y);
  check.require("rel3: [z,h] = z", br(z, h) == z);
  check.require("rel4: [y,z] = 0", br(y, z).is_zero());
  check.require("rel5: [x,[x,z]] = 0", br(x, xz).is_zero());
  check.require("rel6: [y,[x,z]] = z", br(y, xz) == z);
  check.require("rel7: [y,[z,[z,x]]] = 0", br(y, z2x).is_zero());
  check.require("rel8: [x,[z,[z,x]]] = 0", br(x, z2x).is_zero());
  check.require("rel9: [y,[z,[z,[z,x]]]] = 0", br(y, z3x).is_zero());
  check.require("rel10: [x,[x,[z,[z,[z,x]]]]] = 0", br(x, br(x, z3x)).is_zero());
  check.require("rel11: [y,[x,[z,[z,[z,x]]]]] = [z,[z,[z,x]]]", br(y, br(x, z3x)) == z3x);
  check.require("rel12: [z,[z,[z,[z,x]]]] = alpha y", z4x == c.alpha * y);

  c.h1 = br(xz, z);
  Vector h1z = br(c.h1, z);
  Vector h1zx = br(h1z, x);
  check.require("ad_z([[h1,z],x]) = -(alpha/2) h", br(z, h1zx) == (-c.alpha / num(f, 2)) * h);

  c.spanning_b = {x, xz, h1zx, h, c.h1, z, h1z, y};
  Subspace span_b = span_of(l, c.spanning_b);
  Subspace closure_xyz = subalgebra_closure(l, {x, y, z});
  c.closure_xyz_dim = closure_xyz.dim();
  check.require("<x,y,z> = span(B), dim <= 8", closure_xyz == span_b && span_b.dim() <= 8);

  c.u = exp_ad(l, z, x);
  Vector yu = br(y, c.u);
  check.require("[y,u] = -h - z", yu == -h - z);
  check.require("[[y,u],y] = 2y", br(yu, y) == num(f, 2) * y);
  check.require("[[y,u],u] = -2u", br(yu, c.u) == num(f, -2) * c.u);
  check.require("u extremal", classify_element(l, c.u).kind == ExtremalKind::extremal_nonsandwich);

  Scalar half = Scalar::one(f) / num(f, 2);
  Scalar sixth = Scalar::one(f) / num(f, 6);
  Vector z_formula = -br(y, zx) - half * br(y, z2x) - sixth * br(y, z3x);
  check.require("z = -ad_y ad_z x - 1/2 ad_y ad_z^2 x - 1/6 ad_y ad_z^3 x", z_formula == z);
  check.require("z = [y,x] - [y,u]", br(y, x) - yu == z);
  Subspace closure_xyu = subalgebra_closure(l, {x, y, c.u});
  c.closure_xyu_dim = closure_xyu.dim();
  check.require("z in <x,y,u>", closure_xyu.contains(z));
  return c;
}

std::string to_string(WittTarget t) { return t == WittTarget::W ? "W" : "W_tilde"; }

const std::array<std::string, 6>& witt_spanning_names() {
  static const std::array<std::string, 6> names{"x", "y", "h", "v", "[v,y]", "[v,[v,y]]"};
  return names;
}

WittIsoReport witt_recognize(const LieAlgebra& l, const Sl2Triple& t, const Vector& v_in, bool l_is_simple) {
  const Field f = l.field();
  if (f.characteristic() != 5) throw HypothesisError("Witt recognition needs characteristic 5");
  const Vector& x = t.x();
  const Vector& y = t.y();
  const Vector& h = t.h();
  auto br = [&](const Vector& a, const Vector& b) { return l.bracket(a, b); };

  WittIsoReport r;
  Vector yyv = br(y, br(y, v_in));
  auto lead = *x.first_nonzero();
  if (yyv.is_zero() || yyv != (yyv[lead] / x[lead]) * x)
    throw HypothesisError("[y,[y,v]] is not a nonzero multiple of x");
  r.v_rescale = x[lead] / yyv[lead];
  Vector v = r.v_rescale * v_in;

  Vector vy = br(v, y);
  Vector vvy = br(v, vy);
  r.spanning_set = {x, y, h, v, vy, vvy};

  Checklist check(r.rules);
  using HE = HypothesisError;
  check.require<HE>("[x,y] = h", br(x, y) == h);
  check.require<HE>("[x,h] = -2x", br(x, h) == num(f, -2) * x);
  check.require<HE>("[x,v] = 0", br(x, v).is_zero());
  check.require<HE>("[x,[v,y]] = -v", br(x, vy) == -v);
  check.require<HE>("[x,[v,[v,y]]] = 0", br(x, vvy).is_zero());
  check.require<HE>("[y,h] = 2y", br(y, h) == num(f, 2) * y);
  check.require<HE>("[y,v] = -[v,y]", br(y, v) == -vy);
  check.require<HE>("[y,[v,y]] = -x", br(y, vy) == -x);
  check.require<HE>("[y,[v,[v,y]]] = 0", br(y, vvy).is_zero());
  check.require<HE>("[h,v] = v", br(h, v) == v);
  check.require<HE>("[h,[v,y]] = -[v,y]", br(h, vy) == -vy);
  check.require<HE>("[h,[v,[v,y]]] = 0", br(h, vvy).is_zero());
  check.require<HE>("[v,[v,y]] = [v,[v,y]]", br(v, vy) == vvy);
  check.require<HE>("[v,[v,[v,y]]] = 0", br(v, vvy).is_zero());
  check.require<HE>("[[v,y],[v,[v,y]]] = 0", br(vy, vvy).is_zero());
  check.require<HE>("[y,[y,v]] = x", br(y, br(y, v)) == x);

  r.target = vvy.is_zero() ? WittTarget::W : WittTarget::W_tilde;
  const std::size_t m = r.target == WittTarget::W ? 5 : 6;
  LieAlgebra target = builtin(r.target == WittTarget::W ? "witt5" : "wittext5", 5);
  auto d = [&](std::size_t i, std::int64_t c) { return num(f, c) * target.basis_vector(i); };
  r.images = {d(2, -1), d(0, 1), d(1, 2), d(4, 2), d(3, 2), m == 6 ? d(5, 1) : target.zero()};

  std::vector<Vector> independent(r.spanning_set.begin(), r.spanning_set.begin() + static_cast<std::ptrdiff_t>(m));
  Subspace w = span_of(l, independent);
  if (w.dim() != m) throw HypothesisError("x, y, h, v, [v,y] (and [v,[v,y]]) are linearly dependent");

  // phi on the span: express a bracket in the spanning set, map coefficients.
  Matrix cols = Matrix::from_columns(f, l.dim(), independent);
  auto phi = [&](const Vector& a) {
    auto coeffs = solve(cols, a);
    if (!coeffs) throw ContradictionError("bracket leaves the span of the Witt spanning set");
    Vector img = target.zero();
    for (std::size_t k = 0; k < m; ++k)
      if (!(*coeffs)[k].is_zero()) img += (*coeffs)[k] * r.images[k];
    return img;
  };
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = a + 1; b < 6; ++b) {
      if (phi(br(r.spanning_set[a], r.spanning_set[b])) != target.bracket(r.images[a], r.images[b]))
        throw ContradictionError("phi does not preserve [" + witt_spanning_names()[a] + ", " +
                                 witt_spanning_names()[b] + "]");
      ++r.pairs_checked;
    }

  r.spans_l = w.is_full();
  if (l_is_simple && !r.spans_l) throw ContradictionError("L is simple but the Witt span W is a proper subspace");
  return r;
}

std::string to_string(Verdict v) { return v == Verdict::WittExceptional ? "WittExceptional" : "ExtremalGenerated"; }

std::string to_string(SimplicityStatus s) {
  switch (s) {
    case SimplicityStatus::certified:
      return "certified";
    case SimplicityStatus::probable:
      return "probable";
    case SimplicityStatus::assumed:
      return "assumed";
  }
  return "?";
}

ClassificationReport classify_theorem_main(const LieAlgebra& l, const Vector& x, const ClassifyOptions& opts) {
  if (!l.field().supports_lie_theory())
    throw CapabilityError("classification needs characteristic other than 2 and 3, got " + l.field().name());
  ClassificationReport rep;
  rep.characteristic = l.field().characteristic();
  rep.dim = l.dim();
  rep.assume_simple = opts.assume_simple;

  SimplicityOptions sopts;
  sopts.mode = simplicity_decidable(l) ? SimplicityMode::certified : SimplicityMode::probabilistic;
  sopts.random_samples = opts.probabilistic_samples;
  sopts.seed = opts.seed;
  SimplicityVerdict sv = is_simple(l, sopts);
  bool known_simple = sv.simple;
  if (sv.simple) {
    rep.simplicity = sv.certified ? SimplicityStatus::certified : SimplicityStatus::probable;
    rep.simplicity_note = sv.reason;
  } else if (opts.assume_simple) {
    rep.simplicity = SimplicityStatus::assumed;
    rep.simplicity_note = "not simple (" + sv.reason + "); run with assume_simple";
  } else {
    throw HypothesisError("L is not simple: " + sv.reason);
  }

  rep.x_status = classify_element(l, x);
  if (rep.x_status.kind != ExtremalKind::extremal_nonsandwich)
    throw HypothesisError("x is " + to_string(rep.x_status.kind) + ", need an extremal non-sandwich element");

  Vector w = find_witness(l, x, *rep.x_status.f);
  auto [triple, wales] = wales_sl2(l, x, w);
  rep.x = triple.x();
  rep.y = triple.y();
  rep.h = triple.h();
  rep.wales = wales;

  HGrading g = h_grading(l, triple);
  rep.grading_dims = g.dims();
  rep.quadratic = quadraticity_check(l, triple);
  if (!rep.quadratic) throw ContradictionError("y does not act quadratically on L/<x,y,h>");
  rep.dichotomy = dichotomy(l, triple, g);

  if (rep.dichotomy.branch == DichotomyBranch::exceptional) {
    rep.witt = witt_recognize(l, triple, *rep.dichotomy.v, known_simple);
    rep.verdict = Verdict::WittExceptional;
    return rep;
  }

  rep.notes.push_back("regular branch checked as [x,L_1] = L_-1 and [y,L_-1] = L_1");
  rep.generators = {triple.x(), triple.y()};
  for (const auto& z : g.component(1).basis_vectors()) {
    rep.certificates.push_back(extremal_from_l1(l, triple, g, z));
    rep.generators.push_back(rep.certificates.back().u);
  }
  for (const auto& gen : rep.generators)
    if (classify_element(l, gen).kind != ExtremalKind::extremal_nonsandwich)
      throw ContradictionError("generator " + gen.to_string() + " is not extremal");
  Subspace closure = subalgebra_closure(l, rep.generators);
  rep.closure_dim = closure.dim();
  if (!closure.is_full()) {
    if (known_simple) throw ContradictionError("extremal generators span a proper subalgebra of a simple L");
    throw HypothesisError("extremal generators span a proper subalgebra; L is not simple");
  }
  rep.verdict = Verdict::ExtremalGenerated;
  return rep;
}

}  // namespace extlie
