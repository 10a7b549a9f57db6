#include "extlie/sl2.hpp"

namespace extlie {

namespace {

Scalar int_scalar(Field f, std::int64_t v) { return Scalar::from_int(f, v); }

void require_lie_characteristic(const LieAlgebra& l, const char* op) {
  if (!l.field().supports_lie_theory())
    throw CapabilityError(std::string(op) + " needs characteristic other than 2 and 3, got " + l.field().name());
}

Vector combine(const std::vector<Scalar>& coeffs, const std::vector<Vector>& vectors, const Vector& zero) {
  Vector r = zero;
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    if (!coeffs[k].is_zero()) r += coeffs[k] * vectors[k];
  return r;
}

}  // namespace

Sl2Triple Sl2Triple::make(const LieAlgebra& l, Vector x, Vector y, Vector h) {
  const Field f = l.field();
  if (l.bracket(x, y) != h) throw HypothesisError("sl2 relation [x,y] = h fails");
  if (l.bracket(h, x) != int_scalar(f, 2) * x) throw HypothesisError("sl2 relation [h,x] = 2x fails");
  if (l.bracket(h, y) != int_scalar(f, -2) * y) throw HypothesisError("sl2 relation [h,y] = -2y fails");
  return Sl2Triple(std::move(x), std::move(y), std::move(h));
}

Sl2Triple Sl2Triple::from_pair(const LieAlgebra& l, Vector x, Vector y) {
  Vector h = l.bracket(x, y);
  return make(l, std::move(x), std::move(y), std::move(h));
}

Vector find_witness(const LieAlgebra& l, const Vector& x, const Vector& f) {
  if (f.size() != l.dim() || x.size() != l.dim()) throw ShapeError("find_witness: wrong vector length");
  for (std::size_t i = 0; i < f.size(); ++i)
    if (!f[i].is_zero()) return (int_scalar(l.field(), -2) / f[i]) * l.basis_vector(i);
  throw HypothesisError("x is a sandwich: f_x vanishes on every basis vector");
}

std::pair<Sl2Triple, WalesCertificate> wales_sl2(const LieAlgebra& l, const Vector& x, const Vector& w) {
  require_lie_characteristic(l, "wales_sl2");
  const Field f = l.field();
  if (!classify_element(l, x).is_extremal()) throw HypothesisError("x is not extremal");
  if (l.bracket(x, l.bracket(x, w)) != int_scalar(f, -2) * x) throw HypothesisError("witness does not satisfy f_x(w) = -2");

  Vector h = l.bracket(x, w);
  Vector x1 = l.bracket(w, h) - int_scalar(f, 2) * w;
  Subspace c = kernel(l.ad(x));
  if (!c.contains(x1)) throw HypothesisError("x1 = [w,h] - 2w is not in C_L(x)");

  Matrix shifted = l.ad(h) + int_scalar(f, 2) * Matrix::identity(f, l.dim());
  std::vector<Vector> cb = c.basis_vectors();
  std::vector<Vector> images;
  for (const auto& v : cb) images.push_back(shifted * v);
  Matrix m = Matrix::from_columns(f, l.dim(), images);
  if (rank(m) != c.dim()) throw HypothesisError("ad_h + 2 is singular on C_L(x)");
  auto sol = solve(m, x1);
  if (!sol) throw HypothesisError("x1 is not in the image of ad_h + 2 on C_L(x)");
  std::vector<Scalar> coeffs(sol->coords().begin(), sol->coords().end());
  Vector w1 = combine(coeffs, cb, l.zero());
  Vector y = w + w1;

  try {
    Sl2Triple t = Sl2Triple::make(l, x, y, h);
    return {std::move(t), WalesCertificate{w, x1, w1, y, std::move(c)}};
  } catch (const HypothesisError& e) {
    throw ContradictionError(std::string("constructed triple fails: ") + e.what());
  }
}

std::array<std::size_t, 5> HGrading::dims() const {
  std::array<std::size_t, 5> d{};
  for (std::size_t i = 0; i < 5; ++i) d[i] = components_[i].dim();
  return d;
}

std::optional<int> HGrading::product_label(int i, int j) const {
  const int s = i + j;
  if (!field_.is_finite()) {
    if (s >= kMinLabel && s <= kMaxLabel) return s;
    return std::nullopt;
  }
  const auto p = field_.characteristic();
  for (int label = kMinLabel; label <= kMaxLabel; ++label)
    if ((s - label) % p == 0) return label;
  return std::nullopt;
}

HGrading h_grading(const LieAlgebra& l, const Sl2Triple& t) {
  require_lie_characteristic(l, "h_grading");
  const Field f = l.field();
  const std::size_t n = l.dim();
  if (!classify_element(l, t.x()).is_extremal()) throw HypothesisError("x is not extremal");

  Matrix adh = l.ad(t.h());
  Matrix minus_adh = int_scalar(f, -1) * adh;
  std::array<Subspace, 5> comps;
  std::size_t total = 0;
  Subspace sum = Subspace::zero(f, n);
  for (int label = HGrading::kMinLabel; label <= HGrading::kMaxLabel; ++label) {
    auto& c = comps[static_cast<std::size_t>(label + 2)];
    c = eigenspace(minus_adh, int_scalar(f, label));
    total += c.dim();
    sum = sum.sum(c);
  }
  if (total != n || !sum.is_full())
    throw HypothesisError("eigenspaces of -ad_h at -2..2 do not decompose L (ad_h is not diagonalizable)");

  Matrix id = Matrix::identity(f, n);
  Matrix poly = minus_adh;
  for (int root : {1, -1, 2, -2}) poly = poly * (minus_adh - int_scalar(f, root) * id);
  if (!poly.is_zero()) throw ContradictionError("minimal polynomial of ad_h does not divide t(t^2-1)(t^2-4)");
  if (kernel(adh * adh) != kernel(adh)) throw ContradictionError("ker ad_h^2 != ker ad_h");

  HGrading g(f, std::move(comps));
  if (g.component(-2) != span_of(l, {t.x()})) throw ContradictionError("L_-2 is not F x");
  if (g.component(2) != span_of(l, {t.y()})) throw ContradictionError("L_2 is not F y");
  return g;
}

bool grading_compatible(const LieAlgebra& l, const HGrading& g) {
  for (int i = HGrading::kMinLabel; i <= HGrading::kMaxLabel; ++i)
    for (int j = i; j <= HGrading::kMaxLabel; ++j) {
      auto target = g.product_label(i, j);
      for (const auto& a : g.component(i).basis_vectors())
        for (const auto& b : g.component(j).basis_vectors()) {
          Vector c = l.bracket(a, b);
          if (c.is_zero()) continue;
          if (!target || !g.component(*target).contains(c)) return false;
        }
    }
  return true;
}

bool quadraticity_check(const LieAlgebra& l, const Sl2Triple& t) {
  Subspace s = span_of(l, {t.x(), t.y(), t.h()});
  if (!is_subalgebra(l, s)) throw InvarianceError("<x, y, h> is not a subalgebra");
  Matrix q = quotient_action(l, s, {t.y()}).front();
  return (q * q).is_zero();
}

namespace {

Subspace image_span(const LieAlgebra& l, const Vector& a, const Subspace& s) {
  std::vector<Vector> out;
  for (const auto& b : s.basis_vectors()) out.push_back(l.bracket(a, b));
  return span_of(l, out);
}

}  // namespace

DichotomyResult dichotomy(const LieAlgebra& l, const Sl2Triple& t, const HGrading& g) {
  const Field f = l.field();
  const Vector& x = t.x();
  const Vector& y = t.y();
  std::vector<Vector> lm1 = g.component(-1).basis_vectors();
  std::vector<Vector> images;
  for (const auto& b : lm1) images.push_back(l.bracket(y, l.bracket(y, b)));
  Subspace image = span_of(l, images);

  DichotomyResult r;
  if (!image.is_zero()) {
    if (f.characteristic() != 5)
      throw ContradictionError("[y,[y,L_-1]] != 0 outside characteristic 5");
    if (image != span_of(l, {x})) throw ContradictionError("[y,[y,L_-1]] is not F x");
    auto sol = solve(Matrix::from_columns(f, l.dim(), images), x);
    if (!sol) throw ContradictionError("no v in L_-1 with [y,[y,v]] = x");
    std::vector<Scalar> coeffs(sol->coords().begin(), sol->coords().end());
    Vector v = combine(coeffs, lm1, l.zero());
    Vector check = l.bracket(y, l.bracket(y, v));
    // [y,[y,v]] = c x with c != 0 here; rescale so that c = 1.
    if (check != x) {
      auto lead = *x.first_nonzero();
      v *= x[lead] / check[lead];
    }
    if (l.bracket(y, l.bracket(y, v)) != x) throw ContradictionError("rescaled v does not satisfy [y,[y,v]] = x");
    r.branch = DichotomyBranch::exceptional;
    r.v = std::move(v);
    return r;
  }

  RegularEvidence ev{classify_element(l, y)};
  if (!ev.y_status.is_extremal()) throw ContradictionError("[y,[y,L_-1]] = 0 but y is not extremal");
  ev.x_maps_l1_onto_lminus1 = image_span(l, x, g.component(1)) == g.component(-1);
  if (!ev.x_maps_l1_onto_lminus1) throw ContradictionError("[x, L_1] != L_-1");
  ev.y_maps_lminus1_onto_l1 = image_span(l, y, g.component(-1)) == g.component(1);
  if (!ev.y_maps_lminus1_onto_l1) throw ContradictionError("[y, L_-1] != L_1");
  ev.integer_grading = true;
  for (int i = HGrading::kMinLabel; i <= HGrading::kMaxLabel && ev.integer_grading; ++i)
    for (int j = i; j <= HGrading::kMaxLabel && ev.integer_grading; ++j) {
      if (std::abs(i + j) <= 2) continue;
      for (const auto& a : g.component(i).basis_vectors())
        for (const auto& b : g.component(j).basis_vectors())
          if (!l.bracket(a, b).is_zero()) ev.integer_grading = false;
    }
  if (!ev.integer_grading) throw ContradictionError("grading by h is not a Z-grading");
  r.branch = DichotomyBranch::regular;
  r.evidence = std::move(ev);
  return r;
}

}  // namespace extlie
