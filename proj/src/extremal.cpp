#include "extlie/extremal.hpp"

#include <thread>

namespace extlie {

std::string to_string(ExtremalKind k) {
  switch (k) {
    case ExtremalKind::not_extremal:
      return "not_extremal";
    case ExtremalKind::sandwich:
      return "sandwich";
    case ExtremalKind::extremal_nonsandwich:
      return "extremal_nonsandwich";
  }
  return "?";
}

Scalar ExtremalStatus::f_of(const Vector& m) const {
  if (!f) throw DomainError("f_x is only defined for extremal x");
  if (m.size() != f->size()) throw ShapeError("f_x applied to a vector of the wrong length");
  Scalar s(f->field());
  for (std::size_t i = 0; i < m.size(); ++i) s += (*f)[i] * m[i];
  return s;
}

namespace {

// Classification from a precomputed ad_x^2, which is the hot path of the scan.
ExtremalStatus classify_with(const Matrix& ad2, const Vector& x) {
  ExtremalStatus st{x, ExtremalKind::not_extremal, std::nullopt};
  const std::size_t lead = *x.first_nonzero();
  const Scalar lead_inv = x[lead].inverse();
  const std::size_t n = x.size();
  Vector f(x.field(), n);
  bool all_zero = true;
  for (std::size_t j = 0; j < n; ++j) {
    Scalar c = ad2(lead, j) * lead_inv;
    for (std::size_t r = 0; r < n; ++r)
      if (ad2(r, j) != c * x[r]) return st;
    if (!c.is_zero()) all_zero = false;
    f[j] = c;
  }
  st.kind = all_zero ? ExtremalKind::sandwich : ExtremalKind::extremal_nonsandwich;
  st.f = std::move(f);
  return st;
}

}  // namespace

ExtremalStatus classify_element(const LieAlgebra& l, const Vector& x) {
  if (x.size() != l.dim()) throw ShapeError("element has the wrong number of coordinates");
  if (x.is_zero()) throw DomainError("f_x is undefined at x = 0");
  Matrix a = l.ad(x);
  return classify_with(a * a, x);
}

std::vector<ExtremalStatus> scan_basis(const LieAlgebra& l) {
  std::vector<ExtremalStatus> out;
  for (const auto& e : l.basis()) out.push_back(classify_element(l, e));
  return out;
}

namespace {

struct Chunk {
  std::vector<Vector> ext, sand;
  std::uint64_t n_ext = 0, n_sand = 0, n_not = 0;
};

Vector vector_at(Field f, std::size_t n, std::uint64_t index, std::uint64_t p) {
  Vector v(f, n);
  for (std::size_t i = n; i-- > 0;) {
    v[i] = Scalar::from_int(f, static_cast<std::int64_t>(index % p));
    index /= p;
  }
  return v;
}

void scan_range(const LieAlgebra& l, std::uint64_t begin, std::uint64_t end, bool reps, Chunk& out) {
  const Field f = l.field();
  const auto p = static_cast<std::uint64_t>(f.characteristic());
  const std::size_t n = l.dim();
  for (std::uint64_t idx = begin; idx < end; ++idx) {
    Vector x = vector_at(f, n, idx, p);
    Matrix a = l.ad(x);
    ExtremalStatus st = classify_with(a * a, x);
    bool keep = !reps || x[*x.first_nonzero()].is_one();
    switch (st.kind) {
      case ExtremalKind::extremal_nonsandwich:
        ++out.n_ext;
        if (keep) out.ext.push_back(std::move(x));
        break;
      case ExtremalKind::sandwich:
        ++out.n_sand;
        if (keep) out.sand.push_back(std::move(x));
        break;
      case ExtremalKind::not_extremal:
        ++out.n_not;
        break;
    }
  }
}

}  // namespace

ScanResult exhaustive_scan(const LieAlgebra& l, const ScanOptions& opts) {
  if (!simplicity_decidable(l))
    throw CapabilityError("exhaustive scan needs a finite field with p^n <= 10^7");
  const auto p = static_cast<std::uint64_t>(l.field().characteristic());
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < l.dim(); ++i) total *= p;

  // Index order is lexicographic order, so concatenating ordered chunks
  // keeps the result independent of the thread count.
  unsigned threads = std::max(1u, opts.threads);
  std::vector<Chunk> chunks(threads);
  std::vector<std::thread> workers;
  const std::uint64_t span = (total - 1 + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    std::uint64_t begin = 1 + t * span;
    std::uint64_t end = std::min<std::uint64_t>(total, begin + span);
    if (begin >= end) continue;
    if (threads == 1)
      scan_range(l, begin, end, opts.representatives_only, chunks[t]);
    else
      workers.emplace_back(scan_range, std::cref(l), begin, end, opts.representatives_only, std::ref(chunks[t]));
  }
  for (auto& w : workers) w.join();

  ScanResult r;
  for (auto& c : chunks) {
    r.count_extremal_nonsandwich += c.n_ext;
    r.count_sandwich += c.n_sand;
    r.count_not_extremal += c.n_not;
    for (auto& v : c.ext) r.extremal_nonsandwich.push_back(std::move(v));
    for (auto& v : c.sand) r.sandwich.push_back(std::move(v));
  }
  return r;
}

}  // namespace extlie
