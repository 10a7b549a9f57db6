#include "extlie/builtins.hpp"

namespace extlie {

namespace {

using Table = LieAlgebra::Table;

void put(Table& t, Field f, std::size_t i, std::size_t j, std::vector<std::pair<std::size_t, std::int64_t>> terms) {
  std::vector<Term> out;
  for (auto [k, c] : terms) {
    Scalar s = Scalar::from_int(f, c);
    if (!s.is_zero()) out.push_back({k, s});
  }
  if (out.empty()) return;
  if (i > j) {
    std::swap(i, j);
    for (auto& term : out) term.coeff = -term.coeff;
  }
  t[{i, j}] = std::move(out);
}

LieAlgebra witt(Field f, bool extended) {
  std::vector<std::string> names{"d0", "d1", "d2", "d3", "d4"};
  if (extended) names.push_back("d6");
  auto index_of = [&](int degree) -> std::optional<std::size_t> {
    if (degree >= 0 && degree <= 4) return static_cast<std::size_t>(degree);
    if (extended && degree == 6) return 5;
    return std::nullopt;
  };
  Table t;
  const int degrees[] = {0, 1, 2, 3, 4, 6};
  const std::size_t n = names.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      int i = degrees[a], j = degrees[b];
      if (auto k = index_of(i + j - 1)) put(t, f, a, b, {{*k, j - i}});
    }
  return LieAlgebra(f, std::move(names), t);
}

LieAlgebra heisenberg(Field f) {
  Table t;
  put(t, f, 0, 1, {{2, 1}});
  return LieAlgebra(f, {"p", "q", "c"}, t);
}

}  // namespace

LieAlgebra special_linear(std::size_t n, Field f) {
  if (n < 2) throw CapabilityError("sl_n needs n >= 2");
  // Basis as integer matrices; off-diagonal units then diagonal differences.
  struct Elem {
    std::string name;
    std::vector<std::int64_t> m;  // n*n row-major
  };
  std::vector<Elem> basis;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      Elem e{"e" + std::to_string(i + 1) + std::to_string(j + 1), std::vector<std::int64_t>(n * n, 0)};
      e.m[i * n + j] = 1;
      basis.push_back(std::move(e));
    }
  const std::size_t off = basis.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    Elem e{"h" + std::to_string(i + 1), std::vector<std::int64_t>(n * n, 0)};
    e.m[i * n + i] = 1;
    e.m[(i + 1) * n + i + 1] = -1;
    basis.push_back(std::move(e));
  }
  if (n == 2) {
    basis[0].name = "e";
    basis[1].name = "f";
    basis[2].name = "h";
  }

  auto coords_of = [&](const std::vector<std::int64_t>& m) {
    std::vector<std::pair<std::size_t, std::int64_t>> terms;
    std::size_t idx = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        if (m[i * n + j] != 0) terms.push_back({idx, m[i * n + j]});
        ++idx;
      }
    // trace-zero diagonal D = sum_i c_i h_i with c_i = D_11 + ... + D_ii
    std::int64_t partial = 0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      partial += m[i * n + i];
      if (partial != 0) terms.push_back({off + i, partial});
    }
    return terms;
  };

  Table t;
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = a + 1; b < basis.size(); ++b) {
      std::vector<std::int64_t> c(n * n, 0);
      const auto& x = basis[a].m;
      const auto& y = basis[b].m;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
          for (std::size_t j = 0; j < n; ++j) c[i * n + j] += x[i * n + k] * y[k * n + j] - y[i * n + k] * x[k * n + j];
      put(t, f, a, b, coords_of(c));
    }
  std::vector<std::string> names;
  for (auto& e : basis) names.push_back(e.name);
  return LieAlgebra(f, std::move(names), t);
}

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names{"sl2", "sl3", "sl4", "witt5", "wittext5", "heisenberg"};
  return names;
}

LieAlgebra builtin(std::string_view name, std::int64_t characteristic) {
  if (characteristic == 2 || characteristic == 3)
    throw CapabilityError("builtins need characteristic 0 or a prime other than 2 and 3");
  Field f;
  try {
    f = Field::of(characteristic);
  } catch (const DomainError& e) {
    throw CapabilityError(e.what());
  }
  LieAlgebra l;
  if (name == "sl2") {
    l = special_linear(2, f);
  } else if (name == "sl3") {
    l = special_linear(3, f);
  } else if (name == "sl4") {
    l = special_linear(4, f);
  } else if (name == "witt5" || name == "wittext5") {
    if (characteristic != 5) throw CapabilityError(std::string(name) + " is defined in characteristic 5 only");
    l = witt(f, name == "wittext5");
  } else if (name == "heisenberg") {
    l = heisenberg(f);
  } else {
    throw CapabilityError("unknown builtin '" + std::string(name) + "'");
  }
  if (!validate(l).ok()) throw ContradictionError("builtin " + std::string(name) + " fails the Jacobi identity");
  return l;
}

}  // namespace extlie
