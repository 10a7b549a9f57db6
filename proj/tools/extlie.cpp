#include <CLI11.hpp>
#include <openssl/evp.h>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "extlie/algebra_io.hpp"
#include "extlie/builtins.hpp"
#include "extlie/certificate.hpp"
#include "extlie/report.hpp"

using namespace extlie;

namespace {

enum Exit { kOk = 0, kPropertyFails = 1, kUsage = 2, kContradiction = 3 };

// I/O failures, reported with exit code 2.
class IoError : public Error {
 public:
  using Error::Error;
};

std::string read_input(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  if (in.bad()) throw IoError("cannot read '" + path + "'");
  return s.str();
}

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw Error("SHA-256 failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 15];
  }
  return out;
}

Vector parse_coordinates(const LieAlgebra& l, const std::string& text, const std::string& option) {
  std::vector<Scalar> coords;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    try {
      coords.push_back(Scalar::parse(l.field(), item));
    } catch (const ParseError& e) {
      throw ParseError(option + ": coordinate " + std::to_string(coords.size() + 1) + ": " + e.what());
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (coords.size() != l.dim())
    throw ParseError(option + ": expected " + std::to_string(l.dim()) + " coordinates, got " +
                     std::to_string(coords.size()));
  return Vector(l.field(), std::move(coords));
}

struct Loaded {
  LieAlgebra algebra;
  std::string hash;
};

Loaded load_algebra(const std::string& path) {
  std::string text = read_input(path);
  return {read_algebra(text), sha256_hex(text)};
}

void require_lie(const LieAlgebra& l) {
  auto v = validate(l);
  if (!v.ok()) {
    const auto& t = v.violations.front();
    throw HypothesisError("not a Lie algebra: Jacobi identity fails for basis triple (" + std::to_string(t[0]) + ", " +
                          std::to_string(t[1]) + ", " + std::to_string(t[2]) + ")");
  }
}

int emit(const std::string& command, const std::string& hash, Json report) {
  Json out{{"tool", kToolName}, {"version", kToolVersion}, {"command", command}, {"input_sha256", hash},
           {"report", std::move(report)}};
  std::cout << out.dump(2) << "\n";
  return kOk;
}

SimplicityVerdict best_simplicity(const LieAlgebra& l) {
  SimplicityOptions o;
  o.mode = simplicity_decidable(l) ? SimplicityMode::certified : SimplicityMode::probabilistic;
  return is_simple(l, o);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extremal elements in modular Lie algebras"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  std::string file, name, coords_x, coords_y, coords_w, vec;
  std::int64_t characteristic = 0;
  bool scan_basis_flag = false, exhaustive_flag = false, representatives = false, assume_simple = false;
  unsigned threads = 1;

  auto* check = app.add_subcommand("check", "validate an algebra file and test simplicity");
  check->add_option("file", file, "algebra file, - for stdin")->required();

  auto* builtin_cmd = app.add_subcommand("builtin", "write a builtin algebra file");
  builtin_cmd->add_option("name", name, "sl2, sl3, sl4, witt5, wittext5 or heisenberg")->required();
  builtin_cmd->add_option("-p,--char", characteristic, "characteristic")->required();

  auto* extremal_cmd = app.add_subcommand("extremal", "classify elements as extremal or sandwich");
  extremal_cmd->add_option("file", file)->required();
  auto* vec_opt = extremal_cmd->add_option("--vector", vec, "coordinates c1,..,cn");
  auto* basis_opt = extremal_cmd->add_flag("--scan-basis", scan_basis_flag, "classify every basis vector");
  auto* exh_opt = extremal_cmd->add_flag("--exhaustive", exhaustive_flag, "classify every nonzero vector");
  vec_opt->excludes(basis_opt)->excludes(exh_opt);
  basis_opt->excludes(exh_opt);
  extremal_cmd->add_option("--threads", threads, "worker threads for --exhaustive")->check(CLI::Range(1u, 256u));
  extremal_cmd->add_flag("--representatives", representatives, "list only vectors with leading coordinate 1");

  auto* sl2_cmd = app.add_subcommand("sl2", "build an sl2-triple from an extremal element");
  sl2_cmd->add_option("file", file)->required();
  sl2_cmd->add_option("--x", coords_x, "coordinates of x")->required();
  sl2_cmd->add_option("--w", coords_w, "witness with f_x(w) = -2 (default: found from a basis vector)");

  auto* grade_cmd = app.add_subcommand("grade", "grading by eigenspaces of -ad_h");
  grade_cmd->add_option("file", file)->required();
  grade_cmd->add_option("--x", coords_x)->required();
  grade_cmd->add_option("--y", coords_y)->required();

  auto* classify_cmd = app.add_subcommand("classify", "run the full classification pipeline");
  classify_cmd->add_option("file", file)->required();
  classify_cmd->add_option("--x", coords_x)->required();
  classify_cmd->add_flag("--assume-simple", assume_simple, "proceed even if simplicity fails");

  auto* cert_cmd = app.add_subcommand("cert", "verify a rewrite certificate script");
  cert_cmd->add_option("script", file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*builtin_cmd) {
      std::cout << write_algebra(builtin(name, characteristic));
      return kOk;
    }
    if (*cert_cmd) {
      std::string text = read_input(file);
      auto r = freealg::run_certificate(text);
      emit("cert", sha256_hex(text), to_json(r));
      return r.ok ? kOk : kPropertyFails;
    }

    Loaded in = load_algebra(file);
    const LieAlgebra& l = in.algebra;

    if (*check) {
      auto v = validate(l);
      Json j{{"characteristic", l.field().characteristic()}, {"dim", l.dim()}, {"basis", l.basis_names()},
             {"validation", to_json(v)}};
      if (v.ok() && l.field().supports_lie_theory()) j["simplicity"] = to_json(best_simplicity(l));
      emit("check", in.hash, j);
      return v.ok() ? kOk : kPropertyFails;
    }

    require_lie(l);
    if (*extremal_cmd) {
      if (!vec_opt->count() && !scan_basis_flag && !exhaustive_flag)
        throw CLI::RequiredError("one of --vector, --scan-basis, --exhaustive");
      if (vec_opt->count()) {
        auto s = classify_element(l, parse_coordinates(l, vec, "--vector"));
        emit("extremal", in.hash, to_json(s));
        return s.kind == ExtremalKind::extremal_nonsandwich ? kOk : kPropertyFails;
      }
      if (scan_basis_flag) {
        Json a = Json::array();
        for (const auto& s : scan_basis(l)) a.push_back(to_json(s));
        return emit("extremal", in.hash, Json{{"basis", a}});
      }
      ScanOptions o;
      o.threads = threads;
      o.representatives_only = representatives;
      return emit("extremal", in.hash, to_json(exhaustive_scan(l, o)));
    }
    if (*sl2_cmd) {
      Vector x = parse_coordinates(l, coords_x, "--x");
      auto status = classify_element(l, x);
      if (!status.is_extremal()) throw HypothesisError("x is not extremal");
      Vector w = coords_w.empty() ? find_witness(l, x, *status.f) : parse_coordinates(l, coords_w, "--w");
      auto [t, c] = wales_sl2(l, x, w);
      return emit("sl2", in.hash, to_json(t, c));
    }
    if (*grade_cmd) {
      auto t = Sl2Triple::from_pair(l, parse_coordinates(l, coords_x, "--x"), parse_coordinates(l, coords_y, "--y"));
      auto g = h_grading(l, t);
      Json j{{"triple", {{"x", to_json(t.x())}, {"y", to_json(t.y())}, {"h", to_json(t.h())}}},
             {"grading", to_json(g)},
             {"compatible", grading_compatible(l, g)},
             {"quadratic", quadraticity_check(l, t)}};
      return emit("grade", in.hash, j);
    }
    if (*classify_cmd) {
      ClassifyOptions o;
      o.assume_simple = assume_simple;
      return emit("classify", in.hash, to_json(classify_theorem_main(l, parse_coordinates(l, coords_x, "--x"), o)));
    }
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ContradictionError& e) {
    std::cerr << "contradiction: " << e.what() << "\n";
    return kContradiction;
  } catch (const HypothesisError& e) {
    std::cerr << "hypothesis fails: " << e.what() << "\n";
    return kPropertyFails;
  } catch (const InvarianceError& e) {
    std::cerr << "hypothesis fails: " << e.what() << "\n";
    return kPropertyFails;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
