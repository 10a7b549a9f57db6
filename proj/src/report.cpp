#include "extlie/report.hpp"

namespace extlie {

namespace {

Json vectors(const std::vector<Vector>& vs) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(to_json(v));
  return a;
}

Json checks(const std::vector<RelationCheck>& cs) {
  Json a = Json::array();
  for (const auto& c : cs) a.push_back(Json{{"name", c.name}, {"holds", c.holds}});
  return a;
}

const char* branch_name(DichotomyBranch b) { return b == DichotomyBranch::exceptional ? "exceptional" : "regular"; }

}  // namespace

Json to_json(const Vector& v) {
  Json a = Json::array();
  for (const auto& s : v.to_strings()) a.push_back(s);
  return a;
}

Json to_json(const Subspace& s) {
  return Json{{"ambient_dim", s.ambient_dim()}, {"dim", s.dim()}, {"basis", vectors(s.basis_vectors())}};
}

Json to_json(const ValidationReport& r) {
  Json v = Json::array();
  for (const auto& t : r.violations) v.push_back(Json::array({t[0], t[1], t[2]}));
  return Json{{"ok", r.ok()}, {"jacobi_violations", v}};
}

Json to_json(const SimplicityVerdict& v) {
  Json j{{"simple", v.simple}, {"certified", v.certified}, {"reason", v.reason}};
  j["witness"] = v.witness ? to_json(*v.witness) : Json(nullptr);
  return j;
}

Json to_json(const ExtremalStatus& s) {
  Json j{{"x", to_json(s.x)}, {"kind", to_string(s.kind)}};
  j["f"] = s.f ? to_json(*s.f) : Json(nullptr);
  return j;
}

Json to_json(const ScanResult& r) {
  return Json{{"counts",
               {{"extremal_nonsandwich", r.count_extremal_nonsandwich},
                {"sandwich", r.count_sandwich},
                {"not_extremal", r.count_not_extremal}}},
              {"extremal_nonsandwich", vectors(r.extremal_nonsandwich)},
              {"sandwich", vectors(r.sandwich)}};
}

Json to_json(const Sl2Triple& t, const WalesCertificate& c) {
  return Json{{"triple", {{"x", to_json(t.x())}, {"y", to_json(t.y())}, {"h", to_json(t.h())}}},
              {"construction",
               {{"w", to_json(c.w)},
                {"x1", to_json(c.x1)},
                {"w1", to_json(c.w1)},
                {"centralizer_dim", c.centralizer.dim()}}}};
}

Json to_json(const HGrading& g) {
  Json labels = Json::array(), dims = Json::array(), comps = Json::array();
  for (int i = HGrading::kMinLabel; i <= HGrading::kMaxLabel; ++i) {
    labels.push_back(i);
    dims.push_back(g.component(i).dim());
    comps.push_back(vectors(g.component(i).basis_vectors()));
  }
  return Json{{"labels", labels}, {"dims", dims}, {"components", comps}};
}

Json to_json(const DichotomyResult& d) {
  Json j{{"branch", branch_name(d.branch)}};
  if (d.v) j["v"] = to_json(*d.v);
  if (d.evidence) {
    j["evidence"] = Json{{"y_kind", to_string(d.evidence->y_status.kind)},
                         {"x_maps_L1_onto_Lminus1", d.evidence->x_maps_l1_onto_lminus1},
                         {"y_maps_Lminus1_onto_L1", d.evidence->y_maps_lminus1_onto_l1},
                         {"integer_grading", d.evidence->integer_grading}};
  }
  return j;
}

Json to_json(const ExtremalGenCertificate& c) {
  return Json{{"z", to_json(c.z)},
              {"alpha", c.alpha.to_string()},
              {"h1", to_json(c.h1)},
              {"u", to_json(c.u)},
              {"span_B", vectors(c.spanning_b)},
              {"closure_xyz_dim", c.closure_xyz_dim},
              {"closure_xyu_dim", c.closure_xyu_dim},
              {"checks", checks(c.checks)}};
}

Json to_json(const WittIsoReport& r) {
  Json names = Json::array(), span = Json::array(), images = Json::array();
  for (std::size_t i = 0; i < 6; ++i) {
    names.push_back(witt_spanning_names()[i]);
    span.push_back(to_json(r.spanning_set[i]));
    images.push_back(to_json(r.images[i]));
  }
  return Json{{"target", to_string(r.target)},
              {"spanning_names", names},
              {"spanning_set", span},
              {"images", images},
              {"v_rescale", r.v_rescale.to_string()},
              {"rules", checks(r.rules)},
              {"pairs_checked", r.pairs_checked},
              {"spans_L", r.spans_l}};
}

Json to_json(const ClassificationReport& r) {
  Json dims = Json::array();
  for (auto d : r.grading_dims) dims.push_back(d);
  Json j{{"verdict", to_string(r.verdict)},
         {"hypotheses",
          {{"characteristic", r.characteristic},
           {"dim", r.dim},
           {"simplicity", to_string(r.simplicity)},
           {"simplicity_note", r.simplicity_note},
           {"assume_simple", r.assume_simple},
           {"x_kind", to_string(r.x_status.kind)}}},
         {"triple", {{"x", to_json(r.x)}, {"y", to_json(r.y)}, {"h", to_json(r.h)}}},
         {"construction", {{"w", to_json(r.wales.w)}, {"x1", to_json(r.wales.x1)}, {"w1", to_json(r.wales.w1)}}},
         {"grading", {{"labels", {-2, -1, 0, 1, 2}}, {"dims", dims}}},
         {"quadratic", r.quadratic},
         {"dichotomy", to_json(r.dichotomy)}};
  if (r.witt) {
    j["isomorphism"] = to_json(*r.witt);
  } else {
    j["generators"] = vectors(r.generators);
    j["closure_dim"] = r.closure_dim;
    Json certs = Json::array();
    for (const auto& c : r.certificates) certs.push_back(to_json(c));
    j["certificates"] = certs;
  }
  j["notes"] = r.notes;
  return j;
}

Json to_json(const freealg::CertificateReport& r) {
  Json runs = Json::array();
  for (const auto& run : r.runs) {
    Json as = Json::array();
    for (const auto& a : run.assertions) {
      Json e{{"line", a.line}, {"statement", a.statement}, {"ok", a.ok}};
      if (!a.ok) e["residual"] = a.residual;
      as.push_back(e);
    }
    runs.push_back(Json{{"characteristic", run.characteristic}, {"ok", run.ok}, {"assertions", as}});
  }
  return Json{{"ok", r.ok},
              {"alphabet", r.alphabet},
              {"characteristics", r.characteristics},
              {"assertion_count", r.assertion_count},
              {"runs", runs}};
}

}  // namespace extlie
