#include "gkz/report.hpp"

#include <sstream>

#include "gkz/errors.hpp"
#include "gkz/family.hpp"
#include "gkz/lattice.hpp"
#include "gkz/presentation.hpp"
#include "gkz/resonance.hpp"
#include "gkz/toric.hpp"

namespace gkz {

Json to_json(const Rational& q) { return to_string(q); }
Json to_json(const Integer& z) { return to_string(z); }

Json to_json(std::span<const Rational> v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(std::span<const Integer> v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(const Face& f) {
  return {{"columns", f.columns}, {"certificate", to_json(f.certificate)}, {"dim", f.dim}};
}

Json to_json(const Exponent& e) { return Json(std::vector<int32_t>(e.begin(), e.end())); }

Json to_json(const Polynomial& p) {
  Json terms = Json::array();
  for (const auto& t : p.terms()) terms.push_back({{"exponent", to_json(t.exp)}, {"coefficient", to_json(t.coef)}});
  return {{"text", p.to_string()}, {"terms", terms}};
}

namespace {

template <typename F>
Json guarded(F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    return {{"error", std::string(error_code_name(e.code()))}, {"message", e.what()}};
  }
}

}  // namespace

Json run_report(const IntMatrix& a, std::span<const Rational> beta, const ReportOptions& options) {
  if (beta.size() != a.rows())
    throw Error(ErrorCode::InvalidArgument, "parameter has length " + std::to_string(beta.size()) +
                                                 ", matrix has " + std::to_string(a.rows()) + " rows");
  const TermOrder order = options.order.value_or(TermOrder::degrevlex(a.cols()));
  Json r;
  r["schema_version"] = kSchemaVersion;
  r["input"] = {{"matrix", a.to_string()}, {"beta", to_json(beta)}};

  const FaceLattice faces = face_lattice(a);
  auto h = euler_decomposition(a);
  Json flags{{"pointed", faces.pointed},
             {"homogeneous", h.has_value()},
             {"spans_lattice", a.spans_lattice()}};
  flags["saturated"] = guarded([&]() -> Json { return is_saturated(a); });
  r["flags"] = flags;

  r["elementary_divisors"] =
      guarded([&]() -> Json { return to_json(smith_decompose(a).elementary_divisors); });

  Json face_list = Json::array();
  for (const auto& f : faces.faces) face_list.push_back(to_json(f));
  r["faces"] = face_list;

  ToricIdeal ideal = toric_ideal(a, order);
  Json gens = Json::array();
  for (const auto& g : ideal.generators) gens.push_back(to_json(g));
  r["toric_ideal"] = {{"order", order.name()}, {"generators", gens}};

  std::optional<ResonanceSet> resonance;
  r["quasi_degrees"] = guarded([&]() -> Json {
    resonance = resonance_components(a, options.filtration_bound);
    Json out = Json::array();
    for (const auto& c : resonance->components)
      out.push_back({{"j", c.j}, {"offset", to_json(c.offset)}, {"face_columns", c.face.columns}});
    return out;
  });

  r["sres"] = guarded([&]() -> Json {
    if (!resonance) throw Error(ErrorCode::NotPointed, "resonance components unavailable");
    auto w = sres_witness(*resonance, beta);
    if (!w) return {{"member", false}};
    return {{"member", true},
            {"witness",
             {{"j", w->j}, {"offset", to_json(w->offset)}, {"face_columns", w->face}, {"m", to_json(w->m)}}}};
  });

  r["dsres"] = guarded([&]() -> Json {
    auto w = dsres_witness(a, faces, beta);
    if (!w) return {{"member", false}};
    return {{"member", true},
            {"witness", {{"face_columns", w->face}, {"cone_point", to_json(w->cone_point)}}}};
  });

  r["delta"] = guarded([&]() -> Json {
    if (!resonance) throw Error(ErrorCode::NotPointed, "resonance components unavailable");
    return to_json(delta_A(*resonance));
  });

  r["dual_parameter"] =
      guarded([&]() -> Json { return to_json(dual_parameter(a, beta, options.dual_radius)); });

  GKZPresentation p = gkz_presentation(a, beta, order);
  Json boxes = Json::array(), eulers = Json::array();
  for (const auto& b : p.boxes) boxes.push_back(b.to_string());
  for (const auto& e : p.eulers) eulers.push_back(e.to_string());
  r["presentation"] = {{"boxes", boxes}, {"eulers", eulers}};

  if (h)
    r["monodromic"] = {{"h", to_json(*h)}, {"scalar", to_json(euler_scalar(*h, beta))}};
  else
    r["monodromic"] = nullptr;

  if (options.family) {
    r["family"] = guarded([&]() -> Json {
      FamilyData f = factor_B(*options.family);
      Json out{{"B", f.B.to_string()}, {"C", f.C.to_string()}, {"A", f.A.to_string()},
               {"elementary_divisors", to_json(f.e)}};
      for (IndexKind kind : {IndexKind::I, IndexKind::IPrime}) {
        out[std::string("index_set_") + (kind == IndexKind::I ? "I" : "I_prime")] = guarded([&]() -> Json {
          Json members = Json::array();
          for (const auto& m : index_sets(f.A, f.e, kind).members) members.push_back(to_json(m));
          return members;
        });
      }
      return out;
    });
  }
  return r;
}

namespace {

void write_text(std::ostringstream& os, const Json& j, int indent) {
  const std::string pad(static_cast<size_t>(indent) * 2, ' ');
  auto scalar = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  auto flat = [](const Json& v) {
    if (!v.is_array()) return false;
    for (const auto& x : v)
      if (x.is_structured()) return false;
    return true;
  };
  auto flat_text = [&](const Json& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + scalar(v[i]);
    return s + ")";
  };
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_structured() && !flat(v)) {
        os << pad << k << ":\n";
        write_text(os, v, indent + 1);
      } else {
        os << pad << k << ": " << (flat(v) ? flat_text(v) : scalar(v)) << '\n';
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_structured() && !flat(v)) {
        os << pad << "-\n";
        write_text(os, v, indent + 1);
      } else {
        os << pad << "- " << (flat(v) ? flat_text(v) : scalar(v)) << '\n';
      }
    }
  } else {
    os << pad << scalar(j) << '\n';
  }
}

}  // namespace

std::string json_to_text(const Json& j) {
  std::ostringstream os;
  write_text(os, j, 0);
  return os.str();
}

}  // namespace gkz
