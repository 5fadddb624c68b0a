#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gkz/diagram.hpp"
#include "gkz/errors.hpp"
#include "gkz/family.hpp"
#include "gkz/lattice.hpp"
#include "gkz/presentation.hpp"
#include "gkz/report.hpp"
#include "gkz/resonance.hpp"
#include "gkz/toric.hpp"

namespace {

using gkz::ErrorCode;
using gkz::IntMatrix;
using gkz::Json;
using gkz::to_json;

struct Globals {
  std::string format = "json";
  std::string order;
  std::optional<long> bound;
  std::string matrix_file;
  std::string matrix_text;
  std::string beta_text;
};

IntMatrix load_matrix(const Globals& g) {
  if (!g.matrix_text.empty()) return IntMatrix::parse(g.matrix_text);
  if (g.matrix_file.empty()) throw gkz::Error(ErrorCode::ParseError, "no matrix given (use -A or --matrix)");
  std::ifstream in(g.matrix_file);
  if (!in) throw gkz::Error(ErrorCode::ParseError, "cannot read " + g.matrix_file);
  std::stringstream ss;
  ss << in.rdbuf();
  return IntMatrix::parse(ss.str());
}

gkz::RationalVector load_beta(const Globals& g, size_t d) {
  if (g.beta_text.empty()) return gkz::RationalVector(d);
  auto beta = gkz::parse_rational_vector(g.beta_text);
  if (beta.size() != d)
    throw gkz::Error(ErrorCode::ParseError, "--beta has " + std::to_string(beta.size()) +
                                                " entries, matrix has " + std::to_string(d) + " rows");
  return beta;
}

gkz::TermOrder load_order(const Globals& g, size_t nvars) {
  return g.order.empty() ? gkz::TermOrder::degrevlex(nvars) : gkz::TermOrder::parse(g.order, nvars);
}

void emit(const Globals& g, const Json& j) {
  if (g.format == "text")
    std::cout << gkz::json_to_text(j);
  else
    std::cout << j.dump(2) << '\n';
}

Json matrix_json(const IntMatrix& m) { return m.to_string(); }

Json weyl_list(const std::vector<gkz::WeylElement>& v) {
  Json out = Json::array();
  for (const auto& e : v) out.push_back(e.to_string());
  return out;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep))
    if (item.find_first_not_of(" \t") != std::string::npos) out.push_back(item);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact analysis of GKZ hypergeometric data"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--format", g.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--order", g.order, "degrevlex | deglex | lex, optionally :i,j,k");
  app.add_option("--bound", g.bound, "certificate degree / filtration search cap");
  app.add_option("-A", g.matrix_file, "matrix file, one row per line");
  app.add_option("--matrix", g.matrix_text, "inline matrix, rows separated by ';'");
  app.add_option("--beta", g.beta_text, "comma separated rationals");

  std::function<void()> action;
  int status = 0;
  auto sub = [&](const char* name, const char* help) { return app.add_subcommand(name, help); };

  std::string family_text;
  auto* analyze = sub("analyze", "full report");
  analyze->add_option("--family", family_text, "matrix B for the family index sets");
  analyze->callback([&] {
    action = [&] {
      IntMatrix a = load_matrix(g);
      gkz::ReportOptions opt;
      opt.order = load_order(g, a.cols());
      if (g.bound) opt.filtration_bound = *g.bound;
      if (!family_text.empty()) opt.family = IntMatrix::parse(family_text);
      emit(g, gkz::run_report(a, load_beta(g, a.rows()), opt));
    };
  });

  sub("smith", "Smith decomposition B = C D1 D2 M")->callback([&] {
    action = [&] {
      auto s = gkz::smith_decompose(load_matrix(g));
      emit(g, {{"C", matrix_json(s.C)}, {"D1", matrix_json(s.D1)}, {"D2", matrix_json(s.D2)},
               {"M", matrix_json(s.M)}, {"elementary_divisors", to_json(s.elementary_divisors)},
               {"A", matrix_json(s.lattice_matrix())}});
    };
  });

  sub("homogenize", "matrix with a row of ones and a new first column")->callback([&] {
    action = [&] { emit(g, {{"matrix", matrix_json(gkz::homogenize(load_matrix(g)))}}); };
  });

  sub("faces", "face lattice with certificates")->callback([&] {
    action = [&] {
      IntMatrix a = load_matrix(g);
      auto fl = gkz::face_lattice(a);
      Json faces = Json::array(), proper = Json::array();
      for (const auto& f : fl.faces) faces.push_back(to_json(f));
      for (const auto& f : fl.proper_faces) proper.push_back(f.columns);
      Json out{{"faces", faces}, {"proper_faces", proper}, {"pointed", fl.pointed}};
      if (a.rank() == a.rows() && a.spans_lattice()) {
        Json sf = Json::array();
        for (const auto& s : gkz::support_functions(a))
          sf.push_back({{"facet", s.facet.columns}, {"functional", to_json(s.functional)}});
        out["support_functions"] = sf;
      }
      emit(g, out);
    };
  });

  std::string point_text;
  auto* member = sub("member", "semigroup and cone membership of a lattice point");
  member->add_option("--point", point_text, "comma separated integers")->required();
  member->callback([&] {
    action = [&] {
      IntMatrix a = load_matrix(g);
      auto b = gkz::parse_int_vector(point_text);
      if (b.size() != a.rows()) throw gkz::Error(ErrorCode::ParseError, "point length mismatch");
      auto w = gkz::semigroup_witness(a, b);
      Json out{{"point", to_json(b)}, {"semigroup", w.has_value()},
               {"cone", gkz::saturation_contains(a, b)}};
      if (w) out["witness"] = to_json(*w);
      emit(g, out);
    };
  });

  sub("saturated", "saturation test")->callback([&] {
    action = [&] {
      auto gap = gkz::saturation_gap(load_matrix(g));
      Json out{{"saturated", !gap}};
      if (gap) out["gap"] = to_json(*gap);
      emit(g, out);
    };
  });

  sub("toric-ideal", "reduced Groebner basis of the toric ideal")->callback([&] {
    action = [&] {
      IntMatrix a = load_matrix(g);
      auto ideal = gkz::toric_ideal(a, load_order(g, a.cols()));
      Json gens = Json::array();
      for (const auto& p : ideal.generators) gens.push_back(to_json(p));
      emit(g, {{"order", ideal.order.name()}, {"generators", gens}});
    };
  });

  size_t column = 0;
  auto* qdeg = sub("qdeg", "quasi-degree components of S_A/<d_j>");
  qdeg->add_option("-j,--column", column, "column index (0-based)")->required();
  qdeg->callback([&] {
    action = [&] {
      auto q = gkz::quasi_degrees(load_matrix(g), column, g.bound.value_or(gkz::kDefaultFiltrationBound));
      Json comps = Json::array();
      for (const auto& c : q.components)
        comps.push_back({{"offset", to_json(c.offset)}, {"face_columns", c.face.columns}});
      emit(g, {{"j", q.j}, {"components", comps}});
    };
  });

  sub("sres", "strong resonance test for --beta")->callback([&] {
    action = [&] {
      IntMatrix a = load_matrix(g);
      auto set = gkz::resonance_components(a, g.bound.value_or(gkz::kDefaultFiltrationBound));
      auto w = gkz::sres_witness(set, load_beta(g, a.rows()));
      Json out{{"member", w.has_value()}};
      if (w) out["witness"] = {{"j", w->j}, {"offset", to_json(w->offset)}, {"face_columns", w->face}, {"m", to_json(w->m)}};
      emit(g, out);
    };
  });

  sub("dsres", "dual obstruction test for --beta")->callback([&] {
    action = [&] {
      IntMatrix a = load_matrix(g);
      auto w = gkz::dsres_witness(a, gkz::face_lattice(a), load_beta(g, a.rows()));
      Json out{{"member", w.has_value()}};
      if (w) out["witness"] = {{"face_columns", w->face}, {"cone_point", to_json(w->cone_point)}};
      emit(g, out);
    };
  });

  sub("delta", "certified translate of the cone avoiding sRes")->callback([&] {
    action = [&] {
      auto set = gkz::resonance_components(load_matrix(g));
      auto d = gkz::delta_A(set);
      emit(g, {{"delta", to_json(d)}, {"certified", gkz::delta_certifies(set, d)}});
    };
  });

  sub("nbeta", "bound n with (b0, beta) non-resonant for b0 >= n")->callback([&] {
    action = [&] {
      IntMatrix a = load_matrix(g);
      emit(g, {{"n_beta", to_json(gkz::n_beta(a, load_beta(g, a.rows())))}});
    };
  });

  sub("dual-param", "dual parameter congruent to -beta")->callback([&] {
    action = [&] {
      IntMatrix a = load_matrix(g);
      auto b = gkz::dual_parameter(a, load_beta(g, a.rows()), g.bound.value_or(gkz::kDefaultDualSearchRadius));
      emit(g, {{"dual_parameter", to_json(b)}});
    };
  });

  sub("present", "GKZ presentation")->callback([&] {
    action = [&] {
      IntMatrix a = load_matrix(g);
      auto p = gkz::gkz_presentation(a, load_beta(g, a.rows()), load_order(g, a.cols()));
      emit(g, {{"boxes", weyl_list(p.boxes)}, {"eulers", weyl_list(p.eulers)}});
    };
  });

  sub("restrict", "generators after restricting to lambda_0 = 1")->callback([&] {
    action = [&] {
      IntMatrix a = load_matrix(g);
      emit(g, {{"generators", weyl_list(gkz::restrict_presentation(a, load_beta(g, a.rows())))}});
    };
  });

  std::string target_text, gens_text;
  auto* verify = sub("verify-member", "bounded left-ideal membership certificate");
  verify->add_option("--target", target_text, "operator, e.g. 'd0*l0 - 1'")->required();
  verify->add_option("--generators", gens_text, "';' separated operators (default: presentation of -A/--matrix)");
  verify->callback([&] {
    action = [&] {
      std::vector<gkz::WeylElement> gens;
      if (!gens_text.empty()) {
        size_t n = 0;
        for (const auto& s : split(gens_text, ';')) n = std::max(n, gkz::parse_weyl(s).nvars());
        n = std::max(n, gkz::parse_weyl(target_text).nvars());
        for (const auto& s : split(gens_text, ';')) gens.push_back(gkz::parse_weyl(s, n));
      } else {
        IntMatrix a = load_matrix(g);
        gens = gkz::gkz_presentation(a, load_beta(g, a.rows())).generators();
      }
      size_t n = gens.empty() ? 0 : gens.front().nvars();
      auto target = gkz::parse_weyl(target_text, n);
      if (target.nvars() != n)
        throw gkz::Error(ErrorCode::VariableMismatch, "target uses more variables than the generators");
      auto bound = static_cast<size_t>(g.bound.value_or(4));
      auto cert = gkz::ideal_member_bounded(target, gens, bound);
      Json out{{"target", target.to_string()}, {"generators", weyl_list(gens)}, {"bound", bound},
               {"certificate_found", cert.has_value()}};
      if (cert) out["cofactors"] = weyl_list(cert->cofactors);
      emit(g, out);
      if (!cert) status = 4;  // nothing within the bound
    };
  });

  sub("factor", "factorization B = C D1 A")->callback([&] {
    action = [&] {
      auto f = gkz::factor_B(load_matrix(g));
      emit(g, {{"B", matrix_json(f.B)}, {"C", matrix_json(f.C)}, {"D1", matrix_json(f.D1)},
               {"A", matrix_json(f.A)}, {"elementary_divisors", to_json(f.e)}});
    };
  });

  std::string kind_text = "I", divisors_text;
  auto* idx = sub("index-sets", "index sets I or I' for the matrix B");
  idx->add_option("--kind", kind_text, "I or I'")->check(CLI::IsMember({"I", "I'", "Iprime"}));
  idx->add_option("--divisors", divisors_text, "explicit divisors e; the matrix is then A itself");
  idx->callback([&] {
    action = [&] {
      IntMatrix m = load_matrix(g);
      auto kind = kind_text == "I" ? gkz::IndexKind::I : gkz::IndexKind::IPrime;
      auto set = divisors_text.empty() ? gkz::index_sets(m, kind)
                                       : gkz::index_sets(m, gkz::parse_int_vector(divisors_text), kind);
      Json members = Json::array(), classes = Json::array();
      for (const auto& x : set.members) members.push_back(to_json(x));
      for (const auto& x : set.classes) classes.push_back(to_json(x));
      emit(g, {{"kind", gkz::index_kind_name(kind)}, {"elementary_divisors", to_json(set.e)},
               {"classes", classes}, {"members", members}, {"search_base", to_json(set.base)}});
    };
  });

  std::string m_text;
  long s_value = 0;
  auto* psi = sub("psi", "image of monomial data under psi");
  psi->add_option("--m", m_text, "comma separated exponents m_1..m_n");
  psi->add_option("--s", s_value, "power of d0");
  psi->callback([&] {
    action = [&] {
      Json out;
      if (!m_text.empty()) {
        auto img = gkz::psi_image(gkz::parse_int_vector(m_text), gkz::Integer(s_value));
        out["image"] = {{"text", img.to_string()}, {"exponents", to_json(img.exponents)},
                        {"coefficient", to_json(img.coefficient)}};
      }
      if (!g.matrix_text.empty() || !g.matrix_file.empty())
        out["kernel_sections"] = weyl_list(gkz::psi_kernel_sections(load_matrix(g)));
      if (out.is_null()) throw gkz::Error(ErrorCode::ParseError, "give --m and/or a matrix");
      emit(g, out);
    };
  });

  std::string box_text, layers_text = "semigroup,saturation-gap,cone", diagram_format = "ascii";
  auto* diagram = sub("diagram", "lattice diagram for d <= 2");
  diagram->add_option("--box", box_text, "lo..hi corners: 'lx,ly,hx,hy' (or 'lx,hx' for d = 1)")->required();
  diagram->add_option("--layers", layers_text, "comma separated layers");
  diagram->add_option("--style", diagram_format, "ascii or svg")->check(CLI::IsMember({"ascii", "svg"}));
  diagram->callback([&] {
    action = [&] {
      IntMatrix a = load_matrix(g);
      auto box = gkz::parse_int_vector(box_text);
      if (box.size() != 2 * a.rows()) throw gkz::Error(ErrorCode::ParseError, "--box needs 2d integers");
      gkz::DiagramSpec spec;
      spec.lo.assign(box.begin(), box.begin() + static_cast<long>(a.rows()));
      spec.hi.assign(box.begin() + static_cast<long>(a.rows()), box.end());
      std::string layers = layers_text;
      // qdeg(j) contains no comma, so a plain split is enough.
      for (const auto& name : split(layers, ',')) spec.layers.push_back(gkz::Layer::parse(name));
      spec.format = diagram_format == "svg" ? gkz::DiagramFormat::Svg : gkz::DiagramFormat::Ascii;
      std::cout << gkz::render_diagram(a, spec);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return e.get_exit_code() == 0 ? rc : 2;
  }
  try {
    action();
  } catch (const gkz::Error& e) {
    std::cerr << "gkz: " << gkz::error_code_name(e.code()) << ": " << e.what() << '\n';
    return gkz::exit_status(e.code());
  }
  return status;
}
