#include "cli.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fmell/curve_category.hpp"
#include "fmell/errors.hpp"
#include "fmell/geometry_file.hpp"
#include "fmell/lattice.hpp"
#include "fmell/literal.hpp"
#include "fmell/surface_numerology.hpp"

namespace fmell::cli {

namespace {

using json = nlohmann::ordered_json;

// Integers beyond 64 bits are emitted as decimal strings.
json to_json(const Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() &&
      x <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(x);
  }
  return to_string(x);
}

json to_json(const VectorZ& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    out.push_back(to_json(v(i)));
  }
  return out;
}

json to_json(const FMMatrix& m) {
  return json::array({to_json(m.c()), to_json(m.a()), to_json(m.d()), to_json(m.b())});
}

json to_json(const ExtProfile& p) {
  json out = json::object();
  for (const auto& [i, dim] : p) {
    out[std::to_string(i)] = to_json(dim);
  }
  return out;
}

// Wraps parse errors with the option they came from.
template <typename F>
auto parse_option(const std::string& option, const std::string& text, F&& parse) {
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), e.column(), e.detail(), option);
  }
}

Integer integer_option(const std::string& option, const std::string& text) {
  return parse_option(option, text, [](const std::string& s) { return parse_integer(s); });
}

struct Emitter {
  bool json_mode;
  std::ostream& out;

  void record(const json& j) const { out << (json_mode ? j.dump() : j.dump(2)) << "\n"; }

  void scalar(const std::string& text, const char* key, const json& value) const {
    if (json_mode) {
      out << json{{key, value}}.dump() << "\n";
    } else {
      out << text << "\n";
    }
  }
};

SheafFlags parse_flags(const std::string& text) {
  SheafFlags flags;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string::npos) {
      end = text.size();
    }
    const std::string token = text.substr(start, end - start);
    if (token == "torsion_free") {
      flags.torsion_free = true;
    } else if (token == "generically_stable") {
      flags.generically_stable = true;
    } else if (token == "torsion") {
      flags.torsion = true;
    } else if (!token.empty()) {
      throw ParseError(1, start + 1,
                       "unknown flag '" + token + "' (expected torsion_free, generically_stable, torsion)",
                       "--flags");
    }
    start = end + 1;
  }
  return flags;
}

SurfaceClass class_from_options(const SurfaceGeometry& g, const std::string& r,
                                const std::string& c1, const std::string& c2) {
  SurfaceClass x{integer_option("--r", r),
                 parse_option("--c1", c1, [](const std::string& s) { return parse_vector(s); }),
                 integer_option("--c2", c2)};
  check_class(g, x);
  return x;
}

json report_json(const ModuliReport& rep, const SurfaceGeometry& g) {
  json j;
  j["r"] = to_json(rep.r);
  j["fibre_degree"] = to_json(rep.fibre_degree);
  j["a"] = to_json(rep.a);
  j["b"] = to_json(rep.b);
  j["t"] = to_json(rep.t);
  j["dim"] = rep.dim ? to_json(*rep.dim) : json(nullptr);
  j["is_empty"] = rep.is_empty;
  j["iso_extends"] = rep.iso_extends;
  j["target_class"] = {{"r", to_json(rep.target_rank)}, {"c1", 0}, {"c2", to_json(rep.target_c2)}};
  j["transform_matrix"] = to_json(rep.transform);
  j["jx_descriptor"] = {{"a", to_json(rep.jx.a)},
                        {"b", to_json(rep.jx.b)},
                        {"lambda_y", to_json(rep.jx.lambda_y)}};
  j["lambda_x"] = to_json(g.lambda());
  j["assumes_pic0_dim_equals_q"] = rep.assumes_equal_irregularity;
  return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Chern-class arithmetic for relative Fourier-Mukai transforms on "
               "elliptic surfaces",
               "fmell"};
  app.require_subcommand(1);
  bool json_flag = false;
  bool text_flag = false;
  auto* json_opt = app.add_flag("--json", json_flag, "Single-line JSON document on stdout");
  auto* text_opt = app.add_flag("--text", text_flag, "Human-readable output (default)");
  json_opt->excludes(text_opt);

  std::function<void(const Emitter&)> action;
  auto sub = [&](CLI::App* parent, const std::string& name, const std::string& desc) {
    CLI::App* s = parent->add_subcommand(name, desc);
    s->fallthrough();
    return s;
  };

  // Option storage; each subcommand reads only its own.
  std::string r, d, a, b, lambda, n, t, chi_o, matrix, object, x, y, c1, c2, geometry, counts,
      flags, cls;

  // find-ab
  CLI::App* find_ab_cmd = sub(&app, "find-ab", "Unique (a, b) with br - ad = 1 and 0 < a < r");
  find_ab_cmd->add_option("--r", r, "Rank")->required();
  find_ab_cmd->add_option("--d", d, "Fibre degree")->required();
  find_ab_cmd->callback([&] {
    action = [&](const Emitter& e) {
      auto [ra, rb] = find_ab(integer_option("--r", r), integer_option("--d", d));
      e.record(json{{"a", to_json(ra)}, {"b", to_json(rb)}});
    };
  });

  // psi-matrix
  CLI::App* psi_cmd = sub(&app, "psi-matrix", "Action (-b a; d -c) of the inverse transform");
  psi_cmd->add_option("--matrix", matrix, "c,a,d,b")->required();
  psi_cmd->callback([&] {
    action = [&](const Emitter& e) {
      const FMMatrix m = psi_matrix(
          parse_option("--matrix", matrix, [](const std::string& s) { return parse_matrix(s); }));
      e.scalar(render_matrix(m), "matrix", to_json(m));
    };
  });

  // normalize-twist
  CLI::App* norm_cmd = sub(&app, "normalize-twist", "Canonical twist representative, 0 <= c < lambda*a");
  norm_cmd->add_option("--matrix", matrix, "c,a,d,b")->required();
  norm_cmd->add_option("--lambda", lambda, "Positive integer dividing d")->required();
  norm_cmd->callback([&] {
    action = [&](const Emitter& e) {
      const Integer l = integer_option("--lambda", lambda);
      const FMMatrix m = normalize_twist(
          parse_option("--matrix", matrix, [&](const std::string& s) { return parse_matrix(s, l); }),
          l);
      e.scalar(render_matrix(m), "matrix", to_json(m));
    };
  });

  // matrix-complete
  CLI::App* complete_cmd = sub(&app, "matrix-complete", "Normalized (c a; d b) with lambda | d");
  complete_cmd->add_option("--a", a)->required();
  complete_cmd->add_option("--b", b)->required();
  complete_cmd->add_option("--lambda", lambda)->required();
  complete_cmd->callback([&] {
    action = [&](const Emitter& e) {
      const FMMatrix m = complete_matrix(integer_option("--a", a), integer_option("--b", b),
                                         integer_option("--lambda", lambda));
      e.scalar(render_matrix(m), "matrix", to_json(m));
    };
  });

  // euler
  CLI::App* euler_cmd = sub(&app, "euler", "Riemann-Roch pairing chi(x, y) on a surface");
  euler_cmd->add_option("--geometry", geometry, "preset:<name> or geometry file")->required();
  euler_cmd->add_option("--x", x, "Class r;c1;c2")->required();
  euler_cmd->add_option("--y", y, "Class r;c1;c2")->required();
  euler_cmd->callback([&] {
    action = [&](const Emitter& e) {
      const SurfaceGeometry g = load_geometry(geometry);
      auto parse_cls = [](const std::string& s) { return parse_surface_class(s); };
      const Integer chi = euler_surface(g, parse_option("--x", x, parse_cls),
                                        parse_option("--y", y, parse_cls));
      e.scalar(to_string(chi), "chi", to_json(chi));
    };
  });

  // geometry
  CLI::App* geom_cmd = sub(&app, "geometry", "Validate a geometry and show derived data");
  geom_cmd->add_option("--geometry", geometry, "preset:<name> or geometry file")->required();
  geom_cmd->callback([&] {
    action = [&](const Emitter& e) {
      const SurfaceGeometry g = load_geometry(geometry);
      json gram = json::array();
      for (Eigen::Index i = 0; i < g.rank(); ++i) {
        gram.push_back(to_json(VectorZ(g.gram().row(i).transpose())));
      }
      e.record(json{{"rank", g.rank()},
                    {"gram", gram},
                    {"f", to_json(g.fibre())},
                    {"K", to_json(g.canonical())},
                    {"chiO", to_json(g.chi_o())},
                    {"q", to_json(g.irregularity())},
                    {"lambda_x", to_json(g.lambda())}});
    };
  });

  // curve ...
  CLI::App* curve_cmd = sub(&app, "curve", "Objects on an elliptic curve");
  curve_cmd->require_subcommand(1);

  CLI::App* transform_cmd = sub(curve_cmd, "transform", "Image of an object under the transform");
  transform_cmd->add_option("--matrix", matrix, "c,a,d,b")->required();
  transform_cmd->add_option("--object", object, "Object literal")->required();
  transform_cmd->callback([&] {
    action = [&](const Emitter& e) {
      const FMMatrix m =
          parse_option("--matrix", matrix, [](const std::string& s) { return parse_matrix(s); });
      const GradedObject img = fm_transform(
          m, parse_option("--object", object, [](const std::string& s) { return parse_object(s); }));
      e.scalar(render_object(img), "object", render_object(img));
    };
  });

  CLI::App* hom_cmd = sub(curve_cmd, "hom", "Graded Hom dimensions Hom(A, B[i])");
  hom_cmd->add_option("--a", a, "Object literal")->required();
  hom_cmd->add_option("--b", b, "Object literal")->required();
  hom_cmd->callback([&] {
    action = [&](const Emitter& e) {
      auto parse_obj = [](const std::string& s) { return parse_object(s); };
      const ExtProfile p =
          hom_ext_objects(parse_option("--a", a, parse_obj), parse_option("--b", b, parse_obj));
      e.scalar(render_profile(p), "profile", to_json(p));
    };
  });

  CLI::App* wit_cmd = sub(curve_cmd, "wit", "WIT index of a stable atom");
  wit_cmd->add_option("--matrix", matrix, "c,a,d,b")->required();
  wit_cmd->add_option("--object", object, "Atom literal")->required();
  wit_cmd->callback([&] {
    action = [&](const Emitter& e) {
      const FMMatrix m =
          parse_option("--matrix", matrix, [](const std::string& s) { return parse_matrix(s); });
      const StableAtom atom =
          parse_option("--object", object, [](const std::string& s) { return parse_atom(s); });
      const int index = wit_index(m, atom);
      e.scalar(std::to_string(index), "index", index);
    };
  });

  CLI::App* decompose_cmd = sub(curve_cmd, "decompose", "WIT0 subsheaf and WIT1 quotient of a sheaf");
  decompose_cmd->add_option("--matrix", matrix, "c,a,d,b")->required();
  decompose_cmd->add_option("--object", object, "Object literal in degree 0")->required();
  decompose_cmd->callback([&] {
    action = [&](const Emitter& e) {
      const FMMatrix m =
          parse_option("--matrix", matrix, [](const std::string& s) { return parse_matrix(s); });
      const WitDecomposition w = wit_decompose(
          m, parse_option("--object", object, [](const std::string& s) { return parse_object(s); }));
      e.record(json{{"wit0", render_object(w.wit0)}, {"wit1", render_object(w.wit1)}});
    };
  });

  CLI::App* parseval_cmd = sub(curve_cmd, "parseval", "Check Ext^i(A,B) = Ext^{i+wa-wb}(A^,B^)");
  parseval_cmd->add_option("--matrix", matrix, "c,a,d,b")->required();
  parseval_cmd->add_option("--a", a, "Atom literal")->required();
  parseval_cmd->add_option("--b", b, "Atom literal")->required();
  parseval_cmd->callback([&] {
    action = [&](const Emitter& e) {
      const FMMatrix m =
          parse_option("--matrix", matrix, [](const std::string& s) { return parse_matrix(s); });
      auto parse_at = [](const std::string& s) { return parse_atom(s); };
      const bool ok = parseval_check(m, parse_option("--a", a, parse_at),
                                     parse_option("--b", b, parse_at));
      e.scalar(ok ? "true" : "false", "parseval", ok);
    };
  });

  // moduli
  CLI::App* moduli_cmd = sub(&app, "moduli", "Moduli correspondence for the class (r, c1, c2)");
  moduli_cmd->add_option("--geometry", geometry, "preset:<name> or geometry file")->required();
  moduli_cmd->add_option("--r", r)->required();
  moduli_cmd->add_option("--c1", c1, "Comma-separated lattice vector")->required();
  moduli_cmd->add_option("--c2", c2)->required();
  moduli_cmd->callback([&] {
    action = [&](const Emitter& e) {
      const SurfaceGeometry g = load_geometry(geometry);
      const ModuliProblem p(g, class_from_options(g, r, c1, c2));
      e.record(report_json(moduli_correspondence(p), g));
    };
  });

  // wit-surface
  CLI::App* wits_cmd = sub(&app, "wit-surface", "WIT verdict for a surface class under Psi");
  wits_cmd->add_option("--geometry", geometry, "preset:<name> or geometry file")->required();
  wits_cmd->add_option("--matrix", matrix, "c,a,d,b")->required();
  wits_cmd->add_option("--class", cls, "Class r;c1;c2")->required();
  wits_cmd->add_option("--flags", flags, "torsion_free,generically_stable,torsion");
  wits_cmd->callback([&] {
    action = [&](const Emitter& e) {
      const SurfaceGeometry g = load_geometry(geometry);
      const FMMatrix m = parse_option(
          "--matrix", matrix, [&](const std::string& s) { return parse_matrix(s, g.lambda()); });
      const SurfaceClass sc =
          parse_option("--class", cls, [](const std::string& s) { return parse_surface_class(s); });
      const WitVerdict v = classify_wit_surface(g, m, sc, parse_flags(flags));
      e.record(json{{"verdict", to_string(v.kind)}, {"reason", v.reason}});
    };
  });

  // elemmod
  CLI::App* elem_cmd = sub(&app, "elemmod", "Elementary-modification class and twist identity");
  elem_cmd->add_option("--geometry", geometry, "preset:<name> or geometry file")->required();
  elem_cmd->add_option("--r", r)->required();
  elem_cmd->add_option("--c1", c1, "Comma-separated lattice vector")->required();
  elem_cmd->add_option("--c2", c2)->required();
  elem_cmd->add_option("--n", n, "Positive integer")->required();
  elem_cmd->callback([&] {
    action = [&](const Emitter& e) {
      const SurfaceGeometry g = load_geometry(geometry);
      const ModuliProblem p(g, class_from_options(g, r, c1, c2));
      const ElementaryModification em = elementary_modification(p, integer_option("--n", n));
      const SurfaceClass& mc = em.twisted_problem.cls();
      e.record(json{{"r", to_json(mc.r)},
                    {"c1", to_json(mc.c1)},
                    {"c2", to_json(mc.c2)},
                    {"consistency", em.consistency}});
    };
  });

  // ideal-wit0
  CLI::App* ideal_cmd = sub(&app, "ideal-wit0", "WIT0 test for L (x) I_Z from points per fibre");
  ideal_cmd->add_option("--counts", counts, "Points of Z on each fibre, comma-separated")->required();
  ideal_cmd->add_option("--r", r)->required();
  ideal_cmd->add_option("--a", a)->required();
  ideal_cmd->callback([&] {
    action = [&](const Emitter& e) {
      const VectorZ v =
          parse_option("--counts", counts, [](const std::string& s) { return parse_vector(s); });
      std::vector<Integer> list(v.data(), v.data() + v.size());
      const IdealWit0Check c =
          ideal_wit0_check(list, integer_option("--r", r), integer_option("--a", a));
      e.record(json{{"verdict", c.wit0_if_distinct ? "WIT0_certain_if_distinct" : "unknown"},
                    {"max_count", to_json(c.max_count)},
                    {"t", to_json(c.t)},
                    {"whole_hilbert_scheme", c.whole_hilbert_scheme}});
    };
  });

  // example
  CLI::App* example_cmd = sub(&app, "example", "Moduli problem realizing (a, b, t) with r > at");
  example_cmd->add_option("--a", a)->required();
  example_cmd->add_option("--b", b)->required();
  example_cmd->add_option("--t", t)->required();
  auto* lambda_o = example_cmd->add_option("--lambda", lambda, "With --chiO: synthetic geometry");
  auto* chi_o_o = example_cmd->add_option("--chiO", chi_o);
  auto* geom_o = example_cmd->add_option("--geometry", geometry, "preset:<name> or geometry file");
  lambda_o->needs(chi_o_o);
  chi_o_o->needs(lambda_o);
  geom_o->excludes(lambda_o)->excludes(chi_o_o);
  int example_status = 0;
  example_cmd->callback([&] {
    action = [&](const Emitter& e) {
      const Integer ia = integer_option("--a", a);
      const Integer ib = integer_option("--b", b);
      const Integer it = integer_option("--t", t);
      auto compute = [&]() -> ExampleResult {
        if (!geometry.empty()) {
          return generate_example(ia, ib, it, load_geometry(geometry));
        }
        if (!lambda.empty()) {
          return generate_example(ia, ib, integer_option("--lambda", lambda), it,
                                  integer_option("--chiO", chi_o));
        }
        throw CLI::RequiredError("--geometry or --lambda with --chiO");
      };
      const ExampleResult res = compute();
      if (const auto* w = std::get_if<ExampleWitness>(&res)) {
        const ModuliReport rep = moduli_correspondence(w->problem);
        e.record(json{{"status", "witness"},
                      {"r", to_json(w->r)},
                      {"d", to_json(w->d)},
                      {"c1", to_json(w->lambda_vec)},
                      {"lambda_sq", to_json(w->lambda_sq)},
                      {"k", to_json(w->k)},
                      {"report", report_json(rep, w->problem.geometry())}});
      } else {
        const auto& o = std::get<ExampleObstruction>(res);
        e.record(json{{"status", "obstruction"},
                      {"r", to_json(o.r)},
                      {"d", to_json(o.d)},
                      {"reason", o.reason}});
        example_status = 1;
      }
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  const Emitter emitter{json_flag, out};
  try {
    if (!action) {
      err << "usage error: no command\n";
      return 2;
    }
    std::ostringstream buffer;
    const Emitter buffered{emitter.json_mode, buffer};
    action(buffered);
    out << buffer.str();
    return example_status;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const CLI::Error& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace fmell::cli
