#include "semiq/cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "semiq/irreducible.hpp"
#include "semiq/json_io.hpp"
#include "semiq/oracle.hpp"
#include "semiq/quotient.hpp"

namespace semiq {
namespace cli {

namespace {

struct VerifyMismatch : error {
  explicit VerifyMismatch(const std::string& msg) : error(msg) {}
};

Json read_json(const std::string& path, std::istream& in) {
  std::string text;
  if (path.empty() || path == "-") {
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  } else {
    std::ifstream file(path);
    if (!file) throw schema_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << file.rdbuf();
    text = buf.str();
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw schema_error(std::string("JSON parse error: ") + e.what());
  }
}

Json violation_to_json(const SemigroupViolation& v) {
  Json j;
  switch (v.kind) {
    case SemigroupViolation::Kind::ZeroGap: j["kind"] = "zero-gap"; break;
    case SemigroupViolation::Kind::GapOutsideCone: j["kind"] = "gap-outside-cone"; break;
    case SemigroupViolation::Kind::NotClosed: j["kind"] = "not-closed"; break;
  }
  j["gap"] = point_to_json(v.gap);
  if (v.kind == SemigroupViolation::Kind::NotClosed) {
    j["left"] = point_to_json(v.left);
    j["right"] = point_to_json(v.right);
  }
  return j;
}

std::vector<Point> parse_point_list(const std::string& text) {
  std::vector<Point> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) out.push_back(parse_point_arg(item));
  return out;
}

struct Options {
  std::string semigroup_path;
  std::string cone_path;
  std::string order_path;
  std::string system_path;
  std::string polytope_path;
  std::string x_arg, m_arg, f_arg, window_arg, ray_elements_arg;
  std::string via = "gaps";
  std::string format = "json";
  std::string dot_path;
  std::string intersect_path;
  Int d = 0;
  Int quotient_d = 0;        // pm --quotient
  Int quotient_equal_d = 0;  // convex --quotient-equal
  Int coeff_bound = 2;
  bool count_only = false;
  bool classical = false;
  bool verify = false;
};

CSemigroup load_semigroup(const Options& opt, std::istream& in) {
  return semigroup_from_json(read_json(opt.semigroup_path, in));
}

void emit(std::ostream& out, const Json& j) { out << canonical_text(j); }

int dispatch(const std::string& cmd, const Options& opt, std::istream& in, std::ostream& out) {
  if (cmd == "validate") {
    Json j = read_json(opt.semigroup_path, in);
    if (j.contains("generators")) {
      // Generator form converts to a valid semigroup by construction.
      semigroup_from_json(j);
      emit(out, Json{{"ok", true}});
      return 0;
    }
    Cone cone = cone_from_json(j.at("cone"));
    std::vector<Point> gaps =
        j.contains("gaps") ? points_from_json(j.at("gaps")) : std::vector<Point>{};
    if (auto v = find_violation(cone, gaps)) {
      emit(out, Json{{"ok", false}, {"violation", violation_to_json(*v)}});
    } else {
      emit(out, Json{{"ok", true}});
    }
    return 0;
  }

  if (cmd == "member") {
    CSemigroup s = load_semigroup(opt, in);
    Point x = parse_point_arg(opt.x_arg);
    bool m = member(s, x);
    if (opt.verify) {
      bool brute = oracle::brute_member(minimal_generators(s), x);
      if (brute != m) throw VerifyMismatch("member: oracle disagrees with the gap representation");
    }
    emit(out, Json{{"member", m}});
    return 0;
  }

  if (cmd == "gaps") {
    emit(out, points_to_json(load_semigroup(opt, in).gaps));
    return 0;
  }
  if (cmd == "generators") {
    emit(out, points_to_json(minimal_generators(load_semigroup(opt, in))));
    return 0;
  }
  if (cmd == "frobenius") {
    auto fb = frobenius(load_semigroup(opt, in));
    emit(out, fb ? point_to_json(*fb) : Json(nullptr));
    return 0;
  }
  if (cmd == "pf") {
    emit(out, points_to_json(pseudo_frobenius(load_semigroup(opt, in))));
    return 0;
  }
  if (cmd == "apery") {
    CSemigroup s = load_semigroup(opt, in);
    Point m = parse_point_arg(opt.m_arg);
    if (opt.classical) {
      if (opt.window_arg.empty()) {
        throw precondition_error("apery --classical needs --window");
      }
      emit(out, points_to_json(apery_classical(s, m, parse_point_arg(opt.window_arg))));
    } else {
      emit(out, points_to_json(apery(s, m)));
    }
    return 0;
  }
  if (cmd == "fg") {
    emit(out, points_to_json(fundamental_gaps(load_semigroup(opt, in))));
    return 0;
  }
  if (cmd == "genus") {
    emit(out, Json(genus(load_semigroup(opt, in))));
    return 0;
  }

  if (cmd == "quotient") {
    CSemigroup s = load_semigroup(opt, in);
    CSemigroup result = quotient_gaps(s, opt.d);
    if (opt.via == "algorithm1" || opt.verify) {
      GeneratedSemigroup g = make_generated(minimal_generators(s), s.order);
      std::vector<Point> gens = quotient_generated(g, opt.d);
      CSemigroup via_gens = gaps_from_generators(make_generated(gens, s.order));
      if (opt.verify && !equal(via_gens, result)) {
        throw VerifyMismatch("quotient: the two computation routes disagree");
      }
      if (opt.via == "algorithm1") result = via_gens;
    }
    emit(out, semigroup_to_json(result));
    return 0;
  }

  if (cmd == "ddset") {
    CSemigroup s = load_semigroup(opt, in);
    Point f = parse_point_arg(opt.f_arg);
    CoverEnumeration covers = enumerate_covers(s, opt.d, f);
    if (opt.verify) {
      const std::size_t window = cone_points_leq(s.cone, s.order, f).size();
      if (window <= 15) {
        std::vector<CSemigroup> brute = oracle::brute_covers(s, opt.d, f);
        if (brute.size() != covers.covers.size()) {
          throw VerifyMismatch("ddset: oracle cover count disagrees");
        }
        for (std::size_t i = 0; i < brute.size(); ++i) {
          if (!equal(brute[i], covers.covers[i])) {
            throw VerifyMismatch("ddset: oracle cover set disagrees");
          }
        }
      }
    }
    if (opt.count_only) {
      out << covers.covers.size() << "\n";
    } else {
      Json arr = Json::array();
      for (const CSemigroup& t : covers.covers) arr.push_back(semigroup_to_json(t));
      emit(out, arr);
    }
    return 0;
  }

  if (cmd == "tree") {
    Cone cone = cone_from_json(read_json(opt.cone_path, in));
    OrderSpec order = opt.order_path.empty()
                          ? make_order(OrderKind::GradedRevCoordLex, cone.dim)
                          : order_from_json(read_json(opt.order_path, in), cone.dim);
    Point f = parse_point_arg(opt.f_arg);
    CoverTree t = build_cover_tree(cone, order, opt.d, f);
    if (opt.verify) {
      if (t.edges.size() + 1 != t.vertices.size()) {
        throw VerifyMismatch("tree: edge count does not match vertex count");
      }
      for (const auto& [parent, child] : t.edges) {
        if (!equal(quotient_gaps(t.vertices[child], opt.d), t.vertices[parent])) {
          throw VerifyMismatch("tree: an edge violates the quotient relation");
        }
      }
    }
    if (!opt.dot_path.empty()) {
      std::ofstream dot(opt.dot_path);
      if (!dot) throw schema_error("cannot write DOT file: " + opt.dot_path);
      dot << tree_to_dot(t);
    }
    if (opt.format == "dot") {
      out << tree_to_dot(t);
    } else {
      emit(out, tree_to_json(t));
    }
    return 0;
  }

  if (cmd == "classify") {
    CSemigroup s = load_semigroup(opt, in);
    Irreducibility k = classify(s);
    if (opt.verify) {
      bool sym = symmetric_by_complement(s);
      bool psym = pseudo_symmetric_by_complement(s);
      bool agree = (k == Irreducibility::Symmetric) == sym &&
                   (k == Irreducibility::PseudoSymmetric) == psym;
      if (!agree) throw VerifyMismatch("classify: complement characterization disagrees");
    }
    emit(out, Json{{"classification", irreducibility_name(k)}});
    return 0;
  }

  if (cmd == "double") {
    CSemigroup s = load_semigroup(opt, in);
    emit(out, semigroup_to_json(symmetric_double(s, parse_point_arg(opt.f_arg))));
    return 0;
  }
  if (cmd == "cover") {
    emit(out, semigroup_to_json(pseudo_symmetric_cover(load_semigroup(opt, in))));
    return 0;
  }
  if (cmd == "fourth") {
    CSemigroup s = load_semigroup(opt, in);
    emit(out, semigroup_to_json(fourth_pseudo_symmetric(s, parse_point_arg(opt.f_arg))));
    return 0;
  }
  if (cmd == "witness") {
    auto w = irreducible_half_witness(load_semigroup(opt, in));
    emit(out, w ? semigroup_to_json(*w) : Json(nullptr));
    return 0;
  }

  if (cmd == "pm") {
    ModularSystem sys = modular_from_json(read_json(opt.system_path, in));
    if (!opt.x_arg.empty()) {
      emit(out, Json{{"member", pm_member(sys, parse_point_arg(opt.x_arg))}});
    } else if (opt.quotient_d > 0) {
      emit(out, modular_to_json(pm_quotient(sys, opt.quotient_d)));
    } else if (!opt.intersect_path.empty()) {
      ModularSystem other = modular_from_json(read_json(opt.intersect_path, in));
      emit(out, modular_to_json(pm_intersect(sys, other)));
    } else {
      throw precondition_error("pm: one of --member, --quotient, --intersect required");
    }
    return 0;
  }

  if (cmd == "arf") {
    CSemigroup s = load_semigroup(opt, in);
    auto c = arf_check(membership_of(s), parse_point_arg(opt.window_arg));
    if (c) {
      emit(out, Json{{"ok", false},
                     {"counterexample",
                      Json{{"x", point_to_json(c->x)},
                           {"y", point_to_json(c->y)},
                           {"z", point_to_json(c->z)}}}});
    } else {
      emit(out, Json{{"ok", true}});
    }
    return 0;
  }

  if (cmd == "saturated") {
    CSemigroup s = load_semigroup(opt, in);
    auto c = saturated_check(membership_of(s), parse_point_arg(opt.window_arg), opt.coeff_bound);
    if (c) {
      emit(out, Json{{"ok", false},
                     {"counterexample",
                      Json{{"s", point_to_json(c->base)},
                           {"terms", points_to_json(c->terms)},
                           {"coeffs", c->coeffs},
                           {"value", point_to_json(c->value)}}}});
    } else {
      emit(out, Json{{"ok", true}});
    }
    return 0;
  }

  if (cmd == "cm") {
    CSemigroup s = load_semigroup(opt, in);
    MembershipFn pred = membership_of(s);
    std::vector<Point> ray_elems = opt.ray_elements_arg.empty()
                                       ? smallest_ray_multiples(pred, s.cone)
                                       : parse_point_list(opt.ray_elements_arg);
    auto c = cm_check(pred, s.cone, ray_elems, parse_point_arg(opt.window_arg));
    if (c) {
      emit(out, Json{{"ok", false},
                     {"counterexample",
                      Json{{"a", point_to_json(c->a)},
                           {"b", point_to_json(c->b)},
                           {"i", c->i},
                           {"j", c->j}}}});
    } else {
      emit(out, Json{{"ok", true}});
    }
    return 0;
  }

  if (cmd == "convex") {
    RationalPolytope f = polytope_from_json(read_json(opt.polytope_path, in));
    if (!opt.x_arg.empty()) {
      emit(out, Json{{"member", convex_member(f, parse_point_arg(opt.x_arg))}});
    } else if (opt.quotient_equal_d > 0) {
      auto c = convex_quotient_equal(f, opt.quotient_equal_d, parse_point_arg(opt.window_arg));
      if (c) {
        emit(out, Json{{"ok", false},
                       {"mismatch",
                        Json{{"x", point_to_json(c->x)},
                             {"in_quotient", c->in_quotient},
                             {"in_scaled", c->in_scaled}}}});
      } else {
        emit(out, Json{{"ok", true}});
      }
    } else {
      throw precondition_error("convex: one of --member, --quotient-equal required");
    }
    return 0;
  }

  if (cmd == "hilbert") {
    DiophantineSystem sys = system_from_json(read_json(opt.system_path, in));
    std::vector<Point> basis = hilbert_basis(sys);
    if (opt.verify) {
      Point box = zero_point(sys.cols);
      for (const Point& s : basis) {
        for (int i = 0; i < sys.cols; ++i) box[i] = std::max(box[i], s[i]);
      }
      std::vector<Point> brute = oracle::brute_hilbert(sys, box);
      if (brute != basis) throw VerifyMismatch("hilbert: oracle disagrees");
    }
    emit(out, Json{{"basis", points_to_json(basis)}});
    return 0;
  }

  throw precondition_error("unknown subcommand: " + cmd);
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"exact computations with affine and C-semigroups"};
  app.require_subcommand(1);
  Options opt;

  auto add_semigroup_cmd = [&](const std::string& name, const std::string& desc) {
    CLI::App* c = app.add_subcommand(name, desc);
    c->add_option("--semigroup", opt.semigroup_path, "semigroup JSON file ('-' or omit for stdin)");
    c->add_flag("--verify", opt.verify, "cross-check against the naive oracle");
    return c;
  };

  add_semigroup_cmd("validate", "check a semigroup file");
  add_semigroup_cmd("member", "membership of a point")->add_option("--x", opt.x_arg)->required();
  add_semigroup_cmd("gaps", "gap set");
  add_semigroup_cmd("generators", "minimal generating set");
  add_semigroup_cmd("frobenius", "Frobenius element");
  add_semigroup_cmd("pf", "pseudo-Frobenius elements");
  {
    CLI::App* c = add_semigroup_cmd("apery", "Apery set relative to m");
    c->add_option("--m", opt.m_arg)->required();
    c->add_flag("--classical", opt.classical, "use the x - m not in S variant");
    c->add_option("--window", opt.window_arg, "order bound for the classical variant");
  }
  add_semigroup_cmd("fg", "fundamental gaps");
  add_semigroup_cmd("genus", "number of gaps");
  {
    CLI::App* c = add_semigroup_cmd("quotient", "quotient by a positive integer");
    c->add_option("--d", opt.d)->required();
    c->add_option("--via", opt.via)->check(CLI::IsMember({"gaps", "algorithm1"}));
  }
  {
    CLI::App* c = add_semigroup_cmd("ddset", "all covers T with T/d = S below a Frobenius bound");
    c->add_option("--d", opt.d)->required();
    c->add_option("--f", opt.f_arg)->required();
    c->add_flag("--count-only", opt.count_only);
  }
  {
    CLI::App* c = app.add_subcommand("tree", "cover tree over a window of C-semigroups");
    c->add_option("--cone", opt.cone_path)->required();
    c->add_option("--order", opt.order_path);
    c->add_option("--d", opt.d)->required();
    c->add_option("--f", opt.f_arg)->required();
    c->add_option("--dot", opt.dot_path, "also write DOT to this file");
    c->add_option("--format", opt.format)->check(CLI::IsMember({"json", "dot"}));
    c->add_flag("--verify", opt.verify);
  }
  add_semigroup_cmd("classify", "symmetric / pseudo-symmetric / not-irreducible");
  add_semigroup_cmd("double", "symmetric cover with Frobenius element f")
      ->add_option("--f", opt.f_arg)
      ->required();
  add_semigroup_cmd("cover", "pseudo-symmetric cover of an irreducible semigroup");
  add_semigroup_cmd("fourth", "pseudo-symmetric cover with quotient by 4 equal to S")
      ->add_option("--f", opt.f_arg)
      ->required();
  add_semigroup_cmd("witness", "pseudo-symmetric witness of irreducibility");
  {
    CLI::App* c = app.add_subcommand("pm", "proportionally modular systems");
    c->add_option("--system", opt.system_path)->required();
    c->add_option("--member", opt.x_arg);
    c->add_option("--quotient", opt.quotient_d);
    c->add_option("--intersect", opt.intersect_path);
  }
  add_semigroup_cmd("arf", "Arf property check on a window")
      ->add_option("--window", opt.window_arg)
      ->required();
  {
    CLI::App* c = add_semigroup_cmd("saturated", "saturation check on a window");
    c->add_option("--window", opt.window_arg)->required();
    c->add_option("--coeff-bound", opt.coeff_bound);
  }
  {
    CLI::App* c = add_semigroup_cmd("cm", "Cohen-Macaulay criterion check on a window");
    c->add_option("--window", opt.window_arg)->required();
    c->add_option("--ray-elements", opt.ray_elements_arg, "semicolon-separated points");
  }
  {
    CLI::App* c = app.add_subcommand("convex", "convex body semigroup membership");
    c->add_option("--polytope", opt.polytope_path)->required();
    c->add_option("--member", opt.x_arg);
    c->add_option("--quotient-equal", opt.quotient_equal_d);
    c->add_option("--window", opt.window_arg);
  }
  {
    CLI::App* c = app.add_subcommand("hilbert", "Hilbert basis of a homogeneous system");
    c->add_option("--system", opt.system_path)->required();
    c->add_flag("--verify", opt.verify);
  }

  std::vector<std::string> argv_like{"semiq"};
  argv_like.insert(argv_like.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& a : argv_like) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << Json{{"error", e.what()}, {"kind", "usage"}}.dump() << "\n";
    return 2;
  }

  try {
    return dispatch(app.get_subcommands().front()->get_name(), opt, in, out);
  } catch (const VerifyMismatch& e) {
    err << Json{{"error", e.what()}, {"kind", "verify"}}.dump() << "\n";
    return 1;
  } catch (const schema_error& e) {
    err << Json{{"error", e.what()}, {"kind", "schema"}}.dump() << "\n";
    return 2;
  } catch (const overflow_error& e) {
    err << Json{{"error", e.what()}, {"kind", "overflow"}}.dump() << "\n";
    return 4;
  } catch (const guard_error& e) {
    err << Json{{"error", e.what()}, {"kind", "guard"}}.dump() << "\n";
    return 5;
  } catch (const precondition_error& e) {
    err << Json{{"error", e.what()}, {"kind", "precondition"}}.dump() << "\n";
    return 3;
  } catch (const error& e) {
    err << Json{{"error", e.what()}, {"kind", "internal"}}.dump() << "\n";
    return 3;
  }
}

}  // namespace cli
}  // namespace semiq
