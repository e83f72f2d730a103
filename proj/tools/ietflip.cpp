// Command-line front end: exact interval-exchange algebra, analysis,
// hyper-clean lift enumeration, gadget builders, verification suites, and
// SVG graphs. Maps are given inline, as a file, or as file#binding.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ietflip/blowup.hpp"
#include "ietflip/constructions.hpp"
#include "ietflip/keane.hpp"
#include "ietflip/lift.hpp"
#include "ietflip/svg.hpp"
#include "ietflip/text.hpp"
#include "ietflip/verify.hpp"

using namespace ietflip;

namespace {

struct Options {
  long field_m = 2;
  std::uint64_t seed = 20260810;
  int bound = 10000;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw DomainError(Errc::bad_parameters, "cannot open file '" + path + "'");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool looks_like_document(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::size_t i = line.find_first_not_of(" \t");
    if (i == std::string::npos || line[i] == '#') continue;
    if (line.compare(i, 6, "field ") == 0) return true;
    std::size_t eq = line.find('=');
    std::size_t arrow = line.find("->");
    return eq != std::string::npos && (arrow == std::string::npos || eq < arrow);
  }
  return false;
}

// An argument names a map or a lift: inline text (it contains "->"), a file
// holding one, or file#binding into a document.
std::variant<MapClass, Lift> load_value(const std::string& arg, const FieldSpec& field) {
  if (arg.find("->") != std::string::npos) {
    if (arg.find('@') != std::string::npos) return parse_lift(arg, field);
    return parse_map(arg, field);
  }
  std::string path = arg, name;
  if (std::size_t h = arg.find('#'); h != std::string::npos) {
    path = arg.substr(0, h);
    name = arg.substr(h + 1);
  }
  std::string text = read_file(path);
  if (looks_like_document(text)) {
    Document doc = parse_document(text, field);
    if (name.empty()) {
      if (doc.bindings.size() != 1) {
        throw DomainError(Errc::bad_parameters,
                          "document has " + std::to_string(doc.bindings.size()) +
                              " bindings; select one with '" + path + "#name'");
      }
      name = doc.bindings.front().first;
    }
    const auto* v = doc.find(name);
    if (!v) throw DomainError(Errc::bad_parameters, "no binding '" + name + "' in " + path);
    return *v;
  }
  if (text.find('@') != std::string::npos) return parse_lift(text, field);
  return parse_map(text, field);
}

MapClass load_class(const std::string& arg, const FieldSpec& field) {
  auto v = load_value(arg, field);
  if (std::holds_alternative<MapClass>(v)) return std::get<MapClass>(v);
  return std::get<Lift>(v).map_class();
}

CirclePoint point_arg(const std::string& arg, const FieldSpec& field) {
  return CirclePoint(parse_scalar(arg, field));
}

std::string profile_str(const ContinuityProfile& p) {
  std::string out = p.overall == OverallContinuity::all_left    ? "all-left"
                    : p.overall == OverallContinuity::all_right ? "all-right"
                                                                : "mixed";
  if (!p.tags.empty()) {
    out += " [";
    bool first = true;
    for (const auto& [x, c] : p.tags) {
      if (!first) out += ' ';
      first = false;
      out += scalar_text(x.value());
      out += c == Continuity::left ? ":L" : ":R";
    }
    out += ']';
  }
  return out;
}

void cmd_lifts(const MapClass& f, int bound) {
  std::vector<Lift> lifts = enumerate_hyperclean_lifts(f);
  std::string orders, squares;
  for (std::size_t i = 0; i < lifts.size(); ++i) {
    auto o = lift_order(lifts[i], bound);
    if (!orders.empty()) orders += ", ";
    orders += o ? std::to_string(*o) : std::string("unknown");
    if (o == std::optional<int>(2) || lift_compose(lifts[i], lifts[i]).is_identity()) {
      if (!squares.empty()) squares += ", ";
      squares += std::to_string(i + 1);
    }
  }
  std::cout << lifts.size() << " hyper-clean lift" << (lifts.size() == 1 ? "" : "s");
  if (!lifts.empty()) {
    std::cout << "; orders: " << orders
              << "; squares-to-identity: " << (squares.empty() ? "none" : squares);
  }
  std::cout << "\n";
  for (std::size_t i = 0; i < lifts.size(); ++i) {
    std::cout << "lift " << i + 1 << ": profile " << profile_str(continuity_profile(lifts[i]))
              << "\n" << lift_text(lifts[i]) << "\n";
  }
}

void cmd_essupp(const MapClass& f) {
  std::vector<Interval> arcs = essential_support(f);
  std::cout << "support:";
  if (arcs.empty()) {
    std::cout << " (empty)";
  } else if (arcs.size() == 1 && arcs[0].is_full()) {
    std::cout << " (full circle)";
  } else {
    for (const Interval& a : arcs) {
      std::cout << " [" << scalar_text(a.lo().value()) << ','
                << (a.hi().is_zero() ? "1" : scalar_text(a.hi().value())) << ']';
    }
  }
  std::cout << "\ndiameter: " << scalar_text(closed_arcs_diameter(arcs)) << "\n";
}

void cmd_keane(const MapClass& f) {
  KeaneForm k = keane_form(f);
  std::cout << "lengths:";
  for (const Scalar& u : k.lengths) std::cout << ' ' << scalar_text(u);
  std::cout << "\nsigma:";
  for (int s : k.sigma) std::cout << ' ' << s + 1;
  std::cout << "\nflips:";
  for (int fl : k.flips) std::cout << ' ' << (fl > 0 ? '+' : '-');
  std::cout << "\n";
}

void cmd_comrot(const MapClass& f, const CirclePoint& t) {
  CommutatorReport rep = comrot(f, t);
  std::cout << "c = " << map_text(rep.c) << "\n";
  std::cout << "blocks:";
  if (rep.blocks.empty()) std::cout << " (none)";
  for (const Interval& b : rep.blocks) {
    std::cout << " [" << scalar_text(b.lo().value()) << ',' << scalar_text(b.hi().value())
              << ']';
  }
  std::cout << "\nblock permutation:";
  for (int j : rep.block_perm) std::cout << ' ' << j + 1;
  std::cout << "\nfixed-free: " << (rep.fixed_free ? "yes" : "no") << "\n";
}

void cmd_word(const std::string& gens_path, const std::string& word, const FieldSpec& field) {
  Document doc = parse_document(read_file(gens_path), field);
  std::vector<std::pair<std::string, Lift>> gens;
  for (const auto& [name, v] : doc.bindings) gens.emplace_back(name, doc.lift_of(name));
  FinPerm p = word_support(gens, word);
  if (p.empty()) {
    std::cout << "empty (the relation lifts exactly)\n";
    return;
  }
  for (const auto& [x, y] : p.pairs) {
    std::cout << scalar_text(x.value()) << " -> " << scalar_text(y.value()) << "\n";
  }
}

int run(int argc, char** argv) {
  CLI::App app{"exact interval exchanges with flips: algebra, lifts, gadgets"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--field", opt.field_m, "quadratic field radicand m (0 = rationals)")
      ->capture_default_str();
  app.add_option("--seed", opt.seed, "seed for randomized suites")->capture_default_str();
  app.add_option("--bound", opt.bound, "search bound for lift orders")->capture_default_str();

  std::string a, b, c, d, e, word, svg_path, suite;
  std::vector<std::string> plot_args;

  CLI::App* s_compose = app.add_subcommand("compose", "compose two classes (A o B)");
  s_compose->add_option("A", a)->required();
  s_compose->add_option("B", b)->required();
  CLI::App* s_invert = app.add_subcommand("invert", "invert a class");
  s_invert->add_option("A", a)->required();
  CLI::App* s_canon = app.add_subcommand("canon", "parse and print the canonical form");
  s_canon->add_option("A", a)->required();
  CLI::App* s_sing = app.add_subcommand("sing", "singular points of a class");
  s_sing->add_option("A", a)->required();
  CLI::App* s_essupp = app.add_subcommand("essupp", "essential support and its diameter");
  s_essupp->add_option("A", a)->required();
  CLI::App* s_egap = app.add_subcommand("egap", "minimal distance between singularities");
  s_egap->add_option("A", a)->required();
  CLI::App* s_keane = app.add_subcommand("keane", "lengths/permutation/flips normal form");
  s_keane->add_option("A", a)->required();
  CLI::App* s_lifts = app.add_subcommand("lifts", "enumerate hyper-clean lifts");
  s_lifts->add_option("A", a)->required();
  CLI::App* s_word = app.add_subcommand("word", "evaluate a relator word over lift bindings");
  s_word->add_option("GENS", a, "document whose bindings are the generators")->required();
  s_word->add_option("WORD", word, "word over binding names, ' for inverse")->required();
  CLI::App* s_verify = app.add_subcommand("verify", "run a named verification suite");
  s_verify->add_option("SUITE", suite, "group|keane|comrot|lifts|involution|blowup|genparro|arbsmall|gadget|lambda|serialization|all")
      ->required();
  CLI::App* s_plot = app.add_subcommand("plot", "draw graphs (up to 8 panels) as SVG");
  s_plot->add_option("MAPS", plot_args, "classes or lifts")->required()->expected(1, 8);
  s_plot->add_option("--svg", svg_path, "output path")->required();
  CLI::App* s_blow = app.add_subcommand("blow", "apply a class to a sided point");
  s_blow->add_option("A", a)->required();
  s_blow->add_option("P", b, "sided point, e.g. 1/3^+")->required();

  CLI::App* s_rot = app.add_subcommand("rot", "rotation by T");
  s_rot->add_option("T", a)->required();
  CLI::App* s_xchg = app.add_subcommand("xchg", "exchange of [LO1,HI1) and [LO2,HI2)");
  s_xchg->add_option("LO1", a)->required();
  s_xchg->add_option("HI1", b)->required();
  s_xchg->add_option("LO2", c)->required();
  s_xchg->add_option("HI2", d)->required();
  CLI::App* s_prot = app.add_subcommand("prot", "partial rotation of [LO,HI) by THETA");
  s_prot->add_option("LO", a)->required();
  s_prot->add_option("HI", b)->required();
  s_prot->add_option("THETA", c)->required();
  app.add_subcommand("flip", "the global flip x -> -x");
  CLI::App* s_flipon = app.add_subcommand("flip-on", "reverse [LO,HI) onto itself");
  s_flipon->add_option("LO", a)->required();
  s_flipon->add_option("HI", b)->required();
  CLI::App* s_f132 = app.add_subcommand("f132", "132-flip with breakpoints A, B");
  s_f132->add_option("A", a)->required();
  s_f132->add_option("B", b)->required();
  CLI::App* s_f3 = app.add_subcommand("f3", "triple flip with interval lengths L1 L2 L3");
  s_f3->add_option("L1", a)->required();
  s_f3->add_option("L2", b)->required();
  s_f3->add_option("L3", c)->required();
  CLI::App* s_comrot = app.add_subcommand("comrot", "commutator with a rotation, with block report");
  s_comrot->add_option("A", a)->required();
  s_comrot->add_option("T", b)->required();
  CLI::App* s_arb = app.add_subcommand("arbsmall", "small-support element (RHO EPS ETA LAMBDA LAMBDA2)");
  s_arb->add_option("RHO", a)->required();
  s_arb->add_option("EPS", b)->required();
  s_arb->add_option("ETA", c)->required();
  s_arb->add_option("LAMBDA", d)->required();
  s_arb->add_option("LAMBDA2", e)->required();
  CLI::App* s_dec = app.add_subcommand("decompose", "factor an IET+ class into partial rotations");
  s_dec->add_option("A", a)->required();
  CLI::App* s_gadget = app.add_subcommand("gadget", "the four generators u, v, w, s over cut A");
  s_gadget->add_option("A", a)->required();
  s_gadget->add_option("THETA", b, "rotation amount of w (needs a sqrt term)")->required();

  CLI11_PARSE(app, argc, argv);
  FieldSpec field(opt.field_m);

  if (s_compose->parsed()) {
    std::cout << map_text(compose(load_class(a, field), load_class(b, field))) << "\n";
  } else if (s_invert->parsed()) {
    std::cout << map_text(invert(load_class(a, field))) << "\n";
  } else if (s_canon->parsed()) {
    std::cout << map_text(load_class(a, field)) << "\n";
  } else if (s_sing->parsed()) {
    std::vector<CirclePoint> s = singularities(load_class(a, field));
    if (s.empty()) {
      std::cout << "(none)\n";
    } else {
      for (std::size_t i = 0; i < s.size(); ++i) {
        std::cout << (i ? " " : "") << scalar_text(s[i].value());
      }
      std::cout << "\n";
    }
  } else if (s_essupp->parsed()) {
    cmd_essupp(load_class(a, field));
  } else if (s_egap->parsed()) {
    auto E = min_sing_gap(load_class(a, field));
    std::cout << (E ? scalar_text(*E) : std::string("inf")) << "\n";
  } else if (s_keane->parsed()) {
    cmd_keane(load_class(a, field));
  } else if (s_lifts->parsed()) {
    cmd_lifts(load_class(a, field), opt.bound);
  } else if (s_word->parsed()) {
    cmd_word(a, word, field);
  } else if (s_verify->parsed()) {
    bool all_ok = true;
    for (const auto& r : verify::run_suites(suite, opt.seed, opt.bound)) {
      all_ok = all_ok && r.passed();
      std::cout << (r.passed() ? "PASS " : "FAIL ") << r.name << " (" << r.total
                << " checks): " << r.detail << "\n";
    }
    return all_ok ? 0 : 1;
  } else if (s_plot->parsed()) {
    std::vector<PlotItem> items;
    for (const std::string& arg : plot_args) {
      auto v = load_value(arg, field);
      if (std::holds_alternative<Lift>(v)) {
        items.emplace_back(std::get<Lift>(v));
      } else {
        items.emplace_back(std::get<MapClass>(v));
      }
    }
    std::ofstream out(svg_path, std::ios::binary);
    if (!out) throw DomainError(Errc::bad_parameters, "cannot write '" + svg_path + "'");
    out << plot_svg(items);
    std::cout << "wrote " << svg_path << "\n";
  } else if (s_blow->parsed()) {
    std::cout << sided_text(eval_blowup(load_class(a, field), parse_sided(b, field))) << "\n";
  } else if (s_rot->parsed()) {
    std::cout << map_text(rotation(point_arg(a, field))) << "\n";
  } else if (s_xchg->parsed()) {
    std::cout << map_text(exchange(Interval::arc(point_arg(a, field), point_arg(b, field)),
                                   Interval::arc(point_arg(c, field), point_arg(d, field))))
              << "\n";
  } else if (s_prot->parsed()) {
    std::cout << map_text(partial_rotation(
                     Interval::arc(point_arg(a, field), point_arg(b, field)),
                     point_arg(c, field)))
              << "\n";
  } else if (app.get_subcommand("flip")->parsed()) {
    std::cout << map_text(global_flip()) << "\n";
  } else if (s_flipon->parsed()) {
    std::cout << map_text(flip_on(Interval::arc(point_arg(a, field), point_arg(b, field))))
              << "\n";
  } else if (s_f132->parsed()) {
    std::cout << map_text(make_132_flip(point_arg(a, field), point_arg(b, field))) << "\n";
  } else if (s_f3->parsed()) {
    std::cout << map_text(make_triple_flip(parse_scalar(a, field), parse_scalar(b, field),
                                           parse_scalar(c, field)))
              << "\n";
  } else if (s_comrot->parsed()) {
    cmd_comrot(load_class(a, field), point_arg(b, field));
  } else if (s_arb->parsed()) {
    MapClass out = arbsmall(point_arg(a, field), parse_scalar(b, field),
                            parse_scalar(c, field), point_arg(d, field),
                            point_arg(e, field));
    std::cout << map_text(out) << "\n";
    cmd_essupp(out);
  } else if (s_dec->parsed()) {
    std::vector<MapClass> factors = decompose_partial_rotations(load_class(a, field));
    std::cout << factors.size() << " partial rotation" << (factors.size() == 1 ? "" : "s")
              << " (outermost first)\n";
    for (const MapClass& p : factors) std::cout << map_text(p) << "\n";
  } else if (s_gadget->parsed()) {
    StabilizerGadget g = t_stabr_gadget(point_arg(a, field), point_arg(b, field));
    MapClass suv = compose(g.s, compose(g.u, g.v));
    std::cout << "u = " << map_text(g.u) << "\n";
    std::cout << "v = " << map_text(g.v) << "\n";
    std::cout << "w = " << map_text(g.w) << "\n";
    std::cout << "s = " << map_text(g.s) << "\n";
    std::cout << "suv = " << map_text(suv) << "\n";
    std::cout << "suv is a triple flip: " << (is_triple_flip(suv) ? "yes" : "no") << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const SyntaxError& e) {
    std::cerr << "error:syntax:" << e.line() << ':' << e.col() << ": " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error:" << errc_name(e.kind()) << ": " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error:internal: " << e.what() << "\n";
    return 1;
  }
}
