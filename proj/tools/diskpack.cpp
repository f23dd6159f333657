// diskpack: command-line front end. Exit codes: 0 yes/valid, 1 no/invalid,
// 2 usage or input error.

#include <cstdint>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "diskpack/caterpillar.hpp"
#include "diskpack/errors.hpp"
#include "diskpack/generate.hpp"
#include "diskpack/io.hpp"
#include "diskpack/reduction.hpp"
#include "diskpack/rigidity.hpp"
#include "diskpack/star.hpp"
#include "diskpack/star_search.hpp"
#include "diskpack/svg.hpp"

using namespace diskpack;

namespace {

struct Globals {
  std::optional<double> tol;
  std::uint64_t seed = 1;
  std::string format = "json";
  std::string output;
  std::string svg;
  bool labels = false;
};

Globals g_opts;

// Thrown for usage problems detected after parsing.
struct UsageError : InputError {
  using InputError::InputError;
};

void emit_text(const Json& j, const std::string& prefix = "") {
  for (const auto& [k, v] : j.items()) {
    if (v.is_object()) {
      emit_text(v, prefix + k + ".");
    } else if (v.is_string()) {
      std::cout << prefix << k << ": " << v.get<std::string>() << "\n";
    } else {
      std::cout << prefix << k << ": " << v.dump() << "\n";
    }
  }
}

// Prints the verdict. A packing, when present, goes to -o and --svg, and to
// stdout for --format svg.
int finish(const Json& verdict, bool yes, const Packing* packing = nullptr) {
  if (packing != nullptr) {
    if (!g_opts.output.empty()) write_text_file(g_opts.output, packing_to_json(*packing).dump(2) + "\n");
    if (!g_opts.svg.empty()) write_text_file(g_opts.svg, render_svg(*packing, {g_opts.labels, 50.0}));
  }
  if (g_opts.format == "svg") {
    if (packing == nullptr) {
      std::cout << verdict.dump() << "\n";
      if (!yes) return 1;
      throw UsageError("--format svg needs a command that produces a packing");
    }
    std::cout << render_svg(*packing, {g_opts.labels, 50.0});
  } else if (g_opts.format == "text") {
    emit_text(verdict);
  } else {
    std::cout << verdict.dump(2) << "\n";
  }
  return yes ? 0 : 1;
}

double tol_or(double fallback) { return g_opts.tol.value_or(fallback); }

std::vector<std::int64_t> parse_list(const std::string& s) {
  std::vector<std::int64_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw InputError("--A: '" + item + "' is not an integer");
    }
  }
  return out;
}

Json triples_json(const std::vector<Triple>& ts) {
  Json j = Json::array();
  for (const auto& t : ts) j.push_back({t[0], t[1], t[2]});
  return j;
}

Caterpillar require_caterpillar(const Graph& g) {
  auto c = as_caterpillar(g);
  if (!c) throw InputError("graph is not a caterpillar");
  return *c;
}

WeightedStar require_star(const GraphFile& f, bool embedded) {
  auto s = as_star(f.graph, embedded ? &f.rotation : nullptr);
  if (!s) throw InputError("graph is not a star");
  if (embedded && !s->embedded) throw InputError("field 'rotation': missing the center's leaf order");
  return *s;
}

// --- caterpillar -----------------------------------------------------------

int caterpillar_decide(const std::string& path) {
  const Caterpillar c = require_caterpillar(read_graph_file(path).graph);
  const auto d = decide_caterpillar_udc(c);
  Json j{{"realizable", d.realizable}, {"degrees", c.degrees()}};
  if (!d.reason.empty()) j["reason"] = d.reason;
  if (d.witness_pair) j["witnessPair"] = {c.inner_path[d.witness_pair->first], c.inner_path[d.witness_pair->second]};
  if (d.witness_vertex) j["witnessVertex"] = c.inner_path[*d.witness_vertex];
  return finish(j, d.realizable);
}

int caterpillar_construct(const std::string& path) {
  const Caterpillar c = require_caterpillar(read_graph_file(path).graph);
  const auto d = decide_caterpillar_udc(c);
  if (!d.realizable) return finish({{"realizable", false}, {"reason", d.reason}}, false);
  const Packing p = construct_caterpillar_udc(c, tol_or(kDefaultTolerance));
  const auto trace = narrow_wide_trace(p, c);
  Json widths = Json::array();
  for (auto w : trace) widths.push_back(to_string(w));
  return finish({{"realizable", true}, {"disks", p.size()}, {"widths", widths}}, true, &p);
}

// --- star ------------------------------------------------------------------

int star_embedded(const std::string& path, std::optional<double> center_radius, bool construct) {
  const GraphFile f = read_graph_file(path);
  const WeightedStar s = require_star(f, true);
  const auto res = decide_and_construct_embedded_star(s, center_radius, g_opts.tol);
  Json j{{"realizable", res.realizable}, {"residual", res.residual}, {"traversalSteps", res.traversal_steps}};
  Json order = Json::array();
  for (auto i : res.order) order.push_back(s.leaves[i].id);
  j["order"] = order;
  if (res.rejected_at) j["rejectedAt"] = s.leaves[res.order[*res.rejected_at]].id;
  if (!res.realizable) {
    j["reason"] = "the leaves do not fit around the center in the given order";
    return finish(j, false);
  }
  return finish(j, true, construct ? &*res.packing : nullptr);
}

int star_bruteforce(const std::string& path, std::optional<double> center_radius, std::size_t max_leaves) {
  const WeightedStar s = require_star(read_graph_file(path), false);
  const auto res = star_wdc_bruteforce(s, center_radius, max_leaves, g_opts.tol);
  if (!res) {
    return finish({{"realizable", false}, {"reason", "no circular leaf order fits around the center"}}, false);
  }
  Json order = Json::array();
  for (auto i : res->order) order.push_back(s.leaves[i].id);
  return finish({{"realizable", true}, {"order", order}, {"ordersTried", res->orders_tried}}, true, &res->packing);
}

// --- 3-Partition -----------------------------------------------------------

int three_part_solve(const std::string& A, std::int64_t B) {
  const ThreePartitionInstance inst{parse_list(A), B};
  validate_instance(inst);
  const auto part = three_partition_bruteforce(inst);
  if (!part) return finish({{"solvable", false}, {"reason", "no partition into triples of sum B"}}, false);
  Json values = Json::array();
  for (const auto& t : *part) values.push_back({inst.A[t[0]], inst.A[t[1]], inst.A[t[2]]});
  return finish({{"solvable", true}, {"triples", triples_json(*part)}, {"values", values}}, true);
}

// --- rigid -----------------------------------------------------------------

int rigid_check(const std::string& path) {
  const GraphFile f = read_graph_file(path);
  const bool ok = check_rigidity_precondition(f.graph, f.rotation);
  Json j{{"precondition", ok}, {"biconnected", is_biconnected(f.graph)}};
  if (!ok) j["reason"] = "not a biconnected internally triangulated outerplane graph under its rotation";
  return finish(j, ok);
}

int rigid_reconstruct(const std::string& path, const std::string& peel) {
  const GraphFile f = read_graph_file(path);
  PeelOrder order;
  if (peel == "largest") {
    order.policy = PeelPolicy::LargestId;
  } else if (peel == "random") {
    order.policy = PeelPolicy::Random;
    order.seed = g_opts.seed;
  }
  try {
    const auto res = reconstruct_rigid(f.graph, f.rotation, order, tol_or(kDefaultTolerance));
    Json steps = Json::array();
    for (const auto& s : res.peel) steps.push_back({s.removed, s.a, s.b});
    return finish({{"realizable", true}, {"peel", steps}}, true, &res.packing);
  } catch (const NotRealizableError& e) {
    return finish({{"realizable", false}, {"vertex", e.vertex}, {"reason", e.what()}}, false);
  }
}

// --- reduction -------------------------------------------------------------

int reduce_build(const std::string& A, std::int64_t B, std::int64_t m, const std::string& mode) {
  reduction::ReductionParams params;
  params.m = m;
  params.mode = mode == "faithful" ? reduction::Mode::Faithful : reduction::Mode::Demonstration;
  const auto inst = reduction::build_star_instance({parse_list(A), B}, params);
  const Json j = reduction::instance_to_json(inst);
  if (g_opts.output.empty()) {
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  write_text_file(g_opts.output, j.dump(2) + "\n");
  Json summary{{"vertices", inst.vertex_count()}, {"m", inst.m()}, {"mode", reduction::to_string(inst.params.mode)},
               {"paddedB", inst.padded.B}, {"caveats", inst.caveats}};
  if (g_opts.format == "text") {
    emit_text(summary);
  } else {
    std::cout << summary.dump(2) << "\n";
  }
  return 0;
}

int reduce_check(std::int64_t B) {
  const auto rep = reduction::check_feasibility_conditions(B);
  Json checks = Json::array();
  for (const auto& c : rep.checks) {
    checks.push_back({{"name", c.name},
                      {"holds", c.holds},
                      {"margin", to_decimal_string(c.margin, 12)},
                      {"marginExact", to_fraction_string(c.margin)},
                      {"detail", c.detail}});
  }
  return finish({{"B", B}, {"allHold", rep.all_hold()}, {"checks", checks}}, rep.all_hold());
}

Json interval_pair(const Interval& iv) {
  return Json::array({to_decimal_string(iv.lo, 20), to_decimal_string(iv.hi, 20)});
}

int reduce_report(std::int64_t B, std::int64_t m) {
  const Rational b(B);
  const auto radii = reduction::compute_outer_central_radii(B, m, 1 / (16 * b * b), 1 / (128 * b * b));
  const Rational rs = reduction::r_min(B);
  Json j{{"B", B},
         {"gapCountLowerBound", to_decimal_string(reduction::gap_count_lower_bound(B), 12)},
         {"faithfulGapCount", reduction::faithful_gap_count(B)},
         {"separatorRadius", to_decimal_string(rs, 20)},
         {"m", m},
         {"outerRadius", interval_pair(radii.outer)},
         {"centerRadius", interval_pair(radii.center)},
         {"sinPiOverM", interval_pair(radii.sine)},
         {"bits", radii.bits},
         {"outerRadiusUnitSeparators", interval_pair(reduction::extreme_outer_radius(2, 12))}};
  return finish(j, true);
}

std::vector<Triple> read_partition(const std::string& path, const reduction::StarReductionInstance& inst) {
  const Json j = read_json_file(path);
  std::vector<Triple> part;
  try {
    for (const auto& t : j.at("triples")) part.push_back({t.at(0).get<std::size_t>(), t.at(1).get<std::size_t>(),
                                                          t.at(2).get<std::size_t>()});
  } catch (const Json::exception& e) {
    throw InputError(path + ": field 'triples': " + e.what());
  }
  // A partition of the source instance is completed with the padding triples.
  const std::size_t n = inst.source.n();
  const auto m = static_cast<std::size_t>(inst.m());
  if (part.size() == n && n != m) {
    const std::size_t extra = m - n;
    for (std::size_t k = 0; k < extra; ++k) {
      part.push_back({3 * n + 2 * k, 3 * n + 2 * k + 1, 3 * n + 2 * extra + k});
    }
  }
  return part;
}

int reduce_embed(const std::string& instance, const std::string& partition) {
  const auto inst = reduction::instance_from_json(read_json_file(instance));
  const auto part = read_partition(partition, inst);
  try {
    const auto sol = reduction::embed_solution(inst, part);
    Json gaps = Json::array();
    for (const auto& gp : sol.gaps) {
      gaps.push_back({{"triple", {gp.triple[0], gp.triple[1], gp.triple[2]}},
                      {"baseResidual", gp.base_residual},
                      {"angleResidual", gp.angle_residual}});
    }
    return finish({{"valid", true}, {"disks", sol.packing.size()}, {"gaps", gaps}}, true, &sol.packing);
  } catch (const reduction::EmbedFitError& e) {
    return finish({{"valid", false}, {"gap", e.gap}, {"residual", e.residual}, {"reason", e.what()}}, false);
  }
}

// --- validate / render / generate ------------------------------------------

int validate(const std::string& packing_path, const std::string& graph_path) {
  Packing p = read_packing_file(packing_path);
  if (g_opts.tol) p = p.with_tolerance(*g_opts.tol);
  const GraphFile f = read_graph_file(graph_path);
  const auto rep = validate_dcr(p, f.graph, f.graph.has_weights() ? &f.graph.weights() : nullptr);
  Json v = Json::array();
  for (const auto& x : rep.violations) {
    v.push_back({{"a", x.a}, {"b", x.b}, {"kind", to_string(x.kind)}, {"gap", x.gap}});
  }
  Json j{{"valid", rep.valid}, {"violations", v}};
  if (rep.scale) j["scale"] = *rep.scale;
  return finish(j, rep.valid);
}

int render(const std::string& packing_path) {
  const Packing p = read_packing_file(packing_path);
  const std::string svg = render_svg(p, {g_opts.labels, 50.0});
  if (g_opts.output.empty()) {
    std::cout << svg;
  } else {
    write_text_file(g_opts.output, svg);
  }
  return 0;
}

int emit_graph(const Json& j) {
  if (g_opts.output.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    write_text_file(g_opts.output, j.dump(2) + "\n");
  }
  return 0;
}

int generate_caterpillar(std::size_t max_vertices, std::size_t max_degree, bool realizable) {
  std::mt19937_64 rng(g_opts.seed);
  const Caterpillar c = random_caterpillar(rng, {max_vertices, max_degree, realizable});
  return emit_graph(graph_to_json(c.to_graph()));
}

int generate_outerplane(std::size_t n, double bias) {
  if (n < 3) throw InputError("--n must be at least 3");
  std::mt19937_64 rng(g_opts.seed);
  const auto e = random_outerplane(rng, n, bias);
  return emit_graph(graph_to_json(e.graph, &e.rotation));
}

CLI::App* command(CLI::App& parent, const std::string& name, const std::string& desc, const std::string& example) {
  auto* sub = parent.add_subcommand(name, desc);
  sub->footer("Example: " + example);
  sub->fallthrough();
  return sub;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Disk contact representations: recognition, construction and verification."};
  app.footer("Example: diskpack caterpillar decide path5.json");
  app.require_subcommand(1);
  app.add_option("--tol", g_opts.tol, "contact tolerance (> 0)")->check(CLI::PositiveNumber);
  app.add_option("--seed", g_opts.seed, "seed for randomized commands");
  app.add_option("--format", g_opts.format, "output format")->check(CLI::IsMember({"json", "svg", "text"}));
  app.add_option("-o,--output", g_opts.output, "output file");
  app.add_option("--svg", g_opts.svg, "also write an SVG drawing of the packing");
  app.add_flag("--labels", g_opts.labels, "label disks in SVG output");

  std::function<int()> action;
  std::string graph, packing, A, mode = "demo", peel = "smallest", instance, partition;
  std::int64_t B = 0, m = 8;
  std::optional<double> center_radius;
  std::size_t max_leaves = 10, max_vertices = 200, max_degree = 5, n = 12;
  bool realizable_only = false;
  double bias = 0.8;

  // caterpillar
  auto* cat = command(app, "caterpillar", "Unit-disk caterpillars", "diskpack caterpillar decide path5.json");
  cat->require_subcommand(1);
  auto* cd = command(*cat, "decide", "Decide unit-disk realizability", "diskpack caterpillar decide cat12.json");
  cd->add_option("graph", graph, "graph file")->required();
  cd->callback([&] { action = [&] { return caterpillar_decide(graph); }; });
  auto* cc = command(*cat, "construct", "Construct a unit-disk packing",
                     "diskpack caterpillar construct cat12.json -o cat12_packing.json --svg cat12.svg");
  cc->add_option("graph", graph, "graph file")->required();
  cc->callback([&] { action = [&] { return caterpillar_construct(graph); }; });

  // star
  auto* star = command(app, "star", "Weighted stars", "diskpack star decide-embedded k16.json");
  star->require_subcommand(1);
  auto* sd = command(*star, "decide-embedded", "Decide a star with a fixed leaf order",
                     "diskpack star decide-embedded star7.json");
  sd->add_option("graph", graph, "graph file with the center's rotation")->required();
  sd->add_option("--center-radius", center_radius, "override the center radius")->check(CLI::PositiveNumber);
  sd->callback([&] { action = [&] { return star_embedded(graph, center_radius, false); }; });
  auto* sc = command(*star, "construct-embedded", "Construct a star with a fixed leaf order",
                     "diskpack star construct-embedded star7.json -o star7_packing.json --svg star7.svg");
  sc->add_option("graph", graph, "graph file with the center's rotation")->required();
  sc->add_option("--center-radius", center_radius, "override the center radius")->check(CLI::PositiveNumber);
  sc->callback([&] { action = [&] { return star_embedded(graph, center_radius, true); }; });
  auto* sb = command(*star, "bruteforce", "Search every leaf order", "diskpack star bruteforce star7.json --max-leaves 10");
  sb->add_option("graph", graph, "graph file")->required();
  sb->add_option("--center-radius", center_radius, "override the center radius")->check(CLI::PositiveNumber);
  sb->add_option("--max-leaves", max_leaves, "refuse stars with more leaves");
  sb->callback([&] { action = [&] { return star_bruteforce(graph, center_radius, max_leaves); }; });

  // 3part
  auto* tp = command(app, "3part", "3-Partition", "diskpack 3part solve --A 6,7,7 --B 20");
  tp->require_subcommand(1);
  auto* ts = command(*tp, "solve", "Exact search for a partition into triples", "diskpack 3part solve --A 6,7,7 --B 20");
  ts->add_option("--A", A, "comma-separated elements")->required();
  ts->add_option("--B", B, "target triple sum")->required();
  ts->callback([&] { action = [&] { return three_part_solve(A, B); }; });

  // rigid
  auto* rg = command(app, "rigid", "Internally triangulated outerplane graphs", "diskpack rigid check fan5.json");
  rg->require_subcommand(1);
  auto* rc = command(*rg, "check", "Check the rigidity precondition", "diskpack rigid check fan5.json");
  rc->add_option("graph", graph, "graph file with rotation")->required();
  rc->callback([&] { action = [&] { return rigid_check(graph); }; });
  auto* rr = command(*rg, "reconstruct", "Rebuild the unit-disk packing",
                     "diskpack rigid reconstruct fan5.json -o fan5_packing.json");
  rr->add_option("graph", graph, "graph file with rotation")->required();
  rr->add_option("--peel", peel, "peel order")->check(CLI::IsMember({"smallest", "largest", "random"}));
  rr->callback([&] { action = [&] { return rigid_reconstruct(graph, peel); }; });

  // reduce
  auto* rd = command(app, "reduce", "3-Partition to weighted star", "diskpack reduce check-conditions --B 180");
  rd->require_subcommand(1);
  auto* rb = command(*rd, "3part-to-star", "Build the star instance",
                     "diskpack reduce 3part-to-star --A 6,7,7 --B 20 --m 8 --mode demo -o star.json");
  rb->add_option("--A", A, "comma-separated elements")->required();
  rb->add_option("--B", B, "target triple sum")->required();
  rb->add_option("--m", m, "gap count, a power of two >= 8");
  rb->add_option("--mode", mode, "construction mode")->check(CLI::IsMember({"demo", "faithful"}));
  rb->callback([&] { action = [&] { return reduce_build(A, B, m, mode); }; });
  auto* rk = command(*rd, "check-conditions", "Evaluate the seven inequalities exactly",
                     "diskpack reduce check-conditions --B 180");
  rk->add_option("--B", B, "bound, B > 12 and B = 0 mod 4")->required();
  rk->callback([&] { action = [&] { return reduce_check(B); }; });
  auto* rp = command(*rd, "report", "Gap-count bound and radius enclosures", "diskpack reduce report --B 180");
  rp->add_option("--B", B, "bound, B > 12 and B = 0 mod 4")->required();
  rp->add_option("--m", m, "gap count used for the radii");
  rp->callback([&] { action = [&] { return reduce_report(B, m); }; });
  auto* re = command(*rd, "embed", "Pack the star for a partition",
                     "diskpack reduce embed --instance star.json --partition part.json -o packing.json");
  re->add_option("--instance", instance, "instance from 3part-to-star")->required();
  re->add_option("--partition", partition, "JSON with \"triples\" of indices")->required();
  re->callback([&] { action = [&] { return reduce_embed(instance, partition); }; });

  // validate / render
  auto* va = command(app, "validate", "Check a packing against a graph",
                     "diskpack validate cat12_packing.json cat12.json");
  va->add_option("packing", packing, "packing file")->required();
  va->add_option("graph", graph, "graph file")->required();
  va->callback([&] { action = [&] { return validate(packing, graph); }; });
  auto* rn = command(app, "render", "Draw a packing as SVG", "diskpack render cat12_packing.json --labels -o cat12.svg");
  rn->add_option("packing", packing, "packing file")->required();
  rn->callback([&] { action = [&] { return render(packing); }; });

  // generate
  auto* gen = command(app, "generate", "Random test graphs", "diskpack generate caterpillar --seed 3");
  gen->require_subcommand(1);
  auto* gc = command(*gen, "caterpillar", "Random caterpillar",
                     "diskpack generate caterpillar --seed 3 --max-vertices 40 -o random_cat.json");
  gc->add_option("--max-vertices", max_vertices, "vertex budget")->check(CLI::Range(std::size_t{1}, std::size_t{100000}));
  gc->add_option("--max-degree", max_degree, "largest inner degree (5 or 6)")->check(CLI::Range(2, 6));
  gc->add_flag("--realizable", realizable_only, "only unit-disk realizable caterpillars");
  gc->callback([&] { action = [&] { return generate_caterpillar(max_vertices, max_degree, realizable_only); }; });
  auto* go = command(*gen, "outerplane", "Random triangulated polygon",
                     "diskpack generate outerplane --n 12 --seed 5 -o random_op.json");
  go->add_option("--n", n, "vertex count (>= 3)");
  go->add_option("--strip-bias", bias, "probability of extending the last ear")->check(CLI::Range(0.0, 1.0));
  go->callback([&] { action = [&] { return generate_outerplane(n, bias); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  try {
    return action();
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const NotRealizableError& e) {
    return finish({{"realizable", false}, {"vertex", e.vertex}, {"reason", e.what()}}, false);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    std::cout << Json{{"valid", false}, {"reason", e.what()}}.dump(2) << "\n";
    return 1;
  }
}
