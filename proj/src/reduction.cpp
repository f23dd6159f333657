#include "diskpack/reduction.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <set>

#include "diskpack/star.hpp"

namespace diskpack::reduction {

ThreePartitionInstance pad_instance(const ThreePartitionInstance& a, std::int64_t m) {
  validate_instance(a);
  const auto n = static_cast<std::int64_t>(a.n());
  if (m < n) {
    throw InputError("gap count m = " + std::to_string(m) + " is smaller than n = " + std::to_string(n));
  }
  ThreePartitionInstance out;
  out.B = 180 * a.B;
  for (auto x : a.A) out.A.push_back(180 * x);
  const std::int64_t extra = m - n;
  for (std::int64_t i = 0; i < 2 * extra; ++i) out.A.push_back(60 * a.B - 5);
  for (std::int64_t i = 0; i < extra; ++i) out.A.push_back(60 * a.B + 10);
  return out;
}

Rational radius_fn(const Rational& x, std::int64_t B) {
  if (B <= 0) throw InputError("B must be positive");
  if (4 * x < B || 2 * x > B) {
    throw InputError("radius_fn argument " + to_fraction_string(x) + " outside [B/4, B/2]");
  }
  const Rational b(B);
  return 2 - (4 - 12 * x / b) / b;
}

Rational radius_fn(std::int64_t x, std::int64_t B) { return radius_fn(Rational(x), B); }

Rational r_min(std::int64_t B) { return radius_fn(Rational(B, 4) + 1, B); }
Rational r_max(std::int64_t B) { return radius_fn(Rational(B, 2) - 1, B); }

bool ConditionReport::all_hold() const {
  return std::all_of(checks.begin(), checks.end(), [](const ConditionCheck& c) { return c.holds; });
}

const ConditionCheck& ConditionReport::at(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return c;
  }
  throw InputError("no condition named '" + name + "'");
}

namespace {

ConditionCheck make_check(std::string name, Rational lhs, Rational rhs, std::string detail = {}) {
  ConditionCheck c;
  c.name = std::move(name);
  c.margin = rhs - lhs;
  c.holds = c.margin >= 0;
  c.lhs = std::move(lhs);
  c.rhs = std::move(rhs);
  c.detail = std::move(detail);
  return c;
}

// T <= 2 r_a + 4 sqrt(r_b r_a), squared: (T - 2 r_a)^2 <= 16 r_b r_a.
// When T - 2 r_a is negative the inequality holds outright; lhs is then 0.
ConditionCheck width_check(std::string name, const Rational& T, const Rational& ra,
                           const Rational& rb, std::string detail = {}) {
  const Rational base = T - 2 * ra;
  const Rational lhs = base > 0 ? Rational(base * base) : Rational(0);
  return make_check(std::move(name), lhs, 16 * rb * ra, std::move(detail));
}

// d(eps1, x) <= r(x) - phi for every input x, squared per x.
ConditionCheck overlap_check(std::string name, std::int64_t B, const Rational& eps1,
                             const Rational& phi) {
  const Rational rmin = r_min(B);
  if (B <= kSweepLimit) {
    std::optional<ConditionCheck> worst;
    std::int64_t count = 0;
    for (std::int64_t x = B / 4 + 1; 2 * x <= B - 2; ++x) {
      const Rational r = radius_fn(x, B);
      const Rational a = r - eps1 / 2, b = r - rmin, c = r - phi;
      auto chk = make_check(name, a * a + b * b, c * c);
      if (c < 0) chk.holds = false;
      if (!worst || chk.margin < worst->margin || (!chk.holds && worst->holds)) worst = chk;
      ++count;
    }
    worst->detail = "sweep over " + std::to_string(count) + " inputs";
    return *worst;
  }
  // Sufficient polynomial form, valid for all inputs once B > 12.
  const Rational b(B);
  return make_check(std::move(name), 208 + 28 * b, 19 * b * b, "closed-form 19B^2 - 28B - 208 >= 0");
}

}  // namespace

ConditionReport check_feasibility_conditions(std::int64_t B) {
  if (B <= 12) throw InputError("B must exceed 12");
  if (B % 4 != 0) throw InputError("B must be a multiple of 4");
  const Rational b(B), b2 = b * b;
  const Rational rmin = r_min(B), rmax = r_max(B);
  const Rational r4 = radius_fn(Rational(B, 4), B), r2 = radius_fn(Rational(B, 2), B);
  const Rational eps1 = 16 / b2, eps2 = 1 / b2, phi = 1 / b2;

  ConditionReport rep;
  rep.B = B;
  rep.checks.push_back(width_check("infeasible-width", 12 + eps1 + eps2, rmin, rmax));
  rep.checks.push_back(overlap_check("infeasible-overlap", B, eps1, phi));
  rep.checks.push_back(width_check("feasible-width", 12 - 24 / b2 + eps1 + eps2, r4, r2));
  rep.checks.push_back(overlap_check("feasible-overlap", B, eps1, phi));

  {
    const Rational d = 1 / (4 * b2), t = 1 / (8 * b2);
    const Rational X = 4 * r2 * r4;
    const Rational Y = X - 2 * d * (r2 - r4) - d * d;
    const Rational lhs_base = X + t * t - Y;
    auto chk = make_check("bow-saving", lhs_base * lhs_base, 4 * t * t * X);
    if (Y < 0 || lhs_base < 0) chk.holds = false;
    rep.checks.push_back(chk);
  }
  {
    const Rational window = 1 / (4 * b2);
    auto inf = width_check("space-window", 12 + eps1 + 2 * window, rmin, rmax);
    auto fea = width_check("space-window", 12 - 24 / b2 + eps1 + 2 * window, r4, r2);
    ConditionCheck& worst = inf.margin <= fea.margin ? inf : fea;
    worst.detail = "infeasible margin " + to_decimal_string(inf.margin, 6) + ", feasible margin " +
                   to_decimal_string(fea.margin, 6);
    worst.holds = inf.holds && fea.holds;
    rep.checks.push_back(worst);
  }
  {
    // m = 6: r_o = 5r + 12 + 4 sqrt(3r^2/2 + 9r/2) <= 38; m -> inf: r_o -> 3r + 6 + ... >= 6.
    const Rational& r = rmin;
    const Rational room = 26 - 5 * r;
    auto chk = make_check("outer-radius-range", 16 * (Rational(3, 2) * r * r + Rational(9, 2) * r),
                          room > 0 ? Rational(room * room) : Rational(-1));
    const Rational lower_margin = 3 * r;
    chk.detail = "upper margin " + to_decimal_string(chk.margin, 6) + ", lower margin >= " +
                 to_decimal_string(lower_margin, 6);
    chk.holds = chk.holds && lower_margin > 0;
    rep.checks.push_back(chk);
  }
  return rep;
}

Interval extreme_outer_radius(const Rational& r_sep, const Rational& separator_distance,
                              unsigned bits) {
  const Rational c = 2 * r_sep + separator_distance;
  const Rational radicand = 6 * c * r_sep + 12 * r_sep * r_sep;
  return Interval(c + 3 * r_sep) + sqrt(Interval(radicand), bits);
}

const char* to_string(Mode m) { return m == Mode::Faithful ? "faithful" : "demonstration"; }

Rational gap_count_lower_bound(std::int64_t B) {
  const Rational b(B), b2 = b * b;
  const Rational rmin = r_min(B);
  const Rational pi_upper(355, 113);
  return pi_upper / 6 * (1 / (8 * b2) + 2 * b2 * (7 + rmin) * (7 + rmin) - rmin + 39);
}

std::int64_t faithful_gap_count(std::int64_t B) {
  const Rational bound = gap_count_lower_bound(B);
  std::int64_t m = 8;
  while (Rational(m) < bound) {
    if (m > (std::int64_t{1} << 61)) throw InputError("gap count bound overflows 64 bits");
    m *= 2;
  }
  return m;
}

namespace {

unsigned log2_exact(std::int64_t m) {
  if (m < 8 || (m & (m - 1)) != 0) {
    throw InputError("gap count m = " + std::to_string(m) + " must be a power of two >= 8");
  }
  unsigned p = 0;
  while ((std::int64_t{1} << p) < m) ++p;
  return p;
}

Interval outer_radius_enclosure(const Rational& r, const Interval& s, unsigned bits) {
  const unsigned work = bits + 16;
  const Interval one(1);
  const Interval radicand = round_out(Interval(2 * r * r + 6 * r) * (one - s * s), work);
  const Interval root = sqrt(radicand, work);
  const Interval num = round_out(Interval(r) * s - Interval(3 * r + 6) - Interval(2) * root, work);
  return round_out(num / (s - one), work);
}

}  // namespace

OuterCentralRadii compute_outer_central_radii(std::int64_t B, std::int64_t m, const Rational& eps3,
                                              const Rational& eps4, unsigned max_bits) {
  const unsigned p = log2_exact(m);
  if (eps3 <= 0 || eps4 <= 0) throw InputError("eps3 and eps4 must be positive");
  const Rational r = r_min(B);

  OuterCentralRadii out;
  unsigned bits = 64;
  auto fail = [&]() {
    throw GeometryError("requested radius widths need more than " + std::to_string(max_bits) +
                        " bits of precision");
  };
  while (true) {
    out.sine = sin_pi_over_pow2(p, bits + 2 * p + 20);
    out.outer_exact = outer_radius_enclosure(r, out.sine, bits);
    if (out.outer_exact.width() <= eps3 / 4) break;
    bits *= 2;
    if (bits > max_bits) fail();
  }
  out.outer = Interval(out.outer_exact.hi + eps3 / 8, out.outer_exact.lo + eps3);
  out.outer_value = out.outer.mid();
  while (true) {
    const Interval v(out.outer_value);
    out.center_exact = round_out(v / out.sine - v, bits + 16);
    if (out.center_exact.width() <= eps4 / 4) break;
    bits *= 2;
    if (bits > max_bits) fail();
    out.sine = sin_pi_over_pow2(p, bits + 2 * p + 20);
  }
  out.center = Interval(out.center_exact.hi + eps4 / 8, out.center_exact.lo + eps4);
  out.center_value = out.center.mid();
  out.bits = bits;
  if (out.outer.lo < 6 || out.outer.hi > 38) {
    throw GeometryError("outer radius enclosure leaves [6, 38]");
  }
  return out;
}

Graph StarReductionInstance::graph() const {
  Graph g;
  g.add_vertex(center_id());
  g.set_weight(center_id(), to_double(center));
  auto add = [&](const VertexId& id, const Rational& w) {
    g.add_vertex(id);
    g.add_edge(center_id(), id);
    g.set_weight(id, to_double(w));
  };
  const auto mm = static_cast<std::size_t>(params.m);
  for (std::size_t j = 0; j < mm; ++j) add(outer_id(j), outer);
  for (std::size_t i = 0; i < inputs.size(); ++i) add(input_id(i), inputs[i]);
  for (std::size_t j = 0; j < 2 * mm; ++j) add(separator_id(j), separator);
  return g;
}

std::map<VertexId, Rational> StarReductionInstance::exact_weights() const {
  std::map<VertexId, Rational> w;
  w[center_id()] = center;
  const auto mm = static_cast<std::size_t>(params.m);
  for (std::size_t j = 0; j < mm; ++j) w[outer_id(j)] = outer;
  for (std::size_t i = 0; i < inputs.size(); ++i) w[input_id(i)] = inputs[i];
  for (std::size_t j = 0; j < 2 * mm; ++j) w[separator_id(j)] = separator;
  return w;
}

StarReductionInstance build_star_instance(const ThreePartitionInstance& a,
                                          const ReductionParams& params) {
  validate_instance(a);
  const auto n = static_cast<std::int64_t>(a.n());
  const std::int64_t Bp = 180 * a.B;
  StarReductionInstance inst;
  inst.source = a;
  inst.params = params;
  log2_exact(params.m);
  if (params.m < n) {
    throw InputError("gap count m = " + std::to_string(params.m) + " is smaller than n = " +
                     std::to_string(n));
  }
  if (params.mode == Mode::Faithful) {
    if (n <= 6) throw InputError("faithful mode needs n > 6");
    const std::int64_t need = faithful_gap_count(Bp);
    if (params.m < need) {
      throw InputError("faithful mode needs m >= " + std::to_string(need) +
                       "; use Demonstration mode or report-only");
    }
    if (params.m > kMaterializeLimit) {
      throw InputError("m = " + std::to_string(params.m) +
                       " is too large to materialize; use Demonstration mode or report-only");
    }
  } else {
    inst.caveats.push_back("demonstration mode: m = " + std::to_string(params.m) +
                           " is below the gap count that keeps every gap shallow, so gaps may "
                           "admit triples that a faithful instance would reject");
  }
  inst.padded = pad_instance(a, params.m);
  const Rational b(Bp);
  if (!inst.params.eps3) inst.params.eps3 = 1 / (16 * b * b);
  if (!inst.params.eps4) inst.params.eps4 = 1 / (128 * b * b);
  inst.radii = compute_outer_central_radii(Bp, params.m, *inst.params.eps3, *inst.params.eps4);
  inst.center = inst.radii.center_value;
  inst.outer = inst.radii.outer_value;
  inst.separator = r_min(Bp);
  for (auto x : inst.padded.A) inst.inputs.push_back(radius_fn(x, Bp));
  return inst;
}

namespace {

Json interval_json(const Interval& iv) {
  return Json::array({to_fraction_string(iv.lo), to_fraction_string(iv.hi)});
}

ThreePartitionInstance instance_field(const Json& j, const std::string& name) {
  if (!j.contains(name) || !j.at(name).is_object()) {
    throw InputError("field 'reduction." + name + "': missing");
  }
  const Json& s = j.at(name);
  ThreePartitionInstance out;
  try {
    out.A = s.at("A").get<std::vector<std::int64_t>>();
    out.B = s.at("B").get<std::int64_t>();
  } catch (const Json::exception& e) {
    throw InputError("field 'reduction." + name + "': " + e.what());
  }
  return out;
}

}  // namespace

Json instance_to_json(const StarReductionInstance& inst) {
  const Graph g = inst.graph();
  Json j = graph_to_json(g);
  Json red;
  red["source"] = {{"A", inst.source.A}, {"B", inst.source.B}};
  red["padded"] = {{"A", inst.padded.A}, {"B", inst.padded.B}};
  red["m"] = inst.params.m;
  red["mode"] = to_string(inst.params.mode);
  red["eps3"] = to_fraction_string(*inst.params.eps3);
  red["eps4"] = to_fraction_string(*inst.params.eps4);
  Json exact = Json::object(), dec = Json::object();
  for (const auto& [id, w] : inst.exact_weights()) {
    exact[id] = to_fraction_string(w);
    dec[id] = to_decimal_string(w, 40);
  }
  red["exactWeights"] = exact;
  red["decimalWeights"] = dec;
  red["outerEnclosure"] = interval_json(inst.radii.outer);
  red["centerEnclosure"] = interval_json(inst.radii.center);
  red["sine"] = interval_json(inst.radii.sine);
  red["bits"] = inst.radii.bits;
  red["caveats"] = inst.caveats;
  j["reduction"] = red;
  return j;
}

StarReductionInstance instance_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("reduction")) {
    throw InputError("field 'reduction': missing (not a reduction instance)");
  }
  const Json& red = j.at("reduction");
  ReductionParams params;
  try {
    params.m = red.at("m").get<std::int64_t>();
    const std::string mode = red.at("mode").get<std::string>();
    if (mode == "faithful") {
      params.mode = Mode::Faithful;
    } else if (mode == "demonstration") {
      params.mode = Mode::Demonstration;
    } else {
      throw InputError("field 'reduction.mode': unknown mode '" + mode + "'");
    }
    params.eps3 = parse_fraction(red.at("eps3").get<std::string>());
    params.eps4 = parse_fraction(red.at("eps4").get<std::string>());
  } catch (const Json::exception& e) {
    throw InputError(std::string("field 'reduction': ") + e.what());
  }
  StarReductionInstance inst = build_star_instance(instance_field(red, "source"), params);
  if (!red.contains("exactWeights") || !red.at("exactWeights").is_object()) {
    throw InputError("field 'reduction.exactWeights': missing");
  }
  const Json& exact = red.at("exactWeights");
  for (const auto& [id, w] : inst.exact_weights()) {
    if (!exact.contains(id) || !exact.at(id).is_string() ||
        parse_fraction(exact.at(id).get<std::string>()) != w) {
      throw InputError("field 'reduction.exactWeights." + id +
                       "': does not match the instance rebuilt from its source");
    }
  }
  if (instance_field(red, "padded").A != inst.padded.A) {
    throw InputError("field 'reduction.padded': does not match the padded source");
  }
  return inst;
}

double triple_width(double r1, double r2, double r3) {
  return r1 + r3 + 2.0 * std::sqrt(r1 * r2) + 2.0 * std::sqrt(r2 * r3);
}

EmbeddedSolution embed_solution(const StarReductionInstance& inst,
                                const std::vector<Triple>& partition) {
  const auto m = static_cast<std::size_t>(inst.params.m);
  const std::size_t count = inst.padded.A.size();
  if (partition.size() != m) {
    throw InputError("partition has " + std::to_string(partition.size()) + " triples, expected m = " +
                     std::to_string(m) + " (every gap needs one triple)");
  }
  std::set<std::size_t> seen;
  for (const auto& t : partition) {
    for (std::size_t i : t) {
      if (i >= count) throw InputError("partition index " + std::to_string(i) + " out of range");
      if (!seen.insert(i).second) {
        throw InputError("partition uses index " + std::to_string(i) + " twice");
      }
    }
  }

  const std::int64_t Bp = inst.padded.B;
  const double bp = static_cast<double>(Bp);
  const double window = 12.0 + 1.0 / (4.0 * bp * bp);
  const double Rc = to_double(inst.center), Ro = to_double(inst.outer);
  const double rs = to_double(inst.separator);
  // Lower bound on the spacing between neighboring outer disks.
  const Rational eps5 = 2 * (inst.center - inst.radii.center_exact.hi) * inst.radii.sine.lo;
  const double tol = std::min(kDefaultTolerance, to_double(eps5) / 16.0);
  const double gap = 2.0 * tol;

  EmbeddedSolution out;
  std::vector<Disk> disks;
  disks.push_back({StarReductionInstance::center_id(), 0.0, 0.0, Rc});
  auto place = [&](const VertexId& id, double angle, double r) {
    disks.push_back({id, (Rc + r) * std::cos(angle), (Rc + r) * std::sin(angle), r});
  };
  const double step = 2.0 * M_PI / static_cast<double>(m);
  for (std::size_t j = 0; j < m; ++j) {
    place(StarReductionInstance::outer_id(j), step * static_cast<double>(j), Ro);
  }

  for (std::size_t j = 0; j < m; ++j) {
    GapPlacement gp;
    std::array<std::size_t, 3> t = partition[j];
    std::sort(t.begin(), t.end());
    gp.sum = inst.padded.A[t[0]] + inst.padded.A[t[1]] + inst.padded.A[t[2]];
    double best = INFINITY;
    std::array<std::size_t, 3> order = t;
    do {
      const double w = triple_width(to_double(inst.inputs[t[0]]), to_double(inst.inputs[t[1]]),
                                    to_double(inst.inputs[t[2]]));
      if (w < best) {
        best = w;
        order = t;
      }
    } while (std::next_permutation(t.begin(), t.end()));
    gp.triple = order;
    gp.base_residual = window - best;
    if (gp.base_residual < 0.0) {
      throw EmbedFitError("triple in gap " + std::to_string(j) + " (sum " + std::to_string(gp.sum) +
                              ", bound " + std::to_string(Bp) + ") does not fit: residual " +
                              std::to_string(gp.base_residual),
                          j, gp.base_residual);
    }

    const double r[3] = {to_double(inst.inputs[order[0]]), to_double(inst.inputs[order[1]]),
                         to_double(inst.inputs[order[2]])};
    const double seq[7] = {Ro, rs, r[0], r[1], r[2], rs, Ro};
    double need = 0.0;
    for (int k = 0; k < 6; ++k) need += leaf_separation_angle(Rc, seq[k], seq[k + 1], gap);
    gp.angle_residual = step - need;
    if (gp.angle_residual < 0.0) {
      throw EmbedFitError("demonstration parameters too tight: gap " + std::to_string(j) +
                              " is short by " + std::to_string(-gp.angle_residual) + " rad",
                          j, gp.angle_residual);
    }
    const double slack = gp.angle_residual / 6.0;
    const VertexId ids[5] = {StarReductionInstance::separator_id(2 * j),
                             StarReductionInstance::input_id(order[0]),
                             StarReductionInstance::input_id(order[1]),
                             StarReductionInstance::input_id(order[2]),
                             StarReductionInstance::separator_id(2 * j + 1)};
    double angle = step * static_cast<double>(j);
    for (int k = 0; k < 5; ++k) {
      angle += leaf_separation_angle(Rc, seq[k], seq[k + 1], gap) + slack;
      place(ids[k], angle, seq[k + 1]);
    }
    out.gaps.push_back(gp);
  }

  out.packing = Packing(std::move(disks), tol);
  const Graph g = inst.graph();
  const auto report = validate_dcr(out.packing, g, &g.weights());
  if (!report.valid) {
    const Violation& v = report.violations.front();
    throw GeometryError(std::string("embedded solution failed validation: ") + to_string(v.kind) +
                        " between '" + v.a + "' and '" + v.b + "'");
  }
  return out;
}

}  // namespace diskpack::reduction
