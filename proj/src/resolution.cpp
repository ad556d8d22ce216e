#include "toroidal/resolution.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "toroidal/lattice.hpp"
#include "toroidal/linalg.hpp"

namespace toroidal {

std::string to_string(Mode mode) { return mode == Mode::canonical ? "canonical" : "plain"; }

Mode parse_mode(const std::string& text) {
  if (text == "canonical") return Mode::canonical;
  if (text == "plain") return Mode::plain;
  throw Error("unknown mode '" + text + "'");
}

std::vector<RayId> frame(const Cone& cone, const RayLabels& labels) {
  std::vector<RayId> ordered = cone.rays;
  std::stable_sort(ordered.begin(), ordered.end(),
                   [&](RayId a, RayId b) { return labels.at(a) < labels.at(b); });
  for (std::size_t i = 1; i < ordered.size(); ++i)
    if (labels[ordered[i]] == labels[ordered[i - 1]])
      throw Error("frame inconsistency: rays " + std::to_string(ordered[i - 1]) + " and " +
                  std::to_string(ordered[i]) + " of cone " + to_string(cone) + " share label " +
                  std::to_string(labels[ordered[i]]));
  return ordered;
}

namespace {

IntMatrix framed_generators(const Complex& complex, const std::vector<RayId>& ordered) {
  IntMatrix gens(complex.ambient_rank(), static_cast<Index>(ordered.size()));
  for (std::size_t j = 0; j < ordered.size(); ++j) gens.col(static_cast<Index>(j)) = complex.ray(ordered[j]);
  return gens;
}

}  // namespace

RationalVector canonical_coordinates(const Complex& complex, const LatticeVector& w, const Cone& host,
                                     const RayLabels& labels) {
  if (!complex.is_simplicial(host)) throw Error("not simplicial");
  const auto coords = coordinates_in(framed_generators(complex, frame(host, labels)), to_rational(w));
  if (!coords || std::any_of(coords->begin(), coords->end(), [](const Rational& c) { return c < 0; }))
    throw Error("point (" + to_string(w) + ") outside host " + to_string(host));
  return *coords;
}

Selection select_centers(const Complex& complex, const RayLabels& labels, const GroupAction& action) {
  Selection best;
  bool found = false;
  for (const auto& cone : complex.maximal_cones()) {
    const auto ordered = frame(cone, labels);
    const IntMatrix gens = framed_generators(complex, ordered);
    if (rank(gens) != gens.cols()) throw Error("not simplicial");
    for (const auto& pp : parallelepiped_points(gens)) {
      if (found) {
        if (lex_less(best.coordinates, pp.coordinates)) continue;
        if (lex_less(pp.coordinates, best.coordinates)) best.centers.clear();
      }
      best.coordinates = pp.coordinates;
      best.centers.push_back({pp.point, cone});
      found = true;
    }
  }
  if (!found) throw Error("nothing to select");

  // The selected set must be carried to itself by the group.
  std::vector<LatticeVector> points;
  for (const auto& c : best.centers) points.push_back(c.generator);
  auto has = [&](const LatticeVector& p) {
    return std::any_of(points.begin(), points.end(), [&](const LatticeVector& q) { return equal(p, q); });
  };
  for (const auto& g : action.elements)
    for (const auto& p : points)
      if (!has(g * p)) throw Error("selection is not G-stable at (" + to_string(p) + ")");
  return best;
}

Integer total_index(const Complex& complex) {
  Integer total = 0;
  for (const auto& cone : complex.maximal_cones()) total += cone_index(complex.generators(cone));
  return total;
}

Integer max_index(const Complex& complex) {
  Integer best = 0;
  for (const auto& cone : complex.maximal_cones()) best = std::max(best, cone_index(complex.generators(cone)));
  return best;
}

Integer child_max_index(const Complex& before, const Cone& host, const Complex& after) {
  const auto dual = before.dual(host);
  Integer best = 0;
  for (const auto& cone : after.maximal_cones()) {
    bool inside = true;
    for (RayId id : cone.rays)
      if (!contains(dual, to_rational(after.ray(id)))) {
        inside = false;
        break;
      }
    if (inside && after.dimension(cone) == dual.dimension)
      best = std::max(best, cone_index(after.generators(cone)));
  }
  return best;
}

bool StageRecord::operator==(const StageRecord& o) const {
  if (kind != o.kind || pass != o.pass || scale != o.scale || drops != o.drops || multiplier != o.multiplier ||
      values != o.values || output_hash != o.output_hash || centers.size() != o.centers.size() ||
      new_rays.size() != o.new_rays.size())
    return false;
  for (std::size_t i = 0; i < centers.size(); ++i)
    if (!equal(centers[i].generator, o.centers[i].generator) || centers[i].host != o.centers[i].host) return false;
  for (std::size_t i = 0; i < new_rays.size(); ++i)
    if (new_rays[i].first != o.new_rays[i].first || !equal(new_rays[i].second, o.new_rays[i].second)) return false;
  return true;
}

Complex ResolutionCertificate::final_complex() const { return Complex(rank, final_rays, final_cones); }

bool ResolutionCertificate::all_flags() const {
  return !flags.empty() && std::all_of(flags.begin(), flags.end(), [](const auto& f) { return f.second; });
}

bool ResolutionCertificate::operator==(const ResolutionCertificate& o) const {
  if (input_hash != o.input_hash || mode != o.mode || group_order != o.group_order || rank != o.rank ||
      stages != o.stages || composite != o.composite || final_cones != o.final_cones || flags != o.flags ||
      final_rays.size() != o.final_rays.size() || trace.size() != o.trace.size())
    return false;
  for (std::size_t i = 0; i < final_rays.size(); ++i)
    if (!equal(final_rays[i], o.final_rays[i])) return false;
  for (std::size_t i = 0; i < trace.size(); ++i) {
    const auto& a = trace[i];
    const auto& b = o.trace[i];
    if (a.round != b.round || a.max_index != b.max_index || a.total_index != b.total_index ||
        a.hosts.size() != b.hosts.size())
      return false;
    for (std::size_t h = 0; h < a.hosts.size(); ++h)
      if (a.hosts[h].host != b.hosts[h].host || a.hosts[h].index != b.hosts[h].index ||
          a.hosts[h].child_max != b.hosts[h].child_max)
        return false;
  }
  return true;
}

std::uint64_t input_hash(const Complex& complex, const std::vector<IntMatrix>& elements) {
  std::ostringstream text;
  text << canonical_text(complex) << "group " << elements.size() << '\n';
  for (const auto& g : elements) {
    for (Index i = 0; i < g.rows(); ++i) text << to_string(LatticeVector(g.row(i).transpose())) << " ;";
    text << '\n';
  }
  return fnv1a(text.str());
}

Flags certificate_flags(const Complex& input, const std::vector<IntMatrix>& elements, const Complex& final_complex,
                        const OrderFunction& composite) {
  Flags flags;
  flags.emplace_back("simplicial", is_simplicial(final_complex));
  flags.emplace_back("smooth", flags.back().second && is_smooth(final_complex));
  bool subdivision = false;
  try {
    subdivision = is_subdivision(final_complex, input).holds;
  } catch (const Error&) {
  }
  flags.emplace_back("subdivision-of-input", subdivision);
  flags.emplace_back("equivariant", is_equivariant_subdivision(final_complex, input, elements));

  const auto action_report = verify_action(final_complex, elements);
  bool strict = false;
  bool invariant = false;
  if (action_report.valid) {
    const GroupAction action{elements, action_report.ray_permutations};
    strict = check_g_strict(final_complex, action).passed;
    invariant = composite.ray_values.size() == final_complex.ray_count() && is_invariant(composite, action);
  }
  flags.emplace_back("g-strict", strict);

  bool axioms = false;
  bool domains = false;
  const bool matches = composite.subdivision == final_complex && composite.base == input;
  if (matches) {
    try {
      const auto report = verify_order_axioms(composite);
      axioms = report.order_function() && report.strictly_convex && report.positive;
      domains = linearity_domains(composite) == final_complex;
    } catch (const Error&) {
    }
  }
  flags.emplace_back("order-axioms", axioms);
  flags.emplace_back("linearity-domains", domains);
  flags.emplace_back("g-invariant", invariant);
  return flags;
}

namespace {

class Pipeline {
 public:
  Pipeline(const Complex& input, const std::vector<IntMatrix>& elements, Mode mode)
      : input_(input), elements_(elements), current_(input) {
    auto& c = result_.certificate;
    c.input_hash = input_hash(input, elements);
    c.mode = mode;
    c.group_order = elements.size();
    c.rank = input.ambient_rank();
  }

  void stage(StageRecord::Kind kind, std::size_t pass, std::vector<Center> centers) {
    std::vector<LatticeVector> points;
    for (const auto& c : centers) points.push_back(c.generator);
    auto star = minimal_star_order_function(current_, points);
    const Complex& next = star.ord.subdivision;

    StageRecord record;
    record.kind = kind;
    record.pass = pass;
    record.centers = std::move(centers);
    record.scale = star.scale;
    record.drops = star.drops;
    if (composite_) {
      auto comp = compose_order_functions(*composite_, star.ord);
      record.multiplier = comp.multiplier;
      composite_ = std::move(comp.ord);
    } else {
      record.multiplier = 1;
      composite_ = star.ord;
    }
    for (RayId id = current_.ray_count(); id < next.ray_count(); ++id) record.new_rays.emplace_back(id, next.ray(id));
    record.values = star.ord.ray_values;
    record.output_hash = content_hash(next);
    result_.certificate.stages.push_back(std::move(record));
    result_.stage_functions.push_back(star.ord);
    current_ = next;
  }

  void barycentric() {
    for (const auto& pass : barycentric_passes(input_)) {
      const auto dim = static_cast<std::size_t>(input_.dimension(pass.front().host));
      stage(StageRecord::Kind::barycentric, dim, pass);
    }
    for (const auto& [id, cone] : barycentric_edge_bijection(input_, current_)) {
      if (labels_.size() <= id) labels_.resize(id + 1);
      labels_[id] = static_cast<std::size_t>(input_.dimension(cone));
    }
    next_label_ = static_cast<std::size_t>(input_.dimension()) + 1;
  }

  void plain_labels() {
    labels_.resize(input_.ray_count());
    for (RayId id = 0; id < input_.ray_count(); ++id) labels_[id] = id;
    next_label_ = input_.ray_count();
  }

  void centered_rounds() {
    for (std::size_t round = 1; !is_smooth(current_); ++round) {
      const auto action = bind_action(current_, elements_);
      const auto selection = select_centers(current_, labels_, action);

      // Whole orbits are taken greedily; an orbit colliding with one already
      // chosen waits for a later round.
      std::vector<LatticeVector> chosen;
      for (const auto& candidate : selection.centers) {
        const auto orb = orbit(elements_, candidate.generator);
        if (std::any_of(chosen.begin(), chosen.end(), [&](const auto& p) { return equal(p, orb.front()); }))
          continue;
        auto trial = chosen;
        trial.insert(trial.end(), orb.begin(), orb.end());
        if (simultaneous_safe(current_, trial)) chosen = std::move(trial);
      }
      if (chosen.empty()) throw Error("orbit not simultaneous-safe");
      std::sort(chosen.begin(), chosen.end(), [](const auto& a, const auto& b) { return lex_less(a, b); });

      RoundTrace trace;
      trace.round = round;
      trace.max_index = max_index(current_);
      trace.total_index = total_index(current_);
      std::vector<Cone> hosts;
      for (const auto& cone : current_.maximal_cones()) {
        const auto dual = current_.dual(cone);
        if (std::any_of(chosen.begin(), chosen.end(), [&](const auto& p) { return contains(dual, to_rational(p)); }))
          hosts.push_back(cone);
      }

      std::vector<Center> centers;
      for (const auto& p : chosen) centers.push_back({p, *current_.carrier(to_rational(p))});
      const Complex before = current_;
      stage(StageRecord::Kind::centered, round, std::move(centers));

      for (const auto& host : hosts) {
        HostTrace h{host, cone_index(before.generators(host)), child_max_index(before, host, current_)};
        if (h.child_max >= h.index)
          throw Error("termination measure did not decrease on cone " + to_string(host) + " in round " +
                      std::to_string(round));
        trace.hosts.push_back(std::move(h));
      }
      result_.certificate.trace.push_back(std::move(trace));
      labels_.resize(current_.ray_count(), next_label_);
      ++next_label_;
    }
  }

  Resolution finish() {
    if (!composite_) composite_ = identity_order_function(input_);
    auto& c = result_.certificate;
    c.composite = composite_->ray_values;
    c.final_rays = current_.rays();
    c.final_cones = current_.maximal_cones();
    c.flags = certificate_flags(input_, elements_, current_, *composite_);
    result_.final_complex = current_;
    result_.composite = *composite_;
    result_.labels = labels_;
    return std::move(result_);
  }

 private:
  const Complex& input_;
  const std::vector<IntMatrix>& elements_;
  Complex current_;
  std::optional<OrderFunction> composite_;
  RayLabels labels_;
  std::size_t next_label_ = 0;
  Resolution result_;
};

}  // namespace

Resolution resolve_equivariant(const Complex& input, const std::vector<IntMatrix>& elements, Mode mode) {
  const auto validation = validate_complex(input);
  if (!validation.ok()) throw Error("invalid complex: " + validation.violations.front());
  bind_action(input, elements);
  if (mode == Mode::plain) {
    if (elements.size() != 1) throw Error("plain mode requires the trivial group");
    if (!is_simplicial(input)) throw Error("not simplicial");
  }
  Pipeline pipeline(input, elements, mode);
  if (mode == Mode::canonical)
    pipeline.barycentric();
  else
    pipeline.plain_labels();
  pipeline.centered_rounds();
  return pipeline.finish();
}

}  // namespace toroidal
