#include "toroidal/certificate.hpp"

#include <algorithm>

#include "toroidal/lattice.hpp"

namespace toroidal {

namespace {

std::string joined(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? "; " : "") + items[i];
  return out;
}

bool same_centers(const std::vector<Center>& a, const std::vector<Center>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].generator.size() != b[i].generator.size() || !equal(a[i].generator, b[i].generator) ||
        a[i].host != b[i].host)
      return false;
  return true;
}

class Verifier {
 public:
  Verifier(const ResolutionCertificate& cert, const Complex& input, const std::vector<IntMatrix>& elements)
      : cert_(cert), input_(input), elements_(elements), current_(input) {}

  VerifyReport run() {
    if (!header()) return std::move(report_);
    if (!stages()) return std::move(report_);
    composite();
    trace();
    final_complex();
    flags();
    return std::move(report_);
  }

 private:
  void fail(const std::string& check, const std::string& detail) { report_.violations.push_back(check + ": " + detail); }

  bool header() {
    if (cert_.input_hash != input_hash(input_, elements_)) {
      fail("input", "certificate/input mismatch");
      return false;
    }
    if (cert_.rank != input_.ambient_rank())
      fail("header", "rank " + std::to_string(cert_.rank) + " differs from input rank " +
                         std::to_string(input_.ambient_rank()));
    if (cert_.group_order != elements_.size())
      fail("header", "group order " + std::to_string(cert_.group_order) + " differs from " +
                         std::to_string(elements_.size()));
    if (cert_.mode == Mode::plain && elements_.size() != 1) fail("mode", "plain mode requires the trivial group");
    auto bad_length = [&](const LatticeVector& v) { return v.size() != input_.ambient_rank(); };
    for (const auto& s : cert_.stages) {
      for (const auto& c : s.centers)
        if (bad_length(c.generator)) fail("header", "center (" + to_string(c.generator) + ") has the wrong length");
      for (const auto& [id, r] : s.new_rays)
        if (bad_length(r)) fail("header", "new ray " + std::to_string(id) + " has the wrong length");
    }
    for (const auto& r : cert_.final_rays)
      if (bad_length(r)) fail("header", "final ray (" + to_string(r) + ") has the wrong length");
    const auto validation = validate_complex(input_);
    if (!validation.ok()) fail("input", "invalid complex: " + validation.violations.front());
    if (!verify_action(input_, elements_).valid) fail("input", "group does not act on the input");
    return report_.ok();
  }

  bool stages() {
    const auto passes = cert_.mode == Mode::canonical ? barycentric_passes(input_) : std::vector<std::vector<Center>>{};
    std::size_t index = 0;
    std::size_t round = 0;
    for (const auto& s : cert_.stages) {
      const std::string name = "stage " + std::to_string(index + 1);
      if (index < passes.size()) {
        const auto dim = static_cast<std::size_t>(input_.dimension(passes[index].front().host));
        if (s.kind != StageRecord::Kind::barycentric || s.pass != dim) {
          fail("structure", name + " should be the barycentric pass of dimension " + std::to_string(dim));
          return false;
        }
        if (!same_centers(s.centers, passes[index])) {
          fail("centers", name + " does not star at the barycenters of the original cones");
          return false;
        }
      } else {
        ++round;
        if (s.kind != StageRecord::Kind::centered || s.pass != round) {
          fail("structure", name + " should be centered round " + std::to_string(round));
          return false;
        }
        if (!centered_centers(s, name)) return false;
      }
      if (!replay(s, name)) return false;
      ++index;
    }
    if (index < passes.size()) {
      fail("structure", "missing barycentric passes");
      return false;
    }
    rounds_ = round;
    return true;
  }

  bool centered_centers(const StageRecord& s, const std::string& name) {
    std::vector<LatticeVector> points;
    for (const auto& c : s.centers) points.push_back(c.generator);
    for (const auto& g : elements_)
      for (const auto& p : points) {
        const LatticeVector img = g * p;
        if (std::none_of(points.begin(), points.end(), [&](const auto& q) { return equal(q, img); })) {
          fail("equivariance", name + " center set is not closed under the group at (" + to_string(p) + ")");
          return false;
        }
      }
    if (!simultaneous_safe(current_, points)) {
      fail("equivariance", name + " centers share a cone");
      return false;
    }
    return true;
  }

  bool replay(const StageRecord& s, const std::string& name) {
    std::vector<LatticeVector> points;
    for (const auto& c : s.centers) {
      if (!equal(c.generator, primitive<Integer>(c.generator))) {
        fail("centers", name + " center (" + to_string(c.generator) + ") is not primitive");
        return false;
      }
      const auto carrier = current_.carrier(to_rational(c.generator));
      if (!carrier || *carrier != c.host) {
        fail("centers", name + " center (" + to_string(c.generator) + ") does not lie inside host " +
                            to_string(c.host));
        return false;
      }
      points.push_back(c.generator);
    }
    if (points.empty()) {
      fail("centers", name + " has no centers");
      return false;
    }

    StarOrderFunction star;
    try {
      star = minimal_star_order_function(current_, points);
    } catch (const Error& e) {
      fail("centers", name + ": " + e.what());
      return false;
    }
    const Complex& next = star.ord.subdivision;

    bool good = true;
    std::vector<std::pair<RayId, LatticeVector>> new_rays;
    for (RayId id = current_.ray_count(); id < next.ray_count(); ++id) new_rays.emplace_back(id, next.ray(id));
    bool rays_match = new_rays.size() == s.new_rays.size();
    for (std::size_t i = 0; rays_match && i < new_rays.size(); ++i)
      rays_match = new_rays[i].first == s.new_rays[i].first && equal(new_rays[i].second, s.new_rays[i].second);
    if (!rays_match) {
      fail("new-rays", name + " recorded new rays differ from the replayed subdivision");
      good = false;
    }
    if (s.output_hash != content_hash(next)) {
      fail("output-hash", name + " recorded " + hex64(s.output_hash) + ", replay gives " + hex64(content_hash(next)));
      good = false;
    }
    if (s.drops != star.drops) {
      fail("drops", name + " recorded drops differ from the least integral drops");
      good = false;
    }
    if (s.scale != star.scale) {
      fail("scale", name + " recorded " + s.scale.str() + ", least valid scale is " + star.scale.str());
      good = false;
    }
    if (s.values.size() != next.ray_count()) {
      fail("stage-values", name + " has " + std::to_string(s.values.size()) + " values for " +
                               std::to_string(next.ray_count()) + " rays");
      return false;
    }
    if (s.values != star.ord.ray_values) {
      const auto axioms = verify_order_axioms({current_, next, s.values});
      if (!axioms.order_function() || !axioms.strictly_convex || !axioms.positive) {
        const auto& v = axioms.violations;
        fail("stage-axioms", name + " " + (v.empty() ? std::string("bends are not strict") : joined(v)));
      } else {
        fail("stage-values", name + " values differ from the scaled order function");
      }
      good = false;
    }
    if (!good) return false;

    if (composite_) {
      try {
        auto comp = compose_order_functions(*composite_, star.ord);
        if (comp.multiplier != s.multiplier) {
          fail("multiplier", name + " recorded " + s.multiplier.str() + ", composition needs " +
                                 comp.multiplier.str());
          return false;
        }
        composite_ = std::move(comp.ord);
      } catch (const Error& e) {
        fail("multiplier", name + ": " + e.what());
        return false;
      }
    } else {
      if (s.multiplier != 1) {
        fail("multiplier", name + " recorded " + s.multiplier.str() + " on the first stage");
        return false;
      }
      composite_ = star.ord;
    }
    history_.push_back(current_);
    current_ = next;
    return true;
  }

  void composite() {
    if (!composite_) composite_ = identity_order_function(input_);
    if (cert_.composite.size() != current_.ray_count()) {
      fail("composite", std::to_string(cert_.composite.size()) + " values for " +
                            std::to_string(current_.ray_count()) + " rays");
      return;
    }
    if (cert_.composite == composite_->ray_values) return;
    const auto axioms = verify_order_axioms({input_, current_, cert_.composite});
    if (!axioms.order_function() || !axioms.strictly_convex || !axioms.positive) {
      const auto& v = axioms.violations;
      fail("composite-axioms", v.empty() ? std::string("bends are not strict") : joined(v));
    } else {
      fail("composite", "recorded values differ from the composed order function");
    }
  }

  void trace() {
    const std::size_t first_round = cert_.stages.size() - rounds_;
    if (cert_.trace.size() != rounds_) {
      fail("trace", std::to_string(cert_.trace.size()) + " rounds recorded, " + std::to_string(rounds_) + " replayed");
      return;
    }
    for (std::size_t r = 0; r < rounds_; ++r) {
      const auto& recorded = cert_.trace[r];
      const Complex& before = history_[first_round + r];
      const Complex& after = r + 1 < rounds_ ? history_[first_round + r + 1] : current_;
      const std::string name = "round " + std::to_string(r + 1);
      if (recorded.round != r + 1) fail("trace", name + " is numbered " + std::to_string(recorded.round));
      if (recorded.max_index != max_index(before)) fail("trace", name + " max index differs");
      if (recorded.total_index != total_index(before)) fail("trace", name + " total index differs");

      std::vector<Cone> hosts;
      for (const auto& cone : before.maximal_cones()) {
        const auto dual = before.dual(cone);
        for (const auto& c : cert_.stages[first_round + r].centers)
          if (contains(dual, to_rational(c.generator))) {
            hosts.push_back(cone);
            break;
          }
      }
      if (hosts.size() != recorded.hosts.size()) {
        fail("trace", name + " lists " + std::to_string(recorded.hosts.size()) + " hosts, replay has " +
                          std::to_string(hosts.size()));
        continue;
      }
      for (std::size_t h = 0; h < hosts.size(); ++h) {
        const Integer index = cone_index(before.generators(hosts[h]));
        const Integer child = child_max_index(before, hosts[h], after);
        const auto& rec = recorded.hosts[h];
        if (rec.host != hosts[h] || rec.index != index || rec.child_max != child)
          fail("trace", name + " host " + to_string(rec.host) + " differs from replay");
        if (child >= index) fail("termination", name + " host " + to_string(hosts[h]) + " did not decrease");
      }
    }
  }

  void final_complex() {
    for (const auto& cone : cert_.final_cones)
      for (RayId id : cone.rays)
        if (id >= cert_.final_rays.size()) {
          fail("final-complex", "cone " + to_string(cone) + " refers to ray " + std::to_string(id) +
                                    " beyond the recorded rays");
          return;
        }
    bool same = cert_.final_rays.size() == current_.ray_count() && cert_.final_cones == current_.maximal_cones();
    for (std::size_t i = 0; same && i < cert_.final_rays.size(); ++i) same = equal(cert_.final_rays[i], current_.ray(i));
    if (!same) fail("final-complex", "recorded final complex differs from the replayed one");
  }

  void flags() {
    const auto computed = certificate_flags(input_, elements_, current_, *composite_);
    for (const auto& [name, value] : computed)
      if (!value) fail(name, "check fails on the replayed result");
    if (cert_.flags.size() != computed.size()) {
      fail("flags", std::to_string(cert_.flags.size()) + " flags recorded, expected " +
                        std::to_string(computed.size()));
      return;
    }
    for (std::size_t i = 0; i < computed.size(); ++i)
      if (cert_.flags[i] != computed[i])
        fail("flags", "recorded " + cert_.flags[i].first + " " + (cert_.flags[i].second ? "1" : "0") +
                          ", recomputed " + computed[i].first + " " + (computed[i].second ? "1" : "0"));
  }

  const ResolutionCertificate& cert_;
  const Complex& input_;
  const std::vector<IntMatrix>& elements_;
  Complex current_;
  std::vector<Complex> history_;
  std::optional<OrderFunction> composite_;
  std::size_t rounds_ = 0;
  VerifyReport report_;
};

}  // namespace

VerifyReport verify_certificate(const ResolutionCertificate& certificate, const Complex& input,
                                const std::vector<IntMatrix>& elements) {
  return Verifier(certificate, input, elements).run();
}

}  // namespace toroidal
