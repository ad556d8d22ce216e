#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "toroidal/equivariance.hpp"
#include "toroidal/order_function.hpp"
#include "toroidal/subdivision.hpp"

namespace toroidal {

enum class Mode { canonical, plain };

std::string to_string(Mode mode);
Mode parse_mode(const std::string& text);

// Every ray carries a label; a cone's frame lists its rays by increasing
// label. Rays of the barycentric subdivision are labelled by the dimension of
// the original cone they come from, centers of round r by dim + r (plain
// mode: input rays by id, round r centers by ray_count - 1 + r). Labels are
// global, so frames agree on shared faces and the group preserves them.
using RayLabels = std::vector<std::size_t>;

std::vector<RayId> frame(const Cone& cone, const RayLabels& labels);

RationalVector canonical_coordinates(const Complex& complex, const LatticeVector& w, const Cone& host,
                                     const RayLabels& labels);

struct Selection {
  RationalVector coordinates;
  std::vector<Center> centers;  // every (w, maximal host) attaining the minimum
};

// Lexicographically least canonical coordinates over the parallelepiped
// points of all non-smooth maximal cones. Throws "nothing to select".
Selection select_centers(const Complex& complex, const RayLabels& labels, const GroupAction& action);

Integer total_index(const Complex& complex);
Integer max_index(const Complex& complex);

struct HostTrace {
  Cone host;
  Integer index;
  Integer child_max;
};

struct RoundTrace {
  std::size_t round = 0;
  Integer max_index;    // before the round
  Integer total_index;  // before the round
  std::vector<HostTrace> hosts;
};

struct StageRecord {
  enum class Kind { barycentric, centered };
  Kind kind = Kind::centered;
  std::size_t pass = 0;  // dimension of the original cones, or round number
  std::vector<Center> centers;
  Integer scale;
  std::vector<Integer> drops;
  Integer multiplier;  // of the composite so far; 1 on the first stage
  std::vector<std::pair<RayId, LatticeVector>> new_rays;
  std::vector<Integer> values;  // stage order function on the stage output
  std::uint64_t output_hash = 0;

  bool operator==(const StageRecord& other) const;
};

using Flags = std::vector<std::pair<std::string, bool>>;

struct ResolutionCertificate {
  std::uint64_t input_hash = 0;
  Mode mode = Mode::canonical;
  std::size_t group_order = 1;
  Index rank = 0;
  std::vector<StageRecord> stages;
  std::vector<Integer> composite;
  std::vector<RoundTrace> trace;
  std::vector<LatticeVector> final_rays;
  std::vector<Cone> final_cones;  // maximal
  Flags flags;

  Complex final_complex() const;
  bool all_flags() const;
  bool operator==(const ResolutionCertificate& other) const;
};

struct Resolution {
  ResolutionCertificate certificate;
  Complex final_complex;
  OrderFunction composite;
  std::vector<OrderFunction> stage_functions;
  RayLabels labels;
};

std::uint64_t input_hash(const Complex& complex, const std::vector<IntMatrix>& elements);

// Flags recomputed from scratch, in file order: simplicial, smooth,
// subdivision-of-input, equivariant, g-strict, order-axioms,
// linearity-domains, g-invariant.
Flags certificate_flags(const Complex& input, const std::vector<IntMatrix>& elements, const Complex& final_complex,
                        const OrderFunction& composite);

Resolution resolve_equivariant(const Complex& input, const std::vector<IntMatrix>& elements, Mode mode);

// Children of `host` in the subdivided complex and the largest of their indices.
Integer child_max_index(const Complex& before, const Cone& host, const Complex& after);

}  // namespace toroidal
