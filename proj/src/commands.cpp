#include "toroidal/commands.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "json.hpp"

#include "toroidal/certificate.hpp"
#include "toroidal/equivariance.hpp"
#include "toroidal/io.hpp"
#include "toroidal/lattice.hpp"
#include "toroidal/resolution.hpp"
#include "toroidal/subdivision.hpp"

namespace toroidal {

namespace {

using nlohmann::json;

// Parse errors exit 2, every other library error exits 1.
int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

struct Loaded {
  Complex complex;
  std::vector<IntMatrix> generators;
  std::vector<IntMatrix> elements;
};

Loaded load(const std::string& path) {
  const FanFile fan = read_fan_file(path);
  Loaded l{fan.complex(), fan.generators, {}};
  l.elements = generate_group(fan.generators, fan.rank, group_cap_from_environment());
  return l;
}

void require_valid(const Loaded& l) {
  const auto report = validate_complex(l.complex);
  if (!report.ok()) throw Error("invalid complex: " + report.violations.front());
  bind_action(l.complex, l.elements);
}

void emit(const std::string& output, const std::string& text, std::ostream& out) {
  if (output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(output);
  if (!file) throw Error("cannot write " + output);
  file << text;
}

}  // namespace

std::size_t group_cap_from_environment() {
  const char* raw = std::getenv("TOROIDAL_GROUP_CAP");
  if (!raw || !*raw) return default_group_cap;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (*end != '\0' || v == 0) throw Error("TOROIDAL_GROUP_CAP must be a positive integer");
  return static_cast<std::size_t>(v);
}

int cmd_validate(const std::string& path, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const FanFile fan = read_fan_file(path);
    const Complex complex = fan.complex();
    auto violations = validate_complex(complex).violations;
    if (!fan.generators.empty()) {
      const auto elements = generate_group(fan.generators, fan.rank, group_cap_from_environment());
      const auto action = verify_action(complex, elements);
      violations.insert(violations.end(), action.violations.begin(), action.violations.end());
    }
    for (const auto& v : violations) out << "violation: " << v << '\n';
    if (!violations.empty()) return 1;
    out << "valid: " << complex.ray_count() << " rays, " << complex.maximal_cones().size() << " maximal cones\n";
    return 0;
  });
}

int cmd_barycentric(const std::string& path, const std::string& output, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Loaded l = load(path);
    require_valid(l);
    emit(output, fan_text(barycentric_subdivision(l.complex), l.generators), out);
    return 0;
  });
}

int cmd_star(const std::string& path, const std::string& center, const std::string& output, std::ostream& out,
             std::ostream& err) {
  return guarded(err, [&] {
    const Loaded l = load(path);
    require_valid(l);
    std::istringstream in(center);
    std::vector<Integer> coords;
    std::string token;
    while (in >> token) {
      if (token.find_first_not_of("-0123456789") != std::string::npos)
        throw ParseError(1, 1, "center coordinate '" + token + "' is not an integer");
      coords.emplace_back(token);
    }
    const LatticeVector c = from_std(coords);
    if (c.size() != l.complex.ambient_rank()) throw Error("center has wrong length");
    emit(output, fan_text(star_subdivide(l.complex, c), l.generators), out);
    return 0;
  });
}

int cmd_resolve(const std::string& path, const std::string& mode, const std::string& output, std::ostream& out,
                std::ostream& err) {
  return guarded(err, [&] {
    const Loaded l = load(path);
    const auto result = resolve_equivariant(l.complex, l.elements, parse_mode(mode));
    const auto& cert = result.certificate;
    emit(output, certificate_text(cert), out);
    std::ostream& log = output.empty() ? err : out;
    log << "stages: " << cert.stages.size() << ", final: " << result.final_complex.ray_count() << " rays, "
        << result.final_complex.maximal_cones().size() << " maximal cones\n";
    for (const auto& r : cert.trace) {
      log << "round " << r.round << ": max index " << r.max_index.str() << ", total index " << r.total_index.str();
      for (const auto& h : r.hosts)
        log << ", " << to_string(h.host) << " " << h.index.str() << "->" << h.child_max.str();
      log << '\n';
    }
    for (const auto& [name, value] : cert.flags) log << "flag " << name << ' ' << (value ? "ok" : "FAILED") << '\n';
    return cert.all_flags() ? 0 : 1;
  });
}

int cmd_verify(const std::string& certificate_path, const std::string& input_path, std::ostream& out,
               std::ostream& err) {
  return guarded(err, [&] {
    const auto cert = read_certificate_file(certificate_path);
    const Loaded l = load(input_path);
    const auto report = verify_certificate(cert, l.complex, l.elements);
    for (const auto& v : report.violations) out << "violation: " << v << '\n';
    if (!report.ok()) return 1;
    out << "certificate verified\n";
    return 0;
  });
}

int cmd_orbits(const std::string& path, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Loaded l = load(path);
    require_valid(l);
    const auto action = bind_action(l.complex, l.elements);
    const auto labels = ray_orbits(action, l.complex.ray_count());
    json j;
    j["group_order"] = l.elements.size();
    std::map<RayId, std::vector<RayId>> orbits;
    for (RayId id = 0; id < labels.size(); ++id) orbits[labels[id]].push_back(id);
    j["ray_orbits"] = json::array();
    for (const auto& [rep, members] : orbits) j["ray_orbits"].push_back(members);
    const auto fixed = check_fixed_cone_identity(l.complex, action);
    const auto strict = check_g_strict(l.complex, action);
    j["fixed_cone_identity"] = {{"passed", fixed.passed}, {"violations", fixed.violations}};
    j["g_strict"] = {{"passed", strict.passed}, {"violations", strict.violations}};
    if (fixed.passed && strict.passed) {
      const auto q = quotient_structure(l.complex, action);
      j["quotient"] = {{"cone_orbits", q.cone_representatives.size()},
                       {"maximal_cone_orbits", q.maximal_orbit_count()},
                       {"face_links", q.face_links.size()}};
    }
    out << j.dump(2) << '\n';
    return 0;
  });
}

int cmd_report(const std::string& path, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Loaded l = load(path);
    const Complex& c = l.complex;
    const auto validation = validate_complex(c);
    json j;
    j["rank"] = c.ambient_rank();
    j["rays"] = c.ray_count();
    j["cones"] = c.cones().size();
    j["maximal_cones"] = c.maximal_cones().size();
    j["valid"] = validation.ok();
    j["violations"] = validation.violations;
    j["content_hash"] = hex64(content_hash(c));
    if (validation.ok()) {
      j["dimension"] = c.dimension();
      j["simplicial"] = is_simplicial(c);
      j["smooth"] = is_smooth(c);
      json cones = json::array();
      for (const auto& cone : c.maximal_cones()) {
        json entry{{"rays", cone.rays}, {"dimension", c.dimension(cone)}};
        if (c.is_simplicial(cone)) entry["index"] = cone_index(c.generators(cone)).str();
        cones.push_back(entry);
      }
      j["maximal"] = cones;
      if (is_simplicial(c)) {
        j["total_index"] = total_index(c).str();
        j["max_index"] = max_index(c).str();
      }
    }
    j["group_order"] = l.elements.size();
    out << j.dump(2) << '\n';
    return validation.ok() ? 0 : 1;
  });
}

}  // namespace toroidal
